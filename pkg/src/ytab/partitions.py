"""Integer partitions as plain tuples.

A partition is a weakly decreasing tuple of nonnegative integers.  Trailing
zeros are permitted everywhere and are semantically neutral: (2, 1) and
(2, 1, 0) name the same partition.  `trim` produces the canonical form used
for equality; operations otherwise preserve whatever padding they are given.
"""

from .errors import ShapeMismatch


def is_partition(parts) -> bool:
    prev = None
    for p in parts:
        if not isinstance(p, int) or p < 0:
            return False
        if prev is not None and p > prev:
            return False
        prev = p
    return True


def check_partition(parts, name="partition"):
    if not is_partition(parts):
        raise ShapeMismatch(f"{name} {tuple(parts)} is not weakly decreasing and nonnegative")
    return tuple(parts)


def trim(parts) -> tuple:
    """Drop trailing zero parts."""
    parts = tuple(parts)
    n = len(parts)
    while n > 0 and parts[n - 1] == 0:
        n -= 1
    return parts[:n]


def pad(parts, length) -> tuple:
    parts = tuple(parts)
    if len(parts) >= length:
        return parts
    return parts + (0,) * (length - len(parts))


def size(parts) -> int:
    return sum(parts)


def contains(outer, inner) -> bool:
    """True when inner fits inside outer row by row."""
    n = max(len(outer), len(inner))
    outer, inner = pad(outer, n), pad(inner, n)
    return all(m <= l for m, l in zip(inner, outer))


def check_skew(outer, inner):
    """Validate an (outer, inner) pair, returning both padded to one length."""
    outer = check_partition(outer, "outer shape")
    inner = check_partition(inner, "inner shape")
    n = max(len(outer), len(inner))
    outer, inner = pad(outer, n), pad(inner, n)
    if not all(m <= l for m, l in zip(inner, outer)):
        raise ShapeMismatch(f"inner shape {trim(inner)} not contained in outer shape {trim(outer)}")
    return outer, inner


def vector_add(a, b) -> tuple:
    n = max(len(a), len(b))
    a, b = pad(a, n), pad(b, n)
    return tuple(x + y for x, y in zip(a, b))


def vector_sub(a, b) -> tuple:
    """Componentwise a - b; entries may go negative (callers validate)."""
    n = max(len(a), len(b))
    a, b = pad(a, n), pad(b, n)
    return tuple(x - y for x, y in zip(a, b))


def reverse_vector(a) -> tuple:
    """The star operation: reverse the component order."""
    return tuple(reversed(tuple(a)))


def dominates_prefixwise(weight) -> bool:
    """True when m_1 >= m_2 >= ... for the given multiplicity vector."""
    w = tuple(weight)
    return all(w[i] >= w[i + 1] for i in range(len(w) - 1))
