"""Square nonnegative integer matrices and their flips.

Matrices are tuples of tuples.  The four reindexings used by the
correspondences: transpose, vertical flip (row order reversed), horizontal
flip (column order reversed), and the 180-degree rotation.
"""

from .errors import NegativeEntry, NotSquare


def check_matrix(v) -> tuple:
    """Validate a square matrix of nonnegative integers."""
    v = tuple(tuple(row) for row in v)
    k = len(v)
    for row in v:
        if len(row) != k:
            raise NotSquare(f"matrix has {k} rows but a row of length {len(row)}")
        for x in row:
            if not isinstance(x, int) or x < 0:
                raise NegativeEntry(f"matrix entry {x!r} is not a nonnegative integer")
    return v


def transpose(v) -> tuple:
    k = len(v)
    return tuple(tuple(v[i][j] for i in range(k)) for j in range(k))


def flip_rows(v) -> tuple:
    return tuple(reversed([tuple(r) for r in v]))


def flip_cols(v) -> tuple:
    return tuple(tuple(reversed(r)) for r in v)


def rotate_matrix(v) -> tuple:
    return flip_rows(flip_cols(v))


def row_sums(v) -> tuple:
    return tuple(sum(r) for r in v)


def col_sums(v) -> tuple:
    k = len(v)
    return tuple(sum(v[i][j] for i in range(k)) for j in range(k))


def in_transport_class(v, a, b) -> bool:
    """Membership test: row sums equal a and column sums equal b."""
    return row_sums(v) == tuple(a) and col_sums(v) == tuple(b)
