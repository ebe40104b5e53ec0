"""Skew semistandard Young tableaux in the Gelfand-Tsetlin encoding.

A tableau with outer shape lambda, inner shape mu and values bounded by k is
stored as the integer matrix gt with rows 1..ell and columns 0..k, where

    gt[i][0] = mu_i   and   gt[i][j] = mu_i + #{entries <= j in row i}.

Row i of the filling occupies columns mu_i+1 .. lambda_i of the diagram.
The matrix determines the filling: row i contains gt[i][j] - gt[i][j-1]
copies of the value j.  All values are immutable; operations return new
tableaux and never mutate their arguments.
"""

from . import partitions as pt
from .errors import (
    ColumnOrderViolation,
    NotATableau,
    OffsetTooSmall,
    OrderViolation,
    RowOrderViolation,
    ShapeMismatch,
    SkewInputNotSupported,
    UnderflowBelowOne,
)


class Tableau:
    """Immutable skew semistandard tableau.

    Fields: outer and inner shapes (padded to a common length), the GT
    matrix, and the declared value bound k.  Trailing zero rows and unused
    trailing values are kept as given; equality and hashing normalize them
    away.
    """

    __slots__ = ("outer", "inner", "gt", "k")

    def __init__(self, outer, inner, gt, k, validate=True):
        object.__setattr__(self, "outer", tuple(outer))
        object.__setattr__(self, "inner", tuple(inner))
        object.__setattr__(self, "gt", tuple(tuple(row) for row in gt))
        object.__setattr__(self, "k", int(k))
        if validate:
            self._validate()

    def __setattr__(self, name, value):
        raise AttributeError("Tableau is immutable")

    def _validate(self):
        outer, inner, gt, k = self.outer, self.inner, self.gt, self.k
        if k < 0:
            raise NotATableau("value bound must be nonnegative")
        if len(inner) != len(outer) or len(gt) != len(outer):
            raise NotATableau("outer, inner and gt row counts disagree")
        pt.check_partition(outer, "outer shape")
        pt.check_partition(inner, "inner shape")
        for i, row in enumerate(gt):
            if len(row) != k + 1:
                raise NotATableau(f"gt row {i + 1} has {len(row)} columns, expected {k + 1}")
            if row[0] != inner[i]:
                raise NotATableau(f"gt row {i + 1} does not start at the inner shape")
            if row[k] != outer[i]:
                raise NotATableau(f"gt row {i + 1} does not end at the outer shape")
            for j in range(1, k + 1):
                if row[j - 1] > row[j]:
                    raise NotATableau(f"gt row {i + 1} decreases at column {j}")
        # strict column increase <=> gt[i][j] <= gt[i-1][j-1]
        for i in range(1, len(gt)):
            for j in range(1, k + 1):
                if gt[i][j] > gt[i - 1][j - 1]:
                    raise NotATableau(
                        f"column order violated between rows {i} and {i + 1} at value {j}"
                    )

    # -- derived data ---------------------------------------------------

    @property
    def nrows(self) -> int:
        return len(self.outer)

    def size(self) -> int:
        return sum(self.outer) - sum(self.inner)

    def is_normal(self) -> bool:
        return all(m == 0 for m in self.inner)

    def is_empty(self) -> bool:
        return self.size() == 0

    def weight(self) -> tuple:
        """Multiplicity vector of the values 1..k."""
        w = [0] * self.k
        for row in self.gt:
            for j in range(1, self.k + 1):
                w[j - 1] += row[j] - row[j - 1]
        return tuple(w)

    def weight_partition(self) -> tuple:
        return pt.trim(self.weight())

    def rows(self) -> list:
        """Filling as a list of rows, filled cells only."""
        out = []
        for row in self.gt:
            cells = []
            for j in range(1, self.k + 1):
                cells.extend([j] * (row[j] - row[j - 1]))
            out.append(cells)
        return out

    def max_entry(self) -> int:
        m = 0
        for row in self.gt:
            for j in range(self.k, 0, -1):
                if row[j] > row[j - 1]:
                    m = max(m, j)
                    break
        return m

    def _key(self):
        outer = pt.trim(self.outer)
        inner = pt.pad(self.inner, len(outer))[: len(outer)]
        keff = self.max_entry()
        gt = tuple(row[: keff + 1] for row in self.gt[: len(outer)])
        return outer, inner, gt

    def __eq__(self, other):
        if not isinstance(other, Tableau):
            return NotImplemented
        return self._key() == other._key()

    def __hash__(self):
        return hash(self._key())

    def __repr__(self):
        body = ", ".join(
            "[" + ",".join(["."] * self.inner[i] + [str(v) for v in row]) + "]"
            for i, row in enumerate(self.rows())
        )
        return f"Tableau({body}; {pt.trim(self.outer)}/{pt.trim(self.inner)})"


def empty_tableau(shape=(), k=0) -> Tableau:
    """The empty tableau on shape/shape."""
    shape = pt.check_partition(shape)
    gt = tuple((m,) * (k + 1) for m in shape)
    return Tableau(shape, shape, gt, k, validate=False)


def tableau_from_rows(outer, inner, rows, max_value=None) -> Tableau:
    """Build a tableau from its filling, validating semistandardness.

    `rows` lists the filled cells of each row.  Raises ShapeMismatch /
    RowOrderViolation / ColumnOrderViolation naming the offending cell.
    """
    outer, inner = pt.check_skew(outer, inner)
    rows = [list(r) for r in rows]
    while len(rows) < len(outer):
        rows.append([])
    if len(rows) > len(outer):
        if any(rows[len(outer):]):
            raise ShapeMismatch(f"{len(rows)} rows given for a {len(outer)}-row shape")
        rows = rows[: len(outer)]
    grid = {}
    maxv = 0
    for i in range(len(outer)):
        if len(rows[i]) != outer[i] - inner[i]:
            raise ShapeMismatch(
                f"row {i + 1} has {len(rows[i])} cells, expected {outer[i] - inner[i]}"
            )
        for t, v in enumerate(rows[i]):
            j = inner[i] + 1 + t
            if not isinstance(v, int) or v < 1:
                raise ShapeMismatch(f"cell ({i + 1},{j}) holds {v!r}, expected a positive integer")
            grid[(i + 1, j)] = v
            maxv = max(maxv, v)
            if t > 0 and rows[i][t - 1] > v:
                raise RowOrderViolation(f"row decreases at cell ({i + 1},{j})")
            above = grid.get((i, j))
            if above is not None and above >= v:
                raise ColumnOrderViolation(f"column does not increase at cell ({i + 1},{j})")
    k = maxv if max_value is None else max_value
    if k < maxv:
        raise ShapeMismatch(f"max_value {k} below largest entry {maxv}")
    gt = []
    for i in range(len(outer)):
        counts = [0] * (k + 1)
        for v in rows[i]:
            counts[v] += 1
        acc = inner[i]
        row = [acc]
        for j in range(1, k + 1):
            acc += counts[j]
            row.append(acc)
        gt.append(tuple(row))
    return Tableau(outer, inner, gt, k, validate=False)


def word(t: Tableau) -> tuple:
    """Row reading word: right to left along each row, top row first."""
    out = []
    for row in t.rows():
        out.extend(reversed(row))
    return tuple(out)


def is_lr(t: Tableau) -> bool:
    """True when every prefix of word(t) has weakly decreasing letter counts."""
    counts = [0] * (t.k + 1)
    for x in word(t):
        counts[x] += 1
        if x > 1 and counts[x] > counts[x - 1]:
            return False
    return True


def canonical(lam) -> Tableau:
    """Can(lam): row i filled with the value i."""
    lam = pt.trim(pt.check_partition(lam, "lambda"))
    k = len(lam)
    gt = tuple(
        tuple(lam[i] if j >= i + 1 else 0 for j in range(k + 1)) for i in range(k)
    )
    return Tableau(lam, (0,) * k, gt, k, validate=False)


def widen(t: Tableau, k: int) -> Tableau:
    """Redeclare the value bound as k >= t.k (extends the weight with zeros)."""
    if k < t.k:
        raise ShapeMismatch(f"cannot narrow value bound from {t.k} to {k}")
    if k == t.k:
        return t
    gt = tuple(row + (row[t.k],) * (k - t.k) for row in t.gt)
    return Tableau(t.outer, t.inner, gt, k, validate=False)


def pad_rows(t: Tableau, n: int) -> Tableau:
    """Append n trailing empty zero rows."""
    if n <= 0:
        return t
    zrow = (0,) * (t.k + 1)
    return Tableau(
        t.outer + (0,) * n, t.inner + (0,) * n, t.gt + (zrow,) * n, t.k, validate=False
    )


def prepend_rows(t: Tableau, values) -> Tableau:
    """Prepend empty framing rows whose outer = inner = the given values."""
    values = tuple(values)
    if not values:
        return t
    if not pt.is_partition(values):
        raise ShapeMismatch(f"framing rows {values} are not weakly decreasing")
    if t.outer and values[-1] < t.outer[0]:
        raise ShapeMismatch("framing rows must cover the first outer part")
    rows = tuple((v,) * (t.k + 1) for v in values)
    return Tableau(values + t.outer, values + t.inner, rows + t.gt, t.k, validate=False)


def take_rows(t: Tableau, start: int, stop: int, unshift: int = 0) -> Tableau:
    """Extract rows start..stop-1 (0-based) as a tableau, optionally shifting
    all column boundaries left by `unshift`."""
    outer = t.outer[start:stop]
    inner = t.inner[start:stop]
    gt = t.gt[start:stop]
    if unshift:
        if any(m < unshift for m in inner):
            raise ShapeMismatch("unshift exceeds the inner shape of the extracted block")
        outer = tuple(x - unshift for x in outer)
        inner = tuple(x - unshift for x in inner)
        gt = tuple(tuple(x - unshift for x in row) for row in gt)
    return Tableau(outer, inner, gt, t.k)


def compose(t1: Tableau, t2: Tableau, a=None, b: int = 0, gap=None) -> Tableau:
    """Place t2 above and to the right of t1.

    t2 is shifted a columns to the right (default: the first outer part of
    t1) and b empty rows are inserted between the two blocks.  Inserted rows
    have outer = inner = gap (default: the first outer part of t1).  Every
    row of both operands, including trailing empty ones, survives into the
    result, so callers control frame heights by padding beforehand.
    """
    nu1 = t1.outer[0] if t1.outer else 0
    if a is None:
        a = nu1
    if gap is None:
        gap = nu1
    if b < 0:
        raise OffsetTooSmall("negative row gap")
    k = max(t1.k, t2.k)
    lo, hi = widen(t1, k), widen(t2, k)
    outer = tuple(x + a for x in hi.outer) + (gap,) * b + lo.outer
    inner = tuple(x + a for x in hi.inner) + (gap,) * b + lo.inner
    if not pt.is_partition(outer) or not pt.is_partition(inner):
        raise OffsetTooSmall(
            f"offset {a} (gap {gap}) makes the composed shape invalid"
        )
    gt = (
        tuple(tuple(x + a for x in row) for row in hi.gt)
        + ((gap,) * (k + 1),) * b
        + lo.gt
    )
    return Tableau(outer, inner, gt, k)


def split_composition(t: Tableau, top_rows: int, a: int, b: int = 0):
    """Inverse of compose: return (bottom, top) blocks, the top unshifted."""
    top = take_rows(t, 0, top_rows, unshift=a)
    bottom = take_rows(t, top_rows + b, t.nrows)
    return bottom, top


def attach(t1: Tableau, t2: Tableau) -> Tableau:
    """Union of t1 (inner block, on mu/nu) and t2 (outer block, on lambda/mu).

    The union filling is revalidated cell by cell, so mixed value ranges are
    fine as long as rows and columns stay monotone across the seam.
    """
    n = max(t1.nrows, t2.nrows)
    out1 = pt.pad(t1.outer, n)
    in2 = pt.pad(t2.inner, n)
    if out1 != in2:
        raise ShapeMismatch(
            f"inner shape of the second block {pt.trim(t2.inner)} does not match "
            f"outer shape of the first {pt.trim(t1.outer)}"
        )
    rows1 = t1.rows() + [[] for _ in range(n - t1.nrows)]
    rows2 = t2.rows() + [[] for _ in range(n - t2.nrows)]
    rows = [rows1[i] + rows2[i] for i in range(n)]
    outer = pt.pad(t2.outer, n)
    inner = pt.pad(t1.inner, n)
    try:
        return tableau_from_rows(outer, inner, rows, max_value=max(t1.k, t2.k))
    except (RowOrderViolation, ColumnOrderViolation) as exc:
        raise OrderViolation(f"attached filling is not a tableau: {exc}") from exc


def split_at_value(t: Tableau, r: int):
    """Partition by value: (cells <= r, cells > r); the second part keeps
    its original labels.  attach(low, high) == t for every r."""
    if r < 0:
        r = 0
    if r > t.k:
        r = t.k
    low_gt = tuple(row[: r + 1] for row in t.gt)
    low = Tableau(tuple(row[r] for row in t.gt), t.inner, low_gt, r, validate=False)
    high_gt = tuple(tuple(row[max(j, r)] for j in range(t.k + 1)) for row in t.gt)
    high = Tableau(t.outer, tuple(row[r] for row in t.gt), high_gt, t.k, validate=False)
    return low, high


def shift_values(t: Tableau, d: int) -> Tableau:
    """Add d to every entry (d may be negative; entries must stay >= 1)."""
    if d == 0:
        return t
    if d < 0:
        if -d > t.k:
            if t.size() == 0:
                return Tableau(t.outer, t.inner, tuple((r[0],) for r in t.gt), 0, validate=False)
            raise UnderflowBelowOne(f"shifting by {d} exceeds the value bound {t.k}")
        if any(row[-d] != row[0] for row in t.gt):
            raise UnderflowBelowOne(f"shifting by {d} would push entries below 1")
        gt = tuple(row[-d:] for row in t.gt)
        return Tableau(t.outer, t.inner, gt, t.k + d, validate=False)
    gt = tuple((row[0],) * d + row for row in t.gt)
    return Tableau(t.outer, t.inner, gt, t.k + d, validate=False)


def recording_matrix(t: Tableau) -> tuple:
    """The nrows x k matrix whose (i,j) entry counts the j's in row i."""
    return tuple(
        tuple(row[j] - row[j - 1] for j in range(1, t.k + 1)) for row in t.gt
    )


def tableau_from_recording(outer, inner, counts, k=None) -> Tableau:
    """Rebuild a tableau from inner shape and per-row value counts."""
    outer, inner = pt.check_skew(outer, inner)
    counts = [list(r) for r in counts]
    if k is None:
        k = max((len(r) for r in counts), default=0)
    while len(counts) < len(outer):
        counts.append([])
    if len(counts) > len(outer) and any(any(r) for r in counts[len(outer):]):
        raise NotATableau("more recording rows than shape rows")
    gt = []
    for i in range(len(outer)):
        row = counts[i] + [0] * (k - len(counts[i]))
        if any(c < 0 for c in row):
            raise NotATableau(f"negative count in recording row {i + 1}")
        acc = inner[i]
        out = [acc]
        for c in row[:k]:
            acc += c
            out.append(acc)
        if acc != outer[i]:
            raise NotATableau(f"recording row {i + 1} does not fill the shape row")
        gt.append(tuple(out))
    return Tableau(outer, inner, gt, k)


def rotate180(t: Tableau) -> Tableau:
    """Rotate a normal-shape tableau inside its bounding rectangle.

    The result lives on the complementary skew shape and its weight is the
    reversal of the input weight.
    """
    if not t.is_normal():
        raise SkewInputNotSupported("rotation is defined for normal shapes only")
    return rotate180_skew(t)


def rotate180_skew(t: Tableau) -> Tableau:
    """180-degree rotation of an arbitrary skew tableau (internal helper;
    the public surface restricts to normal shapes)."""
    outer = pt.trim(t.outer)
    ell = len(outer)
    if ell == 0:
        return empty_tableau((), t.k)
    r = outer[0]
    inner = pt.pad(t.inner, ell)
    c = recording_matrix(t)
    new_outer = tuple(r - inner[ell - 1 - i] for i in range(ell))
    new_inner = tuple(r - outer[ell - 1 - i] for i in range(ell))
    new_counts = [
        [c[ell - 1 - i][t.k - 1 - j] for j in range(t.k)] for i in range(ell)
    ]
    return tableau_from_recording(new_outer, new_inner, new_counts, k=t.k)
