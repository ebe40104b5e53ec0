"""The named tableau maps.

Every map here is built from the piecewise-linear generator words plus the
structural operations (attach, split, shift, compose, rotate), following
one fixed construction per map:

* xi           -- evacuation: the weight-reversing generator word
* zeta         -- tableau switching: relabel, attach, block-exchange word, split
* psi          -- rectification: first component of switching with a canonical
* rsk          -- row/column correspondence via two rectifications
* phi_lr       -- rectification paired with its Littlewood-Richardson witness
* chi          -- reversal: switching conjugated with evacuation
* rho1/2/3     -- the symmetry maps LR(lam/mu, nu) -> LR(lam/nu, mu)
* gamma/tau    -- linear recording-matrix reindexings behind rho2
* octahedral   -- three switchings exchanging two-step LR factorizations
* burge        -- the column-insertion variant of rsk, via matrix flips
* hillman_grassl -- rectangle-sum fillings to reverse plane partitions

Independent brute-force references for psi, rsk and the generators live in
the oracles module.
"""

from dataclasses import dataclass

from . import partitions as pt
from .benderknuth import apply_bk_word, t_word, z_word
from .errors import (
    NegativeEntry,
    NotInImage,
    NotLittlewoodRichardson,
    ShapeMismatch,
)
from .matrices import check_matrix, col_sums, flip_cols, flip_rows, row_sums, transpose
from .tableaux import (
    Tableau,
    attach,
    canonical,
    compose,
    empty_tableau,
    is_lr,
    pad_rows,
    prepend_rows,
    recording_matrix,
    rotate180,
    shift_values,
    split_at_value,
    tableau_from_recording,
    take_rows,
    widen,
)


# ---------------------------------------------------------------------------
# evacuation


def xi(t: Tableau) -> Tableau:
    """Weight-reversing involution on skew tableaux."""
    return apply_bk_word(t, z_word(t.k))


def xi_normal(t: Tableau) -> Tableau:
    if not t.is_normal():
        raise ShapeMismatch("normal-shape evacuation needs an empty inner shape")
    return xi(t)


def evacuation_of_canonical(mu) -> Tableau:
    """Closed form for xi_normal(canonical(mu)): the recording matrix is
    constant along diagonals, with first row read off the part differences."""
    mu = pt.trim(pt.check_partition(mu, "mu"))
    ell = len(mu)
    if ell == 0:
        return empty_tableau()
    ext = mu + (0,)
    first = [ext[ell - r] - ext[ell - r + 1] for r in range(1, ell + 1)]
    counts = [
        [first[j - i] if j >= i else 0 for j in range(ell)] for i in range(ell)
    ]
    return tableau_from_recording(mu, (), counts, k=ell)


# ---------------------------------------------------------------------------
# tableau switching


def zeta(b: Tableau, a: Tableau):
    """Exchange the stacked pair (b below, a above): returns (a', b') with
    a' on sigma/mu carrying a's weight and b' on lam/sigma carrying b's."""
    n = max(b.nrows, a.nrows)
    if pt.pad(b.outer, n) != pt.pad(a.inner, n):
        raise ShapeMismatch(
            f"outer shape {pt.trim(b.outer)} of the lower tableau does not match "
            f"inner shape {pt.trim(a.inner)} of the upper"
        )
    r, s = b.k, a.k
    joined = attach(b, shift_values(a, r))
    exchanged = apply_bk_word(joined, t_word(r, s))
    low, high = split_at_value(exchanged, s)
    return low, shift_values(high, -s)


def zeta_normal(b: Tableau, a: Tableau):
    if not b.is_normal():
        raise ShapeMismatch("lower tableau must have normal shape")
    return zeta(b, a)


def zeta_lr(b: Tableau, a: Tableau):
    """Switching restricted to Littlewood-Richardson pairs."""
    if not is_lr(b):
        raise NotLittlewoodRichardson("lower tableau is not Littlewood-Richardson")
    if not is_lr(a):
        raise NotLittlewoodRichardson("upper tableau is not Littlewood-Richardson")
    return zeta(b, a)


def psi(t: Tableau) -> Tableau:
    """Rectification to normal shape, preserving the weight."""
    mu = pt.trim(t.inner)
    if not mu:
        return t
    low, _ = zeta_normal(canonical(mu), t)
    return low


# ---------------------------------------------------------------------------
# row/column correspondence


def _staircase(sums):
    k = len(sums)
    outer = tuple(sum(sums[: k - i]) for i in range(k))
    inner = outer[1:] + (0,)
    return outer, inner


def rsk(v):
    """Matrix to (insertion, recording) tableau pair.

    Each component is the rectification of an antidiagonal staircase whose
    row contents are the matrix rows (read bottom up) respectively the
    matrix columns."""
    v = check_matrix(v)
    k = len(v)
    a, b = row_sums(v), col_sums(v)
    y_outer, y_inner = _staircase(a)
    y = tableau_from_recording(y_outer, y_inner, flip_rows(v), k=k)
    x_outer, x_inner = _staircase(b)
    x = tableau_from_recording(x_outer, x_inner, flip_rows(transpose(v)), k=k)
    return psi(y), psi(x)


def burge(v):
    """Column-insertion variant of rsk, obtained through matrix flips."""
    v = check_matrix(v)
    ins, _ = rsk(flip_rows(v))
    _, rec = rsk(flip_cols(v))
    return ins, rec


# ---------------------------------------------------------------------------
# Littlewood-Robinson map and reversal


def phi_lr(t: Tableau):
    """Rectify and record the Littlewood-Richardson witness: returns
    (rectification, lr tableau on the original shape)."""
    mu = pt.trim(t.inner)
    a1, b1 = zeta_normal(canonical(mu), t)
    sigma = pt.trim(a1.outer)
    _, c1 = zeta_normal(canonical(sigma), b1)
    return a1, c1


def phi_lr_inverse(rectified: Tableau, witness: Tableau) -> Tableau:
    """Undo phi_lr by running the two switchings backwards."""
    if not is_lr(witness):
        raise NotInImage("witness component is not Littlewood-Richardson")
    sigma = pt.trim(rectified.outer)
    if pt.trim(witness.weight_partition()) != sigma:
        raise NotInImage("witness weight does not match the rectified shape")
    mu = pt.trim(witness.inner)
    _, b1 = zeta_normal(canonical(mu), witness)
    _, t = zeta_normal(rectified, b1)
    return t


def chi(t: Tableau) -> Tableau:
    """Reversal: weight-reversing involution that restricts to evacuation
    on normal shapes."""
    mu = pt.trim(t.inner)
    a1, c1 = zeta_normal(canonical(mu), t)
    _, out = zeta_normal(xi(a1), c1)
    return out


# ---------------------------------------------------------------------------
# symmetry maps


def _require_lr(t: Tableau):
    if not is_lr(t):
        raise NotLittlewoodRichardson(f"{t!r} is not a Littlewood-Richardson tableau")


def rho1(t: Tableau) -> Tableau:
    """First symmetry map: switch past a canonical tableau."""
    _require_lr(t)
    mu = pt.trim(t.inner)
    _, out = zeta_normal(canonical(mu), t)
    return out


def gamma_map(t: Tableau, context_len=None) -> Tableau:
    """Linear reindexing of the recording matrix onto shape mu with the
    reversed complementary weight.

    context_len fixes the declared length of the outer shape (trailing
    zeros shift every output value up by one slot); it defaults to the
    trimmed length."""
    _require_lr(t)
    lam = pt.trim(t.outer)
    ell = len(lam) if context_len is None else context_len
    if ell < len(lam):
        raise ShapeMismatch("context length shorter than the outer shape")
    mu = pt.trim(t.inner)
    tw = widen(t, max(t.k, ell))

    def entry(r, s):
        if r > ell or r > tw.nrows:
            return 0
        return tw.gt[r - 1][s]

    counts = [
        [entry(ell - j + i, ell - j) - entry(ell - j + i + 1, ell - j + 1) for j in range(1, ell + 1)]
        for i in range(1, ell + 1)
    ]
    return tableau_from_recording(mu, (), counts, k=ell)


def gamma_inverse(t: Tableau, lam) -> Tableau:
    """Inverse reindexing; the outer shape lam supplies the context.
    Trailing zero parts of lam count towards the context length."""
    lam = pt.check_partition(lam, "lambda")
    ell = len(lam)
    mu = pt.trim(t.outer)
    if not t.is_normal():
        raise NotInImage("expected a normal-shape tableau")
    if ell == 0:
        if mu or t.size():
            raise NotInImage("nonempty tableau for an empty outer shape")
        return empty_tableau()
    w = t.weight()
    if len(w) > ell and any(w[ell:]):
        raise NotInImage("weight is longer than the outer shape allows")
    w = pt.pad(w, ell)[:ell]
    nu = pt.vector_sub(lam, pt.reverse_vector(w))
    if not pt.is_partition(nu):
        raise NotInImage("weight does not complement the outer shape")
    tw = widen(pad_rows(t, max(0, ell - t.nrows)), max(t.k, ell))

    def entry(i, s):
        if i > ell:
            return 0
        return tw.gt[i - 1][s]

    gt = []
    for r in range(1, ell + 1):
        row = []
        for s in range(ell + 1):
            row.append(entry(r - s, ell - s) if s < r else lam[r - 1])
        gt.append(tuple(row))
    inner = tuple(row[0] for row in gt)
    try:
        out = Tableau(lam, inner, gt, ell)
    except Exception as exc:
        raise NotInImage(f"reindexed pattern is not a tableau: {exc}") from exc
    if not is_lr(out) or pt.trim(out.weight_partition()) != pt.trim(nu):
        raise NotInImage("reindexed pattern is not a Littlewood-Richardson preimage")
    if gamma_map(out, context_len=ell) != t:
        raise NotInImage("tableau is not in the image of the reindexing")
    return out


def tau_map(t: Tableau) -> Tableau:
    """Companion tableau: transpose the recording matrix above the diagonal."""
    _require_lr(t)
    lam = pt.trim(t.outer)
    ell = len(lam)
    nu = t.weight_partition()
    tw = widen(pad_rows(t, max(0, ell - t.nrows)), max(t.k, ell))
    c = recording_matrix(tw)
    counts = [[c[j - 1][i - 1] for j in range(1, ell + 1)] for i in range(1, ell + 1)]
    return tableau_from_recording(nu, (), counts, k=ell)


def tau_inverse(t: Tableau, lam) -> Tableau:
    """Inverse companion construction in the context of outer shape lam."""
    lam = pt.trim(pt.check_partition(lam, "lambda"))
    ell = len(lam)
    nu = pt.trim(t.outer)
    if not t.is_normal():
        raise NotInImage("expected a normal-shape tableau")
    if ell == 0:
        if nu or t.size():
            raise NotInImage("nonempty tableau for an empty outer shape")
        return empty_tableau()
    w = t.weight()
    if len(w) > ell and any(w[ell:]):
        raise NotInImage("weight is longer than the outer shape allows")
    mu = pt.vector_sub(lam, pt.pad(w, ell)[:ell])
    if not pt.is_partition(mu):
        raise NotInImage("weight does not complement the outer shape")
    tw = widen(pad_rows(t, max(0, ell - t.nrows)), max(t.k, ell))
    e = recording_matrix(tw)
    counts = [[e[i - 1][j - 1] for i in range(1, len(nu) + 1)] for j in range(1, ell + 1)]
    try:
        out = tableau_from_recording(lam, mu, counts, k=len(nu))
    except Exception as exc:
        raise NotInImage(f"transposed counts are not a tableau: {exc}") from exc
    if not is_lr(out):
        raise NotInImage("transposed counts are not Littlewood-Richardson")
    if tau_map(out) != t:
        raise NotInImage("tableau is not in the image of the companion map")
    return out


def rho2(t: Tableau) -> Tableau:
    """Second symmetry map: reindex, evacuate, undo the companion map."""
    _require_lr(t)
    lam = pt.trim(t.outer)
    return tau_inverse(xi_normal(gamma_map(t)), lam)


def rho2_prime(t: Tableau) -> Tableau:
    """Inverse of rho2: companion map, evacuate, undo the reindexing."""
    _require_lr(t)
    lam = pt.trim(t.outer)
    return gamma_inverse(xi_normal(tau_map(t)), lam)


# ---------------------------------------------------------------------------
# third symmetry map (chain removal)


def _rho3_chains(t: Tableau):
    """Run the chain-removal procedure; yields (start_row, length) per
    recorded chain, 1-based rows."""
    lam = pt.trim(t.outer)
    ell = len(lam)
    inner = pt.pad(t.inner, ell)
    rows = t.rows()
    # working grid: inner cells hold 0
    grid = [[0] * inner[i] + list(rows[i]) for i in range(ell)]
    recorded = []
    for i in range(ell, 0, -1):
        used = set()
        for col in range(lam[i - 1], 0, -1):
            cur_val = grid[i - 1][col - 1]
            cur_row = i
            length = 1
            while cur_row > 1:
                above = grid[cur_row - 2]
                best_col = -1
                best = -1
                for c2 in range(len(above)):
                    if (cur_row - 1, c2 + 1) in used:
                        continue
                    v = above[c2]
                    if v < cur_val and v >= best:
                        best = v
                        best_col = c2
                if best_col < 0:
                    break
                used.add((cur_row - 1, best_col + 1))
                # a value never climbs above its own row index
                if cur_val <= cur_row - 1:
                    above[best_col] = cur_val
                cur_val = best
                cur_row -= 1
                length += 1
            if cur_val == 0:
                recorded.append((i, length))
    return recorded


def rho3(t: Tableau) -> Tableau:
    """Third symmetry map: zeros climb out through value chains; chains are
    tallied by starting row and length."""
    _require_lr(t)
    lam = pt.trim(t.outer)
    ell = len(lam)
    nu = t.weight_partition()
    counts = [[0] * ell for _ in range(ell)]
    for start, length in _rho3_chains(t):
        counts[start - 1][start - length] += 1
    try:
        return tableau_from_recording(lam, nu, counts, k=ell)
    except Exception as exc:
        raise NotLittlewoodRichardson(f"chain tally is not a tableau: {exc}") from exc


# ---------------------------------------------------------------------------
# octahedral map


def octahedral(a: Tableau, b: Tableau):
    """Exchange the middle shape of a two-step LR factorization."""
    _require_lr(a)
    _require_lr(b)
    n = max(a.nrows, b.nrows)
    if pt.pad(a.outer, n) != pt.pad(b.inner, n):
        raise ShapeMismatch("outer shape of the first input must match inner of the second")
    lam = pt.trim(a.inner)
    _, c1 = zeta_normal(canonical(lam), a)
    b1, c2 = zeta(c1, b)
    piv = pt.trim(b1.outer)
    _, d = zeta_normal(canonical(piv), c2)
    return b1, d


# ---------------------------------------------------------------------------
# membership in the composition-defined sets


def lr_membership(b: Tableau, mu, nu, lam, starred: bool = False) -> bool:
    """Does b belong to the composition-defined set for (mu, nu, lam)?

    Plain: b has shape mu, weight lam - nu, and b placed under a canonical
    tableau of nu reads dominantly.  Starred: the rotated b is used and the
    weight requirement reverses."""
    mu = pt.trim(pt.check_partition(mu, "mu"))
    nu = pt.trim(pt.check_partition(nu, "nu"))
    lam = pt.trim(pt.check_partition(lam, "lambda"))
    if sum(lam) != sum(mu) + sum(nu):
        raise ShapeMismatch("sizes must satisfy |lambda| = |mu| + |nu|")
    if pt.trim(b.outer) != mu or not b.is_normal():
        raise ShapeMismatch("membership candidate must be a normal tableau on mu")
    if not pt.contains(lam, nu):
        return False
    target = pt.vector_sub(pt.pad(lam, max(len(lam), len(nu), 1)), nu)
    want = pt.reverse_vector(target) if starred else target
    n = max(len(want), b.k)
    if pt.pad(b.weight(), n) != pt.pad(want, n):
        return False
    block = rotate180(b) if starred else b
    comp = compose(block, canonical(nu))
    return is_lr(comp)


# ---------------------------------------------------------------------------
# rectangle-sum fillings and reverse plane partitions


@dataclass(frozen=True)
class PlaneFunction:
    """Nonnegative integer function on a Young diagram."""

    shape: tuple
    values: tuple

    def __post_init__(self):
        object.__setattr__(self, "shape", pt.trim(pt.check_partition(self.shape, "shape")))
        vals = tuple(tuple(row) for row in self.values)
        if len(vals) != len(self.shape):
            raise ShapeMismatch("one value row per shape row required")
        for i, row in enumerate(vals):
            if len(row) != self.shape[i]:
                raise ShapeMismatch(f"value row {i + 1} does not match the shape")
            for x in row:
                if not isinstance(x, int) or x < 0:
                    raise NegativeEntry(f"value {x!r} is not a nonnegative integer")
        object.__setattr__(self, "values", vals)

    def diag_range(self):
        ell = len(self.shape)
        m = self.shape[0] if self.shape else 0
        return range(1 - ell, m)

    def alpha(self, c: int) -> int:
        """Sum along the diagonal j - i = c."""
        total = 0
        for i, row in enumerate(self.values):
            j = i + c
            if 0 <= j < len(row):
                total += row[j]
        return total

    def beta(self, c: int) -> int:
        """Sum over the rectangle spanned by the last diagram square on the
        diagonal j - i = c."""
        ic = jc = None
        for i in range(len(self.shape), 0, -1):
            j = i + c
            if 1 <= j <= self.shape[i - 1]:
                ic, jc = i, j
                break
        if ic is None:
            return 0
        return sum(
            self.values[i][j]
            for i in range(ic)
            for j in range(min(jc, len(self.values[i])))
        )

    def alpha_profile(self) -> tuple:
        return tuple(self.alpha(c) for c in self.diag_range())

    def beta_profile(self) -> tuple:
        return tuple(self.beta(c) for c in self.diag_range())

    def is_reverse_plane_partition(self) -> bool:
        v, sh = self.values, self.shape
        for i, row in enumerate(v):
            for j in range(len(row)):
                if j + 1 < len(row) and row[j] > row[j + 1]:
                    return False
                if i + 1 < len(v) and j < sh[i + 1] and row[j] > v[i + 1][j]:
                    return False
        return True


def _gt_chain(t: Tableau, k: int):
    """chain[s][i] = i-th part of the shape of entries <= s, padded to k rows."""
    tw = widen(pad_rows(t, max(0, k - t.nrows)), k)
    return [[tw.gt[i][s] for i in range(k)] for s in range(k + 1)]


def pattern_graft(ins: Tableau, rec: Tableau) -> PlaneFunction:
    """Graft a same-shape tableau pair into a reverse plane partition on the
    k x k square, k being the declared value bound.

    Entry (i, j) weakly above the main diagonal is the matching slice of the
    recording pattern, strictly below it of the insertion pattern; the two
    agree along the diagonal because the components share one shape."""
    if pt.trim(ins.outer) != pt.trim(rec.outer) or ins.k != rec.k:
        raise ShapeMismatch("graft needs equal shapes and value bounds")
    k = ins.k
    lo_chain = _gt_chain(ins, k)
    up_chain = _gt_chain(rec, k)
    rows = []
    for i in range(1, k + 1):
        row = []
        for j in range(1, k + 1):
            if j >= i:
                c = j - i
                row.append(up_chain[k - c][k - c - i])
            else:
                e = i - j
                row.append(lo_chain[k - e][k - e - j])
        rows.append(tuple(row))
    return PlaneFunction((k,) * k, tuple(rows))


def _conjugate(shape):
    return tuple(
        sum(1 for p in shape if p > c) for c in range(shape[0] if shape else 0)
    )


def _extract_path(values, shape):
    """Remove one zigzag from a nonzero reverse plane partition in place;
    returns the recorded cell (end row, start column), 1-based."""
    conj = _conjugate(shape)
    b = next(j for j in range(len(conj)) if any(values[i][j] for i in range(conj[j])))
    i, j = conj[b] - 1, b
    path = []
    while True:
        path.append((i, j))
        if i > 0 and values[i - 1][j] == values[i][j]:
            i -= 1
        elif j + 1 < shape[i]:
            j += 1
        else:
            break
    for r, c in path:
        values[r][c] -= 1
    return i + 1, path[0][1] + 1


def _insert_path(values, shape, end_row, start_col):
    """Inverse of _extract_path: add one zigzag for the hook at
    (end_row, start_col), 1-based."""
    i, j = end_row - 1, shape[end_row - 1] - 1
    conj = _conjugate(shape)
    while True:
        south = i + 1 < conj[j] and values[i + 1][j] == values[i][j]
        values[i][j] += 1
        if south:
            i += 1
        elif j > start_col - 1:
            j -= 1
        else:
            break


def hillman_grassl(f: PlaneFunction) -> PlaneFunction:
    """Send a rectangle-sum filling to the reverse plane partition with the
    matching diagonal sums.

    Each cell (i, j) of the input counts copies of the hook based there; the
    hooks are played back as zigzag additions, rightmost hook column first
    and shorter legs before longer ones within a column.  Every zigzag raises
    the diagonal sums exactly on the band its hook spans, which is also the
    band of rectangle sums the input cell feeds."""
    sh = f.shape
    if not sh:
        return f
    hooks = []
    for i in range(len(sh)):
        for j in range(sh[i]):
            hooks.extend([(i + 1, j + 1)] * f.values[i][j])
    # insertion order: reverse of extraction order
    hooks.sort(key=lambda cell: (-cell[1], cell[0]))
    values = [[0] * r for r in sh]
    for end_row, start_col in hooks:
        _insert_path(values, sh, end_row, start_col)
    return PlaneFunction(sh, tuple(tuple(r) for r in values))


def hillman_grassl_inverse(g: PlaneFunction) -> PlaneFunction:
    """Strip zigzags from a reverse plane partition, tallying one hook per
    removal."""
    if not g.is_reverse_plane_partition():
        raise NotInImage("input is not a reverse plane partition")
    sh = g.shape
    values = [list(r) for r in g.values]
    counts = [[0] * r for r in sh]
    while any(any(row) for row in values):
        i, j = _extract_path(values, sh)
        counts[i - 1][j - 1] += 1
    return PlaneFunction(sh, tuple(tuple(r) for r in counts))
