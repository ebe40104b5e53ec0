"""Brute-force reference implementations and exhaustive enumerators.

Everything here works at the filling level (grids of cell values) or by
direct backtracking, independently of the GT-based fast maps, so these
functions can referee them.  This module never imports benderknuth or
bijections; the comparison happens in the verification harnesses.
"""

from . import partitions as pt
from .errors import NotInImage
from .matrices import check_matrix
from .tableaux import Tableau, tableau_from_rows


# ---------------------------------------------------------------------------
# naive Bender-Knuth at the filling level


def naive_bk(t: Tableau, r: int) -> Tableau:
    """Toggle r/r+1 multiplicities row by row: entries vertically paired
    with the other value are fixed, the free block of a r's followed by
    b (r+1)'s becomes b r's followed by a (r+1)'s."""
    rows = t.rows()
    inner = pt.pad(t.inner, t.nrows)
    grid = {}
    for i, row in enumerate(rows):
        for off, v in enumerate(row):
            grid[(i, inner[i] + off)] = v
    new_rows = []
    for i, row in enumerate(rows):
        fixed = set()
        for off, v in enumerate(row):
            j = inner[i] + off
            if v == r and grid.get((i + 1, j)) == r + 1:
                fixed.add(off)
            if v == r + 1 and grid.get((i - 1, j)) == r:
                fixed.add(off)
        free = [off for off, v in enumerate(row) if v in (r, r + 1) and off not in fixed]
        a = sum(1 for off in free if row[off] == r)
        b = len(free) - a
        new_row = list(row)
        for pos, off in enumerate(free):
            new_row[off] = r if pos < b else r + 1
        new_rows.append(new_row)
    return tableau_from_rows(t.outer, t.inner, new_rows, max_value=t.k)


# ---------------------------------------------------------------------------
# naive jeu de taquin by square moves


def _grid_of(t: Tableau):
    rows = t.rows()
    inner = list(pt.pad(t.inner, t.nrows))
    outer = list(pt.pad(t.outer, t.nrows))
    grid = {}
    for i, row in enumerate(rows):
        for off, v in enumerate(row):
            grid[(i, inner[i] + off)] = v
    return grid, inner, outer


def naive_jdt(t: Tableau, corner_order: str = "rowmajor") -> Tableau:
    """Rectify by repeated square moves from inner corners.

    corner_order picks which inner corner starts each slide ("rowmajor" or
    "last"); the output is the same for every choice, which the
    verification suite checks rather than assumes.
    """
    grid, inner, outer = _grid_of(t)
    nrows = len(outer)
    while True:
        corners = [
            i
            for i in range(nrows)
            if inner[i] > 0 and inner[i] > (inner[i + 1] if i + 1 < nrows else 0)
        ]
        if not corners:
            break
        i = corners[0] if corner_order == "rowmajor" else corners[-1]
        if corner_order not in ("rowmajor", "last"):
            raise ValueError(f"unknown corner order {corner_order!r}")
        j = inner[i] - 1
        inner[i] -= 1
        while True:
            right = grid.get((i, j + 1))
            below = grid.get((i + 1, j))
            if right is None and below is None:
                break
            if right is None or (below is not None and below <= right):
                grid[(i, j)] = below
                del grid[(i + 1, j)]
                i += 1
            else:
                grid[(i, j)] = right
                del grid[(i, j + 1)]
                j += 1
        outer[i] -= 1
    rows = [[grid[(i, j)] for j in range(outer[i])] for i in range(nrows)]
    return tableau_from_rows(tuple(outer), (0,) * nrows, rows, max_value=t.k)


# ---------------------------------------------------------------------------
# naive RSK by row insertion


def _biword(v):
    pairs = []
    for i, row in enumerate(v):
        for j, count in enumerate(row):
            pairs.extend([(i + 1, j + 1)] * count)
    pairs.sort()
    return pairs


def _row_insert(rows_p, rows_q, x, record):
    """Schensted row insertion of x into rows_p, recording in rows_q."""
    i = 0
    while True:
        if i == len(rows_p):
            rows_p.append([x])
            rows_q.append([record])
            return
        row = rows_p[i]
        # leftmost entry strictly greater than x
        lo, hi = 0, len(row)
        while lo < hi:
            mid = (lo + hi) // 2
            if row[mid] <= x:
                lo = mid + 1
            else:
                hi = mid
        if lo == len(row):
            row.append(x)
            rows_q[i].append(record)
            return
        row[lo], x = x, row[lo]
        i += 1


def naive_rsk(v):
    """Insert the biword of v in lexicographic order; returns the
    (insertion, recording) pair."""
    v = check_matrix(v)
    k = len(v)
    rows_p, rows_q = [], []
    for i, j in _biword(v):
        _row_insert(rows_p, rows_q, j, i)
    shape = tuple(len(r) for r in rows_p)
    b = tableau_from_rows(shape, (), rows_p, max_value=k)
    a = tableau_from_rows(shape, (), rows_q, max_value=k)
    return b, a


def rsk_inverse(b: Tableau, a: Tableau):
    """Invert row-insertion RSK: recover the matrix with naive_rsk(v) == (b, a)."""
    if pt.trim(b.outer) != pt.trim(a.outer) or not (b.is_normal() and a.is_normal()):
        raise NotInImage("components must be normal tableaux of one shape")
    k = max(b.k, a.k)
    rows_p = [list(r) for r in b.rows()]
    rows_q = [list(r) for r in a.rows()]
    pairs = []
    while any(rows_p):
        # cells recording the maximal value form a horizontal strip whose
        # rightmost (= last created) cell sits in the topmost such row
        best = None
        for i, row in enumerate(rows_q):
            if row and (best is None or row[-1] > rows_q[best][-1]):
                best = i
        record = rows_q[best].pop()
        x = rows_p[best].pop()
        for i in range(best - 1, -1, -1):
            row = rows_p[i]
            # rightmost entry strictly smaller than x
            lo, hi = 0, len(row)
            while lo < hi:
                mid = (lo + hi) // 2
                if row[mid] < x:
                    lo = mid + 1
                else:
                    hi = mid
            if lo == 0:
                raise NotInImage("reverse insertion fell off a row")
            row[lo - 1], x = x, row[lo - 1]
        pairs.append((record, x))
        while rows_p and rows_p[-1] == []:
            rows_p.pop()
            rows_q.pop()
    mat = [[0] * k for _ in range(k)]
    for i, j in pairs:
        mat[i - 1][j - 1] += 1
    out = tuple(tuple(r) for r in mat)
    if naive_rsk(out) != (b, a):
        raise NotInImage("pair is not in the image of the correspondence")
    return out


# ---------------------------------------------------------------------------
# enumeration


def partitions_upto(max_size, max_len, max_part=None):
    """All partitions with size <= max_size and at most max_len parts."""
    seen = set()

    def rec(prefix, remaining, bound):
        tup = tuple(prefix)
        if tup not in seen:
            seen.add(tup)
            yield tup
        if len(prefix) >= max_len:
            return
        top = min(bound, remaining)
        for p in range(top, 0, -1):
            yield from rec(prefix + [p], remaining - p, p)

    first = max_size if max_part is None else min(max_part, max_size)
    yield from rec([], max_size, first)


def partitions_of(n, max_len=None, max_part=None):
    """All partitions of exactly n."""
    max_len = n if max_len is None else max_len
    for lam in partitions_upto(n, max_len, max_part):
        if sum(lam) == n:
            yield lam


def sub_partitions(lam):
    """All mu contained in lam."""
    lam = pt.trim(lam)

    def rec(i, prev):
        if i == len(lam):
            yield ()
            return
        for m in range(min(lam[i], prev), -1, -1):
            for rest in rec(i + 1, m):
                yield (m,) + rest

    for mu in rec(0, lam[0] if lam else 0):
        yield pt.trim(mu)


def enumerate_tableaux(outer, inner=(), max_value=1, weight=None):
    """Every semistandard tableau on outer/inner with entries <= max_value,
    in lexicographic order of GT matrices.  With `weight`, only fillings of
    that exact weight are produced (depth-first with budget pruning)."""
    outer, inner = pt.check_skew(outer, inner)
    n = len(outer)
    order = [(i, j) for i in range(n) for j in range(inner[i], outer[i])]
    budget = None if weight is None else list(pt.pad(weight, max_value))
    if budget is not None:
        if len(budget) > max_value and any(budget[max_value:]):
            return
        if sum(budget) != len(order):
            return
    grid = {}
    found = []

    def rec(idx):
        if idx == len(order):
            rows = [
                [grid[(i, j)] for j in range(inner[i], outer[i])] for i in range(n)
            ]
            found.append(tableau_from_rows(outer, inner, rows, max_value=max_value))
            return
        i, j = order[idx]
        lo = 1
        if j > inner[i]:
            lo = max(lo, grid[(i, j - 1)])
        if i > 0 and inner[i - 1] <= j < outer[i - 1]:
            lo = max(lo, grid[(i - 1, j)] + 1)
        for v in range(lo, max_value + 1):
            if budget is not None:
                if budget[v - 1] == 0:
                    continue
                budget[v - 1] -= 1
            grid[(i, j)] = v
            rec(idx + 1)
            del grid[(i, j)]
            if budget is not None:
                budget[v - 1] += 1

    rec(0)
    found.sort(key=lambda t: t.gt)
    yield from found


def enumerate_lr(lam, mu, nu):
    """All Littlewood-Richardson fillings of lam/mu with weight nu; empty
    when the shapes or sizes rule the set out."""
    from .tableaux import is_lr

    if not pt.contains(lam, mu):
        return
    lam, mu = pt.check_skew(lam, mu)
    nu = pt.trim(nu)
    if sum(nu) != sum(lam) - sum(mu):
        return
    if not pt.contains(lam, nu):
        return
    for t in enumerate_tableaux(lam, mu, max_value=max(len(nu), 1), weight=nu):
        if is_lr(t):
            yield t


def lr_coefficient(lam, mu, nu) -> int:
    return sum(1 for _ in enumerate_lr(lam, mu, nu))


# ---------------------------------------------------------------------------
# conjecture probes (verification harnesses: these do call the fast maps)


def lr_instances(max_size, max_len):
    """All (lam, mu, nu, tableau) with tableau in LR(lam/mu, nu),
    |lam| <= max_size and at most max_len rows."""
    for lam in partitions_upto(max_size, max_len):
        if not lam:
            continue
        for mu in sub_partitions(lam):
            n = sum(lam) - sum(mu)
            for nu in partitions_of(n, max_len=max_len):
                for t in enumerate_lr(lam, mu, nu):
                    yield lam, mu, nu, t


def conjecture1_probe(max_size=8, max_len=4):
    """Compare the four symmetry maps pointwise over every LR instance in
    bounds; returns a report with any mismatches."""
    from .bijections import rho1, rho2, rho2_prime, rho3

    maps = {"rho1": rho1, "rho2": rho2, "rho2_prime": rho2_prime, "rho3": rho3}
    mismatches = []
    checked = 0
    for lam, mu, nu, t in lr_instances(max_size, max_len):
        images = {}
        for name, fn in maps.items():
            images[name] = fn(t)
        checked += 1
        base = images["rho1"]
        bad = [name for name, img in images.items() if img != base]
        if bad:
            mismatches.append(
                {
                    "lambda": list(lam),
                    "mu": list(mu),
                    "nu": list(nu),
                    "rows": t.rows(),
                    "disagreeing": bad,
                }
            )
    return {"instances": checked, "mismatches": mismatches}


def octahedral_count_sides(lam, mu, nu, tau):
    """The two factorization counts whose equality the octahedral map implies."""
    n_mid = sum(lam) + sum(mu)
    lhs = 0
    for sigma in partitions_of(n_mid, max_len=len(tau) or 1):
        if pt.contains(sigma, lam) and pt.contains(tau, sigma):
            lhs += lr_coefficient(sigma, lam, mu) * lr_coefficient(tau, sigma, nu)
    rhs = 0
    n_mid2 = sum(mu) + sum(nu)
    for pi in partitions_of(n_mid2, max_len=len(tau) or 1):
        if pt.contains(pi, mu) and pt.contains(tau, pi):
            rhs += lr_coefficient(pi, mu, nu) * lr_coefficient(tau, lam, pi)
    return lhs, rhs


def conjecture3_count_probe(max_tau=6):
    """Check the two-step factorization count identity for every partition
    quadruple with |tau| <= max_tau."""
    mismatches = []
    checked = 0
    for n in range(max_tau + 1):
        for tau in partitions_of(n):
            for a in range(n + 1):
                for lam in partitions_of(a):
                    if not pt.contains(tau, lam):
                        continue
                    for b in range(n - a + 1):
                        for mu in partitions_of(b):
                            for nu in partitions_of(n - a - b):
                                lhs, rhs = octahedral_count_sides(lam, mu, nu, tau)
                                checked += 1
                                if lhs != rhs:
                                    mismatches.append(
                                        {
                                            "lambda": list(lam),
                                            "mu": list(mu),
                                            "nu": list(nu),
                                            "tau": list(tau),
                                            "lhs": lhs,
                                            "rhs": rhs,
                                        }
                                    )
    return {"instances": checked, "mismatches": mismatches}
