"""Bender-Knuth transformations on the GT encoding, and the derived words.

The generator s_r swaps the multiplicities of r and r+1 by a piecewise
linear update of GT column r:

    b[i][r] = min(a[i][r+1], a[i-1][r-1]) + max(a[i][r-1], a[i+1][r+1]) - a[i][r]

with the boundary convention a[0][j] = +infinity above the first row and
a[i][j] = 0 below the last.  Words are stored in product order (leftmost
factor written first) and applied rightmost factor first.
"""

from .errors import IndexOutOfRange
from .tableaux import Tableau


def _sentinel(t: Tableau) -> int:
    # any value above every GT entry works; lambda_1 + size + 1 is safe
    top = t.outer[0] if t.outer else 0
    return top + t.size() + 1


def _bk_column(g, r, inf):
    """In-place s_r on a mutable GT matrix (list of row lists)."""
    n = len(g)
    up = inf
    for i in range(n):
        row = g[i]
        below = g[i + 1][r + 1] if i + 1 < n else 0
        left = row[r - 1]
        m1 = row[r + 1]
        if up < m1:
            m1 = up
        m2 = left if left > below else below
        up = left
        row[r] = m1 + m2 - row[r]


def bk(t: Tableau, r: int) -> Tableau:
    """The transformation s_r; swaps components r and r+1 of the weight."""
    if not 1 <= r < t.k:
        raise IndexOutOfRange(f"generator index {r} outside 1..{t.k - 1}")
    g = [list(row) for row in t.gt]
    _bk_column(g, r, _sentinel(t))
    return Tableau(t.outer, t.inner, g, t.k)


def apply_bk_word(t: Tableau, indices) -> Tableau:
    """Apply a generator word, rightmost factor first."""
    word = tuple(indices)
    for r in word:
        if not 1 <= r < t.k:
            raise IndexOutOfRange(f"generator index {r} outside 1..{t.k - 1}")
    if not word:
        return t
    g = [list(row) for row in t.gt]
    inf = _sentinel(t)
    for r in reversed(word):
        _bk_column(g, r, inf)
    return Tableau(t.outer, t.inner, g, t.k)


def z_word(m: int) -> tuple:
    """(s_1)(s_2 s_1)...(s_{m-1} ... s_1): reverses an m-part weight."""
    out = []
    for g in range(1, m):
        out.extend(range(g, 0, -1))
    return tuple(out)


def t_word(r: int, s: int) -> tuple:
    """(s_s ... s_{s+r-1}) ... (s_1 ... s_r): moves the first r weight
    components past the remaining s."""
    out = []
    for j in range(s, 0, -1):
        out.extend(range(j, j + r))
    return tuple(out)
