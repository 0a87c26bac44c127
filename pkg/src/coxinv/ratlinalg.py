"""Exact linear algebra over the rationals.

Vectors are tuples and matrices are tuples of row tuples; entries are
`fractions.Fraction` (plain ints are accepted and promoted).  Everything here
is deliberately small-scale: ambient dimensions stay below ten.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd

from .errors import SingularMatrix

Vec = tuple[Fraction, ...]
Mat = tuple[Vec, ...]


def frac(x) -> Fraction:
    return x if isinstance(x, Fraction) else Fraction(x)


def vec(*entries) -> Vec:
    return tuple(frac(e) for e in entries)


def vadd(a, b):
    return tuple(x + y for x, y in zip(a, b))


def vsub(a, b):
    return tuple(x - y for x, y in zip(a, b))


def vneg(a):
    return tuple(-x for x in a)


def vscale(c, a):
    return tuple(c * x for x in a)


def dot(a, b):
    return sum(x * y for x, y in zip(a, b))


def is_zero(a) -> bool:
    return all(x == 0 for x in a)


def identity(n: int) -> Mat:
    return tuple(tuple(Fraction(int(i == j)) for j in range(n)) for i in range(n))


def mat_vec(m, v):
    return tuple(dot(row, v) for row in m)


def mat_mul(a, b):
    bt = transpose(b)
    return tuple(tuple(dot(row, col) for col in bt) for row in a)


def transpose(m):
    return tuple(zip(*m))


def _elim(rows):
    """Row reduce in place (list of lists); returns pivot column indices."""
    pivots = []
    r = 0
    ncols = len(rows[0]) if rows else 0
    for c in range(ncols):
        pivot = next((i for i in range(r, len(rows)) if rows[i][c] != 0), None)
        if pivot is None:
            continue
        rows[r], rows[pivot] = rows[pivot], rows[r]
        inv = Fraction(1) / rows[r][c]
        rows[r] = [inv * x for x in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][c] != 0:
                f = rows[i][c]
                rows[i] = [x - f * y for x, y in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
        if r == len(rows):
            break
    return pivots


def rank(m) -> int:
    rows = [[frac(x) for x in row] for row in m]
    if not rows:
        return 0
    return len(_elim(rows))


def solve(m, b) -> Vec:
    """Solve the square system m x = b exactly."""
    n = len(m)
    rows = [[frac(x) for x in row] + [frac(bi)] for row, bi in zip(m, b)]
    pivots = _elim(rows)
    if len(pivots) < n or any(p >= n for p in pivots):
        raise SingularMatrix("singular square system")
    return tuple(rows[i][n] for i in range(n))


def inverse(m) -> Mat:
    n = len(m)
    rows = [[frac(x) for x in row] + [Fraction(int(i == j)) for j in range(n)]
            for i, row in enumerate(m)]
    pivots = _elim(rows)
    if len(pivots) < n or any(p >= n for p in pivots):
        raise SingularMatrix("matrix not invertible")
    return tuple(tuple(rows[i][n:]) for i in range(n))


def nullspace(m) -> list[Vec]:
    """Basis of {x : m x = 0}."""
    if not m:
        return []
    ncols = len(m[0])
    rows = [[frac(x) for x in row] for row in m]
    pivots = _elim(rows)
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for f in free:
        v = [Fraction(0)] * ncols
        v[f] = Fraction(1)
        for r, p in enumerate(pivots):
            v[p] = -rows[r][f]
        basis.append(tuple(v))
    return basis


def gram_schmidt(vectors) -> list[Vec]:
    """Orthogonal (not normalized) basis of the span, exact."""
    basis: list[Vec] = []
    for v in vectors:
        w = tuple(frac(x) for x in v)
        for b in basis:
            w = vsub(w, vscale(dot(w, b) / dot(b, b), b))
        if not is_zero(w):
            basis.append(w)
    return basis


def primitive(v):
    """Scale a rational vector to integer entries with content 1 and a
    positive leading nonzero entry.  Returns (primitive_vector, s) with
    primitive_vector = s * v."""
    fr = [frac(x) for x in v]
    den = 1
    for x in fr:
        den = den * x.denominator // gcd(den, x.denominator)
    ints = [int(x * den) for x in fr]
    g = 0
    for x in ints:
        g = gcd(g, abs(x))
    if g == 0:
        return tuple(Fraction(0) for _ in v), Fraction(0)
    s = Fraction(den, g)
    first = next(x for x in fr if x != 0)
    if first < 0:
        s = -s
    return tuple(s * x for x in fr), s


def smith_diagonal(m) -> list[int]:
    """Diagonal of the Smith normal form of an integer matrix."""
    a = [[int(x) for x in row] for row in m]
    nrows, ncols = len(a), len(a[0]) if a else 0
    diag = []
    t = 0
    while t < min(nrows, ncols):
        # find a nonzero pivot
        pos = None
        for i in range(t, nrows):
            for j in range(t, ncols):
                if a[i][j] != 0:
                    pos = (i, j)
                    break
            if pos:
                break
        if pos is None:
            break
        i0, j0 = pos
        a[t], a[i0] = a[i0], a[t]
        for row in a:
            row[t], row[j0] = row[j0], row[t]
        while True:
            # clear column t
            changed = False
            for i in range(t + 1, nrows):
                if a[i][t] != 0:
                    q = a[i][t] // a[t][t]
                    a[i] = [x - q * y for x, y in zip(a[i], a[t])]
                    if a[i][t] != 0:
                        a[t], a[i] = a[i], a[t]
                    changed = True
            for j in range(t + 1, ncols):
                if a[t][j] != 0:
                    q = a[t][j] // a[t][t]
                    for row in a:
                        row[j] -= q * row[t]
                    if a[t][j] != 0:
                        for row in a:
                            row[t], row[j] = row[j], row[t]
                    changed = True
            if not changed:
                break
        diag.append(abs(a[t][t]))
        t += 1
    return diag
