"""Fixed points of cyclic automorphisms and quotient genera via Riemann-Hurwitz."""

from __future__ import annotations

from dataclasses import dataclass, field

from . import ff
from .ff import PrimeField
from .poly import HomPoly, ProjPoint, apply_proj, is_invariant


class InconsistentBranchData(ValueError):
    pass


class NotDiagonalizable(ValueError):
    pass


def genus(d: int) -> int:
    if d < 1:
        raise ValueError("degree must be positive")
    return (d - 1) * (d - 2) // 2


@dataclass(frozen=True)
class BranchPoint:
    point: ProjPoint
    stabilizer_order: int

    def __post_init__(self):
        if self.stabilizer_order < 1:
            raise ValueError("stabilizer order must be positive")


@dataclass(frozen=True)
class BranchData:
    """Ramified orbits of a cyclic group of order n as (orbit size, index) pairs."""

    group_order: int
    orbits: tuple = field(default=())

    def __post_init__(self):
        for size, e in self.orbits:
            if e < 2:
                raise ValueError("unramified orbits are not branch data")
            if size * e != self.group_order:
                raise ValueError(f"orbit of size {size} with index {e} in a group of order {self.group_order}")
        object.__setattr__(self, "orbits", tuple(sorted(self.orbits, key=lambda t: (-t[1], t[0]))))

    @property
    def profile(self) -> tuple:
        """Ramification indices, one per branch point of the quotient map."""
        return tuple(e for _, e in self.orbits)


def hurwitz_quotient_genus(g: int, data: BranchData) -> int:
    """g0 from 2g - 2 = n (2 g0 - 2) + sum size (e - 1)."""
    n = data.group_order
    ram = sum(size * (e - 1) for size, e in data.orbits)
    num = 2 * g - 2 - ram
    if num % n:
        raise InconsistentBranchData(f"2g-2-R = {num} is not divisible by n = {n}")
    twice = num // n + 2
    if twice % 2 or twice < 0:
        raise InconsistentBranchData(f"quotient genus {twice}/2 is not a nonnegative integer")
    return twice // 2


# ---------------------------------------------------------------------------
# linear algebra over the prime field


def _charpoly(K, A):
    """det(x I - A) as a low-degree-first list."""
    tr = K.add(K.add(A[0][0], A[1][1]), A[2][2])
    minors = K.zero
    for i, j in ((0, 1), (0, 2), (1, 2)):
        minors = K.add(minors, K.sub(K.mul(A[i][i], A[j][j]), K.mul(A[i][j], A[j][i])))
    from .poly import _det3

    return [K.neg(_det3(K, A)), minors, K.neg(tr), K.one]


def _null_space(K, A):
    """Basis of the kernel of a 3x3 matrix, by row reduction."""
    rows = [list(r) for r in A]
    pivots = []
    r = 0
    for c in range(3):
        piv = next((i for i in range(r, 3) if not K.is_zero(rows[i][c])), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        inv = K.inv(rows[r][c])
        rows[r] = [K.mul(inv, x) for x in rows[r]]
        for i in range(3):
            if i != r and not K.is_zero(rows[i][c]):
                f = rows[i][c]
                rows[i] = [K.sub(x, K.mul(f, y)) for x, y in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
    basis = []
    for free in (c for c in range(3) if c not in pivots):
        v = [K.zero] * 3
        v[free] = K.one
        for i, c in enumerate(pivots):
            v[c] = K.neg(rows[i][free])
        basis.append(v)
    return basis


def eigen_decomposition(M):
    """(eigenvalues, P) with M P = P diag(eigenvalues), all over the base field."""
    K = M.field
    if not isinstance(K, PrimeField):
        raise NotDiagonalizable("eigen-decomposition is implemented over prime fields")
    A = M.entries
    cp = _charpoly(K, A)
    factors = ff.factor(K, cp)
    if any(len(f) != 2 for f, _ in factors):
        raise NotDiagonalizable("characteristic polynomial does not split over the base field")
    vals, cols = [], []
    for f, mult in factors:
        lam = K.neg(f[0])
        shifted = [[K.sub(A[i][j], lam) if i == j else A[i][j] for j in range(3)] for i in range(3)]
        basis = _null_space(K, shifted)
        if len(basis) != mult:
            raise NotDiagonalizable("eigenspace dimension is smaller than the multiplicity")
        for v in basis:
            vals.append(lam)
            cols.append(v)
    P = tuple(tuple(cols[c][r] for c in range(3)) for r in range(3))
    return tuple(vals), P


# ---------------------------------------------------------------------------
# fixed points


def _least_power(L, ratios, n):
    """Least k >= 1 with r^k = 1 for every ratio."""
    for k in range(1, n + 1):
        if n % k == 0 and all(L.pow(r, k) == L.one for r in ratios):
            return k
    return n


def _stabilizer_order(L, vals, w, n):
    supp = [i for i in range(3) if not L.is_zero(w[i])]
    base = vals[supp[0]]
    ratios = [L.mul(vals[i], L.inv(base)) for i in supp[1:]]
    return n // _least_power(L, ratios, n)


def _line_points(G: HomPoly, i: int, j: int):
    """Points of G = 0 on the coordinate line w_l = 0 with w_j != 0, over their minimal fields."""
    K = G.field
    # restrict to w = t e_i + e_j: coefficient of t^a is the coefficient of w_i^a w_j^(d-a)
    coeffs = [K.zero] * (G.d + 1)
    for mo, c in G.terms.items():
        if mo[3 - i - j] == 0:
            coeffs[mo[i]] = c
    f = ff._trim(K, coeffs)
    if len(f) == 0:
        raise ValueError("the curve contains a coordinate line of the eigenframe")
    out = []
    for g, _ in ff.factor(K, f):
        r = len(g) - 1
        L = ff.field_for(K.p, r)
        for t in ff.roots(L, ff.embed_poly(L, g)):
            w = [L.zero] * 3
            w[i] = t
            w[j] = L.one
            out.append((w, L))
    return out


def fixed_points(c, M) -> list[BranchPoint]:
    """Curve points with nontrivial stabilizer in <M>, each geometric point listed once.

    M must be diagonalizable over the prime field of the curve.  Points on the
    fixed lines of powers of M may live in extensions; each is reported over
    the smallest standard field containing it.
    """
    F = c.form if hasattr(c, "form") else c
    K = F.field
    if is_invariant(F, M) is None:
        raise ValueError("matrix is not an automorphism of the curve")
    n = M.order()
    vals, P = eigen_decomposition(M)
    G = apply_proj(F, P)
    found = {}

    def record(w, L):
        e = _stabilizer_order(L, [L.base_embed(v) if L != K else v for v in vals], w, n)
        if e < 2:
            return
        v = [
            L.add(L.add(L.mul(_emb(L, K, P[r][0]), w[0]), L.mul(_emb(L, K, P[r][1]), w[1])), L.mul(_emb(L, K, P[r][2]), w[2]))
            for r in range(3)
        ]
        pt = ProjPoint.make(v, L)
        found[(L.e, pt.key())] = BranchPoint(pt, e)

    for i in range(3):
        w = [K.zero] * 3
        w[i] = K.one
        if K.is_zero(G(*w)):
            record(w, K)
    for i, j in ((0, 1), (0, 2), (1, 2)):
        ratio = K.mul(vals[i], K.inv(vals[j]))
        if _least_power(K, [ratio], n) == n:
            continue
        for w, L in _line_points(G, i, j):
            if not L.is_zero(w[i]):
                record(w, L)
    out = sorted(found.values(), key=lambda b: (-b.stabilizer_order, b.point.field.e, b.point.key()))
    for b in out:
        _recheck(F, M, b, n)
    return out


def _emb(L, K, x):
    return x if L == K else L.base_embed(x)


def _recheck(F, M, b: BranchPoint, n):
    """The point is on the curve and fixed by M^k exactly when n/e divides k."""
    pt = b.point
    L = pt.field
    if not L.is_zero(F(*pt.coords, L=L)):
        raise AssertionError(f"{pt.fmt()} is not on the curve")
    step = n // b.stabilizer_order
    for k in range(1, n):
        img = ProjPoint.make((M**k).apply(pt.coords, L), L)
        if (img == pt) != (k % step == 0):
            raise AssertionError(f"{pt.fmt()} has the wrong stabilizer")


def branch_data(c, M, points=None) -> BranchData:
    """Orbit decomposition of the ramified points of <M>."""
    n = M.order()
    points = fixed_points(c, M) if points is None else points
    counts: dict = {}
    for b in points:
        counts[b.stabilizer_order] = counts.get(b.stabilizer_order, 0) + 1
    orbits = []
    for e, cnt in counts.items():
        size = n // e
        if cnt % size:
            raise InconsistentBranchData(f"{cnt} points with index {e} do not split into orbits of size {size}")
        orbits.extend([(size, e)] * (cnt // size))
    return BranchData(n, tuple(orbits))


def quotient_genus(c, M) -> int:
    F = c.form if hasattr(c, "form") else c
    return hurwitz_quotient_genus(genus(F.d), branch_data(c, M))


def fixed_points_exhaustive(c, M, e: int = 2) -> list[BranchPoint]:
    """Oracle: enumerate all curve points over F_{p^e} and test M^k directly."""
    from .autgrp import embed_matrix
    from .poly import points_exhaustive

    F = c.form if hasattr(c, "form") else c
    L = ff.field_for(F.field.p, e)
    n = M.order()
    ML = embed_matrix(M, L)
    powers = [ML**k for k in range(1, n)]
    out = []
    for pt in points_exhaustive(F, e):
        fixed_by = [k for k, Mk in enumerate(powers, 1) if ProjPoint.make(Mk.apply(pt.coords, L), L) == pt]
        if fixed_by:
            out.append(BranchPoint(pt, n // min(fixed_by)))
    return out


def lift_point(pt: ProjPoint, L) -> ProjPoint:
    """Embed a point over F_p into an extension; points already over L pass through."""
    if pt.field == L:
        return pt
    if pt.field.e != 1:
        raise ValueError("only prime-field points can be lifted")
    return ProjPoint.make([L.base_embed(x) for x in pt.coords], L)
