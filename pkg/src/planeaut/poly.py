"""Homogeneous ternary forms over F_p (or F_{p^e}) and their singular points."""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import NamedTuple

from . import ff
from .ff import PrimeField, ExtField


class Monomial(NamedTuple):
    i: int
    j: int
    k: int

    @property
    def degree(self) -> int:
        return self.i + self.j + self.k

    @property
    def exponent(self) -> int:
        return max(self)

    def __str__(self):
        parts = []
        for v, n in zip("XYZ", self):
            if n == 1:
                parts.append(v)
            elif n > 1:
                parts.append(f"{v}^{n}")
        return "".join(parts) or "1"


def monomials(d: int) -> list[Monomial]:
    """All degree-d monomials, X-heavy first."""
    return [Monomial(i, j, d - i - j) for i in range(d, -1, -1) for j in range(d - i, -1, -1)]


class HomPoly:
    """A homogeneous form of degree d; terms maps Monomial -> nonzero coefficient."""

    __slots__ = ("d", "field", "terms")

    def __init__(self, d: int, terms: dict, field):
        self.d = d
        self.field = field
        clean = {}
        for mono, c in terms.items():
            mono = Monomial(*mono)
            if mono.degree != d:
                raise ValueError(f"monomial {mono} is not of degree {d}")
            if not field.is_zero(c):
                clean[mono] = c
        self.terms = clean

    @classmethod
    def from_ints(cls, d, terms, field):
        return cls(d, {m: field.from_int(c) for m, c in dict(terms).items()}, field)

    @classmethod
    def parse(cls, text: str, field) -> "HomPoly":
        """Parse sums like ``X^5 + 3*Y^4*Z - XZ^4`` with integer coefficients."""
        import re

        s = text.replace(" ", "").replace("**", "^").replace("-", "+-")
        terms: dict = {}
        d = None
        for chunk in filter(None, s.split("+")):
            sign = -1 if chunk.startswith("-") else 1
            chunk = chunk.lstrip("-")
            m = re.fullmatch(r"(\d*)\*?((?:[XYZ](?:\^\d+)?\*?)*)", chunk)
            if not m:
                raise ValueError(f"cannot parse term {chunk!r}")
            c = int(m.group(1)) if m.group(1) else 1
            exps = {"X": 0, "Y": 0, "Z": 0}
            for v, e in re.findall(r"([XYZ])(?:\^(\d+))?", m.group(2)):
                exps[v] += int(e) if e else 1
            mono = Monomial(exps["X"], exps["Y"], exps["Z"])
            if d is None:
                d = mono.degree
            elif mono.degree != d:
                raise ValueError("form is not homogeneous")
            terms[mono] = field.add(terms.get(mono, field.zero), field.from_int(sign * c))
        if d is None:
            raise ValueError("empty form")
        return cls(d, terms, field)

    def __eq__(self, other):
        return (
            isinstance(other, HomPoly)
            and self.d == other.d
            and self.field == other.field
            and self.terms == other.terms
        )

    def __hash__(self):
        return hash((self.d, frozenset(self.terms.items())))

    def __bool__(self):
        return bool(self.terms)

    def __repr__(self):
        return f"HomPoly({self})"

    def __str__(self):
        if not self.terms:
            return "0"
        K = self.field
        out = []
        for mono in sorted(self.terms, key=lambda m: (-m.i, -m.j)):
            c = self.terms[mono]
            cs = K.fmt(c)
            if c == K.one:
                out.append(str(mono))
            elif mono.degree == 0:
                out.append(cs)
            else:
                out.append(f"({cs})*{mono}" if "+" in cs else f"{cs}*{mono}")
        return " + ".join(out)

    @property
    def support(self) -> frozenset:
        return frozenset(self.terms)

    def __add__(self, other: "HomPoly") -> "HomPoly":
        if other.d != self.d:
            raise ValueError("degree mismatch")
        K = self.field
        t = dict(self.terms)
        for m, c in other.terms.items():
            t[m] = K.add(t.get(m, K.zero), c)
        return HomPoly(self.d, t, K)

    def __sub__(self, other):
        return self + other.scale(self.field.neg(self.field.one))

    def scale(self, c) -> "HomPoly":
        K = self.field
        return HomPoly(self.d, {m: K.mul(v, c) for m, v in self.terms.items()}, K)

    def __mul__(self, other: "HomPoly") -> "HomPoly":
        K = self.field
        t: dict = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = Monomial(m1.i + m2.i, m1.j + m2.j, m1.k + m2.k)
                t[m] = K.add(t.get(m, K.zero), K.mul(c1, c2))
        return HomPoly(self.d + other.d, t, K)

    def over(self, L) -> "HomPoly":
        """The same form with coefficients pushed into an extension L."""
        if L == self.field:
            return self
        if not isinstance(self.field, PrimeField):
            raise ValueError("can only extend forms defined over the prime field")
        return HomPoly(self.d, {m: L.base_embed(c) for m, c in self.terms.items()}, L)

    def __call__(self, x, y, z, L=None):
        """Evaluate at a point whose coordinates live in L (default: own field)."""
        K = self.field
        L = L or K
        emb = (lambda c: c) if L == K else L.base_embed
        px, py, pz = _powers(L, x, self.d), _powers(L, y, self.d), _powers(L, z, self.d)
        acc = L.zero
        for m, c in self.terms.items():
            acc = L.add(acc, L.mul(emb(c), L.mul(px[m.i], L.mul(py[m.j], pz[m.k]))))
        return acc

    def restrict_z(self, x, y, L=None) -> list:
        """F(x, y, Z) as a univariate polynomial in Z over L."""
        K = self.field
        L = L or K
        emb = (lambda c: c) if L == K else L.base_embed
        px, py = _powers(L, x, self.d), _powers(L, y, self.d)
        out = [L.zero] * (self.d + 1)
        for m, c in self.terms.items():
            out[m.k] = L.add(out[m.k], L.mul(emb(c), L.mul(px[m.i], py[m.j])))
        return ff._trim(L, out)


def _powers(L, x, n):
    out = [L.one]
    for _ in range(n):
        out.append(L.mul(out[-1], x))
    return out


def partials(F: HomPoly) -> tuple[HomPoly, HomPoly, HomPoly]:
    K = F.field
    d = F.d
    if d == 0:
        z = HomPoly(0, {}, K)
        return z, z, z
    out = []
    for axis in range(3):
        t = {}
        for m, c in F.terms.items():
            if m[axis]:
                nm = list(m)
                nm[axis] -= 1
                t[Monomial(*nm)] = K.mul(K.from_int(m[axis]), c)
        out.append(HomPoly(d - 1, t, K))
    return tuple(out)


def _linear(K, row) -> HomPoly:
    return HomPoly(1, {(1, 0, 0): row[0], (0, 1, 0): row[1], (0, 0, 1): row[2]}, K)


def apply_proj(F: HomPoly, M) -> HomPoly:
    """The substituted form F(M v), with M given by its 3x3 entries."""
    rows = M.entries if hasattr(M, "entries") else M
    K = getattr(M, "field", None) or F.field
    if K != F.field:
        F = F.over(K)
    if K.is_zero(_det3(K, rows)):
        raise ValueError("singular matrix")
    lin = [_linear(K, r) for r in rows]
    pw = [[HomPoly(0, {(0, 0, 0): K.one}, K)] for _ in range(3)]
    for v in range(3):
        for _ in range(F.d):
            pw[v].append(pw[v][-1] * lin[v])
    out = HomPoly(F.d, {}, K)
    for m, c in F.terms.items():
        out = out + (pw[0][m.i] * pw[1][m.j] * pw[2][m.k]).scale(c)
    return out


def _det3(K, r):
    a = K.mul(r[0][0], K.sub(K.mul(r[1][1], r[2][2]), K.mul(r[1][2], r[2][1])))
    b = K.mul(r[0][1], K.sub(K.mul(r[1][0], r[2][2]), K.mul(r[1][2], r[2][0])))
    c = K.mul(r[0][2], K.sub(K.mul(r[1][0], r[2][1]), K.mul(r[1][1], r[2][0])))
    return K.add(K.sub(a, b), c)


def scalar_ratio(G: HomPoly, F: HomPoly):
    """lambda with G = lambda*F, or None."""
    if G.support != F.support or not F.terms:
        return None
    K = F.field
    m0 = next(iter(F.terms))
    lam = K.mul(G.terms[m0], K.inv(F.terms[m0]))
    for m, c in F.terms.items():
        if G.terms[m] != K.mul(lam, c):
            return None
    return lam


def is_invariant(F: HomPoly, M):
    """lambda with F(Mv) = lambda F(v), or None."""
    G = apply_proj(F, M)
    return scalar_ratio(G, F.over(G.field))


def core(F: HomPoly) -> HomPoly:
    if not F.terms:
        raise ValueError("core of the zero form")
    top = max(m.exponent for m in F.terms)
    return HomPoly(F.d, {m: c for m, c in F.terms.items() if m.exponent == top}, F.field)


# ---------------------------------------------------------------------------
# resultants


def _z_coeffs(F: HomPoly) -> list[list]:
    """Coefficients of Z^t as univariate polynomials in x (with Y = 1)."""
    K = F.field
    mz = max((m.k for m in F.terms), default=0)
    out = [[K.zero] * (F.d + 1) for _ in range(mz + 1)]
    for m, c in F.terms.items():
        out[m.k][m.i] = K.add(out[m.k][m.i], c)
    return [ff._trim(K, row) for row in out]


def _det(L, A):
    """Determinant by Gaussian elimination over a field."""
    n = len(A)
    A = [list(r) for r in A]
    det = L.one
    for col in range(n):
        piv = next((r for r in range(col, n) if not L.is_zero(A[r][col])), None)
        if piv is None:
            return L.zero
        if piv != col:
            A[col], A[piv] = A[piv], A[col]
            det = L.neg(det)
        pv = A[col][col]
        det = L.mul(det, pv)
        inv = L.inv(pv)
        for r in range(col + 1, n):
            f = A[r][col]
            if L.is_zero(f):
                continue
            f = L.mul(f, inv)
            Ar, Ac = A[r], A[col]
            for c in range(col + 1, n):
                Ar[c] = L.sub(Ar[c], L.mul(f, Ac[c]))
    return det


def _interpolate(L, xs, ys):
    """Coefficients (low first) of the unique polynomial through (xs, ys)."""
    n = len(xs)
    coef = list(ys)
    for j in range(1, n):
        for i in range(n - 1, j - 1, -1):
            num = L.sub(coef[i], coef[i - 1])
            den = L.sub(xs[i], xs[i - j])
            coef[i] = L.mul(num, L.inv(den))
    poly = [coef[n - 1]]
    for i in range(n - 2, -1, -1):
        # poly = poly*(x - xs[i]) + coef[i]
        shifted = [L.zero] + poly
        for t in range(len(poly)):
            shifted[t] = L.sub(shifted[t], L.mul(poly[t], xs[i]))
        shifted[0] = L.add(shifted[0], coef[i])
        poly = shifted
    return ff._trim(L, poly)


@dataclass(frozen=True)
class BinaryForm:
    """sum coeffs[i] X^i Y^(n-i); coeffs is a trimmed univariate list."""

    n: int
    coeffs: tuple
    field: object

    def is_zero(self):
        return not self.coeffs

    def vanishes_at_infinity(self) -> bool:
        """True when (1:0) is a root, i.e. the X^n coefficient is zero."""
        return len(self.coeffs) <= self.n

    def to_hompoly(self) -> HomPoly:
        return HomPoly(self.n, {(i, self.n - i, 0): c for i, c in enumerate(self.coeffs)}, self.field)


def resultant_z(F: HomPoly, G: HomPoly) -> BinaryForm:
    """Sylvester resultant with respect to Z, as a binary form in X, Y."""
    K = F.field
    if G.field != K:
        raise ValueError("field mismatch")
    fc, gc = _z_coeffs(F), _z_coeffs(G)
    m1, m2 = len(fc) - 1, len(gc) - 1
    if m1 < 0 or m2 < 0:
        raise ValueError("zero form")
    n = F.d * G.d - (F.d - m1) * (G.d - m2)
    size = m1 + m2
    if size == 0:
        return BinaryForm(0, (K.one,), K)

    def sylvester_at(L, x):
        fv = [ff.peval(L, [L.base_embed(c) if L != K else c for c in row], x) for row in fc]
        gv = [ff.peval(L, [L.base_embed(c) if L != K else c for c in row], x) for row in gc]
        A = []
        for r in range(m2):
            row = [L.zero] * size
            for t in range(m1 + 1):
                row[r + t] = fv[m1 - t]
            A.append(row)
        for r in range(m1):
            row = [L.zero] * size
            for t in range(m2 + 1):
                row[r + t] = gv[m2 - t]
            A.append(row)
        return _det(L, A)

    L = K
    if K.q <= n:
        if not isinstance(K, PrimeField):
            raise ValueError("field too small for interpolation")
        e = 1
        while K.p ** e <= n:
            e += 1
        L = ExtField.standard(K, e)
    xs = []
    for code in range(n + 1):
        xs.append(L.decode(code))
    ys = [sylvester_at(L, x) for x in xs]
    coeffs = _interpolate(L, xs, ys)
    if L != K:
        coeffs = [L.to_base(c) for c in coeffs]
    return BinaryForm(n, tuple(ff._trim(K, coeffs)), K)


# ---------------------------------------------------------------------------
# smoothness


class UnsupportedCharacteristic(ValueError):
    pass


@dataclass(frozen=True)
class ProjPoint:
    """A projective point, scaled so its first nonzero coordinate is 1."""

    coords: tuple
    field: object

    @classmethod
    def make(cls, coords, L) -> "ProjPoint":
        coords = tuple(coords)
        for c in coords:
            if not L.is_zero(c):
                inv = L.inv(c)
                return cls(tuple(L.mul(inv, x) for x in coords), L)
        raise ValueError("the zero vector is not a projective point")

    @property
    def degree(self) -> int:
        return self.field.e

    def fmt(self) -> str:
        return "(" + ":".join(self.field.fmt(c) for c in self.coords) + ")"

    def key(self):
        return tuple(self.field.encode(c) for c in self.coords)

    def frobenius(self) -> "ProjPoint":
        L = self.field
        return ProjPoint(tuple(L.frobenius(c) for c in self.coords), L)

    def minimal_degree(self) -> int:
        """Degree of the smallest subfield the point is defined over."""
        pt = self
        for k in range(1, self.degree + 1):
            pt = pt.frobenius()
            if pt == self:
                return k
        return self.degree


@dataclass(frozen=True)
class SmoothResult:
    smooth: bool
    witness: ProjPoint | None = None

    def __bool__(self):
        return self.smooth


def _random_gl3(K, rng):
    while True:
        M = [[K.random(rng) for _ in range(3)] for _ in range(3)]
        if not K.is_zero(_det3(K, M)):
            return M


def _mat_vec(L, M, v, K):
    emb = (lambda c: c) if L == K else L.base_embed
    return [
        L.add(L.add(L.mul(emb(M[r][0]), v[0]), L.mul(emb(M[r][1]), v[1])), L.mul(emb(M[r][2]), v[2]))
        for r in range(3)
    ]


def _triple_gcd(L, parts, x0, y0):
    h = []
    for P in parts:
        h = ff.pgcd(L, h, P.restrict_z(x0, y0, L))
        if len(h) == 1:
            return h
    return h


def is_smooth(F: HomPoly, seed: int = 0, max_attempts: int = 12, witness: bool = True) -> SmoothResult:
    """Decide smoothness of F = 0 over the algebraic closure of F_p.

    A random projective change of coordinates puts (0:0:1) off the curve, so
    F_Z has a constant leading coefficient in Z.  The x-coordinates of the
    singular points are then roots of gcd(Res_Z(F_Z, F_X), Res_Z(F_Z, F_Y)),
    and each root is lifted by a univariate gcd of the three partials.
    With ``witness=False`` a singular verdict is returned without locating
    the point.
    """
    K = F.field
    if not isinstance(K, PrimeField):
        raise ValueError("is_smooth expects a form over a prime field")
    if F.d % K.p == 0:
        raise UnsupportedCharacteristic(f"p={K.p} divides d={F.d}")
    if not F.terms:
        return SmoothResult(False, ProjPoint.make((1, 0, 0), K))
    rng = random.Random(seed)
    singular = False
    for attempt in range(max_attempts):
        if attempt == 0 and not K.is_zero(F(0, 0, 1)):
            P = [[1, 0, 0], [0, 1, 0], [0, 0, 1]]
            G = F
        else:
            P = _random_gl3(K, rng)
            G = apply_proj(F, P)
            if K.is_zero(G(0, 0, 1)):
                continue
        verdict, found = _singular_search(G, rng, witness)
        if not verdict:
            if singular:
                # the singular verdict never depends on coordinates
                raise AssertionError("inconsistent smoothness verdicts")
            return SmoothResult(True)
        singular = True
        if not witness:
            return SmoothResult(False, None)
        if found is not None:
            x, L = found
            v = _mat_vec(L, P, x, K)
            pt = ProjPoint.make(v, L)
            assert all(L.is_zero(D(*pt.coords, L=L)) for D in partials(F))
            return SmoothResult(False, pt)
    if singular:
        return SmoothResult(False, None)
    raise RuntimeError("could not find coordinates with (0:0:1) off the curve")


def _singular_search(G: HomPoly, rng, want_witness: bool = True):
    """(is_singular, witness or None) for G with G(0,0,1) != 0."""
    K = G.field
    Gx, Gy, Gz = partials(G)
    parts = (Gx, Gy, Gz)
    r = resultant_z(Gz, Gx) if Gx else None
    s = resultant_z(Gz, Gy) if Gy else None
    forms = [f for f in (r, s) if f is not None and not f.is_zero()]
    if len(forms) < 2:
        for _ in range(6):
            c = K.random(rng, nonzero=True)
            comb_ = Gx + Gy.scale(c)
            if comb_:
                t = resultant_z(Gz, comb_)
                if not t.is_zero():
                    forms.append(t)
                    break
    if not forms:
        return True, _component_witness(G, parts, rng) if want_witness else None
    g = list(forms[0].coeffs)
    inf = forms[0].vanishes_at_infinity()
    for f in forms[1:]:
        g = ff.pgcd(K, g, list(f.coeffs))
        inf = inf and f.vanishes_at_infinity()
    found = False
    candidates = []
    if inf:
        candidates.append((K, K.one, K.zero))
    if len(g) > 1:
        for q, _ in ff.factor(K, g, seed=rng.randrange(1 << 30)):
            if len(q) == 2:
                candidates.append((K, K.neg(q[0]), K.one))
                continue
            # t is a root of q in F_p[t]/(q); only a hit is redone in the standard field
            R = ff.ExtField(K, q, check=False)
            if len(_triple_gcd(R, parts, R.gen(), R.one)) > 1:
                if not want_witness:
                    return True, None
                L = ff.field_for(K.p, len(q) - 1)
                candidates.append((L, ff.roots(L, ff.embed_poly(L, q))[0], L.one))
    for L, x0, y0 in candidates:
        h = _triple_gcd(L, parts, x0, y0)
        if len(h) <= 1:
            continue
        found = True
        if not want_witness:
            break
        h = ff.squarefree_part(L, h)
        if len(h) == 2:
            return True, ([x0, y0, L.neg(h[0])], L)
    return found, None


def _component_witness(G, parts, rng):
    """Partials share a component: pick a line x = x0 and find a common root."""
    K = G.field
    for x0 in range(K.p):
        h = _triple_gcd(K, parts, x0, 1)
        if len(h) > 1:
            q = ff.factor(K, h)[0][0]
            L = ff.field_for(K.p, len(q) - 1)
            z0 = ff.roots(L, ff.embed_poly(L, q))[0]
            return [L.base_embed(x0), L.one, z0], L
    return None


def singular_points_exhaustive(F: HomPoly, e: int = 1) -> list[ProjPoint]:
    """All singular points rational over F_{p^e}, by brute-force evaluation."""
    from . import _kernels

    L = ff.field_for(F.field.p, e)
    return [ProjPoint(tuple(L.decode(c) for c in pt), L) for pt in _kernels.common_zeros(partials(F), L)]


def points_exhaustive(F: HomPoly, e: int = 1) -> list[ProjPoint]:
    """All points of F = 0 rational over F_{p^e}."""
    from . import _kernels

    L = ff.field_for(F.field.p, e)
    return [ProjPoint(tuple(L.decode(c) for c in pt), L) for pt in _kernels.common_zeros((F,), L)]
