"""Finite subgroups of PGL_3 over finite fields and automorphisms of plane curves."""

from __future__ import annotations

import random

import re
from collections import Counter
from dataclasses import dataclass
from math import gcd

from . import ff
from .ff import PrimeField
from .poly import HomPoly, ProjPoint, _det3, apply_proj, is_invariant, partials


class GroupTooLarge(RuntimeError):
    pass


class BudgetExceeded(RuntimeError):
    pass


def _mat_mul(K, A, B):
    return tuple(
        tuple(
            K.add(K.add(K.mul(A[r][0], B[0][c]), K.mul(A[r][1], B[1][c])), K.mul(A[r][2], B[2][c]))
            for c in range(3)
        )
        for r in range(3)
    )


def _adjugate(K, A):
    def cof(r, c):
        rows = [i for i in range(3) if i != r]
        cols = [j for j in range(3) if j != c]
        m = K.sub(
            K.mul(A[rows[0]][cols[0]], A[rows[1]][cols[1]]),
            K.mul(A[rows[0]][cols[1]], A[rows[1]][cols[0]]),
        )
        return m if (r + c) % 2 == 0 else K.neg(m)

    return tuple(tuple(cof(c, r) for c in range(3)) for r in range(3))


class ProjMatrix:
    """An element of PGL_3(K), stored with its first nonzero entry equal to 1."""

    __slots__ = ("field", "entries", "_hash")

    def __init__(self, field, entries):
        K = field
        rows = tuple(tuple(K.from_int(x) if isinstance(x, int) else x for x in r) for r in entries)
        if K.is_zero(_det3(K, rows)):
            raise ValueError("singular matrix")
        lead = next(x for r in rows for x in r if not K.is_zero(x))
        inv = K.inv(lead)
        self.field = K
        self.entries = tuple(tuple(K.mul(inv, x) for x in r) for r in rows)
        self._hash = hash(self.entries)

    @classmethod
    def identity(cls, K):
        return cls(K, ((1, 0, 0), (0, 1, 0), (0, 0, 1)))

    @classmethod
    def diag(cls, K, a, b, c):
        z = K.zero
        return cls(K, ((a, z, z), (z, b, z), (z, z, c)))

    @classmethod
    def from_images(cls, K, spec: str, scalars: dict | None = None):
        """Build a map from notation like ``[Y;Z;X]`` or ``[X;m*Z;n*Y]``.

        The i-th slot is the image coordinate, so ``[Y;Z;X]`` sends (x:y:z) to
        (y:z:x).  Coefficients may be integers or names looked up in `scalars`.
        """
        scalars = scalars or {}
        slots = spec.strip().strip("[]").split(";")
        if len(slots) != 3:
            raise ValueError(f"bad map {spec!r}")
        rows = []
        for s in slots:
            row = [K.zero, K.zero, K.zero]
            for term in filter(None, s.replace(" ", "").replace("-", "+-").split("+")):
                m = re.fullmatch(r"(-?)(?:([\w^]+)\*)?([XYZ])", term)
                if not m:
                    raise ValueError(f"bad term {term!r} in {spec!r}")
                c = K.one
                if m.group(2):
                    tok = m.group(2)
                    c = K.from_int(int(tok)) if tok.isdigit() else _scalar(K, tok, scalars)
                if m.group(1):
                    c = K.neg(c)
                idx = "XYZ".index(m.group(3))
                row[idx] = K.add(row[idx], c)
            rows.append(row)
        return cls(K, rows)

    def __eq__(self, other):
        return isinstance(other, ProjMatrix) and self.entries == other.entries

    def __hash__(self):
        return self._hash

    def __lt__(self, other):
        return self.key() < other.key()

    def key(self):
        K = self.field
        return tuple(K.encode(x) for r in self.entries for x in r)

    def __mul__(self, other: "ProjMatrix") -> "ProjMatrix":
        return ProjMatrix(self.field, _mat_mul(self.field, self.entries, other.entries))

    def inverse(self) -> "ProjMatrix":
        return ProjMatrix(self.field, _adjugate(self.field, self.entries))

    def __pow__(self, n: int) -> "ProjMatrix":
        if n < 0:
            return self.inverse() ** (-n)
        result = ProjMatrix.identity(self.field)
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def is_identity(self) -> bool:
        return self == ProjMatrix.identity(self.field)

    def order(self, limit: int = 100000) -> int:
        ident = ProjMatrix.identity(self.field)
        x = self
        for k in range(1, limit + 1):
            if x == ident:
                return k
            x = x * self
        raise GroupTooLarge("element order exceeds limit")

    def apply(self, v, L=None):
        K = self.field
        L = L or K
        emb = (lambda c: c) if L == K else L.base_embed
        return [
            L.add(L.add(L.mul(emb(r[0]), v[0]), L.mul(emb(r[1]), v[1])), L.mul(emb(r[2]), v[2]))
            for r in self.entries
        ]

    def __repr__(self):
        K = self.field
        return "ProjMatrix(" + "; ".join(" ".join(K.fmt(x) for x in r) for r in self.entries) + ")"


def _scalar(K, tok, scalars):
    base, _, exp = tok.partition("^")
    if base not in scalars:
        raise ValueError(f"unknown scalar {base!r}")
    v = scalars[base]
    return K.pow(v, int(exp)) if exp else v


@dataclass(frozen=True)
class GroupClosure:
    elements: frozenset

    @property
    def order(self) -> int:
        return len(self.elements)

    @property
    def order_histogram(self) -> dict:
        return dict(sorted(Counter(g.order() for g in self.elements).items()))

    def is_cyclic(self) -> bool:
        return self.order in self.order_histogram

    def exponent(self) -> int:
        out = 1
        for k in self.order_histogram:
            out = out * k // gcd(out, k)
        return out

    def __contains__(self, g):
        return g in self.elements

    def issubset(self, other: "GroupClosure") -> bool:
        return self.elements <= other.elements


def closure(gens, bound: int = 10000) -> GroupClosure:
    gens = list(gens)
    if not gens:
        raise ValueError("need at least one generator")
    ident = ProjMatrix.identity(gens[0].field)
    elems = {ident}
    frontier = [ident]
    while frontier:
        nxt = []
        for x in frontier:
            for g in gens:
                y = x * g
                if y not in elems:
                    elems.add(y)
                    nxt.append(y)
                    if len(elems) > bound:
                        raise GroupTooLarge(f"group exceeds {bound} elements")
        frontier = nxt
    return GroupClosure(frozenset(elems))


# ---------------------------------------------------------------------------
# explicit groups


def primitive_cube_root(K):
    return ff.root_of_unity(K, 3)


def hessian_generators(K) -> dict:
    """S, T, U, V generating the Hessian group of order 216 (needs 3 | p-1)."""
    w = primitive_cube_root(K)
    w2 = K.mul(w, w)
    S = ProjMatrix.diag(K, 1, w, w2)
    U = ProjMatrix.diag(K, 1, 1, w)
    T = ProjMatrix(K, ((0, 1, 0), (0, 0, 1), (1, 0, 0)))
    V = ProjMatrix(K, ((1, 1, 1), (1, w, w2), (1, w2, w)))
    return {"S": S, "T": T, "U": U, "V": V}


def hessian_groups(K) -> dict:
    g = hessian_generators(K)
    S, T, U, V = g["S"], g["T"], g["U"], g["V"]
    return {
        216: closure([S, T, U, V]),
        72: closure([S, T, V, U * V * U.inverse()]),
        36: closure([S, T, V]),
    }


_WORD_TOKEN = re.compile(r"\s*(?:(\()|(\))|([A-Za-z_]\w*))\s*(?:\^\s*\(?\s*(-?\d+)\s*\)?)?")


def parse_word(word: str):
    """Parse 's t^-3 (s t)^2' into nested (item, exponent) pairs.

    An item is a generator name or a list of pairs for a bracketed sub-word.
    """
    text = word.replace("*", " ").strip()
    stack: list = [[]]
    pos = 0
    while pos < len(text):
        m = _WORD_TOKEN.match(text, pos)
        if not m or m.end() == pos:
            raise ValueError(f"cannot parse word {word!r} at {text[pos:]!r}")
        pos = m.end()
        opening, closing, name, exp = m.groups()
        e = int(exp) if exp else 1
        if opening:
            if exp:
                raise ValueError(f"exponent after '(' in {word!r}")
            stack.append([])
        elif closing:
            if len(stack) == 1:
                raise ValueError(f"unbalanced ')' in {word!r}")
            inner = stack.pop()
            stack[-1].append((inner, e))
        else:
            stack[-1].append((name, e))
    if len(stack) != 1:
        raise ValueError(f"unbalanced '(' in {word!r}")
    return stack[0]


def _eval_parsed(gens, parsed, K):
    acc = ProjMatrix.identity(K)
    for item, e in parsed:
        if isinstance(item, list):
            g = _eval_parsed(gens, item, K)
        elif item in gens:
            g = gens[item]
        else:
            raise KeyError(f"undeclared generator {item!r}")
        acc = acc * g**e
    return acc


def eval_word(gens: dict, word: str) -> ProjMatrix:
    K = next(iter(gens.values())).field
    if word.strip() == "1":
        return ProjMatrix.identity(K)
    return _eval_parsed(gens, parse_word(word), K)


def verify_presentation(gens: dict, relations, order: int, bound: int = 100000) -> bool:
    """Relations hold projectively and the generated group has the given order.

    A relation is either a word equal to 1 or ``lhs = rhs``.
    """
    for rel in relations:
        lhs, _, rhs = rel.partition("=")
        rhs = rhs.strip() or "1"
        left = eval_word(gens, lhs)
        right = eval_word(gens, rhs)
        if left != right:
            return False
    try:
        return closure(list(gens.values()), bound=max(bound, order)).order == order
    except GroupTooLarge:
        return False


# ---------------------------------------------------------------------------
# monomial stabilizer


def _solve_linear_congruence(c, t, N):
    """Solutions of c*x = t (mod N) as (x0, step) or None."""
    c %= N
    t %= N
    g = gcd(c, N)
    if t % g:
        return None
    step = N // g
    if step == 1:
        return 0, 1
    x0 = (t // g) * pow(c // g, -1, step) % step
    return x0, step


def _intersect(a, b):
    """Intersect residue classes x = a0 mod a1 and x = b0 mod b1."""
    (x0, m), (y0, n) = a, b
    g = gcd(m, n)
    if (y0 - x0) % g:
        return None
    l = m // g * n
    if m == 1:
        return y0 % n, n
    k = ((y0 - x0) // g) * pow(m // g, -1, n // g) % (n // g) if n // g > 1 else 0
    return (x0 + m * k) % l, l


def _permutation_matrices(K):
    from itertools import permutations

    out = []
    for pi in permutations(range(3)):
        rows = [[0, 0, 0] for _ in range(3)]
        for r in range(3):
            rows[r][pi[r]] = 1
        out.append(ProjMatrix(K, rows))
    return out


def monomial_stabilizer(c) -> GroupClosure:
    """All (permutation) x diag(1, u, v) over F_p fixing the form up to scalar."""
    F = c.form if hasattr(c, "form") else c
    K = F.field
    if not isinstance(K, PrimeField):
        raise ValueError("monomial_stabilizer works over a prime field")
    N = K.p - 1
    found = set()
    for P in _permutation_matrices(K):
        G = apply_proj(F, P)
        if G.support != F.support:
            continue
        monos = list(F.terms)
        m0 = monos[0]
        # g_m u^j v^k = lam f_m  ->  (j-j0) U + (k-k0) V = log(f_m/g_m) - log(f0/g0)
        rhs = {mo: ff.discrete_log(K, K.mul(F.terms[mo], K.inv(G.terms[mo]))) for mo in monos}
        eqs = [(mo.j - m0.j, mo.k - m0.k, rhs[mo] - rhs[m0]) for mo in monos[1:]]
        for U in range(N):
            cls = (0, 1)
            for cj, ck, r in eqs:
                sol = _solve_linear_congruence(ck, r - cj * U, N)
                if sol is None:
                    cls = None
                    break
                cls = _intersect(cls, sol)
                if cls is None:
                    break
            if cls is None:
                continue
            v0, step = cls
            for V in range(v0 % step, N, step):
                D = ProjMatrix.diag(K, 1, K.exp(U), K.exp(V))
                M = P * D
                assert is_invariant(F, M) is not None
                found.add(M)
    return closure(found) if found else closure([ProjMatrix.identity(K)])


# ---------------------------------------------------------------------------
# exhaustive oracle


def hessian_form(F: HomPoly) -> HomPoly:
    """det of the matrix of second partials."""
    first = partials(F)
    H = [partials(g) for g in first]
    a, b, c = H[0]
    d_, e, f = H[1]
    g, h, i = H[2]
    return a * (e * i - f * h) - b * (d_ * i - f * g) + c * (d_ * h - e * g)


def invariant_point_set(F: HomPoly, e: int = 1):
    """Rational flexes over F_{p^e} when they contain a frame, else all rational points.

    Either set is preserved by every automorphism defined over F_{p^e}.
    """
    from . import _kernels

    L = ff.field_for(F.field.p, e)
    pts = _kernels.all_points(L.q)
    tab = _kernels.FieldTables(L)
    on = pts[_kernels.eval_form(F, pts, L, tab) == 0]
    H = hessian_form(F)
    if H:
        flex = on[_kernels.eval_form(H, on, L, tab) == 0]
        if _kernels.find_frame(flex, tab) is not None:
            return flex, L, "flexes"
    return on, L, "points"


def exhaustive_aut(c, e: int = 1, budget: int = 50_000_000, jobs: int = 1) -> GroupClosure:
    """Every M in PGL_3(F_{p^e}) with F(Mv) = lambda F(v), by frame enumeration.

    A projectivity is fixed by the images of four points in general position.
    Taking the frame inside a finite automorphism-invariant point set S, every
    automorphism is among the maps sending the frame to an ordered 4-tuple of
    S; candidates are screened by requiring S to map into itself.
    """
    from . import _kernels

    F = c.form if hasattr(c, "form") else c
    S, L, _ = invariant_point_set(F, e)
    n = len(S)
    if n ** 4 > budget:
        raise BudgetExceeded(f"{n}^4 candidate frames exceed the budget of {budget}")
    tab = _kernels.FieldTables(L)
    frame = _kernels.find_frame(S, tab)
    if frame is None:
        raise RuntimeError("invariant point set contains no projective frame")
    cands = _kernels.frame_search(S, frame, tab, jobs=jobs)
    FL = F.over(L)
    found = set()
    for codes in cands:
        rows = [[L.decode(int(codes[3 * r + s])) for s in range(3)] for r in range(3)]
        M = ProjMatrix(L, rows)
        if is_invariant(FL, M) is not None:
            found.add(M)
    # every automorphism over L permutes S, so the search already returns the
    # whole group; a few random products guard against a broken screen
    ident = ProjMatrix.identity(L)
    if ident not in found:
        raise AssertionError("identity was not found by the frame search")
    rng = random.Random(0)
    elems = sorted(found)
    for _ in range(min(50, len(elems) ** 2)):
        if rng.choice(elems) * rng.choice(elems) not in found:
            raise AssertionError("frame search result is not closed under products")
    return GroupClosure(frozenset(found))


def embed_matrix(M: ProjMatrix, L) -> ProjMatrix:
    if M.field == L:
        return M
    return ProjMatrix(L, [[L.base_embed(x) for x in r] for r in M.entries])


def fixes_point(M: ProjMatrix, pt: ProjPoint) -> bool:
    L = pt.field
    img = ProjPoint.make(M.apply(pt.coords, L), L)
    return img == pt
