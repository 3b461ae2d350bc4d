"""Cyclic types m,(a,b) and their invariant monomial families."""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from itertools import permutations
from math import gcd

from .poly import Monomial, monomials

PERMS = tuple(permutations(range(3)))

FORCED_REDUCIBLE = "forced_reducible"
FAILS_NECESSARY = "fails_nonsingularity_necessary_condition"
SUBSUMED = "subsumed_descendant"


@dataclass(frozen=True, order=True)
class CyclicType:
    """diag(1, xi_m^a, xi_m^b) acting on degree-d curves."""

    d: int
    m: int
    a: int
    b: int

    def __post_init__(self):
        m, a, b = self.m, self.a, self.b
        if m < 2 or not (0 <= a < m and 0 <= b < m):
            raise ValueError(f"bad type {m},({a},{b})")
        if a == b:
            raise ValueError("a and b must differ")
        if a == 0 and gcd(b, m) != 1:
            raise ValueError("a = 0 requires gcd(b, m) = 1")
        if a * b and gcd(a, b) != 1:
            raise ValueError("a, b nonzero requires gcd(a, b) = 1")

    def weight(self, mono) -> int:
        mono = Monomial(*mono)
        if mono.degree != self.d:
            raise ValueError(f"{mono} has degree {mono.degree}, expected {self.d}")
        return (self.a * mono.j + self.b * mono.k) % self.m

    @property
    def label(self) -> str:
        return f"{self.m}, ({self.a}, {self.b})"

    @property
    def is_homology(self) -> bool:
        return self.a == 0

    def group_key(self):
        return group_key(self.m, self.a, self.b)


def invariant_monomials(t: CyclicType, c: int) -> frozenset:
    if not 0 <= c < t.m:
        raise ValueError("weight class out of range")
    return frozenset(mono for mono in monomials(t.d) if t.weight(mono) == c)


def case_bounds(d: int) -> dict[str, int]:
    return {
        "1": d - 1,
        "2": d,
        "3": d * d - 3 * d + 3,
        "4.1": d * (d - 2),
        "4.2": (d - 1) ** 2,
        "4.3": d - 1,
        "5": d * (d - 1),
        "6": d,
    }


def divisor_bound(d: int, m: int) -> tuple[int, ...]:
    if m < 1:
        raise ValueError("m must be positive")
    vals = {d - 1, d, d * d - 3 * d + 3, (d - 1) ** 2, d * (d - 2), d * (d - 1)}
    return tuple(sorted(v for v in vals if v % m == 0))


def gamma(m: int):
    """(a, b) with 1 <= a != b <= m-1 and gcd(a, b) = 1."""
    return [(a, b) for a in range(1, m) for b in range(1, m) if a != b and gcd(a, b) == 1]


def _divisors(n: int):
    return [k for k in range(2, n + 1) if n % k == 0]


def _case_solutions(d: int, case: str, m: int):
    """(a, b, weight class) triples allowed by the given case."""
    if case in ("1", "2"):
        return [(0, 1, 0)]
    out = []
    for a, b in gamma(m):
        if case == "3":
            ok = (a - ((d - 1) * a + b)) % m == 0 and (a - (d - 1) * b) % m == 0
            cls = a % m
        elif case == "4.1":
            ok = ((d - 1) * a + b) % m == 0 and (a + (d - 1) * b) % m == 0
            cls = 0
        elif case == "4.2":
            ok = ((d - 1) * a + b) % m == 0 and ((d - 1) * b) % m == 0
            cls = 0
        elif case == "4.3":
            ok = ((d - 1) * a) % m == 0 and ((d - 1) * b) % m == 0
            cls = 0
        elif case == "5":
            ok = (d * a) % m == 0 and ((d - 1) * b) % m == 0
            cls = 0
        elif case == "6":
            ok = (d * a) % m == 0 and (d * b) % m == 0
            cls = 0
        else:
            raise ValueError(case)
        if ok:
            out.append((a, b, cls))
    return out


@dataclass(frozen=True)
class TypeFamily:
    ctype: CyclicType
    case_tag: str
    monomials: frozenset
    flags: frozenset = field(default_factory=frozenset)

    @property
    def d(self):
        return self.ctype.d

    @property
    def m(self):
        return self.ctype.m

    def sorted_monomials(self):
        return sorted(self.monomials, key=lambda mo: (-mo.i, -mo.j))

    def with_flags(self, extra) -> "TypeFamily":
        return TypeFamily(self.ctype, self.case_tag, self.monomials, self.flags | frozenset(extra))

    def key(self):
        return family_key(self.ctype.m, self.ctype.a, self.ctype.b, self.monomials)


def support_flags(d: int, support) -> frozenset:
    flags = set()
    for v in range(3):
        if all(mono[v] > 0 for mono in support):
            flags.add(FORCED_REDUCIBLE)
        if max(mono[v] for mono in support) < d - 1:
            flags.add(FAILS_NECESSARY)
    return frozenset(flags)


def enumerate_types(d: int) -> list[TypeFamily]:
    """Every (case, m, (a, b)) solution with its invariant family, before dedup."""
    if d < 4:
        raise ValueError("degree must be at least 4")
    out = []
    for case, bound in case_bounds(d).items():
        for m in _divisors(bound):
            for a, b, cls in _case_solutions(d, case, m):
                t = CyclicType(d, m, a, b)
                supp = invariant_monomials(t, cls)
                out.append(TypeFamily(t, case, supp, support_flags(d, supp)))
    return out


# ---------------------------------------------------------------------------
# equivalence of types and families


def _permute_exponents(m, a, b, perm):
    e = (0, a, b)
    ep = [e[perm[t]] for t in range(3)]
    return (ep[1] - ep[0]) % m, (ep[2] - ep[0]) % m


def _canon_generator(m, a, b):
    return min(((k * a) % m, (k * b) % m) for k in range(1, m) if gcd(k, m) == 1)


@lru_cache(maxsize=None)
def group_key(m: int, a: int, b: int):
    """Invariant of the cyclic subgroup <diag(1, xi^a, xi^b)> up to permutation."""
    return (m,) + min(_canon_generator(m, *_permute_exponents(m, a, b, pi)) for pi in PERMS)


def _permute_support(support, perm):
    return tuple(sorted(tuple(mono[perm[t]] for t in range(3)) for mono in support))


def family_key(m, a, b, support):
    return min(
        (m, _permute_support(support, pi), _canon_generator(m, *_permute_exponents(m, a, b, pi)))
        for pi in PERMS
    )


def dedup(families: list[TypeFamily]) -> list[TypeFamily]:
    """One representative per class, chosen with the smallest (m, a, b)."""
    best: dict = {}
    for fam in families:
        k = fam.key()
        cur = best.get(k)
        t = fam.ctype
        if cur is None or (t.m, t.a, t.b, fam.case_tag) < (cur.ctype.m, cur.ctype.a, cur.ctype.b, cur.case_tag):
            best[k] = fam
    return sort_families(best.values())


def sort_families(fams):
    return sorted(fams, key=lambda f: (-f.m, f.ctype.a == 0, f.ctype.a, f.ctype.b, sorted(f.monomials)))


def support_core_kind(d: int, support) -> str:
    """'fermat', 'klein' or 'other' for the top-exponent part of a support."""
    top = max(mo.exponent for mo in support)
    core = {tuple(mo) for mo in support if mo.exponent == top}
    fermat = {(d, 0, 0), (0, d, 0), (0, 0, d)}
    klein = {(d - 1, 1, 0), (0, d - 1, 1), (1, 0, d - 1)}
    for pi in PERMS:
        img = {tuple(mo[pi[t]] for t in range(3)) for mo in core}
        if img == fermat:
            return "fermat"
        if img == klein:
            return "klein"
    return "other"


def _subgroup_type(m_big, a, b, m):
    return group_key(m, a % m, b % m)


def mark_subsumed(families: list[TypeFamily]) -> list[TypeFamily]:
    """Flag non-homology Fermat/Klein descendants whose group sits inside a larger one.

    Such a family has the same core as a family with a strictly larger cyclic
    group containing it, so the table lists only the larger type.
    """
    info = [(f, support_core_kind(f.d, f.monomials)) for f in families]
    out = []
    for f, kind in info:
        t = f.ctype
        hidden = False
        if t.a != 0 and kind != "other":
            gk = t.group_key()
            for g, kind2 in info:
                s = g.ctype
                if kind2 == kind and s.a != 0 and s.m > t.m and s.m % t.m == 0:
                    if _subgroup_type(s.m, s.a, s.b, t.m) == gk:
                        hidden = True
                        break
        out.append(f.with_flags([SUBSUMED]) if hidden else f)
    return out


@lru_cache(maxsize=None)
def _classified(d: int) -> tuple:
    return tuple(mark_subsumed(dedup(enumerate_types(d))))


def classify(d: int, filtered: bool = True) -> list[TypeFamily]:
    """The deduplicated table for degree d; filtered drops every flagged family."""
    fams = list(_classified(d))
    if filtered:
        fams = [f for f in fams if not f.flags]
    return fams


def table_unfiltered(d: int) -> list[TypeFamily]:
    """Table view that keeps reducible/degenerate families but still hides subsumed ones."""
    return [f for f in _classified(d) if SUBSUMED not in f.flags]
