"""Per-degree consistency checks behind ``planeaut verify``."""

from __future__ import annotations

import random
import time
from dataclasses import dataclass

from . import catalog, ff, quotient, strata
from .autgrp import ProjMatrix, exhaustive_aut, monomial_stabilizer
from .family import EquationFamily, FamilyExhausted, draw_params, sample_smooth, specialize
from .poly import HomPoly, Monomial, is_smooth
from .types import PERMS, FORCED_REDUCIBLE, _permute_support, case_bounds, classify, dedup, enumerate_types

# Row counts of the filtered tables.  For d = 8 the printed table has one row
# fewer: one of its rows merges two distinct families.
TABLE_SIZES = {4: 10, 5: 12, 6: 17, 7: 20, 8: 21, 9: 24}


@dataclass(frozen=True)
class Check:
    name: str
    expected: object
    got: object
    ok: bool
    note: str = ""

    def as_row(self) -> dict:
        return {
            "check": self.name,
            "expected": _plain(self.expected),
            "got": _plain(self.got),
            "ok": self.ok,
            "note": self.note,
        }


def _plain(x):
    if isinstance(x, (set, frozenset)):
        return sorted(_plain(v) for v in x)
    if isinstance(x, tuple):
        return [_plain(v) for v in x]
    return x


def _check(name, expected, got, note="") -> Check:
    return Check(name, expected, got, expected == got, note)


def canonical_support(support) -> tuple:
    return min(_permute_support(support, pi) for pi in PERMS)


def _support_text(support) -> str:
    return " + ".join(str(Monomial(*mo)) for mo in sorted(support, reverse=True))


# ---------------------------------------------------------------------------


def table_checks(d: int) -> list[Check]:
    out = []
    if d in TABLE_SIZES:
        note = "printed table merges two rows" if d == 8 else ""
        out.append(_check(f"d={d} filtered table size", TABLE_SIZES[d], len(classify(d)), note))
    bounds = set(case_bounds(d).values())
    bad = sorted({f.m for f in enumerate_types(d) if not any(b % f.m == 0 for b in bounds) or f.m > d * (d - 1)})
    out.append(_check(f"d={d} every order divides a case bound", [], bad))
    return out


def large_order_checks(d: int) -> list[Check]:
    out = []
    fams = dedup(enumerate_types(d))
    for m, support in catalog.large_order_supports(d).items():
        got = sorted({_support_text(canonical_support(f.monomials)) for f in fams if f.m == m})
        out.append(_check(f"d={d} order {m} support", [_support_text(canonical_support(support))], got))
    return out


def family_prime(d: int, m: int) -> int:
    """Prime with m | p - 1 and p above the resultant degree, so no extension is needed."""
    p = ff.select_prime(d, [m])
    while p <= (d - 1) ** 2 + 1 or not ff.is_prime(p):
        p += m
    return p


def smoothness_checks(d: int, trials: int = 20, seed: int = 0) -> list[Check]:
    """Every table family has a smooth member whose stabilizer contains the type."""
    missing, weak = [], []
    for tf in classify(d):
        fam = EquationFamily.from_type_family(tf)
        K = ff.field_for(family_prime(d, tf.m))
        try:
            c = sample_smooth(fam, K, trials=trials, seed=seed)
        except FamilyExhausted:
            missing.append(tf.ctype.label)
            continue
        if monomial_stabilizer(c).order % tf.m:
            weak.append(tf.ctype.label)
    out = [
        _check(f"d={d} smooth member in every family", [], missing),
        _check(f"d={d} stabilizer order divisible by m", [], weak),
    ]
    reducible = [f for f in dedup(enumerate_types(d)) if FORCED_REDUCIBLE in f.flags]
    smooth_reducible = []
    for tf in reducible:
        fam = EquationFamily.from_type_family(tf)
        K = ff.field_for(family_prime(d, tf.m))
        rng = random.Random(seed)
        for n in range(min(trials, 5)):
            c = specialize(fam, draw_params(fam, K, rng), K)
            if is_smooth(c.form, seed=n, witness=False):
                smooth_reducible.append(tf.ctype.label)
                break
    out.append(_check(f"d={d} forced-reducible families are singular", [], smooth_reducible))
    return out


def quintic_group_checks(seed: int = 0) -> list[Check]:
    K = ff.field_for(catalog.quintic_prime())
    out = []
    for row in catalog.QUINTIC_TABLE:
        F = catalog.generic_member(row, K, seed=seed)
        label = row.group + (f" ({row.note})" if row.note else "")
        out.append(_check(f"d=5 full group {label}", row.order, monomial_stabilizer(F).order))
    return out


def closure_checks(d: int) -> list[Check]:
    out = []
    if d == 4:
        from .autgrp import hessian_groups

        for k, g in hessian_groups(ff.field_for(13)).items():
            out.append(_check(f"Hessian group of order {k}", k, g.order))
    if d == 5:
        out.append(_check("Fermat quintic group", 150, catalog.fermat_quintic_group()[0].order))
        out.append(_check("Klein quintic group", 39, catalog.klein_quintic_group()[0].order))
        for pres in (catalog.quintic_order30(), catalog.quintic_klein39()):
            out.append(_check(f"presentation {pres.name}", True, pres.check()))
    if d >= 5:
        pres = catalog.klein_extension(d)
        out.append(_check(f"presentation of order {pres.order} on the Klein curve", True, pres.check()))
        pres = catalog.dihedral_extension(d)
        if d != 6:
            out.append(_check(f"presentation of order {pres.order} for X^d+Y^(d-1)Z+YZ^(d-1)", True, pres.check()))
        else:
            got = monomial_stabilizer(pres.curve).order
            note = "the full group of order 144 needs non-monomial generators"
            out.append(_check("d=6 monomial automorphisms of X^6+Y^5Z+YZ^5", pres.order, got, note))
    return out


def strata_checks(d: int) -> list[Check]:
    out = []
    if d % 2 == 1:
        r = strata.equation_components(d, d - 1)
        out.append(Check(f"d={d} components of order {d - 1} at least 2", ">= 2", r.count, r.count >= 2))
    if d == 5:
        out.append(_check("d=5 components of order 4", 2, strata.equation_components(5, 4).count))
        for m in (2, 3, 8, 10, 13, 15, 16, 20):
            out.append(_check(f"d=5 components of order {m}", 1, strata.equation_components(5, m).count))
        r = strata.equation_components(5, 5)
        out.append(Check("d=5 components of order 5 (raw)", 2, r.count, r.count == 2, "; ".join(r.annotations)))
    if d == 6:
        out.append(_check("d=6 components of order 3", 2, strata.equation_components(6, 3).count))
    return out


# ---------------------------------------------------------------------------
# quotient examples


def _first_smooth(K, support, rng, extra=lambda F: True, trials=200):
    for n in range(trials):
        F = HomPoly(5, {m: K.random(rng, nonzero=True) for m in support}, K)
        if is_smooth(F, seed=n) and extra(F):
            return F
    raise RuntimeError("no suitable smooth specialization")


def quotient_examples(seed: int = 0, max_degree: int = 2):
    """(name, curve, automorphism, expected g0, expected profile or None).

    Specializations are drawn so that every fixed point is defined over
    F_{p^e} with e <= max_degree, letting an exhaustive search confirm them.
    """
    K = ff.field_for(41)
    rng = random.Random(f"quotient:{seed}")
    i4 = ff.root_of_unity(K, 4)
    x8 = ff.root_of_unity(K, 8)

    def low_degree(M):
        def ok(F):
            try:
                return all(b.point.field.e <= max_degree for b in quotient.fixed_points(F, M))
            except ValueError:
                return False

        return ok

    M1 = ProjMatrix.diag(K, 1, 1, i4)
    c1_support = [(1, 0, 4), (0, 1, 4)] + [(5 - y, y, 0) for y in range(6)]
    C1 = _first_smooth(K, c1_support, rng, low_degree(M1))
    M8 = ProjMatrix.diag(K, 1, x8, K.pow(x8, 4))
    Z8 = HomPoly.parse("X^5+Y^4*Z+X*Z^4+3*X^3*Z^2", K)
    M2 = ProjMatrix.diag(K, 1, i4, K.pow(i4, 2))
    c2_support = [(5, 0, 0), (1, 0, 4), (1, 4, 0), (3, 0, 2), (2, 2, 1), (0, 2, 3)]

    C2 = None
    for n in range(200):
        # X^5 + X(Z^4 + Y^4) + free terms
        coeffs = {m: K.random(rng, nonzero=True) for m in c2_support}
        coeffs[(5, 0, 0)] = coeffs[(1, 0, 4)] = coeffs[(1, 4, 0)] = K.one
        F = HomPoly(5, coeffs, K)
        if is_smooth(F, seed=n) and low_degree(M2)(F):
            C2 = F
            break
    if C2 is None:
        raise RuntimeError("no suitable specialization of C2")
    return [
        ("C1 under diag(1,1,i)", C1, M1, 0, (4, 4, 4, 4, 4, 4)),
        ("order-8 curve under diag(1,z8,z8^4)", Z8, M8, 0, (8, 8, 4, 4)),
        ("C2 under diag(1,i,-1)", C2, M2, 1, (4, 4, 2, 2)),
    ]


def quotient_checks(seed: int = 0) -> list[Check]:
    out = []
    for name, F, M, g0, profile in quotient_examples(seed):
        pts = quotient.fixed_points(F, M)
        bd = quotient.branch_data(F, M, pts)
        out.append(_check(f"{name}: quotient genus", g0, quotient.hurwitz_quotient_genus(6, bd)))
        note = "four points off the axes have index 4, not 2" if bd.group_order == 8 else ""
        out.append(_check(f"{name}: ramification profile", profile, bd.profile, note))
        L = ff.field_for(F.field.p, 2)
        mine = {(quotient.lift_point(b.point, L).key(), b.stabilizer_order) for b in pts}
        oracle = {(b.point.key(), b.stabilizer_order) for b in quotient.fixed_points_exhaustive(F, M, 2)}
        out.append(_check(f"{name}: fixed points agree with exhaustive search", len(oracle), len(mine) if mine == oracle else -1))
    return out


# ---------------------------------------------------------------------------


def exhaustive_checks(d: int, budget: int, jobs: int = 1) -> list[Check]:
    out = []
    if d == 4:
        kl = catalog.klein(4, ff.field_for(11))
        out.append(_check("Klein quartic over F_11 (searched over F_11^3)", 168, exhaustive_aut(kl, 3, budget, jobs).order))
        fe = catalog.fermat(4, ff.field_for(13))
        out.append(_check("Fermat quartic over F_13", 96, exhaustive_aut(fe, 1, budget, jobs).order))
    if d == 6:
        # 150 rational points, so about 5 * 10^8 candidate frames
        F = catalog.dihedral_extension(6, ff.field_for(73)).curve
        G = exhaustive_aut(F, 1, budget, jobs)
        out.append(_check("X^6+Y^5Z+YZ^5 over F_73", 144, G.order, "slow: minutes even with several jobs"))
    return out


def run(d: int, seed: int = 0, trials: int = 20, exhaustive: bool = False, budget: int = 50_000_000, jobs: int = 1):
    """All checks for degree d with per-section timings."""
    if d < 4:
        raise ValueError("degree must be at least 4")
    sections = [
        ("tables", lambda: table_checks(d)),
        ("large orders", lambda: large_order_checks(d) if d >= 5 else []),
        ("smoothness", lambda: smoothness_checks(d, trials, seed)),
        ("closures", lambda: closure_checks(d)),
        ("strata", lambda: strata_checks(d)),
    ]
    if d == 5:
        sections.append(("quintic groups", lambda: quintic_group_checks(seed)))
        sections.append(("quotients", lambda: quotient_checks(seed)))
    if exhaustive:
        sections.append(("exhaustive", lambda: exhaustive_checks(d, budget, jobs)))
    checks, timings = [], {}
    for name, fn in sections:
        t = time.perf_counter()
        checks.extend(fn())
        timings[name] = round(time.perf_counter() - t, 3)
    return checks, timings
