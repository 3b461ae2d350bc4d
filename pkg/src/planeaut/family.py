"""Parametric equation families and their specializations over F_p."""

from __future__ import annotations

import enum
import random
from dataclasses import dataclass, field
from typing import Mapping

from . import ff
from .ff import PrimeField
from .poly import HomPoly, Monomial, core, is_invariant, is_smooth
from .types import CyclicType, TypeFamily, support_core_kind


class CoefficientKind(enum.Enum):
    UNIT = "unit"
    NONZERO = "alpha"
    FREE = "beta"


class CoreKind(enum.Enum):
    FERMAT = "fermat"
    KLEIN = "klein"
    OTHER = "other"


class FamilyExhausted(RuntimeError):
    """No smooth specialization found within the allotted trials."""


def mono_name(mono: Monomial) -> str:
    return str(Monomial(*mono))


@dataclass(frozen=True)
class EquationFamily:
    ctype: CyclicType
    entries: tuple  # ((Monomial, CoefficientKind), ...)

    @classmethod
    def from_type_family(cls, tf: TypeFamily) -> "EquationFamily":
        d = tf.d
        top = max(mo.exponent for mo in tf.monomials)
        entries = []
        for mo in tf.sorted_monomials():
            if mo.exponent == top:
                kind = CoefficientKind.UNIT
            elif mo.exponent >= d - 1:
                kind = CoefficientKind.NONZERO
            else:
                kind = CoefficientKind.FREE
            entries.append((mo, kind))
        return cls(tf.ctype, tuple(entries))

    @property
    def d(self):
        return self.ctype.d

    @property
    def support(self) -> frozenset:
        return frozenset(mo for mo, _ in self.entries)

    def slots(self, kind: CoefficientKind):
        return [mo for mo, k in self.entries if k is kind]

    def shorthand(self) -> str:
        """Human-readable equation with full coordinate lines collapsed to L_{j,Z}."""
        return render_family(self)


@dataclass(frozen=True)
class PlaneCurve:
    form: HomPoly
    family: EquationFamily | None = None
    params: tuple = field(default=(), compare=False)

    @property
    def d(self):
        return self.form.d

    @property
    def field(self):
        return self.form.field

    def __str__(self):
        return str(self.form)


def _resolve_params(fam: EquationFamily, params: Mapping) -> dict:
    """Map user parameters (alpha/beta shortcuts or monomial names) onto slots."""
    by_name = {mono_name(mo): mo for mo, _ in fam.entries}
    values: dict = {}
    alphas = fam.slots(CoefficientKind.NONZERO)
    betas = fam.slots(CoefficientKind.FREE)
    for key, val in params.items():
        if isinstance(key, tuple):
            values[Monomial(*key)] = val
        elif key == "alpha":
            for mo in alphas:
                values.setdefault(mo, val)
        elif key == "beta":
            for mo in betas:
                values.setdefault(mo, val)
        elif key in by_name:
            values[by_name[key]] = val
        else:
            raise KeyError(f"unknown parameter {key!r}; slots are {sorted(by_name)}")
    return values


def specialize(fam: EquationFamily, params: Mapping, F: PrimeField) -> PlaneCurve:
    """Concrete curve; missing free parameters default to 0."""
    values = _resolve_params(fam, params)
    terms = {}
    for mo, kind in fam.entries:
        if kind is CoefficientKind.UNIT:
            if mo in values and F.from_int(values[mo]) != 1:
                raise ValueError(f"unit slot {mono_name(mo)} must be 1")
            terms[mo] = F.one
        elif kind is CoefficientKind.NONZERO:
            if mo not in values:
                raise ValueError(f"missing nonzero parameter for {mono_name(mo)}")
            c = F.from_int(values[mo])
            if c == 0:
                raise ValueError(f"parameter for {mono_name(mo)} must be nonzero")
            terms[mo] = c
        else:
            terms[mo] = F.from_int(values.get(mo, 0))
    extra = set(values) - set(terms)
    if extra:
        raise KeyError(f"parameters outside the family support: {sorted(map(mono_name, extra))}")
    form = HomPoly(fam.d, terms, F)
    check_invariance(form, fam.ctype)
    assigned = tuple(sorted((mono_name(m), F.from_int(v)) for m, v in values.items()))
    return PlaneCurve(form, fam, assigned)


def check_invariance(form: HomPoly, t: CyclicType):
    """Assert the form is fixed up to scalar by the type's diagonal map."""
    weights = {t.weight(mo) for mo in form.terms}
    if len(weights) > 1:
        raise AssertionError(f"form mixes weight classes {sorted(weights)} under {t.label}")
    F = form.field
    if (F.q - 1) % t.m == 0:
        from .autgrp import ProjMatrix

        xi = ff.root_of_unity(F, t.m)
        M = ProjMatrix.diag(F, 1, F.pow(xi, t.a), F.pow(xi, t.b))
        if is_invariant(form, M) is None:
            raise AssertionError(f"form is not invariant under {t.label}")


def draw_params(fam: EquationFamily, F: PrimeField, rng: random.Random) -> dict:
    out = {}
    for mo, kind in fam.entries:
        if kind is CoefficientKind.NONZERO:
            out[mo] = F.random(rng, nonzero=True)
        elif kind is CoefficientKind.FREE:
            out[mo] = F.random(rng)
    return out


def sample_smooth(fam: EquationFamily, F: PrimeField, trials: int = 20, seed: int = 0) -> PlaneCurve:
    """First smooth specialization among `trials` reproducible draws."""
    if trials < 1:
        raise ValueError("trials must be positive")
    for n in range(trials):
        rng = random.Random(f"{seed}:{n}")
        curve = specialize(fam, draw_params(fam, F, rng), F)
        if is_smooth(curve.form, seed=n):
            return curve
    raise FamilyExhausted(f"no smooth member of {fam.ctype.label} in {trials} trials over F_{F.p}")


def z8_member(beta: int, F: PrimeField) -> PlaneCurve:
    """X^5 + Y^4Z + XZ^4 + beta X^3Z^2, the quintics with an automorphism of order 8."""
    return specialize(family_for(CyclicType(5, 8, 1, 4)), {"alpha": 1, "beta": beta}, F)


def z8_beta_symmetry(F: PrimeField):
    """diag(1, z, z^12) with z of order 16, carrying the beta member to the -beta member.

    So beta and -beta give isomorphic curves; this is the only parameter
    identification the package asserts.
    """
    from .autgrp import ProjMatrix

    z = ff.root_of_unity(F, 16)
    return ProjMatrix.diag(F, 1, z, F.pow(z, 12))


def is_forced_reducible(fam) -> bool:
    support = fam.support if isinstance(fam, EquationFamily) else fam.monomials
    return any(all(mo[v] > 0 for mo in support) for v in range(3))


def descendant_core(c: PlaneCurve | HomPoly) -> CoreKind:
    form = c.form if isinstance(c, PlaneCurve) else c
    kind = support_core_kind(form.d, core(form).support)
    return CoreKind(kind)


# ---------------------------------------------------------------------------
# rendering


def _coef_label(mo: Monomial, kind: CoefficientKind, d: int) -> str:
    if kind is CoefficientKind.UNIT:
        return ""
    if kind is CoefficientKind.NONZERO:
        return "α"
    return f"β_{{{d - mo.i},{mo.j}}}"


def render_family(fam: EquationFamily) -> str:
    """Equation text; homology families use Z^k L_{j,Z} for complete coordinate lines."""
    d = fam.d
    kinds = dict(fam.entries)
    parts = []
    if fam.ctype.a == 0:
        by_k: dict = {}
        for mo in kinds:
            by_k.setdefault(mo.k, []).append(mo)
        for k in sorted(by_k, reverse=True):
            monos = by_k[k]
            j = d - k
            if j > 0 and len(monos) == j + 1:
                parts.append(("" if k == 0 else ("Z" if k == 1 else f"Z^{k}")) + f"L_{{{j},Z}}")
            else:
                parts.extend(_coef_label(mo, kinds[mo], d) + str(mo) for mo in monos)
        return " + ".join(parts)
    for mo, kind in fam.entries:
        parts.append(_coef_label(mo, kind, d) + str(mo))
    return " + ".join(parts)


def family_for(t: CyclicType, monomials=None) -> EquationFamily:
    """Look up the family of a type in the classification of its degree."""
    from .types import dedup, enumerate_types

    fams = dedup(enumerate_types(t.d))
    exact = [f for f in fams if f.ctype == t]
    if monomials is not None:
        exact = [f for f in exact if f.monomials == frozenset(monomials)]
    if not exact:
        # same (m, a, b) emitted under another representative of its class
        exact = [f for f in enumerate_types(t.d) if f.ctype == t]
    if not exact:
        raise KeyError(f"no family of type {t.label} in degree {t.d}")
    pref = [f for f in exact if not f.flags] or exact
    return EquationFamily.from_type_family(pref[0])
