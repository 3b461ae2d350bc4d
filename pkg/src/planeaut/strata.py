"""Equation components of the loci of smooth plane curves with a cyclic automorphism."""

from __future__ import annotations

from dataclasses import dataclass, field

from .types import FAILS_NECESSARY, FORCED_REDUCIBLE, CyclicType, dedup, enumerate_types

# Types whose generic member always carries a strictly larger group that also
# contains a second, non-conjugate cyclic subgroup of the same order.  The raw
# count lists them separately; whether the two loci merge is a proof question.
_KNOWN_COLLAPSES = {
    (5, 5): "type 5, (1, 2) curves also have the reflection [Z; Y; X]; "
    "the two raw types may describe a single component",
}


@dataclass(frozen=True)
class StratumReport:
    """Lower-bound certificate for the number of equation components of order-m strata."""

    d: int
    m: int
    component_types: tuple
    annotations: tuple = field(default=())

    @property
    def count(self) -> int:
        return len(self.component_types)

    @property
    def es_irreducible_candidate(self) -> bool:
        return self.count == 1

    def labels(self) -> list[str]:
        return [t.label for t in self.component_types]


def equation_components(d: int, m: int) -> StratumReport:
    """Surviving cyclic types of exact order m, one per conjugacy class of subgroup."""
    if m < 2:
        raise ValueError("m must be at least 2")
    fams = [
        f
        for f in dedup(enumerate_types(d))
        if f.m == m and not f.flags & {FORCED_REDUCIBLE, FAILS_NECESSARY}
    ]
    by_group: dict = {}
    for f in sorted(fams, key=lambda f: (f.ctype.a != 0, f.ctype.a, f.ctype.b)):
        by_group.setdefault(f.ctype.group_key(), f.ctype)
    types = tuple(sorted(by_group.values(), key=lambda t: (t.a != 0, t.a, t.b)))
    notes = (_KNOWN_COLLAPSES[(d, m)],) if (d, m) in _KNOWN_COLLAPSES and len(types) > 1 else ()
    return StratumReport(d, m, types, notes)


def all_strata(d: int) -> list[StratumReport]:
    orders = sorted({f.m for f in enumerate_types(d)})
    return [r for r in (equation_components(d, m) for m in orders) if r.count]


def parse_type(d: int, text: str) -> CyclicType:
    """'8,1,4' or '8,(1,4)' -> CyclicType."""
    nums = [int(x) for x in text.replace("(", " ").replace(")", " ").replace(",", " ").split()]
    if len(nums) != 3:
        raise ValueError(f"expected m,a,b in {text!r}")
    return CyclicType(d, *nums)
