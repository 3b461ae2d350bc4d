"""Named curves, explicit group presentations and the quintic full-group table."""

from __future__ import annotations

import random
from dataclasses import dataclass

from . import ff
from .autgrp import ProjMatrix, closure, hessian_groups, verify_presentation
from .poly import HomPoly, Monomial, is_smooth


def fermat(d: int, K) -> HomPoly:
    return HomPoly.from_ints(d, {(d, 0, 0): 1, (0, d, 0): 1, (0, 0, d): 1}, K)


def klein(d: int, K) -> HomPoly:
    return HomPoly.from_ints(d, {(d - 1, 1, 0): 1, (0, d - 1, 1): 1, (1, 0, d - 1): 1}, K)


def large_order_supports(d: int) -> dict:
    """The forced support for each of the four large orders."""
    return {
        d * (d - 1): {(d, 0, 0), (0, d, 0), (1, 0, d - 1)},
        (d - 1) ** 2: {(d, 0, 0), (0, d - 1, 1), (1, 0, d - 1)},
        d * (d - 2): {(d, 0, 0), (0, d - 1, 1), (0, 1, d - 1)},
        d * d - 3 * d + 3: {(d - 1, 1, 0), (0, d - 1, 1), (1, 0, d - 1)},
    }


# ---------------------------------------------------------------------------
# presentations


@dataclass(frozen=True)
class Presentation:
    name: str
    order: int
    gens: dict
    relations: tuple
    curve: HomPoly | None = None

    def check(self) -> bool:
        from .poly import is_invariant

        if self.curve is not None and any(is_invariant(self.curve, g) is None for g in self.gens.values()):
            return False
        return verify_presentation(self.gens, self.relations, self.order)


def dihedral_extension(d: int, K=None) -> Presentation:
    """<s, t | t^2 = s^(d(d-2)) = 1, t s t = s^-(d-1)> on X^d + Y^(d-1)Z + YZ^(d-1)."""
    n = d * (d - 2)
    K = K or ff.field_for(ff.select_prime(d, [n]))
    x = ff.root_of_unity(K, n)
    s = ProjMatrix.diag(K, 1, x, K.pow(x, -(d - 1)))
    t = ProjMatrix.from_images(K, "[X;Z;Y]")
    curve = HomPoly.from_ints(d, {(d, 0, 0): 1, (0, d - 1, 1): 1, (0, 1, d - 1): 1}, K)
    rels = ("t^2", f"s^{n}", f"t s t = s^{-(d - 1)}")
    return Presentation(f"order-{n} automorphism, d={d}", 2 * n, {"s": s, "t": t}, rels, curve)


def klein_extension(d: int, K=None) -> Presentation:
    """<s, t | s^(d^2-3d+3) = t^3 = 1, t s = s^-(d-1) t> on the Klein curve."""
    n = d * d - 3 * d + 3
    K = K or ff.field_for(ff.select_prime(d, [n, 3]))
    x = ff.root_of_unity(K, n)
    # equal weights on X^(d-1)Y, Y^(d-1)Z, Z^(d-1)X force b = 2 - d
    s = ProjMatrix.diag(K, 1, x, K.pow(x, (2 - d) % n))
    t = ProjMatrix.from_images(K, "[Y;Z;X]")
    rels = (f"s^{n}", "t^3", f"t s = s^{-(d - 1)} t")
    return Presentation(f"Klein curve, d={d}", 3 * n, {"s": s, "t": t}, rels, klein(d, K))


def quintic_order30(K=None) -> Presentation:
    K = K or ff.field_for(ff.select_prime(5, [15]))
    x = ff.root_of_unity(K, 15)
    s = ProjMatrix.from_images(K, "[X;x*Y;x^11*Z]", {"x": x})
    t = ProjMatrix.from_images(K, "[X;Z;Y]")
    curve = HomPoly.from_ints(5, {(5, 0, 0): 1, (0, 4, 1): 1, (0, 1, 4): 1}, K)
    return Presentation("SmallGroup(30, 1)", 30, {"s": s, "t": t}, ("t^2", "s^15", "(t s)^2 s^3"), curve)


def quintic_klein39(K=None) -> Presentation:
    K = K or ff.field_for(ff.select_prime(5, [13, 3]))
    x = ff.root_of_unity(K, 13)
    s = ProjMatrix.from_images(K, "[X;x*Y;x^10*Z]", {"x": x})
    t = ProjMatrix.from_images(K, "[Y;Z;X]")
    return Presentation("SmallGroup(39, 1)", 39, {"s": s, "t": t}, ("s^13", "t^3", "s t = t s^3"), klein(5, K))


def fermat_quintic_group(K=None):
    K = K or ff.field_for(ff.select_prime(5, [5]))
    x = ff.root_of_unity(K, 5)
    specs = ["[x*X;Y;Z]", "[X;x*Y;Z]", "[X;Z;Y]", "[Y;Z;X]"]
    gens = [ProjMatrix.from_images(K, s, {"x": x}) for s in specs]
    return closure(gens), fermat(5, K), gens


def klein_quintic_group(K=None):
    K = K or ff.field_for(ff.select_prime(5, [13]))
    x = ff.root_of_unity(K, 13)
    gens = [ProjMatrix.from_images(K, s, {"x": x}) for s in ("[X;x*Y;x^10*Z]", "[Y;Z;X]")]
    return closure(gens), klein(5, K), gens


def closure_checks(K3=None) -> list[tuple[str, int, int]]:
    """(name, expected, computed) for every explicit group in the catalog."""
    K3 = K3 or ff.field_for(13)
    out = [(f"Hessian group of order {k}", k, g.order) for k, g in hessian_groups(K3).items()]
    out.append(("Fermat quintic group", 150, fermat_quintic_group()[0].order))
    out.append(("Klein quintic group", 39, klein_quintic_group()[0].order))
    for pres in [dihedral_extension(d) for d in (5, 7, 8, 9)] + [quintic_order30(), klein_extension(5)]:
        out.append((pres.name, pres.order, pres.order if pres.check() else -1))
    return out


# ---------------------------------------------------------------------------
# quintic full automorphism groups


def _binary(j: int, k: int, name: str):
    """All monomials X^a Y^(j-a) Z^k with independent parameters name0, name1, ..."""
    return [((j - y, y, k), f"{name}{y}") for y in range(j + 1)]


@dataclass(frozen=True)
class QuinticRow:
    group: str
    order: int
    terms: tuple  # ((monomial, "1" or parameter name), ...)
    note: str = ""

    def specialize(self, K, rng: random.Random) -> tuple[HomPoly, dict]:
        values: dict = {}
        coeffs = {}
        for mono, tag in self.terms:
            if tag == "1":
                c = K.one
            else:
                if tag not in values:
                    values[tag] = K.random(rng, nonzero=True)
                c = values[tag]
            coeffs[Monomial(*mono)] = K.add(coeffs.get(Monomial(*mono), K.zero), c)
        return HomPoly(5, coeffs, K), values

    def excluded(self, values, K) -> bool:
        """Parameter values ruled out by the row's genericity conditions."""
        if self.group == "C_10":
            return values.get("a") == K.from_int(5) and values.get("b") == K.from_int(10)
        if self.group == "C_8":
            return values.get("b") in (K.from_int(2), K.from_int(-2))
        if self.group == "C_3":
            return values.get("c") == values.get("e")
        return False


QUINTIC_TABLE = (
    QuinticRow("SmallGroup(150, 5)", 150, (((5, 0, 0), "1"), ((0, 5, 0), "1"), ((0, 0, 5), "1"))),
    QuinticRow("SmallGroup(39, 1)", 39, (((4, 1, 0), "1"), ((0, 4, 1), "1"), ((1, 0, 4), "1"))),
    QuinticRow(
        "SmallGroup(30, 1)", 30, (((5, 0, 0), "1"), ((0, 4, 1), "1"), ((0, 1, 4), "1")), "alpha scaled to 1"
    ),
    QuinticRow("C_20", 20, (((5, 0, 0), "1"), ((0, 5, 0), "1"), ((1, 0, 4), "a"))),
    QuinticRow("C_16", 16, (((5, 0, 0), "1"), ((0, 4, 1), "1"), ((1, 0, 4), "a"))),
    QuinticRow("C_10", 10, (((5, 0, 0), "1"), ((0, 5, 0), "1"), ((1, 0, 4), "a"), ((3, 0, 2), "b"))),
    QuinticRow(
        "D_10",
        10,
        (((5, 0, 0), "1"), ((0, 5, 0), "1"), ((0, 0, 5), "1"), ((2, 1, 2), "b"), ((1, 3, 1), "c")),
    ),
    QuinticRow(
        "C_8", 8, (((5, 0, 0), "1"), ((0, 4, 1), "1"), ((1, 0, 4), "1"), ((3, 0, 2), "b")), "alpha scaled to 1"
    ),
    QuinticRow(
        "S_3",
        6,
        (
            ((5, 0, 0), "1"), ((0, 4, 1), "1"), ((0, 1, 4), "1"), ((3, 1, 1), "b"),
            ((2, 0, 3), "1"), ((2, 3, 0), "1"), ((1, 2, 2), "f"),
        ),
    ),
    QuinticRow("C_5", 5, (((0, 0, 5), "1"),) + tuple(_binary(5, 0, "l"))),
    QuinticRow(
        "C_4",
        4,
        (
            ((5, 0, 0), "1"), ((1, 0, 4), "1"), ((1, 4, 0), "a"), ((3, 0, 2), "b"),
            ((2, 2, 1), "c"), ((0, 2, 3), "e"),
        ),
        "type 4, (1, 2)",
    ),
    QuinticRow("C_4", 4, tuple(_binary(1, 4, "m")) + tuple(_binary(5, 0, "l")), "homology of order 4"),
    QuinticRow(
        "C_3",
        3,
        (
            ((5, 0, 0), "1"), ((0, 4, 1), "1"), ((0, 1, 4), "a"), ((3, 1, 1), "b"),
            ((2, 0, 3), "c"), ((2, 3, 0), "e"), ((1, 2, 2), "f"),
        ),
    ),
    QuinticRow("C_2", 2, tuple(_binary(1, 4, "m")) + tuple(_binary(3, 2, "n")) + tuple(_binary(5, 0, "l"))),
)


def quintic_prime() -> int:
    """A prime carrying every root of unity a quintic automorphism can need."""
    return ff.select_prime(5, [2, 3, 4, 5, 8, 10, 13, 15, 16, 20])


def generic_member(row: QuinticRow, K, seed: int = 0, trials: int = 50) -> HomPoly:
    """First smooth specialization that satisfies the row's stated conditions."""
    for n in range(trials):
        rng = random.Random(f"{row.group}:{row.note}:{seed}:{n}")
        F, values = row.specialize(K, rng)
        if row.excluded(values, K):
            continue
        if is_smooth(F, seed=n):
            return F
    raise RuntimeError(f"no smooth member for {row.group}")
