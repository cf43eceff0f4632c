"""Formal group laws as validated bivariate truncated series.

A law is a series F(x, y) satisfying unitality (F(x,0) = x, F(0,y) = y),
commutativity and associativity up to the truncation degree.  Validation
reports the first violated axiom together with a witness monomial.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .coefficients import Ring, RingMismatch
from .series import Series, SeriesRing, SeriesVar

_AXIOM_LABELS = {
    "unit": "unitality",
    "comm": "commutativity",
    "assoc": "associativity",
}


class ViolatedAxiom(ValueError):
    """A formal group law axiom fails; carries the axiom and a witness monomial."""

    def __init__(self, axiom: str, monomial: str):
        self.axiom = axiom
        self.monomial = monomial
        super().__init__(f"{_AXIOM_LABELS[axiom]} fails at {monomial}")


def _witness(diff: Series) -> str:
    exps, _ = diff.items()[0]
    parts = [
        f"{v.name}^{e}" if e > 1 else v.name
        for v, e in zip(diff.ring.variables, exps)
        if e
    ]
    return "*".join(parts) if parts else "1"


@dataclass(frozen=True)
class FormalGroupLaw:
    """A validated formal group law over an exact coefficient ring."""

    coeff_ring: Ring
    degree: int
    series: Series
    name: Optional[str] = None

    @property
    def x_name(self) -> str:
        return self.series.ring.variables[0].name

    @property
    def y_name(self) -> str:
        return self.series.ring.variables[1].name

    @property
    def is_additive(self) -> bool:
        ring = self.series.ring
        return self.series == ring.gen(self.x_name) + ring.gen(self.y_name)

    @property
    def is_multiplicative(self) -> bool:
        ring = self.series.ring
        x, y = ring.gen(self.x_name), ring.gen(self.y_name)
        return self.series == x + y + x * y

    def formal_sum(self, f: Series, g: Series) -> Series:
        """F(f, g) for two series with zero constant term in a common ring."""
        if f.ring != g.ring:
            raise RingMismatch("formal sum arguments must share a ring")
        if f.constant_term() or g.constant_term():
            raise ValueError("formal sum arguments must have zero constant term")
        return self.series.substitute({self.x_name: f, self.y_name: g}, target=f.ring)

    def n_series(self, n: int) -> Series:
        """The n-fold formal sum [n](x), a univariate series in x."""
        if not isinstance(n, int) or n < 0:
            raise ValueError(f"n-series index must be a non-negative integer, got {n}")
        ring = SeriesRing(self.coeff_ring, (SeriesVar(self.x_name, self.degree),))
        x = ring.gen(self.x_name)
        acc = ring.zero
        for _ in range(n):
            acc = self.series.substitute(
                {self.x_name: x, self.y_name: acc}, target=ring
            )
        return acc

    def map_coefficients(self, coeff_ring: Ring, fn) -> "FormalGroupLaw":
        """The image law under a coefficient-ring homomorphism."""
        ring = SeriesRing(coeff_ring, self.series.ring.variables)
        return FormalGroupLaw(
            coeff_ring, self.degree, self.series.map_coefficients(ring, fn), self.name
        )

    def __str__(self):
        label = self.name or "fgl"
        return f"{label}: F({self.x_name},{self.y_name}) = {self.series}"


def validate_law(F: Series, name: Optional[str] = None) -> FormalGroupLaw:
    """Check the law axioms, returning the validated law or raising ViolatedAxiom."""
    ring = F.ring
    if ring.nvars != 2:
        raise ValueError("a formal group law is a series in exactly two variables")
    vx, vy = ring.variables
    if vx.trunc != vy.trunc:
        raise ValueError("both law variables must share one truncation degree")
    if vx.torsion is not None or vy.torsion is not None:
        raise ValueError("law variables must be torsion-free")
    degree = vx.trunc

    uni = SeriesRing(ring.coeff_ring, (SeriesVar(vx.name, degree),))
    x = uni.gen(vx.name)
    diff = F.substitute({vx.name: x, vy.name: uni.zero}, target=uni) - x
    if diff:
        raise ViolatedAxiom("unit", _witness(diff))
    uni_y = SeriesRing(ring.coeff_ring, (SeriesVar(vy.name, degree),))
    y = uni_y.gen(vy.name)
    diff = F.substitute({vx.name: uni_y.zero, vy.name: y}, target=uni_y) - y
    if diff:
        raise ViolatedAxiom("unit", _witness(diff))

    swapped = Series(ring, {(b, a): c for (a, b), c in F.terms.items()})
    diff = F - swapped
    if diff:
        raise ViolatedAxiom("comm", _witness(diff))

    third = "w" if "w" not in (vx.name, vy.name) else "w_"
    tri = SeriesRing(
        ring.coeff_ring,
        (SeriesVar(vx.name, degree), SeriesVar(vy.name, degree), SeriesVar(third, degree)),
    )
    tx, ty, tw = (tri.gen(v.name) for v in tri.variables)
    inner_xy = F.substitute({vx.name: tx, vy.name: ty}, target=tri)
    inner_yw = F.substitute({vx.name: ty, vy.name: tw}, target=tri)
    left = F.substitute({vx.name: inner_xy, vy.name: tw}, target=tri)
    right = F.substitute({vx.name: tx, vy.name: inner_yw}, target=tri)
    diff = left - right
    if diff:
        raise ViolatedAxiom("assoc", _witness(diff))

    return FormalGroupLaw(ring.coeff_ring, degree, F, name)


def additive_law(coeff_ring: Ring, degree: int = 20, names=("x", "y")) -> FormalGroupLaw:
    """F(x, y) = x + y."""
    ring = SeriesRing(
        coeff_ring, (SeriesVar(names[0], degree), SeriesVar(names[1], degree))
    )
    return validate_law(ring.gen(names[0]) + ring.gen(names[1]), name="additive")


def multiplicative_law(coeff_ring: Ring, degree: int = 20, names=("x", "y")) -> FormalGroupLaw:
    """F(x, y) = x + y + xy, the unit-normalized multiplicative law."""
    ring = SeriesRing(
        coeff_ring, (SeriesVar(names[0], degree), SeriesVar(names[1], degree))
    )
    x, y = ring.gen(names[0]), ring.gen(names[1])
    return validate_law(x + y + x * y, name="multiplicative")


def builtin_law(name: str, coeff_ring: Ring, degree: int = 20) -> FormalGroupLaw:
    if name == "additive":
        return additive_law(coeff_ring, degree)
    if name == "multiplicative":
        return multiplicative_law(coeff_ring, degree)
    raise ValueError(f"unknown built-in law {name!r}")
