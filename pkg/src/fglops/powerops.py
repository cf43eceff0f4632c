"""Quadratic total power operations on one-variable classes.

A context fixes a two-variable series ring (line variable t first, the
auxiliary torsion variable z second), a formal group law F and a transfer
scalar tau.  The operation is generated by its value on the line generator,

    P(t) = t * F(t, z),

and extends to an arbitrary univariate series by multiplicativity together
with a transfer-corrected sum rule:

    P(sum_i a_i t^i) = sum_i a_i^2 P(t)^i + tau * sum_{i<j} a_i a_j t^(i+j).

Constants obey P(a) = a^2.  When F is additive and z carries 2-torsion the
transfer scalar is pinned to 2; restricted to z = 0 the operation is then
exactly the squaring map f |-> f^2.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Optional, Union

from .coefficients import Coefficient, IntegerRing, Ring, RingMismatch
from .fgl import FormalGroupLaw, additive_law
from .series import Series, SeriesRing, SeriesVar


@dataclass(frozen=True)
class PowerOpContext:
    """Everything needed to evaluate the quadratic power operation."""

    ring: SeriesRing
    law: FormalGroupLaw
    tau: Coefficient

    def __post_init__(self):
        if self.ring.nvars != 2:
            raise ValueError("a power operation context needs exactly two variables")
        if self.law.coeff_ring != self.ring.coeff_ring:
            raise RingMismatch("law and series ring must share a coefficient ring")
        tau = self.tau
        if isinstance(tau, int):
            tau = self.ring.coeff_ring.coefficient(tau)
            object.__setattr__(self, "tau", tau)
        if tau.ring != self.ring.coeff_ring:
            raise RingMismatch("transfer scalar must live in the coefficient ring")
        z_var = self.ring.variables[1]
        if self.law.is_additive and z_var.torsion == 2 and tau != 2:
            raise ValueError(
                "the transfer scalar is forced to 2 for the additive law with 2-torsion"
            )

    @property
    def t(self) -> Series:
        return self.ring.gen(self.ring.variables[0].name)

    @property
    def z(self) -> Series:
        return self.ring.gen(self.ring.variables[1].name)

    def generator_image(self) -> Series:
        """P(t) = t * F(t, z)."""
        return self.t * self.law.formal_sum(self.t, self.z)

    def power_op(self, f: Series) -> Series:
        """Apply the operation to a univariate series in the line variable."""
        if f.ring != self.ring:
            raise RingMismatch("input series must live in the context ring")
        entries = []
        for exps, coef in f.terms.items():
            if any(exps[1:]):
                raise ValueError(
                    "power operation input must be univariate in the line variable"
                )
            entries.append((exps[0], coef))
        entries.sort(key=lambda ec: ec[0])
        image = self.generator_image()
        powers = [self.ring.one]
        max_exp = entries[-1][0] if entries else 0
        for _ in range(max_exp):
            powers.append(powers[-1] * image)
        acc = self.ring.zero
        for e, a in entries:
            acc = acc + powers[e] * (a * a)
        for (i, a_i), (j, a_j) in combinations(entries, 2):
            cross = self.tau * a_i * a_j
            acc = acc + self.ring.monomial((i + j, 0), cross)
        return acc

    def transfer(self, a: Series) -> Series:
        """The transfer map, multiplication by the scalar tau."""
        if a.ring != self.ring:
            raise RingMismatch("transfer input must live in the context ring")
        return a * self.tau


def standard_ring(
    coeff_ring: Optional[Ring] = None,
    t_trunc: int = 5,
    z_trunc: int = 3,
    z_torsion: Optional[int] = 2,
    names=("t", "z"),
) -> SeriesRing:
    """The default two-variable quotient ring, C[[t,z]]/(2z, z^k, t^m)."""
    if coeff_ring is None:
        coeff_ring = IntegerRing()
    return SeriesRing(
        coeff_ring,
        (SeriesVar(names[0], t_trunc), SeriesVar(names[1], z_trunc, z_torsion)),
    )


def standard_context(
    coeff_ring: Optional[Ring] = None,
    t_trunc: int = 5,
    z_trunc: int = 3,
    law: Optional[FormalGroupLaw] = None,
    tau: Union[Coefficient, int] = 2,
) -> PowerOpContext:
    """The default context: additive law over the standard ring, tau = 2."""
    ring = standard_ring(coeff_ring, t_trunc, z_trunc)
    if law is None:
        law = additive_law(ring.coeff_ring)
    if isinstance(tau, int):
        tau = ring.coeff_ring.coefficient(tau)
    return PowerOpContext(ring, law, tau)
