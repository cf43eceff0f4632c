"""Total Chern class candidates and their values on sums of line bundles."""

from __future__ import annotations

from typing import Optional, Sequence, Union

from .coefficients import (
    Coefficient,
    IntegerModRing,
    IntegerRing,
    PolynomialRing,
    Ring,
    RingMismatch,
)
from .fgl import FormalGroupLaw, additive_law
from .series import Series, SeriesRing


class UnitViolation(ValueError):
    """The leading candidate coefficient is not a unit of the expected shape."""


def _is_single_indeterminate(coef: Coefficient) -> bool:
    ring = coef.ring
    if len(coef.value) != 1:
        return False
    exps, c = coef.value[0]
    return sum(exps) == 1 and ring.base.is_unit(c)


class ChernSeries:
    """A candidate class 1 + a1 x + ... + aD x^D with a1 a unit.

    Numeric integer candidates require a1 in {1, -1}; modular candidates
    require a1 to be a unit.  Symbolic candidates take a1 to be either a
    unit constant or a single indeterminate, with the convention a1 = 1
    mod 2 applied wherever torsion reduces coefficients.
    """

    __slots__ = ("coeff_ring", "coeffs")

    def __init__(
        self,
        coeffs: Sequence[Union[Coefficient, int]],
        coeff_ring: Optional[Ring] = None,
    ):
        coeffs = list(coeffs)
        if not coeffs:
            raise ValueError("a candidate class needs at least one coefficient")
        if coeff_ring is None:
            for c in coeffs:
                if isinstance(c, Coefficient):
                    coeff_ring = c.ring
                    break
            else:
                coeff_ring = IntegerRing()
        normalized = []
        for c in coeffs:
            if isinstance(c, Coefficient):
                if c.ring != coeff_ring:
                    raise RingMismatch("candidate coefficients must share one ring")
                normalized.append(c)
            else:
                normalized.append(coeff_ring.coefficient(c))
        a1 = normalized[0]
        if isinstance(coeff_ring, IntegerRing):
            if a1.value not in (1, -1):
                raise UnitViolation(f"a1 = {a1} must be 1 or -1")
        elif isinstance(coeff_ring, IntegerModRing):
            if not a1.is_unit():
                raise UnitViolation(f"a1 = {a1} is not a unit in {coeff_ring}")
        elif isinstance(coeff_ring, PolynomialRing):
            constant = len(a1.value) <= 1 and (
                not a1.value or sum(a1.value[0][0]) == 0
            )
            if constant:
                if not a1.is_unit():
                    raise UnitViolation(f"a1 = {a1} is not a unit in {coeff_ring}")
            elif not _is_single_indeterminate(a1):
                raise UnitViolation(
                    f"symbolic a1 must be a single indeterminate, got {a1}"
                )
        self.coeff_ring = coeff_ring
        self.coeffs = tuple(normalized)

    @classmethod
    def symbolic(
        cls, degree: int, base: Optional[Ring] = None, prefix: str = "a"
    ) -> "ChernSeries":
        """The generic candidate with indeterminate coefficients a1..aD."""
        if not isinstance(degree, int) or degree < 1:
            raise ValueError("symbolic degree must be a positive integer")
        if base is None:
            base = IntegerRing()
        ring = PolynomialRing(base, tuple(f"{prefix}{i}" for i in range(1, degree + 1)))
        return cls(list(ring.gens()), ring)

    @property
    def degree(self) -> int:
        return len(self.coeffs)

    @property
    def is_generic_symbolic(self) -> bool:
        ring = self.coeff_ring
        if not isinstance(ring, PolynomialRing) or ring.nvars != self.degree:
            return False
        return all(self.coeffs[i] == ring.gen(ring.names[i]) for i in range(self.degree))

    def coefficient(self, i: int) -> Coefficient:
        """The coefficient a_i, 1-based."""
        if not 1 <= i <= self.degree:
            raise ValueError(f"coefficient index {i} out of range 1..{self.degree}")
        return self.coeffs[i - 1]

    def value_at(self, root: Series) -> Series:
        """Evaluate 1 + a1*root + ... + aD*root^D in the root's ring."""
        ring = root.ring
        if ring.coeff_ring != self.coeff_ring:
            raise RingMismatch("root ring coefficients differ from candidate coefficients")
        acc = ring.constant(self.coeffs[-1])
        for c in reversed(self.coeffs[:-1]):
            acc = acc * root + ring.constant(c)
        return acc * root + ring.one

    def __repr__(self):
        body = " + ".join(f"({c})*x^{i}" for i, c in enumerate(self.coeffs, start=1))
        return f"ChernSeries(1 + {body})"


def chern_of_line_sum(
    r: ChernSeries,
    roots: Sequence[Series],
    signs: Sequence[int],
    ring: Optional[SeriesRing] = None,
) -> Series:
    """Whitney product of r over Chern roots; negative signs divide."""
    if len(roots) != len(signs):
        raise ValueError("roots and signs must have equal length")
    if any(s not in (1, -1) for s in signs):
        raise ValueError("signs must be +1 or -1")
    if not roots:
        if ring is None:
            raise ValueError("a target ring is required for the empty sum")
        return ring.one
    acc = roots[0].ring.one
    for root, sign in zip(roots, signs):
        value = r.value_at(root)
        acc = acc * (value if sign == 1 else value.invert())
    return acc


def computation_one(
    r: ChernSeries, ring: SeriesRing, law: Optional[FormalGroupLaw] = None
) -> Series:
    """The class r(t +_F z) * r(t) / r(z) in a two-variable quotient ring.

    The first ring variable is the line coordinate t, the second the
    torsion coordinate z; the law defaults to additive, making the tensor
    root t + z.
    """
    if ring.nvars < 2:
        raise ValueError("computation_one needs a ring with two variables")
    if law is None:
        law = additive_law(ring.coeff_ring)
    t = ring.gen(ring.variables[0].name)
    z = ring.gen(ring.variables[1].name)
    tensor_root = law.formal_sum(t, z)
    return chern_of_line_sum(r, [tensor_root, t, z], [1, 1, -1])
