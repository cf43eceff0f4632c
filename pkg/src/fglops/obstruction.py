"""Compatibility defect of a candidate class against the power operation.

For a candidate r the defect is the exact difference

    delta(r) = r(t +_F z) * r(t) - P(r(t)) * r(z)

computed in the two-variable quotient ring, where torsion normalization
removes everything divisible by the torsion order automatically.  For a
generic symbolic candidate, the coefficient of each z-positive monomial is
reduced to a multilinear polynomial over F2 (integer values satisfy
a^2 = a mod 2); each nonzero reduction is a relation every viable candidate
must satisfy.  The exhaustive search evaluates the defect at every integer
candidate with a1 = 1 and remaining coefficients in {0, 1}, which covers all
integer candidates because z-positive coefficients only depend on the a_i
mod 2, and certifies the verdict with one failing monomial per candidate.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Optional

from .coefficients import (
    Coefficient,
    IntegerModRing,
    IntegerRing,
    PolynomialRing,
    RingMismatch,
)
from .chern import ChernSeries
from .powerops import PowerOpContext
from .series import Series, SeriesRing


def delta(r: ChernSeries, ring: SeriesRing, ctx: PowerOpContext) -> Series:
    """The exact defect series of the candidate r."""
    if ring != ctx.ring:
        raise RingMismatch("context ring differs from the requested ring")
    t = ring.gen(ring.variables[0].name)
    z = ring.gen(ring.variables[1].name)
    tensor_root = ctx.law.formal_sum(t, z)
    lhs = r.value_at(tensor_root) * r.value_at(t)
    rhs = ctx.power_op(r.value_at(t)) * r.value_at(z)
    return lhs - rhs


def multilinear_mod2(coef: Coefficient) -> Coefficient:
    """Reduce a polynomial coefficient to its multilinear form over F2.

    Base coefficients are taken mod 2 and indeterminate exponents capped at
    one, the normal form of the induced function on integer points mod 2.
    """
    ring = coef.ring
    if not isinstance(ring, PolynomialRing):
        raise ValueError("multilinear reduction needs polynomial coefficients")
    target = PolynomialRing(IntegerModRing(2), ring.names)
    acc: dict = {}
    for exps, c in coef.value:
        key = tuple(1 if e else 0 for e in exps)
        acc[key] = acc.get(key, 0) + int(c)
    return Coefficient(target, acc)


def _relations_from_delta(defect: Series) -> list:
    out = []
    for exps, coef in defect.items():
        if exps[1] == 0:
            continue
        reduced = multilinear_mod2(coef)
        if not reduced.is_zero():
            out.append((exps, reduced))
    out.sort(key=lambda item: (item[0][1], item[0][0]))
    return out


def extract_relations(r: ChernSeries, ring: SeriesRing, ctx: PowerOpContext) -> list:
    """Relations on the a_i from z-positive coefficients of the defect.

    Requires the generic symbolic candidate; returns (monomial exponents,
    multilinear F2 polynomial) pairs ordered by (z-degree, t-degree).
    """
    if not r.is_generic_symbolic:
        raise ValueError("relation extraction needs the generic symbolic candidate")
    return _relations_from_delta(delta(r, ring, ctx))


def _symbolic_twin(ctx: PowerOpContext, degree: int):
    """Rebuild the context over Z[a1..aD] and the generic candidate for it."""
    candidate = ChernSeries.symbolic(degree, IntegerRing())
    poly_ring = candidate.coeff_ring
    sym_series_ring = SeriesRing(poly_ring, ctx.ring.variables)
    lift = lambda c: poly_ring.coefficient(int(c.value))
    sym_law = ctx.law.map_coefficients(poly_ring, lift)
    sym_tau = poly_ring.coefficient(int(ctx.tau.value))
    sym_ctx = PowerOpContext(sym_series_ring, sym_law, sym_tau)
    return candidate, sym_series_ring, sym_ctx


def _monomial_label(ring: SeriesRing, exps) -> str:
    t_var, z_var = ring.variables[0], ring.variables[1]
    parts = []
    for var, e in ((z_var, exps[1]), (t_var, exps[0])):
        if e == 1:
            parts.append(var.name)
        elif e > 1:
            parts.append(f"{var.name}^{e}")
    return "*".join(parts) if parts else "1"


@dataclass(frozen=True)
class ObstructionReport:
    """Search certificate: symbolic relations plus a per-candidate verdict."""

    ring: SeriesRing
    degree: int
    candidate: str
    delta: Series
    relations: tuple
    verdict: str
    witness: Optional[tuple] = None
    failures: Optional[tuple] = None

    def to_json(self) -> dict:
        t_var, z_var = self.ring.variables[0], self.ring.variables[1]
        obj = {
            "verdict": self.verdict,
            "truncation": {"z": z_var.trunc, "t": t_var.trunc},
            "relations": [
                {"monomial": _monomial_label(self.ring, exps), "poly": str(poly)}
                for exps, poly in self.relations
            ],
        }
        if self.verdict == "satisfiable":
            obj["witness"] = list(self.witness)
        else:
            obj["failures"] = [
                {"candidate": list(cand), "monomial": _monomial_label(self.ring, mono)}
                for cand, mono in self.failures
            ]
        return obj


def exhaustive_search(degree: int, ring: SeriesRing, ctx: PowerOpContext) -> ObstructionReport:
    """Evaluate the defect at every candidate with a1 = 1, a_i in {0, 1}.

    Candidates are ordered with the last coefficient varying fastest; each
    failure records the first nonzero monomial in (z-degree, t-degree)
    order.
    """
    if not isinstance(degree, int) or degree < 1:
        raise ValueError(f"candidate degree must be a positive integer, got {degree}")
    if ring != ctx.ring:
        raise RingMismatch("context ring differs from the requested ring")
    if not isinstance(ring.coeff_ring, IntegerRing):
        raise ValueError("the exhaustive search runs over integer coefficients")

    sym_candidate, sym_ring, sym_ctx = _symbolic_twin(ctx, degree)
    sym_delta = delta(sym_candidate, sym_ring, sym_ctx)
    relations = _relations_from_delta(sym_delta)

    witness = None
    failures = []
    for tail in itertools.product((0, 1), repeat=degree - 1):
        cand = (1, *tail)
        r = ChernSeries(list(cand), ring.coeff_ring)
        defect = delta(r, ring, ctx)
        if not defect:
            witness = cand
            break
        first_fail = min(defect.terms, key=lambda e: (e[1], e[0]))
        failures.append((cand, first_fail))

    return ObstructionReport(
        ring=ring,
        degree=degree,
        candidate=f"symbolic {degree}",
        delta=sym_delta,
        relations=tuple(relations),
        verdict="satisfiable" if witness is not None else "unsatisfiable",
        witness=witness,
        failures=None if witness is not None else tuple(failures),
    )
