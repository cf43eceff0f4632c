"""Truncated multivariate power series rings with per-variable torsion.

A :class:`SeriesRing` fixes a coefficient ring and an ordered tuple of
variables.  Each variable carries a truncation degree (monomials whose
exponent in that variable reaches the degree vanish) and an optional torsion
order m, encoding the relation m*v = 0: the coefficient of any monomial with
a positive v-exponent is kept only modulo m.  With several torsion variables
in one monomial, the applicable modulus is the gcd of their orders.

Elements are sparse term maps in canonical normal form; equality is
structural.  All values are immutable and all operations are pure, so series
can be shared freely across workers.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from types import MappingProxyType
from typing import Mapping, Optional

from .coefficients import (
    Coefficient,
    Ring,
    RingMismatch,
    coeff_ring_from_json,
    coeff_ring_to_json,
    parse_coefficient,
)


class NonConvergent(ValueError):
    """A substitution image has a constant term that is not nilpotent."""


@dataclass(frozen=True)
class SeriesVar:
    """One series variable: name, truncation degree, optional torsion order."""

    name: str
    trunc: int
    torsion: Optional[int] = None

    def __post_init__(self):
        if not self.name:
            raise ValueError("variable names must be non-empty")
        if not isinstance(self.trunc, int) or self.trunc < 1:
            raise ValueError(f"truncation degree must be a positive integer, got {self.trunc}")
        if self.torsion is not None and (
            not isinstance(self.torsion, int) or self.torsion < 1
        ):
            raise ValueError(f"torsion order must be a positive integer, got {self.torsion}")


@dataclass(frozen=True)
class SeriesRing:
    """A truncated power-series ring over an exact coefficient ring."""

    coeff_ring: Ring
    variables: tuple

    def __post_init__(self):
        object.__setattr__(self, "variables", tuple(self.variables))
        if not self.variables:
            raise ValueError("a series ring needs at least one variable")
        names = [v.name for v in self.variables]
        if len(set(names)) != len(names):
            raise ValueError("variable names must be unique")

    def __str__(self) -> str:
        names = ",".join(v.name for v in self.variables)
        rels = []
        for v in self.variables:
            if v.torsion is not None:
                rels.append(f"{v.torsion}{v.name}")
            rels.append(f"{v.name}^{v.trunc}")
        return f"{self.coeff_ring}[[{names}]]/({', '.join(rels)})"

    @property
    def nvars(self) -> int:
        return len(self.variables)

    def names(self) -> tuple:
        return tuple(v.name for v in self.variables)

    def index(self, name: str) -> int:
        for i, v in enumerate(self.variables):
            if v.name == name:
                return i
        raise ValueError(f"no variable named {name!r} in {self}")

    def from_terms(self, terms) -> "Series":
        return Series(self, terms)

    @property
    def zero(self) -> "Series":
        return Series(self, {})

    @property
    def one(self) -> "Series":
        return self.constant(1)

    def constant(self, value) -> "Series":
        return Series(self, {(0,) * self.nvars: value})

    def gen(self, name: str) -> "Series":
        exps = tuple(1 if i == self.index(name) else 0 for i in range(self.nvars))
        return Series(self, {exps: 1})

    def monomial(self, exps, coef=1) -> "Series":
        return Series(self, {tuple(exps): coef})


def _canonical_terms(ring: SeriesRing, terms) -> dict:
    if isinstance(terms, Mapping):
        items = terms.items()
    else:
        items = list(terms)
    cr = ring.coeff_ring
    acc: dict = {}
    for exps, coef in items:
        exps = tuple(exps)
        if len(exps) != ring.nvars:
            raise ValueError(
                f"exponent vector {exps} does not match variables {ring.names()}"
            )
        for e in exps:
            if isinstance(e, bool) or not isinstance(e, int) or e < 0:
                raise ValueError(f"exponents must be non-negative integers, got {exps}")
        if isinstance(coef, Coefficient):
            if coef.ring != cr:
                raise RingMismatch(
                    f"coefficient in {coef.ring} used in series over {cr}"
                )
        else:
            coef = Coefficient(cr, coef)
        if any(e >= v.trunc for e, v in zip(exps, ring.variables)):
            continue
        if exps in acc:
            acc[exps] = acc[exps] + coef
        else:
            acc[exps] = coef
    out: dict = {}
    for exps, coef in acc.items():
        modulus = 0
        for e, v in zip(exps, ring.variables):
            if e > 0 and v.torsion is not None:
                modulus = math.gcd(modulus, v.torsion)
        if modulus:
            coef = coef.reduce_mod(modulus)
        if not coef.is_zero():
            out[exps] = coef
    return out


def _term_order(exps) -> tuple:
    return (sum(exps), tuple(-e for e in exps))


class Series:
    """A canonical sparse element of a :class:`SeriesRing`."""

    __slots__ = ("ring", "_terms")

    def __init__(self, ring: SeriesRing, terms):
        self.ring = ring
        self._terms = _canonical_terms(ring, terms)

    @property
    def terms(self) -> Mapping:
        """Read-only view of the canonical term map (exponents -> Coefficient)."""
        return MappingProxyType(self._terms)

    def items(self) -> list:
        """Canonically ordered (exponents, coefficient) pairs."""
        return sorted(self._terms.items(), key=lambda kv: _term_order(kv[0]))

    def coefficient_of(self, exps) -> Coefficient:
        exps = tuple(exps)
        if len(exps) != self.ring.nvars:
            raise ValueError(
                f"exponent vector {exps} does not match variables {self.ring.names()}"
            )
        if any(e < 0 or e >= v.trunc for e, v in zip(exps, self.ring.variables)):
            raise ValueError(f"monomial {exps} is outside the truncation bounds")
        return self._terms.get(exps, self.ring.coeff_ring.zero)

    def constant_term(self) -> Coefficient:
        return self._terms.get((0,) * self.ring.nvars, self.ring.coeff_ring.zero)

    def _coerce(self, other):
        if isinstance(other, Series):
            if other.ring != self.ring:
                raise RingMismatch(f"cannot combine series over {self.ring} and {other.ring}")
            return other
        if isinstance(other, Coefficient) or (
            isinstance(other, int) and not isinstance(other, bool)
        ):
            return self.ring.constant(other)
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        acc = dict(self._terms)
        for exps, coef in other._terms.items():
            if exps in acc:
                acc[exps] = acc[exps] + coef
            else:
                acc[exps] = coef
        return Series(self.ring, acc)

    __radd__ = __add__

    def __neg__(self):
        return Series(self.ring, {e: -c for e, c in self._terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        if isinstance(other, Coefficient) or (
            isinstance(other, int) and not isinstance(other, bool)
        ):
            return Series(
                self.ring, {e: c * other for e, c in self._terms.items()}
            )
        if not isinstance(other, Series):
            return NotImplemented
        if other.ring != self.ring:
            raise RingMismatch(f"cannot multiply series over {self.ring} and {other.ring}")
        bounds = tuple(v.trunc for v in self.ring.variables)
        acc: dict = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                exps = tuple(a + b for a, b in zip(e1, e2))
                if any(e >= t for e, t in zip(exps, bounds)):
                    continue
                v = c1 * c2
                if exps in acc:
                    acc[exps] = acc[exps] + v
                else:
                    acc[exps] = v
        return Series(self.ring, acc)

    __rmul__ = __mul__

    def __pow__(self, exponent: int):
        if not isinstance(exponent, int) or exponent < 0:
            raise ValueError("series powers must be non-negative integers")
        result = self.ring.one
        for _ in range(exponent):
            result = result * self
        return result

    def substitute(
        self,
        assignment: Mapping[str, "Series"],
        target: Optional[SeriesRing] = None,
    ) -> "Series":
        """Evaluate the canonical representative under variable images.

        Every assigned image must live in the target ring and have a
        nilpotent constant term (zero, in torsion-free integer-like rings);
        otherwise the substitution does not define a map out of the
        truncated quotient and :class:`NonConvergent` is raised.  Unassigned
        variables map to the same-named generator of the target ring.
        """
        for name in assignment:
            self.ring.index(name)
        if target is None:
            if assignment:
                target = next(iter(assignment.values())).ring
            else:
                target = self.ring
        if target.coeff_ring != self.ring.coeff_ring:
            raise RingMismatch(
                f"substitution target over {target.coeff_ring} differs from {self.ring.coeff_ring}"
            )
        images = []
        for v in self.ring.variables:
            if v.name in assignment:
                img = assignment[v.name]
                if not isinstance(img, Series) or img.ring != target:
                    raise RingMismatch(f"image of {v.name} must be a series in {target}")
                if not img.constant_term().is_nilpotent():
                    raise NonConvergent(
                        f"image of {v.name} has non-nilpotent constant term"
                    )
            else:
                img = target.gen(v.name)
            images.append(img)
        max_exp = [0] * self.ring.nvars
        for exps in self._terms:
            for i, e in enumerate(exps):
                max_exp[i] = max(max_exp[i], e)
        powers = []
        for img, m in zip(images, max_exp):
            cache = [target.one]
            for _ in range(m):
                cache.append(cache[-1] * img)
            powers.append(cache)
        acc = target.zero
        for exps, coef in self._terms.items():
            term = target.constant(coef)
            for i, e in enumerate(exps):
                if e:
                    term = term * powers[i][e]
            acc = acc + term
        return acc

    def invert(self) -> "Series":
        """Exact inverse via the geometric series; needs a unit constant term."""
        u = self.constant_term().invert()
        h = self.ring.one - self * u
        acc = self.ring.one
        power = h
        while power:
            acc = acc + power
            power = power * h
        return acc * u

    def map_coefficients(self, target_ring: SeriesRing, fn) -> "Series":
        """Rebuild the series over ``target_ring``, mapping each coefficient."""
        return Series(target_ring, {e: fn(c) for e, c in self._terms.items()})

    def specialize(self, assignment: Mapping[str, int]) -> "Series":
        """Evaluate polynomial coefficients at integer points.

        Returns a series over the same variables with coefficients in the
        polynomial base ring.
        """
        pr = self.ring.coeff_ring
        base = getattr(pr, "base", None)
        if base is None:
            raise ValueError("specialize needs polynomial coefficients")
        target = SeriesRing(base, self.ring.variables)
        return Series(
            target,
            {
                e: Coefficient._wrap(base, pr.evaluate(c.value, assignment))
                for e, c in self._terms.items()
            },
        )

    def in_ring(self, target: SeriesRing) -> "Series":
        """Transport the series into ``target`` by matching variable names."""
        if target.coeff_ring != self.ring.coeff_ring:
            raise RingMismatch("target ring has a different coefficient ring")
        out: dict = {}
        for exps, coef in self._terms.items():
            new_exps = [0] * target.nvars
            for e, v in zip(exps, self.ring.variables):
                if e == 0:
                    continue
                new_exps[target.index(v.name)] = e
            key = tuple(new_exps)
            out[key] = out[key] + coef if key in out else coef
        return Series(target, out)

    def __eq__(self, other):
        if not isinstance(other, Series):
            return NotImplemented
        return self.ring == other.ring and self._terms == other._terms

    def __hash__(self):
        return hash((self.ring, tuple(self.items())))

    def __bool__(self):
        return bool(self._terms)

    def __str__(self):
        if not self._terms:
            return "0"
        pieces = []
        for exps, coef in self.items():
            mono = "*".join(
                f"{v.name}^{e}" if e > 1 else v.name
                for v, e in zip(self.ring.variables, exps)
                if e
            )
            text = str(coef)
            negative = text.startswith("-") and "+" not in text[1:] and "-" not in text[1:]
            if negative:
                text = text[1:]
            if not mono:
                body = text
            elif text == "1":
                body = mono
            else:
                if "+" in text or "-" in text:
                    text = f"({text})"
                body = f"{text}*{mono}"
            pieces.append((negative, body))
        first_neg, first_body = pieces[0]
        out = ("-" if first_neg else "") + first_body
        for negative, body in pieces[1:]:
            out += (" - " if negative else " + ") + body
        return out

    def __repr__(self):
        return f"Series({self} over {self.ring})"


def ring_to_json(ring: SeriesRing) -> dict:
    vars_json = []
    for v in ring.variables:
        entry = {"name": v.name, "trunc": v.trunc}
        if v.torsion is not None:
            entry["torsion"] = v.torsion
        vars_json.append(entry)
    return {"coeff": coeff_ring_to_json(ring.coeff_ring), "vars": vars_json}


def ring_from_json(obj) -> SeriesRing:
    if not isinstance(obj, Mapping) or "coeff" not in obj or "vars" not in obj:
        raise ValueError("series ring descriptor needs 'coeff' and 'vars'")
    try:
        variables = tuple(
            SeriesVar(spec["name"], spec["trunc"], spec.get("torsion"))
            for spec in obj["vars"]
        )
    except (KeyError, TypeError) as exc:
        raise ValueError(f"malformed variable descriptor: {exc}") from None
    return SeriesRing(coeff_ring_from_json(obj["coeff"]), variables)


def series_to_json(f: Series) -> dict:
    return {
        "ring": ring_to_json(f.ring),
        "terms": [
            {"exp": list(exps), "coef": str(coef)} for exps, coef in f.items()
        ],
    }


def series_from_json(obj) -> Series:
    if not isinstance(obj, Mapping) or "ring" not in obj or "terms" not in obj:
        raise ValueError("series descriptor needs 'ring' and 'terms'")
    ring = ring_from_json(obj["ring"])
    terms = []
    try:
        for entry in obj["terms"]:
            coef = parse_coefficient(ring.coeff_ring, entry["coef"])
            terms.append((tuple(entry["exp"]), coef))
    except (KeyError, TypeError) as exc:
        raise ValueError(f"malformed term descriptor: {exc}") from None
    return Series(ring, terms)
