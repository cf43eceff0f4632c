import json
import random

import pytest
from hypothesis import given, settings, strategies as st

from fglops import (
    IntegerModRing,
    IntegerRing,
    NonConvergent,
    NotAUnit,
    PolynomialRing,
    SeriesRing,
    SeriesVar,
    series_from_json,
    series_to_json,
    standard_ring,
)
from conftest import to_plain
from longhand import naive_convolution, naive_normalize

Z = IntegerRing()
TZ = standard_ring(Z)  # Z[[t,z]]/(2z, z^3, t^5)


def test_normalize_examples():
    assert TZ.from_terms({(1, 1): 3}) == TZ.from_terms({(1, 1): 1})
    assert TZ.from_terms({(0, 3): 1}) == TZ.zero
    assert TZ.from_terms({(1, 0): 2}) == TZ.gen("t") * 2


def test_normalize_idempotent():
    f = TZ.from_terms({(1, 1): 3, (2, 0): -7, (0, 2): 5})
    assert TZ.from_terms(dict(f.terms)) == f


def test_unknown_variable_errors():
    with pytest.raises(ValueError):
        TZ.from_terms({(1, 0, 0): 1})
    with pytest.raises(ValueError):
        TZ.from_terms({(1, -1): 1})


def test_add_mul_examples():
    cubic = SeriesRing(Z, (SeriesVar("t", 3),))
    one_t = cubic.one + cubic.gen("t")
    assert one_t * one_t == cubic.from_terms({(0,): 1, (1,): 2, (2,): 1})

    z = TZ.gen("z")
    assert z * (z * z) == TZ.zero
    assert (z + z * z) + z == z * z


def test_substitute_examples():
    coeffs = PolynomialRing(Z, ("a1",))
    ring = SeriesRing(
        coeffs, (SeriesVar("t", 5), SeriesVar("z", 3, 2))
    )
    t, z = ring.gen("t"), ring.gen("z")
    f = ring.one + ring.constant(coeffs.gen("a1")) * t
    image = f.substitute({"t": t + z})
    assert image == ring.one + ring.constant(coeffs.gen("a1")) * (t + z)

    t5 = SeriesRing(Z, (SeriesVar("t", 5),))
    assert (t5.gen("t") ** 2).substitute({"t": t5.zero}) == t5.zero

    f = TZ.one + TZ.gen("t") + TZ.gen("t") ** 2
    renamed = f.substitute({"t": TZ.gen("z")})
    assert renamed == TZ.one + TZ.gen("z") + TZ.gen("z") ** 2


def test_substitute_rejects_non_nilpotent_constant():
    t5 = SeriesRing(Z, (SeriesVar("t", 5),))
    f = t5.gen("t") + t5.one
    with pytest.raises(NonConvergent):
        f.substitute({"t": t5.one + t5.gen("t")})


def test_substitute_allows_nilpotent_constant():
    z4 = IntegerModRing(4)
    ring = SeriesRing(z4, (SeriesVar("t", 4),))
    f = ring.gen("t")
    image = f.substitute({"t": ring.constant(2) + ring.gen("t")})
    assert image == ring.constant(2) + ring.gen("t")


def test_invert_examples():
    z = TZ.gen("z")
    assert (TZ.one + z).invert() == TZ.one + z + z * z
    assert TZ.one.invert() == TZ.one
    t5 = SeriesRing(Z, (SeriesVar("t", 5),))
    with pytest.raises(NotAUnit):
        (t5.constant(2) + t5.gen("t")).invert()


def test_coefficient_of():
    f = TZ.from_terms({(0, 0): 1, (1, 0): 2, (2, 0): 1, (1, 1): 1})
    assert f.coefficient_of((1, 1)) == Z.one
    assert TZ.zero.coefficient_of((2, 1)) == Z.zero
    with pytest.raises(ValueError):
        f.coefficient_of((5, 0))
    with pytest.raises(ValueError):
        f.coefficient_of((1,))


def test_torsion_absorbs():
    rng = random.Random(7)
    z = TZ.gen("z")
    for _ in range(50):
        g = TZ.from_terms(
            {
                (rng.randrange(5), rng.randrange(3)): rng.randint(-9, 9)
                for _ in range(4)
            }
        )
        assert (g * 2) * z == TZ.zero


def _random_plain(rng, specs, max_terms=8, max_coeff=9):
    terms = {}
    for _ in range(rng.randint(0, max_terms)):
        exps = tuple(rng.randrange(trunc + 2) for trunc, _ in specs)
        terms[exps] = rng.randint(-max_coeff, max_coeff)
    return terms


RING_SHAPES = [
    ((5, None), (3, 2)),
    ((4, None), (4, None)),
    ((3, 2), (3, 3)),
    ((6, None),),
]


def _ring_for(specs):
    return SeriesRing(
        Z,
        tuple(
            SeriesVar(f"v{i}", trunc, torsion)
            for i, (trunc, torsion) in enumerate(specs)
        ),
    )


def test_mul_matches_naive_convolution():
    rng = random.Random(2024)
    for _ in range(200):
        specs = rng.choice(RING_SHAPES)
        ring = _ring_for(specs)
        f_plain = _random_plain(rng, specs)
        g_plain = _random_plain(rng, specs)
        f = ring.from_terms(f_plain)
        g = ring.from_terms(g_plain)
        expected = naive_convolution(
            naive_normalize(f_plain, specs), naive_normalize(g_plain, specs), specs
        )
        assert to_plain(f * g) == expected


def test_substitution_is_ring_homomorphism_sample():
    rng = random.Random(5)
    for _ in range(100):
        specs = rng.choice(RING_SHAPES)
        ring = _ring_for(specs)
        f = ring.from_terms(_random_plain(rng, specs))
        g = ring.from_terms(_random_plain(rng, specs))
        assignment = {}
        for i, v in enumerate(ring.variables):
            gen = ring.gen(v.name)
            image = ring.zero
            for e in range(1, v.trunc):
                image = image + gen ** e * rng.randint(-3, 3)
            assignment[v.name] = image
        lhs_add = (f + g).substitute(assignment)
        rhs_add = f.substitute(assignment) + g.substitute(assignment)
        assert lhs_add == rhs_add
        lhs_mul = (f * g).substitute(assignment)
        rhs_mul = f.substitute(assignment) * g.substitute(assignment)
        assert lhs_mul == rhs_mul


def test_inversion_exact_sample():
    rng = random.Random(11)
    for _ in range(100):
        specs = rng.choice(RING_SHAPES)
        ring = _ring_for(specs)
        terms = _random_plain(rng, specs)
        terms[(0,) * len(specs)] = rng.choice([1, -1])
        f = ring.from_terms(terms)
        assert f * f.invert() == ring.one


@st.composite
def tz_series(draw):
    n = draw(st.integers(0, 6))
    terms = {}
    for _ in range(n):
        exps = (draw(st.integers(0, 4)), draw(st.integers(0, 2)))
        terms[exps] = draw(st.integers(-9, 9))
    return TZ.from_terms(terms)


@settings(deadline=None)
@given(tz_series(), tz_series(), tz_series())
def test_ring_axioms(f, g, h):
    assert f + g == g + f
    assert (f + g) + h == f + (g + h)
    assert f * g == g * f
    assert (f * g) * h == f * (g * h)
    assert f * (g + h) == f * g + f * h
    assert f + TZ.zero == f
    assert f * TZ.one == f


def test_specialize():
    coeffs = PolynomialRing(Z, ("a1", "a2"))
    ring = SeriesRing(coeffs, (SeriesVar("t", 5), SeriesVar("z", 3, 2)))
    a1, a2 = coeffs.gens()
    f = ring.constant(a1) * ring.gen("t") + ring.constant(a2 * 3) * ring.gen("z")
    numeric = f.specialize({"a1": -1, "a2": 1})
    assert to_plain(numeric) == {(1, 0): -1, (0, 1): 1}


def test_in_ring_transport():
    t5 = SeriesRing(Z, (SeriesVar("t", 5),))
    f = t5.one + t5.gen("t") * 4
    g = f.in_ring(TZ)
    assert to_plain(g) == {(0, 0): 1, (1, 0): 4}
    h = TZ.gen("z").in_ring(standard_ring(Z, t_trunc=7, z_trunc=2))
    assert to_plain(h) == {(0, 1): 1}
    with pytest.raises(ValueError):
        TZ.gen("z").in_ring(t5)


def test_json_round_trip():
    rng = random.Random(3)
    for _ in range(50):
        specs = rng.choice(RING_SHAPES)
        ring = _ring_for(specs)
        f = ring.from_terms(_random_plain(rng, specs))
        assert series_from_json(series_to_json(f)) == f

    coeffs = PolynomialRing(IntegerModRing(2), ("a1", "a2"))
    ring = SeriesRing(coeffs, (SeriesVar("t", 5), SeriesVar("z", 3, 2)))
    f = ring.constant(coeffs.gen("a1")) * ring.gen("t") + ring.one
    blob = json.dumps(series_to_json(f))
    assert series_from_json(json.loads(blob)) == f


def test_json_schema_shape():
    f = TZ.gen("t")
    obj = series_to_json(f)
    assert obj["ring"]["coeff"] == "Z"
    assert obj["ring"]["vars"] == [
        {"name": "t", "trunc": 5},
        {"name": "z", "trunc": 3, "torsion": 2},
    ]
    assert obj["terms"] == [{"exp": [1, 0], "coef": "1"}]


def test_str_formatting():
    t, z = TZ.gen("t"), TZ.gen("z")
    assert str(TZ.zero) == "0"
    assert str(TZ.one + t * 2 + t * t + t * z) == "1 + 2*t + t^2 + t*z"
    assert str(TZ.one - t) == "1 - t"
