import pytest

from fglops import IntegerRing, standard_context


def to_plain(series):
    """Series over integer coefficients -> plain {exps: int} dict."""
    return {exps: c.value for exps, c in series.terms.items()}


@pytest.fixture
def default_context():
    return standard_context(IntegerRing())
