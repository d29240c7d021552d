"""The constructed elementary functions against their platform counterparts.

math.log / math.exp / math.pow serve as oracles here; the implementation
under test never calls them.
"""

import math

import pytest
from hypothesis import given
from hypothesis import strategies as st

from rfcalc.elementary import (
    ApproxValue,
    e_const,
    exp_construct,
    hyperbolic,
    inverse_fn,
    log_construct,
    pow_construct,
)
from rfcalc.errors import DomainError, InvalidArgumentError


def test_log_enclosure_contains_platform_log():
    for x in (1.5, 2.0, 10.0, 0.3, 1e-6, 1e6):
        approx = log_construct(x, 1e-12)
        assert abs(approx.value - math.log(x)) <= approx.bound
        assert approx.bound <= 1e-12


def test_log_of_one_is_exact():
    approx = log_construct(1.0)
    assert approx == ApproxValue(0.0, 0.0)


@given(st.floats(min_value=-8.0, max_value=8.0))
def test_log_certified_everywhere(e):
    x = 2.0 ** e
    approx = log_construct(x, 1e-12)
    assert abs(approx.value - math.log(x)) <= approx.bound


def test_log_bound_tracks_eps():
    loose = log_construct(7.3, 1e-6)
    tight = log_construct(7.3, 1e-13)
    assert tight.bound < loose.bound
    assert loose.bound <= 1e-6


def test_log_honest_below_certification_floor():
    # eps far below what the enclosure can certify: the reported bound
    # must stay truthful rather than echo the request
    approx = log_construct(2.0, 1e-30)
    assert approx.bound > 1e-30
    assert abs(approx.value - math.log(2.0)) <= approx.bound


def test_log_domain():
    with pytest.raises(DomainError):
        log_construct(0.0)
    with pytest.raises(DomainError):
        log_construct(-1.0)
    with pytest.raises(InvalidArgumentError):
        log_construct(2.0, eps=0.0)


@given(st.floats(min_value=-20.0, max_value=20.0))
def test_exp_matches_platform(y):
    got = exp_construct(y, 1e-12)
    want = math.exp(y)
    assert got == pytest.approx(want, rel=4e-12)


def test_exp_special_values():
    assert exp_construct(0.0) == 1.0
    assert exp_construct(800.0) == math.inf
    assert exp_construct(-800.0) == 0.0
    with pytest.raises(InvalidArgumentError):
        exp_construct(math.nan)


def test_exp_log_roundtrip():
    for y in (-5.0, -0.1, 0.3, 2.0, 10.0):
        back = log_construct(exp_construct(y, 1e-13), 1e-13)
        assert back.value == pytest.approx(y, abs=1e-11)


def test_e_const():
    assert e_const(1e-12) == pytest.approx(math.e, rel=1e-12)


@given(
    st.floats(min_value=0.1, max_value=50.0),
    st.floats(min_value=-6.0, max_value=6.0),
)
def test_pow_matches_platform(b, x):
    assert pow_construct(b, x, 1e-11) == pytest.approx(b ** x, rel=1e-9)


def test_pow_edges():
    assert pow_construct(3.7, 0.0) == 1.0
    with pytest.raises(DomainError):
        pow_construct(-2.0, 0.5)
    with pytest.raises(DomainError):
        pow_construct(0.0, 2.0)


@pytest.mark.parametrize(
    "kind,oracle",
    [
        ("sinh", math.sinh),
        ("cosh", math.cosh),
        ("tanh", math.tanh),
        ("sech2", lambda t: 1.0 / math.cosh(t) ** 2),
        ("csch2", lambda t: 1.0 / math.sinh(t) ** 2),
        ("coth", lambda t: math.cosh(t) / math.sinh(t)),
    ],
)
def test_hyperbolic_against_platform(kind, oracle):
    for x in (-3.0, -0.7, 0.2, 1.0, 4.5):
        assert hyperbolic(kind, x) == pytest.approx(oracle(x), rel=1e-11)


def test_hyperbolic_at_zero():
    assert hyperbolic("sinh", 0.0) == 0.0
    assert hyperbolic("cosh", 0.0) == 1.0
    assert hyperbolic("tanh", 0.0) == 0.0
    assert hyperbolic("sech2", 0.0) == 1.0
    with pytest.raises(DomainError):
        hyperbolic("csch2", 0.0)
    with pytest.raises(DomainError):
        hyperbolic("coth", 0.0)
    with pytest.raises(InvalidArgumentError):
        hyperbolic("sin", 1.0)


@given(st.floats(min_value=-5.0, max_value=5.0))
def test_hyperbolic_pythagorean_identity(x):
    c = hyperbolic("cosh", x)
    s = hyperbolic("sinh", x)
    assert c * c - s * s == pytest.approx(1.0, abs=1e-9 * c * c)


@pytest.mark.parametrize(
    "kind,y,oracle",
    [
        ("arcsin", 0.6, math.asin(0.6)),
        ("arcsin", -0.95, math.asin(-0.95)),
        ("arctan", 3.0, math.atan(3.0)),
        ("arctan", -0.4, math.atan(-0.4)),
        ("arsinh", 2.0, math.asinh(2.0)),
        ("arcosh", 3.0, math.acosh(3.0)),
        ("artanh", 0.5, math.atanh(0.5)),
        ("artanh", -0.9, math.atanh(-0.9)),
    ],
)
def test_inverse_against_platform(kind, y, oracle):
    assert inverse_fn(kind, y, 1e-12) == pytest.approx(oracle, abs=1e-11)


def test_inverse_roundtrips():
    assert math.sin(inverse_fn("arcsin", 0.37)) == pytest.approx(0.37, abs=1e-11)
    assert hyperbolic("tanh", inverse_fn("artanh", 0.81)) == pytest.approx(
        0.81, abs=1e-11
    )


def test_inverse_domains():
    with pytest.raises(DomainError):
        inverse_fn("arcsin", 1.5)
    with pytest.raises(DomainError):
        inverse_fn("arcosh", 0.5)
    with pytest.raises(DomainError):
        inverse_fn("artanh", 1.0)
    with pytest.raises(InvalidArgumentError):
        inverse_fn("log", 1.0)
    assert inverse_fn("arcosh", 1.0) == 0.0


def test_arcsin_hits_endpoint():
    assert inverse_fn("arcsin", 1.0) == pytest.approx(math.pi / 2.0, abs=1e-9)
