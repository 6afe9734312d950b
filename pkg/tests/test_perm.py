import pytest
from hypothesis import given
from hypothesis import strategies as st

from quotshrink.errors import DegreeMismatch, MalformedCycles, PointOutOfRange
from quotshrink.perm import Permutation, act, compose, format_cycles, identity, inverse, parse_cycles

from conftest import perms


def test_right_action_convention():
    p = parse_cycles("(1 2)", 3)
    q = parse_cycles("(2 3)", 3)
    # x^(pq) = (x^p)^q, so 1 -> 2 -> 3
    assert act(compose(p, q), 1) == 3
    assert compose(p, q) == parse_cycles("(1 3 2)", 3)


def test_parse_variants():
    assert parse_cycles("(1,2,3)(4 5)", 5) == parse_cycles("(1 2 3)(4,5)", 5)
    for ident in ("()", "id", "", "  "):
        assert parse_cycles(ident, 4).is_identity()
    assert parse_cycles("(1)(2 3)", 3) == parse_cycles("(2 3)", 3)


@pytest.mark.parametrize("text, exc", [
    ("(1 2)(2 3)", MalformedCycles),
    ("(1 1)", MalformedCycles),
    ("(1 a)", MalformedCycles),
    ("1 2", MalformedCycles),
    ("(1 7)", PointOutOfRange),
    ("(0 1)", PointOutOfRange),
])
def test_parse_errors(text, exc):
    with pytest.raises(exc):
        parse_cycles(text, 5)


def test_format_canonical():
    assert format_cycles(identity(4)) == "()"
    assert format_cycles(parse_cycles("(3 1 2)(5 4)", 5)) == "(1 2 3)(4 5)"


def test_degree_mismatch():
    with pytest.raises(DegreeMismatch):
        compose(identity(3), identity(4))
    with pytest.raises(PointOutOfRange):
        act(identity(3), 4)


def test_bad_images():
    with pytest.raises(MalformedCycles):
        Permutation([1, 1, 2])


def test_order_sign_support():
    p = parse_cycles("(1 2 3)(4 5)", 6)
    assert p.order() == 6
    assert p.sign() == -1
    assert p.support() == [1, 2, 3, 4, 5]
    assert (p ** 6).is_identity()
    assert p ** -1 == ~p
    assert p.extend(8).degree == 8


@given(perms(7), perms(7), perms(7))
def test_compose_associative(a, b, c):
    assert compose(compose(a, b), c) == compose(a, compose(b, c))


@given(perms(7))
def test_inverse(a):
    assert compose(a, inverse(a)).is_identity()
    assert compose(inverse(a), a).is_identity()
    assert inverse(inverse(a)) == a


@given(perms(9))
def test_cycle_round_trip(a):
    assert parse_cycles(format_cycles(a), 9) == a


@given(perms(6), st.integers(1, 6))
def test_action_is_right_action(a, x):
    b = a * a
    assert b(x) == a(a(x))


@given(perms(6), perms(6))
def test_sign_multiplicative(a, b):
    assert (a * b).sign() == a.sign() * b.sign()
