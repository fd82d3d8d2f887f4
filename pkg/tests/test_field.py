import itertools

import pytest
from hypothesis import given, strategies as st

from polyekr.config import GuardError, Guards
from polyekr.field import (enumerate_elements, field_arith, field_from_json, field_of_order,
                           least_irreducible, make_field, split_prime_power)

SMALL_FIELDS = [(2, 1), (3, 1), (2, 2), (5, 1), (7, 1), (2, 3), (3, 2)]  # every q <= 9


def test_prime_field_has_no_modulus():
    f = make_field(2, 1)
    assert f.modulus is None and f.order == 2
    assert make_field(3).order == 3


def test_f4_modulus_is_x2_x_1():
    # only monic quadratic over F_2 without a root
    quadratics = [(c0, c1) for c0 in range(2) for c1 in range(2)
                  if all((x * x + c1 * x + c0) % 2 for x in range(2))]
    assert quadratics == [(1, 1)]
    assert make_field(2, 2).modulus == (1, 1, 1)


def test_modulus_lexicographic_rule():
    # cubics over F_2 without roots: x^3+x+1 -> (1,1,0), x^3+x^2+1 -> (1,0,1)
    assert least_irreducible(2, 3) == (1, 0, 1, 1)
    assert make_field(3, 2).modulus == (1, 0, 1)


def test_same_inputs_same_field():
    assert make_field(2, 2) is make_field(2, 2)
    assert field_of_order(4) == make_field(2, 2)


def test_make_field_errors():
    with pytest.raises(ValueError):
        make_field(4, 1)
    with pytest.raises(ValueError):
        make_field(2, 0)
    with pytest.raises(GuardError):
        make_field(2, 17)
    with pytest.raises(GuardError):
        make_field(2, 5, Guards(max_field_order=16))


def test_split_prime_power():
    assert split_prime_power(8) == (2, 3)
    assert split_prime_power(9) == (3, 2)
    assert split_prime_power(7) == (7, 1)
    for bad in (1, 6, 12, 0):
        with pytest.raises(ValueError):
            split_prime_power(bad)


def test_field_arith_examples():
    f2, f3, f4 = make_field(2), make_field(3), make_field(2, 2)
    assert field_arith(f2, "add", f2(1), f2(1)) == f2(0)
    assert field_arith(f3, "inv", f3(2)) == f3(2)
    t = f4.t
    assert field_arith(f4, "mul", t, t) == t + f4.one
    assert (t * t).index == 3


def test_field_arith_errors():
    f2, f3 = make_field(2), make_field(3)
    with pytest.raises(ZeroDivisionError):
        field_arith(f3, "inv", f3(0))
    with pytest.raises(ValueError):
        field_arith(f2, "add", f2(1), f3(1))
    with pytest.raises(ValueError):
        f2(1) + f3(1)


def test_enumerate_elements():
    assert [e.index for e in enumerate_elements(make_field(2))] == [0, 1]
    assert [e.index for e in enumerate_elements(make_field(3))] == [0, 1, 2]
    assert [e.index for e in enumerate_elements(make_field(2, 2))] == [0, 1, 2, 3]


@pytest.mark.parametrize("p,k", SMALL_FIELDS)
def test_field_axioms_exhaustive(p, k):
    f = make_field(p, k)
    q = f.order
    els = range(q)
    add, mul = f.add, f.mul
    for a, b in itertools.product(els, repeat=2):
        assert add(a, b) == add(b, a)
        assert mul(a, b) == mul(b, a)
    for a, b, c in itertools.product(els, repeat=3):
        assert add(add(a, b), c) == add(a, add(b, c))
        assert mul(mul(a, b), c) == mul(a, mul(b, c))
        assert mul(a, add(b, c)) == add(mul(a, b), mul(a, c))
    for a in els:
        assert add(a, 0) == a and mul(a, 1) == a
        assert add(a, f.neg(a)) == 0
        if a:
            assert mul(a, f.inv(a)) == 1


@pytest.mark.parametrize("p,k", SMALL_FIELDS + [(2, 4), (2, 5), (2, 6), (3, 3), (7, 2)])
def test_frobenius(p, k):
    f = make_field(p, k)
    for a in range(f.order):
        assert f.power(a, f.order) == a


@pytest.mark.parametrize("p,k", [(2, 2), (3, 2), (2, 4), (5, 2)])
def test_tables_agree_with_digit_arithmetic(p, k):
    f = make_field(p, k)
    for a, b in itertools.product(range(f.order), repeat=2):
        assert f.mul(a, b) == f._mul_digits(a, b)
        assert f.add(a, b) == f._add_digits(a, b)


def test_untabled_field_arithmetic():
    f = make_field(3, 8)  # 6561 > table limit
    assert f._exp is None
    a, b = 1234, 4321
    assert f.mul(a, f.inv(a)) == 1
    assert f.mul(a, b) == f.mul(b, a)
    assert f.add(a, f.neg(a)) == 0


@given(st.sampled_from(SMALL_FIELDS), st.integers(min_value=0))
def test_index_round_trip(pk, raw):
    f = make_field(*pk)
    i = raw % f.order
    assert f.from_digits(f.digits(i)) == i
    assert f.element(i).index == i


def test_field_json_round_trip():
    for p, k in SMALL_FIELDS:
        f = make_field(p, k)
        assert field_from_json(f.to_json()) is f
    with pytest.raises(ValueError):
        field_from_json({"p": 2, "k": 2, "modulus": [1, 0, 1]})
