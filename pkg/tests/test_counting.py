import pytest

from polyekr.field import field_of_order
from polyekr.poly import (count_irreducibles, divisors, enumerate_irreducible_monic,
                          irreducible_lower_bound_holds, mobius)

PRIME_POWERS_TO_9 = [2, 3, 4, 5, 7, 8, 9]


def test_mobius_values():
    assert [mobius(n) for n in range(1, 13)] == [1, -1, -1, 0, -1, 1, -1, 0, 0, 1, -1, 0]


def test_divisors():
    assert divisors(12) == [1, 2, 3, 4, 6, 12]


@pytest.mark.parametrize("q", [2, 3, 4, 5])
@pytest.mark.parametrize("n", range(1, 7))
def test_count_matches_enumeration(q, n):
    assert len(enumerate_irreducible_monic(field_of_order(q), n)) == count_irreducibles(q, n)


@pytest.mark.parametrize("q", PRIME_POWERS_TO_9)
@pytest.mark.parametrize("n", range(1, 9))
def test_explicit_lower_bound(q, n):
    assert irreducible_lower_bound_holds(q, n)
    # float cross-check, with ample slack for the rounding
    lhs = count_irreducibles(q, n)
    rhs = q**n / n - q ** (n / 2) / n - q ** (n / 3)
    assert lhs >= rhs - 1e-9 * q**n


def test_lower_bound_can_fail_for_wrong_counts(monkeypatch):
    import polyekr.poly as poly

    monkeypatch.setattr(poly, "count_irreducibles", lambda q, n: 0)
    assert not poly.irreducible_lower_bound_holds(5, 4)


def test_at_least_two_irreducibles_except_q2_n2():
    for q in PRIME_POWERS_TO_9:
        for n in range(1, 9):
            if (q, n) == (2, 2):
                assert count_irreducibles(q, n) == 1
            else:
                assert count_irreducibles(q, n) >= 2, (q, n)


def test_large_counts_are_exact():
    # N_2(61): 61 is prime, so (2^61 - 2) / 61
    assert count_irreducibles(2, 61) == (2**61 - 2) // 61
    # N_3(6) = (729 - 27 - 9 + 3) / 6
    assert count_irreducibles(3, 6) == 116
