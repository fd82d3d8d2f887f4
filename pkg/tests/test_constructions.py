import pytest
from hypothesis import given, settings, strategies as st

from conftest import P
from polyekr.constructions import (Family, exceptional_family, primary_family, scale_family,
                                   trivial_family)
from polyekr.field import field_of_order, make_field
from polyekr.poly import Poly, enumerate_monic, hd_degree, lcm_all_monic_degree
from polyekr.verifier import family_common_divisor, is_ell_intersecting, realized_level


def members(fam):
    return set(fam.members)


def test_trivial_examples(F2, F3):
    fam = trivial_family(Poly.x(F2), 3)
    assert members(fam) == {P(F2, 0, 0, 0, 1), P(F2, 0, 0, 1, 1), P(F2, 0, 1, 0, 1), P(F2, 0, 1, 1, 1)}
    assert fam.ell == 1 and len(fam) == 4
    fam = trivial_family(Poly.constant(F2), 1)
    assert members(fam) == {P(F2, 0, 1), P(F2, 1, 1)} and fam.ell == 0
    g = P(F3, 1, 1)
    fam = trivial_family(g, 2)
    assert members(fam) == {g * P(F3, 0, 1), g * g, g * P(F3, 2, 1)}
    assert len(fam) == 3


def test_trivial_errors(F2):
    with pytest.raises(ValueError):
        trivial_family(P(make_field(3), 1, 2), 3)
    with pytest.raises(ValueError):
        trivial_family(P(F2, 1, 1, 1), 1)


@pytest.mark.parametrize("q", [2, 3])
def test_trivial_size_and_level(q):
    f = field_of_order(q)
    for gdeg in range(3):
        for g in enumerate_monic(f, gdeg):
            for n in range(gdeg, 5):
                fam = trivial_family(g, n)
                assert len(fam) == q ** (n - gdeg)
                assert fam.uniform_degree == n
                assert len(fam) == 1 or is_ell_intersecting(fam, gdeg)


def test_primary_examples(F2, F3):
    fam = primary_family(F3, 1)
    assert members(fam) == {P(F3, 2, 0, 1), P(F3, 0, 2, 1), P(F3, 0, 1, 1)}
    assert fam.ell == 1
    f = P(F2, 1, 1, 1)
    x, x1 = Poly.x(F2), P(F2, 1, 1)
    fam = primary_family(F2, 2)
    assert members(fam) == {x1 * x1 * f, x * x * f, x * x1 * f, x * x * x1 * x1}
    assert fam.uniform_degree == 4 and fam.ell == 2
    fam = primary_family(F2, 1)
    assert members(fam) == {x, x1} and fam.ell == 0


@pytest.mark.parametrize("q,d", [(2, 1), (2, 2), (2, 3), (3, 1), (3, 2)])
def test_primary_properties(q, d):
    f = field_of_order(q)
    fam = primary_family(f, d)
    hd = lcm_all_monic_degree(f, d)
    assert len(fam) == q**d
    assert fam.uniform_degree == hd.degree - d == hd_degree(q, d) - d
    assert fam.ell == hd.degree - 2 * d
    assert is_ell_intersecting(fam, hd.degree - 2 * d)
    assert family_common_divisor(fam).degree == 0


def test_exceptional_family(F2):
    x, x1, f = Poly.x(F2), P(F2, 1, 1), P(F2, 1, 1, 1)
    fam = exceptional_family()
    assert fam.members == tuple(sorted([x * x * x1, x * x1 * x1, x * f, x1 * f], key=Poly.sort_key))
    assert fam.ell == 1 and len(fam) == 4 == 2 ** (3 - 1)
    assert family_common_divisor(fam) == Poly.constant(F2)
    assert not fam.same_members(primary_family(F2, 2))


def test_scale_examples(F2):
    x = Poly.x(F2)
    fam = scale_family(trivial_family(Poly.constant(F2), 1), x, "multiply")
    assert members(fam) == {P(F2, 0, 0, 1), P(F2, 0, 1, 1)} and fam.ell == 1
    ex = exceptional_family()
    up = scale_family(ex, x, "multiply")
    assert up.ell == 2 and up.uniform_degree == 4 and len(up) == 4
    assert is_ell_intersecting(up, 2)
    assert realized_level(up) == realized_level(ex) + 1
    assert scale_family(up, x, "divide").same_members(ex)
    assert scale_family(up, x, "divide").ell == ex.ell


def test_scale_errors(F2):
    ex = exceptional_family()
    with pytest.raises(ValueError):
        scale_family(ex, Poly.x(F2), "divide")
    with pytest.raises(ValueError):
        scale_family(ex, P(F2, 1, 1, 1, 1), "divide")
    with pytest.raises(ValueError):
        scale_family(ex, Poly.x(F2), "sideways")


def test_family_validation(F2):
    with pytest.raises(ValueError):
        Family.of(F2, [P(F2, 0, 1), P(F2, 0, 1)], 0)
    with pytest.raises(ValueError):
        Family.of(make_field(3), [P(make_field(3), 0, 2)], 0)
    with pytest.raises(ValueError):
        Family.of(F2, [P(F2, 0, 1)], 2)


@st.composite
def family_and_multiplier(draw):
    q = draw(st.sampled_from([2, 3]))
    f = field_of_order(q)
    deg = draw(st.integers(1, 3))
    pool = enumerate_monic(f, deg)
    polys = draw(st.lists(st.sampled_from(pool), min_size=2, max_size=6, unique=True))
    g = draw(st.sampled_from([p for d in range(3) for p in enumerate_monic(f, d)]))
    ell = draw(st.integers(0, deg))
    return Family.of(f, polys, ell), g


@given(family_and_multiplier())
@settings(max_examples=150, deadline=None)
def test_scaling_shifts_levels(fg):
    fam, g = fg
    scaled = scale_family(fam, g, "multiply")
    assert realized_level(scaled) == realized_level(fam) + g.degree
    for ell in range(fam.uniform_degree + 1):
        assert is_ell_intersecting(fam, ell) == is_ell_intersecting(scaled, ell + g.degree)
