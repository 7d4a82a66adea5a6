import random

import pytest

from vinbun.arith import INFINITY, build_field, closed_point, rational_point
from vinbun.budget import BudgetExceededError
from vinbun.drinfeld import (
    HomMatrix,
    SplitBundle,
    boundary_factor,
    compose,
    defect_divisor_of_hom,
    drinfeld_value,
    expected_isom_count,
    hom_space_dims,
    isom_count,
    iter_hom_matrices,
    random_automorphism,
)

F2 = build_field(2, 1)
F3 = build_field(3, 1)
F4 = build_field(2, 2)
F5 = build_field(5, 1)


def test_split_bundle():
    assert SplitBundle(2).summand_degrees == (2, -2)
    with pytest.raises(ValueError):
        SplitBundle(-1)


def test_hom_space_dims():
    assert hom_space_dims(0, 0) == (1, 1, 1, 1)
    assert hom_space_dims(1, 1) == (1, 3, 0, 1)
    assert hom_space_dims(1, 0) == (0, 2, 0, 2)
    assert sum(hom_space_dims(1, 1)) == 5


def test_hom_enumeration_size():
    mats = list(iter_hom_matrices(F2, 1, 0))
    assert len(mats) == 2**4
    assert sum(1 for m in mats if m.is_zero()) == 1


def test_isom_counts_against_closed_form():
    for field in (F2, F3, F4):
        assert isom_count(0, 0, field) == expected_isom_count(0, field.q)
    for field in (F2, F3):
        assert isom_count(1, 1, field) == expected_isom_count(1, field.q)
    assert isom_count(1, 0, F3) == 0


# ---------------------------------------------------------------------------
# defect divisors
# ---------------------------------------------------------------------------


def test_constant_rank1_matrix_has_empty_divisor():
    phi = HomMatrix(a1=0, a2=0, entries=((1,), (1,), (1,), (1,)))
    assert phi.det(F3) == ()
    assert defect_divisor_of_hom(F3, phi).degree == 0


def test_common_linear_factor_gives_rational_point():
    # second column (s, s) with s = t over E1 = O(1) + O(-1) -> E2 = O + O
    phi = HomMatrix(a1=1, a2=0, entries=((), (0, 1), (), (0, 1)))
    d = defect_divisor_of_hom(F2, phi)
    assert d.degree == 1
    assert d.parts[0][0] == rational_point(F2, 0)


def test_constant_section_of_o1_vanishes_at_infinity():
    # s = 1 in H^0(O(1)) has divisor = the point at infinity
    phi = HomMatrix(a1=1, a2=0, entries=((), (1, 0), (), (1, 0)))
    d = defect_divisor_of_hom(F2, phi)
    assert d.degree == 1
    assert d.parts[0][0].is_infinity


def test_coprime_entries_empty_divisor():
    phi = HomMatrix(a1=1, a2=0, entries=((), (0, 1), (), (1, 1)))  # t, t+1
    assert defect_divisor_of_hom(F2, phi).degree == 0


def test_defect_divisor_preconditions():
    zero = HomMatrix(a1=0, a2=0, entries=((), (), (), ()))
    with pytest.raises(ValueError):
        defect_divisor_of_hom(F2, zero)
    iso = HomMatrix(a1=0, a2=0, entries=((1,), (), (), (1,)))
    with pytest.raises(ValueError):
        defect_divisor_of_hom(F2, iso)


def test_defect_divisor_constant_on_scaling_orbits():
    for field in (F2, F3):
        for phi in iter_hom_matrices(field, 1, 0):
            if phi.is_zero():
                continue
            d = defect_divisor_of_hom(field, phi)
            for c in range(1, field.q):
                assert defect_divisor_of_hom(field, phi.scaled(field, c)) == d


def test_defect_divisor_invariant_under_automorphisms():
    rng = random.Random(5)
    for field in (F2, F3):
        boundary = [
            phi
            for phi in iter_hom_matrices(field, 1, 1)
            if not phi.is_zero() and not phi.det(field)
        ]
        sample = rng.sample(boundary, min(25, len(boundary)))
        for phi in sample:
            d = defect_divisor_of_hom(field, phi)
            for _ in range(3):
                pre = random_automorphism(field, 1, rng)
                post = random_automorphism(field, 1, rng)
                twisted = compose(field, post, compose(field, phi, pre))
                assert defect_divisor_of_hom(field, twisted) == d


# ---------------------------------------------------------------------------
# the function itself
# ---------------------------------------------------------------------------


@pytest.mark.parametrize("field", [F2, F3, F4, F5])
def test_drinfeld_value_diagonal(field):
    q = field.q
    res = drinfeld_value(0, 0, field)
    assert res.isom == q**3 - q
    assert res.value == 1 - q**2
    # every nonzero singular constant matrix contributes an empty product
    assert res.boundary_sum == q**3 + q**2 - q - 1
    # the alternative convention differs exactly by the nonunit isomorphisms
    assert res.value_including_nonunit_isos == res.value - (q - 2) * (q**3 - q)


def test_drinfeld_value_1_0_q2():
    res = drinfeld_value(1, 0, F2, histogram=True)
    assert res.isom == 0
    # 6 coprime pairs contribute +1, 9 pairs with a linear gcd contribute 1-q
    assert res.boundary_sum == 6 * 1 + 9 * (1 - 2)
    assert res.value == 3
    hist = dict(res.histogram)
    assert hist[()] == 6
    assert hist[((1, 1),)] == 9


def test_drinfeld_value_budget():
    with pytest.raises(BudgetExceededError):
        drinfeld_value(1, 1, F5, budget=100)


def test_boundary_factor():
    x = rational_point(F2, 0)
    y = closed_point(F2, (1, 1, 1))
    from vinbun.arith import EffectiveDivisor

    d = EffectiveDivisor.from_pairs([(x, 2), (y, 1)])
    # multiplicities do not enter: distinct points only
    assert boundary_factor(2, d) == (1 - 2) * (1 - 4)
    assert boundary_factor(2, EffectiveDivisor.from_pairs([(INFINITY, 3)])) == -1
