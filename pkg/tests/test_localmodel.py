import itertools
import random
from fractions import Fraction

import pytest

from vinbun.arith import (
    EffectiveDivisor,
    build_field,
    poly_gcd,
    poly_mul,
    poly_normalize,
    rational_point,
)
from vinbun.budget import BudgetExceededError
from vinbun.kcalc import trace_omega_tilde
from vinbun.localmodel import (
    build_system,
    count_points,
    defect_profile,
    expected_strata_counts,
    factor_d_table,
    factor_defect,
    g_locus_count,
    gm_orbit_check,
    make_solution_point,
    omega_point_count_identity,
    per_fiber_uniformity,
    point_satisfies,
    strata_counts,
    _iter_factor_solutions,
    _iter_factor_solutions_naive,
)

F2 = build_field(2, 1)
F3 = build_field(3, 1)
F4 = build_field(2, 2)
F5 = build_field(5, 1)


# ---------------------------------------------------------------------------
# equation systems
# ---------------------------------------------------------------------------


def test_build_system_m1():
    sys1 = build_system([1])
    assert sys1.factor_equations(1) == []
    assert sys1.equations_text() == []
    assert sys1.variable_count() == 2


def test_build_system_m2_single_equation():
    sys2 = build_system([2])
    assert sys2.equations_text() == ["a[-2]*b[1] + a[-1]*b[0] = 0"]


def test_build_system_m3_text():
    sys3 = build_system([3])
    assert sys3.equations_text() == [
        "a[-3]*b[1] + a[-2]*b[0] = 0",
        "a[-3]*b[2] + a[-2]*b[1] + a[-1]*b[0] = 0",
    ]


def test_build_system_fiber_product_coupling():
    sys11 = build_system([1, 1])
    assert sys11.equations_text() == ["a1[-1]*b1[0] = a2[-1]*b2[0]"]


def test_build_system_rejects_bad_input():
    with pytest.raises(ValueError):
        build_system([])
    with pytest.raises(ValueError):
        build_system([0, 2])


# ---------------------------------------------------------------------------
# counting
# ---------------------------------------------------------------------------


@pytest.mark.parametrize("field", [F2, F3, F4, F5])
def test_hyperbola_counts(field):
    q = field.q
    sys1 = build_system([1])
    assert count_points(sys1, field, "nonzero") == (q - 1) ** 2
    assert count_points(sys1, field, "zero") == 2 * q - 1
    for c in range(1, q):
        assert count_points(sys1, field, c) == q - 1
    assert count_points(sys1, field, "any") == q * q


@pytest.mark.parametrize("field", [F2, F3, F4, F5])
def test_quadric_cone_counts(field):
    q = field.q
    sys2 = build_system([2])
    assert count_points(sys2, field, "any") == q**3 + q**2 - q
    assert count_points(sys2, field, "zero") == 3 * q**2 - 2 * q
    # the [1,1] fiber product over the d-line gives the same polynomial
    sys11 = build_system([1, 1])
    assert count_points(sys11, field, "any") == q**3 + q**2 - q


@pytest.mark.parametrize("field", [F2, F3])
def test_optimized_matches_naive(field):
    for mults in ([1], [2], [3], [1, 1], [2, 1]):
        system = build_system(mults)
        for constraint in ("any", "zero", "nonzero", 1):
            assert count_points(system, field, constraint) == count_points(
                system, field, constraint, naive=True
            ), (mults, constraint)


@pytest.mark.parametrize("field", [F2, F3])
def test_factor_iterators_agree(field):
    for m in (1, 2, 3):
        fast = sorted(_iter_factor_solutions(field, m))
        naive = sorted(_iter_factor_solutions_naive(field, m))
        assert fast == naive


def test_factorization_in_families_literal():
    # coupled count at d = c equals the product of per-factor d = c counts,
    # verified against the naive coupled enumeration
    for field in (F2, F3):
        t1 = factor_d_table(field, 1)
        t2 = factor_d_table(field, 2)
        system = build_system([2, 1])
        for c in range(field.q):
            assert count_points(system, field, c, naive=True) == t2.get(c, 0) * t1.get(
                c, 0
            )


def test_jobs_partitioning_deterministic():
    for field in (F3, F4):
        for m in (1, 2, 3):
            base = factor_d_table(field, m, jobs=1)
            assert factor_d_table(field, m, jobs=4) == base
            assert factor_d_table(field, m, jobs=16) == base


def test_budget_exceeded():
    with pytest.raises(BudgetExceededError):
        count_points(build_system([4]), F5, "any", budget=1000)


# ---------------------------------------------------------------------------
# defect
# ---------------------------------------------------------------------------


def snf_defect_oracle(field, m, a, b):
    """Independent route: valuation at t of the gcd of the entries of the
    2x2 matrix [[t^m, f], [-g t^m, -g f]], computed with polynomial gcds
    over F_q[t] (the first invariant factor of the Smith normal form)."""
    f_poly = poly_normalize(b)
    g_poly = poly_normalize(a)  # already multiplied by t^m in these coords
    entries = [(0,) * m + (1,), f_poly, tuple(field.neg(c) for c in g_poly)]
    prod = poly_mul(field, g_poly, f_poly)
    if prod:
        assert all(c == 0 for c in prod[:m])  # the defining equations
        entries.append(tuple(field.neg(c) for c in prod[m:]))
    g = ()
    for e in entries:
        g = poly_gcd(field, g, e)
    ord_t = next(i for i, c in enumerate(g) if c)
    return ord_t


def test_defect_examples():
    # the all-zero point of a multiplicity-m factor has defect m
    assert factor_defect(F3, 2, (0, 0), (0, 0)) == 2
    assert factor_defect(F3, 3, (0, 0, 0), (0, 0, 0)) == 3
    # [1]: a nonzero, b = 0 is on an axis, defect 0
    assert factor_defect(F3, 1, (2,), (0,)) == 0
    # [2]: a = (0, 1), b = (0, 1) has defect 0 (constant term of -g f is 1)
    assert factor_defect(F3, 2, (0, 1), (0, 1)) == 0


@pytest.mark.parametrize("field", [F2, F3, F4])
def test_defect_matches_snf_oracle(field):
    for m in (1, 2, 3):
        for a, b in _iter_factor_solutions(field, m):
            if field.mul(a[0], b[0]) != 0:
                continue
            assert factor_defect(field, m, a, b) == snf_defect_oracle(field, m, a, b)


def test_defect_profile_and_errors():
    system = build_system([2, 1])
    pt = make_solution_point(F3, [((0, 0), (0, 0)), ((0,), (1,))])
    prof = defect_profile(system, F3, pt)
    assert prof.per_factor == (2, 0)
    assert prof.total == 2
    g_pt = make_solution_point(F3, [((1, 0), (1, 0)), ((1,), (1,))])
    with pytest.raises(ValueError):
        defect_profile(system, F3, g_pt)
    with pytest.raises(ValueError):
        make_solution_point(F3, [((1, 0), (1, 0)), ((1,), (2,))])


def test_defect_zero_locus_is_open_complement():
    # defect 0 <=> not (a_{-n} = 0 and b_0 = 0 and sum_{i+j=0} a_i b_j = 0)
    for field in (F2, F3):
        for n in (1, 2, 3):
            for a, b in _iter_factor_solutions(field, n):
                if field.mul(a[0], b[0]) != 0:
                    continue
                c0 = 0
                for ai in range(n):
                    j = n - ai
                    if 0 <= j < n:
                        c0 = field.add(c0, field.mul(a[ai], b[j]))
                removed = a[0] == 0 and b[0] == 0 and c0 == 0
                assert (factor_defect(field, n, a, b) == 0) == (not removed)


# ---------------------------------------------------------------------------
# strata
# ---------------------------------------------------------------------------


def test_strata_n1():
    for field in (F2, F3, F5):
        q = field.q
        assert strata_counts(1, field) == {0: 2 * (q - 1), 1: 1}


@pytest.mark.parametrize("field", [F2, F3, F4, F5])
def test_strata_match_closed_form(field):
    q = field.q
    for n in (1, 2, 3):
        counts = strata_counts(n, field)
        expected = expected_strata_counts(n, q)
        assert counts == {k: v for k, v in expected.items() if v}
        # totals partition the B-locus
        assert sum(counts.values()) == count_points(build_system([n]), field, "zero")


def test_strata_n2_formula():
    for field in (F2, F3, F5):
        q = field.q
        counts = strata_counts(2, field)
        assert counts[0] == 2 * (q**2 - q) + (q - 1) ** 2
        assert counts[1] == 2 * (q - 1)
        assert counts[2] == 1


# ---------------------------------------------------------------------------
# uniformity, contraction orbit, omega identity
# ---------------------------------------------------------------------------


def test_per_fiber_uniformity():
    assert per_fiber_uniformity(1, F3)
    assert per_fiber_uniformity(2, F3)
    assert per_fiber_uniformity(3, F3)
    t = factor_d_table(F3, 2)
    assert all(t[c] == 3 * 2 for c in range(1, 3))  # q(q-1) at n=2


def test_gm_orbit_exhaustive():
    for field in (F2, F3, F4):
        for mults in ([1], [2]):
            system = build_system(mults)
            for a, b in _iter_factor_solutions(field, mults[0]):
                pt = make_solution_point(field, [(a, b)])
                for c in range(1, field.q):
                    assert gm_orbit_check(system, field, pt, c)


def test_point_satisfies_rejects_bad_point():
    system = build_system([2])
    good = make_solution_point(F3, [((0, 1), (0, 1))])
    assert point_satisfies(system, F3, good)
    bad = make_solution_point(F3, [((1, 1), (1, 1))])
    assert not point_satisfies(system, F3, bad)


def test_omega_identity_examples():
    x3 = rational_point(F3, 0)
    d = EffectiveDivisor.from_pairs([(x3, 1)])
    assert g_locus_count(F3, (1,)) == 4  # (q-1)^2 = 3*2*(2/3)
    assert omega_point_count_identity(1, d, F3)

    x2 = rational_point(F2, 0)
    d2 = EffectiveDivisor.from_pairs([(x2, 2)])
    assert g_locus_count(F2, (2,)) == 2  # 4 * 1 * (1/2)
    assert omega_point_count_identity(2, d2, F2)

    y1, y2 = rational_point(F3, 0), rational_point(F3, 1)
    dsplit = EffectiveDivisor.from_pairs([(y1, 1), (y2, 1)])
    assert g_locus_count(F3, (1, 1)) == 8  # 9 * 2 * (4/9)
    assert omega_point_count_identity(2, dsplit, F3)


def test_omega_identity_rejects_irrational_support():
    from vinbun.arith import enumerate_closed_points

    y = [p for p in enumerate_closed_points(F2, 2) if p.degree == 2][0]
    d = EffectiveDivisor.from_pairs([(y, 1)])
    with pytest.raises(ValueError):
        omega_point_count_identity(2, d, F2)


def test_open_zastava_count_vs_omega_trace():
    # q^n * omega-trace equals the defect-free count with d = 1 (the open
    # Zastava fiber), factor by factor
    for field in (F2, F3):
        q = field.q
        for n in (1, 2, 3):
            x = rational_point(field, 0)
            d = EffectiveDivisor.from_pairs([(x, n)])
            trace = trace_omega_tilde(n, d).at_q(q)
            assert Fraction(q**n) * trace == factor_d_table(field, n)[1]
