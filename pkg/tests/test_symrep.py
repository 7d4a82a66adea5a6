from math import factorial

import pytest

from vinbun.symrep import (
    TwoColumnDiagram,
    VirtualRep,
    character,
    character_table,
    class_size,
    conjugate,
    cycle_types,
    decompose_class_function,
    dimension,
    hook_length_dimension,
    murnaghan_nakayama,
    partitions,
    sign_character,
    sign_partition,
    trivial_partition,
    two_column_diagrams,
)


def test_partitions_and_conjugate():
    assert partitions(4) == ((4,), (3, 1), (2, 2), (2, 1, 1), (1, 1, 1, 1))
    assert conjugate((3, 1)) == (2, 1, 1)
    assert conjugate(conjugate((4, 2, 1))) == (4, 2, 1)


def test_two_column_dimensions():
    assert dimension(TwoColumnDiagram(2, 0)) == 1  # sign
    assert dimension(TwoColumnDiagram(2, 1)) == 1  # trivial
    assert dimension(TwoColumnDiagram(4, 1)) == 3
    with pytest.raises(ValueError):
        TwoColumnDiagram(3, 2)


def test_dimension_against_hook_lengths_and_identity_character():
    # three independent routes to the dimension must agree
    for k in range(1, 9):
        for diagram in two_column_diagrams(k):
            lam = diagram.partition
            d_formula = dimension(diagram)
            d_hooks = hook_length_dimension(lam)
            d_char = murnaghan_nakayama(lam, (1,) * k)
            assert d_formula == d_hooks == d_char


def test_sign_and_trivial_characters():
    assert character("sign", (3,)) == 1
    assert character("sign", (2, 1)) == -1
    for k in range(1, 7):
        for c in cycle_types(k):
            assert character("trivial", c) == 1
            # the MN value of the single-column partition equals the closed form
            assert murnaghan_nakayama(sign_partition(k), c) == sign_character(c)
            assert murnaghan_nakayama(trivial_partition(k), c) == 1


def test_character_example_k3():
    assert character(TwoColumnDiagram(3, 1), (1, 1, 1)) == 2


def test_size_mismatch_raises():
    with pytest.raises(ValueError):
        character(TwoColumnDiagram(3, 1), (2, 2))


def test_column_orthogonality():
    for k in range(1, 9):
        cts = cycle_types(k)
        for ci in cts:
            for cj in cts:
                total = sum(
                    murnaghan_nakayama(lam, ci) * murnaghan_nakayama(lam, cj)
                    for lam in partitions(k)
                )
                if ci == cj:
                    assert total * class_size(ci) == factorial(k)
                else:
                    assert total == 0


def test_sum_of_squares_of_dimensions():
    for k in range(1, 7):
        assert sum(hook_length_dimension(lam) ** 2 for lam in partitions(k)) == factorial(k)


def test_transposition_flips_by_sign():
    # character of the conjugate diagram = sign * character, checked on the
    # two-column / two-row pairs
    for k in range(1, 8):
        for diagram in two_column_diagrams(k):
            for c in cycle_types(k):
                lhs = murnaghan_nakayama(diagram.transpose_partition, c)
                rhs = sign_character(c) * murnaghan_nakayama(diagram.partition, c)
                assert lhs == rhs


def test_decompose_regular_representation():
    for k in (2, 3, 4):
        values = {c: 0 for c in cycle_types(k)}
        values[(1,) * k] = factorial(k)
        rep = decompose_class_function(values, k)
        for lam, m in rep.mults.items():
            assert m == hook_length_dimension(lam)
        assert set(rep.mults) == set(partitions(k))


def test_decompose_sign_character():
    for k in (2, 3, 4, 5):
        values = {c: sign_character(c) for c in cycle_types(k)}
        rep = decompose_class_function(values, k)
        assert rep == VirtualRep(k, {sign_partition(k): 1})


def test_decompose_s2_example():
    rep = decompose_class_function({(1, 1): 4, (2,): 0}, 2)
    assert rep == VirtualRep(2, {(2,): 2, (1, 1): 2})


def test_decompose_rejects_non_character():
    with pytest.raises(ValueError):
        decompose_class_function({(1, 1): 1, (2,): 0}, 2)
    with pytest.raises(ValueError):
        decompose_class_function({(1, 1): 4}, 2)


def test_virtual_rep_algebra():
    a = VirtualRep.irreducible((2, 1))
    b = VirtualRep.irreducible((3,))
    s = a + b
    assert s.dimension() == 3
    assert (s - a) == b
    assert character(s, (3,)) == character((2, 1), (3,)) + 1


def test_character_table_shape():
    cts, lams, rows = character_table(4)
    assert len(cts) == len(lams) == 5
    # first column (identity) lists the dimensions
    idx = cts.index((1, 1, 1, 1))
    for lam, row in zip(lams, rows):
        assert row[idx] == hook_length_dimension(lam)
