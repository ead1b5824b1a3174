import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from saitotree.curves import builtin_family
from saitotree.dicriticity import (check_mixed_inequality, configuration, configuration_expanded,
                                   configuration_matrix, configuration_table, delta_counts,
                                   find_mixed_branch, is_admissible, saito_bruteforce,
                                   saito_inductive, square_indices, theta01, theta02, theta11,
                                   theta_reference, white_components)
from saitotree.errors import TreeTooLarge
from saitotree.halfint import HalfInt
from saitotree.tree import build_tree, multiplicities, random_tree, valuations
from suite import random_suite

H = Fraction(1, 2)
SINGLE = build_tree()


@st.composite
def instances(draw, max_size=11):
    rng = random.Random(draw(st.integers(0, 2**32 - 1)))
    tree = random_tree(rng, draw(st.integers(1, max_size)), draw(st.sampled_from([0.2, 0.5, 0.8])))
    n = tuple(draw(st.lists(st.integers(0, 5), min_size=len(tree), max_size=len(tree))))
    return tree, n


def test_four_vertex_square_and_configuration():
    T, n = builtin_family("example1")
    D = (1, 0, 1, 0)
    assert delta_counts(T, D) == (0, 1, 1, 2)
    assert square_indices(T, n, D) == tuple(HalfInt.of(x) for x in (-H, 0, -H, 1))
    assert configuration(T, n, D) == (1, 1, 2, 0)
    assert saito_inductive(T, n) == saito_bruteforce(T, n) == (D, (1, 1, 2, 0))


def test_cusp_rows_from_definition():
    T, n = builtin_family("cusp")
    table = {D: adm for D, adm in configuration_table(T, n)}
    assert table[(1, 1, 0)].configuration == (1, 1, 0) and table[(1, 1, 0)].ok
    assert table[(0, 0, 0)].configuration == (-1, 0, 1)
    assert table[(1, 0, 0)].configuration == (2, 0, 0)
    assert table[(1, 1, 1)].configuration == (1, 1, 0)
    assert [v.vertex for v in table[(1, 1, 1)].violations] == [2]
    assert [D for D, adm in table.items() if adm] == [(1, 1, 0)]


def test_violation_report():
    T, n = builtin_family("cusp")
    adm = is_admissible(T, n, (1, 0, 0))
    assert not adm
    assert {(v.vertex, v.epsilon, v.bound, v.kind) for v in adm.violations} == {
        (1, 0, 2, "black"), (2, 0, 1, "black")}


@pytest.mark.parametrize("k, D, eps", [(0, 1, 1), (1, 1, 1), (2, 1, 2), (3, 0, 2), (4, 0, 2), (7, 0, 4)])
def test_single_vertex(k, D, eps):
    assert saito_inductive(SINGLE, (k,)) == ((D,), (eps,))


def test_double_cusp():
    T, n = builtin_family("double_cusp")
    assert multiplicities(T) == (1, 1, 1, 2, 2)
    assert valuations(T, n)[0] == 4
    assert saito_inductive(T, n) == ((1, 1, 1, 0, 0), (1, 1, 1, 0, 0))


def test_bruteforce_cap():
    with pytest.raises(TreeTooLarge):
        saito_bruteforce(build_tree([0] * 5), (0,) * 6, cap=5)


def test_theta_single_vertex():
    assert theta01(SINGLE, (0,), 0) == HalfInt(-3)
    assert theta01(SINGLE, (3,), 0) == HalfInt(-1)
    assert theta02(SINGLE, (0,), 0, 0) == -2
    assert theta02(SINGLE, (1,), 0, 0) == -1
    # definition gives -1, which lies in the stated range {-2, -1}
    assert theta11(SINGLE, (0,), 0, 0) == -1


def test_theta01_cusp():
    T, n = builtin_family("cusp")
    # vertex 2 has multiplicity 2; vertex 1 is the last one of multiplicity 1
    assert theta01(T, n, 1) == theta_reference(T, n, 1) == -2


def test_white_components():
    T, n = builtin_family("example1")
    assert white_components(T, (1, 0, 1, 0)) == [frozenset({0}), frozenset({2})]
    assert white_components(T, (1, 1, 1, 1)) == [frozenset({0, 1, 2, 3})]


def test_mixed_branch_single_vertex():
    rep = find_mixed_branch(SINGLE, (2,), 0)
    assert rep is not None and rep.is_pure and rep.m_c == 0
    assert check_mixed_inequality(rep)
    assert find_mixed_branch(SINGLE, (0,), 0) is None


@given(instances())
@settings(max_examples=120, deadline=None)
def test_configuration_routes_agree(inst):
    tree, n = inst
    rng = random.Random(len(tree))
    for _ in range(4):
        D = tuple(rng.randint(0, 1) for _ in tree.vertices)
        assert configuration_matrix(tree, n, D) == configuration_expanded(tree, n, D)


@given(instances())
@settings(max_examples=120, deadline=None)
def test_inductive_matches_bruteforce(inst):
    tree, n = inst
    assert saito_inductive(*inst) == saito_bruteforce(*inst)


def test_random_suite_properties():
    for T, n in random_suite():
        D, eps = saito_inductive(T, n)
        rho = multiplicities(T)
        # root identity: sum rho*eps = nu_root/2 - square_root
        sq = square_indices(T, n, D)
        assert sum(r * e for r, e in zip(rho, eps)) == HalfInt(valuations(T, n)[0]) - sq[0]
        for c in T.vertices:
            if rho[c] == 1:
                assert theta01(T, n, c) == theta_reference(T, n, c)
                assert check_mixed_inequality(find_mixed_branch(T, n, c))
