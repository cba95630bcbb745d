from fractions import Fraction
from itertools import combinations

import pytest
from hypothesis import given
from hypothesis import strategies as st

from glwedge.hyperalgebra import (
    E,
    F,
    H,
    HyperElement,
    PBWMonomial,
    VermaModule,
    enumerate_pbw,
    normal_order,
    pairing,
    pairing_by_normal_order,
    positive_roots,
    transpose,
)
from glwedge.linalg import BudgetExceeded


def mono(*factors):
    return PBWMonomial(tuple(factors))


def test_root_order():
    assert positive_roots(4) == [(1, 2), (1, 3), (2, 3), (1, 4), (2, 4), (3, 4)]


def test_enumerate_pbw_examples():
    assert enumerate_pbw([1]) == [mono(((1, 2), 1))]
    assert enumerate_pbw([2]) == [mono(((1, 2), 2))]
    assert enumerate_pbw([1, 1]) == [mono(((1, 2), 1), ((2, 3), 1)), mono(((1, 3), 1))]
    assert enumerate_pbw([0, 0]) == [PBWMonomial()]
    with pytest.raises(ValueError):
        enumerate_pbw([1, -1])


# Kostant partition function for A2: K(a alpha1 + b alpha2) = min(a, b) + 1
@pytest.mark.parametrize("a, b", [(0, 3), (2, 2), (3, 1), (4, 6)])
def test_enumerate_pbw_counts_a2(a, b):
    basis = enumerate_pbw([a, b])
    assert len(basis) == min(a, b) + 1
    assert len(set(basis)) == len(basis)
    for m in basis:
        assert m.weight(3) == (a, b - a, -b)


def test_pbw_monomial_validation():
    with pytest.raises(ValueError):
        mono(((2, 3), 1), ((1, 2), 1))
    with pytest.raises(ValueError):
        mono(((1, 2), 0))
    assert repr(mono(((1, 2), 2), ((2, 3), 1))) == "F12^(2)F23"


def test_transpose_examples():
    assert transpose(mono(((1, 2), 1), ((2, 3), 1))) == (E(2, 3), E(1, 2))
    assert transpose(mono(((1, 3), 2))) == (E(1, 3, 2),)
    assert transpose(PBWMonomial()) == ()


def test_generator_validation():
    with pytest.raises(ValueError):
        E(2, 1)
    with pytest.raises(ValueError):
        F(3, 3)
    with pytest.raises(ValueError):
        normal_order([E(1, 4)], n=3)


def lhs_minus_rhs(lhs, rhs, n):
    total = normal_order(lhs, n)
    for c, word in rhs:
        total = total - c * normal_order(word, n)
    return total


def relation_instances(n, r):
    for i, j, k in combinations(range(1, n + 1), 3):
        yield [F(i, j, r), E(i, k)], [(1, [E(i, k), F(i, j, r)]), (1, [F(i, j, r - 1), E(j, k)])]
        yield [F(i, k, r), E(i, j)], [(1, [E(i, j), F(i, k, r)]), (1, [F(i, k, r - 1), F(j, k)])]
        yield [E(i, k, r), F(j, k)], [(1, [F(j, k), E(i, k, r)]), (1, [E(i, k, r - 1), E(i, j)])]
        yield [E(j, k, r), F(i, k)], [(1, [F(i, k), E(j, k, r)]), (1, [E(j, k, r - 1), F(i, j)])]
        yield [E(i, j, r), E(j, k)], [(1, [E(j, k), E(i, j, r)]), (1, [E(i, j, r - 1), E(i, k)])]


@pytest.mark.parametrize("n", [3, 4, 5])
@pytest.mark.parametrize("r", [1, 2, 3, 4])
def test_three_index_commutators(n, r):
    for lhs, rhs in relation_instances(n, r):
        assert lhs_minus_rhs(lhs, rhs, n) == HyperElement(n), lhs


@pytest.mark.parametrize("n", [2, 3, 4, 5])
def test_ef_commutator_and_commuting_pairs(n):
    for i, j in combinations(range(1, n + 1), 2):
        assert lhs_minus_rhs([E(i, j), F(i, j)], [(1, [F(i, j), E(i, j)]), (1, [H(i)]), (-1, [H(j)])], n) == HyperElement(n)
        for h, k in combinations(range(1, n + 1), 2):
            if i != h and j != k:
                assert lhs_minus_rhs([E(i, j), F(h, k)], [(1, [F(h, k), E(i, j)])], n) == HyperElement(n)
            if i != k and j != h:
                assert lhs_minus_rhs([E(i, j), E(h, k)], [(1, [E(h, k), E(i, j)])], n) == HyperElement(n)


@pytest.mark.parametrize("n", [2, 3, 4, 5])
@pytest.mark.parametrize("r", [1, 2, 3, 4])
def test_h_moves_past_f(n, r):
    for i, j in combinations(range(1, n + 1), 2):
        for a in range(1, n + 1):
            shift = -r * (a == i) + r * (a == j)
            rhs = [(1, [F(i, j, r), H(a)])]
            if shift:
                rhs.append((shift, [F(i, j, r)]))
            assert lhs_minus_rhs([H(a), F(i, j, r)], rhs, n) == HyperElement(n)


def test_divided_power_h_is_binomial():
    # E12^(2) F12^(2) v+ = binom(lam1 - lam2, 2) v+
    elt = normal_order([E(1, 2, 2), F(1, 2, 2)], n=2)
    for a in range(6):
        assert elt.vacuum_coefficient((a, 0)) == Fraction(a * (a - 1), 2)
    h = normal_order([H(1, 3)], n=1)
    assert h.vacuum_coefficient((5,)) == 10


def test_normal_order_budget():
    with pytest.raises(BudgetExceeded):
        normal_order([E(1, 3, 3), F(1, 2, 3), F(2, 3, 3)], n=3, max_steps=10)


words = st.lists(
    st.one_of(
        st.builds(lambda ij, r: E(*ij, r), st.sampled_from(list(combinations(range(1, 4), 2))), st.integers(1, 2)),
        st.builds(lambda ij, r: F(*ij, r), st.sampled_from(list(combinations(range(1, 4), 2))), st.integers(1, 2)),
        st.builds(H, st.integers(1, 3), st.integers(1, 2)),
    ),
    max_size=5,
)


@given(words)
def test_normal_order_preserves_weight(word):
    elt = normal_order(word, n=3)
    net = [0, 0, 0]
    for g in word:
        sign = {"E": 1, "F": -1, "H": 0}[g.kind]
        if sign:
            net[g.i - 1] += sign * g.r
            net[g.j - 1] -= sign * g.r
    assert elt.net_weights() <= {tuple(net)}


@given(words)
def test_normal_form_is_fixed_point(word):
    elt = normal_order(word, n=3)
    again = HyperElement(3)
    for (f, h, e), c in elt.terms.items():
        hs = [H(a + 1) for a, k in enumerate(h) for _ in range(k)]
        again = again + c * normal_order(list(f.as_f_word()) + hs + list(e.as_e_word()), n=3)
    assert again == elt


# pairings written out by hand from the commutators
@pytest.mark.parametrize("lam", [(3, 1, 0), (5, 2, -1), (0, 0, 0), (4, 4, 1)])
def test_basic_pairings(lam):
    l1, l2, l3 = lam
    assert pairing([E(1, 2)], [F(1, 2)], lam) == l1 - l2
    assert pairing([E(1, 3)], [F(1, 3)], lam) == l1 - l3
    assert pairing([E(1, 2), E(2, 3)], [F(1, 3)], lam) == l1 - l2
    assert pairing([E(1, 3)], [F(1, 2), F(2, 3)], lam) == -(l2 - l3)
    assert pairing([E(1, 2, 2)], [F(1, 2, 2)], lam) == (l1 - l2) * (l1 - l2 - 1) // 2


def test_two_routes_agree():
    for lam in [(3, 1, 0), (2, 2, 0), (4, 1, 1, 0), (2, 1, 0, 0)]:
        n = len(lam)
        for target in [(1, 1) + (0,) * (n - 3), (2, 1) + (0,) * (n - 3), (1, 2, 1)[: n - 1]]:
            basis = enumerate_pbw(target)
            for x in basis:
                for y in basis:
                    a = pairing(transpose(x), y, lam)
                    b = pairing_by_normal_order(transpose(x), y.as_f_word(), lam)
                    assert a == b


def test_pairing_weight_mismatch_is_zero():
    assert pairing([E(1, 2)], [F(2, 3)], (3, 1, 0)) == 0
    assert pairing([E(1, 3)], [], (3, 1, 0)) == 0


small_lams = st.lists(st.integers(0, 5), min_size=3, max_size=4).map(lambda w: tuple(sorted(w, reverse=True)))


@given(small_lams, st.data())
def test_pairing_is_symmetric_and_integral(lam, data):
    n = len(lam)
    target = data.draw(st.lists(st.integers(0, 2), min_size=n - 1, max_size=n - 1))
    basis = enumerate_pbw(target)
    vm = VermaModule(lam)
    for x in basis:
        for y in basis:
            a = vm.pair(x, y)
            assert isinstance(a, int)
            assert a == vm.pair(y, x)
            assert a == pairing(transpose(x), y, lam)
