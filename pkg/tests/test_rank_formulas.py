from itertools import combinations

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from glwedge.gram_oracle import dim_simple_weight_space, gram_matrix
from glwedge.rank_formulas import (
    MultiplicityReport,
    branching_x_rank,
    build_M,
    build_W,
    build_X,
    build_Y,
    closed_form_s_minus_1,
    hypotheses,
    multiplicity_main,
    ranks,
    t_values,
    x_rank,
)
from glwedge.weights import alpha, distinguished, iter_tail_zero_weights, last_nonzero, sub

# dominant lam with two trailing zeros, n = 4..6
tail_zero = st.integers(4, 6).flatmap(
    lambda n: st.lists(st.integers(0, 5), min_size=n - 2, max_size=n - 2).map(
        lambda head: tuple(sorted(head, reverse=True)) + (0, 0)
    )
).filter(lambda lam: last_nonzero(lam) >= 1)


def test_x_y_base_cases():
    lam = (5, 3, 1, 0)
    assert build_X(1, 3, 2, 1, lam) == [[5 - 1]]
    assert build_X(2, 4, 3, 3, lam) == [[1]]
    assert build_Y(1, 3, 2, 2, lam) == [[-(3 - 1)]]


# one recursion step worked by hand
def test_x_y_one_step():
    assert build_X(1, 3, 1, 1, (3, 1, 0)) == [[3, -1], [2, 2]]
    assert build_X(1, 3, 1, 1, (1, 1, 0)) == [[1, -1], [0, 0]]
    assert build_Y(1, 3, 1, 2, (3, 1, 0)) == [[-1, 1], [0, -2]]


def test_x_matches_gram_rank_small():
    lam = (3, 1, 0)
    x = build_X(1, 3, 1, 1, lam)
    g = gram_matrix(lam, sub(lam, alpha(3, 1, 3)))
    assert x.rank_q() == g.rank_q() == 2
    for p in (3, 5, 7):
        assert x.rank_mod(p) == g.rank_mod(p)


def test_index_errors():
    with pytest.raises(ValueError):
        build_X(2, 2, 2, 2, (1, 0, 0))
    with pytest.raises(ValueError):
        build_X(1, 3, 3, 1, (1, 0, 0))
    with pytest.raises(ValueError):
        build_X(2, 3, 2, 1, (1, 0, 0))
    with pytest.raises(ValueError):
        build_Y(1, 4, 1, 1, (1, 0, 0))
    with pytest.raises(ValueError):
        build_M(2, (2, 1, 0, 0))
    with pytest.raises(ValueError):
        build_W(1, (2, 1, 1, 0))
    with pytest.raises(ValueError):
        multiplicity_main((0, 0, 0, 0, 0), 1, 3)


def test_block_sizes():
    lam = (6, 5, 4, 3, 2, 1, 0, 0)
    n, s = len(lam), 6
    for i, j in combinations(range(1, n + 1), 2):
        for u in range(i, j):
            assert build_X(i, j, u, i, lam).shape == (2 ** (j - 1 - u),) * 2
            assert build_Y(i, j, u, j - 1, lam).shape == (2 ** (j - 1 - u),) * 2
    for i in range(1, s):
        size = 2 ** (s - i - 1)
        assert build_M(i, lam).shape == (3 * size, 3 * size)
        assert build_W(i, lam).shape == (2 * size, 2 * size)


def test_y_scaling_identity():
    checked = 0
    for n in (5, 6):
        for lam in iter_tail_zero_weights(n, 8):
            for i, j in combinations(range(1, n + 1), 2):
                for u in range(i, j):
                    for l in range(2, n + 1):
                        den = lam[l - 2] - lam[j - 1]
                        if den == 0:
                            continue
                        left = build_Y(i, j, u, l, lam).entries * den
                        right = build_Y(i, j, u, l - 1, lam).entries * (lam[l - 1] - lam[j - 1])
                        assert np.array_equal(left, right)
                        checked += 1
    assert checked > 1000


def closed_m(lam):
    s = last_nonzero(lam)
    a, b = lam[s - 1], lam[s - 2]
    return [
        [a * b, -a, -(a - 1) * a],
        [-a, a * b, -(a - 1) * a],
        [a * (b - a), a * (b - a), a * (a - 1) * (b - a)],
    ]


def closed_w(lam):
    s = last_nonzero(lam)
    a, b = lam[s - 1], lam[s - 2]
    return [[a * (b - 1), -(a - 1) * a], [a * (b - a), a * (a - 1) * (b - a) // 2]]


def test_m_w_at_i_equal_s_minus_1():
    for n in (4, 5, 6):
        for lam in iter_tail_zero_weights(n, 9):
            s = last_nonzero(lam)
            if s < 2:
                continue
            assert build_M(s - 1, lam) == closed_m(lam)
            assert build_W(s - 1, lam) == closed_w(lam)


def test_w_half_entry_is_exact():
    # lam_s = 3: (1/2) * 3 * 2 = 3 times (lam_{s-1} - lam_s) = 1
    assert build_W(1, (4, 3, 0, 0)).tolist()[1][1] == 3


def test_m_w_example_ranks():
    lam = (1, 1, 0, 0)
    _, m, w = ranks(lam, 3, 1)
    assert m - w == 1
    # p | lam_s: both matrices carry a factor lam_s and vanish mod p
    lam = (3, 3, 0, 0)
    _, m, w = ranks(lam, 3, 1)
    assert m == w == 0


@pytest.mark.parametrize("lam", [(2, 1, 0, 0), (3, 2, 1, 0, 0), (2, 2, 1, 0, 0), (4, 2, 1, 0, 0, 0)])
@pytest.mark.parametrize("p", [3, 5])
def test_ranks_agree_with_gram_oracle(lam, p):
    n, s = len(lam), last_nonzero(lam)
    for i, j in combinations(range(1, n + 1), 2):
        assert x_rank(i, j, lam, p) == dim_simple_weight_space(lam, sub(lam, alpha(n, i, j)), p)
    for i in range(1, s):
        d = distinguished(lam, i)
        _, m, w = ranks(lam, p, i)
        assert m == dim_simple_weight_space(lam, d.mu_up_i, p)
        assert w == dim_simple_weight_space(lam, d.omega_up_i, p)


def test_x_adjacent_closed_form():
    for lam in [(5, 2, 0, 0), (4, 1, 1, 0, 0), (7, 0, 0)]:
        for p in (3, 5, 7):
            for i in range(1, len(lam)):
                expected = 0 if (lam[i - 1] - lam[i]) % p == 0 else 1
                assert x_rank(i, i + 1, lam, p) == expected


def test_branching_x_uses_shifted_weight():
    # x_{1,2} for lam = (5,1,1,0,0), p = 5 is read at lam - eps_2 - eps_3 = (5,0,0,0,0)
    lam = (5, 1, 1, 0, 0)
    assert x_rank(1, 2, lam, 5) == 1
    assert branching_x_rank(1, 2, lam, 5) == 0


@pytest.mark.parametrize(
    "lam, p, expected",
    [
        ((5, 3, 3, 0, 0), 3, 0),  # p | lam_s
        ((4, 2, 1, 0, 0), 3, 0),  # p | lam_{s-1} + 1
        ((3, 1, 1, 0, 0), 5, 1),
        ((1, 1, 0, 0, 0), 3, 1),
        ((1, 1, 0, 0, 0), 7, 1),
    ],
)
def test_closed_form_examples(lam, p, expected):
    s = last_nonzero(lam)
    assert closed_form_s_minus_1(lam, p) == expected
    assert t_values(lam, p, s - 1)[s - 1] == expected


@given(tail_zero, st.sampled_from([3, 5, 7]))
def test_t_top_equals_closed_form(lam, p):
    s = last_nonzero(lam)
    if s < 2:
        return
    _, m, w = ranks(lam, p, s - 1)
    t = t_values(lam, p, s - 1)
    assert t[s - 1] == m - w == closed_form_s_minus_1(lam, p)


@given(tail_zero, st.sampled_from([3, 5, 7]))
def test_t_recursion(lam, p):
    s = last_nonzero(lam)
    if s < 2:
        return
    t = t_values(lam, p, 1)
    assert sorted(t) == list(range(1, s))
    for a in range(1, s):
        _, m, w = ranks(lam, p, a)
        rest = sum(t[r] * branching_x_rank(a, r, lam, p) for r in range(a + 1, s))
        assert t[a] == m - w - rest
    # the lam-literal variant differs only through the x values
    t_lit = t_values(lam, p, s - 1, x_source="lambda")
    assert t_lit[s - 1] == t[s - 1]


def test_t_values_errors():
    with pytest.raises(ValueError):
        t_values((2, 1, 0, 0), 3, 2)
    with pytest.raises(ValueError):
        t_values((2, 1, 0, 0), 3, 1, x_source="other")


def test_hypotheses_flags():
    h = hypotheses((1, 1, 0, 0, 0), 1, 3)
    assert all(h.values())
    # s - lam_s = 2 - 1 = 1 = n mod 3 for n = 4
    h = hypotheses((1, 1, 0, 0), 1, 3)
    assert not h["s-lam_s!=n mod p"]
    assert h["lam_s=1 or s<n-2"]
    h = hypotheses((2, 2, 0, 0), 1, 5)
    assert not h["lam_s=1 or s<n-2"]


def test_multiplicity_main_example():
    r = multiplicity_main((1, 1, 0, 0, 0), 1, 3)
    assert r.s == 2
    assert r.applicable
    assert r.multiplicity == 1
    assert r.t == {1: 1}


def test_multiplicity_main_inapplicable():
    r = multiplicity_main((1, 1, 0, 0), 1, 3)
    assert not r.applicable
    assert r.multiplicity is None
    assert 1 in r.t


@given(tail_zero, st.sampled_from([3, 5, 7]))
def test_report_json_round_trip_and_nonnegative(lam, p):
    s = last_nonzero(lam)
    if s < 2:
        return
    r = multiplicity_main(lam, 1, p)
    assert MultiplicityReport.from_json(r.to_json()) == r
    assert list(r.to_json()) == ["lambda", "p", "i", "s", "x", "m", "w", "t", "hypotheses", "multiplicity", "applicable"]
    if r.applicable:
        assert r.multiplicity >= 0
