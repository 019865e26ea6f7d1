import pytest

from springer import flinalg as la
from springer import partitions as pt
from springer import split as sp


def test_build_so_split_block_3():
    data = sp.build_so_split((3,), 3)
    K = data.field
    # form antidiagonal with signs (-1)^{delta_1 - a}, delta_1 = 2
    for a in range(1, 4):
        want = K.scalar((-1) ** ((2 - a) % 2))
        assert data.form[3 - a][a - 1] == want
    # x is the shift
    assert data.nilpotent[0][1] == 1 and data.nilpotent[1][2] == 1


def test_build_so_split_even_pair_22():
    data = sp.build_so_split((2, 2), 3)
    K = data.field
    # (3.1.3) signs (-1)^{a-1} pairing the two chains
    assert data.form[1][2] == K.scalar(1)  # a = 1: e^1_2 with e^2_1
    assert data.form[0][3] == K.scalar(-1)  # a = 2
    assert pt.is_in_XN_tilde((2, 2))


def test_build_so_split_trivial():
    data = sp.build_so_split((1,), 3)
    assert data.nilpotent == ((0,),)


def test_build_so_split_rejects():
    with pytest.raises(ValueError):
        sp.build_so_split((2,), 3)
    with pytest.raises(ValueError):
        sp.build_so_split((1, 2), 5)


def test_so_jordan_roundtrip():
    for q_p, q_k in ((3, 1), (5, 1), (3, 2)):
        for N in range(1, 11):
            for lam in pt.enumerate_XN(N, tilde=True):
                data = sp.build_so_split(lam, q_p, q_k)
                assert sp.jordan_type(data.nilpotent, data.field, "nilpotent") == lam


def test_build_sl_split_examples():
    d1 = sp.build_sl_split((1,), 3)
    assert d1.unipotent == ((1,),)
    d2 = sp.build_sl_split((2,), 3)
    K = d2.field
    # check u^T A conj(u) = A explicitly (2x2 identity over F_9)
    u, A = d2.unipotent, d2.form
    assert la.mat_mul(K, la.mat_mul(K, la.transpose(u), A), d2.conj_mat(u)) == A
    d3 = sp.build_sl_split((1, 2), 3)
    assert len(d3.form) == 3


def test_sl_split_antidiagonal_signs():
    # odd block: (v_j, v_{h+1-j}) alternates as (-1)^{j+1}
    d = sp.build_sl_split((3,), 3)
    K = d.field
    assert d.form[0][2] == K.scalar(1)
    assert d.form[1][1] == K.scalar(-1)
    assert d.form[2][0] == K.scalar(1)
    # a_k = -1 flips the block
    dm = sp.build_sl_split((3,), 3, signs=(-1,))
    assert dm.form[0][2] == K.scalar(-1)


def test_sl_split_even_block_trace_zero_scalar():
    d = sp.build_sl_split((2,), 3)
    K = d.field
    v = d.form[0][1]
    assert v != 0 and K.frobenius(v, d.qexp) == K.neg(v)


def test_sl_jordan_roundtrip_and_form_invariance():
    for q_p, q_k in ((3, 1), (2, 2), (5, 1), (3, 2)):
        for n in range(1, 11):
            for lam in pt.partitions_of(n):
                data = sp.build_sl_split(lam, q_p, q_k)
                assert sp.jordan_type(data.unipotent, data.field, "unipotent") == lam


def test_jordan_type_edge_cases():
    from springer.ffield import make_field

    K = make_field(3, 1)
    zero = la.zeros(K, 4, 4)
    assert sp.jordan_type(zero, K, "nilpotent") == (1, 1, 1, 1)
    shift = la.mat([[1 if j == i + 1 else 0 for j in range(4)] for i in range(4)])
    assert sp.jordan_type(shift, K, "nilpotent") == (4,)
    with pytest.raises(ValueError):
        sp.jordan_type(la.identity(K, 3), K, "nilpotent")


def test_spin_frobenius_report_signs():
    # q = 1 mod 4: trivial action
    rep = sp.frobenius_action_report(sp.build_so_split((1, 2, 2), 5))
    assert rep.tau_is_trivial
    # q = 3 mod 4, lambda = (1,2,2): single odd part, sign +1 per the formula
    rep = sp.frobenius_action_report(sp.build_so_split((1, 2, 2), 3))
    assert rep.signs == (1,)
    assert rep.tau_squared_trivial


def test_spin_frobenius_report_matches_formula():
    for q in (3, 7):
        for N in range(3, 12):
            for lam in pt.enumerate_XN(N):
                rep = sp.frobenius_action_report(sp.build_so_split(lam, q))
                expect = tuple(
                    (-1) ** (((lam[j - 1] - 1) // 2 + 1 + j) % 2) for j in pt.odd_part_positions(lam)
                )
                assert rep.signs == expect, (q, lam)
    for N in range(3, 12):
        for lam in pt.enumerate_XN(N):
            rep = sp.frobenius_action_report(sp.build_so_split(lam, 5))
            assert rep.tau_is_trivial


def test_sl_frobenius_report():
    rep = sp.frobenius_action_report(sp.build_sl_split((2, 4), 5))
    assert rep.group.m == 2
    assert rep.tau_order == 1  # inversion trivial on order 2
    rep = sp.frobenius_action_report(sp.build_sl_split((5,), 3))
    assert rep.group.m == 5 and rep.tau_mult == 2
    assert rep.tau_order == 4 and not rep.tau_squared_trivial


def test_sl_split_determinism():
    a = sp.build_sl_split((1, 2, 3), 3)
    b = sp.build_sl_split((1, 2, 3), 3)
    assert a.form == b.form and a.unipotent == b.unipotent
