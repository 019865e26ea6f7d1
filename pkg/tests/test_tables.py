import pytest

from springer import partitions as pt
from springer import tables as tb


def test_exponents_sl2_worked_values():
    e = tb.exponents_sl((2,), 1)
    assert e.total == 0 and e.consistent and e.even
    e = tb.exponents_sl((1, 1), 1)
    assert e.total == 2 and e.consistent and e.even


def test_exponents_cuspidal_boundary():
    # la = (n), d = n: L = G, C = C_0, so the sum collapses to 0
    for n in (2, 3, 4, 6):
        e = tb.exponents_sl((n,), n)
        assert e.total == 0 and e.consistent


def test_exponents_sl_consistent_and_even_sweep():
    for n in range(1, 11):
        for la in pt.partitions_of(n):
            for d in range(1, n + 1):
                if n % d or any(x % d for x in la):
                    continue
                e = tb.exponents_sl(la, d)
                assert e.consistent and e.even, (la, d)


def test_exponents_spin_consistent_and_even_sweep():
    for N in range(3, 14):
        for la in pt.enumerate_XN(N):
            e = tb.exponents_spin(la)
            assert e.consistent and e.even, la


def test_spin_cuspidal_class():
    assert tb.spin_cuspidal_class(1) == (1,)
    assert tb.spin_cuspidal_class(-1) == (3,)
    assert tb.spin_cuspidal_class(2) == (1, 5)
    assert tb.spin_cuspidal_class(0) == ()


def test_y0_sl_24_example():
    # lambda = (2,4), n = 6, d = 2, q = 5: component group of order 2 with
    # trivial tau: two classes, values (1, -1)
    row = tb.y0_row_sl((2, 4), 2, 5)
    assert row.dim == 1
    assert len(row.classes) == 2
    assert [v.as_int() for v in row.values] == [1, -1]
    assert row.exponents.consistent


def test_y0_sl_trivial_character_is_all_ones():
    row = tb.y0_row_sl((2, 4), 1, 3)
    assert all(v.as_int() == 1 for v in row.values)
    row = tb.y0_row_sl((1, 2, 3), 1, 3)
    assert all(v.as_int() == 1 for v in row.values)


def test_y0_sl_refusals():
    with pytest.raises(tb.EmptyFiberError):
        tb.y0_row_sl((1, 5), 2, 3)  # 2 does not divide 1
    with pytest.raises(tb.NotFStableError):
        tb.y0_row_sl((3, 3), 3, 3)  # 3 does not divide q + 1 = 4


def test_y0_spin_dim2_row():
    # |I| = 3 (lambda = (1,3,5), N = 9): unique rho of dim 2; identity value
    # 2, value -2 at eps, 0 elsewhere when tau is trivial (q = 5)
    row = tb.y0_row_spin((1, 3, 5), 5)
    assert row.dim == 2
    vm = dict(zip([rep for rep, _ in row.classes], row.values))
    ident = (0, 0)
    eps = (1, 0)
    assert vm[ident].as_int() == 2
    assert vm[eps].as_int() == -2
    for rep, v in vm.items():
        if rep not in (ident, eps):
            assert v.is_zero()


def test_y0_spin_nonsplit_refused():
    with pytest.raises(tb.NotFStableError):
        tb.y0_row_spin((1, 3), 3, twist="nonsplit", omega_value="1")


def test_y0_spin_omega_selection():
    # lambda = (1,3), N = 4: Gamma = Z/2 x Z/2, two candidate local systems
    with pytest.raises(ValueError):
        tb.y0_row_spin((1, 3), 5)  # needs omega_value
    rows = [tb.y0_row_spin((1, 3), 5, omega_value=v) for v in ("1", "-1")]
    assert rows[0].values != rows[1].values
    w = (0, 3)
    for row, expect in zip(rows, (1, -1)):
        vm = dict(zip([rep for rep, _ in row.classes], row.values))
        assert vm[w].as_int() == expect


def test_y0_spin_tau_moved_local_system_refused():
    # lambda = (1,5), q = 3: tau swaps the two order-4 characters
    with pytest.raises(tb.NotFStableError):
        tb.y0_row_spin((1, 5), 3, omega_value="i")


def test_row_orthogonality_sl():
    rows = []
    for d in (1, 2, 3, 6):
        rows.append(tb.y0_row_sl((6,), d, 5))
    assert tb.row_orthogonality(rows)


def test_row_orthogonality_spin():
    rows = [tb.y0_row_spin((1, 3), 5, omega_value=v) for v in ("1", "-1")]
    assert tb.row_orthogonality(rows)


def test_y0_table_builders():
    rows = tb.y0_table_sl(6, 2, 5)
    assert {r.la for r in rows} == {(2, 4), (2, 2, 2), (6,)}
    rows = tb.y0_table_spin(5, 5)
    assert {r.la for r in rows} == {(5,), (1, 2, 2)}
    for r in rows:
        assert r.values[0].as_int() == r.dim


def test_row_json_roundtrip():
    row = tb.y0_row_sl((2, 4), 2, 5)
    import json

    d = json.loads(row.to_json())
    assert d["lambda"] == [2, 4]
    assert d["dim"] == 1
    assert len(d["classes"]) == len(d["values"])
