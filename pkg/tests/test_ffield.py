import pytest

from springer.ffield import FieldSpec, frobenius_pow, is_prime, make_field, quadratic_extension


def test_make_field_prime_field():
    F3 = make_field(3, 1)
    assert F3.q == 3
    assert F3.modulus == (0, 1)  # the polynomial x


def test_make_field_f9_modulus_is_x2_plus_1():
    # -1 has no square root mod 3, so x^2 + 1 is irreducible and is the
    # first monic quadratic in the (c0, c1) ordering.
    assert all(pow(x, 2, 3) != 2 for x in range(3))
    F9 = make_field(3, 2)
    assert F9.modulus == (1, 0, 1)


def test_make_field_f25_modulus_by_exhaustive_scan():
    # independent scan: least (c0, c1) with x^2 + c1 x + c0 irreducible mod 5
    expected = None
    for code in range(25):
        c0, c1 = code % 5, code // 5
        if all((x * x + c1 * x + c0) % 5 for x in range(5)):
            expected = (c0, c1, 1)
            break
    F25 = make_field(5, 2)
    assert F25.modulus == expected


def test_make_field_rejects_composite():
    with pytest.raises(ValueError):
        make_field(9, 1)
    with pytest.raises(ValueError):
        make_field(4, 2)


def test_field_axioms_exhaustive_small():
    for p, k in [(2, 1), (3, 1), (5, 1), (2, 2), (3, 2)]:
        K = make_field(p, k)
        els = list(K.elements())
        for a in els:
            assert K.add(a, 0) == a
            assert K.mul(a, 1) == a
            assert K.add(a, K.neg(a)) == 0
            if a:
                assert K.mul(a, K.inv(a)) == 1
        for a in els:
            for b in els:
                assert K.add(a, b) == K.add(b, a)
                assert K.mul(a, b) == K.mul(b, a)
                for c in els:
                    assert K.mul(a, K.add(b, c)) == K.add(K.mul(a, b), K.mul(a, c))


def test_frobenius_t_cubed_in_f9():
    # t^3 = -t when t^2 = -1
    F9 = make_field(3, 2)
    t = F9.encode((0, 1))
    assert frobenius_pow(t, F9, 1) == F9.neg(t)


def test_frobenius_fixes_prime_field():
    F7 = make_field(7, 1)
    for a in F7.elements():
        for e in range(4):
            assert frobenius_pow(a, F7, e) == a


def test_frobenius_is_automorphism_exhaustive():
    # additive and multiplicative, exhaustively for q <= 25
    for p, k in [(3, 2), (5, 2), (2, 2), (3, 1), (5, 1), (2, 4)]:
        K = make_field(p, k)
        if K.q > 25:
            continue
        for a in K.elements():
            for b in K.elements():
                assert frobenius_pow(K.add(a, b), K, 1) == K.add(frobenius_pow(a, K, 1), frobenius_pow(b, K, 1))
                assert frobenius_pow(K.mul(a, b), K, 1) == K.mul(frobenius_pow(a, K, 1), frobenius_pow(b, K, 1))


def test_frobenius_order_k_is_identity():
    for p, k in [(3, 2), (5, 2), (2, 4), (3, 4)]:
        K = make_field(p, k)
        for a in list(K.elements())[:50]:
            assert frobenius_pow(a, K, k) == a


def test_zeta4_exists_iff_q_1_mod_4():
    for p, k in [(3, 1), (5, 1), (7, 1), (13, 1), (3, 2), (7, 2)]:
        K = make_field(p, k)
        z = K.zeta4()
        if K.q % 4 == 1:
            assert z is not None and K.mul(z, z) == K.neg(1)
        else:
            assert z is None


def test_zeta4_always_exists_in_quadratic_extension():
    for q_base in [(3, 1), (5, 1), (7, 1), (3, 2)]:
        K = make_field(*q_base)
        K2 = quadratic_extension(K)
        z = K2.zeta4()
        assert z is not None and K2.mul(z, z) == K2.neg(1)


def test_zeta4_fixed_by_q_power_iff_q_1_mod_4():
    # F(zeta) = zeta exactly when q = 1 mod 4
    for p in (5, 13):
        K = make_field(p, 2)
        z = K.zeta4()
        assert frobenius_pow(z, K, 1) == z if p % 4 == 1 else True
    for p in (3, 7):
        K = make_field(p, 2)
        z = K.zeta4()
        assert frobenius_pow(z, K, 1) == K.neg(z)


def test_subfield_and_nonsquare():
    F81 = make_field(3, 4)
    sub = F81.subfield_elements(2)
    assert len(sub) == 9
    d = F81.least_nonsquare_in_subfield(2)
    assert d in sub
    # not a square in F_9: d^((9-1)/2) != 1
    assert F81.pow(d, 4) != 1
    # but a square in F_81
    assert F81.sqrt(d) is not None


def test_element_serialization_roundtrip():
    F9 = make_field(3, 2)
    for a in F9.elements():
        assert F9.encode(F9.serialize_element(a)) == a


def test_is_prime():
    assert [n for n in range(2, 30) if is_prime(n)] == [2, 3, 5, 7, 11, 13, 17, 19, 23, 29]
