import random

import pytest

from autbound.cyclo import (
    QQ,
    Cyc,
    NonInvertibleDenominator,
    cyclotomic_polynomial,
    euler_phi,
    find_reduction_prime,
    format_literal,
    parse_literal,
    rational,
    reduce_mod,
    zeta,
)


def test_euler_phi():
    assert [euler_phi(m) for m in range(1, 13)] == [1, 1, 2, 2, 4, 2, 6, 4, 6, 4, 10, 4]


def test_cyclotomic_polynomials():
    assert cyclotomic_polynomial(1) == (-1, 1)
    assert cyclotomic_polynomial(2) == (1, 1)
    assert cyclotomic_polynomial(3) == (1, 1, 1)
    assert cyclotomic_polynomial(4) == (1, 0, 1)
    assert cyclotomic_polynomial(6) == (1, -1, 1)
    assert cyclotomic_polynomial(12) == (1, 0, -1, 0, 1)
    # Phi_105 is the first with a coefficient of absolute value 2
    assert min(cyclotomic_polynomial(105)) == -2


def test_i_squared_is_minus_one():
    i = zeta(4)
    assert i * i == rational(-1)


def test_primitive_cube_roots_sum():
    w = zeta(3)
    assert w + w * w == rational(-1)


def test_inverse_roots_of_unity():
    e = zeta(7)
    assert e * zeta(7, 6) == rational(1)
    for m in (5, 8, 12, 15):
        for k in range(1, m):
            assert zeta(m, k) * zeta(m, m - k) == rational(1)


def test_inverse_examples():
    assert rational(2).inverse() == rational(QQ(1, 2))
    a = rational(1) + zeta(4)
    inv = a.inverse()
    assert inv == (rational(1) - zeta(4)) * QQ(1, 2)
    assert a * inv == rational(1)


def test_inverse_of_zero_raises():
    with pytest.raises(ZeroDivisionError):
        Cyc.zero(4).inverse()


def test_conductor_roundtrip():
    rng = random.Random(7)
    for m in (3, 4, 5, 12):
        for _ in range(10):
            a = Cyc(m, [QQ(rng.randint(-5, 5), rng.randint(1, 4)) for _ in range(euler_phi(m))])
            for factor in (2, 3, 4):
                lifted = a.to_conductor(m * factor)
                back = lifted.try_conductor(m)
                assert back is not None and back == a


def test_try_conductor_rejects_foreign_elements():
    assert zeta(5).try_conductor(1) is None
    assert zeta(12).try_conductor(4) is None
    assert zeta(12, 3).try_conductor(4) == zeta(4)  # zeta_12^3 = i


def test_cross_conductor_equality():
    assert zeta(3) == zeta(6, 2)
    assert zeta(6) == -zeta(3, 2)
    assert zeta(4) == zeta(12, 3)


def test_field_axioms_randomized():
    rng = random.Random(20260810)
    for _ in range(120):
        m = rng.choice([3, 4, 5, 7, 8, 12])
        phi = euler_phi(m)

        def rnd():
            return Cyc(m, [QQ(rng.randint(-4, 4), rng.randint(1, 3)) for _ in range(phi)])

        a, b, c = rnd(), rnd(), rnd()
        assert (a * b) * c == a * (b * c)
        assert a * (b + c) == a * b + a * c
        if not a.is_zero():
            assert a * a.inverse() == rational(1)


def test_conjugate():
    assert zeta(4).conjugate() == -zeta(4)
    a = zeta(7) + zeta(7, 2)
    assert a * a.conjugate() == (zeta(7) + zeta(7, 2)) * (zeta(7, 6) + zeta(7, 5))


def test_find_reduction_prime():
    assert find_reduction_prime(60).prime == 61
    assert find_reduction_prime(28).prime == 29
    assert find_reduction_prime(1).prime == 2
    rmap = find_reduction_prime(12, lower_bound=50)
    assert rmap.prime == 61 and pow(rmap.root, 12, 61) == 1
    for k in range(1, 12):
        assert pow(rmap.root, k, 61) != 1


def test_reduce_basics():
    rmap = find_reduction_prime(4)
    assert reduce_mod(rational(1), rmap) == 1
    assert reduce_mod(zeta(4), rmap) == rmap.root
    assert reduce_mod(zeta(4) * zeta(4), rmap) == rmap.prime - 1


def test_reduce_is_ring_homomorphism():
    rng = random.Random(99)
    for m in (3, 5, 8, 12):
        rmap = find_reduction_prime(m)
        p = rmap.prime
        phi = euler_phi(m)
        for _ in range(30):
            a = Cyc(m, [QQ(rng.randint(-9, 9), rng.choice([1, 2, 3])) for _ in range(phi)])
            b = Cyc(m, [QQ(rng.randint(-9, 9), rng.choice([1, 2, 3])) for _ in range(phi)])
            if any(int(x.denominator) % p == 0 for x in a.c + b.c):
                continue
            assert reduce_mod(a + b, rmap) == (reduce_mod(a, rmap) + reduce_mod(b, rmap)) % p
            assert reduce_mod(a * b, rmap) == (reduce_mod(a, rmap) * reduce_mod(b, rmap)) % p


def test_reduce_noninvertible_denominator():
    rmap = find_reduction_prime(3)  # p = 7
    with pytest.raises(NonInvertibleDenominator):
        reduce_mod(rational(QQ(1, 7), 3), rmap)


def test_literal_roundtrip():
    a = parse_literal("1/2*z^0 + -1/2*z^15", 28)
    assert a == (rational(1) - zeta(28, 15)) * QQ(1, 2)
    assert parse_literal(format_literal(a), 28) == a
    assert parse_literal("0*z^0", 5) == Cyc.zero(5)
    with pytest.raises(ValueError):
        parse_literal("2z^3", 5)
