import random
from fractions import Fraction
from math import gcd

import pytest

from absarith.group_ring import (
    GroupRingElt,
    act_unit,
    fourier,
    ghost_invariant,
    groupring_to_witt,
    is_invariant,
    primitive_orbit_sum,
    rho_tilde,
    sigma,
    witt_to_groupring,
)
from absarith.witt import WittElement, frobenius, ghost, verschiebung
from helpers import random_groupring, random_witt

E = GroupRingElt.e


def test_convolution_examples():
    assert E(Fraction(1, 2)) * E(Fraction(1, 2)) == E(0)
    assert E(Fraction(1, 2)) * E(Fraction(1, 3)) == E(Fraction(5, 6))
    x = E(0) + E(Fraction(1, 2))
    assert x * x == 2 * E(0) + 2 * E(Fraction(1, 2))


def test_sigma_examples():
    assert sigma(2, E(Fraction(1, 2))) == E(0)
    assert sigma(3, E(Fraction(1, 6)) + E(Fraction(5, 6))) == 2 * E(Fraction(1, 2))


def test_sigma_is_ring_endomorphism():
    rng = random.Random(31)
    for _ in range(60):
        x, y = random_groupring(rng), random_groupring(rng)
        n = rng.randint(1, 8)
        assert sigma(n, x * y) == sigma(n, x) * sigma(n, y)
        assert sigma(n, x + y) == sigma(n, x) + sigma(n, y)


def test_rho_examples():
    assert rho_tilde(2, E(0)) == E(0) + E(Fraction(1, 2))
    rng = random.Random(33)
    for _ in range(60):
        x = random_groupring(rng)
        n = rng.randint(1, 8)
        assert sigma(n, rho_tilde(n, x)) == n * x
        m = rng.randint(1, 6)
        assert rho_tilde(n, rho_tilde(m, x)) == rho_tilde(n * m, x)


def test_operator_relation_suite():
    # multiplicativity, projection formula, and the general divisibility rule
    rng = random.Random(35)
    for _ in range(60):
        x, y = random_groupring(rng), random_groupring(rng)
        n, m = rng.randint(1, 8), rng.randint(1, 8)
        b, c = rng.randint(1, 8), rng.randint(1, 8)
        assert sigma(n * m, x) == sigma(n, sigma(m, x))
        assert rho_tilde(m, sigma(m, x) * y) == x * rho_tilde(m, y)
        g = gcd(b, c)
        assert sigma(c, rho_tilde(b, x)) == g * rho_tilde(b // g, sigma(c // g, x))
        if gcd(n, m) == 1:
            assert sigma(n, rho_tilde(m, x)) == rho_tilde(m, sigma(n, x))


def test_invariance_examples():
    assert is_invariant(E(Fraction(1, 3)) + E(Fraction(2, 3)))
    assert not is_invariant(E(Fraction(1, 3)))
    assert is_invariant(GroupRingElt.zero())
    assert is_invariant(primitive_orbit_sum(12))


def test_invariance_matches_exhaustive_unit_check():
    # the generator-based test agrees with brute force over all units
    rng = random.Random(37)
    for _ in range(60):
        x = random_groupring(rng, max_den=9)
        n = x.torsion_lcm()
        exhaustive = all(act_unit(u, x) == x for u in range(1, n + 1) if gcd(u, n) == 1)
        assert is_invariant(x) == exhaustive


def test_witt_to_groupring_examples():
    assert witt_to_groupring(WittElement.basis(2)) == E(0) + E(Fraction(1, 2))
    rng = random.Random(39)
    for _ in range(60):
        w = random_witt(rng)
        img = witt_to_groupring(w)
        assert is_invariant(img)
        assert groupring_to_witt(img) == w


def test_witt_to_groupring_is_ring_map():
    rng = random.Random(41)
    for _ in range(40):
        a, b = random_witt(rng, max_k=10), random_witt(rng, max_k=10)
        assert witt_to_groupring(a * b) == witt_to_groupring(a) * witt_to_groupring(b)
        assert witt_to_groupring(a + b) == witt_to_groupring(a) + witt_to_groupring(b)


def test_groupring_to_witt_rejects_noninvariant():
    with pytest.raises(ValueError):
        groupring_to_witt(E(Fraction(1, 3)))


def test_operators_correspond():
    # sigma matches Frobenius, rho matches Verschiebung across the identification
    rng = random.Random(43)
    for _ in range(40):
        w = random_witt(rng, max_k=8)
        n = rng.randint(1, 8)
        assert witt_to_groupring(frobenius(n, w)) == sigma(n, witt_to_groupring(w))
        assert witt_to_groupring(verschiebung(n, w)) == rho_tilde(n, witt_to_groupring(w))


def test_fourier_examples():
    for n in range(1, 6):
        assert abs(fourier(E(0), n) - 1) < 1e-12
    w = WittElement.basis(4)
    img = witt_to_groupring(w)
    assert ghost_invariant(img, 8) == 4
    assert ghost_invariant(img, 6) == 0


def test_ghost_invariant_matches_witt_ghost():
    rng = random.Random(45)
    for _ in range(30):
        w = random_witt(rng)
        img = witt_to_groupring(w)
        for n in range(1, 10):
            assert ghost_invariant(img, n) == ghost(w, n)


def test_operator_ghost_shifts():
    # on invariant elements, sigma shifts the character index up by a factor
    # and rho concentrates it on multiples
    rng = random.Random(46)
    for _ in range(20):
        x = witt_to_groupring(random_witt(rng, max_k=6))
        m = rng.randint(1, 6)
        for n in range(1, 13):
            assert ghost_invariant(sigma(m, x), n) == ghost_invariant(x, n * m)
            expected = m * ghost_invariant(x, n // m) if n % m == 0 else 0
            assert ghost_invariant(rho_tilde(m, x), n) == expected


def test_fourier_close_to_exact_ghost():
    rng = random.Random(47)
    for _ in range(30):
        w = random_witt(rng)
        img = witt_to_groupring(w)
        for n in range(1, 8):
            assert abs(fourier(img, n) - ghost_invariant(img, n)) < 1e-8


def test_json_roundtrip():
    rng = random.Random(49)
    for _ in range(20):
        x = random_groupring(rng)
        assert GroupRingElt.from_json(x.to_json()) == x
