import random
from math import gcd

import pytest

from apnforge.exponents import (
    ExpSet, ReducedExponent, check_unique_expansion, compress, e_lk, exp_set,
    mod_inverse, negate_complement, reduce_mod_mersenne, reduce_value,
    reflect_k, set_value, weight,
)


def test_e_lk_values():
    assert e_lk(3, 2) == 21
    for k in range(1, 12):
        assert e_lk(2, k) == (1 << k) + 1  # the Gold exponents
    for n in range(2, 12):
        assert e_lk(n - 1, 1) == (1 << (n - 1)) - 1  # the inverse exponent


def test_e_lk_sum_equals_closed_form_everywhere():
    # e_lk raises internally if the two evaluations ever disagree
    for l in range(1, 51):
        for k in range(1, 51):
            e_lk(l, k)


def test_e_lk_rejects_bad_parameters():
    with pytest.raises(ValueError):
        e_lk(0, 3)
    with pytest.raises(ValueError):
        e_lk(3, 0)


def test_reduce_examples():
    assert reduce_value(e_lk(3, 4), 5) == 25
    assert e_lk(3, 4) == 273
    assert reduce_value(e_lk(9, 2), 10) == 426
    assert reduce_mod_mersenne(31, 5) == ReducedExponent(31, 5)  # all-ones kept
    assert reduce_value(0, 7) == 0
    assert reduce_value(63, 3) == 7  # 63 = 9 * 7: all-ones class, not 0


def test_reduce_matches_schoolbook_remainder():
    rng = random.Random(20240209)
    for _ in range(1000):
        n = rng.randint(1, 512)
        d = rng.getrandbits(rng.randint(1, 2048))
        m = (1 << n) - 1
        expected = d % m
        if expected == 0 and d > 0:
            expected = m
        assert reduce_value(d, n) == expected


def test_weight():
    assert weight(reduce_mod_mersenne(21, 5)) == 3
    # wt(e(l,k)) = l when gcd(k,n) = 1 and l < n
    for n in range(2, 24):
        for k in range(1, 8):
            if gcd(k, n) != 1:
                continue
            for l in range(1, n):
                assert weight(reduce_mod_mersenne(e_lk(l, k), n)) == l


def test_weight_shift_invariant():
    rng = random.Random(99)
    for _ in range(300):
        n = rng.randint(2, 40)
        d = rng.getrandbits(rng.randint(1, 80)) + 1
        w = weight(reduce_mod_mersenne(d, n))
        a = rng.randint(0, 3 * n)
        assert weight(reduce_mod_mersenne((1 << a) * d, n)) == w


def test_mod_inverse():
    assert mod_inverse(7, 5) == 9
    for n in range(2, 20):
        assert mod_inverse(1, n) == 1
    with pytest.raises(ValueError):
        mod_inverse(3, 6)  # gcd(3, 63) = 3


def test_mod_inverse_random():
    rng = random.Random(5)
    for _ in range(200):
        n = rng.randint(2, 64)
        m = (1 << n) - 1
        d = rng.randint(1, m - 1)
        if gcd(d, m) != 1:
            continue
        inv = mod_inverse(d, n)
        assert 1 <= inv <= m - 1
        assert d * inv % m == 1


def test_negate_complement():
    r = negate_complement(ReducedExponent(3, 6))
    assert r.value == 60 and bin(60) == "0b111100"
    for n in range(2, 12):
        assert negate_complement(ReducedExponent(1, n)).value == (1 << n) - 2
    rng = random.Random(11)
    for _ in range(100):
        n = rng.randint(2, 32)
        v = rng.randint(1, (1 << n) - 2)
        r = ReducedExponent(v, n)
        assert negate_complement(negate_complement(r)) == r
        # -v and the complement agree as residues
        m = (1 << n) - 1
        assert negate_complement(r).value == (-v) % m
    with pytest.raises(ValueError):
        negate_complement(ReducedExponent(0, 5))
    with pytest.raises(ValueError):
        negate_complement(ReducedExponent(31, 5))


def test_compress():
    assert compress(ExpSet((4, 4, 7), 10)).positions == (5, 7)
    assert compress(ExpSet((9, 9), 10)).positions == (0,)
    assert compress(ExpSet((0, 1), 10)).positions == (0, 1)


def test_compress_preserves_residue():
    rng = random.Random(17)
    for _ in range(300):
        n = rng.randint(1, 24)
        positions = tuple(rng.randrange(n) for _ in range(rng.randint(0, 3 * n)))
        s = ExpSet(positions, n)
        c = compress(s)
        assert len(set(c.positions)) == len(c.positions)
        if positions:
            assert set_value(c) == set_value(s)


def test_exp_set_roundtrip():
    rng = random.Random(23)
    for _ in range(200):
        n = rng.randint(1, 30)
        v = rng.randint(1, (1 << n) - 1)
        r = ReducedExponent(v, n)
        assert set_value(exp_set(r)) == v
        assert compress(exp_set(r)) == exp_set(r)


def test_check_unique_expansion():
    assert check_unique_expansion([0, 3], [7, 3], 7)  # 7 = 0 mod 7, 2^7 = 1
    assert check_unique_expansion([1, 4, 6], [1, 4, 6], 9)
    with pytest.raises(ValueError):
        check_unique_expansion([0, 7], [1, 2], 7)  # 0 and 7 collide mod 7
    with pytest.raises(ValueError):
        check_unique_expansion([0], [1, 2], 7)


def test_unique_expansion_lemma():
    # congruence holds exactly when the position sets agree modulo n
    rng = random.Random(31)
    for _ in range(400):
        n = rng.randint(3, 40)
        size = rng.randint(1, min(n, 8))
        a = rng.sample(range(n), size)
        if rng.random() < 0.5:
            b = [x + n * rng.randint(0, 2) for x in a]
            rng.shuffle(b)
        else:
            b = rng.sample(range(n), size)
        same_sets = sorted(x % n for x in a) == sorted(x % n for x in b)
        assert check_unique_expansion(a, b, n) == same_sets


def test_reflect_k():
    ref = reflect_k(4, 2, 10)
    assert (ref.k_low, ref.k_high) == (3, 7)
    assert reflect_k(2, 1, 9).k_low == 4 and reflect_k(2, 1, 9).k_high == 5
    with pytest.raises(ValueError):
        reflect_k(3, 5, 10)  # k = m is degenerate
    # the returned shift makes the reflection an exact congruence
    for n in (9, 10, 13, 16):
        for k in range(1, n // 2):
            for l in range(1, n):
                ref = reflect_k(l, k, n)
                lhs = reduce_value((1 << (ref.shift % n)) * e_lk(l, ref.k_low), n)
                assert lhs == reduce_value(e_lk(l, ref.k_high), n)
