import random
from math import gcd

import pytest

from apnforge.exponents import ReducedExponent, e_lk, mod_inverse, reduce_value, weight
from apnforge.families import (
    DOBBERTIN, GOLD, INVERSE, KASAMI, NIHO_EVEN, NIHO_ODD, WELCH,
    classify, coset, coset_min, cyclotomic_equivalent, dobbertin_exponent,
    dobbertin_inverse_scan, elk_equivalence_scan, family_exponent,
    valid_instances,
)


def test_family_exponent_examples():
    w = family_exponent(WELCH, 2, 5)
    assert w.exponent == 7 and w.valid
    g = family_exponent(GOLD, 2, 4)
    assert g.exponent == 5 and not g.valid  # gcd(2,4) = 2
    d = family_exponent(DOBBERTIN, 1, 5)
    assert d.exponent == 29 and d.valid
    assert family_exponent(KASAMI, 3, 7).exponent == 57
    assert family_exponent(NIHO_EVEN, 2, 5).exponent == 5
    assert family_exponent(NIHO_ODD, 3, 7).exponent == 39
    assert family_exponent(INVERSE, 3, 7).exponent == 63
    assert family_exponent(GOLD, 2, 7).label() == "Gold(i=2)"
    assert family_exponent(WELCH, 3, 7).label() == "Welch(t=3)"
    with pytest.raises(ValueError):
        family_exponent(GOLD, 0, 5)
    with pytest.raises(ValueError):
        family_exponent("Unknown", 1, 5)


def test_family_degrees():
    # catalog degree values, on instances whose formula does not wrap mod 2^n-1
    for n in range(3, 41):
        for inst in valid_instances(n):
            if inst.family in (GOLD, KASAMI) and 2 * inst.param >= n:
                continue  # wrapped Kasami/Gold parameters compress differently
            if inst.family == WELCH and inst.param == 1:
                continue  # 2^1 + 3 = 5 has weight 2, the formula terms collide
            assert weight(ReducedExponent(reduce_value(inst.exponent, n), n)) \
                == inst.expected_degree, inst


def test_coset_and_min():
    assert coset(21, 5) == [21, 11, 22, 13, 26]
    assert coset_min(21, 5) == 11
    assert coset_min(1, 9) == 1
    rng = random.Random(10)
    for _ in range(150):
        n = rng.randint(2, 24)
        d = rng.randint(1, (1 << n) - 1)
        a = rng.randint(0, 2 * n)
        assert coset_min((1 << a) * d, n) == coset_min(d, n)


def test_cyclotomic_equivalent_examples():
    w = cyclotomic_equivalent(21, 11, 5)
    assert w.kind == "shift" and w.a == 1
    w = cyclotomic_equivalent(7, 9, 5)
    assert w.kind == "inverse-shift" and w.a == 0  # 7^-1 = 9 mod 31
    w = cyclotomic_equivalent(e_lk(4, 4), 29, 5)
    assert w.kind == "shift" and w.a == 0
    assert not cyclotomic_equivalent(3, 5, 5)


def test_cyclotomic_equivalence_is_an_equivalence():
    rng = random.Random(14)
    for _ in range(120):
        n = rng.randint(2, 20)
        m = (1 << n) - 1
        pool = [d for d in rng.sample(range(1, m), min(6, m - 1)) if gcd(d, m) == 1]
        for d in pool:
            assert cyclotomic_equivalent(d, d, n)
        for d in pool:
            for e in pool:
                forward = bool(cyclotomic_equivalent(d, e, n))
                assert forward == bool(cyclotomic_equivalent(e, d, n))
        for d in pool:
            for e in pool:
                for g in pool:
                    if cyclotomic_equivalent(d, e, n) and cyclotomic_equivalent(e, g, n):
                        assert cyclotomic_equivalent(d, g, n)


def test_witness_congruences_hold():
    rng = random.Random(15)
    for _ in range(200):
        n = rng.randint(2, 20)
        m = (1 << n) - 1
        d = rng.randint(1, m)
        e = rng.randint(1, m)
        w = cyclotomic_equivalent(d, e, n)
        if w.kind == "shift":
            assert reduce_value((1 << w.a) * d, n) == reduce_value(e, n)
        elif w.kind == "inverse-shift":
            inv = mod_inverse(reduce_value(d, n), n)
            assert reduce_value((1 << w.a) * inv, n) == reduce_value(e, n)


def test_classify_examples():
    labels = {inst.label() for inst, _ in classify(5, 5)}
    assert {"Gold(i=2)", "NihoEven(t=2)"} <= labels
    matches = {inst.family: w.kind for inst, w in classify(9, 5)}
    assert matches[WELCH] == "inverse-shift"
    assert any(inst.family == DOBBERTIN for inst, _ in classify(29, 5))
    assert classify(1, 7) == []
    # shifted classifications agree with the base exponent's
    base = {inst.label() for inst, _ in classify(13, 5)}
    assert base == {inst.label() for inst, _ in classify(26, 5)}


def test_valid_instances_ranges():
    insts = valid_instances(5)
    fams = [i.family for i in insts]
    assert fams.count(GOLD) == 4 and fams.count(KASAMI) == 4
    assert {WELCH, NIHO_EVEN, INVERSE, DOBBERTIN} <= set(fams)
    assert NIHO_ODD not in fams  # t = 2 is even
    assert all(i.valid for i in insts)
    assert [i.family for i in valid_instances(4)] == [GOLD, KASAMI] * 2


def test_elk_equivalence_scan():
    assert (4, 4, 0) in elk_equivalence_scan(5, dobbertin_exponent(1))
    wits10 = elk_equivalence_scan(10, dobbertin_exponent(2))
    assert any(l == 9 and k == 2 for l, k, a in wits10)
    assert elk_equivalence_scan(15, dobbertin_exponent(3)) == []
    # every reported witness satisfies its congruence
    for target in (29, 21, 7):
        for l, k, a in elk_equivalence_scan(5, target):
            assert reduce_value((1 << a) * e_lk(l, k), 5) == reduce_value(target, 5)
    with pytest.raises(ValueError):
        elk_equivalence_scan(6, 9, use_inverse=True)  # gcd(9, 63) = 9


def test_dobbertin_inverse_scan_small():
    results = {r.n: r for r in dobbertin_inverse_scan(25)}
    assert results[5].invertible and (4, 1, 0) in results[5].witnesses
    assert not results[10].invertible and results[10].gcd_with_order == 3
    assert not results[20].invertible
    assert results[15].invertible and results[15].witnesses == ()
    assert results[25].invertible and results[25].witnesses == ()
    with pytest.raises(ValueError):
        dobbertin_inverse_scan(205)
