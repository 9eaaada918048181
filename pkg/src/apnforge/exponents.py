"""Exponent arithmetic modulo the Mersenne modulus 2^n - 1.

Monomial exponents over GF(2^n) live modulo 2^n - 1, the order of the
multiplicative group.  Everything here works on plain Python ints.

Canonical residue convention: the exponent 0 reduces to 0, while any
positive multiple of 2^n - 1 reduces to 2^n - 1 itself.  The two are kept
apart because x^0 = 1 and x^(2^n-1) = [x != 0] are different functions.
"""

from collections import Counter
from math import gcd
from typing import NamedTuple


class ReducedExponent(NamedTuple):
    """A canonical residue modulo 2^n - 1 together with its dimension."""

    value: int
    n: int


class ExpSet(NamedTuple):
    """Multiset of bit positions in [0, n-1]; represents sum(2^p) mod 2^n - 1."""

    positions: tuple
    n: int


class Reflection(NamedTuple):
    """Stride reflection k_low <-> k_high with 2^shift * e(l,k_low) = e(l,k_high)."""

    k_low: int
    k_high: int
    shift: int


def e_lk(l: int, k: int) -> int:
    """The two-parameter exponent e(l,k) = sum_{j=0}^{l-1} 2^(jk).

    l counts the terms, k is the bit stride.  The geometric sum and the
    closed form (2^(lk) - 1) / (2^k - 1) are both evaluated and compared.
    """
    if l < 1 or k < 1:
        raise ValueError("e(l,k) needs l >= 1 and k >= 1")
    total = 0
    for j in range(l):
        total += 1 << (j * k)
    closed = ((1 << (l * k)) - 1) // ((1 << k) - 1)
    if total != closed:
        raise AssertionError(f"e({l},{k}): sum and closed form disagree")
    return total


def reduce_value(d: int, n: int) -> int:
    """Canonical residue of d modulo 2^n - 1 as a plain int.

    Implemented by folding n-bit limbs; a positive input always folds into
    [1, 2^n - 1], so the all-ones class is kept as 2^n - 1 automatically.
    """
    if n < 1:
        raise ValueError("n must be positive")
    if d < 0:
        raise ValueError("exponents are non-negative")
    if d == 0:
        return 0
    m = (1 << n) - 1
    while d > m:
        d = (d & m) + (d >> n)
    return d


def reduce_mod_mersenne(d: int, n: int) -> ReducedExponent:
    """Canonical residue of d modulo 2^n - 1."""
    return ReducedExponent(reduce_value(d, n), n)


def weight(r: ReducedExponent) -> int:
    """Number of ones in the canonical residue: the algebraic degree of x^r."""
    return int(r.value).bit_count()


def mod_inverse(d: int, n: int) -> int:
    """Inverse of d modulo 2^n - 1, in [1, 2^n - 2].

    Raises ValueError when gcd(d, 2^n - 1) > 1.
    """
    m = (1 << n) - 1
    if m == 1:
        raise ValueError("no multiplicative structure for n = 1")
    try:
        return pow(d, -1, m)
    except ValueError:
        raise ValueError(
            f"{d} is not invertible modulo 2^{n}-1 (gcd = {gcd(d, m)})"
        ) from None


def negate_complement(r: ReducedExponent) -> ReducedExponent:
    """Residue of -r modulo 2^n - 1: the n-bit complement of r's bits."""
    m = (1 << r.n) - 1
    if r.value <= 0 or r.value >= m:
        raise ValueError("complement undefined for the all-zeros/all-ones class")
    return ReducedExponent(r.value ^ m, r.n)


def exp_set(r: ReducedExponent) -> ExpSet:
    """Bit positions of the canonical residue as an (already compressed) set."""
    v = r.value
    return ExpSet(tuple(p for p in range(r.n) if (v >> p) & 1), r.n)


def compress(s: ExpSet) -> ExpSet:
    """Merge duplicate positions j,j -> j+1 until all positions are distinct.

    Position n-1 carries into position 0, since 2*2^(n-1) = 2^n = 1 mod 2^n - 1.
    Merging is confluent, so the processing order does not matter.
    """
    n = s.n
    counts = Counter(p % n for p in s.positions)
    pending = sorted(counts)
    while pending:
        nxt = set()
        for p in pending:
            c = counts[p]
            if c >= 2:
                counts[p] = c & 1
                carry = (p + 1) % n
                counts[carry] += c >> 1
                nxt.add(carry)
        pending = sorted(nxt)
    return ExpSet(tuple(p for p in sorted(counts) if counts[p]), n)


def set_value(s: ExpSet) -> int:
    """Canonical residue represented by an exponent set."""
    return reduce_value(sum(1 << p for p in s.positions), s.n)


def check_unique_expansion(a_positions, b_positions, n: int) -> bool:
    """Whether sum(2^a_i) = sum(2^b_i) mod 2^n - 1, for distinct-mod-n lists.

    Both lists must have the same length and contain pairwise distinct
    residues modulo n, which is the hypothesis under which the congruence
    holds exactly when the two position sets agree modulo n.
    """
    a = list(a_positions)
    b = list(b_positions)
    if len(a) != len(b):
        raise ValueError("position lists must have equal length")
    for side in (a, b):
        res = [p % n for p in side]
        if len(set(res)) != len(res):
            raise ValueError("positions must be distinct modulo n")
    lhs = reduce_value(sum(1 << p for p in a), n)
    rhs = reduce_value(sum(1 << p for p in b), n)
    return lhs == rhs


def reflect_k(l: int, k: int, n: int) -> Reflection:
    """Stride reflection around n/2, with the shift making it a congruence.

    For n = 2m the strides m-k and m+k give cyclotomic-equivalent exponents,
    for n = 2m+1 the strides m-k+1 and m+k do; the returned shift X satisfies
    2^X * e(l, k_low) = e(l, k_high) mod 2^n - 1.
    """
    m = n // 2
    if not 0 < k < m:
        raise ValueError("reflection needs 0 < k < n//2")
    if l < 1:
        raise ValueError("l must be positive")
    if n % 2 == 0:
        return Reflection(m - k, m + k, l * k + l * m + m - k)
    return Reflection(m - k + 1, m + k, l * (m + k) + m - k + 1)
