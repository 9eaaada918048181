"""Exact GF(2^n) arithmetic with bulk kernels for exhaustive scans.

Field elements are plain ints whose bits are the coefficients in the
polynomial basis; addition is xor.  A Field instance carries the degree n
and the irreducible modulus and is immutable, so it can be shared freely
across workers.

Two evaluation routes exist for x -> x^d over the whole field: a pure
Python per-element route (the reference), and a vectorized discrete-log
table route used by the scans.  Both are bit-exact for the canonical
exponent convention of :mod:`apnforge.exponents`.
"""

import numpy as np

from .exponents import reduce_value

# Largest degree for which full exp/log tables are built (2 * 2^n * 4 bytes).
TABLE_MAX_DEGREE = 24


# ---------------------------------------------------------------------------
# polynomial helpers over F_2 (ints, bit i = coefficient of x^i)

def _poly_mod(a: int, b: int) -> int:
    db = b.bit_length()
    while a.bit_length() >= db:
        a ^= b << (a.bit_length() - db)
    return a


def _poly_gcd(a: int, b: int) -> int:
    while b:
        a, b = b, _poly_mod(a, b)
    return a


def _poly_sqr(a: int) -> int:
    # square over F_2 = spread the bits apart
    s = 0
    i = 0
    while a:
        if a & 1:
            s |= 1 << (2 * i)
        a >>= 1
        i += 1
    return s


def _prime_factors(v: int) -> list:
    out = []
    p = 2
    while p * p <= v:
        if v % p == 0:
            out.append(p)
            while v % p == 0:
                v //= p
        p += 1 if p == 2 else 2
    if v > 1:
        out.append(v)
    return out


def is_irreducible(poly: int) -> bool:
    """Rabin test: x^(2^d) = x mod poly, and no subfield of proper prime index."""
    d = poly.bit_length() - 1
    if d < 1:
        return False
    if d == 1:
        return True
    if not poly & 1:  # divisible by x
        return False

    def x_pow_pow2(k):
        r = 2  # the polynomial x
        for _ in range(k):
            r = _poly_mod(_poly_sqr(r), poly)
        return r

    if x_pow_pow2(d) != 2:
        return False
    for p in _prime_factors(d):
        if _poly_gcd(x_pow_pow2(d // p) ^ 2, poly) != 1:
            return False
    return True


def smallest_irreducible(n: int) -> int:
    """Lexicographically smallest irreducible polynomial of degree n.

    Only candidates with constant term 1 are considered (x itself is the
    one irreducible without it, and it generates a degenerate quotient).
    """
    for cand in range((1 << n) | 1, 1 << (n + 1), 2):
        if is_irreducible(cand):
            return cand
    raise AssertionError(f"no irreducible polynomial of degree {n}")  # unreachable


def irreducibles(n: int):
    """All degree-n irreducible polynomials with constant term 1, ascending."""
    for cand in range((1 << n) | 1, 1 << (n + 1), 2):
        if is_irreducible(cand):
            yield cand


class Field:
    """GF(2^n) under a fixed irreducible modulus.

    With no explicit modulus the lexicographically smallest irreducible of
    degree n is used, so construction is deterministic and reproducible.
    """

    def __init__(self, n: int, modulus: int | None = None):
        if not 1 <= n <= 64:
            raise ValueError("degree must be in [1, 64]")
        if modulus is None:
            modulus = smallest_irreducible(n)
        else:
            if modulus.bit_length() != n + 1 or not modulus & 1:
                raise ValueError("modulus must have degree n and constant term 1")
            if not is_irreducible(modulus):
                raise ValueError("modulus is not irreducible")
        self.n = n
        self.modulus = modulus
        self.order = (1 << n) - 1
        self.size = 1 << n
        self._table = None

    def __repr__(self):
        return f"Field(n={self.n}, modulus={bin(self.modulus)})"

    def __eq__(self, other):
        return isinstance(other, Field) and (self.n, self.modulus) == (other.n, other.modulus)

    def __hash__(self):
        return hash((self.n, self.modulus))

    def mul(self, a: int, b: int) -> int:
        """Carryless product reduced modulo the field polynomial."""
        r = 0
        top = 1 << self.n
        mod = self.modulus
        while b:
            if b & 1:
                r ^= a
            b >>= 1
            a <<= 1
            if a & top:
                a ^= mod
        return r

    def sqr(self, a: int) -> int:
        return self.mul(a, a)

    def pow(self, a: int, e: int) -> int:
        """a^e with e first reduced to its canonical residue mod 2^n - 1.

        pow(a, 0) = 1 for every a (empty product), pow(0, e) = 0 for e > 0.
        """
        if e == 0:
            return 1
        if a == 0:
            return 0
        r = reduce_value(e, self.n)
        acc = 1
        base = a
        while r:
            if r & 1:
                acc = self.mul(acc, base)
            r >>= 1
            if r:
                base = self.mul(base, base)
        return acc

    def inv(self, a: int) -> int:
        """Multiplicative inverse, as a^(2^n - 2)."""
        if a == 0:
            raise ZeroDivisionError("0 has no inverse in GF(2^n)")
        return self.pow(a, self.order - 1) if self.order > 1 else 1

    def elements(self):
        """All 2^n elements, once each, in integer order of their bit patterns."""
        return iter(range(self.size))

    def element_chunks(self, parts: int):
        """Partition of the enumeration into <= parts contiguous ranges."""
        if parts < 1:
            raise ValueError("parts must be positive")
        step = -(-self.size // parts)
        return [range(lo, min(lo + step, self.size)) for lo in range(0, self.size, step)]

    def primitive_element(self) -> int:
        """Smallest element (as an int) generating the multiplicative group."""
        if self.order == 1:
            return 1
        primes = _prime_factors(self.order)
        for g in range(2, self.size):
            if all(self.pow(g, self.order // p) != 1 for p in primes):
                return g
        raise AssertionError("no generator found")  # unreachable for a field

    # -- bulk kernels -------------------------------------------------------

    def power_table(self) -> "PowTable":
        if self._table is None:
            if self.n > TABLE_MAX_DEGREE:
                raise MemoryError(
                    f"exp/log tables limited to n <= {TABLE_MAX_DEGREE}; "
                    "use all_powers(), which falls back to the bitwise kernel"
                )
            self._table = PowTable(self)
        return self._table

    def all_powers(self, e: int) -> np.ndarray:
        """x^e for every x in 0..2^n-1 as a uint32 array (table or bitwise kernel)."""
        if self.n <= TABLE_MAX_DEGREE:
            return self.power_table().pow_all(e)
        return pow_all_bitwise(self, e)


# ---------------------------------------------------------------------------
# vectorized kernels


def _clmul_const(arr: np.ndarray, c: int) -> np.ndarray:
    """Carryless multiply of a uint64 array by a constant polynomial."""
    p = np.zeros_like(arr)
    b = 0
    while c:
        if c & 1:
            p ^= arr << np.uint64(b)
        c >>= 1
        b += 1
    return p


def _reduce_vec(p: np.ndarray, n: int, modulus: int) -> np.ndarray:
    """Reduce carryless products (< 2^(2n)) modulo the field polynomial."""
    mask = np.uint64((1 << n) - 1)
    tail = modulus ^ (1 << n)
    out = p & mask
    hi = p >> np.uint64(n)
    while hi.any():
        q = _clmul_const(hi, tail)
        out ^= q & mask
        hi = q >> np.uint64(n)
    return out


class PowTable:
    """exp/log tables over a primitive element, for bulk monomial evaluation."""

    def __init__(self, field: Field):
        n, order = field.n, field.order
        g = field.primitive_element()
        exp = np.empty(order, dtype=np.uint64)
        exp[0] = 1
        seed = min(order, 256)
        cur = 1
        for i in range(1, seed):
            cur = field.mul(cur, g)
            exp[i] = cur
        filled = seed
        while filled < order:
            block = min(filled, order - filled)
            c = field.pow(g, filled)
            prod = _clmul_const(exp[:block], c)
            exp[filled:filled + block] = _reduce_vec(prod, n, field.modulus)
            filled += block
        self.field = field
        self.exp = exp.astype(np.uint32)
        log = np.zeros(field.size, dtype=np.uint32)
        log[self.exp] = np.arange(order, dtype=np.uint32)
        self.log = log

    def pow_all(self, e: int) -> np.ndarray:
        """x^e for x = 0..2^n-1 under the canonical exponent convention."""
        field = self.field
        if e == 0:
            return np.ones(field.size, dtype=np.uint32)
        r = reduce_value(e, field.n)
        out = np.empty(field.size, dtype=np.uint32)
        out[0] = 0
        t = self.log[1:].astype(np.uint64)
        t *= np.uint64(r)
        t %= np.uint64(field.order)
        out[1:] = self.exp[t]
        return out


_SPREAD16 = None


def _spread16():
    global _SPREAD16
    if _SPREAD16 is None:
        t = np.arange(1 << 16, dtype=np.uint64)
        s = np.zeros(1 << 16, dtype=np.uint64)
        for b in range(16):
            s |= ((t >> np.uint64(b)) & np.uint64(1)) << np.uint64(2 * b)
        _SPREAD16 = s
    return _SPREAD16


def pow_all_bitwise(field: Field, e: int, chunk: int = 1 << 20) -> np.ndarray:
    """Chunked square-and-multiply x^e over the whole field, no tables.

    Slower than the table route but memory-flat; used above TABLE_MAX_DEGREE.
    """
    n = field.n
    if n > 32:
        raise ValueError("bitwise bulk kernel supports n <= 32")
    if e == 0:
        return np.ones(field.size, dtype=np.uint32)
    r = reduce_value(e, n)
    bits = [(r >> i) & 1 for i in range(r.bit_length())]
    spread = _spread16()
    m16 = np.uint64(0xFFFF)
    out = np.empty(field.size, dtype=np.uint32)

    def sqr_vec(v):
        s = spread[v & m16] | spread[(v >> np.uint64(16)) & m16] << np.uint64(32)
        return _reduce_vec(s, n, field.modulus)

    def mul_vec(a, b):
        p = np.zeros_like(a)
        for i in range(n):
            bit = (b >> np.uint64(i)) & np.uint64(1)
            p ^= (a * bit) << np.uint64(i)
        return _reduce_vec(p, n, field.modulus)

    for lo in range(0, field.size, chunk):
        xs = np.arange(lo, min(lo + chunk, field.size), dtype=np.uint64)
        acc = np.ones_like(xs)
        base = xs.copy()
        for i, bit in enumerate(bits):
            if bit:
                acc = mul_vec(acc, base)
            if i + 1 < len(bits):
                base = sqr_vec(base)
        out[lo:lo + len(xs)] = acc
    if e != 0:
        out[0] = 0
    return out
