"""Tour of the exponent algebra: e(l,k), Mersenne residues, bit-set calculus.

Run: python demos/01_exponent_algebra.py
"""

from apnforge import (
    ExpSet, ReducedExponent, compress, e_lk, exp_set, mod_inverse,
    negate_complement, reduce_mod_mersenne, reflect_k, set_value, weight,
)

print("The two-parameter exponents e(l,k) = sum_{j<l} 2^(jk):")
for (l, k) in [(3, 2), (2, 5), (4, 1), (9, 2)]:
    print(f"  e({l},{k}) = {e_lk(l, k)}")
print(f"  e(100,100) has {e_lk(100, 100).bit_length()} bits "
      f"(~10^{len(str(e_lk(100, 100))) - 1})")

print("\nExponents of monomials live modulo 2^n - 1:")
r = reduce_mod_mersenne(e_lk(3, 4), 5)
print(f"  e(3,4) = 273 = {r.value} (mod 2^5-1), weight {weight(r)}")
r = reduce_mod_mersenne(e_lk(9, 2), 10)
print(f"  e(9,2) = {r.value} (mod 2^10-1)")
print(f"  the all-ones residue survives: 63 mod 2^3-1 -> "
      f"{reduce_mod_mersenne(63, 3).value}  (x^7 is the nonzero indicator, not x^0)")

print("\nInverses modulo 2^n - 1:")
print(f"  7^-1 mod 31 = {mod_inverse(7, 5)}")

print("\nNegation complements the bit pattern:")
r = negate_complement(ReducedExponent(3, 6))
print(f"  -3 = {r.value} (mod 63), binary {r.value:06b}")

print("\nCompression of exponent multisets (two copies of j become one j+1):")
s = ExpSet((4, 4, 7), 10)
print(f"  {{4, 4, 7}} over n=10 compresses to {compress(s).positions}")
s = ExpSet((9, 9), 10)
print(f"  {{9, 9}} over n=10 wraps to {compress(s).positions} since 2^10 = 1")
r = ReducedExponent(426, 10)
print(f"  exp_set(426, n=10) = {exp_set(r).positions}, "
      f"value check {set_value(exp_set(r))}")

print("\nStride reflection around n/2 (shift makes it an exact congruence):")
for (l, k, n) in [(4, 2, 10), (3, 1, 9)]:
    ref = reflect_k(l, k, n)
    lhs = reduce_mod_mersenne((1 << (ref.shift % n)) * e_lk(l, ref.k_low), n)
    rhs = reduce_mod_mersenne(e_lk(l, ref.k_high), n)
    print(f"  n={n}: 2^{ref.shift} * e({l},{ref.k_low}) = e({l},{ref.k_high})"
          f" (mod 2^{n}-1): {lhs.value} = {rhs.value}")
