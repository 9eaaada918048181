"""Cyclotomic equivalence against the six known APN monomial families.

Run: python demos/04_family_classification.py
"""

from apnforge import (
    classify, coset, coset_min, cyclotomic_equivalent, dobbertin_exponent,
    elk_equivalence_scan, family_exponent, valid_instances,
)

print("Known-family instances over GF(2^5):")
for inst in valid_instances(5):
    print(f"  {inst.label():16s} exponent {inst.exponent}")

print("\nCyclotomic cosets modulo 2^5 - 1:")
print(f"  coset(21) = {coset(21, 5)}, canonical representative {coset_min(21, 5)}")
w = cyclotomic_equivalent(7, 9, 5)
print(f"  7 ~ 9?  {w.kind}: {w.details}")

print("\nclassify finds every equivalent family instance (overlaps included):")
for d in (5, 9, 29, 21):
    matches = [f"{inst.label()} ({w.kind})" for inst, w in classify(d, 5)]
    print(f"  {d:2d} over GF(2^5): {', '.join(matches) if matches else 'none'}")

print("\nWhich e(l,k) hit the Dobbertin exponent? (exhaustive l,k,a scan)")
for n in (5, 10, 15):
    wits = elk_equivalence_scan(n, dobbertin_exponent(n // 5))
    desc = ", ".join(f"2^{a}*e({l},{k})" for l, k, a in wits[:3])
    print(f"  n={n}: {desc if wits else 'no witnesses'}")
print("  (n=5 and n=10 are the only Dobbertin coincidences up to n=100)")

welch = family_exponent("Welch", 2, 5)
print(f"\nThe Welch exponent at t=2 is {welch.exponent}; its inverse 9 = e(2,3), "
      f"witness: {cyclotomic_equivalent(welch.exponent, 9, 5).details}")
