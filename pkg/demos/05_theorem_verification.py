"""Exhaustive verification of the family (in)equivalence results.

Each suite scans its parameter box for coincidences between a family
exponent and the e(l,k) values, then checks the findings against the
asserted exception sets.

Run: python demos/05_theorem_verification.py
"""

import time

from apnforge import run_suite

t0 = time.perf_counter()
for report in run_suite("all"):
    status = "PASS" if report.ok else "FAIL"
    print(f"{report.suite:18s} {status}")
    for msg in report.failures:
        print(f"    {msg}")
print(f"\nall suites in {time.perf_counter() - t0:.2f}s")

print("\nHighlights:")
welch = run_suite("welch")[0]
print(f"  welch t=2 exceptions: direct {welch.details[2]['direct']}, "
      f"inverse {welch.details[2]['inverse']}")
kasami = run_suite("kasami")[0]
print(f"  kasami companion-formula n=5 values: {kasami.details['n5_companion_hits']}")
print(f"  kasami catalog-formula n=5 values: "
      f"{kasami.details['n5_catalog_hits']} (the Gold-3 class)")
dob = run_suite("dobbertin-inverse")[0]
skips = [n for n, d in dob.details.items() if not d["invertible"]]
print(f"  inverse-Dobbertin skipped (3-to-1, no inverse) at n = {skips}")
