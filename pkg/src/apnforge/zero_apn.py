"""0-APN analysis of the exponents e(l,k) and of arbitrary monomials.

x^d is 0-APN over GF(2^n) exactly when x^d + (x+1)^d + 1 = 0 has no roots
outside {0, 1}.  The cheap sufficient conditions here are pure integer-gcd
tests; the exact deciders brute-force the whole field.
"""

from dataclasses import dataclass
from math import gcd

import numpy as np

from .exponents import e_lk
from .field import Field

DEFAULT_SCAN_CAP = 28
X0_SCAN_CAP = 12

THEOREM = "theorem"
CASCADE = "cascade"
EXACT = "exact"
THEOREM_RELAXED = "theorem-relaxed"  # experimental: gcd(kl,n) = 2 with 3 | e(l,k)

CONDITIONS = (THEOREM, CASCADE, EXACT, THEOREM_RELAXED)


class ScanCapError(ValueError):
    """Requested exact scan exceeds the configured degree cap."""


@dataclass(frozen=True)
class ZeroApnVerdict:
    exponent: int
    n: int
    is_zero_apn: bool
    nontrivial_root_count: int | None
    method: str


@dataclass(frozen=True)
class ViolationProfile:
    """Minimal subfield degrees on which x^e(l,k) + (x+1)^e(l,k) + 1 vanishes.

    x^e(l,k) is 0-APN over GF(2^n) for exactly the n not divisible by any of
    the violating degrees.
    """

    l: int
    k: int
    candidate_degrees: tuple
    violating_subfield_degrees: tuple

    def predicts_zero_apn(self, n: int) -> bool:
        return all(n % m for m in self.violating_subfield_degrees)


@dataclass(frozen=True)
class ImageClass:
    gcd_value: int
    kind: str  # "permutation" | "three-to-one" | "other"


def thm_sufficient(l: int, k: int, n: int) -> bool:
    """Main sufficiency test: gcd(kl,n) = 1 and gcd(e(l-1,k), 2^n-1) = 1.

    The second gcd equals 2^gcd(l-1,n) - 1 whenever gcd(k,n) = 1, which the
    first condition guarantees, so the whole test runs on machine integers.
    """
    if l < 2 or k < 1 or n < 1:
        raise ValueError("need l >= 2, k >= 1, n >= 1")
    return gcd(k * l, n) == 1 and gcd(l - 1, n) == 1


def cascade_sufficient(l: int, k: int, n: int) -> bool:
    """Cascading sufficiency test: gcd(jk, n) = 1 for every j in 2..l."""
    if l < 2 or k < 1:
        raise ValueError("need l >= 2, k >= 1")
    return all(gcd(j * k, n) == 1 for j in range(2, l + 1))


def relaxed_sufficient(l: int, k: int, n: int) -> bool:
    """Experimental variant allowing gcd(kl,n) = 2 when 3 divides e(l,k).

    Roots forced into F_4 \\ F_2 cannot occur for exponents divisible by 3;
    validated against exact scans only for n <= 18.
    """
    if l < 2 or k < 1 or n < 1:
        raise ValueError("need l >= 2, k >= 1, n >= 1")
    g = gcd(k * l, n)
    if g > 2:
        return False
    if g == 2 and e_lk(l, k) % 3 != 0:
        return False
    if gcd(k, n) == 1:
        return gcd(l - 1, n) == 1
    return gcd(e_lk(l - 1, k), (1 << n) - 1) == 1


def generate_dims(l, k, n_lo, n_hi, condition=THEOREM, scan_cap=DEFAULT_SCAN_CAP):
    """Ascending dimensions n in [n_lo, n_hi] passing the chosen 0-APN condition."""
    if n_lo > n_hi:
        raise ValueError("empty dimension range")
    n_lo = max(n_lo, 1)
    if condition == THEOREM:
        kl = k * l
        return [n for n in range(n_lo, n_hi + 1)
                if gcd(kl, n) == 1 and gcd(l - 1, n) == 1]
    if condition == CASCADE:
        # gcd(jk,n) = 1 for all j in 2..l <=> n coprime to k and to every prime <= l
        rad = 1
        for p in range(2, l + 1):
            if all(p % q for q in range(2, p)) and rad % p:
                rad *= p
        kk = k
        p = 2
        while p * p <= kk:
            if kk % p == 0:
                if rad % p:
                    rad *= p
                while kk % p == 0:
                    kk //= p
            p += 1
        if kk > 1 and rad % kk:
            rad *= kk
        return [n for n in range(n_lo, n_hi + 1) if gcd(rad, n) == 1]
    if condition == THEOREM_RELAXED:
        return [n for n in range(n_lo, n_hi + 1) if relaxed_sufficient(l, k, n)]
    if condition == EXACT:
        d = e_lk(l, k)
        out = []
        for n in range(n_lo, n_hi + 1):
            if is_zero_apn_exact(d, Field(n), scan_cap=scan_cap).is_zero_apn:
                out.append(n)
        return out
    raise ValueError(f"unknown condition {condition!r}")


def zero_apn_root_count(d: int, field: Field) -> int:
    """Number of x in GF(2^n) with x^d + (x+1)^d + 1 = 0 (bulk kernel route)."""
    xd = field.all_powers(d)
    x1d = xd.reshape(-1, 2)[:, ::-1].reshape(-1)  # value at x^1
    return int(np.count_nonzero((xd ^ x1d) == 1))


def zero_apn_root_count_naive(d: int, field: Field) -> int:
    """Per-element reference for the root count; independent of the kernels."""
    count = 0
    for x in field.elements():
        if field.pow(x, d) ^ field.pow(x ^ 1, d) == 1:
            count += 1
    return count


def is_zero_apn_exact(d, field, scan_cap=DEFAULT_SCAN_CAP, naive=False):
    """Exact 0-APN decision for x^d over the given field.

    x = 0 and x = 1 are always roots; the verdict is positive when they are
    the only ones.
    """
    if field.n > scan_cap:
        raise ScanCapError(f"n = {field.n} above scan cap {scan_cap}")
    roots = (zero_apn_root_count_naive if naive else zero_apn_root_count)(d, field)
    nontrivial = roots - 2
    return ZeroApnVerdict(d, field.n, nontrivial == 0, nontrivial, "exact-brute-force")


def sufficient_verdict(l: int, k: int, n: int) -> ZeroApnVerdict | None:
    """Positive verdict from the gcd conditions, or None when they don't apply."""
    if thm_sufficient(l, k, n):
        return ZeroApnVerdict(e_lk(l, k), n, True, None, "gcd-sufficient")
    if cascade_sufficient(l, k, n):
        return ZeroApnVerdict(e_lk(l, k), n, True, None, "cascade-sufficient")
    return None


def is_x0_apn_exact(d: int, x0: int, field: Field, scan_cap: int = X0_SCAN_CAP) -> bool:
    """Whether every (y,z) with F(x0)+F(y)+F(z)+F(x0+y+z) = 0 is trivial.

    Trivial means (x0+y)(x0+z)(y+z) = 0.  Quadratic in the field size, so
    capped much lower than the single-pass scans.
    """
    if field.n > scan_cap:
        raise ScanCapError(f"n = {field.n} above x0 scan cap {scan_cap}")
    f = field.all_powers(d).astype(np.uint32)
    idx = np.arange(field.size, dtype=np.uint32)
    fy = f[:, None]
    fz = f[None, :]
    fs = f[(idx[:, None] ^ idx[None, :]) ^ np.uint32(x0)]
    vanish = (fy ^ fz ^ fs) == f[x0]
    trivial = (idx[:, None] == idx[None, :]) | (idx == x0)[:, None] | (idx == x0)[None, :]
    return not bool(np.any(vanish & ~trivial))


def _divisors(v: int):
    out = set()
    i = 1
    while i * i <= v:
        if v % i == 0:
            out.add(i)
            out.add(v // i)
        i += 1
    return out


def characterize_violations(l: int, k: int, probe_cap: int = 16) -> ViolationProfile:
    """Exactly test every candidate subfield degree for nontrivial roots.

    Candidates are the divisors > 1 of jk for j in 2..l, since any root of
    x^e(l,k) + (x+1)^e(l,k) + 1 lies in F_2^gcd(jk,n) for some such j.  A
    violating degree is kept only if no proper divisor already violates.
    """
    if l < 2 or k < 1:
        raise ValueError("need l >= 2, k >= 1")
    candidates = set()
    for j in range(2, l + 1):
        candidates |= {m for m in _divisors(j * k) if m > 1}
    candidates = sorted(candidates)
    if candidates and candidates[-1] > probe_cap:
        raise ScanCapError(
            f"candidate degree {candidates[-1]} exceeds probe cap {probe_cap}"
        )
    d = e_lk(l, k)
    violating = [m for m in candidates
                 if not is_zero_apn_exact(d, Field(m), scan_cap=probe_cap).is_zero_apn]
    minimal = [m for m in violating
               if not any(m % v == 0 for v in violating if v != m)]
    return ViolationProfile(l, k, tuple(candidates), tuple(minimal))


def image_class(l: int, k: int, n: int) -> ImageClass:
    """Image-set class of x^e(l,k) from gcd(e(l,k), 2^n-1) = 2^gcd(l,n) - 1.

    Only asserted for gcd(k,n) = 1; permutation when gcd(l,n) = 1, 3-to-1 on
    the nonzero elements when gcd(l,n) = 2.
    """
    if gcd(k, n) != 1:
        raise ValueError("image-set formula requires gcd(k, n) = 1")
    g = gcd(l, n)
    kind = "permutation" if g == 1 else ("three-to-one" if g == 2 else "other")
    return ImageClass((1 << g) - 1, kind)
