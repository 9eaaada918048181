"""Differential uniformity of monomials and the exact APN decision.

For a power function the derivative direction a = 1 already determines the
differential uniformity: substituting x -> a*y carries the a-derivative
counts onto the 1-derivative counts.  The full double loop over all a is
kept as a low-degree oracle.
"""

from dataclasses import dataclass

import numpy as np

from .exponents import reduce_value
from .field import Field
from .zero_apn import DEFAULT_SCAN_CAP, ScanCapError

ORACLE_CAP = 12


@dataclass(frozen=True)
class DiffSpectrum:
    n: int
    exponent: int  # canonical residue
    histogram: dict  # solution count -> number of outputs b attaining it
    uniformity: int

    def mass(self) -> int:
        return sum(c * m for c, m in self.histogram.items())


def derivative_values(d: int, field: Field) -> np.ndarray:
    """(x+1)^d + x^d for every x, via one bulk evaluation of x^d."""
    xd = field.all_powers(d)
    return xd ^ xd.reshape(-1, 2)[:, ::-1].reshape(-1)


def diff_spectrum_monomial(d, field, scan_cap=DEFAULT_SCAN_CAP) -> DiffSpectrum:
    """Histogram of #{x : (x+1)^d + x^d = b} over all b, and its maximum."""
    if field.n > scan_cap:
        raise ScanCapError(f"n = {field.n} above scan cap {scan_cap}")
    deriv = derivative_values(d, field)
    counts = np.bincount(deriv, minlength=field.size)
    vals, mult = np.unique(counts, return_counts=True)
    histogram = {int(v): int(m) for v, m in zip(vals, mult)}
    return DiffSpectrum(field.n, reduce_value(d, field.n), histogram, int(vals[-1]))


def is_apn(d: int, field: Field, scan_cap: int = DEFAULT_SCAN_CAP) -> bool:
    return diff_spectrum_monomial(d, field, scan_cap).uniformity == 2


def monomial_profile(d, field, scan_cap=DEFAULT_SCAN_CAP):
    """(nontrivial 0-APN root count, DiffSpectrum) from a single derivative pass."""
    if field.n > scan_cap:
        raise ScanCapError(f"n = {field.n} above scan cap {scan_cap}")
    deriv = derivative_values(d, field)
    counts = np.bincount(deriv, minlength=field.size)
    vals, mult = np.unique(counts, return_counts=True)
    histogram = {int(v): int(m) for v, m in zip(vals, mult)}
    spectrum = DiffSpectrum(field.n, reduce_value(d, field.n), histogram, int(vals[-1]))
    nontrivial_roots = int(np.count_nonzero(deriv == 1)) - 2
    return nontrivial_roots, spectrum


def full_uniformity_oracle(d: int, field: Field, scan_cap: int = ORACLE_CAP) -> int:
    """Max solution count over all derivative directions a != 0 (double loop)."""
    if field.n > scan_cap:
        raise ScanCapError(f"n = {field.n} above oracle cap {scan_cap}")
    f = field.all_powers(d).astype(np.int64)
    idx = np.arange(field.size)
    best = 0
    for a in range(1, field.size):
        deriv = f[idx ^ a] ^ f
        best = max(best, int(np.bincount(deriv, minlength=field.size).max()))
    return best


def diff_spectrum_naive(d: int, field: Field) -> DiffSpectrum:
    """Per-element reference spectrum, independent of the bulk kernels."""
    counts = {}
    for x in field.elements():
        b = field.pow(x, d) ^ field.pow(x ^ 1, d)
        counts[b] = counts.get(b, 0) + 1
    histogram = {}
    for b in range(field.size):
        c = counts.get(b, 0)
        histogram[c] = histogram.get(c, 0) + 1
    return DiffSpectrum(
        field.n, reduce_value(d, field.n), histogram, max(counts.values())
    )
