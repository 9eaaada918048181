"""apnforge: 0-APN / APN analysis of two-parameter monomial exponents over GF(2^n)."""

from .apn import (
    DiffSpectrum, diff_spectrum_monomial, diff_spectrum_naive,
    full_uniformity_oracle, is_apn,
)
from .exponents import (
    ExpSet, ReducedExponent, Reflection, check_unique_expansion, compress,
    e_lk, exp_set, mod_inverse, negate_complement, reduce_mod_mersenne,
    reduce_value, reflect_k, set_value, weight,
)
from .families import (
    DOBBERTIN, FAMILY_NAMES, GOLD, INVERSE, KASAMI, NIHO_EVEN, NIHO_ODD,
    WELCH, EquivalenceWitness, FamilyInstance, classify, coset, coset_min,
    cyclotomic_equivalent, dobbertin_exponent, dobbertin_inverse_scan,
    elk_equivalence_scan, family_exponent, valid_instances,
)
from .field import Field, PowTable, irreducibles, is_irreducible, smallest_irreducible
from .records import ScanRecord, read_csv, read_json, write_csv, write_json
from .scan import scan_cell, scan_table, table_rows
from .theorems import SUITE_IDS, run_suite
from .zero_apn import (
    CASCADE, CONDITIONS, EXACT, THEOREM, THEOREM_RELAXED, ImageClass,
    ScanCapError, ViolationProfile, ZeroApnVerdict, cascade_sufficient,
    characterize_violations, generate_dims, image_class, is_x0_apn_exact,
    is_zero_apn_exact, relaxed_sufficient, thm_sufficient,
)

__version__ = "0.1.0"
