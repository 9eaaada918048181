"""The six known APN monomial families and cyclotomic-equivalence testing.

Exponents d and e are cyclotomic equivalent modulo 2^n - 1 when e lies in
the coset {2^a d} of d, or in the coset of d^-1.  For monomials this is the
whole of CCZ-equivalence, so classification against the known families
reduces to a handful of modular congruences per candidate.
"""

from dataclasses import dataclass
from math import gcd

from .exponents import mod_inverse, reduce_value

GOLD = "Gold"
KASAMI = "Kasami"
WELCH = "Welch"
NIHO_EVEN = "NihoEven"
NIHO_ODD = "NihoOdd"
INVERSE = "Inverse"
DOBBERTIN = "Dobbertin"

FAMILY_NAMES = (GOLD, KASAMI, WELCH, NIHO_EVEN, NIHO_ODD, INVERSE, DOBBERTIN)

# families parameterized by i; the rest use t
_I_FAMILIES = {GOLD, KASAMI, DOBBERTIN}


@dataclass(frozen=True)
class FamilyInstance:
    family: str
    param: int
    n: int
    exponent: int
    valid: bool
    expected_degree: int

    def label(self) -> str:
        letter = "i" if self.family in _I_FAMILIES else "t"
        return f"{self.family}({letter}={self.param})"


@dataclass(frozen=True)
class EquivalenceWitness:
    kind: str  # "shift" | "inverse-shift" | "none"
    a: int | None
    details: str

    def __bool__(self):
        return self.kind != "none"


NO_WITNESS = EquivalenceWitness("none", None, "no witness")


def dobbertin_exponent(i: int) -> int:
    return (1 << (4 * i)) + (1 << (3 * i)) + (1 << (2 * i)) + (1 << i) - 1


def family_exponent(family: str, param: int, n: int) -> FamilyInstance:
    """Instance of a catalog family: formula value plus its validity condition."""
    if param < 1:
        raise ValueError("family parameter must be >= 1")
    p = param
    if family == GOLD:
        return FamilyInstance(family, p, n, (1 << p) + 1, gcd(p, n) == 1, 2)
    if family == KASAMI:
        return FamilyInstance(
            family, p, n, (1 << (2 * p)) - (1 << p) + 1, gcd(p, n) == 1, p + 1
        )
    if family == WELCH:
        return FamilyInstance(family, p, n, (1 << p) + 3, n == 2 * p + 1, 3)
    if family == NIHO_EVEN:
        valid = n == 2 * p + 1 and p % 2 == 0
        exp = (1 << p) + (1 << (p // 2)) - 1 if p % 2 == 0 else 0
        return FamilyInstance(family, p, n, exp, valid, (p + 2) // 2)
    if family == NIHO_ODD:
        valid = n == 2 * p + 1 and p % 2 == 1
        exp = (1 << p) + (1 << ((3 * p + 1) // 2)) - 1 if p % 2 == 1 else 0
        return FamilyInstance(family, p, n, exp, valid, p + 1)
    if family == INVERSE:
        return FamilyInstance(family, p, n, (1 << (2 * p)) - 1, n == 2 * p + 1, n - 1)
    if family == DOBBERTIN:
        return FamilyInstance(family, p, n, dobbertin_exponent(p), n == 5 * p, p + 3)
    raise ValueError(f"unknown family {family!r}")


def valid_instances(n: int):
    """All valid family instances over GF(2^n), over their full parameter ranges."""
    out = []
    for i in range(1, n):
        for fam in (GOLD, KASAMI):
            inst = family_exponent(fam, i, n)
            if inst.valid:
                out.append(inst)
    if n >= 3 and n % 2 == 1:
        t = (n - 1) // 2
        for fam in (WELCH, NIHO_EVEN, NIHO_ODD, INVERSE):
            inst = family_exponent(fam, t, n)
            if inst.valid:
                out.append(inst)
    if n % 5 == 0 and n >= 5:
        out.append(family_exponent(DOBBERTIN, n // 5, n))
    return out


def coset(d: int, n: int) -> list:
    """Cyclotomic coset of d: canonical residues of 2^a * d for a in [0, n)."""
    out = []
    x = reduce_value(d, n)
    m = (1 << n) - 1
    for _ in range(n):
        out.append(x)
        x <<= 1
        if x > m:
            x -= m
    return out


def coset_min(d: int, n: int) -> int:
    """Canonical coset representative: the smallest residue among all shifts."""
    return min(coset(d, n))


def coset_lookup(d: int, n: int) -> dict:
    """residue -> list of a with 2^a * residue = d (mod 2^n - 1)."""
    out = {}
    for a, x in enumerate(coset(d, n)):
        out.setdefault(x, []).append((n - a) % n)
    return out


def cyclotomic_equivalent(d: int, e: int, n: int) -> EquivalenceWitness:
    """First witness that e lies in the coset of d or (if it exists) of d^-1."""
    m = (1 << n) - 1
    e_red = reduce_value(e, n)
    for a, x in enumerate(coset(d, n)):
        if x == e_red:
            return EquivalenceWitness(
                "shift", a, f"2^{a} * {reduce_value(d, n)} = {e_red} (mod 2^{n}-1)"
            )
    d_red = reduce_value(d, n)
    if n >= 2 and d_red and gcd(d_red, m) == 1:
        inv = mod_inverse(d_red, n)
        for a, x in enumerate(coset(inv, n)):
            if x == e_red:
                return EquivalenceWitness(
                    "inverse-shift", a,
                    f"2^{a} * {d_red}^-1 = {e_red} (mod 2^{n}-1), {d_red}^-1 = {inv}",
                )
    return NO_WITNESS


def classify(d: int, n: int):
    """Every valid family instance cyclotomically equivalent to d.

    Returns (instance, witness) pairs; overlaps are kept, since e.g. 5 over
    GF(2^5) is simultaneously a Gold and a Niho exponent.
    """
    out = []
    for inst in valid_instances(n):
        w = cyclotomic_equivalent(d, inst.exponent, n)
        if w:
            out.append((inst, w))
    return out


def elk_residues(n: int):
    """(l, k, canonical residue of e(l,k)) for all l, k in [1, n)."""
    m = (1 << n) - 1
    for k in range(1, n):
        cur = 0
        ex = 0
        for l in range(1, n):
            cur += 1 << ex
            if cur > m:
                cur -= m
            ex = (ex + k) % n
            yield l, k, cur


def elk_equivalence_scan(n, target, use_inverse=False, l_box=None):
    """All (l, k, a) with 2^a * e(l,k) = target (or target^-1) mod 2^n - 1.

    Exhausts l, k in [1, n) and a in [0, n), the same search box the
    inequivalence results are verified over.  l_box restricts to a single
    term count where a theorem fixes it.
    """
    if n < 2:
        raise ValueError("scan needs n >= 2")
    t = reduce_value(target, n)
    if use_inverse:
        t = mod_inverse(t, n)
    lookup = coset_lookup(t, n)
    hits = []
    for l, k, val in elk_residues(n):
        if l_box is not None and l != l_box:
            continue
        for a in lookup.get(val, ()):
            hits.append((l, k, a))
    return sorted(hits)


@dataclass(frozen=True)
class DobbertinInverseResult:
    n: int
    t: int
    invertible: bool
    gcd_with_order: int
    witnesses: tuple


def dobbertin_inverse_scan(n_max: int = 100):
    """Per-n report of e(l,k) hits against the inverse Dobbertin exponent.

    Runs over n = 5t <= n_max.  Where gcd(D_t, 2^n - 1) > 1 the inverse does
    not exist (every even n, where the function is 3-to-1) and the dimension
    is recorded as skipped rather than silently dropped.
    """
    if n_max > 200:
        raise ValueError("scan verified only up to n = 200")
    out = []
    for t in range(1, n_max // 5 + 1):
        n = 5 * t
        m = (1 << n) - 1
        d = reduce_value(dobbertin_exponent(t), n)
        g = gcd(d, m)
        if g != 1:
            out.append(DobbertinInverseResult(n, t, False, g, ()))
            continue
        wits = elk_equivalence_scan(n, mod_inverse(d, n))
        out.append(DobbertinInverseResult(n, t, True, g, tuple(wits)))
    return out
