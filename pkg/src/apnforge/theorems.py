"""Computational verification of the family (in)equivalence results.

Each suite exhaustively searches the relevant parameter box for cyclotomic
coincidences between a family exponent and the e(l,k) values, then compares
what it found against the asserted exception set.  A suite report carries
the raw witnesses so a mismatch can be inspected directly.
"""

from dataclasses import dataclass, field as dc_field
from math import gcd

from .exponents import (
    ReducedExponent, e_lk, mod_inverse, reduce_value, reflect_k, weight,
)
from .families import dobbertin_exponent, elk_equivalence_scan, family_exponent

SUITE_IDS = (
    "lemmas", "welch", "kasami", "kasami-inverse", "niho",
    "dobbertin", "dobbertin-inverse", "all",
)


@dataclass
class SuiteReport:
    suite: str
    ok: bool
    failures: list
    details: dict = dc_field(default_factory=dict)

    def to_json_dict(self):
        return {
            "suite": self.suite,
            "ok": self.ok,
            "failures": self.failures,
            "details": {str(k): v for k, v in self.details.items()},
        }


def _expect(failures, cond, message):
    if not cond:
        failures.append(message)


def verify_welch(t_max: int = 20) -> SuiteReport:
    """Welch exponent 2^t + 3 vs e(l,k): coincidences only at t = 1 and t = 2."""
    failures = []
    details = {}
    for t in range(1, t_max + 1):
        n = 2 * t + 1
        w = (1 << t) + 3
        direct = elk_equivalence_scan(n, w)
        inverse = elk_equivalence_scan(n, w, use_inverse=True)
        details[t] = {"n": n, "direct": direct, "inverse": inverse}
        if t > 2:
            _expect(failures, not direct,
                    f"welch t={t}: unexpected direct witnesses {direct}")
            _expect(failures, not inverse,
                    f"welch t={t}: unexpected inverse witnesses {inverse}")
    # 5 = e(2,2) at t=1; 7 = e(3,1) and 7^-1 = 9 = e(2,3) at t=2
    _expect(failures, (2, 2, 0) in details[1]["direct"], "welch t=1 misses e(2,2)")
    _expect(failures, (3, 1, 0) in details[2]["direct"], "welch t=2 misses e(3,1)")
    _expect(failures, (2, 3, 0) in details[2]["inverse"], "welch t=2 misses e(2,3)")
    return SuiteReport("welch", not failures, failures, details)


def verify_kasami(t_max: int = 12, n_max: int = 40) -> SuiteReport:
    """Kasami exponent 2^2t - 2^t + 1 vs e(t+1, i): nothing beyond t <= 2.

    The small-dimension report records the four n = 5 values 5, 7, 9, 25
    hit by the sign-flipped companion 2^2t + 2^t - 1 with t <= 2; the
    catalog formula itself meets e(l,k) at n = 5 only inside the class of
    the Gold exponent 3, and that set is recorded alongside.
    """
    failures = []
    details = {"theorem": [], "n5_companion_hits": [], "n5_catalog_hits": []}
    for t in range(3, t_max + 1):
        for n in range(2 * t + 1, n_max + 1):
            if gcd(t, n) != 1:
                continue
            kas = family_exponent("Kasami", t, n).exponent
            hits = [(l, k, a) for (l, k, a)
                    in elk_equivalence_scan(n, kas, l_box=t + 1)
                    if gcd(k, n) == 1]
            if hits:
                details["theorem"].append({"t": t, "n": n, "hits": hits})
                failures.append(f"kasami t={t} n={n}: unexpected {hits}")

    n = 5
    companion_hits = set()
    for t in (1, 2):
        companion = (1 << (2 * t)) + (1 << t) - 1
        for use_inv in (False, True):
            for (l, k, a) in elk_equivalence_scan(n, companion, use_inverse=use_inv,
                                                  l_box=t + 1):
                companion_hits.add(reduce_value(e_lk(l, k), n))
    details["n5_companion_hits"] = sorted(companion_hits)
    _expect(failures, sorted(companion_hits) == [5, 7, 9, 25],
            f"kasami n=5 companion hits mismatch: {sorted(companion_hits)}")

    exact = set()
    for t in range(1, 5):
        kas = family_exponent("Kasami", t, n).exponent
        for use_inv in (False, True):
            for (l, k, a) in elk_equivalence_scan(n, kas, use_inverse=use_inv):
                exact.add(reduce_value(e_lk(l, k), n))
    details["n5_catalog_hits"] = sorted(exact)
    return SuiteReport("kasami", not failures, failures, details)


def verify_kasami_inverse(n_max: int = 31) -> SuiteReport:
    """Inverse Kasami vs e(l,k): only t = 1 and t = n-1, realized by e((n+1)/2, 2).

    Equivalently: witnesses occur exactly when K_t falls into the cyclotomic
    class of the Gold exponent 3, which adds t = 2, 3 at n = 5 where the
    Kasami classes collapse onto it.
    """
    failures = []
    details = {}
    from .families import cyclotomic_equivalent

    for n in range(3, n_max + 1, 2):
        m = (1 << n) - 1
        per_t = {}
        for t in range(1, n):
            if gcd(t, n) != 1:
                continue
            kas = reduce_value(family_exponent("Kasami", t, n).exponent, n)
            if gcd(kas, m) != 1:
                per_t[t] = "not invertible"
                continue
            wits = elk_equivalence_scan(n, mod_inverse(kas, n))
            per_t[t] = wits
            gold_class = bool(cyclotomic_equivalent(3, kas, n))
            _expect(failures, bool(wits) == gold_class,
                    f"kasami-inverse n={n} t={t}: witnesses {wits} vs "
                    f"Gold-class membership {gold_class}")
            if n >= 7:
                _expect(failures, bool(wits) == (t in (1, n - 1)),
                        f"kasami-inverse n={n} t={t}: witnesses outside t in {{1, n-1}}")
            if t in (1, n - 1) and isinstance(wits, list):
                _expect(failures,
                        any(l == (n + 1) // 2 and k == 2 for (l, k, a) in wits),
                        f"kasami-inverse n={n} t={t}: e((n+1)/2, 2) not realized")
        details[n] = per_t
    return SuiteReport("kasami-inverse", not failures, failures, details)


def verify_niho(t_max: int = 21) -> SuiteReport:
    """Niho exponents vs e(l,k): even case stops after t = 2, odd after t = 1."""
    failures = []
    details = {"even": {}, "odd": {}}
    for t in range(2, t_max + 1, 2):
        n = 2 * t + 1
        niho = (1 << t) + (1 << (t // 2)) - 1
        direct = elk_equivalence_scan(n, niho)
        inverse = elk_equivalence_scan(n, niho, use_inverse=True)
        details["even"][t] = {"n": n, "direct": direct, "inverse": inverse}
        if t > 2:
            _expect(failures, not direct and not inverse,
                    f"niho-even t={t}: unexpected witnesses")
    ex = details["even"][2]
    vals = sorted({reduce_value(e_lk(l, k), 5)
                   for (l, k, a) in ex["direct"] + ex["inverse"]})
    _expect(failures, vals == [5, 7, 9, 25],
            f"niho-even t=2 exception values {vals}")

    for t in range(1, t_max + 1, 2):
        n = 2 * t + 1
        niho = (1 << t) + (1 << ((3 * t + 1) // 2)) - 1
        direct = elk_equivalence_scan(n, niho)
        inverse = elk_equivalence_scan(n, niho, use_inverse=True)
        details["odd"][t] = {"n": n, "direct": direct, "inverse": inverse}
        if t > 1:
            _expect(failures, not direct and not inverse,
                    f"niho-odd t={t}: unexpected witnesses")
    _expect(failures, (2, 2, 0) in details["odd"][1]["direct"],
            "niho-odd t=1 misses e(2,2)")
    return SuiteReport("niho", not failures, failures, details)


def verify_dobbertin(n_max: int = 100) -> SuiteReport:
    """Direct Dobbertin coincidences: e(4,4) at n = 5 and e(9,2) at n = 10 only."""
    failures = []
    details = {}
    for t in range(1, n_max // 5 + 1):
        n = 5 * t
        wits = elk_equivalence_scan(n, dobbertin_exponent(t))
        details[n] = wits
        if n == 5:
            _expect(failures, (4, 4, 0) in wits, "dobbertin n=5 misses e(4,4)")
        elif n == 10:
            _expect(failures, any(l == 9 and k == 2 for (l, k, a) in wits),
                    "dobbertin n=10 misses e(9,2)")
        else:
            _expect(failures, not wits, f"dobbertin n={n}: unexpected {wits}")
    return SuiteReport("dobbertin", not failures, failures, details)


def verify_dobbertin_inverse(n_max: int = 100) -> SuiteReport:
    """Inverse Dobbertin coincidences: n = 5 only; even n are non-invertible.

    n = 10 is recorded explicitly: the exponent is 3-to-1 there, so no
    inverse exists and the dimension cannot carry an inverse-side witness
    (its direct-side witness e(9,2) is covered by the direct suite).
    """
    from .families import dobbertin_inverse_scan

    failures = []
    results = dobbertin_inverse_scan(n_max)
    details = {}
    for r in results:
        details[r.n] = {
            "invertible": r.invertible,
            "gcd": r.gcd_with_order,
            "witnesses": list(r.witnesses),
        }
        if r.n == 5:
            _expect(failures, r.invertible and (4, 1, 0) in r.witnesses,
                    "dobbertin-inverse n=5 misses e(4,1) = 15")
        elif r.n % 2 == 0:
            _expect(failures, not r.invertible,
                    f"dobbertin-inverse n={r.n}: expected non-invertible")
        else:
            _expect(failures, r.invertible and not r.witnesses,
                    f"dobbertin-inverse n={r.n}: unexpected {r.witnesses}")
    return SuiteReport("dobbertin-inverse", not failures, failures, details)


def verify_lemmas(reflect_n_max: int = 30, weight_n_max: int = 40,
                  gold_n_max: int = 31) -> SuiteReport:
    """Parameter reflection, the gcd(n,2t) = 2 weight laws, Gold inverses."""
    failures = []
    checked = {"reflection": 0, "weights": 0, "gold_inverse": 0, "image_gcd": 0}

    for n in range(4, reflect_n_max + 1):
        half = n // 2
        for k in range(1, half):
            for l in range(1, n):
                ref = reflect_k(l, k, n)
                lhs = reduce_value((1 << (ref.shift % n)) * e_lk(l, ref.k_low), n)
                rhs = reduce_value(e_lk(l, ref.k_high), n)
                checked["reflection"] += 1
                if lhs != rhs:
                    failures.append(f"reflection fails at l={l} k={k} n={n}")

    for n in range(4, weight_n_max + 1, 2):
        for t in range(1, n + 1):
            if gcd(n, 2 * t) != 2:
                continue
            for m in range(1, n // 2):
                w1 = weight(ReducedExponent(reduce_value(e_lk(m, 2 * t), n), n))
                w2 = weight(ReducedExponent(reduce_value(e_lk(n // 2 + m, 2 * t), n), n))
                w3 = weight(ReducedExponent(reduce_value(e_lk(n + m, 2 * t), n), n))
                same = reduce_value(e_lk(3 * n // 2 + m, 2 * t), n) == \
                    reduce_value(e_lk(m, 2 * t), n)
                checked["weights"] += 1
                if not (w1 == m and w2 == n // 2 and w3 == n // 2 + m and same):
                    failures.append(f"gcd-2 weight law fails at n={n} t={t} m={m}")

    # (2^r + 1) * e((n+1)/2, 2r) is a power of 2 mod 2^n - 1 for odd n, gcd(r,n)=1
    for n in range(3, gold_n_max + 1, 2):
        for r in range(1, n):
            if gcd(r, n) != 1:
                continue
            prod = reduce_value(((1 << r) + 1) * e_lk((n + 1) // 2, 2 * r), n)
            checked["gold_inverse"] += 1
            if prod.bit_count() != 1:
                failures.append(f"gold inverse identity fails at n={n} r={r}")

    # gcd(e(l,k), 2^n - 1) = 2^gcd(l,n) - 1 under gcd(k,n) = 1, spot grid
    for n in range(2, 25):
        for l in range(1, 12):
            for k in range(1, 8):
                if gcd(k, n) != 1:
                    continue
                checked["image_gcd"] += 1
                if gcd(e_lk(l, k), (1 << n) - 1) != (1 << gcd(l, n)) - 1:
                    failures.append(f"image gcd formula fails at l={l} k={k} n={n}")

    return SuiteReport("lemmas", not failures, failures, {"checked": checked})


_SUITES = {
    "welch": verify_welch,
    "kasami": verify_kasami,
    "kasami-inverse": verify_kasami_inverse,
    "niho": verify_niho,
    "dobbertin": verify_dobbertin,
    "dobbertin-inverse": verify_dobbertin_inverse,
    "lemmas": verify_lemmas,
}


def run_suite(suite_id: str, **bounds) -> list:
    """Run one named suite, or all of them; returns a list of reports."""
    if suite_id == "all":
        return [fn() for fn in _SUITES.values()]
    if suite_id not in _SUITES:
        raise ValueError(f"unknown suite {suite_id!r}; choose from {SUITE_IDS}")
    return [_SUITES[suite_id](**bounds)]
