"""Bulk (l, i, n) APN scan with checkpointing and deterministic output.

One cell = one triple (l, i, n): reduce e(l,i), run the derivative pass,
classify any APN hit against the known families.  Cells are computed in
parallel across dimensions when asked, but records are always emitted in
(l, i, n) order, so output files are byte-identical for any worker count.
"""

import json
import os
import time
import warnings
from concurrent.futures import ProcessPoolExecutor
from dataclasses import replace

from .apn import monomial_profile
from .exponents import ReducedExponent, e_lk, reduce_value, weight
from .families import classify
from .field import Field
from .records import ScanRecord
from .zero_apn import DEFAULT_SCAN_CAP


def scan_cell(l, i, n, field=None, scan_cap=DEFAULT_SCAN_CAP) -> ScanRecord:
    """Verdict row for x^e(l,i) over GF(2^n)."""
    start = time.perf_counter()
    field = field or Field(n)
    d = e_lk(l, i)
    red = reduce_value(d, n)
    try:
        nontrivial, spectrum = monomial_profile(d, field, scan_cap=scan_cap)
    except Exception as exc:  # cap violations and kernel failures stay per-cell
        return ScanRecord(l, i, n, str(red), weight(ReducedExponent(red, n)),
                          None, None, None, (), f"error:{exc}", _ms(start))
    apn = spectrum.uniformity == 2
    families = ()
    if apn:
        families = tuple(inst.label() for inst, _ in classify(red, n))
        if not families:  # would be an APN monomial outside the known classes
            warnings.warn(f"APN hit {red} over GF(2^{n}) matches no known family")
    return ScanRecord(
        l, i, n, str(red), weight(ReducedExponent(red, n)),
        nontrivial == 0, apn, spectrum.uniformity, families,
        "exact-brute-force", _ms(start),
    )


def _ms(start):
    return int((time.perf_counter() - start) * 1000)


def _scan_dimension(args):
    # per-cell wall time goes to the log stream; the persisted elapsed_ms is
    # canonicalized to 0 so output files are byte-identical across worker
    # counts and checkpoint resumes
    n, cells, scan_cap, budget, rate = args
    field = Field(n)
    out = []
    for (l, i) in cells:
        if budget is not None and rate is not None and rate * (1 << n) > budget:
            red = reduce_value(e_lk(l, i), n)
            out.append(ScanRecord(l, i, n, str(red),
                                  weight(ReducedExponent(red, n)),
                                  None, None, None, (), "timeout", 0))
            continue
        out.append(replace(scan_cell(l, i, n, field=field, scan_cap=scan_cap),
                           elapsed_ms=0))
    return out


def load_checkpoint(path):
    """Records already completed in a previous run (missing file = none)."""
    records = {}
    if path and os.path.exists(path):
        with open(path) as fh:
            for line in fh:
                line = line.strip()
                if line:
                    rec = ScanRecord.from_json_dict(json.loads(line))
                    records[rec.key()] = rec
    return records


def scan_table(l_range, i_range, n_range, scan_cap=DEFAULT_SCAN_CAP, workers=1,
               checkpoint=None, cell_budget=None, log=None):
    """All cells of the (l, i, n) box, as ScanRecords sorted by (l, i, n).

    The checkpoint file gains one JSON line per finished cell (flushed and
    fsynced); a rerun with the same checkpoint never recomputes a finished
    cell.  Persisted rows carry elapsed_ms = 0 (wall times go to the log)
    so files are byte-identical across worker counts and across resumes.
    cell_budget is a rough per-cell wall-clock bound in seconds:
    cells predicted to exceed it (from the measured throughput of earlier
    cells) are recorded as timeouts instead of being run.
    """
    cells = [(l, i, n)
             for l in range(l_range[0], l_range[1] + 1)
             for i in range(i_range[0], i_range[1] + 1)
             for n in range(n_range[0], n_range[1] + 1)]
    done = load_checkpoint(checkpoint)
    todo = [c for c in cells if c not in done]

    by_n = {}
    for (l, i, n) in todo:
        by_n.setdefault(n, []).append((l, i))

    ck = None
    if checkpoint:
        ck = open(checkpoint, "a")

    def record_batch(batch):
        for rec in batch:
            done[rec.key()] = rec
            if ck:
                ck.write(json.dumps(rec.to_json_dict()) + "\n")
        if ck:
            ck.flush()
            os.fsync(ck.fileno())
        if log and batch:
            log(f"finished n={batch[0].n}: {len(batch)} cells")

    def record_timed_batch(batch, elapsed):
        record_batch(batch)
        if log and batch:
            log(f"  n={batch[0].n} wall time {elapsed * 1000:.0f} ms "
                f"({elapsed * 1000 / len(batch):.1f} ms/cell)")

    try:
        rate = None
        if workers <= 1:
            for n in sorted(by_n):
                t0 = time.perf_counter()
                batch = _scan_dimension((n, by_n[n], scan_cap, cell_budget, rate))
                elapsed = time.perf_counter() - t0
                computed = [r for r in batch if r.method != "timeout"]
                if computed and cell_budget is not None:
                    rate = elapsed / max(1, len(computed)) / (1 << n)
                record_timed_batch(batch, elapsed)
        else:
            jobs = [(n, by_n[n], scan_cap, cell_budget, None) for n in sorted(by_n)]
            with ProcessPoolExecutor(max_workers=workers) as pool:
                for batch in pool.map(_scan_dimension, jobs):
                    record_batch(batch)
    finally:
        if ck:
            ck.close()

    missing = [c for c in cells if c not in done]
    if missing:
        raise RuntimeError(f"scan incomplete: {missing[:5]} ...")
    return [done[c] for c in sorted(cells)]


def table_rows(records):
    """Table-style summary: (l, i) -> sorted list of APN dimensions."""
    rows = {}
    for rec in records:
        rows.setdefault((rec.l, rec.k), [])
        if rec.apn:
            rows[(rec.l, rec.k)].append(rec.n)
    return {key: sorted(v) for key, v in sorted(rows.items())}
