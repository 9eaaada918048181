"""Scan result rows and their CSV/JSON serializations.

Exponents are stored as decimal strings of the canonical residue, since the
raw e(l,k) can run to thousands of digits.  CSV and JSON carry the same
information; round-tripping through either reproduces the records exactly.
"""

import csv
import json
from dataclasses import dataclass

CSV_HEADER = ["l", "k", "n", "exponent", "weight", "zero_apn", "apn",
              "uniformity", "families", "method", "elapsed_ms"]


@dataclass(frozen=True)
class ScanRecord:
    l: int
    k: int
    n: int
    exponent: str  # decimal canonical residue
    weight: int
    zero_apn: bool | None
    apn: bool | None
    uniformity: int | None
    families: tuple
    method: str
    elapsed_ms: int

    def key(self):
        return (self.l, self.k, self.n)

    def to_csv_row(self):
        return [
            str(self.l), str(self.k), str(self.n), self.exponent, str(self.weight),
            _bool_out(self.zero_apn), _bool_out(self.apn),
            "" if self.uniformity is None else str(self.uniformity),
            ";".join(self.families), self.method, str(self.elapsed_ms),
        ]

    @classmethod
    def from_csv_row(cls, row):
        return cls(
            int(row[0]), int(row[1]), int(row[2]), row[3], int(row[4]),
            _bool_in(row[5]), _bool_in(row[6]),
            int(row[7]) if row[7] else None,
            tuple(t for t in row[8].split(";") if t),
            row[9], int(row[10]),
        )

    def to_json_dict(self):
        return {
            "l": self.l, "k": self.k, "n": self.n, "exponent": self.exponent,
            "weight": self.weight, "zero_apn": self.zero_apn, "apn": self.apn,
            "uniformity": self.uniformity, "families": list(self.families),
            "method": self.method, "elapsed_ms": self.elapsed_ms,
        }

    @classmethod
    def from_json_dict(cls, obj):
        return cls(
            obj["l"], obj["k"], obj["n"], obj["exponent"], obj["weight"],
            obj["zero_apn"], obj["apn"], obj["uniformity"],
            tuple(obj["families"]), obj["method"], obj["elapsed_ms"],
        )


def _bool_out(v):
    return "" if v is None else ("true" if v else "false")


def _bool_in(s):
    return None if s == "" else s == "true"


def write_csv(records, path):
    with open(path, "w", newline="") as fh:
        w = csv.writer(fh)
        w.writerow(CSV_HEADER)
        for r in records:
            w.writerow(r.to_csv_row())


def read_csv(path):
    with open(path, newline="") as fh:
        rows = list(csv.reader(fh))
    if not rows or rows[0] != CSV_HEADER:
        raise ValueError(f"{path}: missing or unexpected header")
    return [ScanRecord.from_csv_row(r) for r in rows[1:]]


def write_json(records, path):
    with open(path, "w") as fh:
        json.dump([r.to_json_dict() for r in records], fh, indent=1)
        fh.write("\n")


def read_json(path):
    with open(path) as fh:
        return [ScanRecord.from_json_dict(o) for o in json.load(fh)]
