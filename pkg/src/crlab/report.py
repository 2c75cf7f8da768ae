"""Verification reports: exact witnesses, lossless serialization, three formats.

Every CLI command produces a :class:`Report`: a command echo, the measure
normalization note, and a list of records.  Each record names the claim it
checks, carries a pass/fail status and exact witness values.  Witnesses
serialize losslessly: rationals as strings like ``"-8/3"``, complex values
as ``{"re": "0", "im": "8/3"}``, polynomials in the parser grammar.  The
text, json and csv renderings contain the same records; ``schema`` is
versioned so golden outputs stay comparable.
"""

from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass, field
from fractions import Fraction

from .integration import CONTACT_MASS_NOTE
from .scalars import GaussianRational
from .spherepoly import SpherePoly

SCHEMA_VERSION = 1

APPROX_NOTE = "decimal renderings are approximate and non-authoritative"


def encode_witness(value):
    """Lossless JSON-friendly encoding of exact values."""
    if isinstance(value, GaussianRational):
        if value.is_real():
            return str(value.re)
        return {"re": str(value.re), "im": str(value.im)}
    if isinstance(value, Fraction):
        return str(value)
    if isinstance(value, SpherePoly):
        return value.to_source()
    if isinstance(value, bool) or value is None:
        return value
    if isinstance(value, int):
        return str(value)
    if isinstance(value, str):
        return value
    if isinstance(value, (list, tuple)):
        return [encode_witness(v) for v in value]
    if isinstance(value, dict):
        return {str(k): encode_witness(v) for k, v in value.items()}
    raise TypeError(f"cannot encode witness value {value!r}")


def decode_rational(text: str) -> Fraction:
    """Inverse of the rational witness encoding."""
    return Fraction(text)


def decode_complex(value) -> GaussianRational:
    if isinstance(value, str):
        return GaussianRational(Fraction(value))
    return GaussianRational(Fraction(value["re"]), Fraction(value["im"]))


def _approximate(encoded):
    if isinstance(encoded, str):
        try:
            return float(Fraction(encoded))
        except ValueError:
            return encoded
    if isinstance(encoded, dict):
        if set(encoded) == {"re", "im"}:
            return {"re": float(Fraction(encoded["re"])), "im": float(Fraction(encoded["im"]))}
        return {k: _approximate(v) for k, v in encoded.items()}
    if isinstance(encoded, list):
        return [_approximate(v) for v in encoded]
    return encoded


@dataclass(frozen=True)
class Record:
    id: str
    claim: str
    passed: bool
    witness: dict

    def as_dict(self, approx: bool = False) -> dict:
        out = {
            "id": self.id,
            "claim": self.claim,
            "status": "pass" if self.passed else "fail",
            "witness": encode_witness(self.witness),
        }
        if approx:
            out["witness_approx"] = _approximate(out["witness"])
        return out


@dataclass
class Report:
    command: str
    records: list[Record] = field(default_factory=list)
    normalization: str = CONTACT_MASS_NOTE
    elapsed_ms: int = 0

    def add(self, id: str, claim: str, passed: bool, **witness):
        self.records.append(Record(id, claim, passed, witness))

    def sort(self):
        self.records.sort(key=lambda r: r.id)

    @property
    def all_pass(self) -> bool:
        return all(r.passed for r in self.records)

    def failures(self) -> list[str]:
        return [r.id for r in self.records if not r.passed]

    def as_dict(self, approx: bool = False) -> dict:
        out = {
            "schema": SCHEMA_VERSION,
            "command": self.command,
            "normalization": self.normalization,
            "all_pass": self.all_pass,
            "elapsed_ms": self.elapsed_ms,
            "records": [r.as_dict(approx) for r in self.records],
        }
        if approx:
            out["approx_note"] = APPROX_NOTE
        return out

    # -- renderings ------------------------------------------------------

    def to_json(self, approx: bool = False) -> str:
        return json.dumps(self.as_dict(approx), indent=2, sort_keys=False)

    def to_csv(self, approx: bool = False) -> str:
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        header = ["id", "claim", "status", "witness"]
        if approx:
            header.append("witness_approx")
        writer.writerow(header)
        for record in self.records:
            data = record.as_dict(approx)
            row = [data["id"], data["claim"], data["status"],
                   json.dumps(data["witness"], sort_keys=True)]
            if approx:
                row.append(json.dumps(data["witness_approx"], sort_keys=True))
            writer.writerow(row)
        return buf.getvalue()

    def to_text(self, approx: bool = False) -> str:
        lines = [
            f"crlab report (schema {SCHEMA_VERSION})",
            f"command: {self.command}",
            f"normalization: {self.normalization}",
            "",
        ]
        for record in self.records:
            status = "PASS" if record.passed else "FAIL"
            encoded = encode_witness(record.witness)
            witness = ", ".join(f"{k}={json.dumps(v, sort_keys=True)}" for k, v in encoded.items())
            lines.append(f"[{status}] {record.id}: {record.claim}")
            if witness:
                lines.append(f"       {witness}")
            if approx:
                approximate = _approximate(encoded)
                values = ", ".join(f"{k}~{json.dumps(v, sort_keys=True)}"
                                   for k, v in approximate.items())
                lines.append(f"       approx ({APPROX_NOTE}): {values}")
        lines.append("")
        passed = sum(1 for r in self.records if r.passed)
        lines.append(f"{passed}/{len(self.records)} checks passed "
                     f"({self.elapsed_ms} ms)")
        return "\n".join(lines) + "\n"

    def render(self, fmt: str, approx: bool = False) -> str:
        if fmt == "json":
            return self.to_json(approx)
        if fmt == "csv":
            return self.to_csv(approx)
        if fmt == "text":
            return self.to_text(approx)
        raise ValueError(f"unknown format {fmt!r}")
