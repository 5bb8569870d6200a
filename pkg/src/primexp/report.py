"""Machine-readable claim-check records and their JSON-lines/CSV stores.

A report is a flat list of rows; each row compares one predicted quantity
against one oracle value under a stated comparison rule.  Rows marked
``asserted`` are hard checks: any disagreement makes the whole run fail.
Everything else is reported as data.  Output is deterministic: rows are
sorted by (claim, instance) and serialized with sorted keys.
"""

from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass, field

CLAIM_IDS = (
    "L2.2", "L2.3", "L2.4", "L2.5", "C2.1", "L2.6",
    "L3.2", "T3.3", "L3.4", "T3.6", "C3.7", "C3.8",
)

Scalar = int | str | None
Value = Scalar | list


@dataclass(frozen=True)
class VerificationRow:
    """One claim-check record: predicted vs oracle plus an agree flag.

    The agree flag is always recomputable from predicted and oracle alone
    given the rule: "eq" (formulas), "le" (upper bounds: oracle <= predicted)
    or "member" (classification: oracle is not the string "none").
    """

    claim: str
    instance: str
    predicted: Value
    oracle: Value
    agree: bool
    asserted: bool
    rule: str = "eq"
    notes: str = ""
    params: dict = field(default_factory=dict)

    def to_json_obj(self) -> dict:
        obj = {
            "claim": self.claim,
            "instance": self.instance,
            "predicted": self.predicted,
            "oracle": self.oracle,
            "agree": self.agree,
            "asserted": self.asserted,
            "rule": self.rule,
            "notes": self.notes,
        }
        obj.update(self.params)
        return obj


def compare(rule: str, predicted: Value, oracle: Value) -> bool:
    if rule == "eq":
        return predicted == oracle
    if rule == "le":
        return isinstance(oracle, int) and isinstance(predicted, int) and oracle <= predicted
    if rule == "member":
        return oracle != "none"
    raise ValueError(f"unknown comparison rule {rule!r}")


def make_row(
    claim: str,
    instance: str,
    predicted: Value,
    oracle: Value,
    *,
    asserted: bool,
    rule: str = "eq",
    notes: str = "",
    **params,
) -> VerificationRow:
    if claim not in CLAIM_IDS:
        raise ValueError(f"unknown claim id {claim!r}")
    return VerificationRow(
        claim=claim,
        instance=instance,
        predicted=predicted,
        oracle=oracle,
        agree=compare(rule, predicted, oracle),
        asserted=asserted,
        rule=rule,
        notes=notes,
        params=dict(params),
    )


@dataclass
class Report:
    rows: list[VerificationRow] = field(default_factory=list)

    def add(self, row: VerificationRow) -> None:
        self.rows.append(row)

    def extend(self, rows) -> None:
        self.rows.extend(rows)

    def sorted_rows(self) -> list[VerificationRow]:
        return sorted(self.rows, key=lambda r: (r.claim, r.instance))

    @property
    def all_asserts_pass(self) -> bool:
        return all(r.agree for r in self.rows if r.asserted)

    def failures(self) -> list[VerificationRow]:
        return [r for r in self.sorted_rows() if r.asserted and not r.agree]

    def to_jsonl(self) -> str:
        lines = [
            json.dumps(row.to_json_obj(), sort_keys=True, separators=(",", ":"))
            for row in self.sorted_rows()
        ]
        return "\n".join(lines) + ("\n" if lines else "")

    def summary_counts(self) -> list[tuple[str, int, int, int]]:
        """(claim, agree, total, asserted_disagree) per claim id, sorted."""
        stats: dict[str, list[int]] = {}
        for row in self.rows:
            entry = stats.setdefault(row.claim, [0, 0, 0])
            entry[1] += 1
            if row.agree:
                entry[0] += 1
            if row.asserted and not row.agree:
                entry[2] += 1
        return [(claim, v[0], v[1], v[2]) for claim, v in sorted(stats.items())]

    def to_summary_csv(self) -> str:
        buffer = io.StringIO()
        writer = csv.writer(buffer, lineterminator="\n")
        writer.writerow(["claim", "agree", "total", "assert_failures"])
        for claim, agree, total, hard in self.summary_counts():
            writer.writerow([claim, agree, total, hard])
        return buffer.getvalue()

    def write(self, jsonl_path: str, csv_path: str | None = None) -> None:
        with open(jsonl_path, "w", encoding="utf-8", newline="") as fh:
            fh.write(self.to_jsonl())
        if csv_path is not None:
            with open(csv_path, "w", encoding="utf-8", newline="") as fh:
                fh.write(self.to_summary_csv())


@dataclass(frozen=True)
class CensusRow:
    """One isomorphism class of primitive digraphs in an exhaustive census."""

    order: int
    canonical_bits: str
    girth: int
    cycle_lengths: tuple[int, ...]
    exponent: int
    labeled_count: int

    def to_json_obj(self) -> dict:
        return {
            "kind": "census",
            "n": self.order,
            "canonical": self.canonical_bits,
            "girth": self.girth,
            "cycles": list(self.cycle_lengths),
            "exp": self.exponent,
            "count": self.labeled_count,
        }


def census_to_jsonl(rows: list[CensusRow]) -> str:
    ordered = sorted(rows, key=lambda r: (r.order, r.canonical_bits))
    lines = [
        json.dumps(row.to_json_obj(), sort_keys=True, separators=(",", ":"))
        for row in ordered
    ]
    return "\n".join(lines) + ("\n" if lines else "")


def census_to_csv(rows: list[CensusRow]) -> str:
    ordered = sorted(rows, key=lambda r: (r.order, r.canonical_bits))
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(["n", "canonical", "girth", "cycles", "exp", "count"])
    for row in ordered:
        writer.writerow([
            row.order,
            row.canonical_bits,
            row.girth,
            " ".join(str(x) for x in row.cycle_lengths),
            row.exponent,
            row.labeled_count,
        ])
    return buffer.getvalue()
