"""Verification report records and their json, csv and text renderings."""

from __future__ import annotations

import csv
import io
from typing import Literal

import msgspec
from rich import box
from rich.console import Console
from rich.table import Table

type ReportFormat = Literal["json", "csv", "text"]

CSV_HEADER = ("pi", "sigma", "formula_value", "oracle_value", "case_label")


class Mismatch(msgspec.Struct, frozen=True):
    pi: str
    sigma: str | None
    formula_value: int | None
    oracle_value: int | None
    case_label: str | None


class PropertyTally(msgspec.Struct, frozen=True):
    checked: int
    failed: int


class VerificationReport(msgspec.Struct, frozen=True, omit_defaults=True):
    campaign: str
    parameters: dict[str, int]
    total_checked: int
    passed: int
    failed: int
    mismatches: list[Mismatch]
    runtime_ms: int
    properties: dict[str, PropertyTally] = msgspec.field(default_factory=dict)
    counters: dict[str, int] = msgspec.field(default_factory=dict)

    def __post_init__(self) -> None:
        if self.total_checked != self.passed + self.failed:
            raise ValueError(
                f"total_checked {self.total_checked} != passed {self.passed} "
                f"+ failed {self.failed}"
            )
        if len(self.mismatches) != self.failed:
            raise ValueError(
                f"{len(self.mismatches)} mismatches recorded for {self.failed} failures"
            )

    @property
    def ok(self) -> bool:
        return self.failed == 0


_ENCODER = msgspec.json.Encoder()
_DECODER = msgspec.json.Decoder(VerificationReport)


def encode_report(report: VerificationReport) -> bytes:
    return msgspec.json.format(_ENCODER.encode(report), indent=2)


def decode_report(data: str | bytes) -> VerificationReport:
    return _DECODER.decode(data)


def report_to_csv(report: VerificationReport) -> str:
    buffer = io.StringIO()
    buffer.write(
        f"# campaign={report.campaign} total={report.total_checked} "
        f"passed={report.passed} failed={report.failed}\n"
    )
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(CSV_HEADER)
    for row in report.mismatches:
        writer.writerow(
            [
                row.pi,
                "" if row.sigma is None else row.sigma,
                "" if row.formula_value is None else row.formula_value,
                "" if row.oracle_value is None else row.oracle_value,
                "" if row.case_label is None else row.case_label,
            ]
        )
    return buffer.getvalue()


def _cell(value: object) -> str:
    return "-" if value is None else str(value)


def report_to_text(report: VerificationReport, *, width: int = 100) -> str:
    console = Console(
        file=io.StringIO(), width=width, color_system=None, highlight=False
    )
    params = " ".join(f"{key}={value}" for key, value in report.parameters.items())
    status = "ok" if report.ok else "FAILED"
    console.print(f"campaign {report.campaign} ({params}): {status}")
    console.print(
        f"checked {report.total_checked}, passed {report.passed}, "
        f"failed {report.failed} in {report.runtime_ms} ms"
    )

    if report.properties:
        table = Table(show_header=True, header_style="bold", box=box.SIMPLE)
        table.add_column("property")
        table.add_column("checked", justify="right")
        table.add_column("failed", justify="right")
        for name, tally in report.properties.items():
            table.add_row(name, str(tally.checked), str(tally.failed))
        console.print(table)

    for name, count in report.counters.items():
        console.print(f"{name}: {count}")

    if report.mismatches:
        table = Table(show_header=True, header_style="bold", box=box.SIMPLE)
        for column in CSV_HEADER:
            table.add_column(column)
        for row in report.mismatches:
            table.add_row(
                row.pi,
                _cell(row.sigma),
                _cell(row.formula_value),
                _cell(row.oracle_value),
                _cell(row.case_label),
            )
        console.print(table)

    output = console.file
    assert isinstance(output, io.StringIO)
    return output.getvalue()


def render_report(report: VerificationReport, fmt: ReportFormat) -> str:
    if fmt == "json":
        return encode_report(report).decode("utf-8") + "\n"
    if fmt == "csv":
        return report_to_csv(report)
    return report_to_text(report)
