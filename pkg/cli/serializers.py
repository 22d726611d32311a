import csv
import io
import json
from dataclasses import dataclass, field

from .models import OutputFormat

TABLE_HEADER = ("d", "delta", "p", "q", "verdict", "case", "leg_delta_p", "leg_delta_q")
MISMATCH_HEADER = ("check", "d", "p", "q", "ell", "expected", "got")


@dataclass(frozen=True)
class Output:
    """Documento JSON y su vista tabular (cabecera + filas) para CSV y texto."""

    document: object
    header: tuple
    rows: list = field(default_factory=list)


def canonical_json(document):
    return json.dumps(document, sort_keys=True, separators=(",", ":"), ensure_ascii=False)


def _cell(value):
    if value is None:
        return ""
    if isinstance(value, (list, tuple)):
        return " ".join(str(item) for item in value)
    return str(value)


def to_csv(header, rows):
    buffer = io.StringIO()
    writer = csv.DictWriter(buffer, fieldnames=header, lineterminator="\r\n")
    writer.writeheader()
    for row in rows:
        writer.writerow({key: _cell(row.get(key)) for key in header})
    return buffer.getvalue()


def to_text(header, rows):
    cells = [list(header)] + [[_cell(row.get(key)) for key in header] for row in rows]
    widths = [max(len(line[i]) for line in cells) for i in range(len(header))]
    return "\n".join(
        "  ".join(cell.rjust(width) for cell, width in zip(line, widths)).rstrip()
        for line in cells
    )


def render(output, output_format):
    if output_format == OutputFormat.CSV:
        return to_csv(output.header, output.rows)
    if output_format == OutputFormat.TEXT:
        return to_text(output.header, output.rows)
    return canonical_json(output.document)


def _single(document):
    return Output(document, tuple(sorted(document)), [document])


def serialize_hilbert(place, symbol):
    return _single({"place": str(place), "symbol": int(symbol)})


def serialize_ramification(a, b, report):
    return _single(
        {
            "a": a,
            "b": b,
            "places": [str(v) for v in report.sorted_places],
            "reduced_discriminant": report.reduced_discriminant,
        }
    )


def serialize_verdict(verdict):
    return _single({"case": verdict.case, "verdict": str(verdict.result)})


def serialize_table(rows):
    return Output({"rows": rows}, TABLE_HEADER, rows)


def serialize_report(report):
    mismatches = [m.as_dict() for m in report.mismatches]
    return Output({"checked": report.checked, "mismatches": mismatches}, MISMATCH_HEADER, mismatches)
