"""
Rendering of reports and dimension records as json, csv or text.

Every renderer is a pure function of its input so that a fixed command line
always prints the same bytes.
"""
import csv
import io
import json
from typing import List

from app.data.models import DimensionRecord, OutputFormat, VerificationReport

CSV_COLUMNS = ("statement", "n", "name", "value", "verdict")


def _json(payload) -> str:
    return json.dumps(payload, separators=(",", ":"))


def _csv(rows: List[tuple]) -> str:
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(CSV_COLUMNS)
    writer.writerows(rows)
    return buffer.getvalue().rstrip("\n")


def render_record(record: DimensionRecord, output_format: OutputFormat) -> str:
    return render_records([record], output_format, single=True)


def render_records(records: List[DimensionRecord], output_format: OutputFormat, single: bool = False) -> str:
    if output_format == OutputFormat.JSON:
        payload = [record.model_dump(exclude_none=True) for record in records]
        return _json(payload[0] if single else payload)
    if output_format == OutputFormat.CSV:
        return _csv([("dims", r.degree, _record_name(r), r.dim, "") for r in records])
    return "\n".join(f"n={r.degree} {_record_name(r)}: {r.dim}" for r in records)


def _record_name(record: DimensionRecord) -> str:
    if record.k is None:
        return record.model
    return f"{record.model}[k={record.k}]"


def render_report(report: VerificationReport, output_format: OutputFormat) -> str:
    if output_format == OutputFormat.JSON:
        return _json(report.model_dump(mode="json"))
    verdict = report.verdict.value
    if output_format == OutputFormat.CSV:
        rows = [(report.statement, report.n, name, value, verdict) for name, value in report.values.items()]
        rows += [(report.statement, report.n, "witness", witness, verdict) for witness in report.witnesses]
        return _csv(rows)
    lines = [f"{report.statement} n={report.n}: {verdict}"]
    lines += [f"  {name} = {value}" for name, value in report.values.items()]
    lines += [f"  witness {witness}" for witness in report.witnesses]
    return "\n".join(lines)


def parse_records(text: str, output_format: OutputFormat) -> List[DimensionRecord]:
    """Reads back a table written by render_records; used to compare snapshots across formats."""
    if output_format == OutputFormat.JSON:
        return [DimensionRecord(**row) for row in json.loads(text)]
    if output_format == OutputFormat.CSV:
        records = []
        for row in csv.DictReader(io.StringIO(text)):
            model, _, k = row["name"].partition("[k=")
            records.append(
                DimensionRecord(degree=int(row["n"]), model=model, k=int(k.rstrip("]")) if k else None, dim=int(row["value"]))
            )
        return records
    raise ValueError(f"{output_format.value} tables cannot be read back")


def render_snapshot(records: List[DimensionRecord], output_format: OutputFormat) -> str:
    """One row per line so that a snapshot diff points at the changed dimension."""
    if output_format == OutputFormat.JSON:
        rows = [_json(record.model_dump(exclude_none=True)) for record in records]
        return "[\n" + ",\n".join(rows) + "\n]\n"
    if output_format == OutputFormat.CSV:
        return render_records(records, output_format) + "\n"
    raise ValueError("snapshots are written as json or csv")
