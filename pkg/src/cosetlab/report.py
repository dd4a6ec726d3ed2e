"""Machine-readable report serialization.

JSON reports carry a top-level {"schema": 1}; field order is fixed by
construction order, so identical inputs give identical bytes.  CSV output
follows RFC 4180 (CRLF line endings, minimal quoting).
"""

from __future__ import annotations

import csv
import io
import json
import sys

SCHEMA_VERSION = 1


def json_text(payload: dict) -> str:
    doc = {"schema": SCHEMA_VERSION}
    doc.update(payload)
    return json.dumps(doc, indent=2, ensure_ascii=True) + "\n"


def csv_text(rows: list[dict]) -> str:
    if not rows:
        return ""
    fields = list(rows[0].keys())
    for row in rows[1:]:
        for key in row:
            if key not in fields:
                fields.append(key)
    buf = io.StringIO()
    writer = csv.DictWriter(buf, fieldnames=fields, lineterminator="\r\n")
    writer.writeheader()
    for row in rows:
        writer.writerow({k: row.get(k, "") for k in fields})
    return buf.getvalue()


def emit(text: str, out: str | None) -> None:
    """Write to the named file, or stdout when out is None."""
    if out is None:
        sys.stdout.write(text)
    else:
        with open(out, "w", newline="") as fh:
            fh.write(text)
