"""JSON and CSV rendering shared by the CLI.

JSON is written with sorted keys and a fixed indent so that identical runs
give byte-identical files.  Every number in a report is already a string
("num/den" or "p^e") by the time it gets here.
"""

from __future__ import annotations

import csv
import io
import json
from typing import Iterable, List, Sequence

from .classifier import CONDITIONS, classify, critical_data, variant_key
from .map32 import MapParams, multiplier, singular_points
from .radius_dynamics import fixed_radii
from .verifier import CheckReport, siegel_report

CSV_COLUMNS = ("claim", "sample", "n", "radius_exp", "predicted_exp", "verdict")


def dumps(obj) -> str:
    return json.dumps(obj, indent=2, sort_keys=True, ensure_ascii=False) + "\n"


def classification(params: MapParams, seed=0) -> dict:
    """Everything ``classify`` prints, for a classifiable tuple."""
    data = critical_data(params)
    tag = classify(data)
    sing = singular_points(params)
    out = {
        "params": params.to_json(),
        "x0": str(params.x0),
        "singular_points": sing.to_json() if sing.in_qp else "not in Q_p",
        "norms": data.to_json(),
        "multiplier": multiplier(params).to_json(),
        "case_tag": tag.value,
        "variant": variant_key(tag, data),
        "condition": CONDITIONS[tag],
    }
    if tag.value != "Unclassified":
        out["fixed_radii"] = fixed_radii(tag, data).to_json()
        out["siegel"] = siegel_report(params, seed=seed)
    return out


def suite_document(params: MapParams, suite: str, seed, reports: Sequence[CheckReport]) -> dict:
    data = critical_data(params)
    tag = classify(data)
    gating_failures = [r.claim for r in reports if r.failed]
    return {
        "params": params.to_json(),
        "case_tag": variant_key(tag, data),
        "suite": suite,
        "seed": seed,
        "reports": [r.to_json() for r in reports],
        "summary": {
            "reports": len(reports),
            "statuses": {r.claim + "@" + str(r.radius): r.status for r in reports},
            "gating_failures": gating_failures,
            "passed": not gating_failures,
        },
    }


def csv_text(reports: Iterable[CheckReport]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(CSV_COLUMNS)
    for rep in reports:
        for row in rep.csv_rows():
            w.writerow(["" if v is None else v for v in row])
    return buf.getvalue()


def rows_csv(header: Sequence[str], rows: List[Sequence]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(header)
    for row in rows:
        w.writerow(["" if v is None else v for v in row])
    return buf.getvalue()
