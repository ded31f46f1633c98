"""File outputs for a run: per round CSV, summary JSON, ledger JSON.

Float cells are written with repr so a parse round-trips to the identical
value; None becomes an empty cell. Summary JSON is sorted and stable so
identical runs produce identical bytes. Wall clock time deliberately stays
out of the files.
"""

from __future__ import annotations

import csv
import json
from pathlib import Path
from typing import Any

from .engine import RoundMetrics, SimulationReport

CSV_COLUMNS = (
    "round",
    "vehicle_count",
    "elected_maps",
    "flagged_count",
    "avg_handover",
    "max_handover",
    "min_handover",
    "avg_delay_s",
    "disconnected",
)


def _cell(value: Any) -> str:
    if value is None:
        return ""
    if isinstance(value, float):
        return repr(value)
    return str(value)


def write_rounds_csv(path: Any, rounds: list[RoundMetrics]) -> None:
    with open(path, "w", encoding="utf-8", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(CSV_COLUMNS)
        for m in rounds:
            writer.writerow(
                [
                    _cell(m.round_index),
                    _cell(m.vehicle_count),
                    _cell(m.elected_maps),
                    _cell(m.flagged_count),
                    _cell(m.avg_handover),
                    _cell(m.max_handover),
                    _cell(m.min_handover),
                    _cell(m.avg_delay_s),
                    _cell(m.disconnected),
                ]
            )


def read_rounds_csv(path: Any) -> list[dict[str, Any]]:
    """Parse a rounds file back into typed dicts."""
    out: list[dict[str, Any]] = []
    with open(path, "r", encoding="utf-8", newline="") as fh:
        for row in csv.DictReader(fh):
            out.append(
                {
                    "round": int(row["round"]),
                    "vehicle_count": int(row["vehicle_count"]),
                    "elected_maps": int(row["elected_maps"]),
                    "flagged_count": int(row["flagged_count"]),
                    "avg_handover": float(row["avg_handover"]),
                    "max_handover": int(row["max_handover"]),
                    "min_handover": int(row["min_handover"]),
                    "avg_delay_s": float(row["avg_delay_s"]) if row["avg_delay_s"] else None,
                    "disconnected": int(row["disconnected"]),
                }
            )
    return out


def write_summary_json(path: Any, summary: dict) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(summary, fh, sort_keys=True, indent=2)
        fh.write("\n")


def write_run(out_dir: Any, report: SimulationReport) -> Path:
    """Write rounds.csv, summary.json and ledger.json under out_dir."""
    out = Path(out_dir)
    out.mkdir(parents=True, exist_ok=True)
    write_rounds_csv(out / "rounds.csv", report.round_metrics)
    write_summary_json(out / "summary.json", report.summary)
    report.ledger.to_json(out / "ledger.json")
    return out
