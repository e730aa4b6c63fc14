"""Report dictionaries and their table / JSON / CSV renderings."""

from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass
from typing import Iterable, Optional

from .bipartite import BipartiteFinding
from .core import DEFAULT_MAX_HORIZON, Analysis, ParitySequence, SubtractionSet
from .expansion import ExpansionReport
from .verify import Verdict

FORMATS = ("table", "json", "csv")


@dataclass(frozen=True)
class RunConfig:
    initial_horizon: int = 4096
    max_horizon: int = DEFAULT_MAX_HORIZON
    expansion_bound: Optional[int] = None
    format: str = "table"
    out: Optional[str] = None

    def __post_init__(self):
        if self.initial_horizon > self.max_horizon:
            raise ValueError("initial horizon exceeds max horizon")
        if self.format not in FORMATS:
            raise ValueError(f"format must be one of {FORMATS}")


def digits(values: Iterable[int]) -> str:
    """Unseparated digits when every value is a single digit, else comma-separated."""
    values = [int(v) for v in values]
    if all(0 <= v <= 9 for v in values):
        return "".join(map(str, values))
    return ",".join(map(str, values))


def game_report(
    game: SubtractionSet,
    analysis: Optional[Analysis] = None,
    parity: Optional[ParitySequence] = None,
    expansion: Optional[ExpansionReport] = None,
    expansion_bound: Optional[int] = None,
    finding: Optional[BipartiteFinding] = None,
    verdicts: Iterable[Verdict] = (),
) -> dict:
    d: dict = {
        "set": list(game.moves),
        "gcd": game.gcd,
        "period": None,
        "preperiod": None,
        "tail": None,
        "sequence_window": None,
        "parity": None,
        "expansion": None,
        "lemma_checks": {},
        "verdicts": [v.to_dict() for v in verdicts],
    }
    if analysis is not None:
        n0, p = analysis.preperiod, analysis.period
        d["period"], d["preperiod"] = p, n0
        d["tail"] = analysis.tail().tolist()
        d["sequence_window"] = analysis.extended(n0 + p).tolist()
    if parity is not None:
        d["parity"] = {"period": parity.period, "preperiod": parity.preperiod}
    if expansion is not None:
        bound = expansion_bound if expansion_bound is not None else expansion.window_end
        d["expansion"] = {
            "members": expansion.members_upto(bound),
            "bound": bound,
            "classification": expansion.classification,
            "rendered": expansion.rendered,
            "star_inclusion": expansion.star_inclusion,
        }
    if finding is not None:
        d["bipartite"] = {"predicate": finding.predicate, "observed": finding.observed}
        d["lemma_checks"] = dict(finding.checks)
    return d


def to_json(report: dict) -> str:
    return json.dumps(report, indent=2, ensure_ascii=False) + "\n"


_SET_COLUMNS = ("set", "game", "moves")


def _cell(v, key: str = "") -> str:
    if v is None:
        return ""
    if key in _SET_COLUMNS:
        return ",".join(map(str, v))
    if isinstance(v, (list, tuple)):
        return digits(v) if all(isinstance(x, int) for x in v) else json.dumps(v)
    if isinstance(v, dict):
        return json.dumps(v, sort_keys=True)
    return str(v)


def _csv(rows: list[dict]) -> str:
    if not rows:
        return ""
    buf = io.StringIO()
    fields = list(rows[0])
    for r in rows[1:]:
        fields += [k for k in r if k not in fields]
    w = csv.DictWriter(buf, fieldnames=fields, lineterminator="\n")
    w.writeheader()
    for r in rows:
        w.writerow({k: _cell(r.get(k), k) for k in fields})
    return buf.getvalue()


_VERDICT_COLUMNS = (
    "family", "params", "moves", "predicted_period", "period", "preperiod", "period_match",
    "period_divides", "sequence_match", "aligned_start", "first_divergence",
    "predicted_preperiod", "preperiod_match", "expansion_match", "expansion_readings",
    "all_match", "error", "notes",
)


def _verdict_row(v: dict) -> dict:
    row = {k: v.get(k) for k in _VERDICT_COLUMNS}
    row["params"] = " ".join(f"{k}={x}" for k, x in v["params"].items())
    row["notes"] = "; ".join(v.get("notes") or [])
    return row


def to_csv(report: dict) -> str:
    if "conjecture" in report:
        rows = []
        if report["conjecture"] == "KEVEN":
            for r in report["details"]["rows"]:
                rows.append({"conjecture": "KEVEN", "status": r["relation"], **r})
        for c in report["counterexamples"]:
            if report["conjecture"] != "KEVEN":
                rows.append({"conjecture": report["conjecture"], "game": c["game"],
                             "status": "counterexample", "evidence": c["evidence"]})
        for s in report["skipped"]:
            rows.append({"conjecture": report["conjecture"], "game": s["game"],
                         "status": "skipped", "reason": s["reason"]})
        return _csv(rows)
    if "set" not in report:
        return _csv([_verdict_row(v) for v in report["verdicts"]])
    row = {
        "set": report["set"],
        "gcd": report["gcd"],
        "period": report["period"],
        "preperiod": report["preperiod"],
        "tail": report["tail"],
        "sequence_window": report["sequence_window"],
        "parity_period": (report["parity"] or {}).get("period"),
    }
    if report["expansion"]:
        row["expansion"] = report["expansion"]["rendered"]
        row["classification"] = report["expansion"]["classification"]
    for k, v in report["lemma_checks"].items():
        row[k] = v
    if report["verdicts"]:
        return _csv([{**row, **_verdict_row(v)} for v in report["verdicts"]])
    return _csv([row])


def to_table(report: dict) -> str:
    lines = []
    if "conjecture" in report:
        lines.append(f"scan {report['conjecture']}  bounds {json.dumps(report['bounds'])}")
        lines.append(
            f"examined {report['examined']}  skipped {len(report['skipped'])}  "
            f"counterexamples {len(report['counterexamples'])}  wall {report['wall_time']:.2f}s"
        )
        for r in report.get("details", {}).get("rows", []):
            lines.append(
                f"  S{tuple(r['game'])}  claimed {r['claimed_period']}  computed {r['period']}"
                f"  n0 {r['preperiod']}  {r['relation']}"
            )
        if report["conjecture"] == "C1":
            det = report["details"]
            lines.append(
                f"  ultimately bipartite: {len(det['ultimately_bipartite'])}"
                f"  purely bipartite: {len(det['purely_bipartite'])}"
                f"  (purely bipartite expandable: {len(det['purely_bipartite_counterexamples'])})"
            )
        for c in report["counterexamples"]:
            lines.append(f"  COUNTEREXAMPLE S{tuple(c['game'])}: {json.dumps(c['evidence'])}")
        for s in report["skipped"]:
            lines.append(f"  skipped S{tuple(s['game'])}: {s['reason']}")
        return "\n".join(lines) + "\n"

    if "set" in report:
        lines.append(f"set        {{{','.join(map(str, report['set']))}}}   gcd {report['gcd']}")
        if report["period"] is not None:
            lines.append(f"period     {report['period']}")
            lines.append(f"pre-period {report['preperiod']}")
            lines.append(f"tail       {digits(report['tail'])}")
            lines.append(f"first n0+p {digits(report['sequence_window'])}")
        if report["parity"]:
            lines.append(f"V period   {report['parity']['period']}  (pre-period {report['parity']['preperiod']})")
        if report["expansion"]:
            e = report["expansion"]
            lines.append(f"expansion  {e['rendered']}")
            lines.append(f"class      {e['classification']}")
            lines.append(f"members    {','.join(map(str, e['members']))}  (<= {e['bound']})")
        if "bipartite" in report:
            b = report["bipartite"]
            lines.append(f"bipartite  predicate={b['predicate']}  observed={b['observed']}")
        for k, v in report["lemma_checks"].items():
            lines.append(f"  {k:<28} {'n/a' if v is None else v}")
    for v in report["verdicts"]:
        lines.append(_verdict_line(v))
    if "summary" in report:
        s = report["summary"]
        lines.append(f"{s['total']} verdicts, {s['all_match']} all-match, {s['mismatch']} mismatch, {s['errors']} errors")
    return "\n".join(lines) + "\n"


def _verdict_line(v: dict) -> str:
    params = " ".join(f"{k}={x}" for k, x in v["params"].items())
    status = "ALL-MATCH" if v["all_match"] else ("ERROR" if v["error"] else "MISMATCH")
    parts = [f"{v['family']} {params} S{tuple(v['moves'])}: {status}"]
    if v["error"]:
        parts.append(v["error"])
    else:
        parts.append(f"period {v['period']} (stated {v['predicted_period']}, match={v['period_match']})")
        parts.append(f"sequence match={v['sequence_match']}")
        if v["preperiod_match"] is not None:
            parts.append(f"pre-period {v['preperiod']} (stated {v['predicted_preperiod']})")
        if v["expansion_readings"]:
            readings = ", ".join(f"{k}={x}" for k, x in v["expansion_readings"].items())
            parts.append(f"expansion [{readings}]")
    line = "  ".join(parts)
    for note in v["notes"]:
        line += f"\n    note: {note}"
    return line


def render_report(report: dict, fmt: str) -> str:
    if fmt == "json":
        return to_json(report)
    if fmt == "csv":
        return to_csv(report)
    return to_table(report)
