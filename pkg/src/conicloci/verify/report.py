"""JSON and markdown renderings of chart reports."""

from __future__ import annotations

import hashlib
import json

from ..loci import VarietySpec
from .core import ChartReport, cross_check, summarize


def document(spec: VarietySpec, reports: list[ChartReport]) -> dict:
    return {
        "variety": {"name": spec.name, "hyperplanes": [str(h) for h in spec.hyperplanes]},
        "reports": [r.as_dict() for r in reports],
        "discrepancies": [d.as_dict() for d in cross_check(reports)],
        "summary": summarize(reports),
    }


def to_json(doc: dict) -> str:
    return json.dumps(doc, indent=2, ensure_ascii=False) + "\n"


def digest(doc: dict) -> str:
    """SHA-256 of the document with timing fields removed."""
    stripped = dict(doc, reports=[{k: v for k, v in r.items() if k != "ms"} for r in doc["reports"]])
    return hashlib.sha256(json.dumps(stripped, sort_keys=True).encode()).hexdigest()


def _ideal_cell(gens: list[str]) -> str:
    text = ", ".join(gens)
    return f"⟨{text}⟩".replace("|", "\\|")


def to_markdown(doc: dict) -> str:
    v = doc["variety"]
    lines = [f"# {v['name']}", ""]
    if v["hyperplanes"]:
        lines += ["Hyperplanes: " + ", ".join(f"`{h}`" for h in v["hyperplanes"]), ""]
    lines += ["| Λ | F | type | verdict | graph form | published | I_T(Y) | ms |",
              "|---|---|------|---------|------------|-----------|--------|----|"]
    for r in doc["reports"]:
        t = r["task"]
        lines.append(
            f"| {t['lambda']} | {t['fpivots']} | {t['type']} | {r['verdict']} | "
            f"{'yes' if r['graph_form']['ok'] else 'no'} | {r['paper_match']['status']} | "
            f"{_ideal_cell(r['reduced_gbs']['ty'])} | {r['ms']:.0f} |")
    s = doc["summary"]
    lines += ["", "## Summary", ""]
    lines += [f"- {k}: {n}" for k, n in s["counts"].items()]
    lines.append(f"- total: {s['total']}, pass: {'yes' if s['pass'] else 'no'}")
    for ptype, charts in s["nonempty_charts"].items():
        lines.append(f"- nonempty {ptype} charts: {', '.join(charts) or 'none'}")
    if doc["discrepancies"]:
        lines += ["", "## Divergences from the published ideals", ""]
        for d in doc["discrepancies"]:
            note = f" ({d['detail']})" if d["detail"] else ""
            lines.append(f"- {d['task']}, {d['ideal']}: {d['classification']}{note}; "
                         f"published only: {d['published_only']}; recomputed only: {d['recomputed_only']}")
    return "\n".join(lines) + "\n"


def props_markdown(suites) -> str:
    lines = ["| suite | passed | total |", "|-------|--------|-------|"]
    lines += [f"| {s.name} | {s.passed} | {s.total} |" for s in suites]
    return "\n".join(lines) + "\n"
