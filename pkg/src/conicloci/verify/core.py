"""Per-chart certification, sweeps and the transcript cross-check."""

from __future__ import annotations

import re
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field

from ..charts import ALL_F, ALL_LAMBDA, as_fchart, as_lchart
from ..groebner import Ideal, ideal_member, ideal_sum
from ..loci import (G, PlaneType, VarietySpec, ideal_SY, locus_TG, locus_TY)
from ..poly import CHART_RING, parse
from .transcript import TranscriptEntry, lookup

CLEAN = "clean"
EMPTY_CLEAN = "empty-clean"
MISMATCH = "mismatch"
MODULO_RADICALITY = "holds-modulo-radicality"
VERDICTS = (CLEAN, EMPTY_CLEAN, MODULO_RADICALITY, MISMATCH)


@dataclass(frozen=True)
class ChartTask:
    spec: VarietySpec
    lchart: int
    fchart: str
    ptype: PlaneType

    def __post_init__(self):
        object.__setattr__(self, "lchart", as_lchart(self.lchart).column)
        object.__setattr__(self, "fchart", as_fchart(self.fchart).key)
        object.__setattr__(self, "ptype", PlaneType(self.ptype))

    def as_dict(self) -> dict:
        return {"variety": self.spec.name, "lambda": self.lchart,
                "fpivots": self.fchart, "type": self.ptype.value}

    def __str__(self):
        return f"{self.spec.name} Λ{self.lchart} F{{{self.fchart}}} {self.ptype}"


@dataclass
class ChartReport:
    task: ChartTask
    ideals: dict
    reduced_gbs: dict
    verdict: str
    paper_match: dict
    graph_form: dict
    ms: float = 0.0

    @property
    def ty_proper(self) -> bool:
        return self.reduced_gbs["ty"] != ["1"]

    def as_dict(self) -> dict:
        return {"task": self.task.as_dict(), "ideals": self.ideals,
                "reduced_gbs": self.reduced_gbs, "verdict": self.verdict,
                "paper_match": self.paper_match, "graph_form": self.graph_form,
                "ms": round(self.ms, 1)}


def read_published(text: str):
    """Parse a transcribed generator, where juxtaposition means product."""
    return parse(re.sub(r"(?<=[a-z0-9])(?=[a-z])", "*", text.replace(" ", "")), CHART_RING)


def _compare(name: str, published: list[str], computed: Ideal) -> dict | None:
    printed = Ideal([read_published(t) for t in published], CHART_RING)
    if printed == computed:
        return None
    return {
        "ideal": name,
        "published": published,
        "published_only": [t for t in published if not ideal_member(read_published(t), computed)],
        "recomputed_only": [str(g) for g in computed.groebner().elements
                            if not ideal_member(g, printed)],
    }


def _paper_match(entry: TranscriptEntry | None, computed: dict, verdict: str) -> dict:
    if entry is None:
        return {"status": "not-listed"}
    diffs = [d for name, gens in entry.ideals.items()
             if (d := _compare(name, gens, computed[name])) is not None]
    if not diffs:
        return {"status": "match", "source": entry.source, "published": entry.ideals}
    status = "typo-suspect" if verdict in (CLEAN, EMPTY_CLEAN) else "divergent"
    return {"status": status, "source": entry.source, "published": entry.ideals,
            "differences": diffs}


def verify_chart(task: ChartTask) -> ChartReport:
    t0 = time.perf_counter()
    spec = task.spec
    tg = locus_TG(task.fchart, task.ptype).ideal
    sy = ideal_SY(task.lchart, task.fchart, spec)
    locus = locus_TY(task.lchart, task.fchart, task.ptype, spec)
    ty = locus.ideal
    total = ideal_sum(tg, sy)
    computed = {"sy": sy, "tg": tg, "ty": ty, "sum": total}
    equal = ty == total
    unit = ty.is_unit()
    if not equal:
        verdict = MISMATCH
    elif unit:
        verdict = EMPTY_CLEAN
    elif locus.graph_form:
        verdict = CLEAN
    else:
        verdict = MODULO_RADICALITY
    shapes = [{"shape": s.shape, "empty": s.empty,
               "certified": None if s.certificate is None else s.certificate.ok,
               "note": "" if s.certificate is None else s.certificate.reason}
              for s in locus.shapes]
    entry = lookup(spec.name, task.lchart, task.fchart, task.ptype)
    report = ChartReport(
        task=task,
        ideals={k: v.texts() for k, v in computed.items()},
        reduced_gbs={k: v.groebner().texts() for k, v in computed.items()},
        verdict=verdict,
        paper_match=_paper_match(entry, computed, verdict),
        graph_form={"ok": locus.graph_form, "shapes": shapes},
    )
    report.ms = (time.perf_counter() - t0) * 1000
    return report


def all_tasks(spec: VarietySpec, lcharts=None, fcharts=None, ptypes=None) -> list[ChartTask]:
    lcharts = [as_lchart(x).column for x in lcharts] if lcharts is not None else [c.column for c in ALL_LAMBDA]
    fcharts = [as_fchart(x).key for x in fcharts] if fcharts is not None else [f.key for f in ALL_F]
    ptypes = list(ptypes) if ptypes is not None else list(PlaneType)
    return [ChartTask(spec, l, f, t) for l in lcharts for f in fcharts for t in ptypes]


def run_tasks(tasks: list[ChartTask], jobs: int = 1) -> list[ChartReport]:
    """Verify tasks in order; with ``jobs > 1`` they are spread over processes."""
    if jobs <= 1 or len(tasks) < 2:
        return [verify_chart(t) for t in tasks]
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(verify_chart, tasks, chunksize=max(1, len(tasks) // (4 * jobs))))


def sweep(spec: VarietySpec, jobs: int = 1) -> list[ChartReport]:
    """All 5 x 20 x 2 chart tasks for ``spec``."""
    return run_tasks(all_tasks(spec), jobs)


def summarize(reports: list[ChartReport]) -> dict:
    counts = {v: 0 for v in VERDICTS}
    for r in reports:
        counts[r.verdict] += 1
    nonempty = {str(t): [] for t in PlaneType}
    for r in reports:
        if r.ty_proper:
            nonempty[str(r.task.ptype)].append(f"{r.task.lchart}:{r.task.fchart}")
    return {"total": len(reports), "counts": counts, "pass": counts[MISMATCH] == 0,
            "nonempty_charts": nonempty,
            "discrepancies": len(cross_check(reports))}


@dataclass
class Discrepancy:
    task: str
    ideal: str
    published_only: list
    recomputed_only: list
    classification: str
    source: str = ""
    detail: str = ""

    def as_dict(self) -> dict:
        return asdict(self)


def cross_check(reports: list[ChartReport]) -> list[Discrepancy]:
    """Every transcript divergence, classified by whether the identity still holds."""
    out = []
    for r in reports:
        pm = r.paper_match
        for d in pm.get("differences", []):
            detail = ""
            if d["published"] == ["1"]:
                detail = "published as empty, recomputed ideal is proper"
            elif r.reduced_gbs[d["ideal"]] == ["1"]:
                detail = "published as proper, recomputed ideal is the unit ideal"
            out.append(Discrepancy(str(r.task), d["ideal"], d["published_only"],
                                   d["recomputed_only"], pm["status"], pm["source"], detail))
    return out
