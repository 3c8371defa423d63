"""Randomized soundness sweeps over seeded graph ensembles.

A sweep generates graphs deterministically from a seed, runs the whole
catalog on each, and aggregates per-theorem applicability and holds
rates plus average slack for circumference bounds.  Any VIOLATED verdict
is a defect alarm: the report keeps the offending graph6 string and the
full verdict transcript.
"""

from __future__ import annotations

import random
import time
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Iterator, Sequence

from .formats import encode_graph6
from .graph import Graph, GraphError, from_edge_list
from .registry import Bound, Profile, TheoremSpec, Verdict, check


# -- ensemble generators --------------------------------------------------


def gnp(n: int, p: float, count: int, seed: int) -> Iterator[Graph]:
    """Erdos-Renyi G(n,p), deterministic for a fixed seed."""
    rng = random.Random(seed)
    for _ in range(count):
        edges = [
            (u, v)
            for u in range(n)
            for v in range(u + 1, n)
            if rng.random() < p
        ]
        yield from_edge_list(n, edges)


def random_regular(n: int, d: int, count: int, seed: int) -> Iterator[Graph]:
    """d-regular graphs by the pairing model with rejection, seeded."""
    if n * d % 2 or d >= n:
        raise GraphError("random regular needs n*d even and d < n")
    rng = random.Random(seed)
    produced = 0
    while produced < count:
        stubs = [v for v in range(n) for _ in range(d)]
        rng.shuffle(stubs)
        edges = set()
        ok = True
        for i in range(0, len(stubs), 2):
            u, v = stubs[i], stubs[i + 1]
            if u == v or (min(u, v), max(u, v)) in edges:
                ok = False
                break
            edges.add((min(u, v), max(u, v)))
        if ok:
            produced += 1
            yield from_edge_list(n, sorted(edges))


def random_bipartite(a: int, b: int, p: float, count: int, seed: int) -> Iterator[Graph]:
    """Bipartite G(a,b,p) on sides {0..a-1} and {a..a+b-1}, seeded."""
    rng = random.Random(seed)
    for _ in range(count):
        edges = [
            (u, a + w)
            for u in range(a)
            for w in range(b)
            if rng.random() < p
        ]
        yield from_edge_list(a + b, edges)


MODELS: dict[str, Callable[..., Iterator[Graph]]] = {
    "gnp": gnp,
    "regular": random_regular,
    "bipartite": random_bipartite,
}


# -- sweep report ---------------------------------------------------------


@dataclass
class SweepRecord:
    graph6: str
    theorem: str
    lam: int | None
    verdict: str
    witness: str | None
    timing: float

    def to_record(self) -> dict:
        rec = {
            "graph6": self.graph6,
            "theoremId": self.theorem,
            "verdict": self.verdict,
            "timing": round(self.timing, 6),
        }
        if self.lam is not None:
            rec["lambda"] = self.lam
        if self.witness is not None:
            rec["witness"] = self.witness
        return rec


@dataclass
class TheoremTally:
    graphs: int = 0
    holds: int = 0
    vacuous: int = 0
    inapplicable: int = 0
    ceiling: int = 0
    violated: int = 0
    slack_sum: Fraction = Fraction(0)
    slack_count: int = 0

    @property
    def applicable(self) -> int:
        return self.holds + self.violated

    @property
    def applicable_rate(self) -> float:
        return self.applicable / self.graphs if self.graphs else 0.0

    @property
    def holds_rate(self) -> float:
        return self.holds / self.applicable if self.applicable else 0.0

    @property
    def mean_slack(self) -> float | None:
        if not self.slack_count:
            return None
        return float(self.slack_sum / self.slack_count)


@dataclass
class SweepReport:
    records: list[SweepRecord] = field(default_factory=list)
    tallies: dict[str, TheoremTally] = field(default_factory=dict)
    violated: list[tuple[str, Verdict]] = field(default_factory=list)  # (graph6, verdict)

    @property
    def ok(self) -> bool:
        return not self.violated

    def table(self) -> str:
        """Human-readable per-theorem tally table."""
        lines = [f"{'theorem':8s} {'graphs':>6s} {'applic':>6s} {'holds':>6s} "
                 f"{'vacuous':>7s} {'inappl':>6s} {'ceiling':>7s} {'VIOL':>4s} {'slack':>8s}"]
        for tid, t in self.tallies.items():
            slack = f"{t.mean_slack:.3f}" if t.mean_slack is not None else "-"
            lines.append(
                f"{tid:8s} {t.graphs:6d} {t.applicable:6d} {t.holds:6d} "
                f"{t.vacuous:7d} {t.inapplicable:6d} {t.ceiling:7d} {t.violated:4d} {slack:>8s}"
            )
        return "\n".join(lines)


def _bound_slack(spec: TheoremSpec, pf: Profile, verdict: Verdict) -> Fraction | None:
    """Slack c - bound for circumference-bound entries that hold."""
    if verdict.kind != "holds" or not isinstance(spec.conclusion, Bound):
        return None
    if spec.lambdas is not None:
        return None  # per-lambda bounds have no single slack
    try:
        bound = spec.conclusion.expr(pf, None)
    except ZeroDivisionError:
        return None
    return Fraction(pf.c) - bound


def sweep(
    graphs: Iterator[Graph] | Sequence[Graph],
    specs: Sequence[TheoremSpec] | None = None,
    assume: Sequence[str] = (),
    include_quarantined: bool = False,
    keep_records: bool = True,
) -> SweepReport:
    """Run the catalog over an ensemble and aggregate verdicts."""
    if specs is None:
        from .catalog import catalog

        specs = catalog()
    specs = [s for s in specs if include_quarantined or not s.quarantined]
    report = SweepReport(tallies={s.id: TheoremTally() for s in specs})
    for g in graphs:
        g6 = encode_graph6(g)
        pf = Profile(g)
        for spec in specs:
            t0 = time.perf_counter()
            v = check(pf, spec, assume)
            dt = time.perf_counter() - t0
            tally = report.tallies[spec.id]
            tally.graphs += 1
            if v.kind == "holds":
                tally.holds += 1
            elif v.kind == "vacuous":
                tally.vacuous += 1
            elif v.kind == "inapplicable":
                tally.inapplicable += 1
            elif v.kind == "ceiling":
                tally.ceiling += 1
            else:
                tally.violated += 1
                report.violated.append((g6, v))
            slack = _bound_slack(spec, pf, v)
            if slack is not None:
                tally.slack_sum += slack
                tally.slack_count += 1
            if keep_records:
                report.records.append(SweepRecord(
                    g6, spec.id, v.lam, v.kind,
                    str(v.witness) if v.witness is not None else None, dt,
                ))
    return report
