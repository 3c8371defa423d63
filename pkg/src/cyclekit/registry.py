"""Theorem verification engine: premises, conclusions, verdicts.

A TheoremSpec is a declarative record (premises, conclusion, parameter
domain, sharpness cases).  ``check`` evaluates one theorem on one graph
and returns a Verdict; a VIOLATED verdict is reachable only through
solver bugs, so the sweep treats it as a defect alarm.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from typing import Callable, Iterable, Sequence

from .cycles import (
    CeilingError,
    CycleCert,
    _longest_cycle,
    every_longest_cycle_satisfies,
    exists_cycle_satisfying,
    residual_params,
)
from .exact import Exact, INF, fmt_exact
from .graph import Graph, are_isomorphic, petersen
from .invariants import (
    cut_scan,
    delta_t,
    independence_number,
    binding_number,
    sigma_t,
)
from .structure import (
    bipartition,
    claw,
    contains_induced,
    is_balanced_bipartite,
    is_chordal,
    is_planar,
    is_regular,
    is_split,
)

SUPPORTED_CLASSES = {
    "bipartite",
    "balanced_bipartite",
    "regular",
    "chordal",
    "split",
    "planar",
    "connected",
}
ASSERTABLE_CLASSES = {
    "interval",
    "cocomparability",
    "spider",
    "comparability",
    "projective_planar",
    "square_of_2connected",
}


class Profile:
    """Lazily computed invariant bundle for one graph.

    Shared by every theorem checked against the same graph, so the
    expensive exhaustive scans run at most once.
    """

    def __init__(self, g: Graph):
        self.g = g

    @cached_property
    def n(self) -> int:
        return self.g.n

    @cached_property
    def q(self) -> int:
        return self.g.q

    @cached_property
    def delta(self) -> int:
        return min(self.g.degrees(), default=0)

    @cached_property
    def Delta(self) -> int:
        return max(self.g.degrees(), default=0)

    @cached_property
    def _cuts(self) -> tuple[int, Exact, int]:
        return cut_scan(self.g)

    @property
    def kappa(self) -> int:
        return self._cuts[0]

    @property
    def tau(self) -> Exact:
        return self._cuts[1]

    @cached_property
    def alpha(self) -> int:
        return independence_number(self.g)[0]

    @cached_property
    def binding(self) -> Exact:
        return binding_number(self.g)[0]

    @cached_property
    def sigma2(self) -> Exact:
        return sigma_t(self.g, 2)

    @cached_property
    def sigma3(self) -> Exact:
        return sigma_t(self.g, 3)

    @cached_property
    def delta2(self) -> Exact:
        return delta_t(self.g, 2)

    @cached_property
    def _circ(self) -> tuple[int, list[int]]:
        return _longest_cycle(self.g)

    @property
    def c(self) -> int:
        return self._circ[0]

    @property
    def longest_cycle(self) -> CycleCert:
        return CycleCert(tuple(self._circ[1]))

    @property
    def is_hamiltonian(self) -> bool:
        return self.c == self.n

    @cached_property
    def bipartite(self) -> bool:
        return bipartition(self.g) is not None

    @cached_property
    def balanced_bipartite(self) -> bool:
        return self.bipartite and is_balanced_bipartite(self.g)

    @cached_property
    def regular(self) -> bool:
        return is_regular(self.g)

    @cached_property
    def chordal(self) -> bool:
        return is_chordal(self.g)

    @cached_property
    def split(self) -> bool:
        return is_split(self.g)

    @cached_property
    def planar(self) -> bool | None:
        return is_planar(self.g)

    @cached_property
    def connected(self) -> bool:
        return self.g.is_connected()

    @cached_property
    def claw_free(self) -> bool:
        return contains_induced(self.g, claw()) is None

    @cached_property
    def is_petersen(self) -> bool:
        g = self.g
        return (
            g.n == 10
            and g.q == 15
            and set(g.degrees()) == {3}
            and are_isomorphic(g, petersen())
        )

    def class_flag(self, name: str) -> bool | None:
        return getattr(self, name)


# -- premises -------------------------------------------------------------


@dataclass(frozen=True)
class Premise:
    label: str
    kind: str  # "numeric" | "free" | "class"
    fn: Callable[[Profile, int | None], bool] | None = None
    patterns: tuple[Graph, ...] = ()
    cls: str = ""

    def evaluate(self, pf: Profile, lam: int | None, assume: frozenset[str]) -> bool | None:
        """True/False, or None when the premise is assertable-only and unasserted."""
        if self.kind == "numeric":
            return self.fn(pf, lam)  # type: ignore[misc]
        if self.kind == "free":
            return all(contains_induced(pf.g, h) is None for h in self.patterns)
        if self.cls in assume:
            return True
        if self.cls in ASSERTABLE_CLASSES:
            return None
        flag = pf.class_flag(self.cls)
        return flag  # planar may itself be None above its ceiling


def numeric(label: str, fn: Callable[[Profile, int | None], bool]) -> Premise:
    return Premise(label, "numeric", fn=fn)


def free_of(label: str, *patterns: Graph) -> Premise:
    return Premise(label, "free", patterns=tuple(patterns))


def in_class(cls: str) -> Premise:
    return Premise(f"G is {cls}", "class", cls=cls)


# -- conclusions ----------------------------------------------------------


@dataclass
class Outcome:
    ok: bool
    detail: str
    witness: object = None


class Conclusion:
    label = "conclusion"

    def check(self, pf: Profile, lam: int | None) -> Outcome:
        raise NotImplementedError


class Ham(Conclusion):
    label = "G is hamiltonian"

    def check(self, pf: Profile, lam: int | None) -> Outcome:
        if pf.is_hamiltonian:
            return Outcome(True, "hamiltonian", pf.longest_cycle)
        return Outcome(False, f"non-hamiltonian (c={pf.c} < n={pf.n})")


class ExistsProp(Conclusion):
    """Some cycle with the given domination property exists."""

    def __init__(self, prop: str, lam_fn: Callable[[Profile, int | None], int] | None = None):
        self.prop = prop
        self.lam_fn = lam_fn
        self.label = f"G has a {prop} cycle"

    def check(self, pf: Profile, lam: int | None) -> Outcome:
        eff = self.lam_fn(pf, lam) if self.lam_fn else None
        cert = exists_cycle_satisfying(pf.g, self.prop, eff)
        if cert is not None:
            return Outcome(True, f"{self.prop} cycle of length {cert.length}", cert)
        return Outcome(False, f"no {self.prop} cycle exists")


class EveryLongestProp(Conclusion):
    """Every longest cycle has the given domination property."""

    def __init__(self, prop: str, lam_fn: Callable[[Profile, int | None], int] | None = None):
        self.prop = prop
        self.lam_fn = lam_fn
        self.label = f"every longest cycle is a {prop} cycle"

    def check(self, pf: Profile, lam: int | None) -> Outcome:
        eff = self.lam_fn(pf, lam) if self.lam_fn else None
        ok, counter = every_longest_cycle_satisfies(pf.g, self.prop, eff)
        if ok:
            return Outcome(True, f"all longest cycles (length {pf.c}) are {self.prop}")
        return Outcome(False, f"longest cycle {counter} is not {self.prop}", counter)


class Bound(Conclusion):
    """Circumference lower bound c >= expr (or strictly >)."""

    def __init__(self, label: str, expr: Callable[[Profile, int | None], Exact], strict: bool = False):
        self.label = f"c {'>' if strict else '>='} {label}"
        self.expr = expr
        self.strict = strict

    def check(self, pf: Profile, lam: int | None) -> Outcome:
        bound = self.expr(pf, lam)
        c = Fraction(pf.c)
        ok = c > bound if self.strict else c >= bound
        rel = ">" if self.strict else ">="
        if ok:
            return Outcome(True, f"c={pf.c} {rel} {fmt_exact(bound)}", pf.longest_cycle)
        return Outcome(False, f"c={pf.c} not {rel} {fmt_exact(bound)}")


class ResidualBound(Conclusion):
    """Per-longest-cycle bound on c in terms of the residual parameters.

    ``bound(pf, p_bar, c_bar, lam)`` gives the claimed lower bound for a
    longest cycle with those residuals.  Spanning longest cycles carry no
    claim.  Enumeration is skipped whenever even the worst feasible
    residual pair cannot beat c.
    """

    def __init__(self, label: str, bound: Callable[[Profile, int, int, int | None], Exact]):
        self.label = f"c >= {label} for every longest cycle"
        self.bound = bound

    def check(self, pf: Profile, lam: int | None) -> Outcome:
        n, c = pf.n, pf.c
        if c == n:
            return Outcome(True, "longest cycles span; no residual claim")
        rest = n - c
        worst: Exact = Fraction(0)
        for p_bar in range(rest):
            for c_bar in range(1, rest + 1):
                b = self.bound(pf, p_bar, c_bar, lam)
                if b > worst:
                    worst = b
        if Fraction(c) >= worst:
            return Outcome(True, f"c={c} >= worst-case residual bound {fmt_exact(worst)}")
        for cert in _enumerate_longest(pf):
            p_bar, c_bar = residual_params(pf.g, cert)
            b = self.bound(pf, p_bar, c_bar, lam)  # type: ignore[arg-type]
            if Fraction(c) < b:
                return Outcome(
                    False,
                    f"cycle {cert}: residuals p={p_bar}, cbar={c_bar} "
                    f"demand c >= {fmt_exact(b)} > {c}",
                    cert,
                )
        return Outcome(True, f"bound verified over all longest cycles (c={c})")


def _enumerate_longest(pf: Profile):
    from .cycles import _cycles_of_length

    return _cycles_of_length(pf.g, pf.c)


class Disjunction(Conclusion):
    def __init__(self, first: Conclusion, second: Conclusion):
        self.first = first
        self.second = second
        self.label = f"({first.label}) or ({second.label})"

    def check(self, pf: Profile, lam: int | None) -> Outcome:
        a = self.first.check(pf, lam)
        if a.ok:
            return a
        b = self.second.check(pf, lam)
        if b.ok:
            return b
        return Outcome(False, f"both branches fail: {a.detail}; {b.detail}")


class NamedGraphEscape(Conclusion):
    """Disjunct of the form "... or G is the Petersen graph"."""

    def __init__(self, inner: Conclusion):
        self.inner = inner
        self.label = f"({inner.label}) or G = Petersen"

    def check(self, pf: Profile, lam: int | None) -> Outcome:
        out = self.inner.check(pf, lam)
        if out.ok:
            return out
        if pf.is_petersen:
            return Outcome(True, "G is the Petersen graph (named escape)")
        return out


# -- theorem specs and verdicts ------------------------------------------


@dataclass
class SharpnessCase:
    label: str
    role: str  # premise-tight | conclusion-tight | premise-necessary | residual-equality
    run: Callable[["TheoremSpec", str | None], list["CaseResult"]]


@dataclass
class CaseResult:
    case: str
    graph_label: str
    passed: bool
    detail: str
    warnings: list[str] = field(default_factory=list)


@dataclass
class TheoremSpec:
    id: str
    title: str
    statement: str
    conclusion: Conclusion
    premises: list[Premise] = field(default_factory=list)
    n_floor: int = 3
    lambdas: Callable[[Profile], Iterable[int]] | None = None
    sharpness: list[SharpnessCase] = field(default_factory=list)
    notes: str = ""
    quarantined: bool = False


@dataclass
class Verdict:
    theorem_id: str
    kind: str  # inapplicable | vacuous | holds | VIOLATED | ceiling
    detail: str
    lam: int | None = None
    witness: object = None

    def to_record(self) -> dict:
        rec = {"theorem": self.theorem_id, "verdict": self.kind, "detail": self.detail}
        if self.lam is not None:
            rec["lambda"] = self.lam
        if self.witness is not None:
            rec["witness"] = str(self.witness)
        return rec


def check(
    g: Graph | Profile,
    spec: TheoremSpec,
    assume: Iterable[str] = (),
    lam: int | None = None,
) -> Verdict:
    """Evaluate one theorem on one graph.

    Premises are checked in order; an unsupported class premise that is
    not asserted makes the theorem inapplicable, a failing premise makes
    it vacuous.  Parameterized theorems iterate their feasible lambda
    range unless a fixed lambda is given.
    """
    pf = g if isinstance(g, Profile) else Profile(g)
    assume_set = frozenset(assume)
    if pf.n < spec.n_floor:
        return Verdict(spec.id, "vacuous", f"n={pf.n} below floor {spec.n_floor}")
    lams: Sequence[int | None]
    if spec.lambdas is not None and lam is None:
        lams = list(spec.lambdas(pf))
        if not lams:
            return Verdict(spec.id, "vacuous", "empty parameter domain")
    else:
        lams = [lam]
    results: list[Verdict] = []
    for lv in lams:
        results.append(_check_at(pf, spec, assume_set, lv))
    for kind in ("VIOLATED", "ceiling", "inapplicable", "holds"):
        for v in results:
            if v.kind == kind:
                if kind == "holds":
                    held = [r for r in results if r.kind == "holds"]
                    if len(held) > 1:
                        lam_list = [r.lam for r in held]
                        return Verdict(spec.id, "holds", f"holds for lambda in {lam_list}")
                return v
    return results[0] if len(results) == 1 else Verdict(
        spec.id, "vacuous", "; ".join(f"lambda={r.lam}: {r.detail}" for r in results[:4])
    )


def _check_at(pf: Profile, spec: TheoremSpec, assume: frozenset[str], lam: int | None) -> Verdict:
    for prem in spec.premises:
        try:
            val = prem.evaluate(pf, lam, assume)
        except ZeroDivisionError:
            return Verdict(spec.id, "vacuous", f"premise '{prem.label}' undefined", lam)
        if val is None:
            return Verdict(
                spec.id, "inapplicable", f"premise '{prem.label}' is not decidable here", lam
            )
        if not val:
            return Verdict(spec.id, "vacuous", f"premise fails: {prem.label}", lam)
    try:
        out = spec.conclusion.check(pf, lam)
    except CeilingError as exc:
        return Verdict(spec.id, "ceiling", str(exc), lam)
    if out.ok:
        return Verdict(spec.id, "holds", out.detail, lam, out.witness)
    return Verdict(spec.id, "VIOLATED", out.detail, lam, out.witness)


@dataclass
class Report:
    verdicts: list[Verdict]

    @property
    def counts(self) -> dict[str, int]:
        tally: dict[str, int] = {}
        for v in self.verdicts:
            tally[v.kind] = tally.get(v.kind, 0) + 1
        return tally

    @property
    def violated(self) -> list[Verdict]:
        return [v for v in self.verdicts if v.kind == "VIOLATED"]


def check_all(
    g: Graph | Profile,
    specs: Sequence[TheoremSpec] | None = None,
    assume: Iterable[str] = (),
    include_quarantined: bool = True,
) -> Report:
    """Run the full catalog against one graph, sharing one Profile."""
    from .catalog import catalog

    pf = g if isinstance(g, Profile) else Profile(g)
    if specs is None:
        specs = catalog()
    verdicts = []
    for spec in specs:
        if not include_quarantined and spec.quarantined:
            continue
        verdicts.append(check(pf, spec, assume))
    return Report(verdicts)


def audit_sharpness(spec: TheoremSpec, param_range: str | None = None) -> list[CaseResult]:
    """Run every declared sharpness case for one theorem."""
    results: list[CaseResult] = []
    for case in spec.sharpness:
        results.extend(case.run(spec, param_range))
    return results


# -- sharpness case constructors ------------------------------------------

GraphList = Callable[[str | None], list[tuple[str, Graph]]]
FailCheck = Callable[[Profile], tuple[bool, str]]


def _premise_status(
    spec: TheoremSpec,
    pf: Profile,
    lam: int | None,
    skip: tuple[str, ...] = (),
    waive: tuple[str, ...] = (),
) -> tuple[bool, list[str], list[str]]:
    """Evaluate all premises except the skipped ones.

    Waived premises may fail; the failure is reported as a warning instead
    of sinking the case (used where the paper's own example contradicts a
    premise it is supposed to satisfy).
    """
    ok = True
    notes: list[str] = []
    warnings: list[str] = []
    for prem in spec.premises:
        if prem.label in skip:
            continue
        val = prem.evaluate(pf, lam, frozenset())
        if val:
            notes.append(f"{prem.label}: holds")
        elif prem.label in waive:
            warnings.append(f"premise '{prem.label}' fails on this example (waived)")
        else:
            ok = False
            notes.append(f"{prem.label}: FAILS")
    return ok, notes, warnings


def _conclusion_fails(
    spec: TheoremSpec, pf: Profile, lam: int | None, override: FailCheck | None
) -> tuple[bool, str]:
    if override is not None:
        return override(pf)
    out = spec.conclusion.check(pf, lam)
    return (not out.ok, out.detail)


def premise_tight_case(
    label: str,
    graphs: GraphList,
    target: str,
    relaxed: Callable[[Profile, int | None], bool],
    relaxed_label: str,
    lam: int | None = None,
    waive: tuple[str, ...] = (),
    conclusion_fails: FailCheck | None = None,
) -> SharpnessCase:
    """Role (i): the target premise fails, its declared relaxation holds,
    every other premise holds, and the conclusion fails."""

    def run(spec: TheoremSpec, param_range: str | None) -> list[CaseResult]:
        results = []
        for glabel, g in graphs(param_range):
            pf = Profile(g)
            ok, notes, warnings = _premise_status(spec, pf, lam, skip=(target,), waive=waive)
            tgt = next(p for p in spec.premises if p.label == target)
            tgt_holds = bool(tgt.evaluate(pf, lam, frozenset()))
            rel_holds = relaxed(pf, lam)
            failed, fail_detail = _conclusion_fails(spec, pf, lam, conclusion_fails)
            passed = ok and not tgt_holds and rel_holds and failed
            detail = (
                f"original '{target}' {'holds (unexpected)' if tgt_holds else 'fails'}; "
                f"relaxed '{relaxed_label}' {'holds' if rel_holds else 'FAILS'}; "
                f"conclusion: {fail_detail}; " + "; ".join(notes)
            )
            results.append(CaseResult(label, glabel, passed, detail, warnings))
        return results

    return SharpnessCase(label, "premise-tight", run)


def conclusion_tight_case(
    label: str,
    graphs: GraphList,
    equality: FailCheck | None = None,
    stronger_fails: FailCheck | None = None,
    lam: int | None = None,
    waive: tuple[str, ...] = (),
) -> SharpnessCase:
    """Role (ii): premises hold and the bound is met with equality, or the
    declared stronger conclusion fails."""

    def run(spec: TheoremSpec, param_range: str | None) -> list[CaseResult]:
        results = []
        for glabel, g in graphs(param_range):
            pf = Profile(g)
            ok, notes, warnings = _premise_status(spec, pf, lam, waive=waive)
            passed = ok
            parts = list(notes)
            for check_fn, what in ((equality, "equality"), (stronger_fails, "stronger conclusion fails")):
                if check_fn is None:
                    continue
                good, detail = check_fn(pf)
                passed = passed and good
                parts.append(f"{what}: {detail}" + ("" if good else " [FAILS]"))
            results.append(CaseResult(label, glabel, passed, "; ".join(parts), warnings))
        return results

    return SharpnessCase(label, "conclusion-tight", run)


def premise_necessary_case(
    label: str,
    graphs: GraphList,
    target: str,
    lam: int | None = None,
    conclusion_fails: FailCheck | None = None,
) -> SharpnessCase:
    """Role (iii): dropping the target premise entirely admits the example."""

    def run(spec: TheoremSpec, param_range: str | None) -> list[CaseResult]:
        results = []
        for glabel, g in graphs(param_range):
            pf = Profile(g)
            ok, notes, warnings = _premise_status(spec, pf, lam, skip=(target,))
            tgt = next(p for p in spec.premises if p.label == target)
            tgt_holds = bool(tgt.evaluate(pf, lam, frozenset()))
            failed, fail_detail = _conclusion_fails(spec, pf, lam, conclusion_fails)
            passed = ok and not tgt_holds and failed
            detail = (
                f"dropped '{target}' "
                f"{'holds (unexpected)' if tgt_holds else 'fails as required'}; "
                f"conclusion: {fail_detail}; " + "; ".join(notes)
            )
            results.append(CaseResult(label, glabel, passed, detail, warnings))
        return results

    return SharpnessCase(label, "premise-necessary", run)


def custom_case(label: str, role: str, fn: Callable[[str | None], list[CaseResult]]) -> SharpnessCase:
    def run(spec: TheoremSpec, param_range: str | None) -> list[CaseResult]:
        return fn(param_range)

    return SharpnessCase(label, role, run)
