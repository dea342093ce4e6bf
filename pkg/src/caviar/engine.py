"""Equality-saturation driver: limits, goal checks, non-provable pattern
detection, and the pulsed outer loop."""

from __future__ import annotations

import math
import time
from dataclasses import dataclass, field, replace

from .egraph import EClassId, EGraph, from_expr
from .expr import BOOL, BoolConst, Expr, SortError, sort_of
from .extraction import AST_SIZE, extract_best
from .matching import apply_matches, ematch_class, eval_condition, gather_matches
from .rules import NPPattern

PROVED = "proved"
NON_PROVABLE = "non_provable"
UNKNOWN = "unknown"

# stop reason kinds
SATURATED = "saturated"
TIME_LIMIT = "time_limit"
ITER_LIMIT = "iter_limit"
NODE_LIMIT = "node_limit"
GOAL_FOUND = "goal_found"
NON_PROVABLE_DETECTED = "non_provable_detected"
_DEADLINE = "deadline"  # internal: per-run deadline hit; mapped by the caller


class _AbortRun(Exception):
    """Raised from a tick callback to abandon the current iteration."""

    def __init__(self, stop: "StopReason"):
        super().__init__(stop.kind)
        self.stop = stop


@dataclass(frozen=True)
class StopReason:
    kind: str
    detail: object = None  # goal index / pattern id

    def __str__(self):
        if self.detail is None:
            return self.kind
        return f"{self.kind}({self.detail})"


@dataclass
class EngineConfig:
    time_limit: float = 3.0
    iter_limit: int = 10_000
    node_limit: int = 1_000_000
    ilc_enabled: bool = True
    nppd_enabled: bool = True
    pulse_threshold: float | None = 0.05  # seconds; None disables pulsing
    goals: list[Expr] = field(default_factory=lambda: [BoolConst(False), BoolConst(True)])
    match_limit: int | None = None  # per-iteration match budget safety valve
    # deterministic mode swaps wall-clock stops for iteration budgets:
    # iter_limit bounds the run and pulse_iters is the pulse period
    deterministic: bool = False
    pulse_iters: int = 5

    def __post_init__(self):
        if self.time_limit <= 0:
            raise ValueError("time_limit must be positive")
        if self.pulse_threshold is not None and self.pulse_threshold > self.time_limit:
            raise ValueError("pulse_threshold must not exceed time_limit")
        for gexpr in self.goals:
            if not isinstance(gexpr, BoolConst):
                raise ValueError("goals must be ground boolean literals")


@dataclass
class IterationStats:
    iteration: int
    matches: int
    unions: int
    classes: int
    enodes: int
    elapsed: float


@dataclass
class RunReport:
    iterations: list[IterationStats] = field(default_factory=list)


@dataclass
class ProveResult:
    outcome: str                 # proved | non_provable | unknown
    value: bool | None           # the proved boolean
    pattern_id: str | None       # matched non-provable pattern
    stop: StopReason
    elapsed: float
    iterations: int
    pulses: int
    classes: int
    enodes: int
    best_expr: Expr | None
    report: RunReport


def goals_check(g: EGraph, root: EClassId, goals: list[Expr]) -> int | None:
    """Index of the first goal literal that is a member of the root class."""
    for i, goal in enumerate(goals):
        if g.has_literal(root, goal.value):
            return i
    return None


def nppd_check(g: EGraph, root: EClassId, patterns: list[NPPattern]) -> str | None:
    """Id of the first non-provable pattern matching the root class with its
    condition satisfied."""
    for p in patterns:
        for subst in ematch_class(g, p.pattern, root):
            if eval_condition(p.cond, g, subst):
                return p.id
    return None


class _Budget:
    """Shared stopping state for one prove/simplify call."""

    def __init__(self, cfg: EngineConfig):
        self.cfg = cfg
        self.start = time.monotonic()
        self.global_deadline = self.start + cfg.time_limit
        self.total_iterations = 0

    def now(self) -> float:
        return time.monotonic()

    def elapsed(self) -> float:
        return 0.0 if self.cfg.deterministic else time.monotonic() - self.start

    def global_exhausted(self) -> bool:
        if self.cfg.deterministic:
            return self.total_iterations >= self.cfg.iter_limit
        return time.monotonic() >= self.global_deadline


def run_saturation(g: EGraph, root: EClassId, rules, cfg: EngineConfig,
                   budget: _Budget, report: RunReport,
                   patterns: list[NPPattern] | None = None,
                   pulse_deadline: float | None = None,
                   pulse_iter_budget: int | None = None) -> StopReason:
    """Saturation loop with iteration-level goal and non-provable checks.

    Returns a StopReason; kind `_DEADLINE` means the per-run deadline (global
    or pulse) fired and the caller decides whether to restart or stop.
    """
    patterns = patterns or []
    det = cfg.deterministic
    pulse_iters_left = pulse_iter_budget

    def deadline_hit() -> bool:
        if det:
            return (budget.total_iterations >= cfg.iter_limit
                    or (pulse_iters_left is not None and pulse_iters_left <= 0))
        now = time.monotonic()
        return now >= budget.global_deadline or (
            pulse_deadline is not None and now >= pulse_deadline)

    def match_tick():
        if not det and deadline_hit():
            raise _AbortRun(StopReason(_DEADLINE))

    def apply_tick():
        if not det and deadline_hit():
            raise _AbortRun(StopReason(_DEADLINE))
        if len(g.hashcons) >= cfg.node_limit:
            raise _AbortRun(StopReason(NODE_LIMIT))

    # iteration-0 checks (Var/const roots and direct pattern hits stop here)
    if cfg.ilc_enabled:
        gi = goals_check(g, root, cfg.goals)
        if gi is not None:
            return StopReason(GOAL_FOUND, gi)
    if cfg.nppd_enabled:
        pid = nppd_check(g, root, patterns)
        if pid is not None:
            return StopReason(NON_PROVABLE_DETECTED, pid)

    while True:
        if budget.total_iterations >= cfg.iter_limit:
            return StopReason(ITER_LIMIT) if not det else StopReason(_DEADLINE)
        if deadline_hit():
            return StopReason(_DEADLINE)

        version_before = g.version
        all_matches = []
        n_matches = 0
        try:
            for rule in rules:
                ms = gather_matches(g, rule, tick=match_tick)
                if cfg.match_limit is not None:
                    room = cfg.match_limit - n_matches
                    if room <= 0:
                        ms = []
                    elif len(ms) > room:
                        ms = ms[:room]
                n_matches += len(ms)
                all_matches.append(ms)
            unions = 0
            for rule, ms in zip(rules, all_matches):
                unions += apply_matches(g, rule, ms, tick=apply_tick)
        except _AbortRun as abort:
            # the iteration is abandoned mid-flight; restore invariants so
            # the final goal check and extraction still work
            g.rebuild()
            return abort.stop
        g.rebuild()
        root = g.find(root)

        budget.total_iterations += 1
        if pulse_iters_left is not None:
            pulse_iters_left -= 1
        n_classes, n_enodes = len(g.classes), len(g.hashcons)
        report.iterations.append(IterationStats(
            iteration=budget.total_iterations, matches=n_matches, unions=unions,
            classes=n_classes, enodes=n_enodes, elapsed=budget.elapsed()))

        if cfg.ilc_enabled:
            gi = goals_check(g, root, cfg.goals)
            if gi is not None:
                return StopReason(GOAL_FOUND, gi)
        if cfg.nppd_enabled:
            pid = nppd_check(g, root, patterns)
            if pid is not None:
                return StopReason(NON_PROVABLE_DETECTED, pid)
        if g.version == version_before:
            return StopReason(SATURATED)
        if n_enodes >= cfg.node_limit:
            return StopReason(NODE_LIMIT)


def _finalize(g: EGraph, root: EClassId, stop: StopReason, cfg: EngineConfig,
              budget: _Budget, pulses: int, report: RunReport,
              extract: bool = True) -> ProveResult:
    root = g.find(root)
    elapsed = budget.elapsed()
    # final goal check regardless of the stop reason
    gi = goals_check(g, root, cfg.goals)
    if gi is not None and stop.kind != NON_PROVABLE_DETECTED:
        stop = StopReason(GOAL_FOUND, gi)
    if stop.kind == GOAL_FOUND:
        outcome, value, pid = PROVED, cfg.goals[stop.detail].value, None
    elif stop.kind == NON_PROVABLE_DETECTED:
        outcome, value, pid = NON_PROVABLE, None, stop.detail
    else:
        outcome, value, pid = UNKNOWN, None, None
    best = None
    if extract:
        best, _ = extract_best(g, root, AST_SIZE)
    n_classes, n_enodes = len(g.classes), len(g.hashcons)
    return ProveResult(
        outcome=outcome, value=value, pattern_id=pid, stop=stop,
        elapsed=elapsed,
        iterations=budget.total_iterations, pulses=pulses,
        classes=n_classes, enodes=n_enodes, best_expr=best, report=report)


def _map_deadline(stop: StopReason, cfg: EngineConfig) -> StopReason:
    if stop.kind != _DEADLINE:
        return stop
    return StopReason(ITER_LIMIT) if cfg.deterministic else StopReason(TIME_LIMIT)


def prove(expr: Expr, rules, patterns: list[NPPattern] | None = None,
          cfg: EngineConfig | None = None, extract: bool = True) -> ProveResult:
    """Prove whether a boolean expression is identically true or false.

    Single saturation run (no pulsing); iteration-level goal checks when
    `ilc_enabled`, non-provable pattern checks when `nppd_enabled`.
    """
    cfg = cfg or EngineConfig()
    if sort_of(expr) != BOOL:
        raise SortError("prove requires a boolean-sorted expression")
    budget = _Budget(cfg)
    report = RunReport()
    g, root = from_expr(expr)
    stop = run_saturation(g, root, rules, cfg, budget, report, patterns)
    stop = _map_deadline(stop, cfg)
    return _finalize(g, root, stop, cfg, budget, pulses=0, report=report,
                     extract=extract)


def prove_pulsed(expr: Expr, rules, patterns: list[NPPattern] | None = None,
                 cfg: EngineConfig | None = None, extract: bool = True) -> ProveResult:
    """Prove with pulsed restarts: when the pulse threshold fires, extract the
    smallest form found so far, reinitialize the e-graph from it, and keep
    going until a definite stop or the total time limit."""
    cfg = cfg or EngineConfig()
    if cfg.pulse_threshold is None:
        return prove(expr, rules, patterns, cfg, extract=extract)
    if sort_of(expr) != BOOL:
        raise SortError("prove requires a boolean-sorted expression")
    budget = _Budget(cfg)
    report = RunReport()
    pulses = 0
    current = expr
    while True:
        g, root = from_expr(current)
        if cfg.deterministic:
            stop = run_saturation(g, root, rules, cfg, budget, report, patterns,
                                  pulse_iter_budget=cfg.pulse_iters)
        else:
            pulse_deadline = min(budget.global_deadline,
                                 time.monotonic() + cfg.pulse_threshold)
            stop = run_saturation(g, root, rules, cfg, budget, report, patterns,
                                  pulse_deadline=pulse_deadline)
        if stop.kind != _DEADLINE or budget.global_exhausted():
            stop = _map_deadline(stop, cfg)
            return _finalize(g, root, stop, cfg, budget, pulses, report,
                             extract=extract)
        # pulse boundary: restart from the best expression found so far
        current, _ = extract_best(g, g.find(root), AST_SIZE)
        pulses += 1


def max_pulses(cfg: EngineConfig) -> int:
    if cfg.pulse_threshold is None:
        return 0
    return math.ceil(cfg.time_limit / cfg.pulse_threshold)


@dataclass
class SimplifyResult:
    best_expr: Expr
    cost: int
    stop: StopReason
    elapsed: float
    iterations: int
    classes: int
    enodes: int
    report: RunReport


def simplify(expr: Expr, rules, cfg: EngineConfig | None = None,
             cost_model: str = AST_SIZE) -> SimplifyResult:
    """Saturate (no goal or pattern checks) and extract the best form."""
    cfg = cfg or EngineConfig()
    sort_of(expr)
    budget = _Budget(cfg)
    report = RunReport()
    g, root = from_expr(expr)
    quiet = replace(cfg, ilc_enabled=False, nppd_enabled=False,
                    pulse_threshold=None)
    stop = _map_deadline(run_saturation(g, root, rules, quiet, budget, report), cfg)
    best, cost = extract_best(g, g.find(root), cost_model)
    return SimplifyResult(best, cost, stop, budget.elapsed(),
                          budget.total_iterations, len(g.classes),
                          len(g.hashcons), report)
