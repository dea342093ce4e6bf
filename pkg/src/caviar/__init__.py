"""Prove and simplify compiler integer/boolean expressions by equality
saturation over an e-graph, with iteration-level goal checks, pulsed
restarts, and non-provable pattern detection."""

from .analysis import ConstantContradiction
from .egraph import EGraph, ENode, from_expr
from .engine import (
    EngineConfig, ProveResult, RunReport, SimplifyResult, StopReason,
    prove, prove_pulsed, simplify,
)
from .expr import (
    Binary, BoolConst, Expr, IntConst, ParseError, SortError, Unary,
    UnboundVariable, Var, evaluate, parse_infix, parse_sexpr, print_infix,
    print_sexpr,
)
from .extraction import AST_DEPTH, AST_SIZE, extract_best
from .harness import emit_report, run_dataset, summarize
from .matching import PatVar, Rule, apply_rule, ematch
from .rules import (
    NPPattern, Ruleset, default_nppd_patterns, default_ruleset,
    load_nppd, load_rules, parse_nppd, parse_rules,
)

__version__ = "1.0.0"

__all__ = [
    "AST_DEPTH", "AST_SIZE", "Binary", "BoolConst", "ConstantContradiction",
    "EGraph", "ENode", "EngineConfig", "Expr", "IntConst", "NPPattern",
    "ParseError", "PatVar", "ProveResult", "Rule", "RunReport", "Ruleset",
    "SimplifyResult", "SortError", "StopReason", "Unary", "UnboundVariable",
    "Var", "apply_rule", "default_nppd_patterns", "default_ruleset",
    "ematch", "emit_report", "evaluate", "extract_best", "from_expr",
    "load_nppd", "load_rules", "parse_infix", "parse_nppd", "parse_rules",
    "parse_sexpr", "print_infix", "print_sexpr", "prove", "prove_pulsed",
    "run_dataset", "simplify", "summarize",
]
