"""Structural checks, internal model checking, and verification-problem emission.

Structural checks cover declaredness of symbols, consistency of domain
enumerations with their distinctness evidence, presence of the promotion
bijection formulas for separate-domain models, and the Kripke world
obligations.  Model checking evaluates the problem directly when every
domain is finite; otherwise the report points at the emitted
theorem-proving verification problem.  Validation against the model
finder's own internal state is reported as NotCheckable rather than
silently omitted.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations

from .errors import Diagnostic, EmissionError, error, warning
from .evaluate import (
    SZS_COUNTERSATISFIABLE, SZS_ERROR, SZS_GAVEUP, SZS_MODEL_EXTENDING,
    SZS_SATISFIABLE, SZS_THEOREM, AXIOM_LIKE_ROLES, eval_problem,
)
from .interp.assemble import assemble, upgrade_legacy
from .interp.model import (
    DomainSpec, KripkeInterpretation, TarskianInterpretation, element_key,
    world_type_decls,
)
from .syntax.ast import (
    AnnotatedFormula, App, DistinctObject, Lambda, Modal, Quantified, Role,
    Not, TypeDecl, TypeName, Var, conjoin, free_variables, is_foml_model,
    walk, FOML_MODEL,
)

SZS_VALUES = (SZS_SATISFIABLE, SZS_COUNTERSATISFIABLE, SZS_THEOREM,
              SZS_GAVEUP, SZS_ERROR, SZS_MODEL_EXTENDING)

STAGE_PARSE = "parse"
STAGE_TYPE_CHECK = "type_check"
STAGE_STRUCTURE = "structure"
STAGE_SAT_EMITTED = "satisfiability_emitted"
STAGE_MODEL_CHECKED = "model_checked"


def szs_report(status: str, name: str) -> str:
    """The standard result line, bit-exact."""
    return f"% SZS status {status} for {name}"


@dataclass
class StageResult:
    stage: str
    outcome: str
    diagnostics: list = field(default_factory=list)


@dataclass
class CheckReport:
    stages: list = field(default_factory=list)
    szs: str | None = None
    gave_up_reason: str | None = None
    evaluation: object | None = None       # ProblemEvaluation when model_checked ran

    def add(self, stage: str, outcome: str, diagnostics=()) -> None:
        self.stages.append(StageResult(stage, outcome, list(diagnostics)))

    def diagnostics(self) -> list:
        return [d for s in self.stages for d in s.diagnostics]

    def errors(self) -> list:
        return [d for d in self.diagnostics() if d.severity == "error"]

    def warnings(self) -> list:
        return [d for d in self.diagnostics() if d.severity == "warning"]

    def ok(self) -> bool:
        return not self.errors()


# ---------------------------------------------------------------------------
# Structural checks

def _declared_symbols(units) -> dict:
    return {u.body.symbol: u.body for u in units if u.is_type_decl()}


def _symbols_in(formula) -> set:
    out = set()
    for node in walk(formula):
        if isinstance(node, App) and not node.symbol.startswith("$"):
            out.add(node.symbol)
    return out


def _type_check(units) -> list[Diagnostic]:
    decls = _declared_symbols(units)
    missing: list[Diagnostic] = []
    seen: set = set()
    for u in units:
        if u.language not in ("tff", "thf") or u.is_type_decl() or u.is_logic():
            continue
        for sym in sorted(_symbols_in(u.body)):
            if sym not in decls and sym not in seen:
                seen.add(sym)
                missing.append(error("UndeclaredSymbol",
                                     f"symbol {sym!r} is used but never declared"))
    return missing


def _pairs(elements) -> set:
    return {frozenset((a, b)) for a, b in combinations(elements, 2)}


def _distinctness_diagnostics(spec: DomainSpec) -> list[Diagnostic]:
    if not spec.is_finite() or len(spec.elements) < 2:
        return []
    if spec.distinctness in ("by_builtin_type", "implied_by_formula"):
        return []
    needed = _pairs(spec.elements)
    covered: set = set()
    objects = [e for e in spec.elements if isinstance(e, DistinctObject)]
    covered |= _pairs(objects)
    for f in spec.distinctness_formulas:
        if isinstance(f, App) and f.symbol == "$distinct":
            covered |= _pairs(f.args)
        else:  # a pairwise inequality
            covered.add(frozenset((f.lhs, f.rhs)))
    uncovered = needed - covered
    if not uncovered:
        return []
    sample = sorted(
        "{" + ",".join(sorted(element_key(e) for e in pair)) + "}" for pair in uncovered)
    return [warning(
        "DistinctnessUnstated",
        f"domain {spec.domain_type}: no distinctness evidence for {', '.join(sample)}")]


def _promotion_diagnostics(spec: DomainSpec) -> list[Diagnostic]:
    if spec.promotion is None or spec.problem_type == spec.domain_type:
        return []
    out = []
    fn = spec.promotion.function_symbol
    if spec.promotion.surjectivity is None:
        out.append(error("PromotionNotSurjective",
                         f"no surjectivity formula for promotion {fn} onto {spec.problem_type}"))
    if spec.promotion.injectivity is None:
        out.append(error("PromotionNotInjective",
                         f"no injectivity formula for promotion {fn} from {spec.domain_type}"))
    return out


def _tarskian_structure(interp: TarskianInterpretation) -> list[Diagnostic]:
    out: list[Diagnostic] = []
    for spec in interp.domains.values():
        out.extend(_distinctness_diagnostics(spec))
        out.extend(_promotion_diagnostics(spec))
    return out


def _kripke_structure(k: KripkeInterpretation) -> list[Diagnostic]:
    out: list[Diagnostic] = []
    declared = set(world_type_decls(k.type_decls))
    for w in k.worlds:
        if w not in declared:
            out.append(error("WorldNotDeclared",
                             f"world {w} has no $world type declaration"))
    if len(k.worlds) > 1 and not k.distinct_worlds:
        out.append(error("WorldsNotDistinct",
                         "worlds are not explicitly distinct; state $distinct or inequalities"))
    for pair in sorted(k.accessible | k.not_accessible):
        for w in pair:
            if w not in k.worlds:
                out.append(error("MissingWorld",
                                 f"accessibility names undeclared world {w}"))
    contradictory = sorted(k.accessible & k.not_accessible)
    for pair in contradictory:
        out.append(error("ContradictoryAccessibility",
                         f"accessibility of {pair} is both asserted and negated"))
    seen: set = set()
    for ws in k.per_world.values():
        for d in _tarskian_structure(ws.interpretation):
            key = (d.code, d.message)
            if key not in seen:
                seen.add(key)
                out.append(d)
    return out


def check_structure(units, parse_diagnostics=()) -> CheckReport:
    """Well-formedness stages: parse results, declaredness, model structure."""
    report = CheckReport()
    parse_errors = [d for d in parse_diagnostics if d.severity == "error"]
    report.add(STAGE_PARSE, "error" if parse_errors else "ok", parse_diagnostics)

    units = upgrade_legacy(units)
    type_diags = _type_check(units)
    report.add(STAGE_TYPE_CHECK, "error" if type_diags else "ok", type_diags)

    interp, assembly = assemble(units)
    structure_diags = list(assembly.errors) + list(assembly.warnings)
    if isinstance(interp, KripkeInterpretation):
        structure_diags += _kripke_structure(interp)
    else:
        structure_diags += _tarskian_structure(interp)
    outcome = "error" if any(d.severity == "error" for d in structure_diags) else "ok"
    report.add(STAGE_STRUCTURE, outcome, structure_diags)
    report.szs = SZS_ERROR if not report.ok() else None
    return report


# ---------------------------------------------------------------------------
# Model checking

def check_model(problem_units, interp_units, parse_diagnostics=()) -> CheckReport:
    """Structure checks plus direct evaluation when the model is finite."""
    report = check_structure(interp_units, parse_diagnostics)
    interp, _ = assemble(interp_units)
    report.add(STAGE_SAT_EMITTED, "delegated", [
        Diagnostic("note", "SatisfiabilityDelegated",
                   "satisfiability of the interpretation-formulae is checked by a "
                   "trusted model finder on the emitted combined problem"),
        Diagnostic("note", "NotCheckable",
                   "agreement with the model finder's internal model cannot be "
                   "confirmed from the outside"),
    ])
    if not report.ok():
        report.szs = SZS_ERROR
        return report

    if isinstance(interp, TarskianInterpretation) and interp.herbrand:
        report.szs = SZS_GAVEUP
        report.gave_up_reason = "HerbrandModel"
        report.add(STAGE_MODEL_CHECKED, "skipped", [
            Diagnostic("note", "HerbrandModel",
                       "explicit models are not extracted from these formulae; "
                       "use the emitted verification problem")])
        return report
    if interp.has_infinite_domain():
        report.szs = SZS_GAVEUP
        report.gave_up_reason = "InfiniteQuantifier"
        report.add(STAGE_SAT_EMITTED, "pointer", [
            Diagnostic("note", "InfiniteQuantifier",
                       "the model has an infinite domain; verify it with the "
                       "emitted verification problem")])
        return report

    evaluation = eval_problem(problem_units, interp)
    report.evaluation = evaluation
    report.szs = evaluation.status
    if evaluation.status == SZS_GAVEUP:
        report.gave_up_reason = evaluation.reason
    report.add(STAGE_MODEL_CHECKED, evaluation.status,
               [] if evaluation.status != SZS_ERROR else
               [error("ModelContradicted", evaluation.reason or "an axiom is false")])
    return report


# ---------------------------------------------------------------------------
# Verification-problem emission

@dataclass
class VerificationProblem:
    units: list
    flavor: str                      # "tarskian" or "kripke_foml"

    def text(self) -> str:
        from .syntax.printer import print_units
        return print_units(self.units)


def _dedupe_name(name: str, used: set) -> str:
    candidate = name
    n = 1
    while candidate in used:
        n += 1
        candidate = f"{name}_{n}"
    used.add(candidate)
    return candidate


def _goal_scope(unit) -> str:
    if unit.role.subrole in ("local", "global"):
        return unit.role.subrole
    return "local" if unit.role.base == "conjecture" else "global"


def emit_verification_problem(problem_units, interp_units,
                              conjoin_goals: bool = False) -> VerificationProblem:
    """Classical flavor: interpretation-formulae become axioms, and each
    problem axiom plus the negated conjecture becomes its own conjecture
    obligation (provable independently)."""
    interp_units = upgrade_legacy(interp_units)
    used: set = set()
    out: list[AnnotatedFormula] = []
    for u in interp_units:
        if u.role.is_interpretation():
            out.append(AnnotatedFormula(u.language, _dedupe_name(u.name, used),
                                        Role("axiom"), u.body))
        else:
            used.add(u.name)
            out.append(u)
    known = {(u.name, u.body) for u in out}
    goals = []
    for u in problem_units:
        if u.is_type_decl() or u.is_logic():
            if (u.name, u.body) not in known:
                out.append(AnnotatedFormula(u.language, _dedupe_name(u.name, used),
                                            u.role, u.body))
            continue
        if u.role.base == "conjecture":
            goals.append((u, Not(u.body), None))
        elif u.role.base in AXIOM_LIKE_ROLES:
            goals.append((u, u.body, None))
    out.extend(_goal_units(goals, used, conjoin_goals, with_scope=False))
    return VerificationProblem(out, "tarskian")


def emit_kripke_verification_problem(problem_units, interp_units,
                                     conjoin_goals: bool = False) -> VerificationProblem:
    """Modal flavor: the logic specification is replaced by the hybrid
    marker $$fomlModel, the interpretation-formulae become axioms, and the
    obligations carry a local or global subrole matching their problem role."""
    logic_units = [u for u in problem_units if u.is_logic()]
    if not logic_units:
        raise EmissionError("MissingLogicSpec",
                            "the problem has no logic specification to replace")
    logic = logic_units[0]
    interp_units = upgrade_legacy(interp_units)
    used: set = set()
    out: list[AnnotatedFormula] = []
    out.append(AnnotatedFormula(logic.language, _dedupe_name(logic.name, used),
                                Role("logic"), App(FOML_MODEL)))
    for u in interp_units:
        if u.is_logic():
            continue  # the problem's logic is captured by $$fomlModel
        if u.role.is_interpretation():
            out.append(AnnotatedFormula(u.language, _dedupe_name(u.name, used),
                                        Role("axiom"), u.body))
        else:
            used.add(u.name)
            out.append(u)
    known = {(u.name, u.body) for u in out}
    goals = []
    for u in problem_units:
        if u.is_logic():
            continue
        if u.is_type_decl():
            if (u.name, u.body) not in known:
                out.append(AnnotatedFormula(u.language, _dedupe_name(u.name, used),
                                            u.role, u.body))
            continue
        if u.role.base == "conjecture":
            goals.append((u, Not(u.body), _goal_scope(u)))
        elif u.role.base in AXIOM_LIKE_ROLES:
            goals.append((u, u.body, _goal_scope(u)))
    out.extend(_goal_units(goals, used, conjoin_goals, with_scope=True))
    return VerificationProblem(out, "kripke_foml")


def _goal_units(goals, used: set, conjoin_goals: bool, with_scope: bool) -> list:
    if not goals:
        return []
    if not conjoin_goals:
        out = []
        for u, body, scope in goals:
            role = Role("conjecture", scope) if with_scope else Role("conjecture")
            out.append(AnnotatedFormula(u.language, _dedupe_name(u.name, used), role, body))
        return out
    out = []
    if with_scope:
        for scope in ("global", "local"):
            bucket = [body for _, body, s in goals if s == scope]
            if bucket:
                out.append(AnnotatedFormula(
                    goals[0][0].language,
                    _dedupe_name(f"combined_{scope}_goals", used),
                    Role("conjecture", scope), conjoin(bucket)))
        return out
    out.append(AnnotatedFormula(
        goals[0][0].language, _dedupe_name("combined_goals", used),
        Role("conjecture"), conjoin([body for _, body, _ in goals])))
    return out


def choose_flavor(problem_units, interp_units) -> str:
    """Tarskian vs Kripke detection: the files are self-describing."""
    from .interp.assemble import detect_kripke
    if detect_kripke(list(problem_units) + list(interp_units)):
        return "kripke_foml"
    for u in problem_units:
        for node in walk(u.body) if not u.is_type_decl() else ():
            if isinstance(node, Modal):
                return "kripke_foml"
    return "tarskian"


def emit_for(problem_units, interp_units, conjoin_goals: bool = False,
             flavor: str | None = None) -> VerificationProblem:
    if flavor is None:
        flavor = choose_flavor(problem_units, interp_units)
    if flavor == "kripke_foml":
        return emit_kripke_verification_problem(problem_units, interp_units, conjoin_goals)
    return emit_verification_problem(problem_units, interp_units, conjoin_goals)
