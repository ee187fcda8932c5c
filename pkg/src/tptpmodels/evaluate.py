"""Direct evaluation of terms and formulae against finite interpretations.

Verdicts are three-valued: partial interpretations yield an explicit
unknown (always with a reason) instead of silently defaulting.  Connectives
use the classical tables lifted so that a decided operand can absorb an
unknown one (true | unknown = true, false & unknown = false).

Kripke evaluation runs the same machinery with a current world: modal
operators move along the accessibility relation, quantifiers range over the
elements existing in the world, and plain atoms consult the world's
Tarskian interpretation.
"""

from __future__ import annotations

from dataclasses import dataclass, field, replace

from .interp.model import (
    KripkeInterpretation, TarskianInterpretation, UNTYPED, element_key,
)
from .syntax.ast import (
    App, Apply, Binary, DistinctObject, Eq, Lambda, MappingType, Modal, Not,
    Number, Quantified, TypeName, Var, applied_head, substitute,
)
from .syntax.printer import print_formula

ARITH_FUNCTIONS = {"$sum", "$difference", "$product", "$uminus"}
ARITH_PREDICATES = {"$less", "$lesseq", "$greater", "$greatereq"}

AXIOM_LIKE_ROLES = {"axiom", "hypothesis", "lemma", "definition", "assumption",
                    "plain", "negated_conjecture"}

SZS_SATISFIABLE = "Satisfiable"
SZS_COUNTERSATISFIABLE = "CounterSatisfiable"
SZS_THEOREM = "Theorem"
SZS_GAVEUP = "GaveUp"
SZS_ERROR = "Error"
SZS_MODEL_EXTENDING = "ModelExtending"


@dataclass(frozen=True)
class Verdict:
    value: str                  # "true", "false", "unknown"
    reason: str | None = None   # present exactly when value is "unknown"

    def is_true(self) -> bool:
        return self.value == "true"

    def is_false(self) -> bool:
        return self.value == "false"

    def is_unknown(self) -> bool:
        return self.value == "unknown"


TRUE_V = Verdict("true")
FALSE_V = Verdict("false")


def unknown(reason: str) -> Verdict:
    return Verdict("unknown", reason)


def from_bool(b: bool) -> Verdict:
    return TRUE_V if b else FALSE_V


def v_not(v: Verdict) -> Verdict:
    if v.is_unknown():
        return v
    return FALSE_V if v.is_true() else TRUE_V


def v_and(a: Verdict, b: Verdict) -> Verdict:
    if a.is_false() or b.is_false():
        return FALSE_V
    if a.is_true() and b.is_true():
        return TRUE_V
    return a if a.is_unknown() else b


def v_or(a: Verdict, b: Verdict) -> Verdict:
    if a.is_true() or b.is_true():
        return TRUE_V
    if a.is_false() and b.is_false():
        return FALSE_V
    return a if a.is_unknown() else b


def v_iff(a: Verdict, b: Verdict) -> Verdict:
    if a.is_unknown():
        return a
    if b.is_unknown():
        return b
    return from_bool(a.value == b.value)


@dataclass(frozen=True)
class Environment:
    """Variable bindings plus, under Kripke evaluation, the current world."""

    bindings: dict = field(default_factory=dict)  # name -> (type_name, element)
    current_world: str | None = None

    def bind(self, name: str, type_name: str | None, element) -> "Environment":
        new = dict(self.bindings)
        new[name] = (type_name, element)
        return Environment(new, self.current_world)

    def at_world(self, world: str) -> "Environment":
        return replace(self, current_world=world)

    def lookup(self, name: str):
        return self.bindings.get(name)


class Evaluator:
    """Shared evaluation engine for Tarskian and Kripke interpretations."""

    def __init__(self, interp, max_clause_depth: int = 100):
        if isinstance(interp, KripkeInterpretation):
            self.kripke: KripkeInterpretation | None = interp
            self.flat: TarskianInterpretation | None = None
        else:
            self.kripke = None
            self.flat = interp
        self._depth = 0
        self.max_clause_depth = max_clause_depth
        self._elements_cache: dict = {}

    # -- context ------------------------------------------------------------

    def _tarskian(self, env: Environment) -> TarskianInterpretation | None:
        if self.kripke is None:
            return self.flat
        if env.current_world is None:
            return None
        ws = self.kripke.per_world.get(env.current_world)
        return ws.interpretation if ws else None

    def _world_state(self, env: Environment):
        if self.kripke is None or env.current_world is None:
            return None
        return self.kripke.per_world.get(env.current_world)

    @staticmethod
    def _constructor_domains(interp: TarskianInterpretation) -> set:
        out: set = set()
        for spec in interp.domains.values():
            if spec.infinite is not None and spec.infinite.kind == "term_generated":
                out.update(spec.infinite.constructors)
        return out

    def _domain_elements(self, type_name: str | None, env: Environment):
        """Elements a quantified variable of the given type ranges over."""
        interp = self._tarskian(env)
        if interp is None:
            return unknown("NoWorldContext")
        spec = interp.domain_for_type(type_name)
        if spec is None:
            return unknown(f"UnknownType: {type_name or UNTYPED}")
        if not spec.is_finite():
            return unknown(f"InfiniteQuantifier: {spec.domain_type}")
        ws = self._world_state(env)
        if ws is not None:
            return ws.existing_elements(spec)
        return spec.elements

    # -- formulas -------------------------------------------------------------

    def formula(self, f, env: Environment) -> Verdict:
        if isinstance(f, App):
            return self._atom(f.symbol, f.args, env)
        if isinstance(f, Apply):
            viewed = applied_head(f)
            if viewed is not None:
                return self._atom(viewed[0].symbol, viewed[1], env)
            return unknown(f"UnsupportedConstruct: {print_formula(f)}")
        if isinstance(f, Eq):
            verdict = self._equality(f, env)
            return v_not(verdict) if f.negated else verdict
        if isinstance(f, Not):
            return v_not(self.formula(f.body, env))
        if isinstance(f, Binary):
            return self._binary(f, env)
        if isinstance(f, Quantified):
            return self._quantified(f, env)
        if isinstance(f, Modal):
            return self._modal(f, env)
        if isinstance(f, Var):
            bound = env.lookup(f.name)
            if bound is not None and isinstance(bound[1], Verdict):
                return bound[1]
            return unknown(f"BooleanVariable: {f.name}")
        return unknown(f"UnsupportedConstruct: {print_formula(f)}")

    def _binary(self, f: Binary, env: Environment) -> Verdict:
        a = self.formula(f.lhs, env)
        b = self.formula(f.rhs, env)
        if f.op == "&":
            return v_and(a, b)
        if f.op == "|":
            return v_or(a, b)
        if f.op == "=>":
            return v_or(v_not(a), b)
        if f.op == "<=":
            return v_or(a, v_not(b))
        if f.op == "<=>":
            return v_iff(a, b)
        if f.op == "<~>":
            return v_not(v_iff(a, b))
        if f.op == "~|":
            return v_not(v_or(a, b))
        if f.op == "~&":
            return v_not(v_and(a, b))
        return unknown(f"UnsupportedConstruct: {f.op}")

    def _quantified(self, f: Quantified, env: Environment) -> Verdict:
        name, vtype = f.variables[0]
        rest = f if len(f.variables) == 1 else Quantified(f.quantifier, f.variables[1:], f.body)
        if isinstance(vtype, MappingType):
            return unknown(f"HigherOrderQuantifier: {name}")
        type_name = vtype.name if isinstance(vtype, TypeName) else None
        elements = self._domain_elements(type_name, env)
        if isinstance(elements, Verdict):
            return elements
        result = TRUE_V if f.quantifier == "!" else FALSE_V
        for e in elements:
            inner = env.bind(name, type_name, e)
            v = self.formula(f.body if rest is f else rest, inner)
            result = v_and(result, v) if f.quantifier == "!" else v_or(result, v)
            if (f.quantifier == "!" and result.is_false()) \
                    or (f.quantifier == "?" and result.is_true()):
                return result
        return result

    def _modal(self, f: Modal, env: Environment) -> Verdict:
        if self.kripke is None or env.current_world is None:
            return unknown("ModalWithoutKripke")
        if f.is_necessity():
            universal = True
        elif f.is_possibility():
            universal = False
        else:
            return unknown(f"UnknownModalOperator: {f.operator}")
        result = TRUE_V if universal else FALSE_V
        for successor in self.kripke.successors(env.current_world):
            v = self.formula(f.body, env.at_world(successor))
            result = v_and(result, v) if universal else v_or(result, v)
            if (universal and result.is_false()) or (not universal and result.is_true()):
                return result
        return result

    def _equality(self, f: Eq, env: Environment) -> Verdict:
        lhs = self.term(f.lhs, env)
        if isinstance(lhs, Verdict):
            return lhs
        rhs = self.term(f.rhs, env)
        if isinstance(rhs, Verdict):
            return rhs
        return from_bool(lhs == rhs)

    def _atom(self, symbol: str, args: tuple, env: Environment) -> Verdict:
        if symbol == "$true":
            return TRUE_V
        if symbol == "$false":
            return FALSE_V
        if symbol == "$distinct":
            return self._distinct(args, env)
        if symbol in ARITH_PREDICATES:
            return self._arith_predicate(symbol, args, env)
        if symbol == "$accessible_world":
            return self._accessible(args, env)
        if symbol == "$in_world":
            if len(args) == 2 and isinstance(args[0], App) and not args[0].args:
                return self.formula(args[1], env.at_world(args[0].symbol))
            return unknown("UnsupportedConstruct: $in_world")
        if symbol.startswith("$"):
            return unknown(f"UnsupportedConstruct: {symbol}")
        return self._predicate(symbol, args, env)

    def _distinct(self, args: tuple, env: Environment) -> Verdict:
        elements = []
        for a in args:
            e = self.term(a, env)
            if isinstance(e, Verdict):
                return e
            elements.append(e)
        for i in range(len(elements)):
            for j in range(i + 1, len(elements)):
                if elements[i] == elements[j]:
                    return FALSE_V
        return TRUE_V

    def _arith_predicate(self, symbol: str, args: tuple, env: Environment) -> Verdict:
        ints = []
        for a in args:
            e = self.term(a, env)
            if isinstance(e, Verdict):
                return e
            if not isinstance(e, Number) or e.int_value() is None:
                return unknown(f"NonIntegerArithmetic: {print_formula(a)}")
            ints.append(e.int_value())
        x, y = ints
        if symbol == "$less":
            return from_bool(x < y)
        if symbol == "$lesseq":
            return from_bool(x <= y)
        if symbol == "$greater":
            return from_bool(x > y)
        return from_bool(x >= y)

    def _accessible(self, args: tuple, env: Environment) -> Verdict:
        if self.kripke is None:
            return unknown("ModalWithoutKripke")
        if len(args) != 2 or not all(isinstance(a, App) and not a.args for a in args):
            return unknown("UnsupportedConstruct: $accessible_world")
        pair = (args[0].symbol, args[1].symbol)
        # Pairs never mentioned are not accessible (closed world on the
        # relation); explicit negations are recorded for cross-checks.
        return from_bool(pair in self.kripke.accessible)

    def _predicate(self, symbol: str, args: tuple, env: Environment) -> Verdict:
        interp = self._tarskian(env)
        if interp is None:
            return unknown("NoWorldContext")
        elements = []
        for a in args:
            e = self.term(a, env)
            if isinstance(e, Verdict):
                return e
            elements.append(e)
        mapping = interp.mappings.get(symbol)
        if mapping is not None:
            value = mapping.entries.get(tuple(elements))
            if isinstance(value, bool):
                return from_bool(value)
            clause_value = self._consult_clauses(mapping, elements, env, want_bool=True)
            if clause_value is not None:
                return clause_value
        rendered = ",".join(element_key(e) for e in elements)
        return unknown(f"MissingMapping: {symbol}({rendered})")

    # -- terms ------------------------------------------------------------------

    def term(self, t, env: Environment):
        """Resolve a term to a canonical element, or a Verdict carrying the gap."""
        if isinstance(t, Var):
            bound = env.lookup(t.name)
            if bound is None:
                return unknown(f"UnboundVariable: {t.name}")
            return bound[1]
        if isinstance(t, DistinctObject):
            return t
        if isinstance(t, Number):
            v = t.int_value()
            return Number(str(v)) if v is not None else t
        if isinstance(t, Lambda):
            return t
        if isinstance(t, Apply) and isinstance(t.fn, Lambda):
            return self._beta(t.fn, t.arg, env)
        viewed = applied_head(t)
        if viewed is None:
            if isinstance(t, Apply):
                fn = self.term(t.fn, env)
                if isinstance(fn, Verdict):
                    return fn
                if isinstance(fn, Lambda):
                    return self._beta(fn, t.arg, env)
            return unknown(f"UnsupportedConstruct: {print_formula(t)}")
        head, args = viewed
        return self._application(head.symbol, args, env)

    def _beta(self, fn: Lambda, arg, env: Environment):
        name = fn.variables[0][0]
        body = fn.body if len(fn.variables) == 1 else Lambda(fn.variables[1:], fn.body)
        return self.term(substitute(body, name, arg), env)

    def _element_constants(self, interp: TarskianInterpretation) -> set:
        cached = self._elements_cache.get(id(interp))
        if cached is None:
            cached = set()
            for spec in interp.domains.values():
                for e in spec.elements:
                    if isinstance(e, App):
                        cached.add(e.symbol)
            self._elements_cache[id(interp)] = cached
        return cached

    def _application(self, symbol: str, args: tuple, env: Environment):
        interp = self._tarskian(env)
        if interp is None:
            return unknown("NoWorldContext")
        if not args and symbol in self._element_constants(interp):
            return self._designation(App(symbol), env)
        promotions = interp.promotion_symbols()
        if symbol in promotions and len(args) == 1:
            return self.term(args[0], env)
        constructors = self._constructor_domains(interp)
        if symbol in constructors:
            resolved = []
            for a in args:
                e = self.term(a, env)
                if isinstance(e, Verdict):
                    return e
                resolved.append(e)
            return App(symbol, tuple(resolved))
        if symbol in ARITH_FUNCTIONS:
            return self._arith_function(symbol, args, env)
        if symbol.startswith("$"):
            return unknown(f"UnsupportedConstruct: {symbol}")
        elements = []
        for a in args:
            e = self.term(a, env)
            if isinstance(e, Verdict):
                return e
            elements.append(e)
        mapping = interp.mappings.get(symbol)
        if mapping is not None:
            value = mapping.entries.get(tuple(elements))
            if value is not None and not isinstance(value, bool):
                return self._designation(value, env)
            clause_value = self._consult_clauses(mapping, elements, env, want_bool=False)
            if clause_value is not None:
                if isinstance(clause_value, Verdict):
                    return clause_value
                return self._designation(clause_value, env)
            if args:
                # A lambda-mapped symbol applied to arguments: resolve the
                # symbol to its lambda and beta-reduce one argument at a time.
                lam = self._consult_clauses(mapping, [], env, want_bool=False)
                if isinstance(lam, Lambda):
                    value = lam
                    for e in elements:
                        if not isinstance(value, Lambda):
                            return unknown(f"UnsupportedConstruct: over-application of {symbol}")
                        value = self._beta(value, e, env)
                        if isinstance(value, Verdict):
                            return value
                    return self._designation(value, env)
        rendered = ",".join(element_key(e) for e in elements)
        return unknown(f"MissingMapping: {symbol}({rendered})")

    def _designation(self, element, env: Environment):
        """Ground designation under Kripke: the element must exist in the world."""
        ws = self._world_state(env)
        if ws is None or isinstance(element, Lambda):
            return element
        spec = ws.interpretation.element_domain(element)
        if spec is not None and spec.domain_type in ws.existing:
            if element not in ws.existing[spec.domain_type]:
                return unknown(f"NonExistingDesignation: {element_key(element)}")
        return element

    def _arith_function(self, symbol: str, args: tuple, env: Environment):
        ints = []
        for a in args:
            e = self.term(a, env)
            if isinstance(e, Verdict):
                return e
            if not isinstance(e, Number) or e.int_value() is None:
                return unknown(f"NonIntegerArithmetic: {print_formula(a)}")
            ints.append(e.int_value())
        if symbol == "$sum":
            return Number(str(ints[0] + ints[1]))
        if symbol == "$difference":
            return Number(str(ints[0] - ints[1]))
        if symbol == "$product":
            return Number(str(ints[0] * ints[1]))
        return Number(str(-ints[0]))

    # -- general clause consultation ------------------------------------------------

    def _consult_clauses(self, mapping, elements, env: Environment, want_bool: bool):
        """Instantiate retained quantified clauses at the queried tuple.

        A clause decides the value when its pattern matches the tuple and
        its guard (if any) evaluates true; otherwise the next clause is
        tried.  Returns None when nothing decides.
        """
        if self._depth >= self.max_clause_depth:
            return unknown("DepthLimit")
        interp = self._tarskian(env)
        promotions = set(interp.promotion_symbols()) if interp else set()
        for clause in mapping.general_clauses:
            body = clause
            bound_vars = []
            while isinstance(body, Quantified) and body.quantifier == "!":
                bound_vars.extend(v for v, _ in body.variables)
                body = body.body
            guard = None
            if isinstance(body, Binary) and body.op == "=>":
                guard, body = body.lhs, body.rhs
            pattern_args, result, result_is_formula = self._clause_shape(
                body, mapping, promotions, want_bool)
            if pattern_args is None:
                continue
            binding: dict = {}
            if len(pattern_args) != len(elements):
                continue
            if not all(_match_element(p, e, binding, promotions)
                       for p, e in zip(pattern_args, elements)):
                continue
            if any(v not in binding for v in bound_vars):
                continue

            def instantiate(node):
                for name, element in binding.items():
                    node = substitute(node, name, element)
                return node

            self._depth += 1
            try:
                if guard is not None:
                    g = self.formula(instantiate(guard), env)
                    if not g.is_true():
                        continue
                if result_is_formula:
                    return self.formula(instantiate(result), env)
                if result is True or result is False:
                    return from_bool(result)
                return self.term(instantiate(result), env)
            finally:
                self._depth -= 1
        return None

    def _clause_shape(self, body, mapping, promotions, want_bool):
        """(pattern_args, result, result_is_formula) or (None, None, False)."""
        symbol = mapping.symbol
        if not want_bool and isinstance(body, Eq) and not body.negated:
            for side, other in ((body.lhs, body.rhs), (body.rhs, body.lhs)):
                if isinstance(other, Lambda) and isinstance(side, App) \
                        and side.symbol == symbol and not side.args:
                    return (), other, False
                viewed = applied_head(side)
                if viewed is not None and viewed[0].symbol == symbol \
                        and symbol not in promotions:
                    return viewed[1], other, False
            return None, None, False
        if want_bool and isinstance(body, Binary) and body.op == "<=>":
            for side, other in ((body.lhs, body.rhs), (body.rhs, body.lhs)):
                viewed = applied_head(side)
                if viewed is not None and viewed[0].symbol == symbol:
                    return viewed[1], other, True
            return None, None, False
        if want_bool:
            truth = True
            atom = body
            if isinstance(body, Not):
                truth = False
                atom = body.body
            viewed = applied_head(atom)
            if viewed is not None and viewed[0].symbol == symbol:
                return viewed[1], truth, False
        return None, None, False


def _match_element(pattern, element, binding: dict, promotions: set) -> bool:
    """Structural match of a clause pattern term against a canonical element."""
    if isinstance(pattern, Var):
        if pattern.name in binding:
            return binding[pattern.name] == element
        binding[pattern.name] = element
        return True
    viewed = applied_head(pattern)
    if viewed is not None and viewed[0].symbol in promotions and len(viewed[1]) == 1:
        return _match_element(viewed[1][0], element, binding, promotions)
    if isinstance(pattern, DistinctObject):
        return pattern == element
    if isinstance(pattern, Number):
        v = pattern.int_value()
        canonical = Number(str(v)) if v is not None else pattern
        return canonical == element
    if viewed is not None:
        if not isinstance(element, App) or element.symbol != viewed[0].symbol \
                or len(element.args) != len(viewed[1]):
            return False
        return all(_match_element(p, e, binding, promotions)
                   for p, e in zip(viewed[1], element.args))
    return False


# ---------------------------------------------------------------------------
# Public entry points

def eval_term(t, interp, env: Environment | None = None):
    return Evaluator(interp).term(t, env or Environment())


def eval_formula(f, interp, env: Environment | None = None) -> Verdict:
    return Evaluator(interp).formula(f, env or Environment())


def eval_at_world(f, kinterp: KripkeInterpretation, world: str) -> Verdict:
    if world not in kinterp.worlds:
        return unknown(f"MissingWorld: {world}")
    return Evaluator(kinterp).formula(f, Environment(current_world=world))


def eval_everywhere(f, kinterp: KripkeInterpretation) -> Verdict:
    result = TRUE_V
    for w in kinterp.worlds:
        result = v_and(result, eval_at_world(f, kinterp, w))
        if result.is_false():
            return result
    return result


@dataclass
class UnitVerdict:
    unit: object
    scope: str            # "global", "local", or "" for Tarskian problems
    verdict: Verdict


@dataclass
class ProblemEvaluation:
    verdicts: list
    status: str
    reason: str | None = None


def eval_problem(problem_units, interp) -> ProblemEvaluation:
    """Evaluate a problem's units and derive the overall SZS status.

    Axioms must be true (under Kripke: global ones at every world, local
    ones at the local world); a false conjecture with all-true axioms
    confirms a countermodel.
    """
    kripke = isinstance(interp, KripkeInterpretation)
    evaluator = Evaluator(interp)
    verdicts: list[UnitVerdict] = []
    for u in problem_units:
        if u.is_type_decl() or u.is_logic():
            continue
        base = u.role.base
        if base not in AXIOM_LIKE_ROLES and base != "conjecture":
            continue
        if not kripke:
            verdicts.append(UnitVerdict(u, "", evaluator.formula(u.body, Environment())))
            continue
        scope = u.role.subrole if u.role.subrole in ("local", "global") else \
            ("local" if base == "conjecture" else "global")
        if scope == "local":
            if interp.local_world is None:
                verdict = unknown("MissingLocalWorld")
            else:
                verdict = evaluator.formula(
                    u.body, Environment(current_world=interp.local_world))
        else:
            verdict = TRUE_V
            for w in interp.worlds:
                verdict = v_and(verdict, evaluator.formula(
                    u.body, Environment(current_world=w)))
                if verdict.is_false():
                    break
        verdicts.append(UnitVerdict(u, scope, verdict))

    for uv in verdicts:
        if uv.unit.role.base in AXIOM_LIKE_ROLES and uv.verdict.is_false():
            return ProblemEvaluation(
                verdicts, SZS_ERROR, f"axiom {uv.unit.name} is false in the interpretation")
    for uv in verdicts:
        if uv.verdict.is_unknown():
            return ProblemEvaluation(verdicts, SZS_GAVEUP, uv.verdict.reason)
    conjectures = [uv for uv in verdicts if uv.unit.role.base == "conjecture"]
    if conjectures and any(uv.verdict.is_false() for uv in conjectures):
        return ProblemEvaluation(verdicts, SZS_COUNTERSATISFIABLE)
    return ProblemEvaluation(verdicts, SZS_SATISFIABLE)
