"""Syntactic classification of interpretation-formula components.

Each matcher recognizes one component pattern and returns its payload, or
None.  The patterns tolerate argument-order flips of equalities (x = f(d)
vs f(d) = x) and accept both first-order application and curried '@'
application, so TFF and THF components classify the same way.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from ..syntax.ast import (
    App, Apply, Binary, DistinctObject, Eq, Lambda, Modal, Not, Number,
    Quantified, TypeName, Var,
    applied_head, disjuncts, free_variables,
)

DOMAIN_ENUMERATION = "domain_enumeration"
ELEMENT_CLOSURE = "element_closure"
ELEMENT_EXISTENCE = "element_existence"
DISTINCTNESS = "distinctness"
SURJECTIVITY = "surjectivity"
INJECTIVITY = "injectivity"
FUNCTION_MAPPING = "function_mapping"
PREDICATE_MAPPING = "predicate_mapping"
WORLD_ENUMERATION = "world_enumeration"
WORLD_DISTINCTNESS = "world_distinctness"
ACCESSIBILITY_LITERAL = "accessibility_literal"
LOCAL_WORLD_ASSIGNMENT = "local_world_assignment"
IN_WORLD_WRAPPER = "in_world_wrapper"
UNCLASSIFIED = "unclassified"

ALL_WORLDS = "*"


@dataclass
class ClassifyContext:
    """Type information consulted while classifying."""

    type_decls: dict = field(default_factory=dict)     # symbol -> TypeDecl
    world_constants: set = field(default_factory=set)  # symbols declared $world
    promotions: set = field(default_factory=set)       # known promotion functions

    def is_world_constant(self, term) -> bool:
        return isinstance(term, App) and not term.args and term.symbol in self.world_constants


def _type_name(t) -> str | None:
    return t.name if isinstance(t, TypeName) else None


def is_element_literal(term) -> bool:
    """Ground constant-like terms allowed as enumerated domain elements."""
    if isinstance(term, (DistinctObject, Number)):
        return True
    return isinstance(term, App) and not term.args and not term.symbol.startswith("$")


def _eq_other_side(eq: Eq, var: str):
    if eq.lhs == Var(var):
        return eq.rhs
    if eq.rhs == Var(var):
        return eq.lhs
    return None


def _plain_symbol_application(term):
    """(symbol, args) for applications of non-defined symbols."""
    viewed = applied_head(term)
    if viewed is None:
        return None
    head, args = viewed
    if head.symbol.startswith("$"):
        return None
    return head.symbol, args


# ---------------------------------------------------------------------------
# Domain components

def match_domain_enumeration(f):
    """! [X(: t)] : ( X = e1 | ... ) -> (var, type_name_or_None, elements)."""
    if not (isinstance(f, Quantified) and f.quantifier == "!" and len(f.variables) == 1):
        return None
    var, vtype = f.variables[0]
    elements = []
    for part in disjuncts(f.body):
        if not (isinstance(part, Eq) and not part.negated):
            return None
        other = _eq_other_side(part, var)
        if other is None or not is_element_literal(other):
            return None
        elements.append(other)
    return var, _type_name(vtype) if vtype is not None else None, elements


def match_element_closure(f):
    """! [X: t] : ( X = base | ? [Y: t] : X = g(Y) | ... ) -> (type, constructors)."""
    if not (isinstance(f, Quantified) and f.quantifier == "!" and len(f.variables) == 1):
        return None
    var, vtype = f.variables[0]
    constructors = []
    saw_existential = False
    for part in disjuncts(f.body):
        if isinstance(part, Eq) and not part.negated:
            other = _eq_other_side(part, var)
            if other is None or not is_element_literal(other):
                return None
            constructors.append(other.symbol if isinstance(other, App) else None)
            continue
        if isinstance(part, Quantified) and part.quantifier == "?" and isinstance(part.body, Eq) \
                and not part.body.negated:
            # The generator quantifies over the domain being closed; an
            # existential of a different type is a surjectivity, not a closure.
            if len(part.variables) != 1 or part.variables[0][1] != vtype:
                return None
            other = _eq_other_side(part.body, var)
            app = _plain_symbol_application(other) if other is not None else None
            if app is None:
                return None
            constructors.append(app[0])
            saw_existential = True
            continue
        return None
    if not saw_existential:
        return None
    if any(c is None for c in constructors):
        return None
    return _type_name(vtype) if vtype is not None else None, tuple(constructors)


def match_element_existence(f):
    """? [D: t] : D = e -> (type, element); marks an element existing in a world."""
    if not (isinstance(f, Quantified) and f.quantifier == "?" and len(f.variables) == 1):
        return None
    var, vtype = f.variables[0]
    if not (isinstance(f.body, Eq) and not f.body.negated):
        return None
    other = _eq_other_side(f.body, var)
    if other is None or not is_element_literal(other):
        return None
    return _type_name(vtype) if vtype is not None else None, other


def match_distinct_predicate(f):
    if isinstance(f, App) and f.symbol == "$distinct" and len(f.args) >= 2 \
            and all(is_element_literal(a) for a in f.args):
        return tuple(f.args)
    return None


def match_pairwise_inequality(f):
    if isinstance(f, Eq) and f.negated and is_element_literal(f.lhs) and is_element_literal(f.rhs):
        return f.lhs, f.rhs
    return None


def match_implied_distinctness(f):
    """! [A,B,...] : ( premise => A != B ) -> the formula itself."""
    if not (isinstance(f, Quantified) and f.quantifier == "!"):
        return None
    body = f.body
    if not (isinstance(body, Binary) and body.op == "=>"):
        return None
    concl = body.rhs
    bound = {v for v, _ in f.variables}
    if isinstance(concl, Eq) and concl.negated and isinstance(concl.lhs, Var) \
            and isinstance(concl.rhs, Var) and {concl.lhs.name, concl.rhs.name} <= bound:
        return f
    return None


def match_surjectivity(f):
    """! [X: pt] : ? [D: dt] : X = fn(D) -> (pt, dt, fn)."""
    if not (isinstance(f, Quantified) and f.quantifier == "!" and len(f.variables) == 1):
        return None
    x, pt = f.variables[0]
    body = f.body
    if not (isinstance(body, Quantified) and body.quantifier == "?" and len(body.variables) == 1):
        return None
    d, dt = body.variables[0]
    if not (isinstance(body.body, Eq) and not body.body.negated):
        return None
    other = _eq_other_side(body.body, x)
    if other is None:
        return None
    app = _plain_symbol_application(other)
    if app is None or len(app[1]) != 1 or app[1][0] != Var(d):
        return None
    pt_name, dt_name = _type_name(pt), _type_name(dt)
    if pt_name is None or dt_name is None:
        return None
    return pt_name, dt_name, app[0]


def match_injectivity(f):
    """! [D1: dt,D2: dt] : ( fn(D1) = fn(D2) => D1 = D2 ) -> (dt, fn)."""
    if not (isinstance(f, Quantified) and f.quantifier == "!" and len(f.variables) == 2):
        return None
    (d1, t1), (d2, t2) = f.variables
    if t1 != t2 or t1 is None:
        return None
    body = f.body
    if not (isinstance(body, Binary) and body.op == "=>"):
        return None
    concl = body.rhs
    if not (isinstance(concl, Eq) and not concl.negated
            and {concl.lhs, concl.rhs} == {Var(d1), Var(d2)}):
        return None
    prem = body.lhs
    if not (isinstance(prem, Eq) and not prem.negated):
        return None
    left = _plain_symbol_application(prem.lhs)
    right = _plain_symbol_application(prem.rhs)
    if left is None or right is None or left[0] != right[0]:
        return None
    if {left[1], right[1]} != {(Var(d1),), (Var(d2),)}:
        return None
    return _type_name(t1), left[0]


# ---------------------------------------------------------------------------
# Kripke components

def match_local_world(f):
    if not (isinstance(f, Eq) and not f.negated):
        return None
    for side, other in ((f.lhs, f.rhs), (f.rhs, f.lhs)):
        if isinstance(side, App) and side.symbol == "$local_world" and not side.args:
            if isinstance(other, App) and not other.args:
                return other.symbol
    return None


def match_accessibility(f):
    positive = True
    atom = f
    if isinstance(f, Not):
        positive = False
        atom = f.body
    if isinstance(atom, App) and atom.symbol == "$accessible_world" and len(atom.args) == 2 \
            and all(isinstance(a, App) and not a.args for a in atom.args):
        return atom.args[0].symbol, atom.args[1].symbol, positive
    return None


def match_in_world(f):
    """$in_world(w, body) or ! [W: $world] : $in_world(W, body) -> (world, body)."""
    if isinstance(f, App) and f.symbol == "$in_world" and len(f.args) == 2:
        w = f.args[0]
        if isinstance(w, App) and not w.args:
            return w.symbol, f.args[1]
        return None
    if isinstance(f, Quantified) and f.quantifier == "!" and len(f.variables) == 1:
        var, vtype = f.variables[0]
        if _type_name(vtype) == "$world" and isinstance(f.body, App) \
                and f.body.symbol == "$in_world" and len(f.body.args) == 2 \
                and f.body.args[0] == Var(var):
            return ALL_WORLDS, f.body.args[1]
    return None


# ---------------------------------------------------------------------------
# Symbol mappings

def match_lambda_mapping(f):
    """sym = ^ [..] : body -> (sym, lambda)."""
    if not (isinstance(f, Eq) and not f.negated):
        return None
    for side, other in ((f.lhs, f.rhs), (f.rhs, f.lhs)):
        if isinstance(other, Lambda) and isinstance(side, App) and not side.args \
                and not side.symbol.startswith("$"):
            return side.symbol, other
    return None


def match_ground_function_candidate(f):
    """Ground sym(args...) = value shape -> (symbol, arg_terms, value_term).

    Membership of the argument/value terms in the domains is the assembler's
    job; this only recognizes the shape.
    """
    if not (isinstance(f, Eq) and not f.negated) or free_variables(f):
        return None
    for side, other in ((f.lhs, f.rhs), (f.rhs, f.lhs)):
        app = _plain_symbol_application(side)
        if app is None:
            continue
        return app[0], app[1], other, side
    return None


def match_ground_predicate_literal(f):
    """Ground literal sym(args...) / ~sym(args...) -> (symbol, args, truth)."""
    truth = True
    atom = f
    if isinstance(f, Not):
        truth = False
        atom = f.body
    if free_variables(atom):
        return None
    app = _plain_symbol_application(atom)
    if app is None:
        return None
    return app[0], app[1], truth


def match_general_mapping(f, context: ClassifyContext):
    """Quantified mapping clause -> (symbol, kind, formula).

    Covers universally quantified equations, guarded equations, literal
    schemes, and biconditional predicate definitions.
    """
    if not (isinstance(f, Quantified) and f.quantifier == "!"):
        return None
    body = f.body
    while isinstance(body, Quantified) and body.quantifier == "!":
        body = body.body
    if isinstance(body, Binary) and body.op == "=>":
        body = body.rhs
    if isinstance(body, Eq) and not body.negated:
        sym = _mapped_function_side(body, context)
        if sym is not None:
            return sym, "function", f
        return None
    if isinstance(body, Binary) and body.op == "<=>":
        for side in (body.lhs, body.rhs):
            app = _plain_symbol_application(side)
            if app is not None and app[0] not in context.promotions:
                return app[0], "predicate", f
        return None
    atom = body.body if isinstance(body, Not) else body
    app = _plain_symbol_application(atom)
    if app is not None and app[0] not in context.promotions:
        return app[0], "predicate", f
    return None


def _mapped_function_side(eq: Eq, context: ClassifyContext) -> str | None:
    candidates = []
    for side in (eq.lhs, eq.rhs):
        app = _plain_symbol_application(side)
        if app is None:
            continue
        if app[0] in context.promotions:
            continue
        candidates.append(app[0])
    if len(candidates) == 1:
        return candidates[0]
    if len(candidates) == 2 and candidates[0] == candidates[1]:
        return candidates[0]
    return None


# ---------------------------------------------------------------------------
# Facade

def classify_component(conjunct, context: ClassifyContext) -> str:
    """Name the component kind of one top-level conjunct.

    Unclassified is a value, not an error: such conjuncts are retained as
    general constraints.
    """
    if match_in_world(conjunct) is not None:
        return IN_WORLD_WRAPPER
    if match_accessibility(conjunct) is not None:
        return ACCESSIBILITY_LITERAL
    if match_local_world(conjunct) is not None:
        return LOCAL_WORLD_ASSIGNMENT
    distinct = match_distinct_predicate(conjunct)
    if distinct is not None:
        if all(context.is_world_constant(a) for a in distinct):
            return WORLD_DISTINCTNESS
        return DISTINCTNESS
    pair = match_pairwise_inequality(conjunct)
    if pair is not None:
        if all(context.is_world_constant(a) for a in pair):
            return WORLD_DISTINCTNESS
        return DISTINCTNESS
    enum = match_domain_enumeration(conjunct)
    if enum is not None:
        return WORLD_ENUMERATION if enum[1] == "$world" else DOMAIN_ENUMERATION
    if match_element_closure(conjunct) is not None:
        return ELEMENT_CLOSURE
    if match_element_existence(conjunct) is not None:
        return ELEMENT_EXISTENCE
    if match_surjectivity(conjunct) is not None:
        return SURJECTIVITY
    if match_injectivity(conjunct) is not None:
        return INJECTIVITY
    if match_implied_distinctness(conjunct) is not None:
        return DISTINCTNESS
    if match_lambda_mapping(conjunct) is not None:
        return FUNCTION_MAPPING
    if match_ground_function_candidate(conjunct) is not None:
        return FUNCTION_MAPPING
    if match_ground_predicate_literal(conjunct) is not None:
        return PREDICATE_MAPPING
    general = match_general_mapping(conjunct, context)
    if general is not None:
        return FUNCTION_MAPPING if general[1] == "function" else PREDICATE_MAPPING
    return UNCLASSIFIED
