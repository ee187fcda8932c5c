"""AST node types for annotated formulae, formulas, terms, and types.

Terms and formulas share one node hierarchy: the extended typed languages
allow boolean-valued terms in argument positions, so the term/formula split
is a property of where a node sits, not of its class.  All nodes are frozen
and hashable, so parsed units are immutable values.
"""

from __future__ import annotations

from dataclasses import dataclass, field

LANGUAGES = ("cnf", "fof", "tff", "thf")

KNOWN_ROLE_BASES = {
    "axiom", "lemma", "hypothesis", "definition", "assumption", "plain",
    "theorem", "corollary", "conjecture", "negated_conjecture",
    "type", "logic", "interpretation",
    "fi_domain", "fi_functors", "fi_predicates",
}
KNOWN_SUBROLES = {"domains", "mappings", "worlds", "herbrand", "local", "global"}

# Binary connectives; "|" and "&" chain, the rest demand explicit parentheses.
ASSOCIATIVE_OPS = {"|", "&"}
BINARY_OPS = {"|", "&", "=>", "<=", "<=>", "<~>", "~|", "~&"}

MODAL_NECESSITY = ("box", "necessary")
MODAL_POSSIBILITY = ("dia", "possible")


# ---------------------------------------------------------------------------
# Terms / formulas

@dataclass(frozen=True)
class Var:
    name: str


@dataclass(frozen=True)
class App:
    """Symbol application; constants have empty args.

    The symbol keeps its surface spelling: plain words, '$'-prefixed defined
    words, '$$'-prefixed system words, and 'single quoted' atoms (quotes kept
    only when the text does not fit the plain-word grammar).
    """

    symbol: str
    args: tuple = ()


@dataclass(frozen=True)
class DistinctObject:
    """A "double quoted" object; two of these with different text are unequal.

    The text between the quotes is preserved byte-for-byte.
    """

    text: str


@dataclass(frozen=True)
class Number:
    literal: str

    def int_value(self) -> int | None:
        try:
            return int(self.literal)
        except ValueError:
            return None


@dataclass(frozen=True)
class Eq:
    lhs: object
    rhs: object
    negated: bool = False


@dataclass(frozen=True)
class Not:
    body: object


@dataclass(frozen=True)
class Binary:
    op: str
    lhs: object
    rhs: object


@dataclass(frozen=True)
class Quantified:
    quantifier: str  # "!" or "?"
    variables: tuple  # of (name, type-or-None)
    body: object


@dataclass(frozen=True)
class Lambda:
    variables: tuple  # of (name, type-or-None)
    body: object


@dataclass(frozen=True)
class Apply:
    """Higher-order application written with '@'."""

    fn: object
    arg: object


@dataclass(frozen=True)
class Modal:
    """Short-form modal operator applied with '@': {$box}, {$possible}, ..."""

    operator: str  # word inside the braces, without the '$'
    body: object

    def is_necessity(self) -> bool:
        return self.operator in MODAL_NECESSITY

    def is_possibility(self) -> bool:
        return self.operator in MODAL_POSSIBILITY


TRUE = App("$true")
FALSE = App("$false")


# ---------------------------------------------------------------------------
# Types

@dataclass(frozen=True)
class TypeName:
    name: str


@dataclass(frozen=True)
class MappingType:
    """Arrow type; args of length > 1 renders as a (a * b) product."""

    args: tuple
    result: object


@dataclass(frozen=True)
class TypeDecl:
    symbol: str
    signature: object  # TypeName or MappingType

    def result_type(self):
        sig = self.signature
        return sig.result if isinstance(sig, MappingType) else sig

    def arg_types(self) -> tuple:
        sig = self.signature
        return sig.args if isinstance(sig, MappingType) else ()


# ---------------------------------------------------------------------------
# Logic specifications

@dataclass(frozen=True)
class LogicAssign:
    lhs: object
    rhs: object


@dataclass(frozen=True)
class LogicList:
    items: tuple


FOML_MODEL = "$$fomlModel"


def is_foml_model(body) -> bool:
    return isinstance(body, App) and body.symbol == FOML_MODEL and not body.args


# ---------------------------------------------------------------------------
# Roles and annotated formulae

@dataclass(frozen=True)
class Role:
    base: str
    subrole: str | None = None
    subrole_args: tuple[str, str] | None = None

    @property
    def known_base(self) -> bool:
        return self.base in KNOWN_ROLE_BASES

    def is_interpretation(self) -> bool:
        return self.base == "interpretation"

    def is_legacy_interpretation(self) -> bool:
        return self.base in ("fi_domain", "fi_functors", "fi_predicates")

    def with_subrole(self, subrole: str | None, args: tuple[str, str] | None = None) -> "Role":
        return Role(self.base, subrole, args)


@dataclass(frozen=True)
class AnnotatedFormula:
    """One language(name, role, body, ...) unit.

    source/useful_info are captured as raw text and reprinted verbatim; the
    toolkit never interprets them.
    """

    language: str
    name: str
    role: Role
    body: object
    source: str | None = None
    useful_info: str | None = None

    def is_type_decl(self) -> bool:
        return self.role.base == "type"

    def is_logic(self) -> bool:
        return self.role.base == "logic"


@dataclass(frozen=True)
class LogicSpecification:
    name: str
    body: object

    @property
    def recognized_foml_model(self) -> bool:
        return is_foml_model(self.body)


# ---------------------------------------------------------------------------
# Traversal helpers

def conjuncts(formula) -> list:
    """Flatten a right/left-nested '&' chain into its top-level conjuncts."""
    if isinstance(formula, Binary) and formula.op == "&":
        return conjuncts(formula.lhs) + conjuncts(formula.rhs)
    return [formula]


def disjuncts(formula) -> list:
    if isinstance(formula, Binary) and formula.op == "|":
        return disjuncts(formula.lhs) + disjuncts(formula.rhs)
    return [formula]


def conjoin(parts: list):
    if not parts:
        return TRUE
    out = parts[0]
    for p in parts[1:]:
        out = Binary("&", out, p)
    return out


def applied_head(node) -> tuple[object, tuple] | None:
    """View a first-order or curried application as (head, args).

    Returns None for nodes that are not applications of a named symbol.
    """
    if isinstance(node, App):
        return node, node.args
    if isinstance(node, Apply):
        args: list = []
        cur = node
        while isinstance(cur, Apply):
            args.insert(0, cur.arg)
            cur = cur.fn
        if isinstance(cur, App) and not cur.args:
            return cur, tuple(args)
        return None
    return None


def head_symbol(node) -> str | None:
    viewed = applied_head(node)
    if viewed is None:
        return None
    return viewed[0].symbol


def walk(node):
    """Yield node and all descendants (formulas, terms, types excluded)."""
    yield node
    if isinstance(node, App):
        for a in node.args:
            yield from walk(a)
    elif isinstance(node, Eq):
        yield from walk(node.lhs)
        yield from walk(node.rhs)
    elif isinstance(node, Not):
        yield from walk(node.body)
    elif isinstance(node, Binary):
        yield from walk(node.lhs)
        yield from walk(node.rhs)
    elif isinstance(node, (Quantified, Lambda)):
        yield from walk(node.body)
    elif isinstance(node, Apply):
        yield from walk(node.fn)
        yield from walk(node.arg)
    elif isinstance(node, Modal):
        yield from walk(node.body)


def substitute(node, name: str, replacement):
    """Capture-naive substitution of a variable by a closed term."""
    if isinstance(node, Var):
        return replacement if node.name == name else node
    if isinstance(node, App):
        return App(node.symbol, tuple(substitute(a, name, replacement) for a in node.args))
    if isinstance(node, Eq):
        return Eq(substitute(node.lhs, name, replacement),
                  substitute(node.rhs, name, replacement), node.negated)
    if isinstance(node, Not):
        return Not(substitute(node.body, name, replacement))
    if isinstance(node, Binary):
        return Binary(node.op, substitute(node.lhs, name, replacement),
                      substitute(node.rhs, name, replacement))
    if isinstance(node, (Quantified, Lambda)):
        if any(v == name for v, _ in node.variables):
            return node  # shadowed
        cls = type(node)
        if isinstance(node, Quantified):
            return cls(node.quantifier, node.variables, substitute(node.body, name, replacement))
        return cls(node.variables, substitute(node.body, name, replacement))
    if isinstance(node, Apply):
        return Apply(substitute(node.fn, name, replacement), substitute(node.arg, name, replacement))
    if isinstance(node, Modal):
        return Modal(node.operator, substitute(node.body, name, replacement))
    return node


def free_variables(node, bound: frozenset = frozenset()) -> set:
    out: set = set()
    if isinstance(node, Var):
        if node.name not in bound:
            out.add(node.name)
    elif isinstance(node, App):
        for a in node.args:
            out |= free_variables(a, bound)
    elif isinstance(node, Eq):
        out |= free_variables(node.lhs, bound) | free_variables(node.rhs, bound)
    elif isinstance(node, Not):
        out |= free_variables(node.body, bound)
    elif isinstance(node, Binary):
        out |= free_variables(node.lhs, bound) | free_variables(node.rhs, bound)
    elif isinstance(node, (Quantified, Lambda)):
        inner = bound | {v for v, _ in node.variables}
        out |= free_variables(node.body, inner)
    elif isinstance(node, Apply):
        out |= free_variables(node.fn, bound) | free_variables(node.arg, bound)
    elif isinstance(node, Modal):
        out |= free_variables(node.body, bound)
    return out
