"""Structured interpretation objects assembled from interpretation-formulae.

Assembled objects keep the original component formulas (bucketed per domain
and per symbol) so regraining can redistribute them without rewriting, and
they compare structurally so different granularities of the same model
assemble to equal values.  origin_units is bookkeeping and excluded from
equality.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from ..syntax.ast import App, DistinctObject, Number, TypeDecl
from ..syntax.printer import print_formula

BUILTIN_DOMAIN_TYPES = {"$int", "$rat", "$real"}
UNTYPED = "$i"


def element_key(element) -> str:
    """Stable display form of a domain element."""
    return print_formula(element)


@dataclass
class PromotionBijection:
    function_symbol: str
    surjectivity: object | None = None   # the recognized formula, when present
    injectivity: object | None = None


@dataclass
class InfiniteDescriptor:
    kind: str                               # "builtin" or "term_generated"
    generator: object | None = None         # element-closure formula
    constructors: tuple = ()                # symbols the closure builds elements from


@dataclass
class DomainSpec:
    problem_type: str
    domain_type: str
    elements: list = field(default_factory=list)
    infinite: InfiniteDescriptor | None = None
    distinctness: str = "unstated"
    # "distinct_objects" | "distinct_predicate" | "pairwise_inequalities"
    # | "by_builtin_type" | "implied_by_formula" | "unstated"
    distinctness_formulas: list = field(default_factory=list)
    promotion: PromotionBijection | None = None
    enumeration_formula: object | None = None

    def is_finite(self) -> bool:
        return self.infinite is None

    def component_formulas(self) -> list:
        """Domain components in canonical emission order."""
        out = []
        if self.promotion and self.promotion.surjectivity is not None:
            out.append(self.promotion.surjectivity)
        if self.enumeration_formula is not None:
            out.append(self.enumeration_formula)
        if self.infinite is not None and self.infinite.generator is not None:
            if self.infinite.generator is not self.enumeration_formula:
                out.append(self.infinite.generator)
        out.extend(self.distinctness_formulas)
        if self.promotion and self.promotion.injectivity is not None:
            out.append(self.promotion.injectivity)
        return out


@dataclass
class SymbolMapping:
    symbol: str
    kind: str = "function"                  # "function" or "predicate"
    arity: int = 0
    result_type: str = UNTYPED
    entries: dict = field(default_factory=dict)   # tuple(elements) -> element | bool
    general_clauses: list = field(default_factory=list)
    source_conjuncts: list = field(default_factory=list)


@dataclass
class TarskianInterpretation:
    domains: dict = field(default_factory=dict)   # problem_type -> DomainSpec
    mappings: dict = field(default_factory=dict)  # symbol -> SymbolMapping
    herbrand: bool = False
    herbrand_formulas: list = field(default_factory=list)
    general_constraints: list = field(default_factory=list)  # unclassified conjuncts
    type_decls: list = field(default_factory=list)
    origin_units: list = field(default_factory=list, compare=False)

    def domain_for_type(self, type_name: str | None) -> DomainSpec | None:
        if type_name is None:
            type_name = UNTYPED
        spec = self.domains.get(type_name)
        if spec is not None:
            return spec
        for candidate in self.domains.values():
            if candidate.domain_type == type_name:
                return candidate
        return None

    def promotion_symbols(self) -> dict:
        """Map promotion function symbol -> its DomainSpec."""
        out = {}
        for spec in self.domains.values():
            if spec.promotion is not None:
                out[spec.promotion.function_symbol] = spec
        return out

    def element_domain(self, element) -> DomainSpec | None:
        for spec in self.domains.values():
            if spec.is_finite() and element in spec.elements:
                return spec
            if spec.infinite is not None:
                if spec.infinite.kind == "builtin" and isinstance(element, Number):
                    return spec
                if spec.infinite.kind == "term_generated" and _built_from(
                        element, spec.infinite.constructors):
                    return spec
        if isinstance(element, DistinctObject) and UNTYPED in self.domains:
            return self.domains[UNTYPED]
        return None

    def has_infinite_domain(self) -> bool:
        return any(not d.is_finite() for d in self.domains.values())

    def declared_types(self) -> dict:
        return {d.symbol: d for d in self.type_decls}


def _built_from(term, constructors: tuple) -> bool:
    if isinstance(term, App):
        return term.symbol in constructors and all(
            _built_from(a, constructors) for a in term.args)
    return False


@dataclass
class WorldState:
    interpretation: TarskianInterpretation
    existing: dict = field(default_factory=dict)        # domain_type -> [elements]
    existence_formulas: list = field(default_factory=list)  # (domain_type, formula)

    def existing_elements(self, spec: DomainSpec) -> list:
        # Worlds that never state existence for a domain use the whole domain
        # (constant-domain reading); stated existence restricts it.
        if spec.domain_type in self.existing:
            return self.existing[spec.domain_type]
        return spec.elements


@dataclass
class KripkeInterpretation:
    worlds: list = field(default_factory=list)
    worlds_formula: object | None = None
    distinct_worlds: bool = False
    world_distinctness_formulas: list = field(default_factory=list)
    accessible: set = field(default_factory=set)        # (from, to) asserted
    not_accessible: set = field(default_factory=set)    # (from, to) explicitly negated
    accessibility_formulas: list = field(default_factory=list)
    local_world: str | None = None
    local_world_formula: object | None = None
    per_world: dict = field(default_factory=dict)       # world -> WorldState
    logic: object | None = None                         # the logic AnnotatedFormula
    general_constraints: list = field(default_factory=list)
    type_decls: list = field(default_factory=list)
    origin_units: list = field(default_factory=list, compare=False)

    def successors(self, world: str) -> list:
        return [w for w in self.worlds if (world, w) in self.accessible]

    def has_infinite_domain(self) -> bool:
        return any(ws.interpretation.has_infinite_domain() for ws in self.per_world.values())

    def declared_types(self) -> dict:
        return {d.symbol: d for d in self.type_decls}


@dataclass
class AssemblyReport:
    classified: list = field(default_factory=list)      # (formula, kind)
    unclassified: list = field(default_factory=list)    # retained general constraints
    warnings: list = field(default_factory=list)
    errors: list = field(default_factory=list)

    def ok(self) -> bool:
        return not self.errors

    def merge(self, other: "AssemblyReport") -> None:
        self.classified.extend(other.classified)
        self.unclassified.extend(other.unclassified)
        self.warnings.extend(other.warnings)
        self.errors.extend(other.errors)


def is_kripke(interp) -> bool:
    return isinstance(interp, KripkeInterpretation)


def world_type_decls(type_decls: list) -> list:
    """Constants declared with the world type."""
    out = []
    for d in type_decls:
        if isinstance(d, TypeDecl) and getattr(d.signature, "name", None) == "$world":
            out.append(d.symbol)
    return out
