"""Assembly of parsed interpretation units into structured model objects.

Assembly is phase-ordered so the result does not depend on how the
components are split across units: promotions and domains are collected
before mappings are extracted, which lets ground equalities be read through
type-promotion functions regardless of unit order or granularity.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from ..errors import error, warning
from ..syntax.ast import (
    AnnotatedFormula, App, DistinctObject, Eq, Number, Role, TypeName,
    applied_head, conjuncts, walk,
)
from ..syntax.printer import print_formula
from . import classify as cl
from .model import (
    BUILTIN_DOMAIN_TYPES, UNTYPED,
    AssemblyReport, DomainSpec, InfiniteDescriptor, KripkeInterpretation,
    PromotionBijection, SymbolMapping, TarskianInterpretation, WorldState,
    element_key, world_type_decls,
)

KRIPKE_MARKERS = {"$in_world", "$accessible_world", "$local_world"}


def upgrade_legacy(units: list[AnnotatedFormula]) -> list[AnnotatedFormula]:
    """Rewrite the legacy finite-interpretation roles to interpretation roles.

    fi_domain becomes interpretation-domains; fi_functors and fi_predicates
    become interpretation-mappings.  Everything else passes through.
    """
    out = []
    for u in units:
        if u.role.base == "fi_domain":
            role = Role("interpretation", "domains")
        elif u.role.base in ("fi_functors", "fi_predicates"):
            role = Role("interpretation", "mappings")
        else:
            out.append(u)
            continue
        out.append(AnnotatedFormula(u.language, u.name, role, u.body, u.source, u.useful_info))
    return out


def detect_kripke(units: list[AnnotatedFormula]) -> bool:
    for u in units:
        if u.is_type_decl():
            if getattr(u.body.signature, "name", None) == "$world":
                return True
            continue
        if u.role.subrole == "worlds":
            return True
        if u.role.is_interpretation() or u.role.is_legacy_interpretation():
            for node in walk(u.body):
                if isinstance(node, App) and node.symbol in KRIPKE_MARKERS:
                    return True
    return False


@dataclass
class _Conjunct:
    formula: object
    unit: AnnotatedFormula
    kind: str = cl.UNCLASSIFIED


def _interp_units(units):
    return [u for u in units if u.role.is_interpretation()]


def assemble(units: list[AnnotatedFormula]):
    """Assemble units into a Tarskian or Kripke interpretation plus a report.

    Legacy fi_* roles are upgraded on the way in.  Errors are collected in
    the report instead of raised, so callers can keep whatever did assemble.
    """
    units = upgrade_legacy(units)
    report = AssemblyReport()
    type_decls = [u.body for u in units if u.is_type_decl()]
    logic_units = [u for u in units if u.is_logic()]
    interp_units = _interp_units(units)

    if detect_kripke(units):
        interp = _assemble_kripke(units, interp_units, type_decls, logic_units, report)
    else:
        herbrand_units = [u for u in interp_units if u.role.subrole == "herbrand"]
        plain_units = [u for u in interp_units if u.role.subrole != "herbrand"]
        stream = []
        for u in plain_units:
            stream.extend(_Conjunct(c, u) for c in conjuncts(u.body))
        interp = _assemble_tarskian(stream, type_decls, report)
        if herbrand_units:
            interp.herbrand = True
            interp.herbrand_formulas = [u.body for u in herbrand_units]
        interp.origin_units = [u.name for u in interp_units]
    return interp, report


def assemble_strict(units):
    from ..errors import AssemblyError

    interp, report = assemble(units)
    if not report.ok():
        raise AssemblyError(report.errors)
    return interp, report


# ---------------------------------------------------------------------------
# Tarskian assembly

def _assemble_tarskian(stream: list[_Conjunct], type_decls, report: AssemblyReport,
                       context: cl.ClassifyContext | None = None) -> TarskianInterpretation:
    interp = TarskianInterpretation(type_decls=list(type_decls))
    decls = {d.symbol: d for d in type_decls}
    if context is None:
        context = cl.ClassifyContext(
            type_decls=decls,
            world_constants=set(world_type_decls(type_decls)),
        )

    # Promotions first: they decide how mapping equalities are read.
    for c in stream:
        surj = cl.match_surjectivity(c.formula)
        if surj is not None:
            context.promotions.add(surj[2])
        inj = cl.match_injectivity(c.formula)
        if inj is not None:
            context.promotions.add(inj[1])

    for c in stream:
        c.kind = cl.classify_component(c.formula, context)
        report.classified.append((c.formula, c.kind))

    _build_domains(stream, interp, decls, report)
    resolver = _ElementResolver(interp)
    _build_mappings(stream, interp, decls, resolver, report)

    for c in stream:
        if c.kind == cl.UNCLASSIFIED:
            interp.general_constraints.append(c.formula)
            report.unclassified.append(c.formula)
            report.warnings.append(warning(
                "UnclassifiedComponent",
                f"conjunct retained as a general constraint: {print_formula(c.formula)}"))
    return interp


def _build_domains(stream, interp, decls, report):
    links: dict[str, str] = {}          # domain_type -> problem_type
    promotions: dict[str, PromotionBijection] = {}  # domain_type -> bijection

    for c in stream:
        if c.kind != cl.SURJECTIVITY:
            continue
        pt, dt, fn = cl.match_surjectivity(c.formula)
        links[dt] = pt
        promotions.setdefault(dt, PromotionBijection(fn)).surjectivity = c.formula

    for c in stream:
        if c.kind != cl.INJECTIVITY:
            continue
        dt, fn = cl.match_injectivity(c.formula)
        bij = promotions.setdefault(dt, PromotionBijection(fn))
        bij.injectivity = c.formula
        if dt not in links:
            decl = decls.get(fn)
            if decl is not None and isinstance(decl.result_type(), TypeName):
                links[dt] = decl.result_type().name

    # Subrole arguments on fine-grained units corroborate the pairing.
    for c in stream:
        args = c.unit.role.subrole_args
        if c.unit.role.subrole == "domains" and args is not None:
            pt, dt = args
            if dt in links and links[dt] != pt:
                report.warnings.append(warning(
                    "InconsistentDomainPair",
                    f"subrole arguments ({pt},{dt}) disagree with {links[dt]}"))
            links.setdefault(dt, pt)

    def domain_for(dt: str) -> DomainSpec:
        pt = links.get(dt, dt)
        spec = interp.domains.get(pt)
        if spec is None:
            spec = DomainSpec(problem_type=pt, domain_type=dt, promotion=promotions.get(dt))
            if dt in BUILTIN_DOMAIN_TYPES:
                spec.infinite = InfiniteDescriptor("builtin")
                spec.distinctness = "by_builtin_type"
            interp.domains[pt] = spec
        return spec

    for c in stream:
        if c.kind == cl.SURJECTIVITY:
            pt, dt, fn = cl.match_surjectivity(c.formula)
            domain_for(dt)
        elif c.kind == cl.DOMAIN_ENUMERATION:
            var, vtype, elements = cl.match_domain_enumeration(c.formula)
            spec = domain_for(vtype if vtype is not None else UNTYPED)
            if spec.enumeration_formula is None:
                spec.enumeration_formula = c.formula
                for e in elements:
                    if e not in spec.elements:
                        spec.elements.append(e)
            elif spec.enumeration_formula != c.formula:
                report.errors.append(error(
                    "ConflictingEnumeration",
                    f"domain {spec.domain_type} is enumerated twice, differently"))
        elif c.kind == cl.ELEMENT_CLOSURE:
            vtype, constructors = cl.match_element_closure(c.formula)
            spec = domain_for(vtype if vtype is not None else UNTYPED)
            spec.infinite = InfiniteDescriptor("term_generated", c.formula, constructors)
            spec.enumeration_formula = c.formula

    # Attach distinctness evidence to the domain holding the named elements.
    for c in stream:
        if c.kind != cl.DISTINCTNESS:
            continue
        args = cl.match_distinct_predicate(c.formula)
        if args is not None:
            spec = _domain_of_elements(interp, args)
            if spec is None:
                report.errors.append(error(
                    "UnknownElement",
                    f"$distinct names elements of no declared domain: {print_formula(c.formula)}"))
                continue
            spec.distinctness = "distinct_predicate"
            spec.distinctness_formulas.append(c.formula)
            continue
        pair = cl.match_pairwise_inequality(c.formula)
        if pair is not None:
            spec = _domain_of_elements(interp, pair)
            if spec is None:
                report.errors.append(error(
                    "UnknownElement",
                    f"inequality names elements of no declared domain: {print_formula(c.formula)}"))
                continue
            if spec.distinctness == "unstated":
                spec.distinctness = "pairwise_inequalities"
            spec.distinctness_formulas.append(c.formula)
            continue
        implied = cl.match_implied_distinctness(c.formula)
        if implied is not None:
            spec = _domain_of_quantified(interp, c.formula)
            if spec is not None:
                spec.distinctness = "implied_by_formula"
                spec.distinctness_formulas.append(c.formula)
            else:
                report.unclassified.append(c.formula)

    for spec in interp.domains.values():
        if spec.distinctness == "unstated" and spec.is_finite() \
                and spec.elements and all(isinstance(e, DistinctObject) for e in spec.elements):
            spec.distinctness = "distinct_objects"


def _domain_of_elements(interp, elements):
    for spec in interp.domains.values():
        if all(e in spec.elements for e in elements):
            return spec
    return None


def _domain_of_quantified(interp, formula):
    vtype = formula.variables[0][1]
    name = vtype.name if isinstance(vtype, TypeName) else UNTYPED
    return interp.domain_for_type(name)


class _ElementResolver:
    """Resolve ground terms to canonical domain elements."""

    def __init__(self, interp: TarskianInterpretation):
        self.interp = interp
        self.constants = {}
        self.constructors = {}
        self.has_int_domain = False
        for spec in interp.domains.values():
            for e in spec.elements:
                if isinstance(e, App):
                    self.constants[e.symbol] = spec
            if spec.infinite is not None:
                if spec.infinite.kind == "builtin":
                    self.has_int_domain = True
                else:
                    for ctor in spec.infinite.constructors:
                        self.constructors[ctor] = spec
        self.promotions = interp.promotion_symbols()

    def resolve(self, term):
        """Canonical element for *term*, or None when it is not an element."""
        if isinstance(term, DistinctObject):
            return term
        if isinstance(term, Number):
            v = term.int_value()
            if v is not None:
                return Number(str(v))
            return None
        viewed = applied_head(term)
        if viewed is None:
            return None
        head, args = viewed
        if not args and head.symbol in self.constants:
            return App(head.symbol)
        if len(args) == 1 and head.symbol in self.promotions:
            return self.resolve(args[0])
        if head.symbol in self.constructors:
            resolved = []
            for a in args:
                r = self.resolve(a)
                if r is None:
                    return None
                resolved.append(r)
            return App(head.symbol, tuple(resolved))
        if head.symbol == "$sum" or head.symbol in ("$difference", "$product", "$uminus"):
            ints = []
            for a in args:
                r = self.resolve(a)
                if not isinstance(r, Number) or r.int_value() is None:
                    return None
                ints.append(r.int_value())
            return Number(str(_arith(head.symbol, ints)))
        return None


def _arith(op: str, ints: list[int]) -> int:
    if op == "$sum":
        return ints[0] + ints[1]
    if op == "$difference":
        return ints[0] - ints[1]
    if op == "$product":
        return ints[0] * ints[1]
    return -ints[0]


def _result_domain_type(interp, decls, symbol, sample_value):
    if isinstance(sample_value, bool):
        return "$o"
    if sample_value is not None:
        spec = interp.element_domain(sample_value)
        if spec is not None:
            return spec.domain_type
    decl = decls.get(symbol)
    if decl is not None and isinstance(decl.result_type(), TypeName):
        name = decl.result_type().name
        if name == "$o":
            return "$o"
        spec = interp.domain_for_type(name)
        if spec is not None:
            return spec.domain_type
        return name
    return UNTYPED


def _build_mappings(stream, interp, decls, resolver, report):
    def mapping_for(symbol, kind, arity, sample_value=None) -> SymbolMapping:
        m = interp.mappings.get(symbol)
        if m is None:
            m = SymbolMapping(symbol=symbol, kind=kind, arity=arity,
                              result_type=_result_domain_type(interp, decls, symbol, sample_value))
            interp.mappings[symbol] = m
        return m

    def add_entry(m: SymbolMapping, key: tuple, value, formula):
        if key in m.entries and m.entries[key] != value:
            report.errors.append(error(
                "ConflictingEntry",
                f"{m.symbol}({','.join(element_key(e) for e in key)}) mapped "
                f"inconsistently"))
            return
        m.entries[key] = value
        m.source_conjuncts.append(formula)

    context = cl.ClassifyContext(type_decls=decls, promotions=set(resolver.promotions))

    for c in stream:
        if c.kind == cl.FUNCTION_MAPPING:
            lam = cl.match_lambda_mapping(c.formula)
            if lam is not None:
                m = mapping_for(lam[0], "function", 1)
                m.general_clauses.append(c.formula)
                m.source_conjuncts.append(c.formula)
                continue
            if cl.match_ground_function_candidate(c.formula) is not None:
                self_done = _extract_ground_function(c.formula, resolver, mapping_for,
                                                     add_entry, report)
                if not self_done:
                    c.kind = cl.UNCLASSIFIED
                continue
            general = cl.match_general_mapping(c.formula, context)
            if general is not None:
                m = mapping_for(general[0], "function", _clause_arity(c.formula, general[0]))
                m.general_clauses.append(c.formula)
                m.source_conjuncts.append(c.formula)
            continue
        if c.kind == cl.PREDICATE_MAPPING:
            ground = cl.match_ground_predicate_literal(c.formula)
            if ground is not None:
                symbol, args, truth = ground
                elements = [resolver.resolve(a) for a in args]
                if any(e is None for e in elements):
                    bad = [print_formula(a) for a, e in zip(args, elements) if e is None]
                    report.errors.append(error(
                        "UnknownElement",
                        f"{symbol} applied to non-elements: {', '.join(bad)}"))
                    continue
                m = mapping_for(symbol, "predicate", len(elements), truth)
                m.result_type = "$o"
                add_entry(m, tuple(elements), truth, c.formula)
                continue
            general = cl.match_general_mapping(c.formula, context)
            if general is not None:
                m = mapping_for(general[0], "predicate", _clause_arity(c.formula, general[0]))
                m.result_type = "$o"
                m.general_clauses.append(c.formula)
                m.source_conjuncts.append(c.formula)
            continue


def _extract_ground_function(formula, resolver, mapping_for, add_entry, report) -> bool:
    eq: Eq = formula
    for side, other in ((eq.lhs, eq.rhs), (eq.rhs, eq.lhs)):
        value = resolver.resolve(other)
        if value is None:
            continue
        if resolver.resolve(side) is not None:
            # element = element carries no mapping; leave it unclassified
            report.warnings.append(warning(
                "AmbiguousMapping",
                f"equality between two domain elements: {print_formula(formula)}"))
            return False
        viewed = applied_head(side)
        if viewed is None:
            continue
        head, args = viewed
        if head.symbol.startswith("$"):
            continue
        elements = [resolver.resolve(a) for a in args]
        if any(e is None for e in elements):
            bad = [print_formula(a) for a, e in zip(args, elements) if e is None]
            report.errors.append(error(
                "UnknownElement",
                f"{head.symbol} applied to non-elements: {', '.join(bad)}"))
            return True
        m = mapping_for(head.symbol, "function", len(elements), value)
        add_entry(m, tuple(elements), value, formula)
        return True
    report.warnings.append(warning(
        "AmbiguousMapping",
        f"neither side of the equality resolves to a domain element: {print_formula(formula)}"))
    return False


def _clause_arity(formula, symbol: str) -> int:
    for node in walk(formula):
        viewed = applied_head(node)
        if viewed is not None and viewed[0].symbol == symbol and viewed[1]:
            return len(viewed[1])
    return 0


# ---------------------------------------------------------------------------
# Kripke assembly

def _assemble_kripke(units, interp_units, type_decls, logic_units,
                     report: AssemblyReport) -> KripkeInterpretation:
    k = KripkeInterpretation(type_decls=list(type_decls))
    k.logic = logic_units[0] if logic_units else None
    k.origin_units = [u.name for u in interp_units]
    decls = {d.symbol: d for d in type_decls}
    context = cl.ClassifyContext(type_decls=decls,
                                 world_constants=set(world_type_decls(type_decls)))

    stream = []
    for u in interp_units:
        stream.extend(_Conjunct(c, u) for c in conjuncts(u.body))

    # Worlds first; compact wrappers need them for distribution.
    wrappers: list[tuple[str, object, AnnotatedFormula]] = []
    for c in stream:
        enum = cl.match_domain_enumeration(c.formula)
        if enum is not None and enum[1] == "$world":
            c.kind = cl.WORLD_ENUMERATION
            report.classified.append((c.formula, c.kind))
            if k.worlds_formula is None:
                k.worlds_formula = c.formula
                k.worlds = [e.symbol for e in enum[2]]
            elif k.worlds_formula != c.formula:
                report.errors.append(error("ConflictingEnumeration",
                                           "worlds are enumerated twice, differently"))
            continue
        acc = cl.match_accessibility(c.formula)
        if acc is not None:
            c.kind = cl.ACCESSIBILITY_LITERAL
            report.classified.append((c.formula, c.kind))
            w1, w2, positive = acc
            (k.accessible if positive else k.not_accessible).add((w1, w2))
            k.accessibility_formulas.append(c.formula)
            continue
        local = cl.match_local_world(c.formula)
        if local is not None:
            c.kind = cl.LOCAL_WORLD_ASSIGNMENT
            report.classified.append((c.formula, c.kind))
            k.local_world = local
            k.local_world_formula = c.formula
            continue
        distinct = cl.match_distinct_predicate(c.formula)
        if distinct is not None and all(context.is_world_constant(a) for a in distinct):
            c.kind = cl.WORLD_DISTINCTNESS
            report.classified.append((c.formula, c.kind))
            k.distinct_worlds = True
            k.world_distinctness_formulas.append(c.formula)
            continue
        pair = cl.match_pairwise_inequality(c.formula)
        if pair is not None and all(context.is_world_constant(a) for a in pair):
            c.kind = cl.WORLD_DISTINCTNESS
            report.classified.append((c.formula, c.kind))
            k.distinct_worlds = True
            k.world_distinctness_formulas.append(c.formula)
            continue
        wrapped = cl.match_in_world(c.formula)
        if wrapped is not None:
            c.kind = cl.IN_WORLD_WRAPPER
            report.classified.append((c.formula, c.kind))
            wrappers.append((wrapped[0], wrapped[1], c.unit))
            continue
        c.kind = cl.UNCLASSIFIED
        report.classified.append((c.formula, c.kind))
        k.general_constraints.append(c.formula)
        report.unclassified.append(c.formula)
        report.warnings.append(warning(
            "UnclassifiedComponent",
            f"conjunct retained as a general constraint: {print_formula(c.formula)}"))

    per_world_stream: dict[str, list[_Conjunct]] = {w: [] for w in k.worlds}
    for world, body, unit in wrappers:
        targets = k.worlds if world == cl.ALL_WORLDS else [world]
        if world != cl.ALL_WORLDS and world not in per_world_stream:
            report.errors.append(error(
                "MissingWorld", f"$in_world names an undeclared world: {world}"))
            continue
        for w in targets:
            per_world_stream[w].extend(_Conjunct(c, unit) for c in conjuncts(body))

    for w in k.worlds:
        world_conjuncts = per_world_stream[w]
        existence = []
        rest = []
        for c in world_conjuncts:
            found = cl.match_element_existence(c.formula)
            if found is not None:
                c.kind = cl.ELEMENT_EXISTENCE
                report.classified.append((c.formula, c.kind))
                existence.append((found[0], found[1], c.formula))
            else:
                rest.append(c)
        world_context = cl.ClassifyContext(type_decls=decls,
                                           world_constants=set(context.world_constants))
        ws = WorldState(interpretation=_assemble_tarskian(rest, type_decls, report,
                                                          world_context))
        for dtype, element, formula in existence:
            dtype = dtype if dtype is not None else UNTYPED
            ws.existence_formulas.append((dtype, formula))
            bucket = ws.existing.setdefault(dtype, [])
            if element not in bucket:
                bucket.append(element)
        k.per_world[w] = ws

    for dtype_map in k.per_world.values():
        for dtype, elements in dtype_map.existing.items():
            spec = None
            for s in dtype_map.interpretation.domains.values():
                if s.domain_type == dtype:
                    spec = s
                    break
            if spec is not None and spec.is_finite():
                for e in elements:
                    if e not in spec.elements:
                        report.errors.append(error(
                            "UnknownElement",
                            f"existence names {element_key(e)} outside domain {dtype}"))

    if k.local_world is not None and k.local_world not in k.worlds:
        report.errors.append(error(
            "MissingWorld", f"$local_world = {k.local_world} is not a declared world"))
    return k
