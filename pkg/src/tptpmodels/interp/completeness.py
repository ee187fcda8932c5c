"""Completeness analysis for finite interpretations.

A complete finite interpretation maps every function and predicate symbol on
every tuple of domain elements.  The check enumerates the expected tuples
and reports the uncovered ones; a symbol covered by an unguarded universal
clause (or a lambda mapping) counts as total without enumeration.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import product

from ..syntax.ast import Binary, Eq, Lambda, MappingType, Not, Quantified, TypeName
from .model import SymbolMapping, TarskianInterpretation, UNTYPED, element_key


@dataclass(frozen=True)
class MissingEntry:
    symbol: str
    args: tuple

    def render(self) -> str:
        if not self.args:
            return self.symbol
        return f"{self.symbol}({','.join(element_key(a) for a in self.args)})"


@dataclass
class CompletenessReport:
    missing: list = field(default_factory=list)   # MissingEntry
    skipped: list = field(default_factory=list)   # (symbol, reason)

    def ok(self) -> bool:
        return not self.missing


def _clause_is_total(clause) -> bool:
    """Unguarded universal equation/literal/biconditional covers all tuples."""
    body = clause
    while isinstance(body, Quantified) and body.quantifier == "!":
        body = body.body
    if isinstance(body, Binary) and body.op == "=>":
        return False
    if isinstance(body, Eq):
        return isinstance(body.lhs, Lambda) or isinstance(body.rhs, Lambda) or not body.negated
    if isinstance(body, Binary) and body.op == "<=>":
        return True
    return isinstance(body, (Not,)) or body is not None


def _mapping_is_total(mapping: SymbolMapping) -> bool:
    return any(_clause_is_total(c) for c in mapping.general_clauses)


def _problem_symbols(interp: TarskianInterpretation) -> dict:
    """Declared symbols that need a mapping: not types, elements, or promotions."""
    promotions = set(interp.promotion_symbols())
    elements = set()
    for spec in interp.domains.values():
        for e in spec.elements:
            if hasattr(e, "symbol"):
                elements.add(e.symbol)
    out = {}
    for decl in interp.type_decls:
        sig = decl.signature
        if isinstance(sig, TypeName) and sig.name in ("$tType", "$world"):
            continue
        if decl.symbol in promotions or decl.symbol in elements:
            continue
        out[decl.symbol] = decl
    return out


def _arg_domains(interp, decl, mapping):
    """DomainSpec per argument position, or a reason string when not enumerable."""
    if decl is not None:
        arg_types = decl.arg_types()
        specs = []
        for t in arg_types:
            if isinstance(t, MappingType):
                return "function-typed argument"
            spec = interp.domain_for_type(t.name)
            if spec is None:
                return f"no domain for type {t.name}"
            specs.append(spec)
        return specs
    arity = mapping.arity if mapping is not None else 0
    spec = interp.domain_for_type(UNTYPED)
    if arity and spec is None:
        return "untyped symbol without a default domain"
    return [spec] * arity


def completeness_check(interp: TarskianInterpretation) -> CompletenessReport:
    """List every (symbol, tuple) with no entry and no covering clause."""
    report = CompletenessReport()
    decls = _problem_symbols(interp)
    symbols = list(decls)
    for sym in interp.mappings:
        if sym not in decls:
            symbols.append(sym)

    for sym in symbols:
        mapping = interp.mappings.get(sym)
        if mapping is not None and _mapping_is_total(mapping):
            continue
        domains = _arg_domains(interp, decls.get(sym), mapping)
        if isinstance(domains, str):
            report.skipped.append((sym, domains))
            continue
        if any(not d.is_finite() for d in domains):
            report.skipped.append((sym, "infinite argument domain"))
            continue
        entries = mapping.entries if mapping is not None else {}
        for combo in product(*(d.elements for d in domains)):
            if combo not in entries:
                report.missing.append(MissingEntry(sym, combo))
    return report
