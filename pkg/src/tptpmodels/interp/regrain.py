"""Regraining: redistribute interpretation components across unit structures.

The three granularities carry identical component formulas, only bucketed
differently, so regraining assembles the input once and re-emits the stored
formulas under the target unit layout.  assemble(regrain(U, g)) equals
assemble(U) for every granularity g.
"""

from __future__ import annotations

import re

from ..errors import AssemblyError
from ..syntax.ast import AnnotatedFormula, App, Role, conjoin
from .assemble import assemble, upgrade_legacy
from .model import KripkeInterpretation, TarskianInterpretation, WorldState

LEVELS = ("coarse", "medium", "fine")

_SUFFIXES = ("_interpretation", "_domains", "_mappings", "_worlds")


def _stem(name: str) -> str:
    for suffix in _SUFFIXES:
        if name.endswith(suffix):
            return name[: -len(suffix)]
    m = re.match(r"(.*)_(?:domain|mapping)_[A-Za-z0-9_]+\Z", name)
    if m:
        return m.group(1)
    return name


def _ident(text: str) -> str:
    out = re.sub(r"[^A-Za-z0-9_]", "", text.replace("$", ""))
    return out or "x"


def _unit(language: str, name: str, role: Role, formulas: list) -> AnnotatedFormula:
    return AnnotatedFormula(language, name, role, conjoin(formulas))


def regrain(units: list[AnnotatedFormula], target: str) -> list[AnnotatedFormula]:
    """Re-emit *units* with the interpretation split at *target* granularity."""
    if target not in LEVELS:
        raise ValueError(f"unknown granularity {target!r}")
    units = upgrade_legacy(units)
    interp, report = assemble(units)
    if not report.ok():
        raise AssemblyError(report.errors)

    replaced = [u for u in units if u.role.is_interpretation() and u.role.subrole != "herbrand"]
    if not replaced:
        return list(units)
    language = replaced[0].language
    stem = _stem(replaced[0].name)

    if isinstance(interp, KripkeInterpretation):
        new_units = _kripke_units(interp, target, language, stem)
    else:
        new_units = _tarskian_units(interp, target, language, stem)

    out: list[AnnotatedFormula] = []
    inserted = False
    for u in units:
        if u in replaced:
            if not inserted:
                out.extend(new_units)
                inserted = True
            continue
        out.append(u)
    return out


# ---------------------------------------------------------------------------

def _domain_role(spec, with_args: bool) -> Role:
    if not with_args:
        return Role("interpretation", "domains")
    return Role("interpretation", "domains", (spec.problem_type, spec.domain_type))


def _mapping_role(mapping, with_args: bool) -> Role:
    if not with_args:
        return Role("interpretation", "mappings")
    return Role("interpretation", "mappings", (mapping.symbol, mapping.result_type))


def _tarskian_units(interp: TarskianInterpretation, target: str, language: str,
                    stem: str) -> list[AnnotatedFormula]:
    domain_parts = [(spec, spec.component_formulas()) for spec in interp.domains.values()]
    mapping_parts = [(m, list(m.source_conjuncts)) for m in interp.mappings.values()]
    extras = list(interp.general_constraints)

    if target == "coarse":
        formulas = [f for _, fs in domain_parts for f in fs]
        formulas += [f for _, fs in mapping_parts for f in fs]
        formulas += extras
        return [_unit(language, f"{stem}_interpretation", Role("interpretation"), formulas)]

    if target == "medium":
        domain_formulas = [f for _, fs in domain_parts for f in fs]
        mapping_formulas = [f for _, fs in mapping_parts for f in fs] + extras
        return [
            _unit(language, f"{stem}_domains", Role("interpretation", "domains"),
                  domain_formulas),
            _unit(language, f"{stem}_mappings", Role("interpretation", "mappings"),
                  mapping_formulas),
        ]

    out = []
    for spec, fs in domain_parts:
        out.append(_unit(language, f"{stem}_domain_{_ident(spec.problem_type)}",
                         _domain_role(spec, True), fs))
    for m, fs in mapping_parts:
        out.append(_unit(language, f"{stem}_mapping_{_ident(m.symbol)}",
                         _mapping_role(m, True), fs))
    if extras:
        out.append(_unit(language, f"{stem}_constraints", Role("interpretation"), extras))
    return out


# ---------------------------------------------------------------------------

def _world_wrap(world: str, formulas: list):
    return App("$in_world", (App(world), conjoin(formulas)))


def _worlds_formulas(k: KripkeInterpretation) -> list:
    out = []
    if k.worlds_formula is not None:
        out.append(k.worlds_formula)
    out.extend(k.world_distinctness_formulas)
    out.extend(k.accessibility_formulas)
    if k.local_world_formula is not None:
        out.append(k.local_world_formula)
    return out


def _world_domain_formulas(ws: WorldState, problem_type: str | None = None) -> list:
    out = []
    for spec in ws.interpretation.domains.values():
        if problem_type is not None and spec.problem_type != problem_type:
            continue
        out.extend(spec.component_formulas())
        out.extend(f for dtype, f in ws.existence_formulas if dtype == spec.domain_type)
    return out


def _world_mapping_formulas(ws: WorldState, symbol: str | None = None) -> list:
    out = []
    for m in ws.interpretation.mappings.values():
        if symbol is not None and m.symbol != symbol:
            continue
        out.extend(m.source_conjuncts)
    if symbol is None:
        out.extend(ws.interpretation.general_constraints)
    return out


def _kripke_units(k: KripkeInterpretation, target: str, language: str,
                  stem: str) -> list[AnnotatedFormula]:
    worlds_formulas = _worlds_formulas(k)
    extras = list(k.general_constraints)

    def wrapped(per_world_formulas) -> list:
        out = []
        for w in k.worlds:
            formulas = per_world_formulas(k.per_world[w])
            if formulas:
                out.append(_world_wrap(w, formulas))
        return out

    if target == "coarse":
        formulas = list(worlds_formulas)
        formulas += wrapped(lambda ws: _world_domain_formulas(ws) + _world_mapping_formulas(ws))
        formulas += extras
        return [_unit(language, f"{stem}_interpretation", Role("interpretation"), formulas)]

    units = [_unit(language, f"{stem}_worlds", Role("interpretation", "worlds"),
                   worlds_formulas)]
    if target == "medium":
        units.append(_unit(language, f"{stem}_domains", Role("interpretation", "domains"),
                           wrapped(_world_domain_formulas)))
        units.append(_unit(language, f"{stem}_mappings", Role("interpretation", "mappings"),
                           wrapped(_world_mapping_formulas) + extras))
        return units

    domains_seen: dict[str, object] = {}
    mappings_seen: dict[str, object] = {}
    for w in k.worlds:
        ws = k.per_world[w]
        for pt, spec in ws.interpretation.domains.items():
            domains_seen.setdefault(pt, spec)
        for sym, m in ws.interpretation.mappings.items():
            mappings_seen.setdefault(sym, m)
    for pt, spec in domains_seen.items():
        units.append(_unit(language, f"{stem}_domain_{_ident(pt)}", _domain_role(spec, True),
                           wrapped(lambda ws, pt=pt: _world_domain_formulas(ws, pt))))
    for sym, m in mappings_seen.items():
        units.append(_unit(language, f"{stem}_mapping_{_ident(sym)}", _mapping_role(m, True),
                           wrapped(lambda ws, sym=sym: _world_mapping_formulas(ws, sym))))
    if extras:
        units.append(_unit(language, f"{stem}_constraints", Role("interpretation"), extras))
    return units
