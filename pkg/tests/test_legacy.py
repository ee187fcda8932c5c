from conftest import load_units
from tptpmodels.interp import assemble, upgrade_legacy
from tptpmodels.syntax import parse_file, print_role, print_unit


def test_fi_domain_becomes_interpretation_domains():
    units, _ = parse_file("fof(d,fi_domain,! [X] : X = \"a\").")
    upgraded = upgrade_legacy(units)
    assert print_unit(upgraded[0]) == 'fof(d,interpretation-domains,! [X] : X = "a").'


def test_fi_functors_and_fi_predicates_become_mappings():
    units, _ = parse_file("""
        fof(f,fi_functors,g("a") = "a").
        fof(p,fi_predicates,q("a")).
    """)
    upgraded = upgrade_legacy(units)
    assert [print_role(u.role) for u in upgraded] == \
        ["interpretation-mappings", "interpretation-mappings"]


def test_other_units_are_unchanged():
    units, _ = parse_file("fof(a,axiom,$true).")
    assert upgrade_legacy(units) == units


def test_upgraded_legacy_assembles_like_the_new_format():
    legacy = load_units("fof_grades_model_legacy.s")
    new = load_units("fof_grades_model_medium.s")
    built_legacy, report = assemble(upgrade_legacy(legacy))
    assert report.ok()
    built_new, _ = assemble(new)
    assert built_legacy == built_new


def test_assemble_upgrades_on_its_own():
    legacy = load_units("fof_grades_model_legacy.s")
    built, report = assemble(legacy)
    assert report.ok()
    coarse, _ = assemble(load_units("fof_grades_model.s"))
    assert built == coarse
