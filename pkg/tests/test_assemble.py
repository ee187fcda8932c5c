from conftest import load_units
from tptpmodels.interp import (
    KripkeInterpretation, TarskianInterpretation, assemble,
)
from tptpmodels.syntax import App, DistinctObject, parse_file


def E(symbol):
    return App(symbol)


def D(text):
    return DistinctObject(text)


def test_reused_type_model_assembles():
    interp, report = assemble(load_units("tff_cats_reused.s"))
    assert report.ok()
    assert isinstance(interp, TarskianInterpretation)
    assert list(interp.domains) == ["human", "cat"]
    cat = interp.domains["cat"]
    assert cat.domain_type == "cat"
    assert cat.elements == [E("d_garfield"), E("d_arlene"), E("d_nermal")]
    assert cat.distinctness == "distinct_predicate"
    human = interp.domains["human"]
    assert human.elements == [E("d_jon")]
    assert interp.mappings["loves"].entries[(E("d_garfield"),)] == E("d_garfield")
    assert interp.mappings["owns"].entries[(E("d_jon"), E("d_nermal"))] is False
    assert interp.mappings["jon"].entries[()] == E("d_jon")


def test_untyped_model_uses_the_default_domain():
    interp, report = assemble(load_units("fof_grades_model.s"))
    assert report.ok()
    spec = interp.domains["$i"]
    assert spec.elements == [D("a"), D("f"), D("john"), D("gotA")]
    assert spec.distinctness == "distinct_objects"
    assert interp.mappings["grade_of"].entries[(D("john"),)] == D("f")
    assert interp.mappings["created_equal"].entries[(D("a"), D("john"))] is False
    assert len(interp.mappings["created_equal"].entries) == 16


def test_promotion_model_strips_promotions_in_entries():
    interp, report = assemble(load_units("tff_cats_separate.s"))
    assert report.ok()
    cat = interp.domains["cat"]
    assert cat.domain_type == "d_cat"
    assert cat.promotion is not None
    assert cat.promotion.function_symbol == "d2cat"
    assert cat.promotion.surjectivity is not None
    assert cat.promotion.injectivity is not None
    assert interp.mappings["loves"].entries[(E("d_garfield"),)] == E("d_garfield")
    assert interp.mappings["loves"].result_type == "d_cat"
    assert interp.mappings["jon"].entries[()] == E("d_jon")


def test_empty_interpretation_keeps_vacuous_conjunct():
    units, _ = parse_file("fof(i,interpretation,$true).")
    interp, report = assemble(units)
    assert report.ok()
    assert not interp.domains and not interp.mappings
    assert report.unclassified == [App("$true")]
    assert [k for _, k in report.classified] == ["unclassified"]


def test_assembly_totality_partitions_conjuncts():
    units = load_units("tff_cats_reused.s")
    interp, report = assemble(units)
    classified_formulas = [f for f, kind in report.classified if kind != "unclassified"]
    total = len(classified_formulas) + len(report.unclassified)
    assert total == len(report.classified)
    assert total == 11  # conjuncts of the single interpretation unit


def test_conflicting_entries_are_an_error():
    units, _ = parse_file("""
        fof(i,interpretation,
            ( ! [X] : ( X = "a" | X = "b" )
            & f("a") = "a"
            & f("a") = "b" )).
    """)
    _, report = assemble(units)
    assert any(d.code == "ConflictingEntry" for d in report.errors)


def test_identical_duplicate_entries_merge_silently():
    units, _ = parse_file("""
        fof(i,interpretation,
            ( ! [X] : ( X = "a" | X = "b" )
            & f("a") = "b"
            & f("a") = "b" )).
    """)
    interp, report = assemble(units)
    assert report.ok()
    assert interp.mappings["f"].entries[(D("a"),)] == D("b")


def test_unknown_element_is_an_error():
    units, _ = parse_file("""
        tff(t,type,cat: $tType).
        tff(e,type,d_a: cat).
        tff(i,interpretation,
            ( ! [C: cat] : C = d_a
            & loves(d_mystery) = d_a )).
    """)
    _, report = assemble(units)
    assert any(d.code == "UnknownElement" for d in report.errors)


def test_kripke_model_assembles():
    interp, report = assemble(load_units("nxf_weather_model.s"))
    assert report.ok()
    assert isinstance(interp, KripkeInterpretation)
    assert interp.worlds == ["w1", "w2", "w3"]
    assert interp.local_world == "w1"
    assert interp.distinct_worlds
    assert interp.accessible == {("w1", "w1"), ("w2", "w2"), ("w1", "w2"),
                                 ("w2", "w3"), ("w3", "w1")}
    assert interp.not_accessible == {("w1", "w3"), ("w2", "w1"),
                                     ("w3", "w2"), ("w3", "w3")}
    w1 = interp.per_world["w1"]
    assert w1.existing == {"child_d": [E("child_1")], "adult_d": [E("adult_1")]}
    assert w1.interpretation.mappings["sleepy"].entries[(E("adult_1"),)] is True
    assert interp.per_world["w2"].interpretation.mappings["sleepy"].entries[
        (E("adult_1"),)] is False
    assert interp.logic is not None and interp.logic.name == "weather_logic"


def test_kripke_detection_requires_world_machinery():
    tarskian, _ = assemble(load_units("tff_cats_reused.s"))
    kripke, _ = assemble(load_units("nxf_weather_model.s"))
    assert isinstance(tarskian, TarskianInterpretation)
    assert isinstance(kripke, KripkeInterpretation)


def test_in_world_naming_unknown_world_is_an_error():
    units, _ = parse_file("""
        tff(w1_decl,type,w1: $world).
        tff(i,interpretation,
            ( ! [W: $world] : W = w1
            & $in_world(w9,rains) )).
    """)
    _, report = assemble(units)
    assert any(d.code == "MissingWorld" for d in report.errors)


def test_local_world_must_be_declared():
    units, _ = parse_file("""
        tff(w1_decl,type,w1: $world).
        tff(i,interpretation,
            ( ! [W: $world] : W = w1
            & $local_world = w9 )).
    """)
    _, report = assemble(units)
    assert any(d.code == "MissingWorld" for d in report.errors)


def test_infinite_domains():
    peano, rp = assemble(load_units("tff_lineage_peano.s"))
    assert rp.ok()
    spec = peano.domains["person"]
    assert not spec.is_finite()
    assert spec.infinite.kind == "term_generated"
    assert spec.infinite.constructors == ("zero", "s")
    assert spec.distinctness == "implied_by_formula"

    integer, ri = assemble(load_units("tff_lineage_int.s"))
    assert ri.ok()
    spec = integer.domains["person"]
    assert spec.domain_type == "$int"
    assert spec.infinite.kind == "builtin"
    assert spec.distinctness == "by_builtin_type"
    assert spec.promotion.function_symbol == "int2person"
