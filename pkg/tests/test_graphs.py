import pytest

from conftest import load_units
from dotcheck import parse_dot
from tptpmodels.graphs import to_dot, render
from tptpmodels.interp import TarskianInterpretation, assemble
from tptpmodels.syntax import parse_file


def test_worlds_view_counts():
    interp, _ = assemble(load_units("nxf_weather_model.s"))
    graph = parse_dot(to_dot(interp, "worlds"))
    assert len(graph.nodes) == 3
    assert len(graph.edges) == 5


def test_worlds_view_marks_the_local_world():
    interp, _ = assemble(load_units("nxf_weather_model.s"))
    text = to_dot(interp, "worlds")
    assert '"w1" [peripheries=2];' in text


def test_domains_view_has_the_loves_loop():
    interp, _ = assemble(load_units("tff_cats_reused.s"))
    text = to_dot(interp, "domains")
    graph = parse_dot(text)
    assert ('"cat.d_garfield"', '"cat.d_garfield"') in graph.edges
    assert 'label="loves"' in text


def test_empty_interpretation_gives_an_empty_graph():
    units, _ = parse_file("fof(i,interpretation,$true).")
    interp, _ = assemble(units)
    graph = parse_dot(to_dot(interp, "domains"))
    assert not graph.nodes and not graph.edges


def test_every_fixture_view_is_valid_dot():
    for name in ("fof_grades_model.s", "tff_cats_reused.s", "tff_cats_separate.s",
                 "thf_coffee_model.s"):
        interp, _ = assemble(load_units(name))
        parse_dot(to_dot(interp, "domains"))
    kripke, _ = assemble(load_units("nxf_weather_model.s"))
    parse_dot(to_dot(kripke, "worlds"))
    parse_dot(to_dot(kripke, "domains"))  # local world's Tarskian interpretation


def test_distinct_object_elements_are_escaped():
    interp, _ = assemble(load_units("fof_grades_model.s"))
    text = to_dot(interp, "domains")
    parse_dot(text)
    assert '\\"john\\"' in text


def test_worlds_view_needs_a_kripke_model():
    with pytest.raises(ValueError):
        to_dot(TarskianInterpretation(), "worlds")


def test_render_writes_image_files(tmp_path):
    kripke, _ = assemble(load_units("nxf_weather_model.s"))
    out = tmp_path / "worlds.png"
    render(kripke, "worlds", str(out))
    assert out.stat().st_size > 0

    flat, _ = assemble(load_units("tff_cats_reused.s"))
    out2 = tmp_path / "domains.png"
    render(flat, "domains", str(out2))
    assert out2.stat().st_size > 0
