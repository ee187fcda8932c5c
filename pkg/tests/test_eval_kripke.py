import pytest

from brute import KripkeTables, kripke_eval
from conftest import load_units
from tptpmodels.evaluate import (
    FALSE_V, TRUE_V, eval_at_world, eval_everywhere,
)
from tptpmodels.interp import assemble
from tptpmodels.syntax import parse_formula


@pytest.fixture(scope="module")
def weather():
    interp, report = assemble(load_units("nxf_weather_model.s"))
    assert report.ok()
    return interp


def oracle_tables():
    worlds = ["w1", "w2", "w3"]
    accessible = {("w1", "w1"), ("w2", "w2"), ("w1", "w2"), ("w2", "w3"), ("w3", "w1")}
    domains = {w: {"child": ["child_1"], "adult": ["adult_1"]} for w in worlds}
    constants = {w: {"charly": "child_1"} for w in worlds}
    atoms = {
        w: {
            ("rains", ()): True,
            ("quiet", ("child_1",)): True,
            ("sleepy", ("adult_1",)): w == "w1",
        }
        for w in worlds
    }
    return KripkeTables(worlds, accessible, "w1", domains, constants, atoms)


def test_box_of_truth_is_true_at_every_world(weather):
    f = parse_formula("{$necessary} @ ( $true )")
    for w in weather.worlds:
        assert eval_at_world(f, weather, w) == TRUE_V


def test_possibly_not_raining_is_false_when_it_always_rains(weather):
    f = parse_formula("{$possible} @ ( ~ rains )")
    assert eval_at_world(f, weather, "w1") == FALSE_V


def test_box_follows_the_single_accessible_world(weather):
    # w3 reaches only w1, so box means truth at w1.
    box_sleepy = parse_formula("{$necessary} @ ( ? [A: adult] : sleepy(A) )")
    assert eval_at_world(box_sleepy, weather, "w3") == \
        eval_at_world(parse_formula("? [A: adult] : sleepy(A)"), weather, "w1") == TRUE_V
    assert eval_at_world(box_sleepy, weather, "w1") == FALSE_V


def test_unmentioned_pairs_are_not_accessible(weather):
    assert eval_at_world(
        parse_formula("$accessible_world(w1,w2)"), weather, "w1") == TRUE_V
    assert eval_at_world(
        parse_formula("$accessible_world(w1,w3)"), weather, "w1") == FALSE_V


def test_unknown_world_is_reported():
    interp, _ = assemble(load_units("nxf_weather_model.s"))
    verdict = eval_at_world(parse_formula("rains"), interp, "w9")
    assert verdict.is_unknown()


def test_agreement_with_the_brute_force_kripke_oracle(weather):
    tables = oracle_tables()
    probes = [
        "rains",
        "~ rains",
        "{$possible} @ ( ~ rains )",
        "{$necessary} @ ( rains )",
        "{$possible} @ ( rains )",
        "{$necessary} @ ( {$necessary} @ ( rains ) )",
        "{$possible} @ ( ? [A: adult] : sleepy(A) )",
        "{$necessary} @ ( ? [A: adult] : sleepy(A) )",
        "! [C: child] : quiet(C)",
        "! [C: child] : ~ ( ~ quiet(C) & ? [A: adult] : sleepy(A) )",
        "? [A: adult] : sleepy(A)",
        "charly = charly",
        "{$possible} @ ( {$possible} @ ( ? [A: adult] : sleepy(A) ) )",
        "quiet(charly) <=> rains",
        "quiet(charly) <~> ( ? [A: adult] : sleepy(A) )",
    ]
    for text in probes:
        f = parse_formula(text)
        for w in weather.worlds:
            expected = TRUE_V if kripke_eval(f, tables, w) else FALSE_V
            assert eval_at_world(f, weather, w) == expected, (text, w)


def test_global_truth_means_true_at_every_world(weather):
    f = parse_formula("rains")
    assert eval_everywhere(f, weather) == TRUE_V
    g = parse_formula("? [A: adult] : sleepy(A)")
    assert eval_everywhere(g, weather) == FALSE_V
    assert all(eval_at_world(f, weather, w) == TRUE_V for w in weather.worlds)
