from itertools import combinations, product

from conftest import load_units
from tptpmodels.evaluate import (
    Environment, FALSE_V, TRUE_V, eval_formula, eval_term, unknown,
)
from tptpmodels.interp import assemble
from tptpmodels.syntax import App, DistinctObject, Number, parse_formula


def fof_model():
    interp, report = assemble(load_units("fof_grades_model.s"))
    assert report.ok()
    return interp


def test_ground_function_terms_resolve_via_entries():
    interp = fof_model()
    assert eval_term(parse_formula('grade_of("john")'), interp) == DistinctObject("f")
    assert eval_term(parse_formula('grade_of(grade_of("john"))'), interp) == \
        DistinctObject("a")


def test_bound_variables_resolve_via_the_environment():
    interp, _ = assemble(load_units("tff_cats_reused.s"))
    env = Environment().bind("X", "cat", App("d_nermal"))
    assert eval_term(parse_formula("X"), interp, env) == App("d_nermal")


def test_promotion_applications_resolve_to_the_element():
    interp, _ = assemble(load_units("tff_cats_separate.s"))
    assert eval_term(parse_formula("d2cat(d_garfield)"), interp) == App("d_garfield")
    assert eval_term(parse_formula("loves(d2cat(d_nermal))"), interp) == App("d_garfield")
    assert eval_term(parse_formula("jon"), interp) == App("d_jon")


def test_integer_model_ground_terms_compute_exactly():
    interp, _ = assemble(load_units("tff_lineage_int.s"))
    five_child = eval_term(parse_formula("child_of(int2person(5))"), interp)
    assert five_child == eval_term(parse_formula("int2person(6)"), interp)
    assert five_child == Number("6")
    huge = eval_term(parse_formula("child_of(int2person(99999999999999999999))"), interp)
    assert huge == Number("100000000000000000000")


def test_negative_tuples_are_not_given():
    interp, _ = assemble(load_units("tff_lineage_int.s"))
    verdict = eval_term(parse_formula("child_of(int2person(-3))"), interp)
    assert verdict.is_unknown()
    verdict = eval_formula(
        parse_formula("is_descendant(int2person(-1),int2person(3))"), interp)
    assert verdict.is_unknown()


def test_predicate_literals():
    interp = fof_model()
    assert eval_formula(parse_formula('created_equal("john","gotA")'), interp) == TRUE_V
    assert eval_formula(parse_formula('created_equal("a","john")'), interp) == FALSE_V


def test_connective_tables():
    interp = fof_model()
    assert eval_formula(parse_formula("$true & ~ $false"), interp) == TRUE_V
    assert eval_formula(parse_formula("$false | $true"), interp) == TRUE_V
    assert eval_formula(parse_formula("$true <~> $true"), interp) == FALSE_V
    assert eval_formula(parse_formula("$false => $true"), interp) == TRUE_V
    assert eval_formula(parse_formula("$true <= $false"), interp) == TRUE_V
    assert eval_formula(parse_formula("$true ~| $false"), interp) == FALSE_V
    assert eval_formula(parse_formula("$true ~& $false"), interp) == TRUE_V


def test_unknown_absorption():
    interp = fof_model()
    gap = parse_formula('mystery("a")')
    assert eval_formula(gap, interp).is_unknown()
    lifted_or = eval_formula(parse_formula('$true | mystery("a")'), interp)
    assert lifted_or == TRUE_V
    lifted_and = eval_formula(parse_formula('$false & mystery("a")'), interp)
    assert lifted_and == FALSE_V
    assert eval_formula(parse_formula('$true & mystery("a")'), interp).is_unknown()
    assert eval_formula(parse_formula('$false | mystery("a")'), interp).is_unknown()


def test_unknown_always_carries_a_reason():
    interp = fof_model()
    verdict = eval_formula(parse_formula('mystery("a")'), interp)
    assert verdict.is_unknown() and verdict.reason
    assert unknown("x").reason == "x"


def test_quantifiers_enumerate_the_finite_domain():
    interp = fof_model()
    assert eval_formula(parse_formula("! [X] : ? [Y] : grade_of(X) = Y"), interp) == TRUE_V
    assert eval_formula(parse_formula('? [X] : grade_of(X) = "f"'), interp) == TRUE_V
    assert eval_formula(parse_formula('! [X] : grade_of(X) = "a"'), interp) == FALSE_V


def test_quantifier_duality():
    interp = fof_model()
    for body in ('grade_of(X) = "a"', 'created_equal(X,"john")', 'X = "f"'):
        negated_forall = eval_formula(parse_formula(f"~ ( ! [X] : {body} )"), interp)
        exists_negated = eval_formula(parse_formula(f"? [X] : ~ ( {body} )"), interp)
        assert negated_forall == exists_negated


def test_infinite_quantifier_yields_unknown():
    interp, _ = assemble(load_units("tff_lineage_int.s"))
    verdict = eval_formula(
        parse_formula("! [P: person] : is_descendant(P,child_of(P))"), interp)
    assert verdict.is_unknown()
    assert "InfiniteQuantifier" in verdict.reason


def test_distinct_object_semantics():
    interp = fof_model()
    assert eval_formula(parse_formula('"a" = "f"'), interp) == FALSE_V
    assert eval_formula(parse_formula('"a" = "a"'), interp) == TRUE_V
    assert eval_formula(parse_formula('"a" != "f"'), interp) == TRUE_V


def test_distinct_predicate_matches_pairwise_inequalities():
    interp = fof_model()
    names = ["a", "f", "john", "gotA"]
    for n in range(2, 6):
        for picked in product(names, repeat=min(n, 4)):
            args = ",".join(f'"{p}"' for p in picked)
            expected = all(x != y for x, y in combinations(picked, 2))
            pairwise = " & ".join(
                f'"{x}" != "{y}"' for x, y in combinations(picked, 2))
            got = eval_formula(parse_formula(f"$distinct({args})"), interp)
            ref = eval_formula(parse_formula(pairwise), interp)
            assert got == ref == (TRUE_V if expected else FALSE_V)


def test_peano_ground_terms_via_clauses():
    interp, _ = assemble(load_units("tff_lineage_peano.s"))
    child = eval_term(parse_formula("child_of(bob)"), interp)
    assert child == App("s", (App("zero"),))
    assert eval_formula(parse_formula("is_descendant(bob,child_of(bob))"), interp) == TRUE_V
    assert eval_formula(
        parse_formula("is_descendant(bob,child_of(child_of(bob)))"), interp) == TRUE_V
    assert eval_formula(parse_formula("is_descendant(bob,bob)"), interp) == FALSE_V


def test_compacted_mapping_agrees_with_expanded_entries():
    compact, _ = assemble(load_units("tff_cats_compact.s"))
    expanded, _ = assemble(load_units("tff_cats_separate.s"))
    for element in ("d_garfield", "d_arlene", "d_nermal"):
        term = parse_formula(f"loves(d2cat({element}))")
        assert eval_term(term, compact) == eval_term(term, expanded)
    probe = parse_formula("! [C: cat] : loves(C) = d2cat(d_garfield)")
    assert eval_formula(probe, compact) == eval_formula(probe, expanded) == TRUE_V


def test_lambda_mappings_beta_reduce():
    interp, _ = assemble(load_units("thf_coffee_model.s"))
    value = eval_term(parse_formula("mix @ ( ^ [DS: d_syrup] : coffee )"), interp)
    assert value == App("d_coffee")
    assert eval_formula(parse_formula("hot @ ( heat @ coffee )"), interp) == TRUE_V


def test_function_type_quantification_is_unknown():
    interp, _ = assemble(load_units("thf_coffee_model.s"))
    verdict = eval_formula(
        parse_formula("! [F: syrup > beverage] : ( ( mix @ F ) = ( mix @ F ) )"), interp)
    assert verdict.is_unknown()
    assert "HigherOrderQuantifier" in verdict.reason
