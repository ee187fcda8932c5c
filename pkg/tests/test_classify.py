import pytest

from tptpmodels.interp import classify_component, ClassifyContext
from tptpmodels.interp import classify as cl
from tptpmodels.syntax import TypeDecl, TypeName, parse_formula


def ctx(**kwargs):
    return ClassifyContext(**kwargs)


WORLD_CTX = ClassifyContext(world_constants={"w1", "w2", "w3"})


@pytest.mark.parametrize("text,expected", [
    ('! [X] : ( X = "a" | X = "f" | X = "john" | X = "gotA" )', cl.DOMAIN_ENUMERATION),
    ("$distinct(d_garfield,d_arlene,d_nermal)", cl.DISTINCTNESS),
    ("! [H: human] : ? [DH: d_human] : H = d2human(DH)", cl.SURJECTIVITY),
    ("$true", cl.UNCLASSIFIED),
    ("! [DC: cat] : ( DC = d_garfield | DC = d_arlene )", cl.DOMAIN_ENUMERATION),
    ("! [DH: d_human] : DH = d_jon", cl.DOMAIN_ENUMERATION),
    ("! [DH1: d_human,DH2: d_human] : ( d2human(DH1) = d2human(DH2) => DH1 = DH2 )",
     cl.INJECTIVITY),
    ("! [I: peano] : ( I = zero | ? [P: peano] : I = s(P) )", cl.ELEMENT_CLOSURE),
    ("! [I1: peano,I2: peano] : ( peano_less(I1,I2) => I1 != I2 )", cl.DISTINCTNESS),
    ("d_a != d_b", cl.DISTINCTNESS),
    ('grade_of("john") = "f"', cl.FUNCTION_MAPPING),
    ("jon = d2human(d_jon)", cl.FUNCTION_MAPPING),
    ('~ created_equal("a","john")', cl.PREDICATE_MAPPING),
    ("rains", cl.PREDICATE_MAPPING),
    ("! [DC: d_cat] : loves(d2cat(DC)) = d2cat(d_garfield)", cl.FUNCTION_MAPPING),
    ("! [I: $int] : ( $greatereq(I,0) => child_of(int2person(I)) = int2person($sum(I,1)) )",
     cl.FUNCTION_MAPPING),
    ("! [A: peano,D: peano] : ( is_descendant(peano2person(A),peano2person(D)) "
     "<=> peano_less(A,D) )", cl.PREDICATE_MAPPING),
    ("! [I: peano] : ~ peano_less(I,zero)", cl.PREDICATE_MAPPING),
    ("? [CD: child_d] : CD = child_1", cl.ELEMENT_EXISTENCE),
    ("mix = ( ^ [F: syrup > beverage] : ( d2beverage @ d_coffee ) )", cl.FUNCTION_MAPPING),
    ("p | q", cl.UNCLASSIFIED),
])
def test_component_kinds(text, expected):
    context = ctx(promotions={"d2human", "d2cat", "d2beverage", "int2person",
                              "peano2person"})
    assert classify_component(parse_formula(text), context) == expected


@pytest.mark.parametrize("text,expected", [
    ("! [W: $world] : ( W = w1 | W = w2 | W = w3 )", cl.WORLD_ENUMERATION),
    ("$distinct(w1,w2,w3)", cl.WORLD_DISTINCTNESS),
    ("$accessible_world(w1,w2)", cl.ACCESSIBILITY_LITERAL),
    ("~ $accessible_world(w3,w3)", cl.ACCESSIBILITY_LITERAL),
    ("$local_world = w1", cl.LOCAL_WORLD_ASSIGNMENT),
    ("w1 = $local_world", cl.LOCAL_WORLD_ASSIGNMENT),
    ("$in_world(w1,rains)", cl.IN_WORLD_WRAPPER),
    ("! [W: $world] : $in_world(W,rains)", cl.IN_WORLD_WRAPPER),
])
def test_kripke_component_kinds(text, expected):
    assert classify_component(parse_formula(text), WORLD_CTX) == expected


def test_distinct_over_elements_is_not_world_distinctness():
    f = parse_formula("$distinct(d_garfield,d_arlene)")
    assert classify_component(f, WORLD_CTX) == cl.DISTINCTNESS


def test_equality_flips_are_tolerated():
    lhs_first = parse_formula("! [H: human] : ? [DH: d_human] : H = d2human(DH)")
    rhs_first = parse_formula("! [H: human] : ? [DH: d_human] : d2human(DH) = H")
    context = ctx()
    assert classify_component(lhs_first, context) == cl.SURJECTIVITY
    assert classify_component(rhs_first, context) == cl.SURJECTIVITY
