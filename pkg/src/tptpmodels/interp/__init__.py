"""Classification and assembly of interpretation-formulae into model objects."""

from .assemble import assemble, assemble_strict, detect_kripke, upgrade_legacy
from .classify import (
    ClassifyContext, classify_component,
    DOMAIN_ENUMERATION, ELEMENT_CLOSURE, ELEMENT_EXISTENCE, DISTINCTNESS,
    SURJECTIVITY, INJECTIVITY, FUNCTION_MAPPING, PREDICATE_MAPPING,
    WORLD_ENUMERATION, WORLD_DISTINCTNESS, ACCESSIBILITY_LITERAL,
    LOCAL_WORLD_ASSIGNMENT, IN_WORLD_WRAPPER, UNCLASSIFIED,
)
from .completeness import CompletenessReport, MissingEntry, completeness_check
from .model import (
    AssemblyReport, DomainSpec, InfiniteDescriptor, KripkeInterpretation,
    PromotionBijection, SymbolMapping, TarskianInterpretation, WorldState,
    element_key, is_kripke, UNTYPED,
)
from .regrain import LEVELS, regrain

__all__ = [
    "assemble", "assemble_strict", "detect_kripke", "upgrade_legacy",
    "ClassifyContext", "classify_component",
    "DOMAIN_ENUMERATION", "ELEMENT_CLOSURE", "ELEMENT_EXISTENCE",
    "DISTINCTNESS", "SURJECTIVITY", "INJECTIVITY", "FUNCTION_MAPPING",
    "PREDICATE_MAPPING", "WORLD_ENUMERATION", "WORLD_DISTINCTNESS",
    "ACCESSIBILITY_LITERAL", "LOCAL_WORLD_ASSIGNMENT", "IN_WORLD_WRAPPER",
    "UNCLASSIFIED",
    "CompletenessReport", "MissingEntry", "completeness_check",
    "AssemblyReport", "DomainSpec", "InfiniteDescriptor",
    "KripkeInterpretation", "PromotionBijection", "SymbolMapping",
    "TarskianInterpretation", "WorldState", "element_key", "is_kripke",
    "UNTYPED", "LEVELS", "regrain",
]
