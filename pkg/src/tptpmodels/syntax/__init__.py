"""Lexing, parsing, AST values, and canonical printing."""

from .ast import (
    AnnotatedFormula, App, Apply, Binary, DistinctObject, Eq, Lambda,
    LogicAssign, LogicList, LogicSpecification, MappingType, Modal, Not,
    Number, Quantified, Role, TypeDecl, TypeName, Var,
    conjuncts, conjoin, disjuncts, free_variables, head_symbol,
    applied_head, substitute, walk, is_foml_model, FOML_MODEL, TRUE, FALSE,
)
from .parser import parse_file, parse_formula, parse_role, parse_units_strict
from .printer import print_formula, print_role, print_type, print_unit, print_units
from .tokens import Token, tokenize

__all__ = [
    "AnnotatedFormula", "App", "Apply", "Binary", "DistinctObject", "Eq",
    "Lambda", "LogicAssign", "LogicList", "LogicSpecification", "MappingType",
    "Modal", "Not", "Number", "Quantified", "Role", "TypeDecl", "TypeName",
    "Var", "conjuncts", "conjoin", "disjuncts", "free_variables",
    "head_symbol", "applied_head", "substitute", "walk", "is_foml_model",
    "FOML_MODEL", "TRUE", "FALSE",
    "parse_file", "parse_formula", "parse_role", "parse_units_strict",
    "print_formula", "print_role", "print_type", "print_unit", "print_units",
    "Token", "tokenize",
]
