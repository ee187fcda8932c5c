"""Canonical printing of annotated formulae.

The printer is a normalizer rather than a formatter: whitespace and
redundant parentheses from the input are not preserved, but printing any
parsed unit yields text that re-parses to an identical AST, and printing is
a fixpoint (print . parse . print == print).
"""

from __future__ import annotations

from .ast import (
    AnnotatedFormula, App, Apply, Binary, DistinctObject, Eq, Lambda,
    LogicAssign, LogicList, MappingType, Modal, Not, Number, Quantified,
    Role, TypeDecl, TypeName, Var,
    ASSOCIATIVE_OPS,
)

_ATOMIC = (App, Var, DistinctObject, Number)


def print_role(role: Role) -> str:
    out = role.base
    if role.subrole:
        out += f"-{role.subrole}"
        if role.subrole_args:
            out += "({}, {})".format(*role.subrole_args)
    return out


def print_type(t) -> str:
    if isinstance(t, TypeName):
        return t.name
    if isinstance(t, MappingType):
        if len(t.args) > 1:
            left = "( " + " * ".join(print_type(a) for a in t.args) + " )"
        else:
            arg = t.args[0]
            left = f"( {print_type(arg)} )" if isinstance(arg, MappingType) else print_type(arg)
        return f"{left} > {print_type(t.result)}"
    raise TypeError(f"not a type: {t!r}")


def _print_binder(variables) -> str:
    decls = []
    for name, vtype in variables:
        decls.append(name if vtype is None else f"{name}: {print_type(vtype)}")
    return "[" + ",".join(decls) + "]"


def _group(text: str) -> str:
    return f"( {text} )"


def _eq_operand(node) -> str:
    text = print_formula(node)
    if isinstance(node, _ATOMIC):
        return text
    return _group(text)


def _apply_operand(node) -> str:
    if isinstance(node, _ATOMIC):
        return print_formula(node)
    return _group(print_formula(node))


def _binary_operand(node, op: str, is_lhs: bool) -> str:
    if isinstance(node, Binary):
        # Chains of one associative connective print flat; they re-parse
        # left-nested, so only a left-nested child may go bare.
        if node.op == op and op in ASSOCIATIVE_OPS and is_lhs:
            return print_formula(node)
        return _group(print_formula(node))
    if isinstance(node, (Quantified, Lambda, Apply, Modal)):
        return _group(print_formula(node))
    return print_formula(node)


def _argument(node) -> str:
    if isinstance(node, (Binary, Quantified, Lambda)):
        return _group(print_formula(node))
    return print_formula(node)


def print_formula(node) -> str:
    if isinstance(node, Var):
        return node.name
    if isinstance(node, DistinctObject):
        return f'"{node.text}"'
    if isinstance(node, Number):
        return node.literal
    if isinstance(node, App):
        if not node.args:
            return node.symbol
        return node.symbol + "(" + ",".join(_argument(a) for a in node.args) + ")"
    if isinstance(node, Eq):
        op = "!=" if node.negated else "="
        return f"{_eq_operand(node.lhs)} {op} {_eq_operand(node.rhs)}"
    if isinstance(node, Not):
        body = print_formula(node.body)
        if isinstance(node.body, _ATOMIC):
            return f"~ {body}"
        return f"~ {_group(body)}"
    if isinstance(node, Binary):
        return (f"{_binary_operand(node.lhs, node.op, True)} {node.op} "
                f"{_binary_operand(node.rhs, node.op, False)}")
    if isinstance(node, Quantified):
        body = print_formula(node.body)
        if isinstance(node.body, Binary):
            body = _group(body)
        return f"{node.quantifier} {_print_binder(node.variables)} : {body}"
    if isinstance(node, Lambda):
        body = print_formula(node.body)
        if isinstance(node.body, (Binary, Apply)):
            body = _group(body)
        return f"^ {_print_binder(node.variables)} : {body}"
    if isinstance(node, Apply):
        head = node.fn
        if isinstance(head, (Apply, App, Var)):
            head_text = print_formula(head) if not isinstance(head, Apply) else print_formula(head)
        else:
            head_text = _group(print_formula(head))
        return f"{head_text} @ {_apply_operand(node.arg)}"
    if isinstance(node, Modal):
        return f"{{${node.operator}}} @ {_group(print_formula(node.body))}"
    if isinstance(node, (LogicAssign, LogicList)):
        return print_logic(node)
    if isinstance(node, (TypeName, MappingType)):
        return print_type(node)
    raise TypeError(f"cannot print {node!r}")


def print_logic(node) -> str:
    if isinstance(node, LogicAssign):
        return f"{print_logic(node.lhs)} == {print_logic(node.rhs)}"
    if isinstance(node, LogicList):
        return "[ " + ",".join(print_logic(i) for i in node.items) + " ]"
    return print_formula(node)


def print_unit(unit: AnnotatedFormula) -> str:
    if isinstance(unit.body, TypeDecl):
        body = f"{unit.body.symbol}: {print_type(unit.body.signature)}"
    elif unit.role.base == "logic":
        body = print_logic(unit.body)
    else:
        body = print_formula(unit.body)
    out = f"{unit.language}({unit.name},{print_role(unit.role)},{body}"
    if unit.source is not None:
        out += f",{unit.source}"
        if unit.useful_info is not None:
            out += f",{unit.useful_info}"
    return out + ")."


def print_units(units) -> str:
    return "".join(print_unit(u) + "\n" for u in units)
