"""Recursive-descent parser for annotated formulae.

One grammar covers the supported slice of all languages (FOF, TF0/TXF with
the $world machinery, structural THF, short-form modal operators); the
annotated unit records which language keyword introduced it.  parse_file
recovers from a bad unit by skipping to the next top-level '.' so one
malformed unit never hides the rest of the file.
"""

from __future__ import annotations

import re

from ..errors import Diagnostic, ParseError, TokenizeError, warning
from . import tokens as tk
from .ast import (
    AnnotatedFormula, App, Apply, Binary, DistinctObject, Eq, Lambda,
    LogicAssign, LogicList, MappingType, Modal, Not, Number, Quantified,
    Role, TypeDecl, TypeName, Var,
    ASSOCIATIVE_OPS, BINARY_OPS, KNOWN_ROLE_BASES, KNOWN_SUBROLES, LANGUAGES,
)

_LOWER_WORD = re.compile(r"[a-z][a-zA-Z0-9_]*\Z")

_DHF_NHF_HINTS = {"dhf", "nhf"}


def _unquote_atom(text: str) -> str:
    """'quoted atom' -> plain word when the quotes are redundant."""
    inner = text[1:-1]
    decoded = inner.replace("\\\\", "\\").replace("\\'", "'")
    if _LOWER_WORD.match(decoded):
        return decoded
    return text


class _Parser:
    def __init__(self, text: str, toks: list[tk.Token]):
        self.text = text
        self.toks = toks
        self.pos = 0

    # -- token plumbing ----------------------------------------------------

    def peek(self, ahead: int = 0) -> tk.Token:
        i = min(self.pos + ahead, len(self.toks) - 1)
        return self.toks[i]

    def take(self) -> tk.Token:
        t = self.toks[self.pos]
        if t.kind != tk.EOF:
            self.pos += 1
        return t

    def at(self, kind: str, text: str | None = None) -> bool:
        t = self.peek()
        return t.kind == kind and (text is None or t.text == text)

    def expect(self, kind: str, text: str | None = None, what: str | None = None) -> tk.Token:
        if not self.at(kind, text):
            got = self.peek()
            wanted = what or (text if text is not None else kind)
            raise ParseError(f"expected {wanted}, found {got.text or 'end of input'!r}",
                             got.line, got.column)
        return self.take()

    def err(self, message: str) -> ParseError:
        t = self.peek()
        return ParseError(message, t.line, t.column)

    # -- units ---------------------------------------------------------------

    def parse_units(self) -> tuple[list[AnnotatedFormula], list[Diagnostic]]:
        units: list[AnnotatedFormula] = []
        diagnostics: list[Diagnostic] = []
        while not self.at(tk.EOF):
            try:
                units.append(self.parse_unit(diagnostics))
            except ParseError as e:
                diagnostics.append(e.as_diagnostic())
                self._recover()
        return units, diagnostics

    def _recover(self) -> None:
        # Skip past the next top-level '.', then resume with the next unit.
        while not self.at(tk.EOF):
            t = self.take()
            if t.kind == tk.PUNCT and t.text == ".":
                return

    def parse_unit(self, diagnostics: list[Diagnostic]) -> AnnotatedFormula:
        t = self.peek()
        if t.kind != tk.LOWER or t.text not in LANGUAGES:
            if t.kind == tk.LOWER and t.text in _DHF_NHF_HINTS:
                raise ParseError(f"language {t.text!r} is not supported", t.line, t.column)
            raise ParseError(f"expected an annotated formula, found {t.text or 'end of input'!r}",
                             t.line, t.column)
        language = self.take().text
        self.expect(tk.PUNCT, "(")
        name = self._parse_name()
        self.expect(tk.PUNCT, ",")
        role = self._parse_role(diagnostics)
        self.expect(tk.PUNCT, ",")
        if role.base == "type":
            body: object = self.parse_type_decl()
        elif role.base == "logic":
            body = self.parse_logic_body()
        else:
            body = self.parse_formula()
        source = useful_info = None
        if self.at(tk.PUNCT, ","):
            self.take()
            source = self._capture_general()
            if self.at(tk.PUNCT, ","):
                self.take()
                useful_info = self._capture_general()
        self.expect(tk.PUNCT, ")")
        self.expect(tk.PUNCT, ".")
        return AnnotatedFormula(language, name, role, body, source, useful_info)

    def _parse_name(self) -> str:
        t = self.peek()
        if t.kind == tk.LOWER or t.kind == tk.INTEGER:
            return self.take().text
        if t.kind == tk.SQUOTED:
            return _unquote_atom(self.take().text)
        raise self.err("expected a unit name")

    def _parse_role(self, diagnostics: list[Diagnostic]) -> Role:
        base_tok = self.expect(tk.LOWER, what="a role name")
        base = base_tok.text
        if base not in KNOWN_ROLE_BASES:
            diagnostics.append(warning("UnknownRole", f"role {base!r} is not recognized",
                                       base_tok.line, base_tok.column))
        subrole = None
        subrole_args = None
        if self.at(tk.PUNCT, "-"):
            self.take()
            sub_tok = self.expect(tk.LOWER, what="a subrole name")
            subrole = sub_tok.text
            if subrole not in KNOWN_SUBROLES:
                diagnostics.append(warning("UnknownSubrole",
                                           f"subrole {subrole!r} is not recognized",
                                           sub_tok.line, sub_tok.column))
            if self.at(tk.PUNCT, "("):
                self.take()
                first = self._parse_role_arg()
                self.expect(tk.PUNCT, ",", what="',' between subrole arguments")
                second = self._parse_role_arg()
                self.expect(tk.PUNCT, ")")
                subrole_args = (first, second)
                if subrole not in ("domains", "mappings"):
                    diagnostics.append(warning(
                        "MalformedArgs",
                        f"subrole {subrole!r} does not take arguments",
                        sub_tok.line, sub_tok.column))
        return Role(base, subrole, subrole_args)

    def _parse_role_arg(self) -> str:
        t = self.peek()
        if t.kind in (tk.LOWER, tk.DWORD, tk.UPPER, tk.INTEGER):
            return self.take().text
        if t.kind == tk.SQUOTED:
            return _unquote_atom(self.take().text)
        raise ParseError("MalformedArgs: expected a plain subrole argument", t.line, t.column)

    def _capture_general(self) -> str:
        """Consume one balanced general term, returning its verbatim text."""
        start_tok = self.peek()
        if start_tok.kind == tk.EOF:
            raise self.err("expected a source/info term")
        depth = 0
        end = start_tok.end
        while not self.at(tk.EOF):
            t = self.peek()
            if depth == 0 and t.kind == tk.PUNCT and t.text in (",", ")"):
                break
            if t.kind == tk.PUNCT and t.text in "([":
                depth += 1
            elif t.kind == tk.PUNCT and t.text in ")]":
                depth -= 1
            end = t.end
            self.take()
        return self.text[start_tok.start:end]

    # -- formulas ------------------------------------------------------------

    def parse_formula(self):
        lhs = self.parse_unit_formula()
        t = self.peek()
        if not (t.kind == tk.OP and t.text in BINARY_OPS):
            return lhs
        op = self.take().text
        node = Binary(op, lhs, self.parse_unit_formula())
        if op in ASSOCIATIVE_OPS:
            while self.at(tk.OP, op):
                self.take()
                node = Binary(op, node, self.parse_unit_formula())
        nxt = self.peek()
        if nxt.kind == tk.OP and nxt.text in BINARY_OPS:
            raise self.err("mixed binary connectives need parentheses")
        return node

    def parse_unit_formula(self):
        t = self.peek()
        if t.kind == tk.OP and t.text == "~":
            self.take()
            return Not(self.parse_unit_formula())
        if t.kind == tk.OP and t.text in ("!", "?"):
            quantifier = self.take().text
            variables = self._parse_binder()
            return Quantified(quantifier, variables, self.parse_unit_formula())
        if t.kind == tk.OP and t.text == "^":
            self.take()
            variables = self._parse_binder()
            return Lambda(variables, self.parse_unit_formula())
        if t.kind == tk.MODAL:
            operator = self.take().text
            self.expect(tk.OP, "@", what="'@' after a modal operator")
            return Modal(operator, self.parse_unit_formula())
        return self._parse_infix()

    def _parse_binder(self) -> tuple:
        self.expect(tk.PUNCT, "[")
        variables = []
        while True:
            name = self.expect(tk.UPPER, what="a variable").text
            vtype = None
            if self.at(tk.PUNCT, ":"):
                self.take()
                vtype = self.parse_type()
            variables.append((name, vtype))
            if self.at(tk.PUNCT, ","):
                self.take()
                continue
            break
        self.expect(tk.PUNCT, "]")
        self.expect(tk.PUNCT, ":")
        return tuple(variables)

    def _parse_infix(self):
        lhs = self._parse_apply()
        t = self.peek()
        if t.kind == tk.OP and t.text in ("=", "!="):
            negated = self.take().text == "!="
            rhs = self._parse_apply()
            nxt = self.peek()
            if nxt.kind == tk.OP and nxt.text in ("=", "!="):
                raise self.err("chained equalities need parentheses")
            return Eq(lhs, rhs, negated)
        return lhs

    def _parse_apply(self):
        node = self._parse_primary()
        while self.at(tk.OP, "@"):
            self.take()
            node = Apply(node, self._parse_primary())
        return node

    def _parse_primary(self):
        t = self.peek()
        if t.kind == tk.PUNCT and t.text == "(":
            self.take()
            inner = self.parse_formula()
            self.expect(tk.PUNCT, ")")
            return inner
        if t.kind == tk.UPPER:
            return Var(self.take().text)
        if t.kind == tk.DOBJ:
            return DistinctObject(self.take().text)
        if t.kind in (tk.INTEGER, tk.RATIONAL, tk.REAL):
            return Number(self.take().text)
        if t.kind in (tk.LOWER, tk.DWORD, tk.DDWORD, tk.SQUOTED):
            symbol = self.take().text
            if t.kind == tk.SQUOTED:
                symbol = _unquote_atom(symbol)
            args: tuple = ()
            if self.at(tk.PUNCT, "("):
                self.take()
                collected = [self.parse_formula()]
                while self.at(tk.PUNCT, ","):
                    self.take()
                    collected.append(self.parse_formula())
                self.expect(tk.PUNCT, ")")
                args = tuple(collected)
            return App(symbol, args)
        if t.kind == tk.MODAL:
            # inside parentheses, e.g. ( {$box} @ p ) | q
            return self.parse_unit_formula()
        raise self.err(f"expected a term or formula, found {t.text or 'end of input'!r}")

    # -- types -----------------------------------------------------------------

    def parse_type_decl(self) -> TypeDecl:
        wrapped = False
        if self.at(tk.PUNCT, "("):
            self.take()
            wrapped = True
        t = self.peek()
        if t.kind in (tk.LOWER, tk.DWORD, tk.DDWORD):
            symbol = self.take().text
        elif t.kind == tk.SQUOTED:
            symbol = _unquote_atom(self.take().text)
        else:
            raise self.err("expected a symbol in the type declaration")
        self.expect(tk.PUNCT, ":")
        signature = self.parse_type()
        if wrapped:
            self.expect(tk.PUNCT, ")")
        return TypeDecl(symbol, signature)

    def parse_type(self):
        parts = self._parse_type_prod()
        if self.at(tk.OP, ">"):
            self.take()
            return MappingType(tuple(parts), self.parse_type())
        if len(parts) > 1:
            raise self.err("a product type must be the argument of '>'")
        return parts[0]

    def _parse_type_prod(self) -> list:
        parts: list = []
        while True:
            atom = self._parse_type_atom()
            parts.extend(atom) if isinstance(atom, list) else parts.append(atom)
            if self.at(tk.OP, "*"):
                self.take()
                continue
            return parts

    def _parse_type_atom(self):
        t = self.peek()
        if t.kind == tk.PUNCT and t.text == "(":
            self.take()
            inner = self._parse_type_prod()
            if self.at(tk.OP, ">"):
                self.take()
                result = self.parse_type()
                self.expect(tk.PUNCT, ")")
                return MappingType(tuple(inner), result)
            self.expect(tk.PUNCT, ")")
            return inner if len(inner) > 1 else inner[0]
        if t.kind in (tk.LOWER, tk.DWORD):
            return TypeName(self.take().text)
        if t.kind == tk.SQUOTED:
            return TypeName(_unquote_atom(self.take().text))
        raise self.err("expected a type")

    # -- logic specifications ----------------------------------------------------

    def parse_logic_body(self):
        lhs = self._parse_logic_term()
        if self.at(tk.OP, "=="):
            self.take()
            return LogicAssign(lhs, self._parse_logic_term())
        return lhs

    def _parse_logic_term(self):
        t = self.peek()
        if t.kind == tk.PUNCT and t.text == "[":
            self.take()
            items = [self.parse_logic_body()]
            while self.at(tk.PUNCT, ","):
                self.take()
                items.append(self.parse_logic_body())
            self.expect(tk.PUNCT, "]")
            return LogicList(tuple(items))
        if t.kind in (tk.LOWER, tk.DWORD, tk.DDWORD):
            return App(self.take().text)
        if t.kind in (tk.INTEGER, tk.RATIONAL, tk.REAL):
            return Number(self.take().text)
        raise self.err("expected a logic specification term")


# ---------------------------------------------------------------------------
# Public entry points

def parse_file(text: str) -> tuple[list[AnnotatedFormula], list[Diagnostic]]:
    """Parse a whole file; diagnostics never abort the remaining units."""
    try:
        toks = tk.tokenize(text)
    except TokenizeError as e:
        return [], [e.as_diagnostic()]
    return _Parser(text, toks).parse_units()


def parse_units_strict(text: str) -> list[AnnotatedFormula]:
    units, diagnostics = parse_file(text)
    bad = [d for d in diagnostics if d.severity == "error"]
    if bad:
        raise ParseError(bad[0].message, bad[0].line or 0, bad[0].column or 0)
    return units


def parse_role(text: str, diagnostics: list[Diagnostic] | None = None) -> Role:
    """Parse a role string like 'interpretation-domains(human,d_human)'."""
    sink = diagnostics if diagnostics is not None else []
    p = _Parser(text, tk.tokenize(text))
    role = p._parse_role(sink)
    if not p.at(tk.EOF):
        raise p.err("unexpected trailing text after the role")
    return role


def parse_formula(text: str):
    """Parse a single standalone formula (used by the eval command and tests)."""
    p = _Parser(text, tk.tokenize(text))
    f = p.parse_formula()
    if not p.at(tk.EOF):
        raise p.err("unexpected trailing text after the formula")
    return f
