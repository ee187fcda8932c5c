"""Tokenizer for the supported TPTP slice.

Produces a flat token list with positions and byte offsets; offsets let the
parser capture raw source/useful-info spans verbatim.
"""

from __future__ import annotations

from dataclasses import dataclass

from ..errors import TokenizeError

LOWER = "lower"
UPPER = "upper"
DWORD = "dword"            # $true, $world, ...
DDWORD = "ddword"          # $$fomlModel, ...
SQUOTED = "squoted"        # 'some atom' (text kept with quotes)
DOBJ = "dobj"              # "distinct object" (inner text, verbatim)
INTEGER = "integer"
RATIONAL = "rational"
REAL = "real"
MODAL = "modal"            # {$possible} -> text "possible"
PUNCT = "punct"            # ( ) [ ] , . : -
OP = "op"                  # connectives, =, !=, >, *, @, ^, ==
EOF = "eof"

# Longest match first; single-char operators follow.
_MULTI_OPS = ["<=>", "<~>", "==", "!=", "=>", "<=", "~|", "~&"]
_SINGLE_OPS = "!?~&|=>*@^"
_PUNCTS = "()[],.:-"


@dataclass(frozen=True)
class Token:
    kind: str
    text: str
    line: int
    column: int
    start: int
    end: int

    def __repr__(self) -> str:  # compact in pytest diffs
        return f"Token({self.kind},{self.text!r}@{self.line}:{self.column})"


def _is_alnum(c: str) -> bool:
    return c.isalnum() or c == "_"


class _Scanner:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0
        self.line = 1
        self.col = 1

    def peek(self, ahead: int = 0) -> str:
        i = self.pos + ahead
        return self.text[i] if i < len(self.text) else ""

    def advance(self, n: int = 1) -> None:
        for _ in range(n):
            if self.pos < len(self.text):
                if self.text[self.pos] == "\n":
                    self.line += 1
                    self.col = 1
                else:
                    self.col += 1
                self.pos += 1

    def fail(self, code: str, message: str) -> TokenizeError:
        return TokenizeError(code, message, self.line, self.col)


def tokenize(text: str) -> list[Token]:
    """Tokenize *text*, skipping % line comments and /* */ block comments.

    Raises TokenizeError (with position) on unterminated quotes or characters
    outside the language.
    """
    s = _Scanner(text)
    out: list[Token] = []

    def emit(kind: str, start: int, start_line: int, start_col: int, value: str | None = None):
        out.append(Token(kind, value if value is not None else text[start:s.pos],
                         start_line, start_col, start, s.pos))

    while s.pos < len(text):
        c = s.peek()
        if c in " \t\r\n":
            s.advance()
            continue
        if c == "%":
            while s.pos < len(text) and s.peek() != "\n":
                s.advance()
            continue
        if c == "/" and s.peek(1) == "*":
            s.advance(2)
            while s.pos < len(text) and not (s.peek() == "*" and s.peek(1) == "/"):
                s.advance()
            if s.pos >= len(text):
                raise s.fail("UnterminatedComment", "block comment never closed")
            s.advance(2)
            continue

        start, line, col = s.pos, s.line, s.col

        if c == "'" or c == '"':
            quote = c
            s.advance()
            while True:
                if s.pos >= len(text) or s.peek() == "\n":
                    raise TokenizeError("UnterminatedQuote",
                                        f"missing closing {quote}", line, col)
                if s.peek() == "\\":
                    s.advance(2)
                    continue
                if s.peek() == quote:
                    break
                s.advance()
            s.advance()
            inner = text[start + 1:s.pos - 1]
            if quote == '"':
                emit(DOBJ, start, line, col, inner)
            else:
                emit(SQUOTED, start, line, col, text[start:s.pos])
            continue

        if c == "{":
            # Only modal operator names appear in braces: {$word}
            if s.peek(1) != "$":
                raise s.fail("IllegalCharacter", "'{' not followed by a $word")
            s.advance(2)
            word_start = s.pos
            while _is_alnum(s.peek()):
                s.advance()
            if s.pos == word_start or s.peek() != "}":
                raise TokenizeError("IllegalCharacter", "malformed {$word} operator", line, col)
            name = text[word_start:s.pos]
            s.advance()
            emit(MODAL, start, line, col, name)
            continue

        if c == "$":
            dollars = 2 if s.peek(1) == "$" else 1
            s.advance(dollars)
            word_start = s.pos
            while _is_alnum(s.peek()):
                s.advance()
            if s.pos == word_start:
                raise TokenizeError("IllegalCharacter", "'$' not followed by a word", line, col)
            emit(DDWORD if dollars == 2 else DWORD, start, line, col)
            continue

        if c.isdigit() or (c in "+-" and s.peek(1).isdigit()):
            if c in "+-":
                s.advance()
            while s.peek().isdigit():
                s.advance()
            kind = INTEGER
            if s.peek() == "/" and s.peek(1).isdigit():
                s.advance()
                while s.peek().isdigit():
                    s.advance()
                kind = RATIONAL
            else:
                if s.peek() == "." and s.peek(1).isdigit():
                    s.advance()
                    while s.peek().isdigit():
                        s.advance()
                    kind = REAL
                if s.peek() in "eE" and (s.peek(1).isdigit() or (s.peek(1) in "+-" and s.peek(2).isdigit())):
                    s.advance()
                    if s.peek() in "+-":
                        s.advance()
                    while s.peek().isdigit():
                        s.advance()
                    kind = REAL
            emit(kind, start, line, col)
            continue

        if c.islower():
            s.advance()
            while _is_alnum(s.peek()):
                s.advance()
            emit(LOWER, start, line, col)
            continue

        if c.isupper():
            s.advance()
            while _is_alnum(s.peek()):
                s.advance()
            emit(UPPER, start, line, col)
            continue

        matched = False
        for op in _MULTI_OPS:
            if text.startswith(op, s.pos):
                s.advance(len(op))
                emit(OP, start, line, col)
                matched = True
                break
        if matched:
            continue

        if c in _PUNCTS:
            s.advance()
            emit(PUNCT, start, line, col)
            continue
        if c in _SINGLE_OPS:
            s.advance()
            emit(OP, start, line, col)
            continue

        raise s.fail("IllegalCharacter", f"character {c!r} is not part of the language")

    out.append(Token(EOF, "", s.line, s.col, s.pos, s.pos))
    return out
