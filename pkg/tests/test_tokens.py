import pytest

from tptpmodels.errors import TokenizeError
from tptpmodels.syntax import tokenize
from tptpmodels.syntax import tokens as tk


def kinds(text):
    return [t.kind for t in tokenize(text)[:-1]]


def test_distinct_object_token():
    toks = tokenize('"john"')
    assert toks[0].kind == tk.DOBJ
    assert toks[0].text == "john"


def test_empty_input_gives_only_eof():
    toks = tokenize("")
    assert len(toks) == 1
    assert toks[0].kind == tk.EOF


def test_modal_name_then_apply_sign():
    toks = tokenize("{$possible} @")
    assert toks[0].kind == tk.MODAL
    assert toks[0].text == "possible"
    assert toks[1].kind == tk.OP and toks[1].text == "@"


def test_words_and_dollar_words():
    assert kinds("abc Xyz $true $$fomlModel 'q a'") == \
        [tk.LOWER, tk.UPPER, tk.DWORD, tk.DDWORD, tk.SQUOTED]


def test_numbers():
    toks = tokenize("27 43/92 -99.66 -3 1.0e6")
    assert [t.kind for t in toks[:-1]] == \
        [tk.INTEGER, tk.RATIONAL, tk.REAL, tk.INTEGER, tk.REAL]
    assert [t.text for t in toks[:-1]] == ["27", "43/92", "-99.66", "-3", "1.0e6"]


def test_multi_char_operators_have_longest_match():
    assert [t.text for t in tokenize("<=> <= => <~> != == ~| ~&")[:-1]] == \
        ["<=>", "<=", "=>", "<~>", "!=", "==", "~|", "~&"]


def test_comments_are_skipped():
    text = "% a line comment\nfof /* block\ncomment */ (\n"
    assert [t.text for t in tokenize(text)[:-1]] == ["fof", "("]


def test_positions_are_line_and_column():
    toks = tokenize("ab\n  cd")
    assert (toks[0].line, toks[0].column) == (1, 1)
    assert (toks[1].line, toks[1].column) == (2, 3)


def test_unterminated_quote_has_position():
    with pytest.raises(TokenizeError) as e:
        tokenize('p("abc')
    assert e.value.code == "UnterminatedQuote"
    assert (e.value.line, e.value.column) == (1, 3)


def test_illegal_character():
    with pytest.raises(TokenizeError) as e:
        tokenize("p # q")
    assert e.value.code == "IllegalCharacter"


def test_escaped_quotes_inside_strings():
    toks = tokenize(r'"a\"b" ' + r"'c\'d'")
    assert toks[0].text == r"a\"b"
    assert toks[1].kind == tk.SQUOTED
