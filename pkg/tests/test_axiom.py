import pytest
from hypothesis import given, settings, strategies as st

from strategies import axioms
from zuluverb.axiom import (And, DisjointWith, Named, Not, Or, Phrase, Some, SubClassOf, format_axiom,
                            iter_axioms, parse_axioms, parse_line)
from zuluverb.errors import AxiomSyntaxError


@pytest.mark.parametrize("text, expected", [
    ("sub(ikhambi, umuthi)", SubClassOf(Named("ikhambi"), Named("umuthi"))),
    ("sub(indlulamithi, some(eats, ihlamvana))",
     SubClassOf(Named("indlulamithi"), Some("eats", Named("ihlamvana")))),
    ("sub(indebe, not(ingilazi))", SubClassOf(Named("indebe"), Not(Named("ingilazi")))),
    ("disjoint(ihebhivo,ikhanivo)", DisjointWith(Named("ihebhivo"), Named("ikhanivo"))),
    ("and(ibhotela, ubisi)", Phrase(And((Named("ibhotela"), Named("ubisi"))))),
    ("  or ( a , b , c )  # trailing comment", Phrase(Or((Named("a"), Named("b"), Named("c"))))),
    ("sub(isifundo, some(taughtBy, uSolwazi))",
     SubClassOf(Named("isifundo"), Some("taughtBy", Named("uSolwazi")))),
    ("sub(not, and)", SubClassOf(Named("not"), Named("and"))),
])
def test_parse(text, expected):
    assert parse_axioms(text) == [expected]


def test_blank_and_comment_lines_skipped():
    text = "# header\n\nsub(a, b)\n   # indented comment\nsub(c, d)\n"
    assert parse_axioms(text) == [SubClassOf(Named("a"), Named("b")), SubClassOf(Named("c"), Named("d"))]
    assert parse_line("   ") is None


def test_unicode_identifiers():
    assert parse_axioms("sub(ünï, ça_2)") == [SubClassOf(Named("ünï"), Named("ça_2"))]


def test_and_arity_error():
    with pytest.raises(AxiomSyntaxError, match="at least 2 arguments") as info:
        parse_axioms("and(ibhotela)")
    assert (info.value.line, info.value.column) == (1, 13)


def test_nested_or_arity_error():
    with pytest.raises(AxiomSyntaxError, match="or\\(\\) needs at least 2"):
        parse_axioms("sub(a, or(b))")


@pytest.mark.parametrize("text, column, fragment", [
    ("sub(a, b", 9, "missing ')'"),
    ("sub(a, b))", 10, "unexpected ')'"),
    ("sub(a, not(b)", 14, "missing ')'"),
    ("sub(a,", 7, "expression missing"),
])
def test_unbalanced_parentheses(text, column, fragment):
    with pytest.raises(AxiomSyntaxError, match="unbalanced parentheses") as info:
        parse_axioms(text)
    assert info.value.column == column
    assert fragment in info.value.message


def test_error_reports_expected_tokens():
    with pytest.raises(AxiomSyntaxError) as info:
        parse_axioms("sub(a b)")
    assert info.value.column == 7
    assert info.value.expected == {"','"}
    with pytest.raises(AxiomSyntaxError) as info:
        parse_axioms("ikhambi")
    assert info.value.expected == {"sub(", "disjoint(", "and(", "or("}


def test_statement_keyword_inside_expression():
    with pytest.raises(AxiomSyntaxError, match="only allowed at the start"):
        parse_axioms("sub(a, sub(b, c))")


def test_errors_carry_line_numbers():
    with pytest.raises(AxiomSyntaxError) as info:
        parse_axioms("sub(a, b)\n\nsub(a, $)")
    assert (info.value.line, info.value.column) == (3, 8)


def test_iter_axioms_continues_after_bad_line():
    items = list(iter_axioms("sub(a, b)\nsub(a\nsub(c, d)\n"))
    assert [n for n, _ in items] == [1, 2, 3]
    assert isinstance(items[1][1], AxiomSyntaxError)
    assert items[2][1] == SubClassOf(Named("c"), Named("d"))


def test_invalid_utf8_is_located():
    items = list(iter_axioms(b"sub(a, b)\nsub(\xff, b)"))
    err = items[1][1]
    assert isinstance(err, AxiomSyntaxError)
    assert (err.line, err.column) == (2, 5)


def test_deep_nesting_is_a_diagnostic():
    text = "sub(a, " + "not(" * 500 + "b" + ")" * 501
    with pytest.raises(AxiomSyntaxError, match="nested deeper"):
        parse_axioms(text)


@pytest.mark.parametrize("ax, text", [
    (SubClassOf(Named("ikhambi"), Named("umuthi")), "sub(ikhambi, umuthi)"),
    (DisjointWith(Named("ihebhivo"), Named("ikhanivo")), "disjoint(ihebhivo, ikhanivo)"),
    (SubClassOf(Named("a"), Some("p", And((Named("b"), Named("c"))))), "sub(a, some(p, and(b, c)))"),
    (Phrase(Or((Named("a"), Named("b")))), "or(a, b)"),
])
def test_format_axiom(ax, text):
    assert format_axiom(ax) == text
    assert parse_axioms(text) == [ax]


def test_ast_arity_invariant():
    with pytest.raises(ValueError):
        And((Named("a"),))
    with pytest.raises(ValueError):
        Or(())


@given(axioms)
def test_roundtrip(ax):
    assert parse_axioms(format_axiom(ax)) == [ax]


@given(st.binary(max_size=80))
def test_arbitrary_bytes_never_crash(data):
    for lineno, item in iter_axioms(data):
        if isinstance(item, AxiomSyntaxError):
            assert item.line == lineno and item.column >= 1


BAD_CHARS = "@$%!?;:.*+=<>[]{}\"'\\|/~`^&\x00"


@settings(max_examples=300)
@given(axioms, st.data())
def test_error_column_tracks_corruption(ax, data):
    text = format_axiom(ax)
    site = data.draw(st.integers(0, len(text) - 1))
    bad = data.draw(st.sampled_from(BAD_CHARS))
    corrupted = text[:site] + bad + text[site + 1:]
    with pytest.raises(AxiomSyntaxError) as info:
        parse_axioms(corrupted)
    assert abs(info.value.column - (site + 1)) <= 1
