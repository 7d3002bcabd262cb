import pytest

from fgq.formats import ParseError, format_form, format_module, format_table, parse_form, parse_module, parse_table
from fgq.genmod import PointedQuasigroup, rho
from fgq.linear import extract_form


def test_table_round_trip(q5):
    text = format_table(q5)
    assert text == "5\n1 4 2 0 3\n3 1 4 2 0\n0 3 1 4 2\n2 0 3 1 4\n4 2 0 3 1\n"
    assert parse_table(text) == (q5, None)
    assert format_table(*parse_table(text)) == text


def test_table_with_point_and_comments(z3):
    text = "# Z3\n\n3\n 0 1 2\n1   2 0\n2 0 1\n# trailing\npoint 2\n"
    t, point = parse_table(text)
    assert t == z3 and point == 2
    assert format_table(t, point) == "3\n0 1 2\n1 2 0\n2 0 1\npoint 2\n"


def test_non_latin_parses(z3):
    t, _ = parse_table("2\n0 0\n1 1\n")
    assert t.rows() == [[0, 0], [1, 1]]


@pytest.mark.parametrize("text,line,column", [
    ("3\n0 1 2\n1 x 0\n2 0 1\n", 3, 3),
    ("3\n0 1 2\n1 2\n2 0 1\n", 3, 1),
    ("3\n0 1 2\n1 2 0\n", 4, 1),
    ("3\n0 1 2\n1 2 0\n2 0 5\n", 4, 5),
    ("", 1, 1),
    ("2 2\n0 1\n1 0\n", 1, 1),
    ("2\n0 1\n1 0\npoint 4\n", 4, 1),
    ("2\n0 1\n1 0\nextra\n", 4, 1),
])
def test_parse_errors_carry_position(text, line, column):
    with pytest.raises(ParseError) as info:
        parse_table(text)
    assert (info.value.line, info.value.column) == (line, column)
    assert f"line {line}" in str(info.value)


def test_form_round_trip(q5):
    form = extract_form(q5, 0, 0)
    text = format_form(form)
    assert text.startswith("group:\n5\n")
    assert "f: 4 1 3 0 2\n" in text and text.endswith("e: 1\n")
    assert parse_form(text) == form
    assert format_form(parse_form(text)) == text


def test_form_sections_accept_multiline_values(q5):
    text = format_form(extract_form(q5, 0, 0)).replace("f: 4 1 3 0 2", "f:\n4 1\n3 0 2")
    assert parse_form(text) == extract_form(q5, 0, 0)


def test_form_errors(q5):
    good = format_form(extract_form(q5, 0, 0))
    with pytest.raises(ParseError, match="missing section 'g'"):
        parse_form(good.replace("g: 3 1 4 2 0\n", ""))
    with pytest.raises(ParseError, match="permutation"):
        parse_form(good.replace("f: 4 1 3 0 2", "f: 4 4 3 0 2"))
    with pytest.raises(ParseError, match="group section"):
        parse_form(good.replace("group:\n5\n4 0 1 2 3", "group:\n5\n4 0 1 3 2"))
    with pytest.raises(ParseError, match="not an arithmetic form"):
        parse_form(good.replace("f: 4 1 3 0 2", "f: 0 2 1 3 4"))
    with pytest.raises(ParseError, match="duplicate"):
        parse_form(good + "e: 1\n")


def test_module_round_trip(q5):
    for p in range(5):
        pm = rho(PointedQuasigroup(q5, p))
        text = format_module(pm)
        assert parse_module(text) == pm
        assert format_module(parse_module(text)) == text


def test_module_requires_total_maps(q5e0):
    text = format_module(rho(PointedQuasigroup(q5e0, 0))).replace("phi: 0 1 2 3 4", "phi: 0 1 2")
    with pytest.raises(ParseError, match="phi"):
        parse_module(text)
