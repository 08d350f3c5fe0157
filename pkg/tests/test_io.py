import json
from fractions import Fraction as F

import pytest
from hypothesis import given, strategies as st

from corpus import CYCLE_FLAB3, chain, single, two_cycle
from fuzzylab import FAS, FuzzyLabeling, ParseError, solve
from fuzzylab.classical import AF, ClassicalLabeling
from fuzzylab.io import (
    format_degree,
    parse_af,
    parse_classical_labeling,
    parse_degree,
    parse_fas,
    parse_fextension,
    parse_labeling,
    render_af,
    render_classical_labeling,
    render_fas,
    render_fextension,
    render_labeling,
    render_report,
)
from fuzzylab.semantics import characteristic_values


def test_parse_two_cycle():
    doc = parse_fas("arg(a,0.8). arg(b,0.6). att(a,b,1.0). att(b,a,1.0).")
    assert doc.fas == FAS({"a": "0.8", "b": "0.6"}, [("a", "b", 1), ("b", "a", 1)])
    assert doc.positions[("att", "b", "a")] == (1, 39)


def test_parse_empty_and_comments():
    assert parse_fas("").fas == FAS()
    assert parse_fas("# nothing\n\n  # here\n").fas == FAS()
    assert parse_fas("arg(x, 1/3).  # third").fas.degree("x") == F(1, 3)


@pytest.mark.parametrize("text, line, column, message", [
    ("arg(a,1.2).", 1, 7, "outside"),
    ("arg(a,0.5).\narg(a,0.5).", 2, 1, "already declared"),
    ("arg(a,1).\natt(a,b,1).", 2, 1, "undeclared"),
    ("arg(a,1)", 1, 1, "expected a statement"),
    ("arg(a,0.1234567).", 1, 7, "decimal digits"),
    ("arg(a,1). foo(a).", 1, 11, "unexpected"),
    ("arg(a-b,1).", 1, 5, "invalid argument name"),
    ("arg(a,-0.5).", 1, 7, "outside"),
])
def test_parse_errors(text, line, column, message):
    with pytest.raises(ParseError, match=message) as err:
        parse_fas(text)
    assert (err.value.line, err.value.column) == (line, column)
    assert str(err.value).startswith(f"line {line}, column {column}")


def test_parse_labeling():
    assert parse_labeling("lab(a,0.4,0.2,0.4). lab(b,0.2,0.4,0.4).").labeling == CYCLE_FLAB3.rename(str.lower)
    assert parse_labeling("lab(a,1,0,0).").labeling["a"] == (1, 0, 0)
    assert parse_labeling("lab(a,0.5,0.5,0.5).").labeling["a"][2] == F(1, 2)
    with pytest.raises(ParseError):
        parse_labeling("lab(a,0.5,0.5).")
    with pytest.raises(ParseError, match="twice"):
        parse_labeling("lab(a,1,0,0). lab(a,1,0,0).")


def test_other_formats_round_trip():
    af = AF("ab", [("a", "b")])
    assert parse_af(render_af(af)) == af
    clab = ClassicalLabeling({"a": "in", "b": "out"})
    assert parse_classical_labeling(render_classical_labeling(clab)) == clab
    ext = parse_fextension("ext(a, 0.8). ext(b, 0.2).")
    assert parse_fextension(render_fextension(ext)) == ext
    with pytest.raises(ParseError, match="in, out or undec"):
        parse_classical_labeling("clab(a, maybe).")


def test_format_degree():
    assert [format_degree(F(x)) for x in ("0", "1", "0.25", "1/3", "1/1024")] == ["0", "1", "0.25", "1/3", "1/1024"]
    assert parse_degree("1/1024") == F(1, 1024)


fractions = st.fractions(min_value=0, max_value=1, max_denominator=200)


@given(st.dictionaries(st.sampled_from(["a", "b", "c", "x_1"]), fractions, min_size=1), st.data())
def test_fas_round_trip(args, data):
    names = sorted(args)
    atts = data.draw(st.dictionaries(st.tuples(st.sampled_from(names), st.sampled_from(names)), fractions))
    fas = FAS(args, atts)
    assert parse_fas(render_fas(fas)).fas == fas


@given(st.lists(st.tuples(fractions, fractions, fractions), min_size=1, max_size=3))
def test_labeling_round_trip(parts):
    flab = FuzzyLabeling({f"n{i}": t for i, t in enumerate(parts)})
    assert parse_labeling(render_labeling(flab)).labeling == flab


def test_report_grounded_two_cycle():
    doc = json.loads(render_report(solve(two_cycle(), "grounded")))
    assert doc["count"] == 1
    assert doc["labelings"][0] == {
        "A": {"a": "0.4", "r": "0.2", "u": "0.4"},
        "B": {"a": "0.2", "r": "0.4", "u": "0.4"},
    }


def test_report_empty_set_and_determinism():
    text = render_report(solve(single(), "stable"))
    assert json.loads(text)["labelings"] == [] and json.loads(text)["count"] == 0
    assert render_report(solve(chain(), "complete")) == render_report(solve(chain(), "complete"))


def test_pretty_renders():
    out = render_report(characteristic_values(two_cycle()), pretty=True)
    assert "0 0.2 0.4 0.6 0.8 1" in out
    out = render_report(solve(two_cycle(), "preferred"), pretty=True)
    assert out.count("labeling ") == 3
