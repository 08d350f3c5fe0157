"""Text formats and report rendering.

Documents are sequences of dot-terminated statements such as
``arg(a, 0.8).`` or ``att(a, b, 1).``; several may share a line and ``#``
starts a comment.  Degrees are decimal literals with at most six
fractional digits, or exact ``p/q`` fractions, and are read as rationals.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass, field
from fractions import Fraction

from .classical import AF, ClassicalLabeling, Label
from .core import FAS, FuzzyLabeling, FuzzySet, check_name
from .errors import DomainError, ParseError
from .postulates import PostulateReport
from .principles import PrincipleVerdict, SweepTable
from .semantics import CharacteristicValueSet, LabelingSet

MAX_DECIMALS = 6

_STATEMENT = re.compile(r"([A-Za-z_]\w*)\s*\(([^()]*)\)\s*\.")
_DECIMAL = re.compile(r"-?[0-9]+(?:\.([0-9]+))?")
_RATIO = re.compile(r"[0-9]+\s*/\s*[0-9]+")


@dataclass(frozen=True)
class Statement:
    predicate: str
    args: tuple  # (text, column) pairs
    line: int
    column: int


def _statements(text: str):
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0]
        pos = 0
        while True:
            while pos < len(line) and line[pos].isspace():
                pos += 1
            if pos >= len(line):
                break
            m = _STATEMENT.match(line, pos)
            if m is None:
                raise ParseError("expected a statement like name(...).", lineno, pos + 1)
            args = []
            start = m.start(2)
            inner = m.group(2)
            if inner.strip():
                offset = 0
                for piece in inner.split(","):
                    lead = len(piece) - len(piece.lstrip())
                    args.append((piece.strip(), start + offset + lead + 1))
                    offset += len(piece) + 1
            yield Statement(m.group(1), tuple(args), lineno, pos + 1)
            pos = m.end()


def parse_degree(token: str, line: int = 0, column: int = 0) -> Fraction:
    if _RATIO.fullmatch(token):
        p, q = (int(t) for t in token.split("/"))
        if q == 0:
            raise ParseError(f"zero denominator in {token!r}", line, column)
        value = Fraction(p, q)
    else:
        m = _DECIMAL.fullmatch(token)
        if m is None:
            raise ParseError(f"malformed degree {token!r}", line, column)
        if m.group(1) and len(m.group(1)) > MAX_DECIMALS:
            raise ParseError(f"degree {token!r} has more than {MAX_DECIMALS} decimal digits", line, column)
        value = Fraction(token)
    if not 0 <= value <= 1:
        raise ParseError(f"degree {token} outside [0, 1]", line, column)
    return value


def _name(tok, line):
    text, col = tok
    try:
        return check_name(text)
    except DomainError:
        raise ParseError(f"invalid argument name {text!r}", line, col) from None


def _expect(st: Statement, predicates: dict):
    arity = predicates.get(st.predicate)
    if arity is None:
        allowed = ", ".join(sorted(predicates))
        raise ParseError(f"unexpected statement {st.predicate!r} (allowed: {allowed})", st.line, st.column)
    if len(st.args) != arity:
        raise ParseError(f"{st.predicate} takes {arity} fields, got {len(st.args)}", st.line, st.column)


def _deg(st: Statement, i: int) -> Fraction:
    text, col = st.args[i]
    return parse_degree(text, st.line, col)


@dataclass(frozen=True)
class FASDocument:
    text: str
    fas: FAS
    positions: dict = field(default_factory=dict)


@dataclass(frozen=True)
class LabelingDocument:
    text: str
    labeling: FuzzyLabeling
    positions: dict = field(default_factory=dict)


def parse_fas(text: str) -> FASDocument:
    args, atts, pos = {}, {}, {}
    for st in _statements(text):
        _expect(st, {"arg": 2, "att": 3})
        if st.predicate == "arg":
            x = _name(st.args[0], st.line)
            if x in args:
                line, _ = pos[("arg", x)]
                raise ParseError(f"argument {x!r} already declared on line {line}", st.line, st.column)
            args[x] = _deg(st, 1)
            pos[("arg", x)] = (st.line, st.column)
        else:
            b, a = _name(st.args[0], st.line), _name(st.args[1], st.line)
            if (b, a) in atts:
                line, _ = pos[("att", b, a)]
                raise ParseError(f"attack ({b}, {a}) already declared on line {line}", st.line, st.column)
            atts[(b, a)] = _deg(st, 2)
            pos[("att", b, a)] = (st.line, st.column)
    for (b, a), (line, col) in ((k[1:], v) for k, v in pos.items() if k[0] == "att"):
        for x in (b, a):
            if x not in args:
                raise ParseError(f"attack uses undeclared argument {x!r}", line, col)
    return FASDocument(text, FAS(args, atts), pos)


def parse_labeling(text: str) -> LabelingDocument:
    triples, pos = {}, {}
    for st in _statements(text):
        _expect(st, {"lab": 4})
        x = _name(st.args[0], st.line)
        if x in triples:
            raise ParseError(f"argument {x!r} labeled twice", st.line, st.column)
        triples[x] = (_deg(st, 1), _deg(st, 2), _deg(st, 3))
        pos[x] = (st.line, st.column)
    return LabelingDocument(text, FuzzyLabeling(triples), pos)


def parse_fextension(text: str) -> FuzzySet:
    members = {}
    for st in _statements(text):
        _expect(st, {"ext": 2})
        x = _name(st.args[0], st.line)
        if x in members:
            raise ParseError(f"argument {x!r} listed twice", st.line, st.column)
        members[x] = _deg(st, 1)
    return FuzzySet(members)


def parse_af(text: str) -> AF:
    args, atts = [], []
    seen = {}
    for st in _statements(text):
        _expect(st, {"arg": 1, "att": 2})
        if st.predicate == "arg":
            x = _name(st.args[0], st.line)
            if x in args:
                raise ParseError(f"argument {x!r} already declared", st.line, st.column)
            args.append(x)
        else:
            pair = (_name(st.args[0], st.line), _name(st.args[1], st.line))
            if pair in seen:
                raise ParseError(f"attack {pair} already declared", st.line, st.column)
            seen[pair] = (st.line, st.column)
            atts.append(pair)
    for pair, (line, col) in seen.items():
        for x in pair:
            if x not in args:
                raise ParseError(f"attack uses undeclared argument {x!r}", line, col)
    return AF(args, atts)


def parse_classical_labeling(text: str) -> ClassicalLabeling:
    labels = {}
    for st in _statements(text):
        _expect(st, {"clab": 2})
        x = _name(st.args[0], st.line)
        if x in labels:
            raise ParseError(f"argument {x!r} labeled twice", st.line, st.column)
        value, col = st.args[1]
        try:
            labels[x] = Label(value.lower())
        except ValueError:
            raise ParseError(f"label must be in, out or undec, not {value!r}", st.line, col) from None
    return ClassicalLabeling(labels)


# -- rendering ---------------------------------------------------------------

def format_degree(value) -> str:
    """Exact decimal when it fits the input grammar, else ``p/q``."""
    value = Fraction(value)
    q = value.denominator
    twos = fives = 0
    while q % 2 == 0:
        q //= 2
        twos += 1
    while q % 5 == 0:
        q //= 5
        fives += 1
    digits = max(twos, fives)
    if q != 1 or digits > MAX_DECIMALS:
        return f"{value.numerator}/{value.denominator}"
    if digits == 0:
        return str(value.numerator)
    scaled = value.numerator * 10**digits // value.denominator
    whole, frac = divmod(scaled, 10**digits)
    return f"{whole}.{frac:0{digits}d}"


def render_fas(fas: FAS) -> str:
    lines = [f"arg({x}, {format_degree(fas.degree(x))})." for x in fas.names]
    lines += [f"att({b}, {a}, {format_degree(w)})." for (b, a), w in sorted(fas.attacks.items())]
    return "\n".join(lines) + "\n" if lines else ""


def render_labeling(lab: FuzzyLabeling) -> str:
    return "".join(
        f"lab({x}, {', '.join(format_degree(v) for v in lab[x])}).\n" for x in lab.names
    )


def render_fextension(s, names=None) -> str:
    names = sorted(names) if names is not None else list(s)
    return "".join(f"ext({x}, {format_degree(s[x])}).\n" for x in names)


def render_af(af: AF) -> str:
    lines = [f"arg({x})." for x in af.names] + [f"att({b}, {a})." for b, a in sorted(af.atts)]
    return "".join(line + "\n" for line in lines)


def render_classical_labeling(lab: ClassicalLabeling) -> str:
    return "".join(f"clab({x}, {lab[x].value}).\n" for x in lab)


def _lab_doc(lab: FuzzyLabeling) -> dict:
    return {
        x: {"a": format_degree(a), "r": format_degree(r), "u": format_degree(u)}
        for x, (a, r, u) in lab.items()
    }


def _fset_doc(s) -> dict:
    return {x: format_degree(v) for x, v in s.items()}


def _fas_doc(fas: FAS) -> dict:
    return {
        "arguments": {x: format_degree(fas.degree(x)) for x in fas.names},
        "attacks": [
            {"from": b, "to": a, "weight": format_degree(w)} for (b, a), w in sorted(fas.attacks.items())
        ],
    }


def _verdict_doc(v: PrincipleVerdict) -> dict:
    doc = {
        "semantics": v.semantics.value,
        "principle": v.principle.value,
        "outcome": v.outcome.value,
        "trials": v.trials,
        "skipped": v.skipped,
        "seed": v.seed,
        "text": v.text,
    }
    if v.witness is not None:
        w = v.witness
        doc["witness"] = {
            "source": w["source"],
            "index": w["index"],
            "details": w["details"],
            "fas": _fas_doc(w["fas"]),
            "labelings": [_lab_doc(lab) for lab in w["labelings"]],
        }
    return doc


GRID_NOTE = "labelings enumerated over the characteristic value grid"


def report_document(result, context=None) -> dict:
    """Plain, JSON-ready structure for a result object."""
    doc = dict(context or {})
    if isinstance(result, LabelingSet):
        doc.update(kind="labelings", count=len(result), labelings=[_lab_doc(l) for l in result], note=GRID_NOTE)
    elif isinstance(result, FuzzyLabeling):
        doc.update(kind="labeling", labeling=_lab_doc(result))
    elif isinstance(result, FuzzySet):
        doc.update(kind="fextension", fextension=_fset_doc(result))
    elif isinstance(result, CharacteristicValueSet):
        doc.update(kind="values", count=len(result), values=[format_degree(v) for v in result])
    elif isinstance(result, PostulateReport):
        doc.update(kind="postulate", **_report_doc(result))
    elif isinstance(result, dict) and all(isinstance(v, PostulateReport) for v in result.values()):
        reports = [_report_doc(r) for r in result.values()]
        doc.update(kind="check", satisfied=all(r["satisfied"] for r in reports), postulates=reports)
    elif isinstance(result, PrincipleVerdict):
        doc.update(kind="verdict", **_verdict_doc(result))
    elif isinstance(result, SweepTable):
        (rows, principles) = result.rows()
        doc.update(
            kind="principles",
            family={
                "seed": result.family.seed,
                "count": result.family.count,
                "max_args": result.family.max_args,
                "degree_grid": [format_degree(g) for g in result.family.degree_grid],
            },
            columns=[p.value for p in principles],
            rows=[
                {"semantics": s.value, "cells": [c.outcome.value for c in cells]} for s, cells in rows
            ],
            mismatches=[[s.value, p.value] for s, p in result.mismatches()],
            verdicts=[_verdict_doc(v) for v in result.cells.values()],
            note="NoViolationFound is the absence of a counterexample, not a proof",
        )
    elif isinstance(result, (list, tuple)):
        # a list of f-extensions
        doc.update(kind="fextensions", count=len(result), fextensions=[_fset_doc(s) for s in result], note=GRID_NOTE)
    else:
        raise TypeError(f"cannot render {type(result).__name__}")
    return doc


def _report_doc(rep: PostulateReport) -> dict:
    return {
        "postulate": rep.postulate.value,
        "satisfied": rep.satisfied,
        "witnesses": [
            {"argument": w.argument, "lhs": format_degree(w.lhs), "rhs": format_degree(w.rhs)}
            for w in rep.witnesses
        ],
    }


def render_report(result, pretty: bool = False, context=None) -> str:
    doc = report_document(result, context)
    if pretty:
        return _pretty(doc)
    return json.dumps(doc, indent=2) + "\n"


def _table(header, rows) -> list:
    widths = [max(len(str(c)) for c in col) for col in zip(header, *rows)]
    fmt = "  ".join(f"{{:<{w}}}" for w in widths)
    out = [fmt.format(*header).rstrip(), fmt.format(*("-" * w for w in widths))]
    out += [fmt.format(*map(str, r)).rstrip() for r in rows]
    return out


def _pretty(doc: dict) -> str:
    kind = doc["kind"]
    head = [f"{k}: {v}" for k, v in doc.items() if isinstance(v, (str, int)) and k not in ("kind", "note", "text")]
    lines = list(head)
    if kind == "labelings":
        for i, lab in enumerate(doc["labelings"], start=1):
            lines.append(f"labeling {i}")
            lines += _table(["arg", "a", "r", "u"], [[x, t["a"], t["r"], t["u"]] for x, t in lab.items()])
        lines.append(f"({doc['note']})")
    elif kind == "labeling":
        lines += _table(["arg", "a", "r", "u"], [[x, t["a"], t["r"], t["u"]] for x, t in doc["labeling"].items()])
    elif kind == "fextensions":
        for i, s in enumerate(doc["fextensions"], start=1):
            body = ", ".join(f"{x}:{d}" for x, d in s.items())
            lines.append(f"f-extension {i}: {{{body}}}")
    elif kind == "fextension":
        lines.append("{" + ", ".join(f"{x}:{d}" for x, d in doc["fextension"].items()) + "}")
    elif kind == "values":
        lines.append(" ".join(doc["values"]))
    elif kind in ("check", "postulate"):
        reports = doc["postulates"] if kind == "check" else [doc]
        rows = []
        for r in reports:
            bad = "; ".join(f"{w['argument']}: {w['lhs']} vs {w['rhs']}" for w in r["witnesses"])
            rows.append([r["postulate"], "ok" if r["satisfied"] else "violated", bad])
        lines += _table(["postulate", "status", "witnesses"], rows)
    elif kind == "verdict":
        lines.append(doc["text"])
    elif kind == "principles":
        marks = {"Violated": "x", "NoViolationFound": "-"}
        rows = [[r["semantics"]] + [marks[c] for c in r["cells"]] for r in doc["rows"]]
        lines += _table(["semantics"] + doc["columns"], rows)
        lines.append("x = violated (witness found), - = no violation found (not a proof)")
        if doc["mismatches"]:
            lines.append("cells differing from the published table: "
                         + ", ".join(f"{s}/{p}" for s, p in doc["mismatches"]))
    return "\n".join(lines) + "\n"


__all__ = [
    "FASDocument",
    "LabelingDocument",
    "format_degree",
    "parse_af",
    "parse_classical_labeling",
    "parse_degree",
    "parse_fas",
    "parse_fextension",
    "parse_labeling",
    "render_af",
    "render_classical_labeling",
    "render_fas",
    "render_fextension",
    "render_labeling",
    "render_report",
    "report_document",
]
