"""JSON documents and event expressions.

Every document is a JSON object with ``format_version``, ``kind`` and a
``frame`` (list of element labels), plus a kind-specific payload.  Subsets
are written as label arrays and rationals as strings ``"p/q"`` (``"p"`` for
integers).  An optional ``events`` object names subsets for use in event
expressions.

Event expressions:

    expr    := term (("|" | ",") term)*
    term    := factor ("&" factor)*
    factor  := "~" factor | "(" expr ")" | "{" [label ("," label)*] "}" | "*" | NAME

``NAME`` is a named event if one exists, otherwise an element label.
``*`` is the whole frame and ``{}`` the empty set.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Mapping

from .conditioning import ConditionalReport, ConditioningRule
from .condmass import CertificationReport, FocalDecomposition, FocalString
from .credal import ConstraintSystem, CredalSet, LinearConstraint, PartitionScenario
from .errors import BeliefError, DocumentError, NotABeliefFunctionError
from .frame import Frame, Subset, canonical_order, pack_bits, unpack_bits
from .setfunctions import BeliefFunction, MassFunction, SetFunction

FORMAT_VERSION = 1
KINDS = ("frame", "mass", "belief", "credal", "scenario", "report")

_RATIONAL = re.compile(r"^-?\d+(/\d+)?$")


def format_rational(value: Fraction) -> str:
    return str(Fraction(value))


def parse_rational(text) -> Fraction:
    if isinstance(text, bool):
        raise DocumentError(f"expected a rational, got {text!r}")
    if isinstance(text, int):
        return Fraction(text)
    if not isinstance(text, str) or not _RATIONAL.match(text.strip()):
        raise DocumentError(f"rationals must be strings like \"p/q\", got {text!r}")
    try:
        return Fraction(text.strip())
    except ZeroDivisionError:
        raise DocumentError(f"zero denominator in {text!r}") from None


@dataclass(frozen=True)
class Document:
    kind: str
    payload: Any
    events: Mapping[str, Subset] = field(default_factory=dict)
    format_version: int = FORMAT_VERSION

    @property
    def frame(self) -> Frame:
        return self.payload if isinstance(self.payload, Frame) else self.payload.frame


# event expressions

_TOKEN = re.compile(r"\s*(?:(?P<op>[~&|,(){}*])|(?P<name>[^\s~&|,(){}*]+))")


def _tokenize(text: str) -> list[str]:
    tokens = []
    pos = 0
    text = text.strip()
    while pos < len(text):
        match = _TOKEN.match(text, pos)
        if not match or match.end() == pos:
            raise DocumentError(f"cannot parse event expression at {text[pos:]!r}")
        tokens.append(match.group("op") or match.group("name"))
        pos = match.end()
        while pos < len(text) and text[pos].isspace():
            pos += 1
    return tokens


def parse_event(text: str, frame: Frame, events: Mapping[str, Subset] | None = None) -> Subset:
    events = events or {}
    tokens = _tokenize(text)
    if not tokens:
        raise DocumentError("empty event expression")
    pos = 0

    def peek():
        return tokens[pos] if pos < len(tokens) else None

    def take(expected=None):
        nonlocal pos
        tok = peek()
        if tok is None or (expected is not None and tok != expected):
            raise DocumentError(f"expected {expected or 'a token'} in {text!r}")
        pos += 1
        return tok

    def name(tok):
        if tok in events:
            return events[tok]
        if tok in frame.elements:
            return frame.singleton(tok)
        raise DocumentError(f"{tok!r} is neither a named event nor an element label")

    def factor():
        tok = take()
        if tok == "~":
            return ~factor()
        if tok == "(":
            inner = expr()
            take(")")
            return inner
        if tok == "*":
            return frame.full
        if tok == "{":
            out = frame.empty
            if peek() == "}":
                take()
                return out
            while True:
                label = take()
                if label not in frame.elements:
                    raise DocumentError(f"{label!r} is not an element label")
                out = out | frame.singleton(label)
                if take() == "}":
                    return out
        if tok in "&|,)}":
            raise DocumentError(f"unexpected {tok!r} in {text!r}")
        return name(tok)

    def term():
        out = factor()
        while peek() == "&":
            take()
            out = out & factor()
        return out

    def expr():
        out = term()
        while peek() in ("|", ","):
            take()
            out = out | term()
        return out

    result = expr()
    if pos != len(tokens):
        raise DocumentError(f"trailing input {tokens[pos]!r} in {text!r}")
    return result


# serialization


def _labels(s: Subset) -> list[str]:
    return list(s.labels)


def _subset(frame: Frame, labels) -> Subset:
    if not isinstance(labels, list) or not all(isinstance(x, str) for x in labels):
        raise DocumentError(f"subsets must be arrays of labels, got {labels!r}")
    try:
        out = frame.subset(labels)
    except KeyError as exc:
        raise DocumentError(str(exc)) from None
    if len(out) != len(labels):
        raise DocumentError(f"repeated label in {labels!r}")
    return out


def _table(values, frame: Frame, skip_zero=False) -> list[dict]:
    return [
        {"set": list(Subset(frame, k).labels), "value": format_rational(values[k])}
        for k in canonical_order(frame.size)
        if not (skip_zero and values[k] == 0)
    ]


def _read_table(rows, frame: Frame, total=False) -> list[Fraction]:
    if not isinstance(rows, list):
        raise DocumentError("expected an array of {set, value} rows")
    values = [None] * (1 << frame.size)
    for row in rows:
        if not isinstance(row, dict) or "set" not in row or "value" not in row:
            raise DocumentError(f"malformed row {row!r}")
        bits = _subset(frame, row["set"]).bits
        if values[bits] is not None:
            raise DocumentError(f"subset {row['set']} listed twice")
        values[bits] = parse_rational(row["value"])
    if total and any(v is None for v in values):
        raise DocumentError("a belief table must list every subset")
    return [Fraction(0) if v is None else v for v in values]


def _payload_to_json(kind: str, payload, frame: Frame) -> dict:
    if kind == "frame":
        return {}
    if kind == "mass":
        return {"mass": _table(payload.values, frame, skip_zero=True)}
    if kind == "belief":
        return {"belief": _table(payload.values, frame)}
    if kind == "credal":
        return {"vertices": [[format_rational(x) for x in v] for v in payload.vertices]}
    if kind == "scenario":
        if isinstance(payload, PartitionScenario):
            return {"scenario": {
                "type": "partition",
                "cells": [_labels(c) for c in payload.cells],
                "weights": [format_rational(w) for w in payload.weights],
            }}
        return {"scenario": {
            "type": "constraints",
            "constraints": [
                {
                    "coefficients": [format_rational(c) for c in con.coefficients],
                    "relation": con.relation,
                    "bound": format_rational(con.bound),
                }
                for con in payload.constraints
            ],
        }}
    if isinstance(payload, ConditionalReport):
        pl = payload.belief.plausibilities()
        return {"report": {
            "type": "conditional",
            "rule": payload.rule.value,
            "event": _labels(payload.event),
            "history": [_labels(e) for e in payload.history],
            "table": [
                {
                    "set": list(Subset(frame, k).labels),
                    "belief": format_rational(payload.belief.values[k]),
                    "plausibility": format_rational(pl[k]),
                }
                for k in canonical_order(frame.size)
            ],
        }}
    return {"report": _certification_to_json(payload)}


def _certification_to_json(report: CertificationReport) -> dict:
    fd = report.decomposition
    b = fd.event.bits
    return {
        "type": "certification",
        "event": _labels(fd.event),
        "decomposition": {
            "inside": [
                {"set": _labels(s), "mass": format_rational(w)} for s, w in zip(fd.inside, fd.inside_mass)
            ],
            "straddling": [
                {"set": _labels(s), "trimmed": _labels(t), "mass": format_rational(w)}
                for s, t, w in zip(fd.straddling_raw, fd.straddling, fd.straddling_mass)
            ],
            "normalizer": format_rational(fd.normalizer),
        },
        "strings": [
            {"string": str(s), "head": s.head, "tail": list(s.tail), "value": format_rational(v)}
            for s, v in sorted(report.strings.items(), key=lambda kv: (len(kv[0].tail), kv[0]))
        ],
        "conditional_mass": [
            {"set": list(Subset(fd.event.frame, unpack_bits(k, b)).labels), "value": format_rational(v)}
            for k, v in sorted(enumerate(report.mass), key=lambda kv: (bin(kv[0]).count("1"), kv[0]))
            if v != 0
        ],
        "parts": dict(report.parts),
        "mismatch": None if report.mismatch is None else _labels(report.mismatch),
        "verdict": "verified" if report.verified else "failed",
    }


def to_json(doc: Document) -> dict:
    if doc.kind not in KINDS:
        raise DocumentError(f"unknown document kind {doc.kind!r}")
    frame = doc.frame
    out = {"format_version": doc.format_version, "kind": doc.kind, "frame": list(frame.elements)}
    if doc.events:
        out["events"] = {name: _labels(s) for name, s in doc.events.items()}
    out.update(_payload_to_json(doc.kind, doc.payload, frame))
    return out


def dumps(doc: Document) -> str:
    return json.dumps(to_json(doc), indent=2, ensure_ascii=False) + "\n"


def _require(data: dict, key: str):
    if key not in data:
        raise DocumentError(f"missing field {key!r}")
    return data[key]


def _payload_from_json(kind: str, data: dict, frame: Frame):
    if kind == "frame":
        return frame
    if kind == "mass":
        return MassFunction(frame, _read_table(_require(data, "mass"), frame))
    if kind == "belief":
        values = _read_table(_require(data, "belief"), frame, total=True)
        try:
            return BeliefFunction(frame, values)
        except NotABeliefFunctionError:
            # kept as a bare set function so that `check` can report the witness
            return SetFunction(frame, values)
    if kind == "credal":
        rows = _require(data, "vertices")
        return CredalSet(frame, tuple(tuple(parse_rational(x) for x in v) for v in rows))
    if kind == "scenario":
        sc = _require(data, "scenario")
        kind_ = _require(sc, "type")
        if kind_ == "partition":
            cells = tuple(_subset(frame, c) for c in _require(sc, "cells"))
            weights = tuple(parse_rational(w) for w in _require(sc, "weights"))
            return PartitionScenario(frame, cells, weights)
        if kind_ == "constraints":
            cons = tuple(
                LinearConstraint(
                    tuple(parse_rational(c) for c in _require(row, "coefficients")),
                    _require(row, "relation"),
                    parse_rational(_require(row, "bound")),
                )
                for row in _require(sc, "constraints")
            )
            return ConstraintSystem(frame, cons)
        raise DocumentError(f"unknown scenario type {kind_!r}")
    rep = _require(data, "report")
    if rep.get("type") == "conditional":
        rows = _require(rep, "table")
        values = _read_table([{"set": r["set"], "value": r["belief"]} for r in rows], frame, total=True)
        event = _subset(frame, _require(rep, "event"))
        history = tuple(_subset(frame, e) for e in rep.get("history", [rep["event"]]))
        return ConditionalReport(ConditioningRule.parse(_require(rep, "rule")), event, BeliefFunction(frame, values), history)
    if rep.get("type") == "certification":
        return _certification_from_json(rep, frame)
    raise DocumentError(f"unknown report type {rep.get('type')!r}")


def _certification_from_json(rep: dict, frame: Frame) -> CertificationReport:
    event = _subset(frame, _require(rep, "event"))
    dec = _require(rep, "decomposition")
    inside = _require(dec, "inside")
    stradd = _require(dec, "straddling")
    fd = FocalDecomposition(
        event,
        tuple(_subset(frame, r["set"]) for r in inside),
        tuple(_subset(frame, r["set"]) for r in stradd),
        tuple(_subset(frame, r["trimmed"]) for r in stradd),
        tuple(parse_rational(r["mass"]) for r in inside),
        tuple(parse_rational(r["mass"]) for r in stradd),
        parse_rational(_require(dec, "normalizer")),
    )
    strings = {
        FocalString(int(r["head"]), tuple(int(j) for j in r["tail"])): parse_rational(r["value"])
        for r in _require(rep, "strings")
    }
    mass = [Fraction(0)] * (1 << len(event))
    for r in _require(rep, "conditional_mass"):
        s = _subset(frame, r["set"])
        if not s.issubset(event):
            raise DocumentError(f"conditional mass on {s}, which is not inside the event")
        mass[pack_bits(s.bits, event.bits)] = parse_rational(r["value"])
    mismatch = rep.get("mismatch")
    return CertificationReport(
        fd, strings, tuple(mass), {k: bool(v) for k, v in _require(rep, "parts").items()},
        None if mismatch is None else _subset(frame, mismatch),
    )


def from_json(data: dict) -> Document:
    if not isinstance(data, dict):
        raise DocumentError("a document must be a JSON object")
    version = data.get("format_version")
    if version != FORMAT_VERSION:
        raise DocumentError(f"unsupported format_version {version!r}")
    kind = data.get("kind")
    if kind not in KINDS:
        raise DocumentError(f"unknown document kind {kind!r}")
    labels = _require(data, "frame")
    try:
        frame = Frame(tuple(labels))
        events = {
            str(name): _subset(frame, labels_) for name, labels_ in (data.get("events") or {}).items()
        }
        payload = _payload_from_json(kind, data, frame)
    except DocumentError:
        raise
    except (BeliefError, ValueError, TypeError, KeyError, ZeroDivisionError) as exc:
        raise DocumentError(f"invalid {kind} document: {exc}") from exc
    return Document(kind, payload, events, version)


def loads(text: str) -> Document:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise DocumentError(f"invalid JSON: {exc}") from None
    return from_json(data)
