from fractions import Fraction

import pytest

from beliefcond.conditioning import ds_condition, iterate
from beliefcond.condmass import certify_conditional_belief
from beliefcond.credal import envelope_setfunction, extreme_points
from beliefcond.documents import Document, dumps, format_rational, loads, parse_event, parse_rational
from beliefcond.errors import DocumentError
from beliefcond.frame import Frame
from beliefcond.scenarios import lost_information, non_belief_envelope
from beliefcond.setfunctions import SetFunction

from conftest import sweep_beliefs


def _documents(prisoners):
    bel, ev = prisoners.belief, prisoners.events
    yield Document("frame", prisoners.frame)
    yield Document("mass", bel.mass, ev)
    yield Document("belief", bel, ev)
    yield Document("credal", extreme_points(bel))
    yield Document("scenario", prisoners.partition, ev)
    yield Document("scenario", lost_information().constraints)
    yield Document("report", ds_condition(bel, ev["says-b"]), ev)
    yield Document("report", iterate(bel, [ev["says-b"], ev["lives-a"] | ev["lives-c"]], "fh"))
    yield Document("report", certify_conditional_belief(bel, ev["says-b"]), ev)


def test_every_kind_round_trips(prisoners):
    kinds = set()
    for doc in _documents(prisoners):
        text = dumps(doc)
        back = loads(text)
        assert back == doc
        assert dumps(back) == text
        kinds.add(doc.kind)
    assert kinds == {"frame", "mass", "belief", "credal", "scenario", "report"}


def test_random_documents_round_trip():
    for _, bel in sweep_beliefs(40, seed=30):
        for doc in (Document("mass", bel.mass), Document("belief", bel)):
            assert loads(dumps(doc)) == doc
        b = bel.frame.mask(bel.mass.focal_sets()[0].bits)
        report = Document("report", certify_conditional_belief(bel, b))
        assert dumps(loads(dumps(report))) == dumps(report)


def test_non_belief_table_loads_as_set_function():
    lower = envelope_setfunction(non_belief_envelope()).lower
    doc = loads(dumps(Document("belief", lower)))
    assert type(doc.payload) is SetFunction
    assert doc.payload.values == lower.values


def test_rationals():
    assert parse_rational("3/6") == Fraction(1, 2)
    assert parse_rational("-2") == -2
    assert parse_rational(4) == 4
    assert format_rational(Fraction(-3, 9)) == "-1/3"
    for bad in ("0.5", "1/0", "1 / 2", 0.5, True, None, "1e3"):
        with pytest.raises(DocumentError):
            parse_rational(bad)


def test_malformed_documents():
    for text in ("{", "[]", '{"kind": "mass"}', '{"format_version": 9, "kind": "frame", "frame": ["a"]}',
                 '{"format_version": 1, "kind": "mass", "frame": ["a", "b"], "mass": [{"set": ["z"], "value": "1"}]}',
                 '{"format_version": 1, "kind": "mass", "frame": ["a", "b"], "mass": [{"set": ["a"], "value": "1/2"}]}'):
        with pytest.raises(DocumentError):
            loads(text)


def test_event_expressions(prisoners):
    f, ev = prisoners.frame, prisoners.events
    assert parse_event("says-b", f, ev) == ev["says-b"]
    assert parse_event("~says-b", f, ev) == ev["says-c"]
    assert parse_event("lives-a & says-b", f, ev) == f.singleton("ab")
    assert parse_event("lives-b | lives-c", f, ev) == parse_event("{bc, cb}", f, ev)
    assert parse_event("lives-b, lives-c", f, ev) == parse_event("bc|cb", f)
    assert parse_event("~(lives-a | lives-b)", f, ev) == ev["lives-c"]
    assert parse_event("*", f) == f.full and parse_event("{}", f) == f.empty
    assert parse_event("a & b | c", Frame(("a", "b", "c"))) == Frame(("a", "b", "c")).singleton("c")
    for bad in ("says-d", "(says-b", "says-b &", "", "{ab"):
        with pytest.raises(DocumentError):
            parse_event(bad, f, ev)
