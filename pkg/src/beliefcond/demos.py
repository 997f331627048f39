"""Scripted reproductions of the worked examples.

Each demo returns its report text and whether every computed value matched
the value it is expected to reproduce.  Output is deterministic so it can be
compared byte for byte against golden files.
"""

from __future__ import annotations

from fractions import Fraction

from . import fixtures
from .conditioning import containment_check, ds_bounds, fh_bounds, iterate, sure_thing_check
from .credal import (
    conditional_envelope,
    envelope,
    envelope_setfunction,
    extreme_points,
    partition_credal,
    redistribution_credal,
)
from .scenarios import lost_information, three_prisoners
from .setfunctions import BeliefFunction


class _Report:
    def __init__(self, title):
        self.lines = [title, "=" * len(title)]
        self.ok = True

    def text(self, line=""):
        self.lines.append(line)

    def value(self, label, got, expected=None):
        if expected is None:
            self.lines.append(f"  {label:<34} {got!s:>9}")
            return
        match = got == expected
        self.ok &= match
        flag = "MATCH" if match else "MISMATCH"
        self.lines.append(f"  {label:<34} {got!s:>9}   expected {expected!s:>9}   {flag}")

    def check(self, label, holds):
        self.ok &= bool(holds)
        self.lines.append(f"  {label:<34} {'yes' if holds else 'no':>9}   {'MATCH' if holds else 'MISMATCH'}")

    def render(self):
        self.lines.append("")
        self.lines.append("all values match" if self.ok else "SOME VALUES DO NOT MATCH")
        return "\n".join(self.lines) + "\n"


def _mass_lines(report: _Report, bel: BeliefFunction):
    for s in bel.mass.focal_sets():
        report.text(f"  m({s}) = {bel.mass[s]}")


def three_prisoners_demo():
    sc = three_prisoners()
    bel, ev, exp = sc.belief, sc.events, sc.expected
    a, b = ev["lives-a"], ev["says-b"]
    r = _Report("three prisoners")
    r.text("outcome xy: x is pardoned, the jailer says y will be executed")
    r.text(f"frame {{{', '.join(sc.frame.elements)}}}; mass function:")
    _mass_lines(r, bel)
    r.text()
    r.text("prior")
    r.value("Bel(says-b)", bel[b], exp["Bel(says-b)"])
    r.value("Pl(says-b)", bel.plausibility(b), exp["Pl(says-b)"])
    r.value("Bel(lives-a & says-b)", bel[a & b], exp["Bel(lives-a & says-b)"])
    r.value("Pl(lives-a & says-b)", bel.plausibility(a & b), exp["Pl(lives-a & says-b)"])
    r.text()
    fh_lo, fh_hi = fh_bounds(bel, a, b)
    ds_lo, ds_hi = ds_bounds(bel, a, b)
    r.text("lower-envelope conditioning")
    r.value("Bel(lives-a | says-b)", fh_lo, exp["Bel(lives-a | says-b)"])
    r.value("Pl(lives-a | says-b)", fh_hi, exp["Pl(lives-a | says-b)"])
    r.text("Dempster conditioning")
    r.value("Bel(lives-a || says-b)", ds_lo, exp["Bel(lives-a || says-b)"])
    r.value("Pl(lives-a || says-b)", ds_hi, exp["Pl(lives-a || says-b)"])
    r.text()
    chain = containment_check(bel, a, b)
    r.text("containment chain Bel(A|B) <= Bel(A||B) <= Pl(A||B) <= Pl(A|B)")
    r.text("  (" + ", ".join(str(v) for v in chain.values) + ")")
    r.check("chain ordered", chain.holds)
    r.text()
    cs = extreme_points(bel)
    r.text(f"consistent probabilities: {len(cs)} extreme points")
    for v in cs.vertices:
        r.text("  (" + ", ".join(str(x) for x in v) + ")")
    lo, hi = conditional_envelope(cs, a, b)
    r.value("min Pr(lives-a | says-b)", lo, fh_lo)
    r.value("max Pr(lives-a | says-b)", hi, fh_hi)
    return r.render(), r.ok


def noncommute_demo():
    fx = fixtures.noncommuting()
    bel, a, b, c = fx.belief, fx.target, fx.first, fx.second
    r = _Report("order of updates")
    r.text(f"stored instance on {{{', '.join(bel.frame.elements)}}}; mass function:")
    _mass_lines(r, bel)
    r.text(f"A = {a}, B = {b}, C = {c}")
    r.text()
    fh = tuple(iterate(bel, events, "fh")[a] for events in ([b, c], [c, b], [b & c]))
    ds = tuple(iterate(bel, events, "ds")[a] for events in ([b, c], [c, b], [b & c]))
    r.text("lower-envelope conditioning")
    r.value("B then C", fh[0], fixtures.NONCOMMUTING_FH[0])
    r.value("C then B", fh[1], fixtures.NONCOMMUTING_FH[1])
    r.value("B & C at once", fh[2], fixtures.NONCOMMUTING_FH[2])
    r.check("all three differ", len(set(fh)) == 3)
    r.text("Dempster conditioning")
    for label, v in zip(("B then C", "C then B", "B & C at once"), ds):
        r.value(label, v, fixtures.NONCOMMUTING_DS)
    r.check("all three agree", len(set(ds)) == 1)
    return r.render(), r.ok


def sure_thing_demo():
    r = _Report("sure-thing principle")
    r.text("Bel(p) >= min(Bel(p given q), Bel(p given ~q))")
    r.text()
    sc = three_prisoners()
    bel, ev = sc.belief, sc.events
    p, q = ev["lives-a"], ev["says-b"]
    r.text("three prisoners, p = lives-a, q = says-b")
    for rule in ("fh", "ds"):
        res = sure_thing_check(bel, p, q, rule)
        r.text(f"  rule {rule}: Bel(p) = {res.belief}, given q = {res.given}, given ~q = {res.given_not}")
        if rule == "fh":
            r.check("principle holds", res.holds)
        else:
            r.check("principle fails", not res.holds)
    r.text()
    fx = fixtures.ds_sure_thing()
    r.text(f"stored instance, p = {fx.p}, q = {fx.q}; mass function:")
    _mass_lines(r, fx.belief)
    ds = sure_thing_check(fx.belief, fx.p, fx.q, "ds")
    want = fixtures.DS_SURE_THING_VALUES
    r.value("Bel(p)", ds.belief, want[0])
    r.value("Bel(p || q)", ds.given, want[1])
    r.value("Bel(p || ~q)", ds.given_not, want[2])
    r.check("Dempster rule violates principle", not ds.holds)
    fh = sure_thing_check(fx.belief, fx.p, fx.q, "fh")
    r.value("Bel(p | q)", fh.given)
    r.value("Bel(p | ~q)", fh.given_not)
    r.check("lower-envelope rule satisfies it", fh.holds)
    return r.render(), r.ok


def beehive_demo():
    sc = three_prisoners()
    ps, ev = sc.partition, sc.events
    a, b = ev["lives-a"], ev["says-b"]
    r = _Report("partition process and the two rules")
    r.text("cells chosen with probability 1/3 each: " + ", ".join(str(c) for c in ps.cells))
    r.text()
    original = partition_credal(ps)
    lo, hi = conditional_envelope(original, a, b)
    r.text(f"original process: {len(original)} extreme points")
    r.value("min Pr(lives-a | says-b)", lo, sc.expected["Bel(lives-a | says-b)"])
    r.value("max Pr(lives-a | says-b)", hi, sc.expected["Pl(lives-a | says-b)"])
    r.text()
    moved = redistribution_credal(ps, b)
    r.text(f"process that picks a point of says-b whenever possible: {len(moved)} extreme point(s)")
    for v in moved.vertices:
        r.text("  (" + ", ".join(str(x) for x in v) + ")")
    lo, hi = conditional_envelope(moved, a, b)
    r.value("min Pr(lives-a | says-b)", lo, sc.expected["Bel(lives-a || says-b)"])
    r.value("max Pr(lives-a | says-b)", hi, sc.expected["Pl(lives-a || says-b)"])
    r.value("Pr(says-b | lives-a)", conditional_envelope(moved, b, a)[0], Fraction(1))
    return r.render(), r.ok


def lost_info_demo():
    sc = lost_information()
    f, cs = sc.frame, sc.credal
    r = _Report("lower envelopes lose information")
    r.text("probabilities on {a,b,c} with 1/4 <= Pr(a) <= 1/2, 1/4 <= Pr(b) <= 1/2, Pr(a) = Pr(b)")
    r.text(f"extreme points: {len(cs)}")
    for v in cs.vertices:
        r.text("  (" + ", ".join(str(x) for x in v) + ")")
    r.text()
    verdict = envelope_setfunction(cs)
    r.check("lower envelope is a belief function", verdict.is_belief)
    for label in ("a", "b"):
        lo, hi = envelope(cs, f.singleton(label))
        r.value(f"Bel({{{label}}})", lo, sc.expected[f"Bel({{{label}}})"])
        r.value(f"Pl({{{label}}})", hi, sc.expected[f"Pl({{{label}}})"])
    r.text()
    bel = BeliefFunction(f, verdict.lower.values)
    witness = next((v for v in extreme_points(bel).vertices if v[0] != v[1]), None)
    r.check("consistent Pr with Pr(a) != Pr(b)", witness is not None)
    if witness is not None:
        r.text("  (" + ", ".join(str(x) for x in witness) + ")")
        r.check("it violates Pr(a) = Pr(b)", not sc.constraints.constraints[-1].satisfied(witness))
    return r.render(), r.ok


DEMOS = {
    "three-prisoners": three_prisoners_demo,
    "noncommute": noncommute_demo,
    "sure-thing": sure_thing_demo,
    "beehive": beehive_demo,
    "lost-info": lost_info_demo,
}


def run_demo(name: str):
    try:
        demo = DEMOS[name]
    except KeyError:
        raise ValueError(f"unknown demo {name!r}; choose from {', '.join(DEMOS)}") from None
    return demo()
