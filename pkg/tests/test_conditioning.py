import random
from fractions import Fraction

import pytest

from beliefcond import fixtures
from beliefcond.conditioning import (
    ConditioningRule,
    condition,
    containment_check,
    ds_bounds,
    ds_condition,
    fh_bounds,
    fh_condition,
    iterate,
    sure_thing_check,
)
from beliefcond.errors import ConditioningUndefined, FrameMismatchError
from beliefcond.frame import Frame, Subset
from beliefcond.generators import default_frame, random_probability
from beliefcond.setfunctions import MassFunction, belief_from_mass, probability_belief, vacuous_belief

from conftest import sweep_beliefs

H = Fraction(1, 2)


def _ds_by_transfer(bel, b):
    """Dempster conditioning computed on masses: move m(X) to X & B, drop empties, renormalize."""
    out = [Fraction(0)] * (1 << bel.frame.size)
    for s in bel.mass.focal_sets():
        out[s.bits & b.bits] += bel.mass[s]
    lost = out[0]
    out[0] = Fraction(0)
    return belief_from_mass(MassFunction(bel.frame, [v / (1 - lost) for v in out]))


def test_three_prisoners_values(prisoners):
    bel, ev = prisoners.belief, prisoners.events
    a, b = ev["lives-a"], ev["says-b"]
    assert fh_bounds(bel, a, b) == (0, H)
    assert ds_bounds(bel, a, b) == (H, H)
    assert containment_check(bel, a, b).values == (0, H, H, H)


def test_rule_parsing():
    assert ConditioningRule.parse("FH") is ConditioningRule.FH
    assert ConditioningRule.parse(ConditioningRule.DS) is ConditioningRule.DS
    with pytest.raises(ValueError):
        ConditioningRule.parse("bayes")


def test_full_vectors_agree_with_pointwise_bounds_and_duality():
    for _, bel in sweep_beliefs(60, seed=3, sizes=(2, 3, 4)):
        for b in bel.frame.subsets():
            if bel.plausibility(b) == 0:
                continue
            ds = ds_condition(bel, b).belief
            assert ds == _ds_by_transfer(bel, b)
            if bel[b] > 0:
                fh = fh_condition(bel, b).belief
            for a in bel.frame.subsets():
                assert (ds[a], ds.plausibility(a)) == ds_bounds(bel, a, b)
                if bel[b] > 0:
                    lo, hi = fh_bounds(bel, a, b)
                    assert (fh[a], fh.plausibility(a)) == (lo, hi)
                    assert hi == 1 - fh_bounds(bel, ~a, b)[0]


def test_both_rules_reduce_to_bayes_on_probabilities():
    for seed in range(40):
        n = 2 + seed % 4
        probs = random_probability(seed, n)
        bel = probability_belief(default_frame(n), probs)
        for b in bel.frame.subsets():
            pb = bel[b]
            if pb == 0:
                continue
            for a in bel.frame.subsets():
                want = bel[a & b] / pb
                assert fh_bounds(bel, a, b) == (want, want)
                assert ds_bounds(bel, a, b) == (want, want)


def test_conditioning_on_whole_frame_is_identity():
    for _, bel in sweep_beliefs(30, seed=4):
        full = bel.frame.full
        assert fh_condition(bel, full).belief == bel
        assert ds_condition(bel, full).belief == bel


def test_conditional_is_supported_inside_event():
    for _, bel in sweep_beliefs(30, seed=5, sizes=(3, 4)):
        for b in bel.frame.subsets():
            if bel[b] == 0:
                continue
            for rule in ("fh", "ds"):
                cond = condition(bel, b, rule).belief
                assert cond[b] == 1
                assert all(cond.mass[s] == 0 for s in cond.mass.focal_sets() if not s.issubset(b))


def test_dempster_updates_commute():
    rng = random.Random(6)
    for _, bel in sweep_beliefs(80, seed=6, sizes=(3, 4, 5)):
        subsets = list(bel.frame.subsets())
        b, c = rng.choice(subsets), rng.choice(subsets)
        try:
            bc = iterate(bel, [b, c], "ds").belief
        except ConditioningUndefined:
            continue
        assert bc == iterate(bel, [c, b], "ds").belief == ds_condition(bel, b & c).belief


def test_stored_noncommuting_instance():
    fx = fixtures.noncommuting()
    bel, a, b, c = fx.belief, fx.target, fx.first, fx.second
    got = tuple(iterate(bel, ev, "fh")[a] for ev in ([b, c], [c, b], [b & c]))
    assert got == fixtures.NONCOMMUTING_FH
    assert len(set(got)) == 3
    ds = {iterate(bel, ev, "ds")[a] for ev in ([b, c], [c, b], [b & c])}
    assert ds == {fixtures.NONCOMMUTING_DS}


def test_sure_thing(prisoners):
    bel, ev = prisoners.belief, prisoners.events
    assert sure_thing_check(bel, ev["lives-a"], ev["says-b"], "fh").holds
    assert not sure_thing_check(bel, ev["lives-a"], ev["says-b"], "ds").holds
    fx = fixtures.ds_sure_thing()
    ds = sure_thing_check(fx.belief, fx.p, fx.q, "ds")
    assert (ds.belief, ds.given, ds.given_not) == fixtures.DS_SURE_THING_VALUES
    assert not ds
    assert sure_thing_check(fx.belief, fx.p, fx.q, "fh")


def test_undefined_conditioning():
    f = Frame(("a", "b", "c"))
    bel = vacuous_belief(f)
    with pytest.raises(ConditioningUndefined):
        fh_condition(bel, f.singleton("a"))
    assert ds_condition(bel, f.singleton("a")).belief[f.singleton("a")] == 1
    point = belief_from_mass(MassFunction.from_mapping(f, {("a",): 1}))
    with pytest.raises(ConditioningUndefined):
        ds_condition(point, f.subset(["b", "c"]))
    with pytest.raises(ConditioningUndefined):
        ds_bounds(point, f.full, f.empty)


def test_iterate_reports_failing_step():
    f = Frame(("a", "b", "c"))
    point = belief_from_mass(MassFunction.from_mapping(f, {("a",): H, ("b",): H}))
    with pytest.raises(ConditioningUndefined) as exc:
        iterate(point, [f.subset(["a", "b"]), f.singleton("a"), f.singleton("c")], "fh")
    assert exc.value.step == 2
    assert str(exc.value).startswith("step 2: ")
    report = iterate(point, [], "fh")
    assert report.belief == point and report.event == f.full


def test_frame_mismatch():
    bel = vacuous_belief(Frame(("a", "b")))
    with pytest.raises(FrameMismatchError):
        fh_condition(bel, Frame(("a", "c")).full)
