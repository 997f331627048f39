from fractions import Fraction
from itertools import combinations

import pytest

from beliefcond.conditioning import fh_condition
from beliefcond.condmass import (
    FocalString,
    certify_conditional_belief,
    conditional_mass,
    decompose,
    extend_to_frame,
    string_mass,
    string_table,
)
from beliefcond.errors import ConditioningUndefined
from beliefcond.frame import Frame, unpack_bits
from beliefcond.generators import default_frame, random_probability
from beliefcond.setfunctions import MassFunction, belief_from_mass, probability_belief, vacuous_belief

from conftest import sweep_beliefs

H = Fraction(1, 2)


def _cases(count, seed, sizes=(2, 3, 4, 5)):
    for _, bel in sweep_beliefs(count, seed=seed, sizes=sizes):
        for b in bel.frame.subsets():
            if bel[b] > 0:
                yield bel, b


def _tails(k):
    for r in range(k + 1):
        yield from combinations(range(k), r)


def test_three_prisoners_decomposition(prisoners):
    bel, ev = prisoners.belief, prisoners.events
    fd = decompose(bel, ev["says-b"])
    assert fd.normalizer == Fraction(2, 3)
    assert fd.beta == (H,) and fd.alpha == (H,)
    assert fd.inside == (ev["lives-c"],)
    assert fd.straddling == (ev["lives-a"] & ev["says-b"],)
    table = string_table(fd)
    assert table == {FocalString(0): H, FocalString(0, (0,)): H}
    assert [str(s) for s in sorted(table)] == ["B1", "B1 A1"]
    m = conditional_mass(fd)
    sub = fd.subframe
    assert m[sub.singleton("cb")] == H and m[sub.full] == H


def test_recursion_matches_fast_table():
    for bel, b in _cases(40, seed=20, sizes=(3, 4, 5)):
        fd = decompose(bel, b)
        table = string_table(fd)
        assert set(table) == {FocalString(i, t) for i in range(len(fd.inside)) for t in _tails(len(fd.straddling))}
        for s, w in table.items():
            assert string_mass(fd, s) == w


def test_sub_tail_sums_telescope():
    for bel, b in _cases(40, seed=21):
        fd = decompose(bel, b)
        table = string_table(fd)
        for s in table:
            subtails = (tuple(s.tail[j] for j in r) for r in _tails(len(s.tail)))
            partial = sum(table[FocalString(s.head, r)] for r in subtails)
            assert partial == fd.beta[s.head] / (1 - sum(fd.alpha[j] for j in s.tail))
        assert sum(table.values()) == 1


def test_single_straddler_weight():
    f = Frame(("a", "b", "c"))
    m = MassFunction.from_mapping(f, {("a",): Fraction(1, 3), ("b", "c"): Fraction(1, 6), ("c",): H})
    fd = decompose(m, f.subset(["a", "b"]))
    beta, alpha = fd.beta[0], fd.alpha[0]
    assert (beta, alpha) == (Fraction(2, 3), Fraction(1, 3))
    assert string_mass(fd, FocalString(0, (0,))) == beta * alpha / (1 - alpha)


def test_aggregation_puts_string_weight_on_represented_set():
    for bel, b in _cases(30, seed=22, sizes=(3, 4)):
        fd = decompose(bel, b)
        table = string_table(fd)
        m = conditional_mass(fd)
        want = {}
        for s, w in table.items():
            bits = s.represents(fd).bits
            want[bits] = want.get(bits, 0) + w
        got = {unpack_bits(k, b.bits): v for k, v in enumerate(m.values) if v}
        assert got == {k: v for k, v in want.items() if v}


def test_without_straddlers_mass_is_rescaled():
    f = Frame(("a", "b", "c", "d"))
    m = MassFunction.from_mapping(f, {("a",): Fraction(1, 4), ("a", "b"): Fraction(1, 4), ("c", "d"): H})
    b = f.subset(["a", "b"])
    fd = decompose(m, b)
    assert fd.straddling == ()
    local = conditional_mass(fd)
    assert extend_to_frame(local.values, b)[f.singleton("a").bits] == H


def test_probability_case():
    for seed in range(20):
        n = 2 + seed % 4
        bel = probability_belief(default_frame(n), random_probability(seed, n))
        for b in bel.frame.subsets():
            if bel[b] > 0:
                report = certify_conditional_belief(bel, b)
                assert report.verified
                assert all(bin(k).count("1") == 1 for k, v in enumerate(report.mass) if v)


def test_certification_on_random_instances():
    for bel, b in _cases(60, seed=23):
        report = certify_conditional_belief(bel, b)
        assert report.verified, report.parts
        assert report.mismatch is None
        assert extend_to_frame(belief_from_mass(conditional_mass(report.decomposition)).values, b) == fh_condition(bel, b).belief.values


def test_undefined_without_inside_focal_set():
    f = Frame(("a", "b"))
    with pytest.raises(ConditioningUndefined):
        decompose(vacuous_belief(f), f.singleton("a"))


def test_string_tail_must_increase():
    with pytest.raises(ValueError):
        FocalString(0, (2, 1))
