import random
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from beliefcond.errors import FrameTooLargeError, InvalidMassError, NotABeliefFunctionError
from beliefcond.frame import Frame, Subset
from beliefcond.generators import default_frame, random_belief, random_mass, random_probability
from beliefcond.scenarios import non_belief_envelope
from beliefcond.credal import envelope_setfunction
from beliefcond.setfunctions import (
    BeliefFunction,
    MassFunction,
    SetFunction,
    as_rational,
    belief_from_mass,
    check_belief_axioms,
    mass_from_belief,
    mobius_transform,
    probability_belief,
    vacuous_belief,
    zeta_transform,
)

from conftest import naive_mobius, naive_subset_sum

H = Fraction(1, 2)
vectors = st.integers(min_value=0, max_value=5).flatmap(
    lambda n: st.lists(st.fractions(min_value=-3, max_value=3, max_denominator=7), min_size=1 << n, max_size=1 << n)
)


@given(vectors)
def test_fast_transforms_match_naive_sums(values):
    assert zeta_transform(values) == naive_subset_sum(values)
    assert mobius_transform(values) == naive_mobius(values)
    assert mobius_transform(zeta_transform(values)) == list(values)


@settings(max_examples=60)
@given(st.integers(0, 10**6), st.integers(1, 6), st.integers(1, 10))
def test_belief_mass_round_trip(seed, n, focal):
    mass = random_mass(seed, n, min(focal, (1 << n) - 1))
    bel = belief_from_mass(mass)
    assert mass_from_belief(bel) == mass
    assert check_belief_axioms(bel)
    pl = bel.plausibilities()
    for k in range(1 << n):
        assert 0 <= bel.values[k] <= pl[k] <= 1
        for j in range(1 << n):
            if j & ~k == 0:
                assert bel.values[j] <= bel.values[k]


def test_point_mass_vacuous_and_probability():
    f = Frame(("a", "b", "c"))
    vac = vacuous_belief(f)
    assert all(vac[s] == 0 for s in f.subsets() if s != f.full)
    assert all(vac.plausibility(s) == 1 for s in f.subsets() if not s.is_empty)
    p = probability_belief(f, [H, Fraction(1, 3), Fraction(1, 6)])
    assert p.is_probability() and not vac.is_probability()
    assert p[f.subset(["a", "c"])] == Fraction(2, 3) == p.plausibility(f.subset(["a", "c"]))
    point = belief_from_mass(MassFunction.from_mapping(f, {("b",): 1}))
    assert point[f.singleton("b")] == 1 and point[f.subset(["a", "c"])] == 0


def test_mass_validation():
    f = Frame(("a", "b"))
    with pytest.raises(InvalidMassError):
        MassFunction(f, [0, H, H, H])
    with pytest.raises(InvalidMassError):
        MassFunction(f, [0, Fraction(3, 2), -H, 0])
    with pytest.raises(InvalidMassError):
        MassFunction(f, [H, H, 0, 0])


def test_floats_are_rejected():
    with pytest.raises(TypeError):
        as_rational(0.5)
    with pytest.raises(TypeError):
        SetFunction(Frame(("a",)), [0, 1.0])


def test_frame_cap():
    with pytest.raises(FrameTooLargeError):
        vacuous_belief(Frame(tuple(f"e{i}" for i in range(13))))


def test_one_on_every_nonempty_set_is_not_a_belief():
    # f({a}) + f({b}) - f({}) = 2 > f({a,b}) = 1
    f = Frame(("a", "b"))
    g = SetFunction(f, [0, 1, 1, 1])
    direct = check_belief_axioms(g, "direct")
    assert direct.violated == "B3"
    assert set(direct.witness) == {f.singleton("a"), f.singleton("b")}
    mob = check_belief_axioms(g, "mobius")
    assert mob.violated == "B3" and mob.witness == (f.full,)
    with pytest.raises(NotABeliefFunctionError):
        BeliefFunction(f, g.values)


def test_lower_envelope_of_three_distributions_is_not_a_belief():
    verdict = envelope_setfunction(non_belief_envelope())
    assert not verdict.is_belief
    assert verdict.report.violated == "B3"
    f = verdict.lower.frame
    assert verdict.witness == (f.full,)
    assert verdict.report.mobius[f.full_mask] == -H
    assert check_belief_axioms(verdict.lower, "direct").violated == "B3"


def _random_set_function(rng, n):
    choices = [Fraction(k, 4) for k in range(5)]
    values = [Fraction(0)] + [rng.choice(choices) for _ in range((1 << n) - 2)] + [Fraction(1)]
    if rng.random() < 0.1:
        values[rng.randrange(1 << n)] = Fraction(-1, 4)
    if rng.random() < 0.1:
        values[0] = Fraction(1, 4)
    return SetFunction(default_frame(n), values)


def test_direct_and_mobius_checks_agree():
    rng = random.Random(7)
    seen = {True: 0, False: 0}
    for i in range(600):
        n = rng.randint(1, 3)
        if i % 3 == 0:
            f = random_belief(rng.randrange(1 << 30), n, rng.randint(1, (1 << n) - 1))
        else:
            f = _random_set_function(rng, n)
        direct = check_belief_axioms(f, "direct")
        mob = check_belief_axioms(f, "mobius")
        assert direct.ok == mob.ok
        if not direct.ok:
            assert direct.violated == mob.violated
        seen[direct.ok] += 1
    assert seen[True] > 100 and seen[False] > 100


def test_direct_check_is_capped():
    with pytest.raises(FrameTooLargeError):
        check_belief_axioms(vacuous_belief(default_frame(4)), "direct")


def test_generators_are_deterministic():
    assert random_mass(5, 4, 3) == random_mass(5, 4, 3)
    assert random_probability(5, 4) == random_probability(5, 4)
    assert sum(random_probability(11, 5)) == 1
    assert len(random_mass(5, 4, 3).focal_sets()) == 3


def test_items_are_in_canonical_order():
    f = Frame(("a", "b"))
    bel = vacuous_belief(f)
    assert [str(s) for s, _ in bel.items()] == ["{}", "{a}", "{b}", "{a,b}"]
    assert isinstance(next(iter(bel.items()))[0], Subset)
