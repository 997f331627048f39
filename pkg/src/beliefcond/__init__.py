"""Exact belief functions with lower-envelope and Dempster conditioning."""

from .conditioning import (
    ConditionalReport,
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
from .condmass import (
    FocalDecomposition,
    FocalString,
    certify_conditional_belief,
    conditional_mass,
    decompose,
    string_mass,
    string_table,
)
from .credal import (
    ConstraintSystem,
    CredalSet,
    LinearConstraint,
    PartitionScenario,
    conditional_envelope,
    envelope,
    envelope_setfunction,
    extreme_points,
    partition_belief,
    partition_credal,
    polytope_vertices,
    redistribution_credal,
)
from .errors import (
    BeliefError,
    ConditioningUndefined,
    DocumentError,
    FrameMismatchError,
    FrameTooLargeError,
    InfeasibleConstraintsError,
    InvalidMassError,
    InvalidScenarioError,
    NotABeliefFunctionError,
)
from .frame import Frame, Subset
from .generators import random_belief, random_mass, random_probability
from .setfunctions import (
    BeliefFunction,
    MassFunction,
    SetFunction,
    belief_from_mass,
    check_belief_axioms,
    mass_from_belief,
    plausibility,
    probability_belief,
    vacuous_belief,
)

__version__ = "0.1.0"
