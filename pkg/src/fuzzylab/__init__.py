"""Exact fuzzy labeling semantics for fuzzy argumentation systems."""

from .classical import (
    AF,
    ClassicalLabeling,
    Label,
    af_to_fas,
    clab_to_flab,
    enumerate_classical_complete,
    is_classical_complete,
)
from .core import (
    FAS,
    AttackKind,
    FuzzyLabeling,
    FuzzySet,
    apply_isomorphism,
    attack_intensity,
    classify_attack,
    degree,
    fs_complement,
    fs_intersect,
    fs_subset,
    fs_union,
    joint_attack_intensity,
)
from .errors import DomainError, FuzzyLabError, ParseError, ResourceError
from .extensions import (
    ExtensionKind,
    check_fextension,
    enumerate_fextensions,
    ext_to_flab,
    flab_to_ext,
    weakening_defends,
)
from .io import parse_af, parse_fas, parse_fextension, parse_labeling, render_fas, render_labeling, render_report
from .postulates import (
    Postulate,
    PostulateReport,
    check_postulate,
    check_profile,
    dp_by_sufficient_attackers,
    sdp_closed_form,
    sufficient_attacker_set,
)
from .principles import (
    InstanceFamily,
    Outcome,
    Principle,
    PrincipleLab,
    PrincipleVerdict,
    counterexample_registry,
    evaluate_principle,
    random_fas,
)
from .semantics import (
    PROFILES,
    LabelingSet,
    Semantics,
    characteristic_values,
    enumerate_complete,
    grounded_fixpoint,
    ideal,
    is_labeling,
    leq_labeling,
    select_extremal,
    solve,
)

PrincipleId = Principle

__version__ = "0.1.0"
