"""Finite McKinsey-Tarski algebras, frames, and their separation axioms.

A finite MT-algebra is the powerset of a finite topological space with its
interior operator; :class:`FinSpace` carries both readings.  Elements are
integer bitmasks (bit ``i`` set iff point ``i`` belongs to the set).
"""

from .census import CensusRow, census, summary
from .completions import (Envelope, FinPoset, boolean_envelope, envelope_generic,
                          generic_matches_shortcut, lower_extension, macneille, mt_from_frame,
                          validate_poset)
from .core import (ElementFamily, FinSpace, Kind, MTMorphism, check_mt_morphism, closure,
                   family, generated_complete_boolean, generated_complete_lattice, interior,
                   join_generates, meet_generates, validate_space)
from .enumeration import enumerate_topologies, space_id
from .errors import (BoundExceeded, InvariantViolation, MTKitError, NotAFrameHom, NotALattice,
                     NotAPoset, NotATopology, NotClosed, NotContinuous, NotDistributive,
                     NotNormal, NotOpen, NotRatherBelow, PreconditionViolated, SchemaError,
                     ValidationError)
from .frames import (FiniteFrame, FiniteLattice, FrameAxiom, FrameHom, FramePoint,
                     completely_below, frame_axiom, frame_profile, points, pt_space,
                     rather_below, validate_frame, validate_frame_hom, validate_lattice, zeta)
from .functors import (delta, epsilon, eta, functor_at, functor_at_hom, functor_O,
                       functor_O_hom, functor_P, functor_P_hom, o_not_faithful_witness, omega,
                       soberify, spatialize, vartheta, vartheta_analysis)
from .io import io_roundtrip, parse_document, serialize
from .separation import (Axiom, SeparationProfile, UrysohnFamily, classify, dual_axiom_check,
                         interpolate, mt_axiom, mt_completely, mt_rather, urysohn_family)
from .theorems import THEOREM_IDS, TheoremReport, run_theorem_suite

__version__ = "0.1.0"

__all__ = [
    "Axiom",
    "BoundExceeded",
    "CensusRow",
    "ElementFamily",
    "Envelope",
    "FinPoset",
    "FinSpace",
    "FiniteFrame",
    "FiniteLattice",
    "FrameAxiom",
    "FrameHom",
    "FramePoint",
    "InvariantViolation",
    "Kind",
    "MTKitError",
    "MTMorphism",
    "NotAFrameHom",
    "NotALattice",
    "NotAPoset",
    "NotATopology",
    "NotClosed",
    "NotContinuous",
    "NotDistributive",
    "NotNormal",
    "NotOpen",
    "NotRatherBelow",
    "PreconditionViolated",
    "SchemaError",
    "SeparationProfile",
    "THEOREM_IDS",
    "TheoremReport",
    "UrysohnFamily",
    "ValidationError",
    "boolean_envelope",
    "census",
    "check_mt_morphism",
    "classify",
    "closure",
    "completely_below",
    "delta",
    "dual_axiom_check",
    "enumerate_topologies",
    "envelope_generic",
    "epsilon",
    "eta",
    "family",
    "frame_axiom",
    "frame_profile",
    "functor_O",
    "functor_O_hom",
    "functor_P",
    "functor_P_hom",
    "functor_at",
    "functor_at_hom",
    "generated_complete_boolean",
    "generated_complete_lattice",
    "generic_matches_shortcut",
    "interior",
    "interpolate",
    "io_roundtrip",
    "join_generates",
    "lower_extension",
    "macneille",
    "meet_generates",
    "mt_axiom",
    "mt_completely",
    "mt_from_frame",
    "mt_rather",
    "o_not_faithful_witness",
    "omega",
    "parse_document",
    "points",
    "pt_space",
    "rather_below",
    "run_theorem_suite",
    "serialize",
    "soberify",
    "space_id",
    "spatialize",
    "summary",
    "urysohn_family",
    "validate_frame",
    "validate_frame_hom",
    "validate_lattice",
    "validate_poset",
    "validate_space",
    "vartheta",
    "vartheta_analysis",
    "zeta",
]
