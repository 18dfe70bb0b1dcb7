"""Graded ring isomorphism decisions for H*_u rings and related presentations."""

from .candidates import CandidateSet, ExtraCandidate, candidate_line_set, extra_candidate_lines
from .classify import Classification, classify_lines, coprime_grid
from .constraints import ConstraintSystem, DimensionMismatch, build_iso_constraints
from .decide import (
    AUTO,
    GROEBNER,
    ISO,
    METHODS,
    NONISO,
    STRUCTURED,
    UNKNOWN,
    FieldMismatch,
    IsoVerdict,
    decide_iso_complex,
    hu_witness,
)
from .endo import (
    CanonicalEndo,
    NotAnEndomorphism,
    X_MINUS,
    X_PLUS,
    annihilator_in_degree_two,
    canonicalize_endo,
    endo_necessary_conditions,
    induced_base_endo,
)
from .weyl import (
    SPECIAL_LINES,
    WEYL_GROUP,
    IntegralLine,
    WeylElement,
    orbit_representative,
    transporting_element,
    weyl_matrix,
    weyl_orbit_of_line,
)
