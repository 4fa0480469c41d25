"""Intersection theory and structure constants for the variety of 4-dimensional Lie algebras."""

from .gradedring import (
    GradedClass,
    NotAUnitError,
    ProjBundleLayer,
    RingMismatchError,
    integrate,
    invert_unit,
    ring_g24,
    ring_p3,
)
from .bundles import Bundle, CharacterVector
from .liealg import GenericityError, LieProfile, StructureConstants, classify, is_lie, jacobi_defect
from .lie4degrees import ComponentTag, CrossCheckError, DegreeReport, degree_component, degree_report

__version__ = "0.1.0"
