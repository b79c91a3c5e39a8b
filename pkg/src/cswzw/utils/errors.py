"""
Error message constants and exception types for the workbench
"""

from typing import List, Optional

# Base error messages
BASE_ERROR = "An unexpected error occurred during verification"

# Form and degree error messages
DEGREE_ERROR = "Expected a {expected}-form, got a {actual}-form"
SPACE_MISMATCH_ERROR = "Form lives on {actual}, expected {expected}"
SUPPORT_VIOLATION = "support violation"
NON_COMPACT_ERROR = "support violation: form is not compactly supported along {direction}"
MISSING_DIRECTION_ERROR = "Direction {direction} is not a direction of {space}"
MIXED_CIRCLE_FACTORS = "Cannot multiply a Fourier factor with a nonconstant periodic spline"
INDEX_RANGE_ERROR = "Multi-index {index} has an axis outside 0..{top} on {space}"

# Geometry error messages
DEGENERATE_VECTOR = "degenerate vector"
NOT_ON_BOUNDARY = "Point {point} does not lie on the boundary r = {value}"

# Complex error messages
NOT_A_SUBCOMPLEX = "not a subcomplex"
DEGREE_BOOKKEEPING_ERROR = "Degree bookkeeping mismatch: {detail}"
INTERNAL_CONSISTENCY_ERROR = "Internal consistency failure: {detail}"
NEEDS_CYLINDER = "The {what} needs the cylinder geometry"

# Algebra error messages
NOT_D_CLOSED = "generator set not d-closed"
NOT_A_POISSON_MORPHISM = "not a Poisson morphism"
GENERATOR_SET_MISMATCH = "Elements belong to different generator sets"
DUPLICATE_LABEL = "Duplicate generator label {label}"

# Region error messages
REGIONS_NOT_DISJOINT = "Regions are not disjoint"
NOT_AN_INCLUSION = "Region is not contained in the target region"
REGION_NOT_CONVEX = "Region is not convex"
NOT_INTERIOR = "Region meets the boundary"
UNBOUNDED_PAST = "Box has no lower time bound, so its future meets every section"

# Config error messages
UNKNOWN_SUITE = "unknown suite name {name}"
INVALID_VALUE = "invalid value {value!r}"
MISSING_FIELD = "required field is missing"


class WorkbenchError(Exception):
    pass


class DegreeError(WorkbenchError):
    pass


class SpaceMismatchError(WorkbenchError):
    pass


class SupportError(WorkbenchError):
    def __init__(self, message: str = SUPPORT_VIOLATION):
        super().__init__(message)


class DegenerateVectorError(WorkbenchError):
    def __init__(self, message: str = DEGENERATE_VECTOR):
        super().__init__(message)


class SubcomplexError(WorkbenchError):
    def __init__(self, message: str = NOT_A_SUBCOMPLEX):
        super().__init__(message)


class GeneratorClosureError(WorkbenchError):
    def __init__(self, message: str = NOT_D_CLOSED):
        super().__init__(message)


class PoissonMorphismError(WorkbenchError):
    def __init__(self, message: str = NOT_A_POISSON_MORPHISM):
        super().__init__(message)


class PreconditionError(WorkbenchError):
    pass


class ConsistencyError(WorkbenchError):
    # A computed value broke an invariant that holds by construction
    pass


class ConfigError(WorkbenchError):
    # Carries every validation problem as "<field.path>: <message>"
    def __init__(self, errors: List[str], message: Optional[str] = None):
        self.errors = list(errors)
        super().__init__(message or "; ".join(self.errors))
