"""Dedekind sums, Ehrhart polynomials of lattice simplices, and the coth
Laurent-series route from one to the other."""
from .dedekind import (
    CoprimePair,
    ReciprocityReport,
    dedekind_cotangent,
    dedekind_fast,
    dedekind_row,
    dedekind_sawtooth,
    mod_reduction_check,
    reciprocity_check,
    reciprocity_rhs,
    sawtooth,
)
from .errors import (
    ConfigurationError,
    InputError,
    InternalConsistencyError,
    ResourceGuardError,
    TruncationError,
    WrongBranchError,
)
from .lattice import (
    AxisSimplex,
    EhrhartPolynomial,
    LatticePolygon,
    count_lattice_points,
    count_polygon_points,
    ehrhart_interpolate,
    pick_polynomial,
)
from .laurent import (
    ConstantTermDecomposition,
    TruncatedLaurentSeries,
    coth_series_regular,
    coth_series_singular,
    decompose_constant_term,
    factor_series,
    numeric_contribution_check,
    theorem_coefficient,
    theorem_coefficients,
)
from .numeric import RationalPolynomial, gcd, interpolate, poly_eval, rational_arith

__version__ = "0.1.0"
