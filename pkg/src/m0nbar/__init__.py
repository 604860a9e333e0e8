"""Exact computer algebra for the moduli space of stable n-pointed
rational curves: multigraded polynomial rings over the rationals,
Groebner bases, saturation, Hilbert degrees, and the conjectured
cubic/quartic defining equations with their combinatorial checks.
"""

from .arith import Rational, RationalMatrix, matrix_rank, rat
from .ideal import (
    Ideal,
    MonomialIdeal,
    contains,
    equal_ideals,
    graded_piece_dim,
    hilbert_degree,
    hilbert_numerator,
    initial_ideal,
    intersect,
    is_squarefree,
    min_gens_by_total_degree,
    normal_form,
    saturate_by_block,
    saturate_by_variable,
    saturation_pipeline,
    spolynomial,
)
from .moduli import (
    BoundaryDivisor,
    BoundaryGraph,
    MinorMatrix,
    PointConfig,
    VanishingReport,
    boundary_graph,
    cubic_generators,
    embedding_coordinates,
    enumerate_trivalent_trees,
    format_generator_file,
    generator_count_identity,
    minor_ideal,
    minor_matrices,
    quartic_equation,
    quartic_equations,
    quartic_membership_witness,
    quartic_raw_form,
    quartic_tuples,
    segre_quadrics_n5,
    stable_tree_count,
    vanishing_test,
)
from .poly import (
    MonomialOrder,
    Polynomial,
    RingSpec,
    count_monomials_of_multidegree,
    elimination_order,
    format_polynomial,
    grevlex_order,
    lex_order,
    moduli_ring,
    monomials_of_multidegree,
    parse_polynomial,
    polynomial_ring,
)

__version__ = "0.1.0"

__all__ = [
    "BoundaryDivisor",
    "BoundaryGraph",
    "Ideal",
    "MinorMatrix",
    "MonomialIdeal",
    "MonomialOrder",
    "PointConfig",
    "Polynomial",
    "Rational",
    "RationalMatrix",
    "RingSpec",
    "VanishingReport",
    "boundary_graph",
    "contains",
    "count_monomials_of_multidegree",
    "cubic_generators",
    "elimination_order",
    "embedding_coordinates",
    "enumerate_trivalent_trees",
    "equal_ideals",
    "format_generator_file",
    "format_polynomial",
    "generator_count_identity",
    "graded_piece_dim",
    "grevlex_order",
    "hilbert_degree",
    "hilbert_numerator",
    "initial_ideal",
    "intersect",
    "is_squarefree",
    "lex_order",
    "matrix_rank",
    "min_gens_by_total_degree",
    "minor_ideal",
    "minor_matrices",
    "moduli_ring",
    "monomials_of_multidegree",
    "normal_form",
    "parse_polynomial",
    "polynomial_ring",
    "quartic_equation",
    "quartic_equations",
    "quartic_membership_witness",
    "quartic_raw_form",
    "quartic_tuples",
    "rat",
    "saturate_by_block",
    "saturate_by_variable",
    "saturation_pipeline",
    "segre_quadrics_n5",
    "spolynomial",
    "stable_tree_count",
    "vanishing_test",
]
