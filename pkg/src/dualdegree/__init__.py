"""Degree partitions, dual degree partitions, and the polytope of dual degree partitions."""

from .core import (
    DegreePartition,
    DualDegreePartition,
    MajorizationReport,
    NotRealizable,
    SimpleGraph,
    berge_realizable,
    conjugate,
    corrected_conjugate,
    degree_partition_of,
    inverse_conjugate,
    majorize,
    odd_degree_alternating_sum,
    realize,
    render_ferrers,
)
from .exactmath import (
    HullCertificate,
    Inequality,
    affine_rank,
    extremality_check,
    hull_membership,
    vertex_enumeration,
)
from .polytope import (
    ExtremePointLabel,
    FacetSystem,
    extreme_point_realization,
    extreme_points,
    facet_membership,
    facet_system,
    regular_graph,
)
from .verify import (
    TheoremReport,
    counterexample_check,
    enumerate_realizable,
    facet_minimality_check,
    verify_theorem,
)

__version__ = "0.1.0"
