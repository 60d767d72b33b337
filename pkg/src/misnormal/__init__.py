"""Exact independent-set structure of direct products of vertex-transitive graphs."""

from ._accel import BACKEND
from .checks import (
    Limits,
    check_eq1,
    check_is_primitive,
    check_mis_normal,
    check_product_normal,
    verify_bipartite_corollary,
    verify_dichotomy,
    verify_imprimitive_partition,
    verify_induced_ratio,
    verify_power_corollary,
    verify_primitivity_theorem,
    verify_product_trichotomy,
    verify_ratio_bound,
)
from .families import FamilySpec, corpus, generate, parse_spec
from .graph import (
    Graph,
    ProductGraph,
    Ratio,
    VertexSet,
    build_graph,
    closed_neighborhood,
    complement_closed_neighborhood,
    diagonal_subgraph,
    direct_product,
    fiber,
    induced_subgraph,
    is_bipartite,
    is_connected,
    open_neighborhood,
    power,
    project,
)
from .solver import MisResult, alpha, enumerate_mis, mis_membership_counts

__version__ = "0.1.0"
