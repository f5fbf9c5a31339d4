"""Clique-complex invariants of finite simple graphs in exact arithmetic.

f-vectors and Euler characteristic, unit-sphere profiles, inductive
dimension, the general and Euler-form curvatures, and the check that
curvature sums to the Euler characteristic.
"""
from .complex import (
    FVector,
    euler_characteristic,
    f_vector,
    sphere_profiles,
    verify_hyper,
    verify_transfer,
)
from .curvature import (
    CurvatureReport,
    check_gauss_bonnet,
    coefficient_a,
    coefficient_e,
    curvature_report,
    euler_form,
    euler_form_coefficients,
    general_curvature,
)
from .dimension import (
    ValidationCertificate,
    detect_dimension,
    graph_dimension,
    validate_d_graph,
    vertex_dimension,
)
from .graph import (
    Graph,
    VertexSubset,
    bfs_diameter,
    from_edge_list,
    induced_subgraph,
    is_connected,
    unit_sphere,
)

__version__ = "0.1.0"
