"""Exact f-functions, curvatures and Wu characteristics of finite simple graphs."""

from .fcalc import (
    curvature,
    curvature_poly,
    euler_characteristic,
    exact_index_expectation,
    f_function_gb,
    f_function_ph,
    f_vector_bruteforce,
    index_poly,
    integer_index,
    verify_ph_identity,
)
from .graph_core import (
    Graph,
    VertexFunction,
    build_graph,
    induced,
    is_locally_injective,
    random_vertex_function,
    sub_level_ball,
    sub_level_sphere,
    unit_sphere,
)
from .intersection import (
    enumerate_simplices,
    f_matrix_bruteforce,
    f_matrix_ph,
    pair_index,
    wu_characteristic,
    wu_curvature,
)
from .poly import BiPoly, FVector, RatPoly, UniPoly

__version__ = "0.1.0"
