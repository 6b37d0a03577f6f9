"""Discrete curvature, Poincare-Hopf indices and hypersurface graphs on simple graphs."""

__version__ = "0.1.0"

from .functions import DegenerateLevelError, VertexFunction
from .geometry import (
    graph_product,
    inductive_dimension,
    is_geometric,
    pyramid_extension,
    stellate_cycles,
    suspension,
)
from .graph import (
    CliqueOverflowError,
    GraphInputError,
    SimpleGraph,
    are_isomorphic,
    clique_degrees,
    enumerate_cliques,
    euler_characteristic,
    f_vector,
    from_edge_list,
    induced_subgraph,
    unit_sphere,
)
from .hypersurface import (
    complete_hypersurface,
    hypersurface_graph,
    mixed_simplices,
    sign_partition,
    sphere_hypersurface,
    w_vector,
)
from .morse import curvature, index, index_expectation, index_report, symmetric_index
