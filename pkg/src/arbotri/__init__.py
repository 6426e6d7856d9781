"""Sublinear triangle estimation with Degree/Neighbour/Edge/RandomEdge queries,
parameterized by arboricity, plus the popcount-thresholding gadget backend."""

from .estimator import EstimateReport, EstimatorConfig, TriangleRegistry, estimate, estimate_with_oracle, threshold_oracle
from .gadget import GadgetBackend, GadgetSpec, PtpInstance, build_explicit_gadget, gadget_backend, ptp_distinguish, sample_ptp
from .generators import InfeasibleSpec, clique, erdos_renyi, forest_union, gen_graph, planted
from .graph import (EdgeListError, EdgeRef, Graph, TriangleKey, count_triangles_exact, degeneracy,
                    dump_edge_list, load_edge_list, triangles_per_edge)
from .heavy import HeavyDecision, heavy
from .queries import GraphBackend, QueryBackend, QueryCounter, QueryError
from .rng import Stream, make_stream
from .search import SearchTrace, estimate_with_confidence, search

__version__ = "0.1.0"
