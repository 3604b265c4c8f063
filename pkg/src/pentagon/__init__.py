"""Induced pentagons, sparse pairs and large cographs in pentagon-free graphs."""

__version__ = "0.1.0"

from .errors import (
    DomainError,
    InputContainsC5,
    InternalAssertionFailed,
    NotCograph,
    PentagonError,
    PreconditionViolated,
)
from .graph import Graph, complement, density_between, from_edge_list, induced_subgraph
from .io import read_graph, write_graph
from .dichotomy import (
    C5Witness,
    DichotomyConfig,
    SparsePairWitness,
    check_trace,
    find_c5_or_sparse_pair,
    verify_outcome,
)
from .sparsify import density_pair, peel_to_sparse
from .schedule import ScheduleParams, choose_c, guarantee
from .cotree import alpha_omega, build_cotree, is_cograph
from .extract import extract_cograph, pipeline
