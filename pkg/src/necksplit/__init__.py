"""Two-thief necklace splitting and separability testing."""

from .errors import (
    DomainViolation,
    InstanceTooLarge,
    InternalInconsistency,
    MalformedInput,
    NecksplitError,
)
from .maxcut import decide_max_cut_at_most, max_cut_exact
from .necklace import Necklace, color_string, interval_queries, parse_necklace, sep_by_definition
from .oracle import count_solutions, enumerate_solutions
from .separability import SeparabilityVerdict, decide_separability
from .splitter import NotSeparableCertificate, Splitting, solve, verify_splitting
from .walkgraph import Multigraph, build_walk_graph, cut_size, edwards_erdos_bound

__version__ = "0.1.0"
