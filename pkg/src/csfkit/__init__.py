"""Exact computer algebra for chromatic symmetric functions.

Commuting-variable invariants live in `symfunc` (e and p bases), the
noncommuting refinement in `ncsym` (m, e, p bases over set partitions),
graphs and their surgeries in `graphs`, the partition lattice in
`partitions`, generating-function checks in `series`, and the command-line
front end in `cli`.
"""

from .errors import CapacityError, DomainError
from .graphs import LabeledGraph, parse_graph
from .ncsym import ClassExpansion, NCSymF
from .partitions import CongruenceKey, SetPartition
from .symfunc import SymF

__version__ = "0.1.0"

__all__ = [
    "CapacityError",
    "ClassExpansion",
    "CongruenceKey",
    "DomainError",
    "LabeledGraph",
    "NCSymF",
    "SetPartition",
    "SymF",
    "parse_graph",
    "__version__",
]
