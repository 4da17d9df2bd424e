"""Decide whether fixed-length strings can be chained on t-symbol overlaps.

The components become edges of a directed multigraph between their prefix and
suffix grams; a chaining order exists exactly when that graph is weakly
connected and has an Eulerian trail degree pattern.
"""

from .certificate import Certificate, Check, extract_certificate, verify_certificate
from .connectivity import UnionFind, connected_fast, connected_paper, paper_components
from .core import (
    DegreeTable,
    Instance,
    InstanceError,
    Pseudodigraph,
    build_pseudodigraph,
    degree_table,
    first_gram,
    last_gram,
    parse_instance,
)
from .decision import Verdict, decide, test_conditions
from .generate import GeneratorSpec, SplitMix64, generate
from .oracle import OracleCapError, oracle_backtrack, oracle_permutations

__all__ = [
    "Certificate", "Check", "DegreeTable", "GeneratorSpec", "Instance", "InstanceError",
    "OracleCapError", "Pseudodigraph", "SplitMix64", "UnionFind", "Verdict",
    "build_pseudodigraph", "connected_fast", "connected_paper", "decide", "degree_table",
    "extract_certificate", "first_gram", "generate", "last_gram", "oracle_backtrack",
    "oracle_permutations", "paper_components", "parse_instance", "test_conditions",
    "verify_certificate",
]
