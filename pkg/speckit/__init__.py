from .lsta_format import parse_lsta, serialize_lsta, parse_term
from .predicates import PredicateFamily, build_predicate
from .bug_injection import inject_bug
from .benchmarks import Benchmark, generate, random_clifford_t, BENCHMARKS

__all__ = [
    "parse_lsta",
    "serialize_lsta",
    "parse_term",
    "PredicateFamily",
    "build_predicate",
    "inject_bug",
    "Benchmark",
    "generate",
    "random_clifford_t",
    "BENCHMARKS"
]
