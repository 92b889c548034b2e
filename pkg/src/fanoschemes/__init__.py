"""Exact invariants of Fano schemes of linear subspaces on complete intersections."""
from .combinatorics import MultiDegree, binom, partitions_in_rectangle, schubert_degree
from .invariants import Classification, FanoProblem, classify, delta, delta_minus, report
from .schubert import FanoClass, abstract_class, fano_class, fano_degree, fano_degree_via_pieri
from .unirationality import fano_unirationality_bound, ps_pair

__version__ = "0.1.0"
