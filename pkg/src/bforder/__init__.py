"""Exact computation of the bi-order on the braided Thompson group BF.

Layers: truncated noncommutative power series, free groups with the Magnus
order, braid groups with Artin combing, Thompson's group F as tree pairs, and
the braided group BV as tree-braid-tree triples.
"""

from .braid import BraidWord, artin_comb, braid_equal, parse_braid, sign_pure, strand_delete, strand_double
from .braided import BVElement, bv_inv, bv_mul, parse_element
from .errors import BFOrderError, DeviationCeilingError, DomainError, ParseError, UsageError
from .freegroup import FreeWord, Sign, magnus_expand, parse_word, sign_free
from .ncseries import NcSeries
from .order import bf_compare, sign_bf, sign_pbv
from .trees import Tree, TreePair, parse_pair, sign_F

__version__ = "0.1.0"
