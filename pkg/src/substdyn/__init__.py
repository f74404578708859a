"""Substitutions of many-valued and classical logic as dynamical systems."""

from .terms import parse, format_term, eval_term
from .mcnaughton import PLFunc, compile_term, eval_pl, compose, pl_equal
from .markov import stabilize_partition, build_markov, markov_system, graph_analysis
from .classify import classify, invariant_density, apply_transfer, is_invertible
from .product import FracMap, frac_eval, frac_classify
from .boolean import BoolSubst, adding_machine, bool_classify, point_map
from .corpus import corpus

__version__ = "0.1.0"
