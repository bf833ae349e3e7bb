"""Graded Betti numbers of monomial ideals and stabilization of Betti table shapes under powers."""

__version__ = "0.1.0"

from .betti import (betti_koszul, betti_taylor, degree_counts, hilbert_consistency, lcm_closure,
                    multigraded_betti, taylor_multigraded)
from .errors import BettiStabError, CapacityError, ContextError, DomainError, ParseError
from .homology import IntegerMatrix, SimplicialComplex, boundary_matrix, rank_exact, reduced_homology_dims
from .monomials import Monomial, MonomialIdeal, RingContext, ideal_product, min_gen_degree, power, powers
from .parsing import format_ideal, parse_family, parse_ideal, parse_monomial, parse_ring
from .stabilization import (LinearExponentFamily, StabReport, exact_linear_fit, family_sweep, i_n_family,
                            instantiate, stab_seq, stab_seq_closed_form, stab_seq_closed_form_check)
from .table import BettiTable, ShapeKey, render_m2, resolution_skeleton, same_shape, shape_key

__all__ = [
    "BettiStabError", "BettiTable", "CapacityError", "ContextError", "DomainError", "IntegerMatrix",
    "LinearExponentFamily", "Monomial", "MonomialIdeal", "ParseError", "RingContext", "ShapeKey",
    "SimplicialComplex", "StabReport", "betti_koszul", "betti_taylor", "boundary_matrix", "degree_counts",
    "exact_linear_fit", "family_sweep", "format_ideal", "hilbert_consistency", "i_n_family", "ideal_product",
    "instantiate", "lcm_closure", "min_gen_degree", "multigraded_betti", "parse_family", "parse_ideal",
    "parse_monomial", "parse_ring", "power", "powers", "rank_exact", "reduced_homology_dims", "render_m2",
    "resolution_skeleton", "same_shape", "shape_key", "stab_seq", "stab_seq_closed_form",
    "stab_seq_closed_form_check", "taylor_multigraded",
]
