"""Blocks of consecutive polynomial values with no value coprime to all the others.

Exact integer-polynomial tools (companion polynomial of root differences),
arithmetic modulo primes, prime harvesting, Chinese-remainder cover plans and
an exact small-k existence oracle.
"""

from .cover import BlockWitness, CoverPlan, build_cover, find_cover, solve_crt, verify_block
from .intpoly import (CompanionPoly, GaloisReport, IntPoly, classify, companion,
                      companion_closed_form, discriminant, evaluate, resultant)
from .modpoly import (CloseRootPair, RootsModP, close_root_pair, factor_parity,
                      padic_root_count, roots_mod_p)
from .primestream import enumerate_pf, harvest_sn, sn_ratio_scan, valuation_qn
from .search import decide_block, first_blocks, gf_estimate_scan, gf_search

__all__ = [
    "BlockWitness", "CompanionPoly", "CloseRootPair", "CoverPlan", "GaloisReport", "IntPoly",
    "RootsModP", "build_cover", "classify", "close_root_pair", "companion",
    "companion_closed_form", "decide_block", "discriminant", "enumerate_pf", "evaluate",
    "factor_parity", "find_cover", "first_blocks", "gf_estimate_scan", "gf_search",
    "harvest_sn", "padic_root_count", "resultant", "roots_mod_p", "sn_ratio_scan",
    "solve_crt", "valuation_qn", "verify_block",
]
