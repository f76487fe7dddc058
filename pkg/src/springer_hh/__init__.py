"""Desk-scale computations for polyvector fields on the Springer resolution.

Root data and Weyl groups, Schubert calculus on G/B, the 2|W|-1
dimensional central subalgebra, weight data of polyvector sheaves on
T*(G/B), Borel-Weil-Bott Euler characteristics, and an exact Cech
oracle in rank one.
"""

from .bott import bott_resolve, bundle_euler, line_bundle_euler, weyl_dimension
from .bundles import omega_weights, polyvector_gr_weights, tangent_weights, verify_duality
from .errors import ParameterError, ResourceError
from .frakh import build_frakh, frakh_dimension, frakh_multiply, nilradical_annihilation_check
from .hhtable import center_lower_bound, euler_table, hh_euler_total
from .rank1 import rank1_center_dimension, rank1_cohomology, rank1_hh_table
from .rootdata import build_root_system, dot_action, enumerate_weyl, weyl_action, weyl_group
from .schubert import (
    augmentation,
    divided_difference,
    poincare_polynomial,
    schubert_product,
    schubert_representative,
)

__version__ = "0.1.0"


def clear_caches() -> None:
    """Drop every memo table (Weyl groups, Schubert data, algebra tables, weight data)."""
    from . import bott, bundles, frakh, rootdata, schubert

    rootdata._GROUPS.clear()
    schubert._CALCULI.clear()
    schubert._dd_power.cache_clear()
    frakh._TABLES.clear()
    for fn in (bundles.exterior_power, bundles.symmetric_power, bundles.koszul_piece):
        fn.cache_clear()
    bott.bott_resolve.cache_clear()
    bott.line_bundle_euler.cache_clear()
