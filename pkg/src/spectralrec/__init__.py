"""spectralrec: exact topological recursion on the curve x = z + 1/z,
coefficient extraction to stationary Gromov-Witten invariants of the
projective line, and independent combinatorial oracles for cross-checking.

Everything is exact rational arithmetic; no floats anywhere.
"""

from .eo import (Engine, Multidiff, check_fiber_sum, check_loop_equation,
                 check_string_dilaton, compute_omega, engine_for, loop_cases,
                 stable_truncation)
from .exact import Rat, bernoulli, pk_constant, rat_parse, rat_str, zeta_neg
from .expand import (CoeffTable, M_value, M_value_poly, N_value, QuasiPoly,
                     check_M_divisor_string, expansion_0_1, expansion_0_2,
                     interpolate_quasi, m_quasi, n_quasi, n_to_m, n_value,
                     transform_polys)
from .gw import (closed_forms, connected_stationary, dim_partition,
                 disconnected_stationary, p_polynomial, partitions,
                 shifted_power_sum, stationary_key, stationary_toprec)
from .psi import check_top_coefficients, intersection

__all__ = [
    "Rat", "rat_str", "rat_parse", "bernoulli", "zeta_neg", "pk_constant",
    "Engine", "Multidiff", "compute_omega", "engine_for", "stable_truncation",
    "check_fiber_sum", "check_string_dilaton", "check_loop_equation", "loop_cases",
    "n_value", "N_value", "M_value", "M_value_poly", "QuasiPoly", "CoeffTable",
    "interpolate_quasi", "n_quasi", "m_quasi", "n_to_m", "transform_polys",
    "expansion_0_1", "expansion_0_2", "check_M_divisor_string",
    "partitions", "dim_partition", "shifted_power_sum",
    "disconnected_stationary", "connected_stationary", "stationary_toprec",
    "stationary_key", "p_polynomial", "closed_forms",
    "intersection", "check_top_coefficients",
]

__version__ = "0.1.0"
