"""Exact Haar and design averages of entanglement entropies.

Exact quantities come back as :class:`fractions.Fraction`; matrices and
states are NumPy arrays.
"""

import pkgutil
from fractions import Fraction

__path__ = pkgutil.extend_path(__path__, __name__)

from . import _core
from ._core import (
    CapExceeded,
    DomainError,
    choi_state,
    cycle_lemma,
    frame_potential,
    gap2_design_state,
    gap2_spectrum,
    gap_renyi_upper_bound,
    haar_unitary,
    mc_choi_moment,
    mc_state_moment,
    min_entropy,
    mn_character,
    negative_tripartite,
    pauli_group,
    reduced_density,
    renyi_entropy,
    single_qubit_clifford,
    theorem_bound,
    trace_power,
    tsallis_entropy,
    unified_entropy,
    von_neumann,
)

__version__ = "0.1.0"


def state_moment(d_A, d_B, alpha):
    """Haar average of tr rho_A^alpha over random pure states on d_A x d_B."""
    return Fraction(_core.state_moment(d_A, d_B, alpha))


def choi_moment(d_A, d_B, d_C, d_D, alpha):
    """Haar average of tr rho_AC^alpha over Choi states of random unitaries."""
    return Fraction(_core.choi_moment(d_A, d_B, d_C, d_D, alpha))


def weingarten(d, cycle_type):
    return Fraction(_core.weingarten(d, list(cycle_type)))


def catalan(alpha):
    return int(_core.catalan(alpha))


def gap2_purity(d_A, d_B):
    return Fraction(_core.gap2_purity(d_A, d_B))
