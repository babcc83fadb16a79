"""Spin entanglement of the ideal Fermi gas at zero temperature.

Exact few-fermion reduced spin density matrices from fermion positions,
their identity-plus-pair-singlet decomposition, and entanglement
diagnostics: negativity, PPT tests, tripartite witnesses, von Neumann
entropy.
"""

from importlib.metadata import PackageNotFoundError, version

try:
    __version__ = version("fermigas")
except PackageNotFoundError:  # running from a source checkout
    __version__ = "0.0.0"

from .exchange import exchange_function, pair_entanglement_threshold
from .configuration import (
    MAX_FERMIONS,
    Configuration,
    exchange_matrix,
    isosceles_configuration,
    line_configuration,
    random_configuration,
    regular_simplex_configuration,
)
from .wick import (
    DegenerateConfiguration,
    normalization_trace,
    spin_density_matrix,
)
from .qops import (
    num_spins,
    partial_trace,
    partial_transpose,
    permutation_operator,
    spectrum,
    trace_norm,
    von_neumann_entropy,
)
from .pair_decomposition import (
    PairWeights,
    closed_form_weights,
    fit_weights,
    reconstruct,
    singlet_component,
)
from .entanglement import (
    EntanglementReport,
    coincident_entropy_bound,
    entanglement_report,
    negative_eigenvalues,
    negativity,
    two_fermion_negativity,
    witness_expectation,
)

__all__ = [
    "__version__",
    "MAX_FERMIONS",
    "Configuration",
    "DegenerateConfiguration",
    "EntanglementReport",
    "PairWeights",
    "closed_form_weights",
    "coincident_entropy_bound",
    "entanglement_report",
    "exchange_function",
    "exchange_matrix",
    "fit_weights",
    "isosceles_configuration",
    "line_configuration",
    "negative_eigenvalues",
    "negativity",
    "normalization_trace",
    "num_spins",
    "pair_entanglement_threshold",
    "partial_trace",
    "partial_transpose",
    "permutation_operator",
    "random_configuration",
    "reconstruct",
    "regular_simplex_configuration",
    "singlet_component",
    "spectrum",
    "spin_density_matrix",
    "trace_norm",
    "two_fermion_negativity",
    "von_neumann_entropy",
    "witness_expectation",
]
