"""Exact solutions of the finite open XX chain in a transverse field.

Closed-form spectra and spin-basis eigenstates, thermal Gibbs states with an
analytic purity formula, two-qubit entanglement thresholds, thermodynamic-limit
energies, and a brute-force dense oracle everything is validated against.
"""

from .entanglement import (
    BipartiteSplit,
    critical_temperature_two_qubit,
    negativity,
    partial_transpose,
    two_qubit_separable,
)
from .limits import (
    ConvergenceRow,
    convergence_report,
    crossing_density,
    finite_size_energy_density,
    thermo_energy_density,
)
from .oracle import DenseHamiltonian, build_hamiltonian, diagonalize
from .params import ChainParams, NumericalError, SizeLimitError, resolve_dense_cap
from .spectrum import (
    CrossingSet,
    EnergyLevel,
    ModeSpectrum,
    OccupationState,
    crossing_fields,
    eigenenergy,
    enumerate_levels,
    ground_energy,
    ground_sector,
    log_partition_function,
    mode_energies,
    partition_function,
)
from .states import (
    SectorIndex,
    SpinBasisVector,
    build_eigenstate,
    combination_rank,
    eigenbasis_matrix,
    ground_state,
    label_of_occupation,
    label_to_sector_index,
    occupation_from_label,
    occupation_from_sector_index,
    sector_index_of,
    sector_index_to_label,
    sine_coefficient,
    sine_matrix,
    slater_amplitude,
)
from .thermal import (
    DensityMatrix,
    ThermalEnsemble,
    boltzmann_weights,
    crossing_mixture,
    label_energies,
    purity_analytic,
    purity_dense,
    subspace_weights,
    thermal_density_matrix,
)

__version__ = "0.1.0"

__all__ = [
    "BipartiteSplit",
    "ChainParams",
    "ConvergenceRow",
    "CrossingSet",
    "DenseHamiltonian",
    "DensityMatrix",
    "EnergyLevel",
    "ModeSpectrum",
    "NumericalError",
    "OccupationState",
    "SectorIndex",
    "SizeLimitError",
    "SpinBasisVector",
    "ThermalEnsemble",
    "boltzmann_weights",
    "build_eigenstate",
    "build_hamiltonian",
    "combination_rank",
    "convergence_report",
    "critical_temperature_two_qubit",
    "crossing_density",
    "crossing_fields",
    "crossing_mixture",
    "diagonalize",
    "eigenbasis_matrix",
    "eigenenergy",
    "enumerate_levels",
    "finite_size_energy_density",
    "ground_energy",
    "ground_sector",
    "ground_state",
    "label_energies",
    "label_of_occupation",
    "label_to_sector_index",
    "log_partition_function",
    "mode_energies",
    "negativity",
    "occupation_from_label",
    "occupation_from_sector_index",
    "partial_transpose",
    "partition_function",
    "purity_analytic",
    "purity_dense",
    "resolve_dense_cap",
    "sector_index_of",
    "sector_index_to_label",
    "sine_coefficient",
    "sine_matrix",
    "slater_amplitude",
    "subspace_weights",
    "thermal_density_matrix",
    "thermo_energy_density",
    "two_qubit_separable",
]
