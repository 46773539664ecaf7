"""Closed-form free-fermion spectrum of the open XX chain.

Conventions used everywhere downstream: modes are 1-based, k = 1..n, with
mode energy lam_k = 2*b - 2*j*cos(pi*k/(n+1)); the all-spins-up product state
is the mode vacuum at energy -n*b, and occupying mode k adds lam_k.  The
fields where lam_k changes sign, b_k = j*cos(pi*k/(n+1)), are where the
ground state hops between adjacent magnetization sectors.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterator

import numpy as np

from .params import ENUMERATION_CAP, ChainParams, check_cap

_CHUNK = 1 << 14


@dataclass(frozen=True, eq=False)
class ModeSpectrum:
    """Single-fermion energies, ascending in the mode index (entry 0 = mode 1)."""

    lambdas: np.ndarray

    def __post_init__(self):
        self.lambdas.setflags(write=False)

    @property
    def n(self) -> int:
        return self.lambdas.size


@dataclass(frozen=True)
class OccupationState:
    """Binary occupation vector over modes; bit k-1 of :meth:`to_int` is mode k."""

    bits: tuple[int, ...]

    def __post_init__(self):
        if not self.bits or any(bit not in (0, 1) for bit in self.bits):
            raise ValueError(f"bits must be a non-empty 0/1 tuple, got {self.bits!r}")

    @classmethod
    def from_int(cls, value: int, n: int) -> "OccupationState":
        if not 0 <= value < (1 << n):
            raise ValueError(f"occupation value {value} out of range for n = {n}")
        return cls(tuple((value >> k) & 1 for k in range(n)))

    def to_int(self) -> int:
        return sum(bit << k for k, bit in enumerate(self.bits))

    @property
    def n(self) -> int:
        return len(self.bits)

    @property
    def m(self) -> int:
        return sum(self.bits)

    def occupied_modes(self) -> tuple[int, ...]:
        return tuple(k + 1 for k, bit in enumerate(self.bits) if bit)


@dataclass(frozen=True)
class EnergyLevel:
    occupation: OccupationState
    energy: float


@dataclass(frozen=True, eq=False)
class CrossingSet:
    """Ground-state crossing fields b_k = j*cos(pi*k/(n+1)), descending in k."""

    fields_b: np.ndarray

    def __post_init__(self):
        self.fields_b.setflags(write=False)

    @property
    def n(self) -> int:
        return self.fields_b.size


def mode_energies(params: ChainParams) -> ModeSpectrum:
    """Mode energies lam_k = 2*b - 2*j*cos(pi*k/(n+1)), k = 1..n."""
    k = np.arange(1, params.n + 1, dtype=float)
    return ModeSpectrum(2.0 * params.b - 2.0 * params.j * np.cos(np.pi * k / (params.n + 1)))


def crossing_fields(n: int, j: float = 1.0) -> CrossingSet:
    """The n fields where mode k changes sign, j*cos(pi*k/(n+1)), descending."""
    if n < 1:
        raise ValueError(f"need n >= 1, got {n}")
    if not j > 0:
        raise ValueError(f"coupling must be positive, got {j!r}")
    k = np.arange(1, n + 1, dtype=float)
    return CrossingSet(j * np.cos(np.pi * k / (n + 1)))


def eigenenergy(params: ChainParams, occ: OccupationState) -> float:
    """Energy of one occupation: sum of occupied mode energies minus n*b."""
    if occ.n != params.n:
        raise ValueError(f"occupation length {occ.n} does not match n = {params.n}")
    lam = mode_energies(params).lambdas
    return float(np.asarray(occ.bits, dtype=float) @ lam - params.n * params.b)


def ground_sector(params: ChainParams) -> int | tuple[int, int]:
    """Number of negative-energy modes, i.e. flipped spins in the ground state.

    At a field exactly equal to a crossing value the two adjacent sectors are
    degenerate and the pair ``(k, k + 1)`` is returned instead of tie-breaking.
    """
    fields = crossing_fields(params.n, params.j).fields_b
    above = int(np.count_nonzero(fields > params.b))
    if np.count_nonzero(fields == params.b):
        return (above, above + 1)
    return above


def ground_energy(params: ChainParams, k: int) -> float:
    """Energy of the sector-k ground state (modes 1..k occupied)."""
    if not 0 <= k <= params.n:
        raise ValueError(f"sector must satisfy 0 <= k <= {params.n}, got {k}")
    l = np.arange(1, k + 1, dtype=float)
    csum = float(np.sum(np.cos(np.pi * l / (params.n + 1))))
    return -(params.n - 2 * k) * params.b - 2.0 * params.j * csum


def energies_for_occupation_values(params: ChainParams, values: np.ndarray) -> np.ndarray:
    """Vectorized eigenenergies for occupation bitmasks given as integers."""
    lam = mode_energies(params).lambdas
    out = np.empty(values.size, dtype=float)
    for start in range(0, values.size, _CHUNK):
        chunk = values[start : start + _CHUNK]
        bits = ((chunk[:, None] >> np.arange(params.n)) & 1).astype(float)
        out[start : start + chunk.size] = bits @ lam
    return out - params.n * params.b


def enumerate_levels(params: ChainParams, cap: int | None = None) -> Iterator[EnergyLevel]:
    """All 2^n (occupation, energy) pairs, occupation bitmask ascending."""
    limit = ENUMERATION_CAP if cap is None else cap
    check_cap(params.n, limit, "level enumeration")
    return _iter_levels(params)


def _iter_levels(params: ChainParams) -> Iterator[EnergyLevel]:
    n = params.n
    for start in range(0, 1 << n, _CHUNK):
        values = np.arange(start, min(start + _CHUNK, 1 << n), dtype=np.int64)
        energies = energies_for_occupation_values(params, values)
        for value, energy in zip(values.tolist(), energies.tolist()):
            yield EnergyLevel(OccupationState.from_int(value, n), energy)


def log_partition_function(params: ChainParams, beta: float) -> float:
    """log Z = beta*n*b + sum_k log(1 + exp(-beta*lam_k)), overflow-safe."""
    if beta < 0:
        raise ValueError(f"inverse temperature must be >= 0, got {beta!r}")
    lam = mode_energies(params).lambdas
    return float(beta * params.n * params.b + np.sum(np.logaddexp(0.0, -beta * lam)))


def partition_function(params: ChainParams, beta: float) -> float:
    """Z as a plain float; use :func:`log_partition_function` when beta*n*b is large."""
    try:
        return math.exp(log_partition_function(params, beta))
    except OverflowError:
        return math.inf
