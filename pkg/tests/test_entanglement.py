import math

import numpy as np
import pytest

from xxchain import (
    BipartiteSplit,
    ChainParams,
    DensityMatrix,
    NumericalError,
    boltzmann_weights,
    critical_temperature_two_qubit,
    crossing_mixture,
    negativity,
    partial_transpose,
    thermal_density_matrix,
    two_qubit_separable,
)

KT_C = 1 / math.log(1 + math.sqrt(2))
SPLIT_11 = BipartiteSplit.of(2, (1,))


def singlet_density():
    return DensityMatrix.from_state(np.array([0.0, 1.0, -1.0, 0.0]) / math.sqrt(2))


def test_split_construction_and_validation():
    split = BipartiteSplit.of(4, (2, 4))
    assert split.sites_b == (1, 3)
    assert str(split) == "2,4|1,3"
    with pytest.raises(ValueError):
        BipartiteSplit.of(3, ())
    with pytest.raises(ValueError):
        BipartiteSplit.of(3, (1, 2, 3))
    with pytest.raises(ValueError):
        BipartiteSplit((1, 2), (2, 3))


def test_partial_transpose_is_hermitian_and_trace_preserving():
    rho = thermal_density_matrix(ChainParams(n=3, b=0.4), 1.2)
    pt = partial_transpose(rho, BipartiteSplit.of(3, (1,)))
    assert np.max(np.abs(pt - pt.T)) < 1e-14
    assert np.trace(pt) == pytest.approx(1.0, abs=1e-12)


def test_partial_transpose_product_state_spectrum_unchanged():
    a = np.array([[0.7, 0.1], [0.1, 0.3]])
    b = np.array([[0.6, -0.2], [-0.2, 0.4]])
    rho = DensityMatrix(4, np.kron(b, a))  # site 1 varies fastest
    pt = partial_transpose(rho, SPLIT_11)
    assert np.linalg.eigvalsh(pt) == pytest.approx(np.linalg.eigvalsh(rho.entries), abs=1e-12)


def test_partial_transpose_identity_fixed_point():
    rho = DensityMatrix.maximally_mixed(2)
    assert np.array_equal(partial_transpose(rho, SPLIT_11), rho.entries)


def test_partial_transpose_singlet_minimum_eigenvalue():
    pt = partial_transpose(singlet_density(), SPLIT_11)
    assert np.linalg.eigvalsh(pt).min() == pytest.approx(-0.5, abs=1e-12)


def test_negativity_singlet_and_product():
    assert negativity(singlet_density(), SPLIT_11) == pytest.approx(0.5, abs=1e-12)
    up = np.zeros(4)
    up[0] = 1.0
    assert negativity(DensityMatrix.from_state(up), SPLIT_11) <= 1e-12


@pytest.mark.parametrize("b", [0.0, 0.7])
def test_thermal_state_separable_above_threshold(b):
    rho = thermal_density_matrix(ChainParams(n=2, b=b), 1 / 2.0)
    assert negativity(rho, SPLIT_11) <= 1e-12


def test_negativity_swapping_split_sides():
    rho = thermal_density_matrix(ChainParams(n=3, b=0.2), 2.0)
    one = negativity(rho, BipartiteSplit((1,), (2, 3)))
    other = negativity(rho, BipartiteSplit((2, 3), (1,)))
    assert one == pytest.approx(other, abs=1e-12)


def test_negativity_dimension_mismatch():
    with pytest.raises(ValueError):
        negativity(singlet_density(), BipartiteSplit.of(3, (1,)))


def test_two_qubit_separable_examples():
    assert two_qubit_separable(0.25, 0.25, 0.25, 0.25)
    assert not two_qubit_separable(0.0, 1.0, 0.0, 0.0)
    # exact dyadic boundary point counts as separable
    assert two_qubit_separable(0.125, 0.5, 0.25, 0.125)


def test_two_qubit_separable_validation():
    with pytest.raises(ValueError):
        two_qubit_separable(0.5, 0.5, 0.5, -0.5)
    with pytest.raises(ValueError):
        two_qubit_separable(0.4, 0.4, 0.4, 0.4)


@pytest.mark.parametrize("b", [0.0, 0.3, 0.7, 1.5])
def test_critical_temperature_value(b):
    kt = critical_temperature_two_qubit(ChainParams(n=2, b=b))
    assert kt == pytest.approx(1.134593, abs=1e-5)
    assert kt == pytest.approx(KT_C, abs=1e-8)


def test_critical_temperature_field_independent():
    values = [critical_temperature_two_qubit(ChainParams(n=2, b=b)) for b in (0.0, 0.3, 0.7, 1.5)]
    assert max(values) - min(values) < 1e-8


@pytest.mark.parametrize("j", [0.5, 2.0])
def test_critical_temperature_scales_with_coupling(j):
    scaled = critical_temperature_two_qubit(ChainParams(n=2, j=j, b=0.4))
    reference = critical_temperature_two_qubit(ChainParams(n=2, b=0.4))
    assert scaled == pytest.approx(j * reference, abs=1e-8)


def test_critical_temperature_requires_two_sites():
    with pytest.raises(ValueError):
        critical_temperature_two_qubit(ChainParams(n=3))


def test_critical_temperature_bracket_failure():
    with pytest.raises(NumericalError):
        critical_temperature_two_qubit(ChainParams(n=2), bracket=(2.0, 3.0))


def test_negativity_agrees_with_population_criterion():
    for b in (0.0, 0.35, 0.8, 1.4):
        for t in (0.3, 0.8, 1.0, 1.3, 2.0):
            params = ChainParams(n=2, b=b)
            p = boltzmann_weights(params, 1 / t).probabilities
            separable = two_qubit_separable(p[0], p[1], p[2], p[3])
            entangled = negativity(thermal_density_matrix(params, 1 / t), SPLIT_11) > 1e-10
            assert separable == (not entangled), (b, t)


def test_crossing_mixture_negativity_regression():
    # 1/2(|up,up><up,up| + |plus><plus|): the partial transpose has one negative
    # eigenvalue (1 - sqrt(2))/4, so the zero-temperature crossing state is entangled
    expected = (math.sqrt(2) - 1) / 4
    assert negativity(crossing_mixture(2, 0), SPLIT_11) == pytest.approx(expected, abs=1e-10)
    assert negativity(crossing_mixture(2, 1), SPLIT_11) == pytest.approx(expected, abs=1e-10)
