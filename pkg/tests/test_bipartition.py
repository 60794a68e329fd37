import numpy as np
import pytest

from tanglekit.bipartition import (
    Partition,
    bilinear,
    epsilon_apply,
    epsilon_matrix,
    parity_signs,
    reshape,
    unreshape,
)
from tanglekit.states import random_state
from oracles import reshape_bitwise, spin_flip_matrix

# Explicit forms of the bilinear metric for two and three unselected qubits.
G4 = np.array([[0, 0, 0, 1], [0, 0, -1, 0], [0, -1, 0, 0], [1, 0, 0, 0]], dtype=float)
G8 = np.array(
    [
        [0, 0, 0, 0, 0, 0, 0, 1],
        [0, 0, 0, 0, 0, 0, -1, 0],
        [0, 0, 0, 0, 0, -1, 0, 0],
        [0, 0, 0, 0, 1, 0, 0, 0],
        [0, 0, 0, -1, 0, 0, 0, 0],
        [0, 0, 1, 0, 0, 0, 0, 0],
        [0, 1, 0, 0, 0, 0, 0, 0],
        [-1, 0, 0, 0, 0, 0, 0, 0],
    ],
    dtype=float,
)


def _cvec(rng, n):
    return rng.standard_normal(n) + 1j * rng.standard_normal(n)


def test_partition_properties():
    p = Partition(5, (4, 5))
    assert (p.n, p.m, p.L, p.l) == (2, 3, 8, 4)
    assert p.unselected == (1, 2, 3)
    assert p.label == "4,5"


def test_partition_validation():
    with pytest.raises(ValueError):
        Partition(4, (3, 3))
    with pytest.raises(ValueError):
        Partition(4, (4, 3))
    with pytest.raises(ValueError):
        Partition(4, (5,))
    with pytest.raises(ValueError):
        Partition(4, ())
    with pytest.raises(ValueError):
        Partition(4, (1, 2, 3))  # n > N/2
    with pytest.raises(ValueError):
        Partition(3, (2, 3))


def test_partition_from_label():
    assert Partition.from_label(4, "3,4").selected == (3, 4)
    with pytest.raises(ValueError):
        Partition.from_label(4, "3;4")


def test_reshape_last_qubit_of_three():
    # columns are the even- and odd-indexed amplitudes in decimal labeling
    state = random_state(3, seed=31)
    z = reshape(state, Partition(3, (3,)))
    c = state.amplitudes
    assert np.array_equal(z[:, 0], c[[0, 2, 4, 6]])
    assert np.array_equal(z[:, 1], c[[1, 3, 5, 7]])


def test_reshape_last_two_of_four():
    # rows are consecutive blocks of four amplitudes
    state = random_state(4, seed=32)
    z = reshape(state, Partition(4, (3, 4)))
    c = state.amplitudes
    for row in range(4):
        assert np.array_equal(z[row, :], c[4 * row : 4 * row + 4])


def test_reshape_last_qubit_of_four():
    state = random_state(4, seed=33)
    z = reshape(state, Partition(4, (4,)))
    c = state.amplitudes
    assert np.array_equal(z[:, 0], c[0::2])
    assert np.array_equal(z[:, 1], c[1::2])


def test_reshape_non_contiguous_matches_bitwise_oracle():
    for n, selected in [(3, (2,)), (4, (1, 3)), (5, (2, 4)), (5, (1,)), (6, (2, 3, 5))]:
        state = random_state(n, seed=34 + n)
        z = reshape(state, Partition(n, selected))
        assert np.array_equal(z, reshape_bitwise(state, selected))


def test_reshape_preserves_amplitude_multiset():
    state = random_state(5, seed=35)
    z = reshape(state, Partition(5, (2, 4)))
    assert np.isclose(
        np.sort_complex(z.reshape(-1)), np.sort_complex(state.amplitudes)
    ).all()


def test_reshape_rejects_mismatched_state():
    state = random_state(3, seed=36)
    with pytest.raises(ValueError):
        reshape(state, Partition(4, (4,)))


def test_unreshape_inverts_reshape():
    for n, selected in [(3, (3,)), (4, (2, 4)), (5, (1, 3))]:
        state = random_state(n, seed=37 + n)
        p = Partition(n, selected)
        back = unreshape(reshape(state, p), p)
        assert np.array_equal(back.amplitudes, state.amplitudes)


def test_unreshape_rejects_wrong_shape():
    with pytest.raises(ValueError):
        unreshape(np.zeros((2, 2)), Partition(3, (3,)))


def test_epsilon_apply_single_factor():
    out = epsilon_apply(1, [2.0, 5.0])
    assert np.array_equal(out, [5.0, -2.0])


def test_epsilon_matrix_explicit_forms():
    assert np.array_equal(epsilon_matrix(2), G4)
    assert np.array_equal(epsilon_matrix(3), G8)


def test_epsilon_apply_matches_materialized():
    rng = np.random.default_rng(38)
    for m in range(1, 6):
        v = _cvec(rng, 2**m)
        assert np.abs(epsilon_apply(m, v) - epsilon_matrix(m) @ v).max() < 1e-15


def test_epsilon_apply_involution_sign():
    rng = np.random.default_rng(39)
    for m in range(1, 6):
        v = _cvec(rng, 2**m)
        twice = epsilon_apply(m, epsilon_apply(m, v))
        assert np.abs(twice - (-1.0) ** m * v).max() < 1e-15


def test_epsilon_apply_rejects_wrong_length():
    with pytest.raises(ValueError):
        epsilon_apply(2, [1.0, 2.0])


def test_parity_signs_pattern():
    assert np.array_equal(parity_signs(2), [1.0, -1.0, -1.0, 1.0])
    assert np.array_equal(parity_signs(0), [1.0])


def test_bilinear_self_pairing_vanishes_for_odd_m():
    rng = np.random.default_rng(40)
    for m in (1, 3):
        v = _cvec(rng, 2**m)
        assert abs(bilinear(m, v, v)) < 1e-15


def test_bilinear_symmetric_example():
    v = np.array([1.0, 0.0, 0.0, 1.0]) / np.sqrt(2)
    assert abs(bilinear(2, v, v) - 1.0) < 1e-15


def test_bilinear_exchange_symmetry():
    rng = np.random.default_rng(41)
    for m in (1, 2, 3, 4):
        a, b = _cvec(rng, 2**m), _cvec(rng, 2**m)
        assert abs(bilinear(m, a, b) - (-1.0) ** m * bilinear(m, b, a)) < 1e-13


def test_bilinear_conjugation_spin_flip_identity():
    # for two unselected qubits: conj(A.B) = -<A|flip(B)>
    rng = np.random.default_rng(42)
    a, b = _cvec(rng, 4), _cvec(rng, 4)
    flipped = spin_flip_matrix(2) @ np.conj(b)
    assert abs(np.conj(bilinear(2, a, b)) + np.vdot(a, flipped)) < 1e-13


def test_bilinear_conjugation_general_phase():
    # the general-m version carries a phase i**m
    rng = np.random.default_rng(43)
    for m in (1, 2, 3, 4):
        a, b = _cvec(rng, 2**m), _cvec(rng, 2**m)
        flipped = spin_flip_matrix(m) @ np.conj(b)
        assert abs(np.conj(bilinear(m, a, b)) - 1j**m * np.vdot(a, flipped)) < 1e-12


def test_bilinear_invariant_under_single_slot_sl2():
    # unit-determinant mixing of one unselected qubit slot preserves the pairing
    from tanglekit.local_ops import random_sl2

    rng = np.random.default_rng(44)
    for m, slot in [(2, 0), (3, 1), (4, 3)]:
        a, b = _cvec(rng, 2**m), _cvec(rng, 2**m)
        mat = random_sl2(rng)
        ta = np.moveaxis(
            np.tensordot(mat, a.reshape((2,) * m), axes=([1], [slot])), 0, slot
        ).reshape(-1)
        tb = np.moveaxis(
            np.tensordot(mat, b.reshape((2,) * m), axes=([1], [slot])), 0, slot
        ).reshape(-1)
        before = bilinear(m, a, b)
        after = bilinear(m, ta, tb)
        assert abs(after - before) <= 1e-10 * max(1.0, abs(before))


def test_bilinear_rejects_shape_mismatch():
    with pytest.raises(ValueError):
        bilinear(2, [1.0, 0.0], [0.0, 1.0, 0.0, 0.0])
