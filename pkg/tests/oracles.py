"""Independent test oracles.

Everything here is deliberately written from first principles (explicit bit
assembly, cofactor expansion, materialized forms) so it shares no code path
with the library implementations it checks.
"""

from __future__ import annotations

import itertools

import numpy as np


def det_cofactor(matrix) -> complex:
    """Determinant by recursive cofactor expansion along the first row."""
    m = np.asarray(matrix, dtype=complex)
    size = m.shape[0]
    if size == 1:
        return complex(m[0, 0])
    total = 0j
    for j in range(size):
        sub = np.delete(m[1:, :], j, axis=1)
        total += (-1.0) ** j * m[0, j] * det_cofactor(sub)
    return total


def assemble_index(num_qubits: int, selected, sel_bits: int, unselected, env_bits: int) -> int:
    """Amplitude index from bit values at selected/unselected 1-based positions."""
    bits = [0] * num_qubits
    for j, pos in enumerate(selected):
        bits[pos - 1] = (sel_bits >> (len(selected) - 1 - j)) & 1
    for j, pos in enumerate(unselected):
        bits[pos - 1] = (env_bits >> (len(unselected) - 1 - j)) & 1
    index = 0
    for b in bits:
        index = (index << 1) | b
    return index


def reshape_bitwise(state, selected) -> np.ndarray:
    """L x l coefficient matrix built entry by entry with explicit bit assembly."""
    n = state.num_qubits
    selected = list(selected)
    unselected = [k for k in range(1, n + 1) if k not in selected]
    rows, cols = 2 ** len(unselected), 2 ** len(selected)
    z = np.empty((rows, cols), dtype=complex)
    for alpha in range(rows):
        for a in range(cols):
            z[alpha, a] = state.amplitudes[
                assemble_index(n, selected, a, unselected, alpha)
            ]
    return z


def reduced_density(state, selected) -> np.ndarray:
    """Reduced density matrix of the selected qubits, O(4^N) summation."""
    n = state.num_qubits
    selected = list(selected)
    unselected = [k for k in range(1, n + 1) if k not in selected]
    dim = 2 ** len(selected)
    env_dim = 2 ** len(unselected)
    rho = np.zeros((dim, dim), dtype=complex)
    amps = state.amplitudes
    for a in range(dim):
        for b in range(dim):
            total = 0j
            for env in range(env_dim):
                ia = assemble_index(n, selected, a, unselected, env)
                ib = assemble_index(n, selected, b, unselected, env)
                total += amps[ia] * np.conj(amps[ib])
            rho[a, b] = total
    return rho


def d_oracle(state, selected) -> float:
    """LU monotone from the reduced density matrix: l**2 * det(rho)**(2/l)."""
    rho = reduced_density(state, selected)
    size = rho.shape[0]
    det = det_cofactor(rho).real
    return size**2 * max(det, 0.0) ** (2.0 / size)


def epsilon_entry_rule(m: int) -> np.ndarray:
    """Materialized ε-form from its entry rule (not from Kronecker products)."""
    dim = 2**m
    g = np.zeros((dim, dim))
    for i in range(dim):
        g[i, dim - 1 - i] = (-1.0) ** int(i).bit_count()
    return g


def e_oracle_minor(state, selected) -> float:
    """SLOCC monotone from the raised-minor contraction sum.

    Enumerates every column-sized row combination c, multiplies the cofactor
    minors of (g Z) and Z at c, sums, and applies the l**2 |.|**(2/l) wrapper.
    """
    z = reshape_bitwise(state, selected)
    rows, cols = z.shape
    m = rows.bit_length() - 1
    gz = epsilon_entry_rule(m) @ z
    total = 0j
    for combo in itertools.combinations(range(rows), cols):
        total += det_cofactor(gz[combo, :]) * det_cofactor(z[combo, :])
    return cols**2 * abs(total) ** (2.0 / cols)


def e_oracle_pairwise(state, selected) -> float:
    """SLOCC monotone for l = 2 via the full two-index contraction.

    Builds the antisymmetric coordinate matrix P[i, j] = Z[i,0] Z[j,1] -
    Z[j,0] Z[i,1] and contracts both indices with the materialized ε-form;
    the monotone is 2 |sum|.
    """
    z = reshape_bitwise(state, selected)
    if z.shape[1] != 2:
        raise ValueError("pairwise oracle only applies to l = 2")
    rows = z.shape[0]
    m = rows.bit_length() - 1
    p = np.outer(z[:, 0], z[:, 1]) - np.outer(z[:, 1], z[:, 0])
    g = epsilon_entry_rule(m)
    total = np.einsum("ab,ag,bd,gd->", p, g, g, p)
    return float(2.0 * abs(total))


def spin_flip_matrix(m: int) -> np.ndarray:
    """sigma_y tensor power, used by the conjugation identity of the pairing."""
    sy = np.array([[0.0, -1.0j], [1.0j, 0.0]])
    out = np.array([[1.0 + 0.0j]])
    for _ in range(m):
        out = np.kron(out, sy)
    return out
