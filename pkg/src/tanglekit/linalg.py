"""Dense complex linear-algebra kernels: determinants, Pfaffians, maximal minors,
and lexicographic ranking of row combinations."""

from __future__ import annotations

import itertools
from math import comb

import numpy as np

# Inputs rounder than this are rejected as not antisymmetric; closer ones are
# symmetrized to (A - A^T)/2 so round-off-polluted Gram matrices behave
# deterministically.
ANTISYMMETRY_TOL = 1e-12


def _as_matrix(matrix) -> np.ndarray:
    m = np.asarray(matrix, dtype=complex)
    if m.ndim != 2:
        raise ValueError(f"expected a 2-d matrix, got ndim={m.ndim}")
    if not np.all(np.isfinite(m)):
        raise ValueError("matrix entries must be finite")
    return m


def determinant(matrix) -> complex:
    """Determinant of a square complex matrix via pivoted LU elimination."""
    m = _as_matrix(matrix)
    if m.shape[0] != m.shape[1]:
        raise ValueError(f"determinant needs a square matrix, got shape {m.shape}")
    return complex(np.linalg.det(m))


def pfaffian(matrix) -> complex:
    """Pfaffian of an even-dimensional antisymmetric complex matrix.

    Uses recursive expansion along the first row, which is exact and cheap for
    the small dimensions (<= 8) this library needs.  The input must satisfy
    max|A + A^T| <= 1e-12 and is symmetrized before expansion.
    """
    a = _as_matrix(matrix)
    if a.shape[0] != a.shape[1]:
        raise ValueError(f"pfaffian needs a square matrix, got shape {a.shape}")
    dim = a.shape[0]
    if dim % 2 != 0:
        raise ValueError(f"pfaffian needs even dimension, got {dim}")
    if dim > 0:
        asym = float(np.abs(a + a.T).max())
        if asym > ANTISYMMETRY_TOL:
            raise ValueError(
                f"matrix is not antisymmetric (max |A + A^T| entry = {asym:.3e})"
            )
    a = (a - a.T) / 2.0
    return _pfaffian_expand(a)


def _pfaffian_expand(a: np.ndarray) -> complex:
    dim = a.shape[0]
    if dim == 0:
        return 1.0 + 0.0j
    if dim == 2:
        return complex(a[0, 1])
    total = 0.0 + 0.0j
    rest = range(1, dim)
    for k, j in enumerate(rest):
        keep = [i for i in rest if i != j]
        sub = a[np.ix_(keep, keep)]
        total += (-1.0) ** k * a[0, j] * _pfaffian_expand(sub)
    return complex(total)


def maximal_minors(matrix) -> list[tuple[tuple[int, ...], complex]]:
    """All maximal minors of a rows >= cols matrix.

    Returns one ``(row_combination, minor)`` pair per cols-sized row subset, in
    lexicographic (= rank) order of the strictly increasing row tuples.
    """
    z = _as_matrix(matrix)
    rows, cols = z.shape
    if rows < cols:
        raise ValueError(f"maximal_minors needs rows >= cols, got shape {z.shape}")
    out = []
    for members in itertools.combinations(range(rows), cols):
        sub = z[members, :]
        out.append((members, complex(np.linalg.det(sub))))
    return out


def rank_combination(members, total: int) -> int:
    """Lexicographic rank of a strictly increasing combination drawn from range(total)."""
    members = tuple(members)
    size = len(members)
    prev = -1
    for c in members:
        if c <= prev or c >= total:
            raise ValueError(
                f"members must be strictly increasing in [0, {total}), got {members}"
            )
        prev = c
    rank = 0
    prev = -1
    for k, c in enumerate(members):
        for v in range(prev + 1, c):
            rank += comb(total - 1 - v, size - 1 - k)
        prev = c
    return rank


def unrank_combination(index: int, total: int, size: int) -> tuple[int, ...]:
    """Inverse of :func:`rank_combination`: the index-th combination in lexicographic order."""
    if not 0 <= index < comb(total, size):
        raise ValueError(
            f"index {index} out of range for C({total}, {size}) = {comb(total, size)}"
        )
    members = []
    v = 0
    remaining = index
    for k in range(size):
        while True:
            block = comb(total - 1 - v, size - 1 - k)
            if remaining < block:
                break
            remaining -= block
            v += 1
        members.append(v)
        v += 1
    return tuple(members)
