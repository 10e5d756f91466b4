"""Basis-quality constants computed from the synthesis matrix spectrum.

Every constant here is an exact spectral quantity: the Hilbertian constant is
the largest singular value of the synthesis matrix, the Besselian constant the
reciprocal of the smallest (infinity once the columns are dependent), and the
two-sided Riesz constant their maximum.  Infinity is represented by
float('inf') in memory and by the string "inf" in serialized output.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
import scipy.linalg

from .core import VectorSystem
from .errors import CountMismatch, TooFewVectors

RANK_RTOL = 1e-12


def singular_values(system: VectorSystem) -> np.ndarray:
    """Singular values of the synthesis matrix, nonincreasing."""
    return np.linalg.svd(system.columns, compute_uv=False)


def _rank(svals: np.ndarray) -> int:
    if svals.size == 0 or svals[0] == 0.0:
        return 0
    return int(np.count_nonzero(svals > RANK_RTOL * svals[0]))


def hilbertian_besselian(system: VectorSystem) -> tuple[float, float]:
    """(L, Bess): the tight upper and lower coefficient-inequality constants.

    L bounds ||sum a_i f_i|| <= L ||a|| and equals sigma_max; Bess bounds
    Bess * ||sum a_i f_i|| >= ||a|| and equals 1/sigma_min, or infinity when
    the columns are linearly dependent.
    """
    svals = singular_values(system)
    hilbertian = float(svals[0])
    if _rank(svals) < system.count:
        return hilbertian, math.inf
    return hilbertian, float(1.0 / svals[system.count - 1])


def riesz_constant(system: VectorSystem) -> float:
    """Two-sided equivalence constant to an orthonormal family: max(L, Bess)."""
    hilbertian, besselian = hilbertian_besselian(system)
    return max(hilbertian, besselian)


def schauder_basis_constant(system: VectorSystem, order=None) -> float:
    """Largest prefix-projection norm in the given evaluation order.

    The constant is the smallest K with ||sum_{i<=p} a_i f_i|| bounded by
    K ||sum_i a_i f_i|| over all proper prefixes p and coefficient choices;
    it is order-dependent.  Returns infinity for dependent columns.  The
    coordinate functionals come from the pseudoinverse of the synthesis
    matrix restricted to its column space.
    """
    m = system.count
    if order is None:
        order = range(m)
    order = list(order)
    if sorted(order) != list(range(m)):
        raise CountMismatch(f"order must be a permutation of 0..{m - 1}")
    cols = system.columns[:, order]
    svals = np.linalg.svd(cols, compute_uv=False)
    if _rank(svals) < m:
        return math.inf
    if m == 1:
        return 1.0
    functionals = np.linalg.pinv(cols, rcond=RANK_RTOL)
    constant = 1.0
    for p in range(1, m):
        prefix_map = cols[:, :p] @ functionals[:p, :]
        constant = max(constant, float(np.linalg.norm(prefix_map, 2)))
    return constant


def separation_constant(system: VectorSystem) -> float:
    """min_j distance from f_j to the span of the remaining vectors."""
    m = system.count
    if m < 2:
        raise TooFewVectors("separation needs at least two vectors")
    best = math.inf
    for j in range(m):
        others = np.delete(system.columns, j, axis=1)
        u, svals, _ = np.linalg.svd(others, full_matrices=False)
        r = _rank(svals)
        f_j = system.columns[:, j]
        resid = f_j - u[:, :r] @ (u[:, :r].conj().T @ f_j)
        best = min(best, float(np.linalg.norm(resid)))
    return best


def _kernel_split(gram: np.ndarray) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """Eigenvectors of a Hermitian PSD Gram split into (range, kernel, range eigenvalues)."""
    vals, vecs = np.linalg.eigh(gram)
    vals = np.maximum(vals, 0.0)
    cutoff = RANK_RTOL * (vals[-1] if vals.size else 0.0)
    keep = vals > cutoff
    return vecs[:, keep], vecs[:, ~keep], vals[keep]


def equivalence_constant(system_a: VectorSystem, system_b: VectorSystem) -> float:
    """Smallest K with K^-1 ||sum a_i f_i|| <= ||sum a_i g_i|| <= K ||sum a_i f_i||.

    Computed from the extreme generalized eigenvalues of the Gram pencil
    (Gram_B, Gram_A); infinite when the two coefficient kernels differ.
    """
    if system_a.count != system_b.count:
        raise CountMismatch(
            f"counts differ: {system_a.count} vs {system_b.count}"
        )
    gram_a = system_a.gram()
    gram_b = system_b.gram()
    range_a, null_a, vals_a = _kernel_split(gram_a)
    range_b, null_b, vals_b = _kernel_split(gram_b)
    if range_a.shape[1] != range_b.shape[1]:
        return math.inf
    if range_a.shape[1] == 0:
        return 1.0  # both systems are identically zero
    scale_a = float(vals_a.max())
    scale_b = float(vals_b.max())
    if null_a.shape[1]:
        if np.linalg.norm(gram_b @ null_a, 2) > 1e-9 * scale_b:
            return math.inf
        if np.linalg.norm(gram_a @ null_b, 2) > 1e-9 * scale_a:
            return math.inf
    reduced_a = range_a.conj().T @ gram_a @ range_a
    reduced_b = range_a.conj().T @ gram_b @ range_a
    reduced_a = 0.5 * (reduced_a + reduced_a.conj().T)
    reduced_b = 0.5 * (reduced_b + reduced_b.conj().T)
    pencil = scipy.linalg.eigh(reduced_b, reduced_a, eigvals_only=True)
    lo = max(float(pencil[0]), 0.0)
    hi = max(float(pencil[-1]), 0.0)
    if lo == 0.0:
        return math.inf
    return max(math.sqrt(hi), 1.0 / math.sqrt(lo))


@dataclass(frozen=True)
class BasisMetrics:
    """All basis-quality constants of one system at one evaluation order."""

    riesz: float
    hilbertian: float
    besselian: float
    schauder: float
    separation: float
    singular_values: tuple[float, ...]


def basis_metrics(system: VectorSystem, order=None) -> BasisMetrics:
    """Aggregate every constant; a single vector gets separation = its norm."""
    hilbertian, besselian = hilbertian_besselian(system)
    if system.count >= 2:
        separation = separation_constant(system)
    else:
        separation = float(np.linalg.norm(system.columns[:, 0]))
    return BasisMetrics(
        riesz=max(hilbertian, besselian),
        hilbertian=hilbertian,
        besselian=besselian,
        schauder=schauder_basis_constant(system, order),
        separation=separation,
        singular_values=tuple(float(s) for s in singular_values(system)),
    )
