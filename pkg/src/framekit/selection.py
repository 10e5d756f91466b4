"""Well-invertible column subset selection.

Given a system of (near-)unit-norm vectors, find an index subset whose columns
have a large smallest singular value.  The exhaustive search is the desk-scale
oracle; the greedy heuristic scales and is compared against the oracle in the
test suite.  Both are deterministic: ties break toward the lexicographically
smallest index sequence.
"""
from __future__ import annotations

import itertools
import math
from dataclasses import dataclass

import numpy as np

from .core import VectorSystem
from .errors import BadParameter, BadTarget, TooLarge, ZeroNorm

DEFAULT_SUBSET_GUARD = 1_000_000


@dataclass(frozen=True)
class SelectionResult:
    """Chosen index subset plus its certified smallest singular value."""

    subset: tuple[int, ...]
    certified_lower_bound: float
    method: str
    target_size: int
    normalization_applied: bool = False


def bt_guarantee_size(count: int, operator_norm: float, c: float) -> int:
    """floor(c * count / operator_norm^2): the subset size the selection guarantee promises."""
    if count < 0:
        raise BadParameter("count must be nonnegative")
    if operator_norm <= 0:
        raise BadParameter("operator norm must be positive")
    if not 0.0 < c <= 1.0:
        raise BadParameter("c must lie in (0, 1]")
    return int(math.floor(c * count / operator_norm**2))


def smallest_singular_value(columns: np.ndarray) -> float:
    """sigma_min of the given columns as a map from coefficient space.

    Zero when there are more columns than rows.  Computed from the SVD of the
    columns (not the Gram matrix) so values near zero carry no sqrt-amplified
    eigenvalue dust.
    """
    k = columns.shape[1]
    if k > columns.shape[0]:
        return 0.0
    svals = np.linalg.svd(columns, compute_uv=False)
    return float(svals[k - 1])


def _validated_columns(system: VectorSystem, normalize: bool) -> np.ndarray:
    if not normalize:
        return system.columns
    norms = system.norms()
    if np.any(norms == 0.0):
        raise ZeroNorm("cannot normalize a zero column")
    return system.columns / norms


def _min_eig(gram: np.ndarray, idx: list[int]) -> float:
    sub = gram[np.ix_(idx, idx)]
    return float(np.linalg.eigvalsh(sub)[0])


def greedy_order(gram: np.ndarray, limit: int, stop_below: float | None = None):
    """Greedy augmentation order maximizing sigma_min at every step.

    Returns (indices, bounds) where bounds[k] is sigma_min after k+1 picks.
    Stops early once the best achievable bound falls under stop_below; by
    eigenvalue interlacing the bounds sequence is nonincreasing, so the
    prefix kept is the largest one certified above the threshold.
    """
    m = gram.shape[0]
    limit = min(limit, m)
    chosen: list[int] = []
    taken = np.zeros(m, dtype=bool)
    bounds: list[float] = []
    while len(chosen) < limit:
        best_j = -1
        best_lam = -math.inf
        for j in range(m):
            if taken[j]:
                continue
            lam = _min_eig(gram, chosen + [j])
            if lam > best_lam:
                best_lam = lam
                best_j = j
        bound = math.sqrt(max(best_lam, 0.0))
        if stop_below is not None and bound < stop_below:
            break
        chosen.append(best_j)
        taken[best_j] = True
        bounds.append(bound)
    return chosen, bounds


def select_greedy(
    system: VectorSystem, target_size: int, normalize: bool = False
) -> SelectionResult:
    """Grow the subset one index at a time, each time maximizing sigma_min."""
    if not 1 <= target_size <= system.count:
        raise BadTarget(f"target size must be in [1, {system.count}]")
    cols = _validated_columns(system, normalize)
    gram = cols.conj().T @ cols
    gram = 0.5 * (gram + gram.conj().T)
    chosen, _ = greedy_order(gram, target_size)
    bound = smallest_singular_value(cols[:, chosen])
    return SelectionResult(
        subset=tuple(sorted(chosen)),
        certified_lower_bound=bound,
        method="greedy",
        target_size=target_size,
        normalization_applied=normalize,
    )


def select_exhaustive(
    system: VectorSystem,
    target_size: int,
    max_subsets: int = DEFAULT_SUBSET_GUARD,
    normalize: bool = False,
) -> SelectionResult:
    """Exact optimum of sigma_min over all subsets of the target size."""
    m = system.count
    if not 1 <= target_size <= m:
        raise BadTarget(f"target size must be in [1, {m}]")
    n_subsets = math.comb(m, target_size)
    if n_subsets > max_subsets:
        raise TooLarge(
            f"C({m}, {target_size}) = {n_subsets} exceeds the guard {max_subsets}"
        )
    cols = _validated_columns(system, normalize)
    gram = cols.conj().T @ cols
    gram = 0.5 * (gram + gram.conj().T)
    best_lam = -math.inf
    best: tuple[int, ...] | None = None
    for combo in itertools.combinations(range(m), target_size):
        lam = _min_eig(gram, list(combo))
        if lam > best_lam:  # strict: first maximizer wins, i.e. lexicographic
            best_lam = lam
            best = combo
    assert best is not None
    bound = smallest_singular_value(cols[:, list(best)])
    return SelectionResult(
        subset=best,
        certified_lower_bound=bound,
        method="exhaustive",
        target_size=target_size,
        normalization_applied=normalize,
    )
