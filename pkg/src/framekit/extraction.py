"""Subset extraction with a directly certified Riesz constant.

Two peeling loops share one engine.  Each round projects off the span of
everything selected so far, then greedily selects among the projected
residuals (normalized from round two onward) a subset whose smallest singular
value stays above c times the current residual floor.  A round never takes
more than what is still needed to reach coverage ceil((1 - eps) * n): the
certified conditioning of the final subset then depends on eps and the frame
data but not on the dimension, which is the whole point.

The biorthogonal variant runs on linearly independent systems with positive
separation; the frame variant runs on spanning systems and additionally gates
each round on a residual threshold delta chosen from the frame bounds.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .core import DEFAULT_TOLERANCE, VectorSystem, coverage_target, frame_report
from .errors import (
    BadParameter,
    GuaranteeEmpty,
    InfeasibleDelta,
    NotSeparated,
    NotSpanning,
    RoundLimit,
    ZeroNorm,
)
from .metrics import riesz_constant, separation_constant, singular_values
from .selection import bt_guarantee_size, greedy_order

ROUND_CAP = 64


@dataclass(frozen=True)
class ExtractionRound:
    """One peeling round: what was examined, what was taken, and the certificate."""

    index: int
    examined: tuple[int, ...]
    residual_norms: tuple[float, ...]
    selected: tuple[int, ...]
    certified_bound: float
    bt_target: int
    normalized: bool
    coverage: float
    rule2_lower_bound: float | None = None


@dataclass(frozen=True, eq=False)
class ExtractionTrace:
    """Full per-round record of an extraction run."""

    mode: str
    rounds: tuple[ExtractionRound, ...]
    final_subset: tuple[int, ...]
    final_riesz_constant: float
    stop_reason: str
    parameters: dict = field(default_factory=dict)


@dataclass(frozen=True)
class BoundCertificate:
    """Pieces of the explicit dimension-free Riesz-constant certificate."""

    b: float
    rounds: int
    r: float
    a: float
    value: float


def bound_certificate(
    eps: float, separation: float, hilbertian: float, c: float
) -> BoundCertificate:
    """Evaluate the explicit certificate g(eps, d, L) with its documented choices.

    b = c d^2 / L^2; rounds m is the smallest integer with (1-b)^(m-1) <= eps
    (m = 1 once b >= 1); r = max(2, 1 + 2L/(c d)) + 1; a = r^-(m+1) / 2; the
    certificate is max(L, (r - 1) / (L a)), returned as infinity on overflow.
    """
    if not 0.0 < eps < 1.0:
        raise BadParameter("eps must lie strictly between 0 and 1")
    if not 0.0 < separation <= 1.0:
        raise BadParameter("separation must lie in (0, 1]")
    if hilbertian < 1.0:
        raise BadParameter("hilbertian constant must be at least 1")
    if not 0.0 < c <= 1.0:
        raise BadParameter("c must lie in (0, 1]")
    b = c * separation**2 / hilbertian**2
    if b >= 1.0:
        rounds = 1
    else:
        ratio = math.log(eps) / math.log(1.0 - b)
        if abs(ratio - round(ratio)) < 1e-9:
            ratio = round(ratio)
        rounds = 1 + max(1, math.ceil(ratio))
    r = max(2.0, 1.0 + 2.0 * hilbertian / (c * separation)) + 1.0
    try:
        a = r ** (-(rounds + 1)) / 2.0
    except OverflowError:
        a = 0.0
    try:
        lower_part = 2.0 * (r - 1.0) * r ** (rounds + 1) / hilbertian
    except OverflowError:
        lower_part = math.inf
    return BoundCertificate(b, rounds, r, a, max(hilbertian, lower_part))


def theoretical_bound(eps: float, separation: float, hilbertian: float, c: float) -> float:
    """The certificate value alone; see bound_certificate for the pieces."""
    return bound_certificate(eps, separation, hilbertian, c).value


def _orthonormal_extend(basis: np.ndarray, new_cols: np.ndarray) -> np.ndarray:
    """Grow an orthonormal basis by the directions of new_cols (re-orthogonalized twice)."""
    for k in range(new_cols.shape[1]):
        v = new_cols[:, k].copy()
        for _ in range(2):
            if basis.shape[1]:
                v -= basis @ (basis.conj().T @ v)
        norm = np.linalg.norm(v)
        if norm > 1e-14 * max(1.0, np.linalg.norm(new_cols[:, k])):
            basis = np.concatenate([basis, (v / norm)[:, None]], axis=1)
    return basis


def _hermitian_gram(cols: np.ndarray) -> np.ndarray:
    gram = cols.conj().T @ cols
    return 0.5 * (gram + gram.conj().T)


def _run_rounds(
    system: VectorSystem,
    eps: float,
    c: float,
    target: int,
    total: int,
    delta: float | None,
    rule2_coeff: float | None,
    tolerance: float,
):
    """Shared peeling loop.  delta gates eligibility (frame mode) when given."""
    cols = system.columns
    n = system.dim
    selected: list[int] = []
    basis = np.zeros((n, 0), dtype=np.complex128)
    rounds: list[ExtractionRound] = []
    stop_reason = None
    for round_idx in range(1, ROUND_CAP + 1):
        if len(selected) >= target:
            stop_reason = "coverage_reached"
            break
        taken = set(selected)
        remaining = [i for i in range(system.count) if i not in taken]
        resid = cols[:, remaining].copy()
        if basis.shape[1]:
            resid -= basis @ (basis.conj().T @ resid)
        norms = np.linalg.norm(resid, axis=0)
        if delta is not None:
            eligible_mask = norms >= delta * (1.0 - 1e-12)
            if np.count_nonzero(eligible_mask) <= eps * n / 2.0 + 1e-9:
                rounds.append(
                    ExtractionRound(
                        index=round_idx,
                        examined=tuple(remaining),
                        residual_norms=tuple(float(x) for x in norms),
                        selected=(),
                        certified_bound=0.0,
                        bt_target=0,
                        normalized=False,
                        coverage=len(selected) / total,
                        rule2_lower_bound=_rule2(rule2_coeff, round_idx, eps, delta, n),
                    )
                )
                stop_reason = "residual_set_small"
                break
            pool = [remaining[k] for k in range(len(remaining)) if eligible_mask[k]]
            pool_resid = resid[:, eligible_mask]
            pool_norms = norms[eligible_mask]
        else:
            pool = remaining
            pool_resid = resid
            pool_norms = norms
        if round_idx == 1:
            work = cols[:, pool]
            floor = float(np.min(pool_norms))
            normalized = False
        else:
            work = pool_resid / pool_norms
            floor = 1.0
            normalized = True
        if floor <= 0.0:
            raise GuaranteeEmpty("all residuals vanished before reaching coverage")
        operator_norm = float(np.linalg.norm(work, 2))
        guarantee = (
            bt_guarantee_size(len(pool), operator_norm, c) if operator_norm > 0 else 0
        )
        cap = target - len(selected)
        order, bounds = greedy_order(_hermitian_gram(work), cap, stop_below=c * floor)
        if not order:
            raise GuaranteeEmpty(
                f"round {round_idx}: guarantee size {guarantee} and no certifiable pick"
            )
        chosen = [pool[j] for j in order]
        selected.extend(chosen)
        basis = _orthonormal_extend(basis, cols[:, chosen])
        rounds.append(
            ExtractionRound(
                index=round_idx,
                examined=tuple(remaining),
                residual_norms=tuple(float(x) for x in norms),
                selected=tuple(chosen),
                certified_bound=float(bounds[-1]),
                bt_target=guarantee,
                normalized=normalized,
                coverage=len(selected) / total,
                rule2_lower_bound=_rule2(rule2_coeff, round_idx, eps, delta, n),
            )
        )
    else:
        raise RoundLimit(f"extraction exceeded {ROUND_CAP} rounds")
    if stop_reason is None:
        stop_reason = "coverage_reached"
    return selected, rounds, stop_reason


def _rule2(coeff, round_idx, eps, delta, n) -> float | None:
    # logged (not used for control): d n + (m-1) (d/delta^2) (eps/2) n
    if coeff is None or delta is None:
        return None
    return float(coeff * n + (round_idx - 1) * (coeff / delta**2) * (eps / 2.0) * n)


def extract_biorthogonal(
    system: VectorSystem,
    eps: float,
    c: float = 0.1,
    tolerance: float = DEFAULT_TOLERANCE,
) -> ExtractionTrace:
    """Peel a linearly independent, separated system down to a certified subset.

    Round one selects among the raw vectors; later rounds select among the
    normalized projected residuals.  Stops once at least ceil((1 - eps) * m)
    indices are covered, m being the vector count (the span dimension for an
    independent family).  Raises NotSeparated when the separation constant is
    at or below tolerance.
    """
    if not 0.0 < eps < 1.0:
        raise BadParameter("eps must lie strictly between 0 and 1")
    if not 0.0 < c <= 1.0:
        raise BadParameter("c must lie in (0, 1]")
    m = system.count
    if m >= 2:
        separation = separation_constant(system)
    else:
        separation = float(np.linalg.norm(system.columns[:, 0]))
    if separation <= tolerance:
        raise NotSeparated(f"separation {separation:.3e} is at or below tolerance")
    hilbertian = float(singular_values(system)[0])
    target = coverage_target(m, eps)
    selected, rounds, stop_reason = _run_rounds(
        system, eps, c, target, m, None, None, tolerance
    )
    final = tuple(sorted(selected))
    final_riesz = riesz_constant(system.subsystem(final))
    try:
        certificate = theoretical_bound(
            eps, min(separation, 1.0), max(hilbertian, 1.0), c
        )
    except BadParameter:  # pragma: no cover - clipped arguments are always legal
        certificate = None
    parameters = {
        "eps": eps,
        "c": c,
        "separation": separation,
        "hilbertian": hilbertian,
        "target": target,
        "total": m,
        "tolerance": tolerance,
        "theoretical_bound": certificate,
    }
    return ExtractionTrace(
        mode="biorthogonal",
        rounds=tuple(rounds),
        final_subset=final,
        final_riesz_constant=final_riesz,
        stop_reason=stop_reason,
        parameters=parameters,
    )


def default_delta(eps: float, lower: float, upper: float, min_norm: float) -> float:
    """Largest residual threshold satisfying the feasibility inequality with equality."""
    return math.sqrt(eps * lower * min_norm**2 / (2.0 * upper))


def extract_frame(
    system: VectorSystem,
    eps: float,
    c: float = 0.1,
    delta_override: float | None = None,
    tolerance: float = DEFAULT_TOLERANCE,
) -> ExtractionTrace:
    """Peel a spanning frame down to a certified subset of size >= ceil((1 - eps) n).

    Rounds select only among indices whose current residual norm is at least
    delta, where delta defaults to equality in (delta^2/A)(B/alpha^2) <= eps/2.
    The loop stops when either coverage is reached or too few residuals clear
    delta; in the latter case the counting inequalities force the coverage
    bound anyway.
    """
    if not 0.0 < eps < 1.0:
        raise BadParameter("eps must lie strictly between 0 and 1")
    if not 0.0 < c <= 1.0:
        raise BadParameter("c must lie in (0, 1]")
    report = frame_report(system, tolerance)
    if not report.is_spanning:
        raise NotSpanning("frame extraction needs a spanning system")
    if report.min_norm <= 0.0:
        raise ZeroNorm("frame extraction needs all norms positive")
    lower, upper = report.lower_bound, report.upper_bound
    alpha, beta = report.min_norm, report.max_norm
    if delta_override is not None:
        if delta_override <= 0.0:
            raise InfeasibleDelta("delta must be positive")
        if (delta_override**2 / lower) * (upper / alpha**2) > eps / 2.0 + 1e-12:
            raise InfeasibleDelta(
                f"delta {delta_override:.6g} violates the feasibility inequality"
            )
        delta = float(delta_override)
    else:
        delta = default_delta(eps, lower, upper, alpha)
    n = system.dim
    target = coverage_target(n, eps)
    rule2_coeff = c / upper**2
    selected, rounds, stop_reason = _run_rounds(
        system, eps, c, target, n, delta, rule2_coeff, tolerance
    )
    final = tuple(sorted(selected))
    final_riesz = riesz_constant(system.subsystem(final))
    parameters = {
        "eps": eps,
        "c": c,
        "delta": delta,
        "lower_bound": lower,
        "upper_bound": upper,
        "min_norm": alpha,
        "max_norm": beta,
        "target": target,
        "total": n,
        "tolerance": tolerance,
    }
    return ExtractionTrace(
        mode="frame",
        rounds=tuple(rounds),
        final_subset=final,
        final_riesz_constant=final_riesz,
        stop_reason=stop_reason,
        parameters=parameters,
    )
