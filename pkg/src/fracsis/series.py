"""Evaluation of the explicit fractional power-series solutions.

A :class:`SeriesSolution` packages a coefficient table with two scales so
that every solution in the family reads

    value(t) = scale_c * sum_k c_k * arg_scale^k * t^(alpha k)
                                   / Gamma(alpha k + 1).

* carrying-capacity case (c != 0, b^(1/alpha) < 1):  I(t) with
  ``scale_c = c`` and ``arg_scale = b`` over the alpha-Euler table, i.e.
  the k-th term is E_k b^k t^(alpha k) / Gamma(alpha k + 1).  The initial
  datum is pinned to I(0) = c/2 by the table normalisation E_0 = 1/2.
* zero-capacity case (sigma = 1):  I(t) with ``scale_c = 1/beta`` and
  ``arg_scale = 1`` over the A-table; I(0) = 1/(2 beta).
* rescaled decay solution: the A-series with initial datum a0 in (0, 1)
  dilated in time by 2^q, extending its guaranteed interval of validity
  to (0, 2^q a0^(1/alpha)).

Evaluation sums terms in increasing k with ratio updates (one lgamma
difference per order, cached per (alpha, K)).  Truncation follows
:class:`~fracsis.specfn.EvalPolicy`; values past the guaranteed radius
are permitted but flagged, and sustained term growth flips ``converged``
off in-band instead of raising.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .coeffs import (
    CoeffKind,
    CoeffTable,
    RadiusEstimate,
    empirical_radius,
    radius_carrying_capacity,
    radius_zero_capacity,
)
from .errors import DomainError, HypothesisError, InsufficientDataError
from .model import DerivedParams
from .solvers import Method, TimeGrid, Trajectory
from .specfn import DEFAULT_POLICY, EvalPolicy

__all__ = [
    "SeriesKind",
    "SeriesSolution",
    "EvalResult",
    "carrying_capacity_series",
    "zero_capacity_series",
    "rescaled_zero_capacity_series",
    "evaluate",
    "sample_trajectory",
]

#: consecutive sub-tolerance terms that stop the summation
_STOP_STREAK = 3
#: consecutive growing (non-negligible) terms that flag divergence ...
_GROW_STREAK = 5
#: ... once at least this many terms have been summed
_GROW_MIN_K = 10


class SeriesKind(enum.Enum):
    CARRYING_CAPACITY = "carrying-capacity"
    ZERO_CAPACITY = "zero-capacity"


@dataclass(frozen=True)
class SeriesSolution:
    """An evaluatable truncated series solution."""

    alpha: float
    kind: SeriesKind
    coeffs: CoeffTable
    scale_c: float
    arg_scale: float
    radius: RadiusEstimate


@dataclass(frozen=True)
class EvalResult:
    """Point evaluation with truncation/diagnostic flags.

    ``value_s`` is 1 - value_i by construction.  ``converged`` is False
    both when the stopping rule never fired within the available terms
    and when sustained term growth was detected; in either case the value
    fields carry the last partial sum.
    """

    value_i: float
    value_s: float
    terms_used: int
    converged: bool
    beyond_theoretical_radius: bool


def _radius_for(table: CoeffTable, b_scale: float, theoretical: float) -> RadiusEstimate:
    """Empirical + guaranteed radius pair; empirical omitted for short tables."""
    try:
        est = empirical_radius(table, b_scale)
        return RadiusEstimate(theoretical, est.empirical, est.k_used)
    except InsufficientDataError:
        return RadiusEstimate(theoretical, None, 0)


def _check_table(table: CoeffTable, kind: CoeffKind, alpha: float) -> None:
    if table.kind is not kind:
        raise HypothesisError(f"series needs a {kind.value} table, got {table.kind.value}")
    if table.alpha != alpha:
        raise HypothesisError(
            f"table was built for alpha={table.alpha}, series requested alpha={alpha}"
        )


def carrying_capacity_series(
    derived: DerivedParams, alpha: float, coeff_table: CoeffTable
) -> SeriesSolution:
    """Series solution I(t) for the endemic case c != 0.

    Hypotheses: c > 0 and b^(1/alpha) < 1, with initial datum I(0) = c/2.
    """
    _check_table(coeff_table, CoeffKind.EULER_ALPHA, alpha)
    if derived.c == 0:
        raise HypothesisError("carrying-capacity series requires c != 0")
    if derived.c < 0 or derived.b ** (1.0 / alpha) >= 1.0:
        raise HypothesisError(
            f"carrying-capacity series requires 0 < b^(1/alpha) < 1, "
            f"got c={derived.c}, b={derived.b}"
        )
    theoretical = radius_carrying_capacity(alpha, derived.b)
    return SeriesSolution(
        alpha=alpha,
        kind=SeriesKind.CARRYING_CAPACITY,
        coeffs=coeff_table,
        scale_c=derived.c,
        arg_scale=derived.b,
        radius=_radius_for(coeff_table, derived.b, theoretical),
    )


def zero_capacity_series(beta: float, alpha: float, coeff_table: CoeffTable) -> SeriesSolution:
    """Series solution I(t) for the sigma = 1 case (c = 0).

    The construction fixes the initial datum I(0) = 1/(2 beta), i.e. the
    table must be the canonical A-table with A_0 = 1/2.
    """
    _check_table(coeff_table, CoeffKind.A_COEFF, alpha)
    if not beta > 0:
        raise HypothesisError(f"zero-capacity series requires beta > 0, got {beta}")
    if coeff_table.values[0] != 0.5:
        raise HypothesisError(
            f"zero-capacity epidemic series requires A_0 = 1/2, "
            f"got {coeff_table.values[0]}"
        )
    theoretical = radius_zero_capacity(alpha)
    return SeriesSolution(
        alpha=alpha,
        kind=SeriesKind.ZERO_CAPACITY,
        coeffs=coeff_table,
        scale_c=1.0 / beta,
        arg_scale=1.0,
        radius=_radius_for(coeff_table, 1.0, theoretical),
    )


def rescaled_zero_capacity_series(
    a0: float, alpha: float, coeff_table: CoeffTable
) -> SeriesSolution:
    """Decay-series solution v with arbitrary initial datum a0 in (0, 1).

    The A-series for u(0) = a0 is dilated in time, v(t) = u(t / 2^q) with

        q = 1/a0                      if a0 < 1/2,
        q = 4 + (1/a0 - 4) / 2        otherwise,

    which stretches the guaranteed radius to 2^q * a0^(1/alpha).
    """
    if not 0 < a0 < 1:
        raise DomainError(f"rescaled series requires a0 in (0, 1), got {a0}")
    _check_table(coeff_table, CoeffKind.A_COEFF, alpha)
    if coeff_table.values[0] != a0:
        raise HypothesisError(
            f"table initial datum {coeff_table.values[0]} does not match a0={a0}"
        )
    q = 1.0 / a0 if a0 < 0.5 else 4.0 + 0.5 * (1.0 / a0 - 4.0)
    arg_scale = (2.0**-q) ** alpha
    theoretical = 2.0**q * a0 ** (1.0 / alpha)
    try:
        est = empirical_radius(coeff_table, arg_scale)
        radius = RadiusEstimate(theoretical, est.empirical, est.k_used)
    except InsufficientDataError:
        radius = RadiusEstimate(theoretical, None, 0)
    return SeriesSolution(
        alpha=alpha,
        kind=SeriesKind.ZERO_CAPACITY,
        coeffs=coeff_table,
        scale_c=1.0,
        arg_scale=arg_scale,
        radius=radius,
    )


@lru_cache(maxsize=64)
def _term_ratios(alpha: float, order: int) -> tuple[float, ...]:
    """ratios[k] = Gamma(alpha (k-1) + 1) / Gamma(alpha k + 1), k = 1..order."""
    lg = [math.lgamma(alpha * k + 1.0) for k in range(order + 1)]
    return tuple(math.exp(lg[k - 1] - lg[k]) for k in range(1, order + 1))


def evaluate(series: SeriesSolution, t: float, policy: EvalPolicy = DEFAULT_POLICY) -> EvalResult:
    """Evaluate the truncated series at a single time t >= 0.

    The sum is accumulated in increasing k (fixed order, deterministic);
    it stops early once three consecutive terms drop below
    ``policy.abs_tol``.  Divergence is never an exception: past-radius
    evaluation is flagged via ``beyond_theoretical_radius`` and sustained
    growth (five consecutive growing terms after k >= 10) clears
    ``converged``.
    """
    if t < 0:
        raise DomainError(f"series evaluation requires t >= 0, got {t}")
    vals = series.coeffs.values
    theo = series.radius.theoretical
    beyond = theo is not None and t > theo
    if t == 0.0:
        i0 = series.scale_c * vals[0]
        return EvalResult(i0, 1.0 - i0, 1, True, beyond)

    ratios = _term_ratios(series.alpha, series.coeffs.order)
    ta = series.arg_scale * t**series.alpha
    limit = min(len(vals), policy.max_terms)
    x = 1.0
    total = vals[0]
    terms_used = 1
    converged = False
    below = 0
    grow = 0
    prev_mag = abs(vals[0])
    for k in range(1, limit):
        x *= ta * ratios[k - 1]
        term = vals[k] * x
        total += term
        terms_used += 1
        mag = abs(term)
        if mag < policy.abs_tol:
            below += 1
            if below >= _STOP_STREAK:
                converged = True
                break
        else:
            below = 0
            # growth is tracked across the non-negligible terms only, so
            # the structurally vanishing even-index entries of the
            # alpha-Euler table cannot mask a blow-up
            if mag > prev_mag and k >= _GROW_MIN_K:
                grow += 1
                if grow >= _GROW_STREAK:
                    converged = False
                    break
            else:
                grow = 0
            prev_mag = mag
    value_i = series.scale_c * total
    return EvalResult(value_i, 1.0 - value_i, terms_used, converged, beyond)


def sample_trajectory(
    series: SeriesSolution, grid: TimeGrid, policy: EvalPolicy = DEFAULT_POLICY
) -> Trajectory:
    """Evaluate the series on every grid node, aggregating the flags."""
    nodes = grid.nodes()
    u = np.empty(nodes.size)
    converged = []
    beyond = []
    terms = []
    for idx, t in enumerate(nodes):
        r = evaluate(series, float(t), policy)
        u[idx] = r.value_i
        converged.append(r.converged)
        beyond.append(r.beyond_theoretical_radius)
        terms.append(r.terms_used)
    meta = {
        "alpha": series.alpha,
        "kind": series.kind.value,
        "converged": converged,
        "beyond_theoretical_radius": beyond,
        "terms_used": terms,
        "all_converged": all(converged),
    }
    return Trajectory(grid, u, Method.SERIES, meta)
