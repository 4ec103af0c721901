"""SIS model parameters, derived quantities, and classical oracles.

The constant-population SIS system in fractions I + S = 1 reduces to a
scalar logistic equation for the infected fraction,

    D^alpha I = beta * c * I - beta * I**2,

with basic reproduction number ``sigma = beta / (gamma + mu)`` and
carrying capacity ``c = (sigma - 1) / sigma``.  This module owns the
parameter containers, the derivation of (sigma, c, b, M, radius), the
alpha = 1 closed forms used as oracles, and the Mittag-Leffler population
curve N(t) for the non-constant-population variant.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Optional

import numpy as np

from . import coeffs, specfn
from .errors import DomainError, ValidationError

__all__ = [
    "ModelParams",
    "DerivedParams",
    "derive",
    "classical_sis",
    "population_nt",
    "logistic_rhs",
]


@dataclass(frozen=True)
class ModelParams:
    """Epidemiological rates plus the fractional order.

    ``lam`` (birth rate) is only used by the population utility
    :func:`population_nt`; the constant-population model assumes
    ``lam == mu``, which is the default when ``lam`` is omitted.
    """

    beta: float
    gamma: float
    mu: float
    alpha: float
    i0: float
    lam: Optional[float] = None

    def __post_init__(self) -> None:
        if not self.beta > 0:
            raise ValidationError(f"beta must be > 0, got {self.beta}")
        if self.gamma < 0 or self.mu < 0:
            raise ValidationError("gamma and mu must be >= 0")
        if not self.gamma + self.mu > 0:
            raise ValidationError("gamma + mu must be > 0")
        if not 0 < self.alpha <= 1:
            raise ValidationError(f"alpha must be in (0, 1], got {self.alpha}")
        if not 0 <= self.i0 <= 1:
            raise ValidationError(f"i0 must be in [0, 1], got {self.i0}")
        if self.lam is None:
            object.__setattr__(self, "lam", self.mu)
        elif self.lam < 0:
            raise ValidationError(f"lam must be >= 0, got {self.lam}")

    @property
    def s0(self) -> float:
        return 1.0 - self.i0


@dataclass(frozen=True)
class DerivedParams:
    """Quantities derived from :class:`ModelParams`.

    ``M = b**(-1/alpha)`` is populated for c > 0; the guaranteed series
    radius ``r_alpha`` additionally needs ``b**(1/alpha) < 1``.
    """

    sigma: float
    c: float
    b: float
    M: Optional[float] = None
    r_alpha: Optional[float] = None


def derive(params: ModelParams) -> DerivedParams:
    """Compute sigma, c, b and (when defined) M and the series radius."""
    sigma = params.beta / (params.gamma + params.mu)
    c = (sigma - 1.0) / sigma
    b = params.beta * c
    M = None
    r_alpha = None
    if c > 0:
        M = b ** (-1.0 / params.alpha)
        if b ** (1.0 / params.alpha) < 1.0:
            r_alpha = coeffs.radius_carrying_capacity(params.alpha, b)
    return DerivedParams(sigma=sigma, c=c, b=b, M=M, r_alpha=r_alpha)


def classical_sis(params: ModelParams, t):
    """Closed-form alpha = 1 solution (I, S) at time(s) t >= 0.

    For c != 0 this is the logistic curve
    ``I = c / (1 + (c/I0 - 1) e^{-b t})``; for c == 0 the separable
    solution ``I = I0 / (1 + beta I0 t)``.  Accepts scalars or arrays.
    """
    t = np.asarray(t, dtype=float)
    if np.any(t < 0):
        raise DomainError("classical_sis requires t >= 0")
    d = derive(params)
    i0 = params.i0
    if d.c != 0.0:
        if i0 == 0.0:
            i = np.zeros_like(t)
        else:
            i = d.c / (1.0 + (d.c / i0 - 1.0) * np.exp(-d.b * t))
    else:
        i = i0 / (1.0 + params.beta * i0 * t)
    if i.ndim == 0:
        i = float(i)
        return i, 1.0 - i
    return i, 1.0 - i


def population_nt(
    params: ModelParams,
    n0: float,
    t: float,
    policy: specfn.EvalPolicy = specfn.DEFAULT_POLICY,
) -> float:
    """Total population N(t) = N0 * E_alpha((lam - mu) t^alpha).

    Constant (== N0) when lam == mu, increasing for lam > mu, decreasing
    for lam < mu.
    """
    if not n0 > 0:
        raise DomainError(f"population_nt requires N0 > 0, got {n0}")
    if t < 0:
        raise DomainError(f"population_nt requires t >= 0, got {t}")
    z = (params.lam - params.mu) * t**params.alpha
    return n0 * specfn.mittag_leffler(params.alpha, z, policy)


def logistic_rhs(params: ModelParams, derived: DerivedParams) -> Callable[[float], float]:
    """Right-hand side f(I) = beta*c*I - beta*I^2 of the reduced model.

    The single formula covers both the endemic (c > 0) and the
    sigma = 1 (c = 0) regimes; its roots are the equilibria {0, c}.
    """
    beta = params.beta
    bc = derived.b

    def f(i: float) -> float:
        return bc * i - beta * i * i

    return f
