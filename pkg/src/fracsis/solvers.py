"""Time-stepping schemes for scalar Caputo initial value problems.

Both schemes solve ``D^alpha u = f(u)``, ``u(0) = u0`` on a uniform grid
and are nonlocal in time: step n + 1 uses the entire history u_0..u_n.

* :func:`solve_pece` — fractional Adams-Bashforth-Moulton in PECE form.
  The predictor integrates the memory kernel with a product rectangle
  rule (weights ``b_{j,n+1}``), the single corrector pass with a product
  trapezoidal rule (weights ``a_{j,n+1}``).  Valid for alpha in (0, 1];
  at alpha = 1 it degenerates to a Heun-type one-step Adams-Moulton
  method applied to the integrated equation.

* :func:`solve_l1` — explicit scheme built on the piecewise-linear (L1)
  discretisation of the Caputo derivative with history weights derived
  from ``g(r) = r^(1-alpha) - (r-1)^(1-alpha)``.  Valid for alpha in
  (0, 1) with the endpoints excluded; as alpha -> 1 it collapses to
  forward Euler.

History is kept in full (O(N^2) work overall): the experiment grids are
tiny and fidelity beats speed here.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass, field
from typing import Callable

import numpy as np

from .errors import DomainError, NumericOverflowError, ValidationError

__all__ = [
    "TimeGrid",
    "Method",
    "Trajectory",
    "pece_weights_b",
    "pece_weights_a",
    "solve_pece",
    "l1_coeffs",
    "solve_l1",
    "discrete_caputo_l1",
]


@dataclass(frozen=True)
class TimeGrid:
    """Uniform grid t_n = n*dt, n = 0..N, with N = round(T/dt).

    (T, dt) must divide evenly: construction fails if |N*dt - T| > dt/2.
    """

    T: float
    dt: float
    N: int = field(init=False)

    def __post_init__(self) -> None:
        if not self.T > 0 or not self.dt > 0:
            raise ValidationError(f"need T > 0 and dt > 0, got T={self.T}, dt={self.dt}")
        n = round(self.T / self.dt)
        # rounding alone guarantees |n*dt - T| <= dt/2, so evenness has to
        # be enforced at rounding-noise scale instead
        if n < 1 or abs(n * self.dt - self.T) > 1e-9 * max(1.0, abs(self.T)):
            raise ValidationError(
                f"dt={self.dt} does not evenly divide T={self.T}"
            )
        object.__setattr__(self, "N", n)

    def nodes(self) -> np.ndarray:
        return np.arange(self.N + 1) * self.dt


class Method(enum.Enum):
    """Provenance tag for a trajectory."""

    SERIES = "series"
    PECE = "pece"
    L1 = "l1"
    CLASSICAL = "classical"


@dataclass(frozen=True)
class Trajectory:
    """Sampled solution u_0..u_N on a grid, tagged with its method."""

    grid: TimeGrid
    u: np.ndarray
    method: Method
    meta: dict = field(default_factory=dict)

    def __post_init__(self) -> None:
        u = np.asarray(self.u, dtype=float)
        if u.shape != (self.grid.N + 1,):
            raise ValidationError(
                f"trajectory length {u.shape} does not match grid N={self.grid.N}"
            )
        object.__setattr__(self, "u", u)


def _check_alpha(alpha: float, include_one: bool, who: str) -> None:
    ok = 0 < alpha <= 1 if include_one else 0 < alpha < 1
    bounds = "(0, 1]" if include_one else "(0, 1)"
    if not ok:
        raise DomainError(f"{who} requires alpha in {bounds}, got {alpha}")


def pece_weights_b(alpha: float, n: int, dt: float) -> np.ndarray:
    """Rectangle-rule memory weights b_{j,n+1}, j = 0..n.

    b_{j,n+1} = (dt^alpha / alpha) * ((n+1-j)^alpha - (n-j)^alpha);
    positive, decreasing in n - j, and identically dt at alpha = 1.
    """
    _check_alpha(alpha, True, "pece_weights_b")
    if n < 0:
        raise DomainError(f"n must be >= 0, got {n}")
    j = np.arange(n + 1, dtype=float)
    return dt**alpha / alpha * ((n + 1 - j) ** alpha - (n - j) ** alpha)


def pece_weights_a(alpha: float, n: int, dt: float) -> np.ndarray:
    """Trapezoidal memory weights a_{j,n+1}, j = 0..n+1.

    a_{0,n+1}   = k * (n^(alpha+1) - (n - alpha) (n+1)^alpha)
    a_{j,n+1}   = k * ((n-j+2)^(alpha+1) - 2 (n-j+1)^(alpha+1)
                       + (n-j)^(alpha+1)),   j = 1..n
    a_{n+1,n+1} = k
    with k = dt^alpha / (alpha (alpha + 1)).
    """
    _check_alpha(alpha, True, "pece_weights_a")
    if n < 0:
        raise DomainError(f"n must be >= 0, got {n}")
    k = dt**alpha / (alpha * (alpha + 1.0))
    a = np.empty(n + 2)
    a[0] = k * (n ** (alpha + 1.0) - (n - alpha) * (n + 1.0) ** alpha)
    if n >= 1:
        j = np.arange(1, n + 1, dtype=float)
        a[1 : n + 1] = k * (
            (n - j + 2.0) ** (alpha + 1.0)
            - 2.0 * (n - j + 1.0) ** (alpha + 1.0)
            + (n - j) ** (alpha + 1.0)
        )
    a[n + 1] = k
    return a


def solve_pece(
    f: Callable[[float], float], u0: float, grid: TimeGrid, alpha: float
) -> Trajectory:
    """March the PECE scheme over the grid.

    Per step: predict with the rectangle rule over the stored history,
    evaluate f there, correct once with the trapezoidal rule (the
    endpoint weight applied to the predicted value), evaluate f at the
    corrected value.  Raises :class:`NumericOverflowError` naming the
    step at which the iterate left the representable range.
    """
    _check_alpha(alpha, True, "solve_pece")
    inv_gamma = 1.0 / math.gamma(alpha)
    u = np.empty(grid.N + 1)
    fu = np.empty(grid.N + 1)
    u[0] = u0
    fu[0] = f(u0)
    for n in range(grid.N):
        bw = pece_weights_b(alpha, n, grid.dt)
        pred = u0 + inv_gamma * float(bw @ fu[: n + 1])
        aw = pece_weights_a(alpha, n, grid.dt)
        nxt = u0 + inv_gamma * (
            float(aw[: n + 1] @ fu[: n + 1]) + aw[n + 1] * f(pred)
        )
        if not math.isfinite(nxt):
            raise NumericOverflowError(f"PECE iterate overflowed at step {n + 1}")
        u[n + 1] = nxt
        fu[n + 1] = f(nxt)
    return Trajectory(grid, u, Method.PECE, {"alpha": alpha, "u0": u0})


def l1_coeffs(alpha: float, n: int) -> np.ndarray:
    """L1 history weights C_{n,j}, j = 0..n-1, for the target index n.

    With g(r) = r^(1-alpha) - (r-1)^(1-alpha):
    C_{n,0} = g(n) and C_{n,j} = g(n-j) - g(n-j+1) for j >= 1.
    They telescope to sum_j C_{n,j} = g(1) = 1, which is what makes the
    discrete operator annihilate constants.
    """
    _check_alpha(alpha, False, "l1_coeffs")
    if n < 1:
        raise DomainError(f"l1_coeffs requires n >= 1, got {n}")
    r = np.arange(1, n + 1, dtype=float)
    g = r ** (1.0 - alpha) - (r - 1.0) ** (1.0 - alpha)
    c = np.empty(n)
    c[0] = g[n - 1]
    if n >= 2:
        j = np.arange(1, n)
        c[1:] = g[n - j - 1] - g[n - j]
    return c


def solve_l1(
    f: Callable[[float], float], u0: float, grid: TimeGrid, alpha: float
) -> Trajectory:
    """March the explicit L1 scheme over the grid.

    u_{n+1} = sum_{j=0}^{n} C_{n+1,j} u_j + Gamma(2-alpha) dt^alpha f(u_n),
    i.e. the L1 discrete Caputo derivative at t_{n+1} is set equal to
    f(u_n).  The first step is u_1 = u_0 + Gamma(2-alpha) dt^alpha f(u_0).
    """
    _check_alpha(alpha, False, "solve_l1")
    gain = math.gamma(2.0 - alpha) * grid.dt**alpha
    u = np.empty(grid.N + 1)
    u[0] = u0
    for n in range(grid.N):
        c = l1_coeffs(alpha, n + 1)
        # fluctuation form of the history sum (the weights sum to one):
        # sum_j C_j u_j = u_n + sum_j C_j (u_j - u_n), which preserves
        # constant data bit-exactly
        hist = u[n] + float(c @ (u[: n + 1] - u[n]))
        nxt = hist + gain * f(u[n])
        if not math.isfinite(nxt):
            raise NumericOverflowError(f"L1 iterate overflowed at step {n + 1}")
        u[n + 1] = nxt
    return Trajectory(grid, u, Method.L1, {"alpha": alpha, "u0": u0})


def discrete_caputo_l1(u, alpha: float, dt: float) -> np.ndarray:
    """L1 approximation of the Caputo derivative of a sampled sequence.

    Returns the values at the nodes n = 1..len(u)-1:

        D^alpha u_n = (u_n - sum_{j<n} C_{n,j} u_j) / (Gamma(2-alpha) dt^alpha)

    Annihilates constants and is linear in u.
    """
    _check_alpha(alpha, False, "discrete_caputo_l1")
    u = np.asarray(u, dtype=float)
    if u.ndim != 1 or u.size < 2:
        raise DomainError("discrete_caputo_l1 needs a 1-D sequence of length >= 2")
    scale = 1.0 / (math.gamma(2.0 - alpha) * dt**alpha)
    out = np.empty(u.size - 1)
    for n in range(1, u.size):
        c = l1_coeffs(alpha, n)
        # u_n - sum_j C_j u_j recast as sum_j C_j (u_n - u_j): exact zero
        # on constant data
        out[n - 1] = scale * float(c @ (u[n] - u[:n]))
    return out
