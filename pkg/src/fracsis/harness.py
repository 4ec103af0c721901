"""Experiment orchestration: configs, presets, comparisons, file emission.

A :class:`RunConfig` fully determines a run; identical configs produce
byte-identical CSV output (fixed summation orders, fixed 17-significant-
digit formatting, sorted JSON keys, no timestamps).  Each emitted run
carries a ``manifest.json`` that embeds the exact config under a
``"config"`` key, so a manifest can be fed back to :func:`load_config`
to reproduce the run bit-for-bit.

Two presets reproduce the reference experiments:

* ``c-nonzero`` — beta=0.7, gamma=0.05, mu=0.12 (sigma ~ 4.118,
  c ~ 0.757), I0 = c/2, T=5, dt=0.05;
* ``c-zero``    — beta=0.7, gamma=0.07, mu=0.63 (sigma = 1, c = 0),
  I0 = 1/(2 beta), T=1, dt=0.01.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass
from pathlib import Path
from typing import Optional, Sequence

import numpy as np

from .coeffs import a_coeffs, euler_alpha
from .errors import GridMismatchError, ValidationError
from .model import ModelParams, DerivedParams, classical_sis, derive, logistic_rhs
from .series import (
    SeriesSolution,
    carrying_capacity_series,
    sample_trajectory,
    zero_capacity_series,
)
from .solvers import Method, TimeGrid, Trajectory, solve_l1, solve_pece
from .specfn import EvalPolicy, mittag_leffler

__all__ = [
    "RunConfig",
    "ComparisonReport",
    "PRESETS",
    "TABLE1_ALPHAS",
    "C0_SUITE_ALPHAS",
    "preset_config",
    "load_config",
    "read_config_dict",
    "config_from_dict",
    "solve_method",
    "run_methods",
    "compare_methods",
    "linf_distance",
    "crossing_node",
    "run_table1",
    "run_c0_suite",
    "population_curve",
    "emit",
]

TOOL_NAME = "fracsis"
TOOL_VERSION = "0.1.0"

#: number format used for every CSV value (17 significant digits)
_FMT = ".17g"

_CONFIG_KEYS = {
    "preset", "beta", "gamma", "mu", "lambda", "alpha", "i0",
    "T", "dt", "methods", "terms", "out", "formats",
}
_FORMATS = {"csv", "json", "svg"}

_DEFAULT_T = 5.0
_DEFAULT_DT = 0.05
_DEFAULT_TERMS = 120
_DEFAULT_METHODS = ("pece", "l1")
_DEFAULT_FORMATS = ("csv", "json")

TABLE1_ALPHAS = (0.99, 0.7, 0.3)
C0_SUITE_ALPHAS = (0.99, 0.7, 0.5)

# preset values are the experiment parameters as typed; i0 is filled from
# the derived carrying capacity at load time where marked None
PRESETS = {
    "c-nonzero": {
        "beta": 0.7, "gamma": 0.05, "mu": 0.12,
        "i0": None,  # c/2
        "T": 5.0, "dt": 0.05,
    },
    "c-zero": {
        "beta": 0.7, "gamma": 0.07, "mu": 0.63,
        "i0": None,  # 1/(2 beta)
        "T": 1.0, "dt": 0.01,
    },
}


@dataclass(frozen=True)
class RunConfig:
    """A fully validated, reproducible run description."""

    params: ModelParams
    grid: TimeGrid
    methods: tuple[Method, ...]
    series_terms: int = _DEFAULT_TERMS
    output_dir: Optional[Path] = None
    formats: tuple[str, ...] = _DEFAULT_FORMATS

    def __post_init__(self) -> None:
        if not self.methods:
            raise ValidationError("at least one method is required")
        if len(set(self.methods)) != len(self.methods):
            raise ValidationError("duplicate methods in config")
        unknown = set(self.formats) - _FORMATS
        if unknown:
            raise ValidationError(f"unknown output formats: {sorted(unknown)}")
        if not 1 <= self.series_terms <= 200:
            raise ValidationError(
                f"terms must be in [1, 200], got {self.series_terms}"
            )
        if Method.L1 in self.methods and not self.params.alpha < 1:
            raise ValidationError(
                "the L1 scheme requires alpha strictly inside (0, 1); "
                "the endpoint alpha = 1 is excluded"
            )
        if Method.SERIES in self.methods:
            _check_series_hypotheses(self.params)


def _check_series_hypotheses(params: ModelParams) -> None:
    """The explicit series exists only under its construction hypotheses."""
    d = derive(params)
    if d.c == 0.0:
        want = 1.0 / (2.0 * params.beta)
        if not math.isclose(params.i0, want, rel_tol=1e-12):
            raise ValidationError(
                f"zero-capacity series requires i0 = 1/(2 beta) = {want!r}, "
                f"got {params.i0!r}"
            )
        return
    if d.c < 0:
        raise ValidationError(
            f"series solution undefined for negative carrying capacity c={d.c}"
        )
    if d.b ** (1.0 / params.alpha) >= 1.0:
        raise ValidationError(
            f"carrying-capacity series requires b^(1/alpha) < 1, got b={d.b}"
        )
    want = d.c / 2.0
    if not math.isclose(params.i0, want, rel_tol=1e-12):
        raise ValidationError(
            f"carrying-capacity series requires i0 = c/2 = {want!r}, "
            f"got {params.i0!r}"
        )


@dataclass(frozen=True)
class ComparisonReport:
    """Pairwise L-infinity distances between trajectories on one grid."""

    alpha: float
    grid: TimeGrid
    pairs: tuple[tuple[str, str, float], ...]

    def distance(self, a: str, b: str) -> float:
        for ma, mb, d in self.pairs:
            if {ma, mb} == {a, b}:
                return d
        raise KeyError(f"no pair ({a}, {b}) in report")


def _build_params(cfg: dict) -> ModelParams:
    missing = [k for k in ("beta", "gamma", "mu", "alpha") if cfg.get(k) is None]
    if missing:
        raise ValidationError(f"missing required config keys: {missing}")
    beta, gamma, mu = cfg["beta"], cfg["gamma"], cfg["mu"]
    i0 = cfg.get("i0")
    if i0 is None:
        # preset convention: c/2 in the endemic case, 1/(2 beta) at sigma=1
        sigma = beta / (gamma + mu)
        c = (sigma - 1.0) / sigma
        i0 = 1.0 / (2.0 * beta) if c == 0.0 else c / 2.0
    return ModelParams(
        beta=beta, gamma=gamma, mu=mu, alpha=cfg["alpha"], i0=i0,
        lam=cfg.get("lambda"),
    )


def _parse_methods(raw) -> tuple[Method, ...]:
    if isinstance(raw, str):
        raw = [m for m in raw.replace(",", " ").split() if m]
    try:
        return tuple(Method(str(m).lower()) for m in raw)
    except ValueError as e:
        raise ValidationError(
            f"unknown method in {raw!r}; choose from "
            f"{[m.value for m in Method]}"
        ) from e


def config_from_dict(cfg: dict) -> RunConfig:
    """Validate a flat key-value mapping into a RunConfig."""
    unknown = set(cfg) - _CONFIG_KEYS
    if unknown:
        raise ValidationError(f"unknown config keys: {sorted(unknown)}")
    preset = cfg.get("preset")
    if preset is not None:
        if preset not in PRESETS:
            raise ValidationError(
                f"unknown preset {preset!r}; available: {sorted(PRESETS)}"
            )
        merged = dict(PRESETS[preset])
        merged.update({k: v for k, v in cfg.items() if k != "preset" and v is not None})
        cfg = merged
    params = _build_params(cfg)
    grid = TimeGrid(float(cfg.get("T") or _DEFAULT_T), float(cfg.get("dt") or _DEFAULT_DT))
    raw_methods = cfg.get("methods")
    methods = _parse_methods(_DEFAULT_METHODS if raw_methods is None else raw_methods)
    out = cfg.get("out")
    formats = cfg.get("formats") or _DEFAULT_FORMATS
    if isinstance(formats, str):
        formats = tuple(f for f in formats.replace(",", " ").split() if f)
    return RunConfig(
        params=params,
        grid=grid,
        methods=methods,
        series_terms=int(cfg.get("terms") or _DEFAULT_TERMS),
        output_dir=Path(out) if out else None,
        formats=tuple(formats),
    )


def preset_config(name: str, alpha: float, **overrides) -> RunConfig:
    """Build a RunConfig from a named preset at the given alpha."""
    cfg = {"preset": name, "alpha": alpha}
    cfg.update(overrides)
    return config_from_dict(cfg)


def read_config_dict(path) -> dict:
    """Read the raw key-value mapping of a config file or run manifest."""
    path = Path(path)
    try:
        text = path.read_text()
    except OSError as e:
        raise ValidationError(f"cannot read config {path}: {e}") from e
    try:
        raw = json.loads(text)
    except json.JSONDecodeError as e:
        raise ValidationError(
            f"config parse error in {path} at line {e.lineno}, column {e.colno}: {e.msg}"
        ) from e
    if not isinstance(raw, dict):
        raise ValidationError(f"config root must be an object, got {type(raw).__name__}")
    if "config" in raw and isinstance(raw["config"], dict):
        raw = raw["config"]
    return raw


def load_config(path) -> RunConfig:
    """Load a flat JSON config (or a run manifest) into a RunConfig.

    Key vocabulary: beta, gamma, mu, lambda, alpha, i0, T, dt, methods,
    terms, out, formats, preset.  A manifest written by :func:`emit` is
    accepted too: its embedded ``"config"`` object is used, which is what
    makes re-runs reproducible from the manifest alone.
    """
    return config_from_dict(read_config_dict(path))


def _series_solution(config: RunConfig) -> SeriesSolution:
    p = config.params
    d = derive(p)
    if d.c == 0.0:
        table = a_coeffs(p.alpha, config.series_terms)
        return zero_capacity_series(p.beta, p.alpha, table)
    table = euler_alpha(p.alpha, config.series_terms)
    return carrying_capacity_series(d, p.alpha, table)


def solve_method(config: RunConfig, method: Method) -> Trajectory:
    """Produce the trajectory of a single method under a config."""
    p = config.params
    d = derive(p)
    if method is Method.SERIES:
        return sample_trajectory(_series_solution(config), config.grid)
    if method is Method.CLASSICAL:
        i, _ = classical_sis(p, config.grid.nodes())
        return Trajectory(config.grid, np.asarray(i), Method.CLASSICAL, {"alpha": 1.0})
    f = logistic_rhs(p, d)
    if method is Method.PECE:
        return solve_pece(f, p.i0, config.grid, p.alpha)
    if method is Method.L1:
        return solve_l1(f, p.i0, config.grid, p.alpha)
    raise ValidationError(f"unknown method {method}")


def run_methods(config: RunConfig) -> dict[Method, Trajectory]:
    """All requested trajectories, keyed by method, in config order."""
    return {m: solve_method(config, m) for m in config.methods}


def linf_distance(a: Trajectory, b: Trajectory) -> float:
    """max_n |a.u[n] - b.u[n]| over a shared grid."""
    ga, gb = a.grid, b.grid
    if ga.N != gb.N or ga.dt != gb.dt or ga.T != gb.T:
        raise GridMismatchError(
            f"grids differ: (T={ga.T}, dt={ga.dt}) vs (T={gb.T}, dt={gb.dt})"
        )
    return float(np.max(np.abs(a.u - b.u)))


def compare_methods(trajectories: dict[Method, Trajectory], alpha: float) -> ComparisonReport:
    """Pairwise L-infinity report over the given trajectories."""
    if len(trajectories) < 2:
        raise ValidationError("comparison needs at least two trajectories")
    methods = list(trajectories)
    grid = trajectories[methods[0]].grid
    pairs = []
    for i, ma in enumerate(methods):
        for mb in methods[i + 1 :]:
            pairs.append(
                (ma.value, mb.value, linf_distance(trajectories[ma], trajectories[mb]))
            )
    return ComparisonReport(alpha=alpha, grid=grid, pairs=tuple(pairs))


def crossing_node(traj: Trajectory) -> Optional[float]:
    """First grid node at which I - S changes sign relative to t = 0.

    For a rising infected fraction (I0 < S0) this is the first node with
    I >= S; for a decaying one, the first node with I <= S.  None if the
    curves do not cross on the grid.
    """
    u = traj.u
    d0 = u[0] - 0.5
    if d0 == 0.0:
        return 0.0
    nodes = traj.grid.nodes()
    hits = np.nonzero((u - 0.5) * np.sign(d0) <= 0.0)[0]
    if hits.size == 0:
        return None
    return float(nodes[hits[0]])


def run_table1(
    alphas: Sequence[float] = TABLE1_ALPHAS,
    terms: int = _DEFAULT_TERMS,
    out: Optional[Path] = None,
    formats: Sequence[str] = _DEFAULT_FORMATS,
) -> list[ComparisonReport]:
    """Reproduce the pairwise error table on the c-nonzero preset.

    For each alpha, runs the series solution and both schemes on the
    preset grid and reports the three pairwise distances.  When ``out``
    is given, per-alpha artifacts plus a summary ``table1.csv`` with
    header ``alpha,series_vs_pece,series_vs_l1,pece_vs_l1`` are emitted.
    """
    reports = []
    for alpha in alphas:
        cfg = preset_config(
            "c-nonzero", alpha,
            methods=("series", "pece", "l1"), terms=terms,
            out=None if out is None else Path(out) / f"alpha-{alpha:g}",
            formats=tuple(formats),
        )
        trajs = run_methods(cfg)
        report = compare_methods(trajs, alpha)
        reports.append(report)
        if out is not None:
            emit(trajs, [report], cfg)
    if out is not None:
        _write_table1_csv(Path(out) / "table1.csv", reports)
    return reports


def _write_table1_csv(path: Path, reports: Sequence[ComparisonReport]) -> Path:
    path.parent.mkdir(parents=True, exist_ok=True)
    lines = ["alpha,series_vs_pece,series_vs_l1,pece_vs_l1"]
    for r in reports:
        lines.append(
            ",".join(
                [
                    format(r.alpha, _FMT),
                    format(r.distance("series", "pece"), _FMT),
                    format(r.distance("series", "l1"), _FMT),
                    format(r.distance("pece", "l1"), _FMT),
                ]
            )
        )
    path.write_text("\n".join(lines) + "\n")
    return path


def format_report_table(reports: Sequence[ComparisonReport]) -> str:
    """Human-readable rendering of comparison reports."""
    header = f"{'alpha':>6}  {'series vs pece':>15}  {'series vs l1':>15}  {'pece vs l1':>15}"
    rows = [header, "-" * len(header)]
    for r in reports:
        rows.append(
            f"{r.alpha:>6g}  {r.distance('series', 'pece'):>15.3e}  "
            f"{r.distance('series', 'l1'):>15.3e}  {r.distance('pece', 'l1'):>15.3e}"
        )
    return "\n".join(rows)


@dataclass(frozen=True)
class C0SuiteEntry:
    """One alpha of the zero-capacity suite."""

    alpha: float
    trajectories: dict[Method, Trajectory]
    series_converged: list[bool]
    series_diverged_at: Optional[float]
    schemes_bounded: bool
    crossing: dict[str, Optional[float]]


def run_c0_suite(
    alphas: Sequence[float] = C0_SUITE_ALPHAS,
    out: Optional[Path] = None,
    formats: Sequence[str] = _DEFAULT_FORMATS,
) -> list[C0SuiteEntry]:
    """Run the zero-capacity preset for each alpha.

    The explicit series is only trustworthy inside its convergence radius
    (it blows up in finite time for small alpha, e.g. alpha = 0.5 on
    T = 1); the two schemes remain bounded in [0, 1] throughout.  The
    entry records where the series first lost convergence, boundedness of
    the schemes, and the I/S crossing node per method.
    """
    entries = []
    for alpha in alphas:
        cfg = preset_config(
            "c-zero", alpha,
            methods=("series", "pece", "l1"), out=None if out is None else Path(out) / f"alpha-{alpha:g}",
            formats=tuple(formats),
        )
        trajs = run_methods(cfg)
        flags = trajs[Method.SERIES].meta["converged"]
        nodes = cfg.grid.nodes()
        diverged_at = None
        for idx, ok in enumerate(flags):
            if not ok:
                diverged_at = float(nodes[idx])
                break
        bounded = all(
            bool(np.all((trajs[m].u >= 0.0) & (trajs[m].u <= 1.0)))
            for m in (Method.PECE, Method.L1)
        )
        crossing = {m.value: crossing_node(t) for m, t in trajs.items()}
        entries.append(
            C0SuiteEntry(
                alpha=alpha,
                trajectories=trajs,
                series_converged=flags,
                series_diverged_at=diverged_at,
                schemes_bounded=bounded,
                crossing=crossing,
            )
        )
        if out is not None:
            emit(trajs, [compare_methods(trajs, alpha)], cfg)
    return entries


def population_curve(
    alpha: float,
    lam: float,
    mu: float,
    n0: float,
    grid: TimeGrid,
    policy: EvalPolicy = EvalPolicy(),
) -> np.ndarray:
    """N(t) = N0 E_alpha((lam - mu) t^alpha) sampled on a grid."""
    if not n0 > 0:
        raise ValidationError(f"N0 must be positive, got {n0}")
    out = np.empty(grid.N + 1)
    for idx, t in enumerate(grid.nodes()):
        out[idx] = n0 * mittag_leffler(alpha, (lam - mu) * float(t) ** alpha, policy)
    return out


# ---------------------------------------------------------------------------
# file emission


def _config_dict(config: RunConfig) -> dict:
    p = config.params
    return {
        "beta": p.beta,
        "gamma": p.gamma,
        "mu": p.mu,
        "lambda": p.lam,
        "alpha": p.alpha,
        "i0": p.i0,
        "T": config.grid.T,
        "dt": config.grid.dt,
        "methods": [m.value for m in config.methods],
        "terms": config.series_terms,
        "formats": list(config.formats),
        "out": None if config.output_dir is None else str(config.output_dir),
    }


def _derived_dict(d: DerivedParams) -> dict:
    return {"sigma": d.sigma, "c": d.c, "b": d.b, "M": d.M, "r_alpha": d.r_alpha}


def _trajectory_csv(traj: Trajectory) -> str:
    lines = ["t,I,S"]
    for t, i in zip(traj.grid.nodes(), traj.u):
        lines.append(
            f"{format(float(t), _FMT)},{format(float(i), _FMT)},{format(1.0 - float(i), _FMT)}"
        )
    return "\n".join(lines) + "\n"


def _svg_polyline(xs, ys, color: str, dashed: bool) -> str:
    pts = " ".join(f"{x:.2f},{y:.2f}" for x, y in zip(xs, ys))
    dash = ' stroke-dasharray="6 4"' if dashed else ""
    return (
        f'<polyline fill="none" stroke="{color}" stroke-width="1.5"{dash} '
        f'points="{pts}"/>'
    )


_SVG_COLORS = {
    "series": "#1f77b4",
    "pece": "#d62728",
    "l1": "#2ca02c",
    "classical": "#7f7f7f",
}


def _write_svg(path: Path, trajectories: dict[Method, Trajectory]) -> Path:
    """Static line plot: I (solid) and S (dashed) against t per method."""
    w, h = 800.0, 500.0
    mx, my = 60.0, 40.0
    first = next(iter(trajectories.values()))
    T = first.grid.T
    xs = mx + (w - 2 * mx) * first.grid.nodes() / T

    def ys(values):
        return my + (h - 2 * my) * (1.0 - np.clip(values, 0.0, 1.0))

    parts = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{w:g}" height="{h:g}" '
        f'viewBox="0 0 {w:g} {h:g}">',
        f'<rect width="{w:g}" height="{h:g}" fill="white"/>',
        f'<line x1="{mx}" y1="{h - my}" x2="{w - mx}" y2="{h - my}" stroke="black"/>',
        f'<line x1="{mx}" y1="{my}" x2="{mx}" y2="{h - my}" stroke="black"/>',
        f'<text x="{w / 2:.2f}" y="{h - 8:.2f}" font-size="14" text-anchor="middle">t</text>',
        f'<text x="16" y="{h / 2:.2f}" font-size="14" text-anchor="middle" '
        f'transform="rotate(-90 16 {h / 2:.2f})">population fraction</text>',
        f'<text x="{mx:.2f}" y="{h - my + 16:.2f}" font-size="11" text-anchor="middle">0</text>',
        f'<text x="{w - mx:.2f}" y="{h - my + 16:.2f}" font-size="11" text-anchor="middle">{T:g}</text>',
        f'<text x="{mx - 8:.2f}" y="{h - my:.2f}" font-size="11" text-anchor="end">0</text>',
        f'<text x="{mx - 8:.2f}" y="{my + 4:.2f}" font-size="11" text-anchor="end">1</text>',
    ]
    legend_y = my
    for method, traj in trajectories.items():
        color = _SVG_COLORS[method.value]
        parts.append(_svg_polyline(xs, ys(traj.u), color, dashed=False))
        parts.append(_svg_polyline(xs, ys(1.0 - traj.u), color, dashed=True))
        parts.append(
            f'<text x="{w - mx - 70:.2f}" y="{legend_y:.2f}" font-size="12" '
            f'fill="{color}">{method.value}</text>'
        )
        legend_y += 16.0
    parts.append("</svg>")
    path.write_text("\n".join(parts) + "\n")
    return path


def emit(
    trajectories: dict[Method, Trajectory],
    reports: Sequence[ComparisonReport],
    config: RunConfig,
) -> list[Path]:
    """Write trajectory CSVs, the run manifest, and optional extras.

    Every trajectory goes to ``<method>.csv`` with header ``t,I,S`` at 17
    significant digits (S written as 1 - I); the manifest records the
    exact config, derived parameters, radius information, per-node series
    convergence flags and the emitted file names.  Requires
    ``config.output_dir``.
    """
    if config.output_dir is None:
        raise ValidationError("emit requires an output directory in the config")
    out = Path(config.output_dir)
    try:
        out.mkdir(parents=True, exist_ok=True)
    except OSError as e:
        raise ValidationError(f"cannot create output directory {out}: {e}") from e
    written: list[Path] = []
    manifest_trajs = {}
    for method, traj in trajectories.items():
        entry: dict = {}
        if "csv" in config.formats:
            f = out / f"{method.value}.csv"
            f.write_text(_trajectory_csv(traj))
            written.append(f)
            entry["file"] = f.name
        if method is Method.SERIES:
            entry["converged"] = traj.meta["converged"]
            entry["beyond_theoretical_radius"] = traj.meta["beyond_theoretical_radius"]
            entry["all_converged"] = traj.meta["all_converged"]
        manifest_trajs[method.value] = entry
    if "svg" in config.formats:
        written.append(_write_svg(out / "trajectories.svg", trajectories))
    if reports and "csv" in config.formats:
        f = out / "comparison.csv"
        lines = ["method_a,method_b,linf"]
        for r in reports:
            for ma, mb, dist in r.pairs:
                lines.append(f"{ma},{mb},{format(dist, _FMT)}")
        f.write_text("\n".join(lines) + "\n")
        written.append(f)
    if "json" in config.formats or "csv" in config.formats:
        d = derive(config.params)
        radius = None
        if Method.SERIES in trajectories:
            sol = _series_solution(config)
            radius = {
                "theoretical": sol.radius.theoretical,
                "empirical": sol.radius.empirical,
                "k_used": sol.radius.k_used,
            }
        manifest = {
            "tool": TOOL_NAME,
            "version": TOOL_VERSION,
            "config": _config_dict(config),
            "derived": _derived_dict(d),
            "series_radius": radius,
            "comparisons": [
                {"alpha": r.alpha, "pairs": [list(p) for p in r.pairs]}
                for r in reports
            ],
            "trajectories": manifest_trajs,
        }
        f = out / "manifest.json"
        f.write_text(json.dumps(manifest, indent=2, sort_keys=True) + "\n")
        written.append(f)
    return written
