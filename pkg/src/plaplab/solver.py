"""Shooting solver for the radial equation div(|u'|^(p-2) u') + a u^sigma = 0
on a model space, robust across the degenerate (1 < p < 2) and singular
(p > 2) regimes.

The integration state is (u, w) with the flux variable w = |u'|^(p-2) u',
so the first-order system

    u' = sgn(w) |w|^(1/(p-1)),
    w' = -a u^sigma - (n-1) (s'/s) w,

has no singularity at critical points of u and is startable at r = 0 via a
short power series.  Termination is classified as reached_rmax, hit_zero
(u fell to the configured threshold), blow_up, or step_failure.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, field

import numpy as np
from scipy.integrate import solve_ivp

from ._fd import fd4_first, fd4_second
from .errors import ParameterError, SolutionFormatError
from .geometry import ModelSpace, warp, warp_log_derivative
from .thresholds import EquationParams

__all__ = [
    "ShootingConfig",
    "Termination",
    "RadialSolution",
    "LogSolution",
    "solve_radial",
    "pde_residual",
    "to_log_solution",
    "first_zero",
    "flux_residual",
    "write_solution_csv",
    "read_solution_csv",
]

# fraction of r_max at which the power-series start hands over to the ODE
_SERIES_FRACTION = 1e-6


@dataclass(frozen=True)
class ShootingConfig:
    """Shooting-run configuration: start value, span, and control knobs."""

    u0: float = 1.0
    r_max: float = 10.0
    abs_tol: float = 1e-10
    rel_tol: float = 1e-9
    zero_threshold: float = 1e-8
    blowup_threshold: float = 1e8
    min_step: float = 1e-12
    output_points: int = 2001

    def __post_init__(self):
        for name in (
            "u0",
            "r_max",
            "abs_tol",
            "rel_tol",
            "zero_threshold",
            "blowup_threshold",
            "min_step",
        ):
            if not getattr(self, name) > 0:
                raise ParameterError(f"{name} must be positive, got {getattr(self, name)}")
        if not self.zero_threshold < self.u0:
            raise ParameterError(
                f"zero_threshold ({self.zero_threshold}) must be below u0 ({self.u0})"
            )
        if not self.u0 < self.blowup_threshold:
            raise ParameterError("u0 must be below blowup_threshold")
        if not (isinstance(self.output_points, (int, np.integer)) and self.output_points >= 5):
            raise ParameterError(f"output_points must be an integer >= 5, got {self.output_points!r}")

    def to_dict(self):
        return {
            "u0": self.u0,
            "r_max": self.r_max,
            "abs_tol": self.abs_tol,
            "rel_tol": self.rel_tol,
            "zero_threshold": self.zero_threshold,
            "blowup_threshold": self.blowup_threshold,
            "min_step": self.min_step,
            "output_points": int(self.output_points),
        }


@dataclass(frozen=True)
class Termination:
    """How a shooting run ended.

    kind is one of reached_rmax | hit_zero | blow_up | step_failure and r is
    the radius at which the run stopped.  When a failing step and the
    blow-up threshold compete, both radii are recorded in ``detail``.
    """

    kind: str
    r: float
    detail: dict = field(default_factory=dict)

    KINDS = ("reached_rmax", "hit_zero", "blow_up", "step_failure")

    def __post_init__(self):
        if self.kind not in self.KINDS:
            raise ParameterError(f"unknown termination kind {self.kind!r}")


@dataclass(frozen=True)
class RadialSolution:
    """Uniformly resampled radial profile (r, u, u', flux w) plus verdict."""

    params: EquationParams
    space: ModelSpace
    config: ShootingConfig
    r: np.ndarray
    u: np.ndarray
    du: np.ndarray
    w: np.ndarray
    termination: Termination

    def __post_init__(self):
        m = len(self.r)
        if not (len(self.u) == len(self.du) == len(self.w) == m):
            raise ParameterError("grid arrays must have equal length")
        if m < 2 or self.r[0] != 0.0 or np.any(np.diff(self.r) <= 0):
            raise ParameterError("r must increase strictly from 0")

    @property
    def r_end(self) -> float:
        return float(self.r[-1])


@dataclass(frozen=True)
class LogSolution:
    """Log-transformed profile: v = (p-1) log u, f = |v'|^p, and the
    source weight h = (p-1)^(p-1) exp((sigma/(p-1) - 1) v)."""

    params: EquationParams
    space: ModelSpace
    r: np.ndarray
    v: np.ndarray
    dv: np.ndarray
    f: np.ndarray
    h: np.ndarray
    transformed_residual: float


def _series_u(params, config, r):
    """Power-series start: u0 plus the leading flux-driven correction."""
    p, a, sig, n = params.p, params.a, params.sigma, params.n
    u0 = config.u0
    c = (abs(a) * u0**sig / n) ** (1 / (p - 1)) * (p - 1) / p
    return u0 - math.copysign(c, a) * r ** (p / (p - 1))


def _series_w(params, config, r):
    return -params.a * config.u0**params.sigma * r / params.n


def solve_radial(
    params: EquationParams, space: ModelSpace, config: ShootingConfig
) -> RadialSolution:
    """Integrate the radial profile from the regular center outward.

    Starts from a power series at r = 1e-6 * r_max, advances with an
    adaptive embedded Runge-Kutta pair, locates terminal events (zero hit,
    blow-up) in r to root-finding precision, and returns the profile
    uniformly resampled on [0, r_end] from the integrator's C^1 continuous
    extension (downstream off-grid interpolation is monotone cubic, in the
    checkers).
    """
    if params.n != space.n:
        raise ParameterError(
            f"dimension mismatch: params.n = {params.n}, space.n = {space.n}"
        )
    p, a, sig, n = params.p, params.a, params.sigma, params.n
    inv_pm1 = 1.0 / (p - 1.0)
    r_start = _SERIES_FRACTION * config.r_max
    y0 = [_series_u(params, config, r_start), _series_w(params, config, r_start)]
    u_floor = 0.5 * config.zero_threshold  # Lipschitz continuation below the zero event

    if space.K == 0:

        def log_warp(r):
            return 1.0 / r

    else:
        rk = math.sqrt(space.K)

        def log_warp(r):
            return rk / math.tanh(rk * r)

    def rhs(r, y):
        u, w = y
        du = math.copysign(abs(w) ** inv_pm1, w)
        u_eff = u if u > u_floor else u_floor
        dw = -a * u_eff**sig - (n - 1) * log_warp(r) * w
        return (du, dw)

    def ev_zero(r, y):
        return y[0] - config.zero_threshold

    ev_zero.terminal = True
    ev_zero.direction = -1

    def ev_blow(r, y):
        return config.blowup_threshold - max(abs(y[0]), abs(y[1]))

    ev_blow.terminal = True
    ev_blow.direction = -1

    sol = solve_ivp(
        rhs,
        (r_start, config.r_max),
        y0,
        method="RK45",
        rtol=config.rel_tol,
        atol=config.abs_tol,
        events=(ev_zero, ev_blow),
        dense_output=True,
    )

    if sol.status == 1:
        if len(sol.t_events[0]):
            termination = Termination("hit_zero", float(sol.t_events[0][0]))
        else:
            termination = Termination("blow_up", float(sol.t_events[1][0]))
    elif sol.status == 0:
        termination = Termination("reached_rmax", config.r_max)
    else:
        r_fail = float(sol.t[-1])
        u_last, w_last = float(sol.y[0, -1]), float(sol.y[1, -1])
        detail = {"failure_r": r_fail, "message": sol.message}
        if max(abs(u_last), abs(w_last)) >= 0.99 * config.blowup_threshold:
            detail["blowup_r"] = r_fail
            termination = Termination("blow_up", r_fail, detail)
        else:
            termination = Termination("step_failure", r_fail, detail)

    r_end = termination.r
    if len(sol.t) < 2 or r_end <= r_start:
        raise ParameterError(
            f"integration span collapsed (r_end = {r_end}); check the configuration"
        )

    # uniform resample straight from the integrator's continuous extension:
    # it is C^1 across steps, so downstream finite differences on the uniform
    # grid see only the (smooth, tolerance-sized) integration error
    rs = np.linspace(0.0, r_end, config.output_points)
    u = np.empty_like(rs)
    w = np.empty_like(rs)
    head = rs < r_start
    u[head] = _series_u(params, config, rs[head])
    w[head] = _series_w(params, config, rs[head])
    u[~head], w[~head] = sol.sol(rs[~head])
    du = np.sign(w) * np.abs(w) ** inv_pm1

    return RadialSolution(
        params=params,
        space=space,
        config=config,
        r=rs,
        u=u,
        du=du,
        w=w,
        termination=termination,
    )


def _residual_mask(solution, du_fd, rel_change, max_step_change):
    """Retained samples for residual checks: inside the central exclusion
    band, with complete FD stencils, nondegenerate gradient for p < 2, and
    resolvable on the grid (relative change per grid step capped, which
    drops the unresolvable tail next to a zero hit or a blow-up)."""
    r = solution.r
    h = r[1] - r[0]
    band = min(0.02 * solution.config.r_max, 0.25 * solution.r_end)
    mask = (r > band) & np.isfinite(du_fd)
    mask &= rel_change * h <= max_step_change
    if solution.params.p < 2:
        mask &= du_fd != 0
    return mask


def pde_residual(solution: RadialSolution) -> float:
    """Max relative residual of the original equation on the resampled grid.

    u' and u'' are rebuilt from (r, u) alone by 4th-order central
    differences, so this is an independent verification of the profile, not
    of the solver's own flux variable.  The residual is normalized by the
    largest source magnitude max |a| u^sigma over retained samples.
    """
    if len(solution.r) < 5:
        raise ParameterError("pde_residual needs at least 5 samples")
    p, a, sig = solution.params.p, solution.params.a, solution.params.sigma
    n = solution.params.n
    r, u = solution.r, solution.u
    h = r[1] - r[0]
    du = fd4_first(u, h)
    d2u = fd4_second(u, h)
    mask = _residual_mask(solution, du, np.abs(solution.du) / u, 0.02)
    if not np.any(mask):
        raise ParameterError("no samples retained for the residual check")
    rm, um, dum, d2um = r[mask], u[mask], du[mask], d2u[mask]
    lam = warp_log_derivative(solution.space, rm)
    with np.errstate(divide="ignore", invalid="ignore"):
        plap = np.abs(dum) ** (p - 2) * ((p - 1) * d2um + (n - 1) * lam * dum)
    plap = np.where(dum == 0, 0.0 if p != 2 else d2um, plap)
    source = a * um**sig
    scale = np.max(np.abs(source))
    return float(np.max(np.abs(plap + source)) / scale)


def to_log_solution(solution: RadialSolution) -> LogSolution:
    """Pointwise log-transform of a positive profile.

    Also re-verifies the transformed equation

        div(|v'|^(p-2) v') + |v'|^p + a (p-1)^(p-1) e^((sigma/(p-1)-1) v) = 0

    by finite differences on v alone; the normalized residual is recorded on
    the returned object.
    """
    if np.any(solution.u <= 0):
        raise ParameterError("log transform requires u > 0 on all samples")
    p, a, sig, n = (
        solution.params.p,
        solution.params.a,
        solution.params.sigma,
        solution.params.n,
    )
    v = (p - 1) * np.log(solution.u)
    dv = (p - 1) * solution.du / solution.u
    f = np.abs(dv) ** p
    hsrc = (p - 1) ** (p - 1) * np.exp((sig / (p - 1) - 1) * v)

    r = solution.r
    hstep = r[1] - r[0]
    dv_fd = fd4_first(v, hstep)
    d2v_fd = fd4_second(v, hstep)
    # the log profile is singular at a zero hit, so its grid change per step
    # must stay well below the u-profile cap for the 4th-order stencil
    mask = _residual_mask(solution, dv_fd, np.abs(dv), 0.01)
    resid = math.nan
    if np.any(mask):
        rm, dvm, d2vm = r[mask], dv_fd[mask], d2v_fd[mask]
        lam = warp_log_derivative(solution.space, rm)
        with np.errstate(divide="ignore", invalid="ignore"):
            plap_v = np.abs(dvm) ** (p - 2) * ((p - 1) * d2vm + (n - 1) * lam * dvm)
        plap_v = np.where(dvm == 0, 0.0 if p != 2 else d2vm, plap_v)
        full = plap_v + np.abs(dvm) ** p + a * hsrc[mask]
        scale = np.max(np.abs(a * hsrc[mask]))
        resid = float(np.max(np.abs(full)) / scale)

    return LogSolution(
        params=solution.params,
        space=solution.space,
        r=r,
        v=v,
        dv=dv,
        f=f,
        h=hsrc,
        transformed_residual=resid,
    )


def first_zero(solution: RadialSolution) -> float | None:
    """Event-refined zero-hit radius, or None if the run did not hit zero."""
    if solution.termination.kind == "hit_zero":
        return solution.termination.r
    return None


def _cumulative_weighted_integral(r, g, n):
    """Cumulative integral of t^(n-1) g(t) on the grid r (r[0] = 0).

    Product quadrature: g is fitted by the parabola through each sample
    triple and integrated against the exact moments of t^(n-1), so the
    weight's vanishing at t = 0 costs no accuracy (plain Simpson is exact
    for parabolas but not for t^(n-1) * parabola, and its startup error is
    amplified by s^(1-n) in the flux identity).
    """
    m = len(r)
    k = np.arange(m - 1)
    left = np.clip(k - 1, 0, m - 3)  # triple (left, left+1, left+2) per interval
    t0, t1, t2 = r[left], r[left + 1], r[left + 2]
    g0, g1, g2 = g[left], g[left + 1], g[left + 2]
    d01 = (g1 - g0) / (t1 - t0)
    d12 = (g2 - g1) / (t2 - t1)
    c2 = (d12 - d01) / (t2 - t0)  # second divided difference
    # parabola around tau = t - r[k]:  A + B tau + C tau^2
    dk = r[k] - t0
    A = g0 + d01 * dk + c2 * dk * (r[k] - t1)
    B = d01 + c2 * (2 * r[k] - t0 - t1)
    C = c2
    h = r[k + 1] - r[k]
    increments = np.zeros(m - 1)
    for j in range(n):  # binomial expansion of (r_k + tau)^(n-1)
        binom = math.comb(n - 1, j)
        base = binom * r[k] ** (n - 1 - j)
        increments += base * (
            A * h ** (j + 1) / (j + 1)
            + B * h ** (j + 2) / (j + 2)
            + C * h ** (j + 3) / (j + 3)
        )
    out = np.zeros(m)
    np.cumsum(increments, out=out[1:])
    return out


def flux_residual(solution: RadialSolution) -> float:
    """Deviation of w from -s^(1-n) * integral_0^r a u^sigma s^(n-1) dt.

    The integral is evaluated by a product quadrature (exact moments of
    t^(n-1) against a piecewise-parabolic fit of the smooth factor), and
    the maximum absolute deviation is normalized by max(1, max |w|).  The
    final sample is excluded: it sits on the termination event, where the
    integrand may end in a cusp (u^sigma with sigma < 1 at a zero hit).
    """
    params, space = solution.params, solution.space
    r, u, w = solution.r, solution.u, solution.w
    n = space.n
    warp_ratio = np.ones_like(r)  # (s(t)/t)^(n-1), smooth, -> 1 at 0
    warp_ratio[1:] = (warp(space, r[1:]) / r[1:]) ** (n - 1)
    g = params.a * u**params.sigma * warp_ratio
    integral = _cumulative_weighted_integral(r, g, n)
    s_pow = warp_ratio[1:] * r[1:] ** (n - 1)
    dev = w[1:-1] + integral[1:-1] / s_pow[:-1]
    scale = max(1.0, float(np.max(np.abs(w))))
    return float(np.max(np.abs(dev)) / scale)


# ---------------------------------------------------------------------------
# CSV serialization: '#'-prefixed key=value metadata, then one row per sample

_FLOAT_FMT = "{:.17g}"


def write_solution_csv(solution: RadialSolution, path_or_file) -> None:
    """Write a solution as CSV with metadata comment lines.

    Decimal output carries 17 significant digits, enough to round-trip
    float64 exactly.
    """
    own = isinstance(path_or_file, (str, bytes)) or hasattr(path_or_file, "__fspath__")
    fh = open(path_or_file, "w") if own else path_or_file
    try:
        meta = {}
        meta.update(solution.params.to_dict())
        meta.update(solution.space.to_dict())
        meta.update(solution.config.to_dict())
        meta["termination"] = solution.termination.kind
        meta["termination_r"] = solution.termination.r
        meta["termination_detail"] = json.dumps(solution.termination.detail)
        for key, value in meta.items():
            if isinstance(value, float):
                value = _FLOAT_FMT.format(value)
            fh.write(f"# {key}={value}\n")
        fh.write("r,u,du,w\n")
        for row in zip(solution.r, solution.u, solution.du, solution.w):
            fh.write(",".join(_FLOAT_FMT.format(x) for x in row) + "\n")
    finally:
        if own:
            fh.close()


def read_solution_csv(path_or_file) -> RadialSolution:
    """Parse a solution CSV written by write_solution_csv."""
    own = isinstance(path_or_file, (str, bytes)) or hasattr(path_or_file, "__fspath__")
    fh = open(path_or_file, "r") if own else path_or_file
    try:
        meta = {}
        header = None
        rows = []
        for line in fh:
            line = line.strip()
            if not line:
                continue
            if line.startswith("#"):
                body = line[1:].strip()
                if "=" not in body:
                    raise SolutionFormatError(f"malformed metadata line: {line!r}")
                key, _, value = body.partition("=")
                meta[key.strip()] = value.strip()
            elif header is None:
                header = line
                if header != "r,u,du,w":
                    raise SolutionFormatError(f"unexpected column header: {header!r}")
            else:
                parts = line.split(",")
                if len(parts) != 4:
                    raise SolutionFormatError(f"malformed data row: {line!r}")
                try:
                    rows.append([float(x) for x in parts])
                except ValueError as exc:
                    raise SolutionFormatError(f"non-numeric data row: {line!r}") from exc
        if header is None or not rows:
            raise SolutionFormatError("no data rows found")
        try:
            params = EquationParams(
                n=int(meta["n"]),
                p=float(meta["p"]),
                a=float(meta["a"]),
                sigma=float(meta["sigma"]),
            )
            space = ModelSpace(n=int(meta["n"]), K=float(meta["K"]))
            config = ShootingConfig(
                u0=float(meta["u0"]),
                r_max=float(meta["r_max"]),
                abs_tol=float(meta["abs_tol"]),
                rel_tol=float(meta["rel_tol"]),
                zero_threshold=float(meta["zero_threshold"]),
                blowup_threshold=float(meta["blowup_threshold"]),
                min_step=float(meta["min_step"]),
                output_points=int(meta["output_points"]),
            )
            termination = Termination(
                kind=meta["termination"],
                r=float(meta["termination_r"]),
                detail=json.loads(meta.get("termination_detail", "{}")),
            )
        except (KeyError, ValueError) as exc:
            raise SolutionFormatError(f"bad or missing metadata: {exc}") from exc
        data = np.asarray(rows, dtype=float)
        try:
            return RadialSolution(
                params=params,
                space=space,
                config=config,
                r=data[:, 0],
                u=data[:, 1],
                du=data[:, 2],
                w=data[:, 3],
                termination=termination,
            )
        except ParameterError as exc:
            raise SolutionFormatError(str(exc)) from exc
    finally:
        if own:
            fh.close()
