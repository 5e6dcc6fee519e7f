"""Scenario execution: rate resolution, trajectory and sweep tables, CSV.

Output is plain CSV with a commented header carrying every physical input
and derived rate in SI-annotated keys.  Formatting goes through repr so a
fixed config produces byte-identical files.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
from scipy.optimize import brentq

from .bec import CondensateParams, beta_of
from .config import ScenarioConfig
from .constants import HBAR, K_B
from .damping import (
    DampingResult,
    QUANTUM_RATIO,
    QuadratureConfig,
    gamma_beliaev_asymptotic,
    gamma_integral,
    gamma_landau_high_temperature,
    gamma_landau_low_temperature,
    select_regime,
    split_rates,
)
from .decoherence import metric_trajectory, purity_minimum_time
from .gaussian import state_from_params
from .three_body import decay_rate, half_life


def resolve_rate(
    config: ScenarioConfig,
    params: CondensateParams,
    omega_q: float | None = None,
) -> DampingResult:
    """Damping rate for the scenario per its rate_source."""
    omega_q = config.mode_frequency_rad_per_s if omega_q is None else omega_q
    quad_cfg = QuadratureConfig(
        rel_tol=config.quadrature_rel_tol,
        max_subdivisions=config.quadrature_max_subdivisions,
    )
    source = config.rate_source
    if source == "auto":
        return select_regime(omega_q, params, quad_cfg)

    if source == "explicit":
        gamma = config.gamma_explicit_per_s
        gamma_b = gamma_l = 0.0
        regime = "explicit"
    elif source == "integral":
        rates = gamma_integral(omega_q, params, quad_cfg)
        gamma_b, gamma_l = rates.gamma_beliaev, rates.gamma_landau
        gamma = gamma_b + gamma_l
        regime = "integral"
    else:  # asymptotic: nearest closed form even outside its region
        kt = K_B * params.temperature
        mu = params.chemical_potential
        if kt < QUANTUM_RATIO * HBAR * omega_q:
            gamma_b, gamma_l = gamma_beliaev_asymptotic(omega_q, params), 0.0
            regime = "quantum"
        elif kt > mu:
            gamma_b, gamma_l = 0.0, gamma_landau_high_temperature(omega_q, params)
            regime = "thermal_high"
        else:
            gamma_b, gamma_l = 0.0, gamma_landau_low_temperature(omega_q, params)
            regime = "thermal_low"
        gamma = gamma_b + gamma_l

    gamma_1, gamma_2, gamma_total, n_th = split_rates(
        gamma, omega_q, params.temperature
    )
    return DampingResult(
        gamma=gamma,
        gamma_beliaev=gamma_b,
        gamma_landau=gamma_l,
        gamma_1=gamma_1,
        gamma_2=gamma_2,
        gamma_total=gamma_total,
        beta_q=beta_of(omega_q, params.temperature),
        n_thermal=n_th,
        regime=regime,
    )


@dataclass(frozen=True)
class TrajectoryRun:
    header: dict
    columns: tuple[str, ...]
    rows: np.ndarray


def run_trajectory(config: ScenarioConfig) -> TrajectoryRun:
    """Metric trajectory table for one scenario."""
    params = config.condensate()
    omega_q = config.mode_frequency_rad_per_s
    rate = resolve_rate(config, params)
    mu_inf = 1.0 / (1.0 + 2.0 * rate.n_thermal)
    mu0 = config.initial_purity
    r0 = config.initial_squeezing
    state0 = state_from_params(mu0, r0, 0.0, d=np.array(config.initial_displacement))
    n0 = state0.occupation

    t_grid = np.linspace(0.0, config.time_max_s, config.time_points)
    metrics = metric_trajectory(mu0, r0, mu_inf, rate.gamma, n0, rate.n_thermal, t_grid)

    gamma3 = decay_rate(params.density, config.three_body_l3_m6_per_s)
    t_half = half_life(params.density, config.three_body_l3_m6_per_s)

    header = {
        "kind": "trajectory",
        "species": params.species or "custom",
        "mass_kg": params.mass,
        "scattering_length_m": params.scattering_length,
        "speed_of_sound_m_per_s": params.speed_of_sound,
        "density_per_m3": params.density,
        "temperature_K": params.temperature,
        "chemical_potential_J": params.chemical_potential,
        "mode_frequency_rad_per_s": omega_q,
        "initial_squeezing": r0,
        "initial_purity": mu0,
        "initial_displacement": list(config.initial_displacement),
        "initial_occupation": n0,
        "rate_source": config.rate_source,
        "regime": rate.regime,
        "gamma_per_s": rate.gamma,
        "gamma_beliaev_per_s": rate.gamma_beliaev,
        "gamma_landau_per_s": rate.gamma_landau,
        "gamma_1_per_s": rate.gamma_1,
        "gamma_2_per_s": rate.gamma_2,
        "gamma_total_per_s": rate.gamma_total,
        "beta_q": rate.beta_q,
        "n_thermal": rate.n_thermal,
        "mu_inf": mu_inf,
        "t_min_s": metrics.t_min,
        "t_tau0_s": metrics.t_tau0,
        "three_body_l3_m6_per_s": config.three_body_l3_m6_per_s,
        "three_body_gamma0_per_s": gamma3,
        "three_body_half_life_s": t_half,
    }
    rows = np.column_stack([metrics.t, metrics.mu, metrics.tau, metrics.r, metrics.occupation])
    return TrajectoryRun(
        header=header, columns=("t_s", "mu", "tau", "r", "occupation"), rows=rows
    )


@dataclass(frozen=True)
class SweepRun:
    header: dict
    columns: tuple[str, ...]
    rows: list[tuple]


def run_sweep(config: ScenarioConfig) -> SweepRun:
    """Decoherence time vs mode frequency for each configured speed of sound.

    Rows where the purity-minimum time exceeds the condensate half-life are
    flagged truncated (three-body loss dominates there); the crossing
    frequency is root-found per speed and reported in the header.
    """
    if not config.has_sweep():
        raise ValueError("config carries no sweep range")
    speeds = config.sweep_speeds_of_sound_m_per_s
    if not speeds:
        speeds = (config.condensate().speed_of_sound,)
    speeds = tuple(sorted(speeds))
    omegas = np.geomspace(
        config.sweep_omega_min_rad_per_s,
        config.sweep_omega_max_rad_per_s,
        config.sweep_points,
    )
    mu0 = config.initial_purity
    r0 = config.initial_squeezing

    rows: list[tuple] = []
    truncation: dict[float, float | None] = {}
    for c_s in speeds:
        params = config.condensate(speed_of_sound=c_s)
        t_half = half_life(params.density, config.three_body_l3_m6_per_s)

        def t_min_at(omega: float) -> float | None:
            rate = resolve_rate(config, params, omega)
            mu_inf = 1.0 / (1.0 + 2.0 * rate.n_thermal)
            return purity_minimum_time(mu0, r0, mu_inf, rate.gamma)

        t_mins = []
        for omega in omegas:
            rate = resolve_rate(config, params, omega)
            mu_inf = 1.0 / (1.0 + 2.0 * rate.n_thermal)
            t_min = purity_minimum_time(mu0, r0, mu_inf, rate.gamma)
            t_mins.append(t_min)
            truncated = int(t_min is not None and t_min > t_half)
            rows.append((c_s, float(omega), rate.gamma, t_min, t_half, truncated))

        truncation[c_s] = None
        for i in range(len(omegas) - 1):
            a, b = t_mins[i], t_mins[i + 1]
            if a is None or b is None:
                continue
            fa, fb = a - t_half, b - t_half
            if fa == 0.0:
                truncation[c_s] = float(omegas[i])
                break
            if fa * fb < 0.0:
                root = brentq(
                    lambda w: t_min_at(w) - t_half, omegas[i], omegas[i + 1],
                    rtol=1e-12,
                )
                truncation[c_s] = float(root)
                break

    header = {
        "kind": "sweep",
        "species": config.species,
        "temperature_K": config.temperature_K,
        "initial_squeezing": r0,
        "initial_purity": mu0,
        "rate_source": config.rate_source,
        "three_body_l3_m6_per_s": config.three_body_l3_m6_per_s,
        "sweep_omega_min_rad_per_s": config.sweep_omega_min_rad_per_s,
        "sweep_omega_max_rad_per_s": config.sweep_omega_max_rad_per_s,
        "sweep_points": config.sweep_points,
    }
    for c_s in speeds:
        header[f"truncation_omega_rad_per_s[c_s={c_s!r}]"] = truncation[c_s]
    return SweepRun(
        header=header,
        columns=(
            "speed_of_sound_m_per_s",
            "omega_rad_per_s",
            "gamma_per_s",
            "t_min_s",
            "t_half_s",
            "truncated",
        ),
        rows=rows,
    )


def _fmt(value) -> str:
    if value is None:
        return "none"
    if isinstance(value, (np.floating, np.integer)):
        value = value.item()
    if isinstance(value, float):
        if math.isinf(value):
            return "inf"
        return repr(value)
    if isinstance(value, (list, tuple)):
        return "[" + " ".join(_fmt(v) for v in value) + "]"
    return str(value)


def to_csv(run: TrajectoryRun | SweepRun) -> str:
    """Render a run as CSV text with a commented metadata header."""
    lines = [f"# {key} = {_fmt(value)}" for key, value in run.header.items()]
    lines.append(",".join(run.columns))
    for row in np.asarray(run.rows, dtype=object):
        lines.append(",".join(_fmt(v) for v in row))
    return "\n".join(lines) + "\n"


def write_csv(run: TrajectoryRun | SweepRun, path) -> None:
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(to_csv(run))
