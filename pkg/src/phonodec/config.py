"""Scenario configuration: schema, validation, and the shipped presets.

Configs are flat YAML mappings with unit-annotated keys (always SI).
Unknown keys are rejected so typos cannot silently change a run.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from pathlib import Path

import yaml

from .bec import CondensateParams
from .constants import RB87, SPECIES_PRESETS

RATE_SOURCES = ("auto", "asymptotic", "integral", "explicit")


class ConfigError(ValueError):
    """Invalid scenario configuration; message names the offending key."""


def _number(key: str, value, *, positive=False, nonnegative=False) -> float:
    if isinstance(value, str):
        # YAML 1.1 resolves exponents without a sign ("1.0e4") as strings
        try:
            value = float(value)
        except ValueError:
            pass
    if isinstance(value, bool) or not isinstance(value, (int, float)):
        raise ConfigError(f"{key}: expected a number, got {value!r}")
    value = float(value)
    if not math.isfinite(value):
        raise ConfigError(f"{key}: must be finite")
    if positive and value <= 0:
        raise ConfigError(f"{key}: must be > 0")
    if nonnegative and value < 0:
        raise ConfigError(f"{key}: must be >= 0")
    return value


@dataclass(frozen=True)
class ScenarioConfig:
    """Validated scenario: condensate, probe mode, initial state, run controls."""

    species: str
    mass_kg: float | None
    scattering_length_m: float | None
    speed_of_sound_m_per_s: float | None
    density_per_m3: float | None
    temperature_K: float
    mode_frequency_rad_per_s: float
    initial_squeezing: float
    initial_purity: float
    initial_displacement: tuple[float, float]
    time_max_s: float
    time_points: int
    rate_source: str
    gamma_explicit_per_s: float | None
    quadrature_rel_tol: float
    quadrature_max_subdivisions: int
    three_body_l3_m6_per_s: float
    sweep_omega_min_rad_per_s: float | None = None
    sweep_omega_max_rad_per_s: float | None = None
    sweep_points: int | None = None
    sweep_speeds_of_sound_m_per_s: tuple[float, ...] = field(default=())

    def condensate(self, speed_of_sound: float | None = None) -> CondensateParams:
        """Condensate parameters, optionally overriding the speed of sound."""
        c_s = speed_of_sound
        n = None
        if c_s is None:
            c_s = self.speed_of_sound_m_per_s
            n = self.density_per_m3
        if self.species == "custom":
            return CondensateParams(
                mass=self.mass_kg,
                scattering_length=self.scattering_length_m,
                temperature=self.temperature_K,
                speed_of_sound=c_s or 0.0,
                density=n or 0.0,
            )
        return CondensateParams.from_species(
            self.species,
            temperature=self.temperature_K,
            speed_of_sound=c_s or 0.0,
            density=n or 0.0,
            scattering_length=self.scattering_length_m,
        )

    def has_sweep(self) -> bool:
        return self.sweep_omega_min_rad_per_s is not None


_SCALAR_KEYS = {
    "species": str,
    "mass_kg": float,
    "scattering_length_m": float,
    "speed_of_sound_m_per_s": float,
    "density_per_m3": float,
    "temperature_K": float,
    "mode_frequency_rad_per_s": float,
    "initial_squeezing": float,
    "initial_purity": float,
    "initial_thermal_occupation": float,
    "initial_displacement": list,
    "time_max_s": float,
    "time_points": int,
    "rate_source": str,
    "gamma_explicit_per_s": float,
    "quadrature_rel_tol": float,
    "quadrature_max_subdivisions": int,
    "three_body_l3_m6_per_s": float,
    "sweep_omega_min_rad_per_s": float,
    "sweep_omega_max_rad_per_s": float,
    "sweep_points": int,
    "sweep_speeds_of_sound_m_per_s": list,
}


def validate_config(raw: dict) -> ScenarioConfig:
    """Build a ScenarioConfig from a raw mapping, rejecting anything off-schema."""
    if not isinstance(raw, dict):
        raise ConfigError("config must be a mapping of keys to values")
    unknown = sorted(set(raw) - set(_SCALAR_KEYS))
    if unknown:
        raise ConfigError(f"unknown config keys: {', '.join(unknown)}")

    species = raw.get("species", "rb87")
    if not isinstance(species, str):
        raise ConfigError("species: expected a string")
    species = species.lower()
    if species != "custom" and species not in SPECIES_PRESETS:
        raise ConfigError(
            f"species: {species!r} is not a preset (use "
            f"{', '.join(sorted(SPECIES_PRESETS))} or custom)"
        )

    mass = raw.get("mass_kg")
    if mass is not None:
        mass = _number("mass_kg", mass, positive=True)
    a = raw.get("scattering_length_m")
    if a is not None:
        a = _number("scattering_length_m", a, positive=True)
    if species == "custom":
        if mass is None or a is None:
            raise ConfigError(
                "species custom requires mass_kg and scattering_length_m"
            )

    c_s = raw.get("speed_of_sound_m_per_s")
    n = raw.get("density_per_m3")
    if (c_s is None) == (n is None):
        raise ConfigError(
            "exactly one of speed_of_sound_m_per_s / density_per_m3 is required"
        )
    if c_s is not None:
        c_s = _number("speed_of_sound_m_per_s", c_s, positive=True)
    if n is not None:
        n = _number("density_per_m3", n, positive=True)

    if "temperature_K" not in raw:
        raise ConfigError("temperature_K is required")
    temperature = _number("temperature_K", raw["temperature_K"], nonnegative=True)

    if "mode_frequency_rad_per_s" not in raw:
        raise ConfigError("mode_frequency_rad_per_s is required")
    omega_q = _number(
        "mode_frequency_rad_per_s", raw["mode_frequency_rad_per_s"], positive=True
    )

    r0 = _number("initial_squeezing", raw.get("initial_squeezing", 0.0), nonnegative=True)
    if "initial_purity" in raw and "initial_thermal_occupation" in raw:
        raise ConfigError(
            "give initial_purity or initial_thermal_occupation, not both"
        )
    if "initial_thermal_occupation" in raw:
        n0_th = _number(
            "initial_thermal_occupation",
            raw["initial_thermal_occupation"],
            nonnegative=True,
        )
        mu0 = 1.0 / (1.0 + 2.0 * n0_th)
    else:
        mu0 = _number("initial_purity", raw.get("initial_purity", 1.0), positive=True)
        if mu0 > 1.0:
            raise ConfigError("initial_purity: must be <= 1")

    disp = raw.get("initial_displacement", [0.0, 0.0])
    if not (isinstance(disp, (list, tuple)) and len(disp) == 2):
        raise ConfigError("initial_displacement: expected a pair [x, p]")
    disp = (
        _number("initial_displacement[0]", disp[0]),
        _number("initial_displacement[1]", disp[1]),
    )

    t_max = _number("time_max_s", raw.get("time_max_s", 6.0), positive=True)
    t_points = raw.get("time_points", 500)
    if not isinstance(t_points, int) or isinstance(t_points, bool) or t_points < 2:
        raise ConfigError("time_points: expected an integer >= 2")

    rate_source = raw.get("rate_source", "auto")
    if rate_source not in RATE_SOURCES:
        raise ConfigError(
            f"rate_source: {rate_source!r} not in {'/'.join(RATE_SOURCES)}"
        )
    gamma_explicit = raw.get("gamma_explicit_per_s")
    if rate_source == "explicit":
        if gamma_explicit is None:
            raise ConfigError("rate_source explicit requires gamma_explicit_per_s")
        gamma_explicit = _number(
            "gamma_explicit_per_s", gamma_explicit, nonnegative=True
        )
    elif gamma_explicit is not None:
        raise ConfigError("gamma_explicit_per_s is only valid with rate_source explicit")

    quad_tol = _number(
        "quadrature_rel_tol", raw.get("quadrature_rel_tol", 1e-6), positive=True
    )
    quad_max = raw.get("quadrature_max_subdivisions", 200)
    if not isinstance(quad_max, int) or quad_max < 10:
        raise ConfigError("quadrature_max_subdivisions: expected an integer >= 10")

    l3_default = RB87.three_body_l3
    preset = SPECIES_PRESETS.get(species)
    if preset is not None and preset.three_body_l3 is not None:
        l3_default = preset.three_body_l3
    l3 = _number(
        "three_body_l3_m6_per_s",
        raw.get("three_body_l3_m6_per_s", l3_default),
        positive=True,
    )

    sweep_min = raw.get("sweep_omega_min_rad_per_s")
    sweep_max = raw.get("sweep_omega_max_rad_per_s")
    sweep_points = raw.get("sweep_points")
    sweep_speeds = raw.get("sweep_speeds_of_sound_m_per_s", [])
    if (sweep_min is None) != (sweep_max is None):
        raise ConfigError("sweep frequency range requires both min and max")
    if sweep_min is not None:
        sweep_min = _number("sweep_omega_min_rad_per_s", sweep_min, positive=True)
        sweep_max = _number("sweep_omega_max_rad_per_s", sweep_max, positive=True)
        if sweep_max <= sweep_min:
            raise ConfigError("sweep_omega_max_rad_per_s must exceed the minimum")
        if sweep_points is None:
            sweep_points = 50
        if not isinstance(sweep_points, int) or sweep_points < 2:
            raise ConfigError("sweep_points: expected an integer >= 2")
    if not isinstance(sweep_speeds, (list, tuple)):
        raise ConfigError("sweep_speeds_of_sound_m_per_s: expected a list")
    sweep_speeds = tuple(
        _number("sweep_speeds_of_sound_m_per_s[]", v, positive=True)
        for v in sweep_speeds
    )

    return ScenarioConfig(
        species=species,
        mass_kg=mass,
        scattering_length_m=a,
        speed_of_sound_m_per_s=c_s,
        density_per_m3=n,
        temperature_K=temperature,
        mode_frequency_rad_per_s=omega_q,
        initial_squeezing=r0,
        initial_purity=mu0,
        initial_displacement=disp,
        time_max_s=t_max,
        time_points=t_points,
        rate_source=rate_source,
        gamma_explicit_per_s=gamma_explicit,
        quadrature_rel_tol=quad_tol,
        quadrature_max_subdivisions=quad_max,
        three_body_l3_m6_per_s=l3,
        sweep_omega_min_rad_per_s=sweep_min,
        sweep_omega_max_rad_per_s=sweep_max,
        sweep_points=sweep_points,
        sweep_speeds_of_sound_m_per_s=sweep_speeds,
    )


def load_config(path: str | Path) -> ScenarioConfig:
    with open(path, "r", encoding="utf-8") as fh:
        raw = yaml.safe_load(fh)
    if raw is None:
        raw = {}
    return validate_config(raw)


# Worked-example presets: an 87Rb condensate at 0.5 nK with c_s = 3.4 mm/s.
# fig1 follows one strongly squeezed 10 krad/s mode; fig2 sweeps the mode
# frequency for a few speeds of sound.
PRESETS: dict[str, dict] = {
    "fig1": {
        "species": "rb87",
        "speed_of_sound_m_per_s": 3.4e-3,
        "temperature_K": 0.5e-9,
        "mode_frequency_rad_per_s": 1.0e4,
        "initial_squeezing": 10.0,
        "initial_purity": 1.0,
        "time_max_s": 6.0,
        "time_points": 500,
        "rate_source": "auto",
    },
    "fig2": {
        "species": "rb87",
        "speed_of_sound_m_per_s": 3.4e-3,
        "temperature_K": 0.5e-9,
        "mode_frequency_rad_per_s": 1.0e4,
        "initial_squeezing": 10.0,
        "initial_purity": 1.0,
        "time_max_s": 6.0,
        "time_points": 500,
        "rate_source": "auto",
        "sweep_omega_min_rad_per_s": 1.0e3,
        "sweep_omega_max_rad_per_s": 1.0e4,
        "sweep_points": 50,
        "sweep_speeds_of_sound_m_per_s": [1.7e-3, 3.4e-3, 6.8e-3],
    },
}


def preset_config(name: str, overrides: dict | None = None) -> ScenarioConfig:
    """A shipped preset, optionally overlaid with config-file keys."""
    try:
        base = dict(PRESETS[name])
    except KeyError:
        raise ConfigError(f"unknown preset {name!r}") from None
    if overrides:
        base.update(overrides)
    return validate_config(base)
