"""Command-line interface.

Verbs: ``trajectory`` (metric time series as CSV), ``sweep`` (decoherence
time vs frequency), ``rates`` (damping-rate breakdown), ``verify``
(self-verification suite), ``plotscript`` (CSV plus a gnuplot script).

A scenario comes from ``--preset fig1|fig2`` and/or ``--config FILE``
(config keys overlay the preset).  Output paths default to the current
directory; the PHONODEC_OUTDIR environment variable relocates them.
"""

from __future__ import annotations

import argparse
import os
import sys
from pathlib import Path

import yaml

from .config import ConfigError, PRESETS, ScenarioConfig, preset_config, validate_config
from .runs import resolve_rate, run_sweep, run_trajectory, write_csv
from .three_body import decay_rate, half_life
from .verify import format_report, run_verification


def _scenario(args) -> ScenarioConfig:
    if args.preset is None and args.config is None:
        raise ConfigError("a scenario is required: give --preset and/or --config")
    overrides = None
    if args.config is not None:
        with open(args.config, "r", encoding="utf-8") as fh:
            overrides = yaml.safe_load(fh) or {}
    if args.preset is not None:
        return preset_config(args.preset, overrides)
    return validate_config(overrides)


def _out_path(args, default_name: str) -> Path:
    out = args.out if args.out is not None else Path(default_name)
    out = Path(out)
    if not out.is_absolute():
        out = Path(os.environ.get("PHONODEC_OUTDIR", ".")) / out
    return out


def _cmd_trajectory(args) -> int:
    run = run_trajectory(_scenario(args))
    path = _out_path(args, "trajectory.csv")
    write_csv(run, path)
    print(f"wrote {path}")
    return 0


def _cmd_sweep(args) -> int:
    run = run_sweep(_scenario(args))
    path = _out_path(args, "sweep.csv")
    write_csv(run, path)
    print(f"wrote {path}")
    return 0


def _cmd_rates(args) -> int:
    config = _scenario(args)
    params = config.condensate()
    rate = resolve_rate(config, params)
    gamma3 = decay_rate(params.density, config.three_body_l3_m6_per_s)
    lines = [
        f"species                  {params.species or 'custom'}",
        f"speed_of_sound_m_per_s   {params.speed_of_sound!r}",
        f"density_per_m3           {params.density!r}",
        f"temperature_K            {params.temperature!r}",
        f"mode_frequency_rad_per_s {config.mode_frequency_rad_per_s!r}",
        f"beta_q                   {rate.beta_q!r}",
        f"n_thermal                {rate.n_thermal!r}",
        f"regime                   {rate.regime}",
        f"gamma_per_s              {rate.gamma!r}",
        f"gamma_beliaev_per_s      {rate.gamma_beliaev!r}",
        f"gamma_landau_per_s       {rate.gamma_landau!r}",
        f"gamma_1_per_s            {rate.gamma_1!r}",
        f"gamma_2_per_s            {rate.gamma_2!r}",
        f"gamma_total_per_s        {rate.gamma_total!r}",
        f"mu_inf                   {1.0 / (1.0 + 2.0 * rate.n_thermal)!r}",
        f"three_body_gamma0_per_s  {gamma3!r}",
        f"three_body_half_life_s   {half_life(params.density, config.three_body_l3_m6_per_s)!r}",
    ]
    print("\n".join(lines))
    return 0


def _cmd_verify(args) -> int:
    results = run_verification(args.tolerance)
    print(format_report(results, args.tolerance))
    return 0 if all(res.passed for res in results) else 1


_TRAJECTORY_GP = """\
set datafile separator ","
set datafile commentschars "#"
set terminal pngcairo size 1200,900
set output "{stem}.png"
set multiplot layout 2,2
set xlabel "t [s]"
set ylabel "purity"
plot "{csv}" using 1:2 with lines notitle
set ylabel "nonclassical depth"
plot "{csv}" using 1:3 with lines notitle
set ylabel "squeezing r"
plot "{csv}" using 1:4 with lines notitle
set ylabel "occupation"
set logscale y
plot "{csv}" using 1:5 with lines notitle
unset multiplot
"""

_SWEEP_GP = """\
set datafile separator ","
set datafile commentschars "#"
set terminal pngcairo size 900,700
set output "{stem}.png"
set logscale xy
set xlabel "mode frequency [rad/s]"
set ylabel "decoherence time t_min [s]"
plot {plots}
"""


def _cmd_plotscript(args) -> int:
    config = _scenario(args)
    if args.kind == "trajectory":
        run = run_trajectory(config)
        default = "trajectory.csv"
    else:
        run = run_sweep(config)
        default = "sweep.csv"
    csv_path = _out_path(args, default)
    write_csv(run, csv_path)
    gp_path = csv_path.with_suffix(".gp")
    if args.kind == "trajectory":
        script = _TRAJECTORY_GP.format(csv=csv_path.name, stem=csv_path.stem)
    else:
        speeds = sorted({row[0] for row in run.rows})
        plots = ", \\\n     ".join(
            f'"{csv_path.name}" using ($1=={c_s!r}?$2:1/0):4 with lines'
            f' title "c_s = {c_s!r} m/s"'
            for c_s in speeds
        )
        script = _SWEEP_GP.format(stem=csv_path.stem, plots=plots)
    with open(gp_path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(script)
    print(f"wrote {csv_path}")
    print(f"wrote {gp_path}")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="phonodec",
        description=(
            "Open-system evolution and decoherence timescales of single-mode "
            "Gaussian phonon states in a uniform Bose-Einstein condensate."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_scenario_args(sp):
        sp.add_argument("--config", type=Path, help="YAML scenario file")
        sp.add_argument(
            "--preset", choices=sorted(PRESETS), help="shipped scenario preset"
        )
        sp.add_argument("--out", type=Path, help="output file path")

    sp = sub.add_parser("trajectory", help="metric time series as CSV")
    add_scenario_args(sp)
    sp.set_defaults(func=_cmd_trajectory)

    sp = sub.add_parser("sweep", help="decoherence time vs mode frequency as CSV")
    add_scenario_args(sp)
    sp.set_defaults(func=_cmd_sweep)

    sp = sub.add_parser("rates", help="print the damping-rate breakdown")
    add_scenario_args(sp)
    sp.set_defaults(func=_cmd_rates)

    sp = sub.add_parser("verify", help="run the self-verification suite")
    sp.add_argument(
        "--tolerance",
        type=float,
        default=1.0,
        help="scale factor applied to every check tolerance",
    )
    sp.set_defaults(func=_cmd_verify)

    sp = sub.add_parser("plotscript", help="write CSV plus a gnuplot script")
    add_scenario_args(sp)
    sp.add_argument(
        "--kind", choices=("trajectory", "sweep"), default="trajectory"
    )
    sp.set_defaults(func=_cmd_plotscript)

    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (
        ConfigError,
        FileNotFoundError,
        ValueError,
        RuntimeError,
        yaml.YAMLError,
    ) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
