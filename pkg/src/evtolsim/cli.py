"""Command-line interface.

One positional subcommand selects the operation; all flags use long names.

Exit codes:
    0  success
    2  configuration error (bad flags, unknown aircraft, missing inputs)
    3  validation error (malformed spec/pack/table data)
    4  infeasible mission or mass budget
    5  I/O error
"""

import argparse
import math
import sys
from dataclasses import dataclass, field

from .battery import PackCategory, classify_feasibility, ewf_sweep, size_battery, sizing_mission
from .compare import crossover_range, terrestrial_energy_per_passenger_mile
from .dataio import (
    ResultTable,
    builtin_spec_path,
    load_packs,
    load_specs,
    write_table,
)
from .errors import (
    ContractError,
    DataError,
    InfeasibleMissionError,
    MassBudgetError,
    ParameterError,
    SpecParseError,
    SpecValidationError,
)
from .mission import build_mission, range_sweep

EXIT_OK = 0
EXIT_CONFIG = 2
EXIT_VALIDATION = 3
EXIT_INFEASIBLE = 4
EXIT_IO = 5

DEFAULT_EWF_LIST = (0.45, 0.5, 0.55)
DEFAULT_FAILURE_LIST = (0.0, 0.5)
DEFAULT_GRID_START_MI = 10.0
DEFAULT_GRID_STEP_MI = 1.0

_FEASIBILITY_COLUMNS = (
    (PackCategory.CURRENT_LI_ION, "feasible_current_li_ion"),
    (PackCategory.NOVEL_PROTOTYPE_LI_ION, "feasible_novel_prototype_li_ion"),
    (PackCategory.ADVANCED, "feasible_advanced"),
)


class ConfigError(Exception):
    """Bad flag combination or selection; maps chart exit code 2."""


@dataclass
class RunConfig:
    """Resolved flags for one subcommand invocation."""

    spec_path: str
    packs_path: str | None = None
    output_path: str | None = None
    aircraft_filter: list[str] = field(default_factory=list)
    range_grid_mi: tuple[float, float, float] | None = None
    cruise_speed_mph: float | None = None
    occupants: int | None = None
    ewf_list: list[float] = field(default_factory=lambda: list(DEFAULT_EWF_LIST))
    failure_list: list[float] = field(default_factory=lambda: list(DEFAULT_FAILURE_LIST))
    reserve: bool = False
    delimiter: str = ","
    plot_path: str | None = None
    verdicts: bool = False
    output_dir: str | None = None

    def validate(self) -> "RunConfig":
        if self.range_grid_mi is not None:
            start, stop, step = self.range_grid_mi
            if step <= 0:
                raise ConfigError(f"--range step must be > 0, got {step}")
            if start > stop:
                raise ConfigError(f"--range start {start} exceeds stop {stop}")
        if not self.ewf_list:
            raise ConfigError("--ewf list must be non-empty")
        if not self.failure_list:
            raise ConfigError("--failure list must be non-empty")
        return self


def _parse_range(text: str) -> tuple[float, float, float]:
    parts = text.split(":")
    try:
        if len(parts) == 1:
            value = float(parts[0])
            return (value, value, DEFAULT_GRID_STEP_MI)
        if len(parts) == 2:
            return (float(parts[0]), float(parts[1]), DEFAULT_GRID_STEP_MI)
        if len(parts) == 3:
            return (float(parts[0]), float(parts[1]), float(parts[2]))
    except ValueError:
        pass
    raise argparse.ArgumentTypeError(
        f"expected RANGE, START:STOP or START:STOP:STEP in miles, got {text!r}")


def _parse_float_list(text: str) -> list[float]:
    try:
        return [float(part) for part in text.split(",") if part.strip() != ""]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated numbers, got {text!r}")


def _parse_delimiter(text: str) -> str:
    if text in ("tab", "\\t"):
        return "\t"
    if len(text) != 1:
        raise argparse.ArgumentTypeError(f"delimiter must be a single character, got {text!r}")
    return text


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="evtolsim",
        description="Mission-energy simulation and battery sizing for EVTOL aircraft.")
    sub = parser.add_subparsers(dest="command", required=True)

    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--spec", default=builtin_spec_path(),
                        help="aircraft/vehicle spec file (default: bundled example fleet)")
    common.add_argument("--aircraft", action="append", default=None, metavar="NAME",
                        help="restrict to this aircraft (repeatable)")
    common.add_argument("--out", default=None, metavar="PATH",
                        help="output file (default: standard output)")
    common.add_argument("--delimiter", type=_parse_delimiter, default=",",
                        help="output delimiter; ',' (default), single char, or 'tab'")
    common.add_argument("--range", type=_parse_range, default=None, metavar="MI[:MI[:STEP]]",
                        help="range grid in miles (default: 10 to design range, step 1)")
    common.add_argument("--speed", type=float, default=None, metavar="MPH",
                        dest="cruise_speed_mph", help="cruise speed override (mi/h)")
    common.add_argument("--occupants", type=int, default=None,
                        help="occupants incl. pilot (default: full cabin; "
                             "compare defaults to 1)")

    p_sim = sub.add_parser("simulate", parents=[common],
                           help="per-segment breakdown for one aircraft at one range")
    p_sim.add_argument("--reserve", action="store_true",
                       help="append the 30-minute reserve segment")

    p_sweep = sub.add_parser("sweep", parents=[common],
                             help="Wh/passenger-mile vs range, plus terrestrial baselines")
    p_sweep.add_argument("--plot", default=None, metavar="PNG",
                         help="also render the energy-curve figure to this file")

    p_bat = sub.add_parser("battery", parents=[common],
                           help="pack specific energy/power requirements per aircraft")
    p_bat.add_argument("--packs", default=None, metavar="CSV",
                       help="pack dataset for feasibility verdicts")
    p_bat.add_argument("--verdicts", action="store_true",
                       help="require per-category feasibility columns (needs --packs)")
    p_bat.add_argument("--ewf", type=_parse_float_list,
                       default=list(DEFAULT_EWF_LIST), metavar="LIST",
                       help="comma-separated empty weight fractions (default 0.45,0.5,0.55)")
    p_bat.add_argument("--failure", type=_parse_float_list,
                       default=list(DEFAULT_FAILURE_LIST), metavar="LIST",
                       help="comma-separated pack failure fractions (default 0,0.5)")
    p_bat.add_argument("--plot", default=None, metavar="PNG",
                       help="also render the requirement figure to this file")

    sub.add_parser("compare", parents=[common],
                   help="crossover ranges against terrestrial vehicle baselines")

    p_rep = sub.add_parser("report", parents=[common],
                           help="write sweep/battery/compare tables and figures to a directory")
    p_rep.add_argument("--packs", default=None, metavar="CSV",
                       help="pack dataset for feasibility verdicts and the pack scatter")
    p_rep.add_argument("--outdir", required=True, metavar="DIR",
                       help="directory for the emitted tables and figures")
    return parser


def _config_from_args(args: argparse.Namespace) -> RunConfig:
    return RunConfig(
        spec_path=args.spec,
        packs_path=getattr(args, "packs", None),
        output_path=args.out,
        aircraft_filter=args.aircraft or [],
        range_grid_mi=args.range,
        cruise_speed_mph=args.cruise_speed_mph,
        occupants=args.occupants,
        ewf_list=list(getattr(args, "ewf", DEFAULT_EWF_LIST)),
        failure_list=list(getattr(args, "failure", DEFAULT_FAILURE_LIST)),
        reserve=getattr(args, "reserve", False),
        delimiter=args.delimiter,
        plot_path=getattr(args, "plot", None),
        verdicts=getattr(args, "verdicts", False),
        output_dir=getattr(args, "outdir", None),
    ).validate()


def _select_aircraft(doc, cfg: RunConfig) -> list:
    if not cfg.aircraft_filter:
        return list(doc.aircraft)
    selected = []
    for name in cfg.aircraft_filter:
        craft = doc.find_aircraft(name)
        if craft is None:
            known = ", ".join(a.name for a in doc.aircraft) or "(none)"
            raise ConfigError(f"unknown aircraft {name!r}; spec file defines: {known}")
        selected.append(craft)
    return selected


def _grid_values(start: float, stop: float, step: float) -> list[float]:
    count = int(math.floor((stop - start) / step + 1e-9))
    return [start + i * step for i in range(count + 1)]


def _grid_for(craft, cfg: RunConfig) -> list[float]:
    if cfg.range_grid_mi is not None:
        return _grid_values(*cfg.range_grid_mi)
    if craft.design_range_mi <= DEFAULT_GRID_START_MI:
        return [craft.design_range_mi]
    return _grid_values(DEFAULT_GRID_START_MI, craft.design_range_mi,
                        DEFAULT_GRID_STEP_MI)


def _occupants_for(craft, cfg: RunConfig, default_full: bool) -> int:
    if cfg.occupants is not None:
        return cfg.occupants
    return craft.seats if default_full else 1


# -- subcommands --------------------------------------------------------------

def cmd_simulate(cfg: RunConfig) -> ResultTable:
    doc = load_specs(cfg.spec_path)
    selected = _select_aircraft(doc, cfg)
    if len(selected) != 1:
        names = ", ".join(a.name for a in selected)
        raise ConfigError(f"simulate needs exactly one aircraft; matched: {names}. "
                          "Narrow the selection with --aircraft.")
    if cfg.range_grid_mi is None:
        raise ConfigError("simulate needs --range with a single value")
    start, stop, _ = cfg.range_grid_mi
    if start != stop:
        raise ConfigError(f"simulate needs a single range point, got {start}:{stop}")
    craft = selected[0]
    profile = build_mission(craft, start, cfg.cruise_speed_mph,
                            include_reserve=cfg.reserve)
    rows = [(s.kind.value, s.duration_s, s.distance_m, s.power_w, s.energy_wh)
            for s in profile.segments]
    rows.append(("Total",
                 sum(s.duration_s for s in profile.segments),
                 sum(s.distance_m for s in profile.segments),
                 profile.peak_power_w,
                 profile.total_energy_wh + profile.reserve_energy_wh))
    return ResultTable.create(
        [("segment", "-"), ("duration_s", "s"), ("distance_m", "m"),
         ("power_W", "W"), ("energy_Wh", "Wh")], rows)


def cmd_sweep(cfg: RunConfig) -> ResultTable:
    doc = load_specs(cfg.spec_path)
    crafts = _select_aircraft(doc, cfg)
    if not crafts:
        raise ConfigError("spec file defines no aircraft")

    columns = [("range_mi", "mi")]
    curves = {}
    for craft in crafts:
        occupants = _occupants_for(craft, cfg, default_full=True)
        grid = _grid_for(craft, cfg)
        points = range_sweep(craft, grid, cfg.cruise_speed_mph, occupants)
        label = f"{craft.name}@{occupants}"
        curves[label] = dict(points)
        columns.append((label, "Wh/passenger-mi"))

    baselines = [(v.name, terrestrial_energy_per_passenger_mile(v))
                 for v in doc.vehicles]
    columns.extend((name, "Wh/passenger-mi") for name, _ in baselines)

    all_ranges = sorted({r for curve in curves.values() for r in curve})
    rows = []
    for r in all_ranges:
        row = [r]
        row.extend(curve.get(r) for curve in curves.values())
        row.extend(value for _, value in baselines)
        rows.append(tuple(row))
    table = ResultTable.create(columns, rows)

    if cfg.plot_path is not None:
        from .plots import save_energy_curve_figure
        curve_data = [(label, sorted(curve), [curve[r] for r in sorted(curve)])
                      for label, curve in curves.items()]
        save_energy_curve_figure(curve_data, baselines, cfg.plot_path)
    return table


def cmd_battery(cfg: RunConfig) -> ResultTable:
    doc = load_specs(cfg.spec_path)
    crafts = _select_aircraft(doc, cfg)
    if not crafts:
        raise ConfigError("spec file defines no aircraft")
    if cfg.verdicts and cfg.packs_path is None:
        raise ConfigError("feasibility verdicts need a pack dataset; pass --packs")
    packs = load_packs(cfg.packs_path) if cfg.packs_path is not None else None

    columns = [("aircraft", "-"), ("ewf", "-"), ("failure_fraction", "-"),
               ("battery_mass_kg", "kg"), ("specific_energy", "Wh/kg"),
               ("specific_power", "W/kg")]
    if packs is not None:
        columns.extend((label, "-") for _, label in _FEASIBILITY_COLUMNS)

    rows = []
    profiles = {}
    for craft in crafts:
        profile = sizing_mission(craft)
        profiles[craft.name] = profile
        for req in ewf_sweep(craft, profile, cfg.ewf_list, cfg.failure_list):
            row = [craft.name, req.ewf_used, req.failure_fraction,
                   req.battery_mass_kg, req.specific_energy_wh_per_kg,
                   req.specific_power_w_per_kg]
            if packs is not None:
                verdicts = classify_feasibility(req, packs)
                row.extend("yes" if verdicts[category].feasible else "no"
                           for category, _ in _FEASIBILITY_COLUMNS)
            rows.append(tuple(row))
    table = ResultTable.create(columns, rows)

    if cfg.plot_path is not None:
        from .plots import save_battery_requirement_figure
        points = []
        for craft in crafts:
            profile = profiles[craft.name]
            base = size_battery(craft, profile, 0.5, 0.0)
            low = size_battery(craft, profile, 0.45, 0.0)
            high = size_battery(craft, profile, 0.55, 0.0)
            failed = size_battery(craft, profile, 0.5, 0.5)
            points.append((craft.name, base.specific_energy_wh_per_kg,
                           base.specific_power_w_per_kg,
                           low.specific_energy_wh_per_kg,
                           high.specific_energy_wh_per_kg,
                           failed.specific_power_w_per_kg))
        save_battery_requirement_figure(points, packs or [], cfg.plot_path)
    return table


def cmd_compare(cfg: RunConfig) -> ResultTable:
    doc = load_specs(cfg.spec_path)
    crafts = _select_aircraft(doc, cfg)
    if not crafts:
        raise ConfigError("spec file defines no aircraft")
    if not doc.vehicles:
        raise ConfigError("spec file defines no terrestrial vehicles to compare against")

    baselines = [(v.name, terrestrial_energy_per_passenger_mile(v))
                 for v in doc.vehicles]
    columns = [("aircraft", "-"), ("occupants", "-")]
    columns.extend((f"{name}_crossover", "mi") for name, _ in baselines)

    rows = []
    for craft in crafts:
        occupants = _occupants_for(craft, cfg, default_full=False)
        grid = _grid_for(craft, cfg)
        if len(grid) < 2:
            raise ConfigError(f"aircraft {craft.name!r}: the range grid has fewer than "
                              "two points; widen it with --range START:STOP:STEP")
        curve = range_sweep(craft, grid, cfg.cruise_speed_mph, occupants)
        row = [craft.name, occupants]
        row.extend(crossover_range(curve, baseline) for _, baseline in baselines)
        rows.append(tuple(row))
    return ResultTable.create(columns, rows)


def cmd_report(cfg: RunConfig) -> None:
    """Write the three standard tables plus both figures into --outdir."""
    import os

    from .plots import save_battery_requirement_figure, save_energy_curve_figure

    outdir = cfg.output_dir
    if outdir is None:
        raise ConfigError("report needs --outdir")
    os.makedirs(outdir, exist_ok=True)

    def path(name: str) -> str:
        return os.path.join(outdir, name)

    sweep_cfg = _replace(cfg, output_path=None, plot_path=path("energy_curves.png"))
    write_table(cmd_sweep(sweep_cfg), path("energy_sweep.csv"), cfg.delimiter)

    battery_cfg = _replace(cfg, output_path=None,
                           plot_path=path("battery_requirements.png"))
    write_table(cmd_battery(battery_cfg), path("battery_requirements.csv"),
                cfg.delimiter)

    write_table(cmd_compare(_replace(cfg, plot_path=None)), path("crossovers.csv"),
                cfg.delimiter)


def _replace(cfg: RunConfig, **changes) -> RunConfig:
    from dataclasses import replace
    return replace(cfg, **changes)


# -- entry point ---------------------------------------------------------------

def _fail(exc: Exception) -> None:
    print(f"evtolsim: error: {exc}", file=sys.stderr)


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        code = exc.code
        if code is None:
            return EXIT_OK
        return code if isinstance(code, int) else EXIT_CONFIG

    try:
        cfg = _config_from_args(args)
        if args.command == "report":
            cmd_report(cfg)
            return EXIT_OK
        table = {
            "simulate": cmd_simulate,
            "sweep": cmd_sweep,
            "battery": cmd_battery,
            "compare": cmd_compare,
        }[args.command](cfg)
        if cfg.output_path is None:
            write_table(table, sys.stdout, cfg.delimiter)
        else:
            write_table(table, cfg.output_path, cfg.delimiter)
        return EXIT_OK
    except ConfigError as exc:
        _fail(exc)
        return EXIT_CONFIG
    except (SpecParseError, SpecValidationError, DataError, ParameterError,
            ContractError) as exc:
        _fail(exc)
        return EXIT_VALIDATION
    except (InfeasibleMissionError, MassBudgetError) as exc:
        _fail(exc)
        return EXIT_INFEASIBLE
    except OSError as exc:
        _fail(exc)
        return EXIT_IO


if __name__ == "__main__":
    sys.exit(main())
