"""File formats: aircraft/vehicle spec documents, pack datasets, result tables.

Spec files are line-oriented text with named sections and key = value pairs:

    format_version = 1

    [defaults]
    payload_per_seat_kg = 100

    [aircraft:example]
    propulsion = open_rotor
    mtom_kg = 1000
    ...

    [vehicle:ev-expected]
    kind = EV
    ...

Blank lines and full-line '#' comments are ignored. Unknown keys are errors,
not warnings: a typo in a physics parameter must not pass silently. The
[defaults] section may preset payload_per_seat_kg, hover_altitude_m,
cruise_altitude_m, vertical_climb_rate_mps and wing_climb_rate_mps for
aircraft that omit them.

Pack datasets are CSV with the exact header
name,category,specific_energy_Wh_per_kg,specific_power_W_per_kg.

All unit conversions (miles, nautical miles, mi/h) live at this boundary;
everything downstream is SI except the mile-denominated interface values.
"""

import csv
import io
import math
import re
from dataclasses import dataclass
from importlib import resources

from .battery import BatteryPackRecord, PackCategory
from .compare import TerrestrialVehicle, VehicleKind
from .errors import DataError, ParameterError, SpecParseError, SpecValidationError
from .mission import (
    DEFAULT_CRUISE_ALTITUDE_M,
    DEFAULT_HOVER_ALTITUDE_M,
    DEFAULT_PAYLOAD_PER_SEAT_KG,
    DEFAULT_WING_CLIMB_RATE_MPS,
    AircraftSpec,
)
from .powerplant import DEFAULT_INTERFERENCE_FACTOR, DragPolar, PropulsionKind
from .units import NMI_TO_MI

PACK_HEADER = ("name", "category", "specific_energy_Wh_per_kg",
               "specific_power_W_per_kg")

_SECTION_RE = re.compile(r"\[(?:(defaults)|(aircraft|vehicle):([A-Za-z0-9][A-Za-z0-9_.\-]*))\]")

_DEFAULTS_KEYS = frozenset({
    "payload_per_seat_kg", "hover_altitude_m", "cruise_altitude_m",
    "vertical_climb_rate_mps", "wing_climb_rate_mps",
})

_AIRCRAFT_KEYS = frozenset({
    "propulsion", "mtom_kg", "seats", "payload_per_seat_kg", "disc_area_m2",
    "fom", "interference_factor", "eta_vertical", "eta_fixed_wing",
    "lod_climb", "lod_cruise", "lod_descent",
    "drag_polar_cd0", "drag_polar_k", "drag_polar_wing_area_m2",
    "design_range_mi", "design_range_nmi", "design_cruise_speed_mph",
    "vertical_climb_rate_mps", "hover_altitude_m", "cruise_altitude_m",
    "wing_climb_rate_mps", "ewf",
})

_VEHICLE_KEYS = frozenset({
    "kind", "road_consumption_wh_per_mi", "circuity", "occupancy",
    "max_occupancy",
})


@dataclass(frozen=True)
class SpecDocument:
    """A validated spec file: aircraft, terrestrial vehicles and defaults."""

    format_version: int
    aircraft: tuple[AircraftSpec, ...]
    vehicles: tuple[TerrestrialVehicle, ...]
    defaults: dict

    def find_aircraft(self, name: str) -> AircraftSpec | None:
        return next((a for a in self.aircraft if a.name == name), None)

    def find_vehicle(self, name: str) -> TerrestrialVehicle | None:
        return next((v for v in self.vehicles if v.name == name), None)


# -- spec parsing -----------------------------------------------------------

def load_specs(path) -> SpecDocument:
    """Load and fully validate a spec file."""
    with open(path, encoding="utf-8") as fh:
        return parse_specs(fh.read())


def parse_specs(text: str) -> SpecDocument:
    """Parse spec text; any error leaves no document constructed."""
    top, sections = _split_sections(text)

    for key, (_, line, _) in top.items():
        if key != "format_version":
            raise SpecValidationError(
                f"unknown top-level key {key!r} at line {line}", field=key, line=line)
    if "format_version" not in top:
        raise SpecValidationError("missing top-level key 'format_version'",
                                  field="format_version")
    version = _int_value(top, "format_version")
    if version != 1:
        raise SpecValidationError(f"unsupported format_version {version}; expected 1",
                                  field="format_version")

    defaults: dict = {}
    aircraft_sections: list[tuple[str, dict]] = []
    vehicle_sections: list[tuple[str, dict]] = []
    seen_defaults = False
    seen_names = {"aircraft": set(), "vehicle": set()}
    for kind, name, line, entries in sections:
        if kind == "defaults":
            if seen_defaults:
                raise SpecValidationError(f"duplicate [defaults] section at line {line}",
                                          line=line)
            seen_defaults = True
            defaults = _build_defaults(entries)
        else:
            if name in seen_names[kind]:
                raise SpecValidationError(
                    f"duplicate {kind} name {name!r} at line {line}", name=name, line=line)
            seen_names[kind].add(name)
            if kind == "aircraft":
                aircraft_sections.append((name, entries))
            else:
                vehicle_sections.append((name, entries))

    aircraft = tuple(_build_aircraft(name, entries, defaults)
                     for name, entries in aircraft_sections)
    vehicles = tuple(_build_vehicle(name, entries) for name, entries in vehicle_sections)
    return SpecDocument(version, aircraft, vehicles, defaults)


def _split_sections(text: str):
    """Collect raw (value, line, column) entries, keyed per section."""
    top: dict = {}
    sections: list = []
    current: dict | None = None
    for lineno, raw in enumerate(text.splitlines(), start=1):
        stripped = raw.strip()
        if not stripped or stripped.startswith("#"):
            continue
        if stripped.startswith("["):
            match = _SECTION_RE.fullmatch(stripped)
            if match is None:
                raise SpecParseError(
                    f"malformed section header {stripped!r}; expected [defaults], "
                    "[aircraft:NAME] or [vehicle:NAME]", lineno, raw.index("[") + 1)
            if match.group(1):
                kind, name = "defaults", ""
            else:
                kind, name = match.group(2), match.group(3)
            entries: dict = {}
            sections.append((kind, name, lineno, entries))
            current = entries
            continue
        if "=" not in stripped:
            raise SpecParseError(f"expected 'key = value', got {stripped!r}", lineno)
        key, _, value = stripped.partition("=")
        key = key.strip()
        value = value.strip()
        if not key:
            raise SpecParseError("missing key before '='", lineno)
        if not value:
            raise SpecParseError(f"missing value for key {key!r}", lineno,
                                 raw.index("=") + 2)
        column = raw.index(value, raw.index("=")) + 1
        target = top if current is None else current
        if key in target:
            raise SpecParseError(f"duplicate key {key!r} in this section", lineno)
        target[key] = (value, lineno, column)
    return top, sections


def _float_value(entries: dict, key: str) -> float | None:
    if key not in entries:
        return None
    raw, line, column = entries[key]
    try:
        value = float(raw)
    except ValueError:
        raise SpecParseError(f"expected a number for {key!r}, got {raw!r}",
                             line, column) from None
    if not math.isfinite(value):
        raise SpecParseError(f"non-finite value for {key!r}", line, column)
    return value


def _int_value(entries: dict, key: str) -> int | None:
    if key not in entries:
        return None
    raw, line, column = entries[key]
    if re.fullmatch(r"[+-]?\d+", raw) is None:
        raise SpecParseError(f"expected an integer for {key!r}, got {raw!r}",
                             line, column)
    return int(raw)


def _str_value(entries: dict, key: str) -> str | None:
    if key not in entries:
        return None
    return entries[key][0]


def _reject_unknown(entries: dict, allowed: frozenset, context: str,
                    name: str = "") -> None:
    for key, (_, line, _) in entries.items():
        if key not in allowed:
            raise SpecValidationError(
                f"{context}: unknown key {key!r} at line {line}",
                name=name, field=key, line=line)


def _require_key(entries: dict, key: str, context: str, name: str = ""):
    if key not in entries:
        raise SpecValidationError(f"{context}: missing required key {key!r}",
                                  name=name, field=key)
    return entries[key]


def _build_defaults(entries: dict) -> dict:
    _reject_unknown(entries, _DEFAULTS_KEYS, "[defaults]")
    return {key: _float_value(entries, key) for key in entries}


def _build_aircraft(name: str, entries: dict, defaults: dict) -> AircraftSpec:
    context = f"aircraft {name!r}"
    _reject_unknown(entries, _AIRCRAFT_KEYS, context, name)

    def required_float(key: str) -> float:
        _require_key(entries, key, context, name)
        return _float_value(entries, key)

    def defaulted_float(key: str, fallback: float | None) -> float:
        value = _float_value(entries, key)
        if value is None:
            value = defaults.get(key, fallback)
        if value is None:
            raise SpecValidationError(
                f"{context}: missing required key {key!r} (not set in [defaults] either)",
                name=name, field=key)
        return value

    raw_propulsion, line, column = _require_key(entries, "propulsion", context, name)
    try:
        propulsion = PropulsionKind(raw_propulsion)
    except ValueError:
        valid = ", ".join(k.value for k in PropulsionKind)
        raise SpecValidationError(
            f"{context}: invalid propulsion {raw_propulsion!r} at line {line}; "
            f"expected one of: {valid}", name=name, field="propulsion", line=line) from None

    _require_key(entries, "seats", context, name)
    seats = _int_value(entries, "seats")

    range_mi = _float_value(entries, "design_range_mi")
    range_nmi = _float_value(entries, "design_range_nmi")
    if range_mi is not None and range_nmi is not None:
        raise SpecValidationError(
            f"{context}: give only one of design_range_mi and design_range_nmi",
            name=name, field="design_range_mi")
    if range_mi is None and range_nmi is None:
        raise SpecValidationError(
            f"{context}: missing required key 'design_range_mi' (or 'design_range_nmi')",
            name=name, field="design_range_mi")
    design_range_mi = range_mi if range_mi is not None else range_nmi * NMI_TO_MI

    polar_values = {key: _float_value(entries, key)
                    for key in ("drag_polar_cd0", "drag_polar_k",
                                "drag_polar_wing_area_m2")}
    given = [k for k, v in polar_values.items() if v is not None]
    if given and len(given) != 3:
        missing = sorted(set(polar_values) - set(given))
        raise SpecValidationError(
            f"{context}: incomplete drag polar; missing {missing}",
            name=name, field=missing[0])
    drag_polar = None
    if len(given) == 3:
        try:
            drag_polar = DragPolar(polar_values["drag_polar_cd0"],
                                   polar_values["drag_polar_k"],
                                   polar_values["drag_polar_wing_area_m2"])
        except ParameterError as exc:
            raise SpecValidationError(f"{context}: invalid drag polar: {exc}",
                                      name=name, field=exc.field) from exc

    try:
        spec = AircraftSpec(
            name=name,
            propulsion=propulsion,
            mtom_kg=required_float("mtom_kg"),
            seats=seats,
            disc_area_m2=required_float("disc_area_m2"),
            fom=required_float("fom"),
            eta_vertical=required_float("eta_vertical"),
            eta_fixed_wing=required_float("eta_fixed_wing"),
            design_range_mi=design_range_mi,
            design_cruise_speed_mph=required_float("design_cruise_speed_mph"),
            vertical_climb_rate_mps=defaulted_float("vertical_climb_rate_mps", None),
            ewf=required_float("ewf"),
            payload_per_seat_kg=defaulted_float("payload_per_seat_kg",
                                                DEFAULT_PAYLOAD_PER_SEAT_KG),
            interference_factor=(_float_value(entries, "interference_factor")
                                 if "interference_factor" in entries
                                 else DEFAULT_INTERFERENCE_FACTOR),
            lod_climb=_float_value(entries, "lod_climb"),
            lod_cruise=_float_value(entries, "lod_cruise"),
            lod_descent=_float_value(entries, "lod_descent"),
            drag_polar=drag_polar,
            hover_altitude_m=defaulted_float("hover_altitude_m",
                                             DEFAULT_HOVER_ALTITUDE_M),
            cruise_altitude_m=defaulted_float("cruise_altitude_m",
                                              DEFAULT_CRUISE_ALTITUDE_M),
            wing_climb_rate_mps=defaulted_float("wing_climb_rate_mps",
                                                DEFAULT_WING_CLIMB_RATE_MPS),
        ).validate()
    except ParameterError as exc:
        raise SpecValidationError(f"{context}: invalid value for {exc.field}: {exc}",
                                  name=name, field=exc.field) from exc
    return spec


def _build_vehicle(name: str, entries: dict) -> TerrestrialVehicle:
    context = f"vehicle {name!r}"
    _reject_unknown(entries, _VEHICLE_KEYS, context, name)
    raw_kind, line, _ = _require_key(entries, "kind", context, name)
    try:
        kind = VehicleKind(raw_kind)
    except ValueError:
        valid = ", ".join(k.value for k in VehicleKind)
        raise SpecValidationError(
            f"{context}: invalid kind {raw_kind!r} at line {line}; expected one of: "
            f"{valid}", name=name, field="kind", line=line) from None
    for key in ("road_consumption_wh_per_mi", "circuity", "occupancy", "max_occupancy"):
        _require_key(entries, key, context, name)
    try:
        vehicle = TerrestrialVehicle(
            name=name,
            kind=kind,
            road_consumption_wh_per_mi=_float_value(entries, "road_consumption_wh_per_mi"),
            circuity=_float_value(entries, "circuity"),
            occupancy=_float_value(entries, "occupancy"),
            max_occupancy=_int_value(entries, "max_occupancy"),
        ).validate()
    except ParameterError as exc:
        raise SpecValidationError(f"{context}: invalid value for {exc.field}: {exc}",
                                  name=name, field=exc.field) from exc
    return vehicle


# -- spec serialization ------------------------------------------------------

def _fmt_number(value) -> str:
    if isinstance(value, int):
        return str(value)
    return repr(float(value))


def dump_specs(doc: SpecDocument) -> str:
    """Render a document back to spec-file text (round-trips to equality)."""
    lines = [f"format_version = {doc.format_version}"]
    if doc.defaults:
        lines += ["", "[defaults]"]
        lines += [f"{key} = {_fmt_number(doc.defaults[key])}"
                  for key in sorted(doc.defaults)]
    for a in doc.aircraft:
        lines += ["", f"[aircraft:{a.name}]"]
        lines.append(f"propulsion = {a.propulsion.value}")
        lines.append(f"mtom_kg = {_fmt_number(a.mtom_kg)}")
        lines.append(f"seats = {a.seats}")
        lines.append(f"payload_per_seat_kg = {_fmt_number(a.payload_per_seat_kg)}")
        lines.append(f"disc_area_m2 = {_fmt_number(a.disc_area_m2)}")
        lines.append(f"fom = {_fmt_number(a.fom)}")
        lines.append(f"interference_factor = {_fmt_number(a.interference_factor)}")
        lines.append(f"eta_vertical = {_fmt_number(a.eta_vertical)}")
        lines.append(f"eta_fixed_wing = {_fmt_number(a.eta_fixed_wing)}")
        for key in ("lod_climb", "lod_cruise", "lod_descent"):
            value = getattr(a, key)
            if value is not None:
                lines.append(f"{key} = {_fmt_number(value)}")
        if a.drag_polar is not None:
            lines.append(f"drag_polar_cd0 = {_fmt_number(a.drag_polar.zero_lift_drag_coeff)}")
            lines.append(f"drag_polar_k = {_fmt_number(a.drag_polar.induced_factor)}")
            lines.append(f"drag_polar_wing_area_m2 = {_fmt_number(a.drag_polar.wing_area_m2)}")
        lines.append(f"design_range_mi = {_fmt_number(a.design_range_mi)}")
        lines.append(f"design_cruise_speed_mph = {_fmt_number(a.design_cruise_speed_mph)}")
        lines.append(f"vertical_climb_rate_mps = {_fmt_number(a.vertical_climb_rate_mps)}")
        lines.append(f"hover_altitude_m = {_fmt_number(a.hover_altitude_m)}")
        lines.append(f"cruise_altitude_m = {_fmt_number(a.cruise_altitude_m)}")
        lines.append(f"wing_climb_rate_mps = {_fmt_number(a.wing_climb_rate_mps)}")
        lines.append(f"ewf = {_fmt_number(a.ewf)}")
    for v in doc.vehicles:
        lines += ["", f"[vehicle:{v.name}]"]
        lines.append(f"kind = {v.kind.value}")
        lines.append(f"road_consumption_wh_per_mi = {_fmt_number(v.road_consumption_wh_per_mi)}")
        lines.append(f"circuity = {_fmt_number(v.circuity)}")
        lines.append(f"occupancy = {_fmt_number(v.occupancy)}")
        lines.append(f"max_occupancy = {v.max_occupancy}")
    return "\n".join(lines) + "\n"


def save_specs(doc: SpecDocument, path) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(dump_specs(doc))


# -- pack datasets -----------------------------------------------------------

def load_packs(path) -> list[BatteryPackRecord]:
    """Read a pack dataset CSV; categories must match the three labels exactly."""
    with open(path, newline="", encoding="utf-8") as fh:
        return _read_packs(fh, str(path))


def parse_packs(text: str) -> list[BatteryPackRecord]:
    return _read_packs(io.StringIO(text), "<string>")


def _read_packs(fh, source: str) -> list[BatteryPackRecord]:
    reader = csv.reader(fh)
    try:
        header = next(reader)
    except StopIteration:
        raise DataError(f"{source}: empty pack file; expected header "
                        f"{','.join(PACK_HEADER)}") from None
    if tuple(cell.strip() for cell in header) != PACK_HEADER:
        raise DataError(f"{source}: bad header {header!r}; expected "
                        f"{','.join(PACK_HEADER)!r}")
    labels = {c.value: c for c in PackCategory}
    packs = []
    for row_number, row in enumerate(reader, start=2):
        if not row or all(not cell.strip() for cell in row):
            continue
        if len(row) != 4:
            raise DataError(f"{source}: row {row_number}: expected 4 fields, "
                            f"got {len(row)}")
        name, category, energy, power = (cell.strip() for cell in row)
        if not name:
            raise DataError(f"{source}: row {row_number}: empty pack name")
        if category not in labels:
            raise DataError(f"{source}: row {row_number}: unknown category "
                            f"{category!r}; valid categories are "
                            f"{', '.join(repr(c.value) for c in PackCategory)}")
        try:
            specific_energy = float(energy)
            specific_power = float(power)
        except ValueError:
            raise DataError(f"{source}: row {row_number}: non-numeric metric") from None
        try:
            packs.append(BatteryPackRecord(name, labels[category],
                                           specific_energy, specific_power))
        except ParameterError as exc:
            raise DataError(f"{source}: row {row_number}: {exc}") from exc
    return packs


def dump_packs(packs) -> str:
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(PACK_HEADER)
    for p in packs:
        writer.writerow([p.name, p.category.value,
                         _fmt_number(p.specific_energy_wh_per_kg),
                         _fmt_number(p.specific_power_w_per_kg)])
    return buffer.getvalue()


def save_packs(packs, path) -> None:
    with open(path, "w", newline="", encoding="utf-8") as fh:
        fh.write(dump_packs(packs))


# -- result tables -----------------------------------------------------------

@dataclass(frozen=True)
class ResultTable:
    """Homogeneous rows under (name, unit) columns; unit '-' marks unitless."""

    columns: tuple[tuple[str, str], ...]
    rows: tuple[tuple, ...]

    @classmethod
    def create(cls, columns, rows) -> "ResultTable":
        table = cls(tuple((str(n), str(u)) for n, u in columns),
                    tuple(tuple(row) for row in rows))
        return table.validate()

    def validate(self) -> "ResultTable":
        for name, unit in self.columns:
            if not name:
                raise DataError("column name must be non-empty")
            if not unit:
                raise DataError(f"column {name!r}: unit string must be non-empty")
        width = len(self.columns)
        for index, row in enumerate(self.rows):
            if len(row) != width:
                raise DataError(f"row {index} has {len(row)} cells, expected {width}")
            for (name, _), cell in zip(self.columns, row):
                if isinstance(cell, float) and not math.isfinite(cell):
                    raise DataError(f"row {index}, column {name!r}: non-finite "
                                    f"value {cell!r}")
        return self

    def column_values(self, name: str) -> list:
        for index, (column_name, _) in enumerate(self.columns):
            if column_name == name:
                return [row[index] for row in self.rows]
        raise DataError(f"no column named {name!r}")


def _format_cell(value) -> str:
    if value is None:
        return ""
    if isinstance(value, float):
        return f"{value:.17g}"
    return str(value)


def write_table(table: ResultTable, destination, delimiter: str = ",") -> None:
    """Write a delimited table; floats carry 17 significant digits."""
    table.validate()
    if hasattr(destination, "write"):
        _write_table_stream(table, destination, delimiter)
    else:
        with open(destination, "w", newline="", encoding="utf-8") as fh:
            _write_table_stream(table, fh, delimiter)


def _write_table_stream(table: ResultTable, fh, delimiter: str) -> None:
    writer = csv.writer(fh, delimiter=delimiter, lineterminator="\n")
    writer.writerow([f"{name}({unit})" for name, unit in table.columns])
    for row in table.rows:
        writer.writerow([_format_cell(cell) for cell in row])


def read_table(source, delimiter: str = ",") -> ResultTable:
    """Parse a table written by write_table. Numeric cells come back as floats."""
    if hasattr(source, "read"):
        return _read_table_stream(source, delimiter)
    with open(source, newline="", encoding="utf-8") as fh:
        return _read_table_stream(fh, delimiter)


def _read_table_stream(fh, delimiter: str) -> ResultTable:
    reader = csv.reader(fh, delimiter=delimiter)
    try:
        header = next(reader)
    except StopIteration:
        raise DataError("empty table: missing header row") from None
    columns = []
    for cell in header:
        if not cell.endswith(")") or "(" not in cell:
            raise DataError(f"malformed header cell {cell!r}; expected 'name(unit)'")
        name, _, unit = cell[:-1].rpartition("(")
        columns.append((name, unit))
    rows = []
    for row in reader:
        parsed = []
        for cell in row:
            if cell == "":
                parsed.append(None)
            else:
                try:
                    parsed.append(float(cell))
                except ValueError:
                    parsed.append(cell)
        rows.append(tuple(parsed))
    return ResultTable.create(columns, rows)


# -- bundled example data ----------------------------------------------------

def builtin_spec_path() -> str:
    """Path of the packaged example aircraft/vehicle spec file."""
    return str(resources.files("evtolsim").joinpath("data/aircraft.cfg"))


def builtin_packs_path() -> str:
    """Path of the packaged example battery pack dataset."""
    return str(resources.files("evtolsim").joinpath("data/packs.csv"))
