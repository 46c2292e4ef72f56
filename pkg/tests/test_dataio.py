import io
import math

import pytest

from evtolsim import (
    PackCategory,
    PropulsionKind,
    ResultTable,
    builtin_packs_path,
    builtin_spec_path,
    dump_packs,
    dump_specs,
    load_packs,
    load_specs,
    parse_packs,
    parse_specs,
    read_table,
    save_specs,
    write_table,
)
from evtolsim.errors import DataError, SpecParseError, SpecValidationError

MINIMAL_SPEC = """\
format_version = 1

[aircraft:demo]
propulsion = open_rotor
mtom_kg = 1000
seats = 2
disc_area_m2 = 20
fom = 0.7
eta_vertical = 0.85
eta_fixed_wing = 0.9
lod_cruise = 12
design_range_mi = 100
design_cruise_speed_mph = 100
vertical_climb_rate_mps = 2.0
ewf = 0.5
"""


def test_minimal_document_round_trip(tmp_path):
    doc = parse_specs(MINIMAL_SPEC)
    assert doc.format_version == 1
    assert len(doc.aircraft) == 1
    craft = doc.aircraft[0]
    assert craft.name == "demo"
    assert craft.propulsion is PropulsionKind.OPEN_ROTOR
    assert craft.payload_per_seat_kg == 100.0      # built-in default
    assert craft.hover_altitude_m == 15.0
    assert craft.cruise_altitude_m == 300.0

    text = dump_specs(doc)
    assert parse_specs(text) == doc

    path = tmp_path / "demo.cfg"
    save_specs(doc, path)
    assert load_specs(path) == doc


def test_comments_and_blank_lines_ignored():
    text = MINIMAL_SPEC.replace("[aircraft:demo]",
                                "# a comment\n\n[aircraft:demo]\n# another")
    assert parse_specs(text) == parse_specs(MINIMAL_SPEC)


def test_unknown_key_rejected_with_name_and_line():
    text = MINIMAL_SPEC + "dsc_area_m2 = 5\n"
    line_count = MINIMAL_SPEC.count("\n") + 1
    with pytest.raises(SpecValidationError) as excinfo:
        parse_specs(text)
    assert "dsc_area_m2" in str(excinfo.value)
    assert str(line_count) in str(excinfo.value)
    assert excinfo.value.field == "dsc_area_m2"


def test_invalid_ewf_names_field():
    with pytest.raises(SpecValidationError) as excinfo:
        parse_specs(MINIMAL_SPEC.replace("ewf = 0.5", "ewf = 1.2"))
    assert excinfo.value.field == "ewf"
    assert excinfo.value.name == "demo"


def test_duplicate_aircraft_name():
    text = MINIMAL_SPEC + "\n" + MINIMAL_SPEC.split("\n", 2)[2]
    with pytest.raises(SpecValidationError) as excinfo:
        parse_specs(text)
    assert "duplicate" in str(excinfo.value)
    assert "demo" in str(excinfo.value)


def test_duplicate_key_in_section():
    with pytest.raises(SpecParseError):
        parse_specs(MINIMAL_SPEC + "ewf = 0.4\n")


def test_missing_required_key():
    with pytest.raises(SpecValidationError) as excinfo:
        parse_specs(MINIMAL_SPEC.replace("fom = 0.7\n", ""))
    assert excinfo.value.field == "fom"


def test_missing_format_version():
    with pytest.raises(SpecValidationError) as excinfo:
        parse_specs(MINIMAL_SPEC.replace("format_version = 1\n", ""))
    assert excinfo.value.field == "format_version"


def test_unsupported_format_version():
    with pytest.raises(SpecValidationError):
        parse_specs(MINIMAL_SPEC.replace("format_version = 1", "format_version = 2"))


def test_bad_propulsion_value():
    with pytest.raises(SpecValidationError) as excinfo:
        parse_specs(MINIMAL_SPEC.replace("open_rotor", "jet"))
    assert excinfo.value.field == "propulsion"


def test_parse_error_reports_line_and_column():
    with pytest.raises(SpecParseError) as excinfo:
        parse_specs(MINIMAL_SPEC.replace("fom = 0.7", "fom = seven"))
    assert excinfo.value.line == 8
    assert excinfo.value.column == 7


def test_malformed_section_header():
    with pytest.raises(SpecParseError) as excinfo:
        parse_specs("format_version = 1\n[plane:demo]\n")
    assert excinfo.value.line == 2


def test_line_without_equals():
    with pytest.raises(SpecParseError) as excinfo:
        parse_specs("format_version = 1\n[aircraft:x]\njust words\n")
    assert excinfo.value.line == 3


def test_nautical_mile_convenience():
    text = MINIMAL_SPEC.replace("design_range_mi = 100", "design_range_nmi = 250")
    craft = parse_specs(text).aircraft[0]
    assert craft.design_range_mi == pytest.approx(250 * 1852.0 / 1609.344, rel=1e-12)


def test_both_range_keys_rejected():
    text = MINIMAL_SPEC.replace("design_range_mi = 100",
                                "design_range_mi = 100\ndesign_range_nmi = 87")
    with pytest.raises(SpecValidationError):
        parse_specs(text)


def test_partial_drag_polar_rejected():
    text = MINIMAL_SPEC + "drag_polar_cd0 = 0.03\n"
    with pytest.raises(SpecValidationError) as excinfo:
        parse_specs(text)
    assert "drag_polar" in str(excinfo.value)


def test_full_drag_polar_parses_and_round_trips():
    text = (MINIMAL_SPEC
            + "drag_polar_cd0 = 0.03\ndrag_polar_k = 0.045\n"
            + "drag_polar_wing_area_m2 = 10\n")
    doc = parse_specs(text)
    polar = doc.aircraft[0].drag_polar
    assert polar is not None and polar.induced_factor == 0.045
    assert parse_specs(dump_specs(doc)) == doc


def test_defaults_section_applies_and_overrides():
    text = MINIMAL_SPEC.replace(
        "format_version = 1",
        "format_version = 1\n\n[defaults]\nhover_altitude_m = 50\n"
        "payload_per_seat_kg = 90")
    doc = parse_specs(text)
    craft = doc.aircraft[0]
    assert craft.hover_altitude_m == 50.0
    assert craft.payload_per_seat_kg == 90.0
    # explicit key beats the default
    text2 = text + "hover_altitude_m = 20\n"
    assert parse_specs(text2).aircraft[0].hover_altitude_m == 20.0
    assert parse_specs(dump_specs(doc)) == doc


def test_unknown_defaults_key_rejected():
    text = MINIMAL_SPEC.replace("format_version = 1",
                                "format_version = 1\n\n[defaults]\ncolor = 3")
    with pytest.raises(SpecValidationError) as excinfo:
        parse_specs(text)
    assert "color" in str(excinfo.value)


def test_vehicle_section_parses():
    text = MINIMAL_SPEC + (
        "\n[vehicle:ev]\nkind = EV\nroad_consumption_wh_per_mi = 310.3\n"
        "circuity = 1.2\noccupancy = 1.67\nmax_occupancy = 4\n")
    doc = parse_specs(text)
    assert len(doc.vehicles) == 1
    assert doc.vehicles[0].occupancy == 1.67
    assert parse_specs(dump_specs(doc)) == doc


def test_vehicle_bad_kind():
    text = MINIMAL_SPEC + (
        "\n[vehicle:ev]\nkind = BUS\nroad_consumption_wh_per_mi = 310.3\n"
        "circuity = 1.2\noccupancy = 1.67\nmax_occupancy = 4\n")
    with pytest.raises(SpecValidationError) as excinfo:
        parse_specs(text)
    assert excinfo.value.field == "kind"


def test_shipped_fleet_file(shipped_doc):
    expected = [(1, 100.0), (5, 150.0), (7, 172.0), (6, 288.0), (2, 60.0)]
    assert [(a.seats, a.design_range_mi) for a in shipped_doc.aircraft] == expected
    assert len(shipped_doc.vehicles) == 5
    assert parse_specs(dump_specs(shipped_doc)) == shipped_doc


# -- packs ----------------------------------------------------------------------

PACK_TEXT = """\
name,category,specific_energy_Wh_per_kg,specific_power_W_per_kg
alpha,Current Li-ion,155,650
beta,Novel/prototype Li-ion,300,900
gamma,Advanced,430,1500
"""


def test_pack_parse_order_preserved():
    packs = parse_packs(PACK_TEXT)
    assert [p.name for p in packs] == ["alpha", "beta", "gamma"]
    assert packs[0].category is PackCategory.CURRENT_LI_ION
    assert packs[1].specific_power_w_per_kg == 900.0


def test_pack_header_only_gives_empty_list():
    assert parse_packs(PACK_TEXT.splitlines()[0] + "\n") == []


def test_pack_category_labels_are_case_sensitive():
    with pytest.raises(DataError) as excinfo:
        parse_packs(PACK_TEXT.replace("Current Li-ion", "current li-ion"))
    assert "'current li-ion'" in str(excinfo.value)


def test_pack_non_numeric_metric_reports_row():
    with pytest.raises(DataError) as excinfo:
        parse_packs(PACK_TEXT.replace("300", "many"))
    assert "row 3" in str(excinfo.value)


def test_pack_bad_header():
    with pytest.raises(DataError):
        parse_packs("name,type,energy,power\na,Current Li-ion,1,2\n")


def test_pack_round_trip(tmp_path, shipped_packs):
    text = dump_packs(shipped_packs)
    assert parse_packs(text) == shipped_packs
    path = tmp_path / "packs.csv"
    path.write_text(text, encoding="utf-8")
    assert load_packs(path) == shipped_packs


def test_shipped_packs_load(shipped_packs):
    assert len(shipped_packs) == 10
    assert {p.category for p in shipped_packs} == set(PackCategory)


def test_builtin_paths_exist():
    import os
    assert os.path.exists(builtin_spec_path())
    assert os.path.exists(builtin_packs_path())


# -- result tables ---------------------------------------------------------------

def table_fixture():
    return ResultTable.create(
        [("range_mi", "mi"), ("energy", "Wh/passenger-mi"), ("label", "-")],
        [(10.0, 1.0 / 3.0, "a"), (20.0, 12345.678901234567, "b"),
         (30.0, None, "c")])


def test_write_table_header_and_round_trip(tmp_path):
    table = table_fixture()
    path = tmp_path / "out.csv"
    write_table(table, path)
    text = path.read_text(encoding="utf-8")
    assert text.splitlines()[0] == "range_mi(mi),energy(Wh/passenger-mi),label(-)"
    assert text.endswith("\n")

    back = read_table(path)
    assert back.columns == table.columns
    for original, parsed in zip(table.rows, back.rows):
        assert parsed == original


def test_write_table_empty_rows(tmp_path):
    table = ResultTable.create([("x", "m")], [])
    path = tmp_path / "empty.csv"
    write_table(table, path)
    assert path.read_text(encoding="utf-8") == "x(m)\n"


def test_delimiters_produce_identical_values(tmp_path):
    table = table_fixture()
    comma = tmp_path / "t.csv"
    tab = tmp_path / "t.tsv"
    write_table(table, comma, ",")
    write_table(table, tab, "\t")
    assert (comma.read_text(encoding="utf-8").replace(",", "\t")
            == tab.read_text(encoding="utf-8"))
    assert read_table(tab, "\t").rows == read_table(comma, ",").rows


def test_table_seventeen_digit_precision():
    buffer = io.StringIO()
    value = math.pi * 1e5
    write_table(ResultTable.create([("v", "W")], [(value,)]), buffer)
    parsed = read_table(io.StringIO(buffer.getvalue()))
    assert parsed.rows[0][0] == value


def test_table_validation_errors():
    with pytest.raises(DataError):
        ResultTable.create([("x", "")], [])
    with pytest.raises(DataError):
        ResultTable.create([("x", "m")], [(1.0, 2.0)])
    with pytest.raises(DataError):
        ResultTable.create([("x", "m")], [(float("nan"),)])
    with pytest.raises(DataError):
        ResultTable.create([("x", "m")], [(float("inf"),)])


def test_table_column_values():
    table = table_fixture()
    assert table.column_values("range_mi") == [10.0, 20.0, 30.0]
    with pytest.raises(DataError):
        table.column_values("missing")
