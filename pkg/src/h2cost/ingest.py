"""File ingestion: state datasets (CSV) and model configuration (JSON).

One canonical units convention in files: USD/kWh, USD/MMBtu, kg CO2e/kWh.
No unit auto-detection. Every malformed input raises a structured error;
a partially-loaded dataset is never returned.
"""

from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass, fields as dc_fields
from importlib import resources
from pathlib import Path
from typing import Optional, Sequence, Union

from .errors import SchemaError, ValidationError
from .model import (
    GridTrajectory,
    LearningCase,
    PriceRule,
    Scenario,
    SmrParams,
    StateEnergyProfile,
    Technology,
    TechnologyParams,
    default_registry,
    default_scenarios,
    default_smr_params,
    with_overrides,
)

CSV_COLUMNS = ("state", "electricity_usd_per_kwh", "gas_usd_per_mmbtu",
               "grid_ci_kg_per_kwh")

REFERENCE_DATASET_NAME = "state_profiles_2020.csv"


@dataclass(frozen=True)
class Dataset:
    """An immutable collection of state profiles for one data vintage."""

    profiles: tuple[StateEnergyProfile, ...]
    vintage_year: int
    source_notes: str = ""

    def __post_init__(self) -> None:
        object.__setattr__(self, "profiles", tuple(self.profiles))
        if not self.profiles:
            raise ValidationError("dataset must contain at least one profile")
        seen = set()
        for p in self.profiles:
            if p.state in seen:
                raise ValidationError(f"duplicate state code {p.state}")
            seen.add(p.state)

    def profile(self, state: str) -> StateEnergyProfile:
        for p in self.profiles:
            if p.state == state:
                return p
        raise KeyError(state)

    @property
    def states(self) -> tuple[str, ...]:
        return tuple(p.state for p in self.profiles)


def _parse_float(raw: str, state: str, column: str) -> float:
    try:
        return float(raw)
    except ValueError as exc:
        raise SchemaError(
            f"state {state}: column {column!r} is not a number: {raw!r}") from exc


def _profiles_from_reader(reader: csv.DictReader, vintage_year: int,
                          strict: bool) -> list[StateEnergyProfile]:
    header = reader.fieldnames or []
    for col in CSV_COLUMNS:
        if col not in header:
            raise SchemaError(f"missing required column {col!r}")
    unknown = [c for c in header if c not in CSV_COLUMNS]
    if unknown:
        raise SchemaError(f"unknown columns {unknown}")
    profiles = []
    for row in reader:
        state = (row.get("state") or "").strip()
        values = {c: (row.get(c) or "").strip() for c in CSV_COLUMNS[1:]}
        if strict:
            if not state or any(not v for v in values.values()):
                raise SchemaError(f"row {reader.line_num}: blank field (strict mode)")
        elif not state or any(not v for v in values.values()):
            continue  # partial-vintage row, tolerated in non-strict mode
        profiles.append(StateEnergyProfile(
            state=state,
            electricity_price=_parse_float(values["electricity_usd_per_kwh"],
                                           state, "electricity_usd_per_kwh"),
            gas_price=_parse_float(values["gas_usd_per_mmbtu"],
                                   state, "gas_usd_per_mmbtu"),
            grid_carbon_intensity=_parse_float(values["grid_ci_kg_per_kwh"],
                                               state, "grid_ci_kg_per_kwh"),
            vintage_year=vintage_year,
        ))
    return profiles


def load_state_profiles(path: Union[str, Path], vintage_year: int = 2020,
                        strict: bool = True) -> Dataset:
    """Load a state dataset from CSV, preserving row order.

    Column order in the file is free; the header is mandatory. In strict
    mode (default) any blank field is an error; otherwise incomplete rows
    are skipped.
    """
    path = Path(path)
    if not path.exists():
        raise SchemaError(f"dataset file not found: {path}")
    with path.open(newline="", encoding="utf-8") as fh:
        profiles = _profiles_from_reader(csv.DictReader(fh), vintage_year, strict)
    if not profiles:
        raise ValidationError(f"{path}: no usable rows")
    return Dataset(profiles=tuple(profiles), vintage_year=vintage_year,
                   source_notes=str(path))


def reference_dataset() -> Dataset:
    """The packaged 2020 reference dataset (51 rows: 50 states plus DC)."""
    ref = resources.files("h2cost.data").joinpath(REFERENCE_DATASET_NAME)
    with ref.open(newline="", encoding="utf-8") as fh:
        profiles = _profiles_from_reader(csv.DictReader(fh), 2020, strict=True)
    return Dataset(profiles=tuple(profiles), vintage_year=2020,
                   source_notes=f"packaged:{REFERENCE_DATASET_NAME}")


def write_state_profiles(dataset: Dataset, path: Union[str, Path]) -> None:
    """Canonical CSV emission: fixed column order, shortest-roundtrip floats.

    Loading the written file reproduces the dataset exactly, and writing it
    again is byte-identical.
    """
    path = Path(path)
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(CSV_COLUMNS)
    for p in dataset.profiles:
        writer.writerow([p.state, repr(p.electricity_price), repr(p.gas_price),
                         repr(p.grid_carbon_intensity)])
    path.write_text(buf.getvalue(), encoding="utf-8")


# --- configuration -----------------------------------------------------

_TECH_FIELDS = {f.name for f in dc_fields(TechnologyParams)} - {"name"}
_SMR_FIELDS = {f.name for f in dc_fields(SmrParams)}
_SCENARIO_KEYS = {"name", "target_year", "learning_case",
                  "cumulative_production_target", "electricity_price_rule",
                  "capacity_factor", "grid_trajectory", "lifetime_override",
                  "unit_om_cost_override"}


def _tech_by_name(name: str) -> Technology:
    try:
        return Technology(name)
    except ValueError as exc:
        raise SchemaError(f"unknown technology {name!r}") from exc


def _tech_map(section: dict, what: str) -> dict[Technology, float]:
    return {_tech_by_name(k): float(v) for k, v in section.items()}


def _parse_price_rule(obj: dict) -> PriceRule:
    unknown = set(obj) - {"kind", "value"}
    if unknown:
        raise SchemaError(f"unknown price rule keys {sorted(unknown)}")
    return PriceRule(kind=obj.get("kind", "dataset"), value=obj.get("value"))


def _parse_trajectory(obj: dict) -> GridTrajectory:
    unknown = set(obj) - {"kind", "zero_year"}
    if unknown:
        raise SchemaError(f"unknown trajectory keys {sorted(unknown)}")
    return GridTrajectory(kind=obj.get("kind", "constant"),
                          zero_year=obj.get("zero_year"))


def _parse_scenario(obj: dict) -> Scenario:
    unknown = set(obj) - _SCENARIO_KEYS
    if unknown:
        raise SchemaError(f"scenario {obj.get('name', '?')!r}: "
                          f"unknown keys {sorted(unknown)}")
    for key in ("name", "target_year", "learning_case",
                "cumulative_production_target"):
        if key not in obj:
            raise SchemaError(f"scenario missing required key {key!r}")
    try:
        case = LearningCase(obj["learning_case"])
    except ValueError as exc:
        raise SchemaError(f"unknown learning case {obj['learning_case']!r}") from exc
    kwargs = dict(
        name=obj["name"],
        target_year=int(obj["target_year"]),
        learning_case=case,
        cumulative_production_target=_tech_map(
            obj["cumulative_production_target"], "cumulative target"),
    )
    if "electricity_price_rule" in obj:
        kwargs["electricity_price_rule"] = _parse_price_rule(obj["electricity_price_rule"])
    if "capacity_factor" in obj:
        kwargs["capacity_factor"] = float(obj["capacity_factor"])
    if "grid_trajectory" in obj:
        kwargs["grid_trajectory"] = _parse_trajectory(obj["grid_trajectory"])
    for key in ("lifetime_override", "unit_om_cost_override"):
        if obj.get(key) is not None:
            kwargs[key] = _tech_map(obj[key], key)
    return Scenario(**kwargs)


def load_config(path: Union[str, Path, None]) -> tuple[
        list[TechnologyParams], SmrParams, list[Scenario]]:
    """Load (registry, SMR params, scenarios) from a JSON config file.

    Missing sections fall back to the built-in defaults. The `technologies`
    section maps technology names to field overrides of the default entry;
    the `smr` section overrides surrogate fields; a provided `scenarios`
    list replaces the default scenario list entirely. Unknown keys are
    rejected to catch typos.
    """
    registry = default_registry()
    smr_params = default_smr_params()
    scenarios = default_scenarios()
    if path is None:
        return registry, smr_params, scenarios
    path = Path(path)
    if not path.exists():
        raise SchemaError(f"config file not found: {path}")
    try:
        raw = json.loads(path.read_text(encoding="utf-8") or "{}")
    except json.JSONDecodeError as exc:
        raise SchemaError(f"{path}: invalid JSON: {exc}") from exc
    if not isinstance(raw, dict):
        raise SchemaError(f"{path}: top level must be a JSON object")
    unknown = set(raw) - {"technologies", "smr", "scenarios"}
    if unknown:
        raise SchemaError(f"unknown config sections {sorted(unknown)}")

    if "technologies" in raw:
        overrides = raw["technologies"]
        if not isinstance(overrides, dict):
            raise SchemaError("'technologies' must map name -> field overrides")
        by_name = {p.name: p for p in registry}
        for name, fields in overrides.items():
            tech = _tech_by_name(name)
            bad = set(fields) - _TECH_FIELDS
            if bad:
                raise SchemaError(f"technology {name}: unknown fields {sorted(bad)}")
            by_name[tech] = with_overrides(
                by_name[tech], **{k: float(v) for k, v in fields.items()})
        registry = [by_name[t] for t in Technology]

    if "smr" in raw:
        fields = raw["smr"]
        bad = set(fields) - _SMR_FIELDS
        if bad:
            raise SchemaError(f"smr section: unknown fields {sorted(bad)}")
        merged = {f.name: getattr(smr_params, f.name) for f in dc_fields(SmrParams)}
        merged.update(fields)
        merged["emissions_anchors"] = tuple(
            tuple(float(x) for x in row) for row in merged["emissions_anchors"])
        smr_params = SmrParams(**merged)

    if "scenarios" in raw:
        if not isinstance(raw["scenarios"], list):
            raise SchemaError("'scenarios' must be a list")
        scenarios = [_parse_scenario(obj) for obj in raw["scenarios"]]

    return registry, smr_params, scenarios


def registry_to_json(registry: Sequence[TechnologyParams]) -> str:
    """Serialize a registry to canonical JSON (round-trips exactly)."""
    payload = [
        {"name": p.name.value,
         **{f: getattr(p, f) for f in sorted(_TECH_FIELDS)}}
        for p in registry
    ]
    return json.dumps(payload, indent=2, sort_keys=True)


def registry_from_json(text: str) -> list[TechnologyParams]:
    return [
        TechnologyParams(name=_tech_by_name(obj["name"]),
                         **{k: v for k, v in obj.items() if k != "name"})
        for obj in json.loads(text)
    ]
