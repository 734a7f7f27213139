"""Domain types and the built-in technology registry.

All types are frozen dataclasses: immutable after construction and safe to
share across threads. Constructors enforce the invariants, so any instance
that exists is valid.
"""

from __future__ import annotations

from dataclasses import dataclass, field, replace
from enum import Enum
from typing import Mapping, Optional, Sequence

from .errors import ValidationError

HOURS_PER_YEAR = 8760.0


class Technology(str, Enum):
    """Electrolysis technology identifiers (closed enumeration)."""

    ALKALINE = "Alkaline"
    PEM = "PEM"
    SOEC = "SOEC"


class LearningCase(str, Enum):
    """Which learning-rate column a projection scenario uses."""

    APS = "APS"
    NZE = "NZE"


# Pathway labels used in result tables. Electrolysis pathways reuse the
# Technology values; SMR pathways are plain strings.
PATHWAY_SMR = "SMR"
PATHWAY_SMR_CCS = "SMR+CCS"
ELECTROLYSIS_PATHWAYS = tuple(t.value for t in Technology)
ALL_PATHWAYS = ELECTROLYSIS_PATHWAYS + (PATHWAY_SMR, PATHWAY_SMR_CCS)


def _require(cond: bool, msg: str) -> None:
    if not cond:
        raise ValidationError(msg)


@dataclass(frozen=True)
class TechnologyParams:
    """Economic and physical parameters of one electrolysis technology.

    Units: cumulative_production_base MW, capacity kW, lifetime in
    thousands of operating hours, efficiency kWh per kg H2, unit_system_cost
    USD/kW, unit_om_cost USD/yr. Rates are dimensionless fractions.
    """

    name: Technology
    learning_rate_aps: float
    learning_rate_nze: float
    cumulative_production_base: float
    capacity: float
    lifetime: float
    efficiency: float
    unit_system_cost: float
    unit_om_cost: float
    discount_rate: float

    def __post_init__(self) -> None:
        for attr in ("learning_rate_aps", "learning_rate_nze"):
            v = getattr(self, attr)
            _require(0.0 < v < 1.0, f"{self.name}: {attr} must be in (0, 1), got {v}")
        # Unit costs and the discount rate may be zero: scenario projections
        # drive O&M to zero and the zero-discount limit is meaningful.
        _require(0.0 <= self.discount_rate < 1.0,
                 f"{self.name}: discount_rate must be in [0, 1), got {self.discount_rate}")
        _require(self.unit_system_cost >= 0.0,
                 f"{self.name}: unit_system_cost must be >= 0")
        _require(self.unit_om_cost >= 0.0, f"{self.name}: unit_om_cost must be >= 0")
        for attr in ("cumulative_production_base", "capacity", "lifetime", "efficiency"):
            _require(getattr(self, attr) > 0.0, f"{self.name}: {attr} must be > 0")

    def learning_rate(self, case: LearningCase) -> float:
        return self.learning_rate_aps if case is LearningCase.APS else self.learning_rate_nze


@dataclass(frozen=True)
class StateEnergyProfile:
    """One state's industrial energy prices and grid carbon intensity."""

    state: str
    electricity_price: float  # USD/kWh
    gas_price: float  # USD/MMBtu
    grid_carbon_intensity: float  # kg CO2e/kWh
    vintage_year: int = 2020

    def __post_init__(self) -> None:
        _require(len(self.state) == 2 and self.state.isalpha() and self.state.isupper(),
                 f"state code must be a two-letter postal code, got {self.state!r}")
        _require(self.electricity_price > 0.0,
                 f"{self.state}: electricity_price must be > 0")
        _require(self.gas_price > 0.0, f"{self.state}: gas_price must be > 0")
        _require(self.grid_carbon_intensity >= 0.0,
                 f"{self.state}: grid_carbon_intensity must be >= 0")


@dataclass(frozen=True)
class LcohBreakdown:
    """Discounted lifetime costs, hydrogen output, and the resulting $/kg."""

    capital_cost: float  # USD
    om_cost: float  # USD
    electricity_cost: float  # USD
    hydrogen_production: float  # kg H2
    lcoh: float  # USD/kg H2

    def __post_init__(self) -> None:
        for attr in ("capital_cost", "om_cost", "electricity_cost",
                     "hydrogen_production", "lcoh"):
            _require(getattr(self, attr) >= 0.0, f"{attr} must be >= 0")

    @property
    def total_cost(self) -> float:
        return self.capital_cost + self.om_cost + self.electricity_cost


@dataclass(frozen=True)
class SmrParams:
    """Affine SMR cost surrogate plus the leakage emissions anchor table.

    emissions_anchors rows are (methane leakage fraction, kg CO2e/kg H2
    without CCS, kg CO2e/kg H2 with 90% CCS), strictly increasing in leakage.
    """

    base_cost: float  # USD/kg H2
    gas_sensitivity: float  # USD/kg per USD/MMBtu
    electricity_sensitivity: float  # USD/kg per USD/kWh
    ccs_adder: float  # USD/kg H2
    emissions_anchors: tuple[tuple[float, float, float], ...]
    leakage_rate: float

    def __post_init__(self) -> None:
        _require(self.ccs_adder >= 0.0, "ccs_adder must be >= 0")
        _require(self.gas_sensitivity >= 0.0, "gas_sensitivity must be >= 0")
        _require(self.electricity_sensitivity >= 0.0,
                 "electricity_sensitivity must be >= 0")
        anchors = tuple(tuple(a) for a in self.emissions_anchors)
        object.__setattr__(self, "emissions_anchors", anchors)
        _require(len(anchors) >= 2, "need at least 2 emissions anchors")
        leaks = [a[0] for a in anchors]
        _require(all(x < y for x, y in zip(leaks, leaks[1:])),
                 "anchor leakage values must be strictly increasing")
        _require(all(len(a) == 3 for a in anchors),
                 "each anchor must be (leakage, ci_no_ccs, ci_ccs)")
        _require(self.leakage_rate >= 0.0, "leakage_rate must be >= 0")


@dataclass(frozen=True)
class PriceRule:
    """How a scenario maps a state's dataset electricity price to the price
    actually paid: pass through, fix a value, or scale by a multiplier."""

    kind: str  # "dataset" | "fixed" | "multiplier"
    value: Optional[float] = None

    KINDS = ("dataset", "fixed", "multiplier")

    def __post_init__(self) -> None:
        _require(self.kind in self.KINDS, f"unknown price rule kind {self.kind!r}")
        if self.kind == "dataset":
            _require(self.value is None, "dataset price rule takes no value")
        else:
            _require(self.value is not None and self.value >= 0.0,
                     f"{self.kind} price rule needs a value >= 0")

    @classmethod
    def as_dataset(cls) -> "PriceRule":
        return cls("dataset")

    @classmethod
    def fixed(cls, usd_per_kwh: float) -> "PriceRule":
        return cls("fixed", usd_per_kwh)

    @classmethod
    def multiplier(cls, fraction: float) -> "PriceRule":
        return cls("multiplier", fraction)


@dataclass(frozen=True)
class GridTrajectory:
    """Grid carbon intensity through time: constant, or linear to zero by
    zero_year."""

    kind: str  # "constant" | "linear_to_zero"
    zero_year: Optional[int] = None

    KINDS = ("constant", "linear_to_zero")

    def __post_init__(self) -> None:
        _require(self.kind in self.KINDS, f"unknown trajectory kind {self.kind!r}")
        if self.kind == "linear_to_zero":
            _require(self.zero_year is not None, "linear_to_zero needs zero_year")
        else:
            _require(self.zero_year is None, "constant trajectory takes no zero_year")

    @classmethod
    def constant(cls) -> "GridTrajectory":
        return cls("constant")

    @classmethod
    def linear_to_zero(cls, zero_year: int) -> "GridTrajectory":
        return cls("linear_to_zero", zero_year)


@dataclass(frozen=True)
class Scenario:
    """A named projection case: target year, learning assumptions, price
    rule, capacity factor and grid trajectory.

    cumulative_production_target maps each technology to its assumed
    installed capacity (MW) at target_year. lifetime_override (thousand
    hours) and unit_om_cost_override (USD/yr) optionally replace the base
    values during projection; the shipped 2050 scenario uses them to make
    fixed costs negligible.
    """

    name: str
    target_year: int
    learning_case: LearningCase
    cumulative_production_target: Mapping[Technology, float]
    electricity_price_rule: PriceRule = field(default_factory=PriceRule.as_dataset)
    capacity_factor: float = 1.0
    grid_trajectory: GridTrajectory = field(default_factory=GridTrajectory.constant)
    lifetime_override: Optional[Mapping[Technology, float]] = None
    unit_om_cost_override: Optional[Mapping[Technology, float]] = None

    def __post_init__(self) -> None:
        _require(bool(self.name), "scenario needs a name")
        _require(0.0 < self.capacity_factor <= 1.0,
                 f"capacity_factor must be in (0, 1], got {self.capacity_factor}")
        object.__setattr__(self, "cumulative_production_target",
                           dict(self.cumulative_production_target))
        for tech, mw in self.cumulative_production_target.items():
            _require(mw > 0.0, f"{self.name}: cumulative target for {tech} must be > 0")
        if self.lifetime_override is not None:
            object.__setattr__(self, "lifetime_override", dict(self.lifetime_override))
            for tech, khr in self.lifetime_override.items():
                _require(khr > 0.0, f"{self.name}: lifetime override for {tech} must be > 0")
        if self.unit_om_cost_override is not None:
            object.__setattr__(self, "unit_om_cost_override",
                               dict(self.unit_om_cost_override))
            for tech, om in self.unit_om_cost_override.items():
                _require(om >= 0.0, f"{self.name}: O&M override for {tech} must be >= 0")

    def validate_against(self, registry: Sequence[TechnologyParams],
                         base_year: int) -> None:
        """Cross-checks that need the registry and dataset vintage."""
        _require(self.target_year >= base_year,
                 f"{self.name}: target_year {self.target_year} before base year {base_year}")
        by_name = {p.name: p for p in registry}
        for tech, mw in self.cumulative_production_target.items():
            base = by_name[tech].cumulative_production_base
            _require(mw >= base,
                     f"{self.name}: cumulative target {mw} MW for {tech.value} "
                     f"below 2020 base {base} MW")
        if self.grid_trajectory.kind == "linear_to_zero":
            _require(self.grid_trajectory.zero_year > base_year,
                     f"{self.name}: zero_year must be after base year {base_year}")


def default_registry() -> list[TechnologyParams]:
    """The built-in technology parameter set (IRENA/IEA/company data)."""
    return [
        TechnologyParams(
            name=Technology.ALKALINE,
            learning_rate_aps=0.145, learning_rate_nze=0.140,
            cumulative_production_base=20_000.0, capacity=10_000.0,
            lifetime=60.0, efficiency=56.0,
            unit_system_cost=750.0, unit_om_cost=1_800.0, discount_rate=0.07,
        ),
        TechnologyParams(
            name=Technology.PEM,
            learning_rate_aps=0.140, learning_rate_nze=0.135,
            cumulative_production_base=90.0, capacity=10_000.0,
            lifetime=75.0, efficiency=51.0,
            unit_system_cost=1_200.0, unit_om_cost=1_500.0, discount_rate=0.07,
        ),
        TechnologyParams(
            name=Technology.SOEC,
            learning_rate_aps=0.105, learning_rate_nze=0.100,
            cumulative_production_base=2.0, capacity=1_000.0,
            lifetime=40.0, efficiency=44.0,
            unit_system_cost=2_500.0, unit_om_cost=20_000.0, discount_rate=0.07,
        ),
    ]


def default_smr_params() -> SmrParams:
    """Surrogate SMR cost coefficients and the leakage emissions table.

    The cost coefficients are a calibrated affine stand-in for the NREL H2A
    model (only gas and electricity prices vary in this analysis), chosen so
    the reference-dataset mean lands near $1/kg without CCS. The anchor rows
    sit at the 0.2%/1.5%/8% leakage rates of the underlying LCA study;
    interpolating at the default 3.0% leakage gives 12.9 (no CCS) and
    5.3 (90% CCS) kg CO2e per kg H2.
    """
    return SmrParams(
        base_cost=0.32,
        gas_sensitivity=0.16,
        electricity_sensitivity=0.03,
        ccs_adder=0.4,
        emissions_anchors=(
            (0.002, 10.0, 2.6),
            (0.015, 11.4, 3.8),
            (0.080, 17.9, 10.3),
        ),
        leakage_rate=0.030,
    )


def default_scenarios() -> list[Scenario]:
    """The two shipped scenarios: the 2020 snapshot and the 2050 projection.

    The 2050 cumulative-production targets, doubled lifetimes and zeroed O&M
    are calibration values (documented in the README), not measured data:
    they are set so the projected national averages land on the published
    2050 cost benchmarks with fixed costs near zero.
    """
    base_targets = {Technology.ALKALINE: 20_000.0, Technology.PEM: 90.0,
                    Technology.SOEC: 2.0}
    return [
        Scenario(
            name="base-2020",
            target_year=2020,
            learning_case=LearningCase.APS,
            cumulative_production_target=base_targets,
        ),
        Scenario(
            name="aps-2050",
            target_year=2050,
            learning_case=LearningCase.APS,
            cumulative_production_target={
                Technology.ALKALINE: 1.3e9,
                Technology.PEM: 8.0e4,
                Technology.SOEC: 4.0e7,
            },
            lifetime_override={Technology.ALKALINE: 120.0, Technology.PEM: 150.0,
                               Technology.SOEC: 80.0},
            unit_om_cost_override={t: 0.0 for t in Technology},
        ),
    ]


def with_overrides(params: TechnologyParams, **changes) -> TechnologyParams:
    """Copy params with selected fields replaced (re-validates)."""
    return replace(params, **changes)
