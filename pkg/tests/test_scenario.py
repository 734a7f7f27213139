import random

import pytest
from hypothesis import given, strategies as st

from h2cost import electrolysis as el
from h2cost.errors import DomainError
from h2cost.model import (
    GridTrajectory,
    LearningCase,
    PriceRule,
    Scenario,
    StateEnergyProfile,
    Technology,
    default_registry,
    with_overrides,
)
from h2cost.scenario import (
    average_crossover_year,
    breakeven_electricity_price,
    crossover_year,
    effective_electricity_price,
    grid_ci_at,
    project_params,
)
from h2cost.ingest import Dataset

REG = {p.name: p for p in default_registry()}


def scenario_for(targets, case=LearningCase.APS, **kw):
    return Scenario(name="t", target_year=2050, learning_case=case,
                    cumulative_production_target=targets, **kw)


class TestProjectParams:
    def test_target_equals_base_is_identity(self):
        sc = scenario_for({t: REG[t].cumulative_production_base for t in Technology})
        for params in REG.values():
            assert project_params(params, sc) == params

    def test_soec_ten_doublings(self):
        sc = scenario_for({Technology.SOEC: 2048.0})
        projected = project_params(REG[Technology.SOEC], sc)
        assert projected.unit_system_cost == pytest.approx(2500 * 0.895 ** 10)
        assert projected.lifetime == 40  # untouched without an override

    def test_overrides_applied(self):
        sc = scenario_for({Technology.PEM: 90.0},
                          lifetime_override={Technology.PEM: 150.0},
                          unit_om_cost_override={Technology.PEM: 0.0})
        projected = project_params(REG[Technology.PEM], sc)
        assert projected.lifetime == 150
        assert projected.unit_om_cost == 0
        assert projected.unit_system_cost == 1200  # ratio 1

    def test_chained_doublings_multiply(self):
        one = project_params(REG[Technology.PEM], scenario_for({Technology.PEM: 180.0}))
        two = project_params(one, scenario_for({Technology.PEM: 360.0}))
        direct = project_params(
            REG[Technology.PEM],
            scenario_for({Technology.PEM: 360.0}))
        # the cumulative base is never rewritten, so the second projection
        # re-counts doublings from 90 MW: two applies 0.86^1 then 0.86^2
        assert one.unit_system_cost == pytest.approx(1200 * 0.86, rel=1e-12)
        assert two.unit_system_cost == pytest.approx(
            one.unit_system_cost * 0.86 ** 2, rel=1e-9)
        assert direct.unit_system_cost == pytest.approx(1200 * 0.86 ** 2, rel=1e-12)


class TestEffectivePrice:
    PROFILE = StateEnergyProfile("WA", 0.05, 3.6, 0.09)

    def test_rules(self):
        assert effective_electricity_price(self.PROFILE, PriceRule.as_dataset()) == 0.05
        assert effective_electricity_price(self.PROFILE, PriceRule.multiplier(0.5)) == 0.025
        assert effective_electricity_price(self.PROFILE, PriceRule.fixed(0.02)) == 0.02
        assert effective_electricity_price(self.PROFILE, PriceRule.multiplier(1.0)) == 0.05


class TestGridCiAt:
    def test_linear_to_zero(self):
        traj = GridTrajectory.linear_to_zero(2035)
        assert grid_ci_at(0.3, traj, 2020, 2030) == pytest.approx(0.1)
        assert grid_ci_at(0.3, traj, 2020, 2035) == 0.0
        assert grid_ci_at(0.3, traj, 2020, 2050) == 0.0

    def test_constant(self):
        assert grid_ci_at(0.3, GridTrajectory.constant(), 2020, 2050) == 0.3

    def test_domain_errors(self):
        with pytest.raises(DomainError):
            grid_ci_at(0.3, GridTrajectory.linear_to_zero(2020), 2020, 2025)
        with pytest.raises(DomainError):
            grid_ci_at(0.3, GridTrajectory.constant(), 2020, 2019)

    @given(st.integers(2020, 2060), st.integers(2020, 2060))
    def test_non_increasing_and_non_negative(self, y1, y2):
        traj = GridTrajectory.linear_to_zero(2035)
        lo, hi = sorted((y1, y2))
        a = grid_ci_at(0.4, traj, 2020, lo)
        b = grid_ci_at(0.4, traj, 2020, hi)
        assert 0.0 <= b <= a


class TestBreakeven:
    def test_published_order_of_magnitude(self):
        # PEM driven to a ~0.34 $/kg fixed-cost floor: breakeven with a
        # 1.4 $/kg target lands at ~2 cents/kWh
        pem = REG[Technology.PEM]
        cheap = with_overrides(pem, unit_system_cost=360.0, unit_om_cost=0.0,
                               lifetime=150.0)
        floor = el.lcoh(cheap, 0.0).lcoh
        price = breakeven_electricity_price(cheap, 1.0, 1.4)
        assert price == pytest.approx((1.4 - floor) / 51, rel=1e-12)
        assert 0.015 < price < 0.025

    def test_target_at_floor_gives_zero(self):
        alk = REG[Technology.ALKALINE]
        floor = el.lcoh(alk, 0.0).lcoh
        assert breakeven_electricity_price(alk, 1.0, floor) == 0.0

    def test_unattainable_target_is_none(self):
        alk = REG[Technology.ALKALINE]
        assert breakeven_electricity_price(alk, 1.0, 0.01) is None

    def test_round_trip_on_random_draws(self):
        rng = random.Random(20)
        for _ in range(20):
            params = with_overrides(
                REG[Technology.PEM],
                unit_system_cost=rng.uniform(100, 2000),
                unit_om_cost=rng.uniform(0, 50_000),
                lifetime=rng.uniform(30, 150),
                efficiency=rng.uniform(40, 60),
            )
            cf = rng.uniform(0.3, 1.0)
            target = el.lcoh(params, 0.0, cf).lcoh + rng.uniform(0.0, 5.0)
            price = breakeven_electricity_price(params, cf, target)
            assert el.lcoh(params, price, cf).lcoh == pytest.approx(target, abs=1e-9)


def uniform_dataset(grid_ci, n=4):
    states = ["AA", "AB", "AC", "AD", "AE", "AF"][:n]
    return Dataset(
        profiles=tuple(StateEnergyProfile(s, 0.05, 3.0, grid_ci) for s in states),
        vintage_year=2020)


def brute_force_crossover(avg_ci, target, base, zero):
    for year in range(base, zero + 1):
        if avg_ci * (zero - year) / (zero - base) < target:
            return year
    return zero


class TestCrossover:
    def test_example_average_18(self):
        # a single pseudo-technology with the average efficiency gives the
        # documented 2025 crossing for an 18 kg/kg starting average
        tech = REG[Technology.ALKALINE]
        ds = uniform_dataset(18.0 / tech.efficiency)
        traj = GridTrajectory.linear_to_zero(2035)
        assert crossover_year(ds, tech, traj, 12.9) == 2025

    def test_already_below_returns_base_year(self):
        tech = REG[Technology.SOEC]
        ds = uniform_dataset(0.05)
        assert crossover_year(ds, tech, GridTrajectory.linear_to_zero(2035), 12.9) == 2020

    def test_soec_vs_ccs_by_2031(self, dataset):
        tech = REG[Technology.SOEC]
        year = crossover_year(dataset, tech, GridTrajectory.linear_to_zero(2035), 5.3)
        assert year <= 2031

    def test_constant_never_crosses(self):
        tech = REG[Technology.ALKALINE]
        ds = uniform_dataset(0.4)
        assert crossover_year(ds, tech, GridTrajectory.constant(), 12.9) is None

    @given(st.floats(0.05, 1.0), st.floats(1.0, 25.0), st.integers(2021, 2060))
    def test_matches_brute_force_scan(self, grid_ci, target, zero):
        tech = REG[Technology.PEM]
        ds = uniform_dataset(grid_ci)
        traj = GridTrajectory.linear_to_zero(zero)
        closed = crossover_year(ds, tech, traj, target)
        avg = grid_ci * tech.efficiency
        assert closed == brute_force_crossover(avg, target, 2020, zero)

    def test_average_over_registry_matches_mean_efficiency(self, dataset, registry):
        traj = GridTrajectory.linear_to_zero(2035)
        year = average_crossover_year(dataset, registry, traj, 12.9)
        mean_eff = sum(p.efficiency for p in registry) / 3
        mean_ci = sum(p.grid_carbon_intensity for p in dataset.profiles) / 51
        assert year == brute_force_crossover(mean_eff * mean_ci, 12.9, 2020, 2035)
