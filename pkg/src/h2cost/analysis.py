"""Cross-state, cross-technology analytics: result tables, averages,
rankings, threshold counts and the cost-carbon Pareto frontier."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from . import electrolysis, smr
from .errors import H2CostError, ValidationError
from .ingest import Dataset
from .model import (
    ELECTROLYSIS_PATHWAYS,
    PATHWAY_SMR,
    PATHWAY_SMR_CCS,
    Scenario,
    SmrParams,
    TechnologyParams,
)
from .scenario import effective_electricity_price, grid_ci_at, project_params


@dataclass(frozen=True)
class StateResult:
    """One (state, pathway) cell of the results grid."""

    state: str
    pathway: str
    lcoh: float  # USD/kg H2
    carbon_intensity: float  # kg CO2e/kg H2

    def __post_init__(self) -> None:
        if self.lcoh < 0.0 or self.carbon_intensity < 0.0:
            raise ValidationError(
                f"{self.state}/{self.pathway}: metrics must be >= 0")


def state_table(dataset: Dataset, registry: Sequence[TechnologyParams],
                smr_params: SmrParams, scenario: Scenario) -> list[StateResult]:
    """One StateResult per state x pathway under a scenario.

    Pathways: the three electrolysis technologies plus SMR and SMR+CCS.
    SMR emissions depend only on the leakage assumption, not the state.
    """
    projected = [project_params(p, scenario) for p in registry]
    smr_ci = smr.smr_emissions(smr_params, with_ccs=False).carbon_intensity
    ccs_ci = smr.smr_emissions(smr_params, with_ccs=True).carbon_intensity
    results: list[StateResult] = []
    for profile in dataset.profiles:
        try:
            price = effective_electricity_price(
                profile, scenario.electricity_price_rule)
            grid_ci = grid_ci_at(profile.grid_carbon_intensity,
                                 scenario.grid_trajectory,
                                 dataset.vintage_year, scenario.target_year)
            for tech in projected:
                breakdown = electrolysis.lcoh(tech, price,
                                              scenario.capacity_factor)
                ci = electrolysis.carbon_intensity(grid_ci, tech, profile.state)
                results.append(StateResult(
                    state=profile.state, pathway=tech.name.value,
                    lcoh=breakdown.lcoh,
                    carbon_intensity=ci.carbon_intensity))
            results.append(StateResult(
                state=profile.state, pathway=PATHWAY_SMR,
                lcoh=smr.smr_lcoh(smr_params, profile, with_ccs=False),
                carbon_intensity=smr_ci))
            results.append(StateResult(
                state=profile.state, pathway=PATHWAY_SMR_CCS,
                lcoh=smr.smr_lcoh(smr_params, profile, with_ccs=True),
                carbon_intensity=ccs_ci))
        except H2CostError as exc:
            raise type(exc)(f"state {profile.state}: {exc}") from exc
    return results


def _select(results: Iterable[StateResult], pathway: str) -> list[StateResult]:
    return [r for r in results if r.pathway == pathway]


def national_average(results: Iterable[StateResult],
                     pathway: str) -> tuple[float, float]:
    """Unweighted means of (LCOH, carbon intensity) over states."""
    rows = _select(results, pathway)
    if not rows:
        raise ValidationError(f"no results for pathway {pathway!r}")
    n = len(rows)
    return (sum(r.lcoh for r in rows) / n,
            sum(r.carbon_intensity for r in rows) / n)


def _dominates(a: StateResult, b: StateResult) -> bool:
    """a dominates b: weakly better in both objectives, strictly in one."""
    return (a.lcoh <= b.lcoh and a.carbon_intensity <= b.carbon_intensity
            and (a.lcoh < b.lcoh or a.carbon_intensity < b.carbon_intensity))


def pareto_frontier(results: Sequence[StateResult]) -> list[StateResult]:
    """Points not dominated in (LCOH, carbon intensity), minimizing both.

    Sort by cost then sweep: a point joins the frontier iff its carbon
    intensity beats the best seen so far among strictly cheaper points.
    """
    order = sorted(results, key=lambda r: (r.lcoh, r.carbon_intensity,
                                           r.state, r.pathway))
    frontier: list[StateResult] = []
    best_ci = float("inf")
    i = 0
    while i < len(order):
        # handle cost ties as a block: ties cannot dominate each other on cost
        j = i
        while j < len(order) and order[j].lcoh == order[i].lcoh:
            j += 1
        block = order[i:j]
        block_best = min(r.carbon_intensity for r in block)
        for r in block:
            if r.carbon_intensity < best_ci and not any(
                    _dominates(o, r) for o in block):
                frontier.append(r)
        best_ci = min(best_ci, block_best)
        i = j
    return frontier


def rank_states(results: Iterable[StateResult], metric: str,
                pathway: str) -> list[StateResult]:
    """Ascending stable sort by a metric; ties broken by state code."""
    if metric not in ("lcoh", "carbon_intensity"):
        raise ValidationError(f"unknown metric {metric!r}")
    rows = _select(results, pathway)
    return sorted(rows, key=lambda r: (getattr(r, metric), r.state))


def count_below(results: Iterable[StateResult], pathway: str,
                threshold_ci: float) -> int:
    """Number of states whose pathway carbon intensity is below threshold."""
    return sum(1 for r in _select(results, pathway)
               if r.carbon_intensity < threshold_ci)


def electrolysis_results(results: Iterable[StateResult]) -> list[StateResult]:
    """Just the electrolysis pathway rows (frontier input in the figures)."""
    return [r for r in results if r.pathway in ELECTROLYSIS_PATHWAYS]
