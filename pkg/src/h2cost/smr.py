"""Steam-methane-reforming cost surrogate and leakage-adjusted emissions.

The cost side is an affine surrogate in the two prices that actually vary
across states (natural gas and electricity); the emissions side linearly
interpolates a methane-leakage anchor table, with separate columns for the
no-CCS and 90%-CCS plant configurations (CCS captures CO2 only, never the
leaked methane, which is why the CCS column is its own data series rather
than a 0.9 multiplier).
"""

from __future__ import annotations

from .electrolysis import EmissionsResult
from .errors import DomainError
from .model import PATHWAY_SMR, PATHWAY_SMR_CCS, SmrParams, StateEnergyProfile


def smr_lcoh(params: SmrParams, profile: StateEnergyProfile,
             with_ccs: bool) -> float:
    """Hydrogen cost in USD/kg for one state, with or without 90% capture."""
    cost = (params.base_cost
            + params.gas_sensitivity * profile.gas_price
            + params.electricity_sensitivity * profile.electricity_price)
    if with_ccs:
        cost += params.ccs_adder
    return cost


def smr_emissions(params: SmrParams, with_ccs: bool) -> EmissionsResult:
    """Lifecycle emissions at the configured methane leakage rate.

    Piecewise-linear interpolation of the anchor table; leakage rates
    outside the anchor range are rejected rather than extrapolated.
    """
    anchors = params.emissions_anchors
    leak = params.leakage_rate
    if leak < anchors[0][0] or leak > anchors[-1][0]:
        raise DomainError(
            f"leakage rate {leak} outside anchor range "
            f"[{anchors[0][0]}, {anchors[-1][0]}]")
    col = 2 if with_ccs else 1
    pathway = PATHWAY_SMR_CCS if with_ccs else PATHWAY_SMR
    for (x0, *v0), (x1, *v1) in zip(anchors, anchors[1:]):
        if x0 <= leak <= x1:
            t = (leak - x0) / (x1 - x0)
            value = v0[col - 1] + t * (v1[col - 1] - v0[col - 1])
            return EmissionsResult(carbon_intensity=value, pathway=pathway)
    raise AssertionError("unreachable: leakage inside range but no segment found")
