"""Power model: linear device profiles and every term of the objective.

All functions are pure: they evaluate the power drawn by a candidate
variable assignment against a topology.  The same per-device coefficients
feed the MILP objective (see :mod:`fogplace.model`), so the accounting
identity between a solver objective and :func:`total_power` is structural
for the proportional/idle coefficients and a genuine check for the
variable wiring.

Conventions
-----------
* Idle power of a device is charged once per activation (network node
  activation ``beta``, processing-node activation ``omega_d``, server count
  ``n_servers``, wavelength/fiber/port counts in the core), scaled by the
  device's idle-share ``delta`` and its node's PUE.
* The EDFA and regenerator proportional terms are evaluated per core link
  from the traffic carried on that link (the product form with the fiber
  count is ill-defined in a linear model; both forms coincide whenever at
  most one fiber is lit, which covers every reference workload).
"""

from __future__ import annotations

import math
from dataclasses import dataclass, fields
from typing import TYPE_CHECKING, Iterable, Mapping, Union

from .topology import (
    CoreParams,
    NetDeviceProfile,
    Node,
    NodeKind,
    ProcProfile,
    Topology,
)

if TYPE_CHECKING:  # pragma: no cover - import cycle guard for type checkers
    from .model import VariableSet


class OverloadError(ValueError):
    """Load above a device's capacity."""


class IncompleteSolutionError(ValueError):
    """A required variable group is missing from the assignment."""


class InvalidSolutionError(ValueError):
    """The assignment contradicts the model's structural rules."""


@dataclass(frozen=True)
class PowerBreakdown:
    """Wattage of every objective component; ``total`` is their sum."""

    core_net: float = 0.0
    metro_net: float = 0.0
    access_net: float = 0.0
    iot_net: float = 0.0
    proc_iot: float = 0.0
    proc_cf: float = 0.0
    proc_af: float = 0.0
    proc_mf: float = 0.0
    proc_dc: float = 0.0
    intra_dc_net: float = 0.0
    intra_mf_net: float = 0.0
    intra_cf_net: float = 0.0
    sync_overhead: float = 0.0

    @property
    def total(self) -> float:
        return (
            self.core_net
            + self.metro_net
            + self.access_net
            + self.iot_net
            + self.proc_iot
            + self.proc_cf
            + self.proc_af
            + self.proc_mf
            + self.proc_dc
            + self.intra_dc_net
            + self.intra_mf_net
            + self.intra_cf_net
            + self.sync_overhead
        )

    def __add__(self, other: "PowerBreakdown") -> "PowerBreakdown":
        return PowerBreakdown(
            **{
                f.name: getattr(self, f.name) + getattr(other, f.name)
                for f in fields(self)
            }
        )

    def as_dict(self) -> dict[str, float]:
        out = {f.name: getattr(self, f.name) for f in fields(self)}
        out["total"] = self.total
        return out


@dataclass(frozen=True)
class CoreDerived:
    """Amplifier/regenerator counts along one core fiber."""

    edfa_count_per_fiber: int
    regen_count: int

    def __post_init__(self) -> None:
        if self.edfa_count_per_fiber < 0 or self.regen_count < 0:
            raise ValueError("device counts must be non-negative")


def device_power(profile: Union[NetDeviceProfile, ProcProfile], load: float) -> float:
    """Linear power profile: slope * load + idle.

    ``load`` is Mbps for network profiles and MIPS for processing profiles.
    """
    capacity = profile.capacity
    if load < 0:
        raise OverloadError(f"load must be non-negative, got {load}")
    if load > capacity * (1 + 1e-12):
        raise OverloadError(f"load {load} exceeds capacity {capacity}")
    return (profile.p_max - profile.p_idle) / capacity * load + profile.p_idle


def edfa_count(distance_km: float, span_km: float) -> int:
    """EDFAs per fiber: one per span boundary plus the two terminal amps."""
    if distance_km <= 0 or span_km <= 0:
        raise ValueError("distance and span must be positive")
    return max(2, math.ceil(distance_km / span_km - 1) + 2)


def regen_count(distance_km: float, span_km: float) -> int:
    """Regenerators per wavelength on one fiber (0 below one regen span)."""
    if distance_km <= 0 or span_km <= 0:
        raise ValueError("distance and span must be positive")
    return max(0, math.floor(distance_km / span_km - 1))


def core_derived(core: CoreParams) -> CoreDerived:
    return CoreDerived(
        edfa_count_per_fiber=edfa_count(core.hop_distance_km, core.span_edfa_km),
        regen_count=regen_count(core.hop_distance_km, core.span_regen_km),
    )


# ---------------------------------------------------------------------------
# helpers shared with the model objective
# ---------------------------------------------------------------------------

def node_traffic_coefficient(node: Node, t: Topology) -> float:
    """W/Mbps charged against the node-traffic variable lambda_m."""
    kind = node.kind
    if kind is NodeKind.IOT_DEVICE:
        return node.net.energy_per_bit
    if kind is NodeKind.ONU:
        return node.pue * node.net.energy_per_bit
    if kind is NodeKind.OLT:
        return node.pue * node.net.energy_per_bit
    if kind is NodeKind.METRO_SWITCH:
        return node.pue * node.net.energy_per_bit
    if kind is NodeKind.METRO_ROUTER:
        return node.pue * t.metro_redundancy * node.net.energy_per_bit
    if kind is NodeKind.CORE_NODE:
        core = t.core
        return node.pue * (
            core.router_port.energy_per_bit
            + core.transponder.energy_per_bit
            + core.optical_switch.energy_per_bit
        )
    return 0.0  # DC nodes: network is modelled by the intra-node LAN terms


def node_activation_coefficient(node: Node, t: Topology) -> float:
    """W charged against the node-activation binary beta_m."""
    kind = node.kind
    if kind is NodeKind.IOT_DEVICE:
        return node.net.idle_share_delta * node.net.p_idle
    if kind in (NodeKind.ONU, NodeKind.OLT, NodeKind.METRO_SWITCH):
        return node.pue * node.net.idle_share_delta * node.net.p_idle
    if kind is NodeKind.METRO_ROUTER:
        return (
            node.pue
            * t.metro_redundancy
            * node.net.idle_share_delta
            * node.net.p_idle
        )
    if kind is NodeKind.CORE_NODE:
        core = t.core
        return node.pue * core.optical_switch.idle_share_delta * core.optical_switch.p_idle
    return 0.0


def _net_field_for(kind: NodeKind) -> str:
    if kind is NodeKind.CORE_NODE:
        return "core_net"
    if kind in (NodeKind.METRO_SWITCH, NodeKind.METRO_ROUTER):
        return "metro_net"
    if kind in (NodeKind.ONU, NodeKind.OLT):
        return "access_net"
    if kind is NodeKind.IOT_DEVICE:
        return "iot_net"
    raise KeyError(kind)


_PROC_FIELD = {
    NodeKind.IOT_DEVICE: "proc_iot",
    NodeKind.ONU: "proc_cf",
    NodeKind.OLT: "proc_af",
    NodeKind.METRO_SWITCH: "proc_mf",
    NodeKind.GP_DC: "proc_dc",
    NodeKind.SP_DC: "proc_dc",
}

_INTRA_FIELD = {
    NodeKind.ONU: "intra_cf_net",
    NodeKind.METRO_SWITCH: "intra_mf_net",
    NodeKind.GP_DC: "intra_dc_net",
    NodeKind.SP_DC: "intra_dc_net",
}


def intra_traffic_coefficient(node: Node) -> float:
    """W/Mbps charged against theta_d (traffic processed at node d)."""
    if node.intra is None:
        return 0.0
    coeff = 0.0
    if node.intra.router is not None:
        coeff += node.intra.router.energy_per_bit
    if node.intra.switch is not None:
        coeff += node.intra.switch.energy_per_bit
    return node.pue * coeff


def intra_activation_coefficient(node: Node) -> float:
    """W charged against omega_d for the intra-node LAN idle."""
    if node.intra is None:
        return 0.0
    coeff = 0.0
    if node.intra.router is not None:
        coeff += node.intra.router.idle_share_delta * node.intra.router.p_idle
    if node.intra.switch is not None:
        coeff += node.intra.switch.idle_share_delta * node.intra.switch.p_idle
    return node.pue * coeff


def proc_traffic_coefficient(node: Node) -> float:
    """W/MIPS charged against rho (and sync rho) hosted at node d."""
    assert node.proc is not None
    pue = node.pue if node.kind not in (NodeKind.IOT_DEVICE, NodeKind.ONU) else 1.0
    return pue * node.proc.energy_per_instruction


def proc_idle_coefficient(node: Node) -> float:
    """W charged against each activated server at node d."""
    assert node.proc is not None
    pue = node.pue if node.kind not in (NodeKind.IOT_DEVICE, NodeKind.ONU) else 1.0
    return pue * node.proc.p_idle


# ---------------------------------------------------------------------------
# term evaluators
# ---------------------------------------------------------------------------

def _require(sol: "VariableSet", *attrs: str) -> None:
    for attr in attrs:
        if getattr(sol, attr, None) is None:
            raise IncompleteSolutionError(f"solution is missing variable group {attr!r}")


def _core_link_traffic(sol: "VariableSet", t: Topology) -> dict[tuple[int, int], float]:
    """Traffic on each directed core-core link, summed over service flows."""
    core = set(t.core_nodes)
    loads: dict[tuple[int, int], float] = {}
    for m in t.core_nodes:
        for n in t.adjacency[m]:
            if n in core:
                loads[(m, n)] = 0.0
    for (s, d, m, n), value in sol.flow.items():
        if (m, n) in loads:
            loads[(m, n)] += value
    return loads


def network_power(sol: "VariableSet", t: Topology) -> PowerBreakdown:
    """Core, metro, access and IoT network power of an assignment."""
    _require(sol, "lambda_node", "beta", "w_mn", "f_mn", "ag", "flow")
    acc = {"core_net": 0.0, "metro_net": 0.0, "access_net": 0.0, "iot_net": 0.0}

    for node in t.nodes:
        if node.kind in (NodeKind.GP_DC, NodeKind.SP_DC):
            continue
        lam = sol.lambda_node.get(node.id, 0.0)
        beta = sol.beta.get(node.id, 0)
        field = _net_field_for(node.kind)
        acc[field] += node_traffic_coefficient(node, t) * lam
        acc[field] += node_activation_coefficient(node, t) * beta

    core = t.core
    derived = core_derived(core)
    pue_c = t.node(t.core_nodes[0]).pue if t.core_nodes else 1.0
    link_traffic = _core_link_traffic(sol, t)
    for m in t.core_nodes:
        acc["core_net"] += (
            pue_c
            * core.router_port.idle_share_delta
            * core.router_port.p_idle
            * sol.ag.get(m, 0)
        )
    for (m, n), traffic in link_traffic.items():
        w = sol.w_mn.get((m, n), 0)
        f = sol.f_mn.get((m, n), 0)
        acc["core_net"] += pue_c * (
            core.router_port.idle_share_delta * core.router_port.p_idle * w
            + core.transponder.idle_share_delta * core.transponder.p_idle * w
            + core.edfa.energy_per_bit * derived.edfa_count_per_fiber * traffic
            + core.edfa.idle_share_delta
            * core.edfa.p_idle
            * derived.edfa_count_per_fiber
            * f
            + core.regenerator.energy_per_bit * derived.regen_count * traffic
            + core.regenerator.idle_share_delta
            * core.regenerator.p_idle
            * derived.regen_count
            * w
        )
    return PowerBreakdown(**acc)


def processing_power(sol: "VariableSet", t: Topology) -> PowerBreakdown:
    """Server power (proportional per hosted MIPS plus idle per server)."""
    _require(sol, "rho", "n_servers")
    acc = {name: 0.0 for name in set(_PROC_FIELD.values())}
    proc_ids = set(t.processing_nodes)
    for (s, d), mips in sol.rho.items():
        if mips <= 0:
            continue
        if d not in proc_ids:
            raise InvalidSolutionError(f"rho[{s},{d}] allocated to a non-processing node")
        node = t.node(d)
        acc[_PROC_FIELD[node.kind]] += proc_traffic_coefficient(node) * mips
    for d, count in sol.n_servers.items():
        if count <= 0:
            continue
        if d not in proc_ids:
            raise InvalidSolutionError(f"n_servers[{d}] set on a non-processing node")
        node = t.node(d)
        acc[_PROC_FIELD[node.kind]] += proc_idle_coefficient(node) * count
    return PowerBreakdown(**acc)


def intra_node_network_power(sol: "VariableSet", t: Topology) -> PowerBreakdown:
    """LAN power inside processing nodes (DC / metro-fog / CPE-fog)."""
    _require(sol, "theta", "omega_d")
    acc = {name: 0.0 for name in set(_INTRA_FIELD.values())}
    for d, theta in sol.theta.items():
        omega = sol.omega_d.get(d, 0)
        if theta > 1e-9 and not omega:
            raise InvalidSolutionError(
                f"theta[{d}] = {theta} > 0 while omega_d[{d}] = 0"
            )
        node = t.node(d)
        field = _INTRA_FIELD.get(node.kind)
        if field is None:
            continue
        acc[field] += intra_traffic_coefficient(node) * theta
        acc[field] += intra_activation_coefficient(node) * omega
    # Activated nodes with zero traffic still pay the LAN idle.
    for d, omega in sol.omega_d.items():
        if not omega or d in sol.theta:
            continue
        node = t.node(d)
        field = _INTRA_FIELD.get(node.kind)
        if field is not None:
            acc[field] += intra_activation_coefficient(node) * omega
    return PowerBreakdown(**acc)


def sync_overhead_power(sol: "VariableSet", t: Topology, phi: float) -> float:
    """Processing overhead power of inter-sub-service synchronization."""
    if phi <= 0:
        return 0.0
    _require(sol, "sync_rho")
    total = 0.0
    for (s, d1, d2), mips in sol.sync_rho.items():
        if mips <= 0:
            continue
        total += proc_traffic_coefficient(t.node(d2)) * mips
    return total


def total_power(sol: "VariableSet", t: Topology, phi: float = 0.0) -> PowerBreakdown:
    """Full power breakdown of an assignment (network + processing + LAN + sync)."""
    breakdown = (
        network_power(sol, t)
        + processing_power(sol, t)
        + intra_node_network_power(sol, t)
    )
    sync = sync_overhead_power(sol, t, phi)
    if sync:
        breakdown = breakdown + PowerBreakdown(sync_overhead=sync)
    return breakdown
