"""Solver-neutral MILP assembly, LP-format export and feasibility checking.

The model is held as a plain list of variables (name, bounds, integrality)
and linear rows (name, coefficient map, sense, right-hand side), so it can
be handed to any MILP backend or serialized to the standard LP text format.
Every row name cites the printed constraint number it implements
(``c19_s0``, ``c35_m20_n24`` ...), which makes infeasibility reports and
the exported LP files self-describing.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Iterable, Mapping, Optional, Sequence

from . import power as power_mod
from .topology import NodeKind, Topology

#: Tolerances used across feasibility and integrality checks.
FEASIBILITY_TOL = 1e-6
INTEGRALITY_TOL = 1e-6


class ConfigurationError(ValueError):
    """Instance configuration that would produce a meaningless model."""


class IncompleteAssignmentError(ValueError):
    """check_solution received an assignment missing a variable group."""


@dataclass(frozen=True)
class Demand:
    """One IoT service request: CPU workload plus the traffic carrying it."""

    source: int
    cpu: float  # MIPS
    bw: float   # Mbps

    def __post_init__(self) -> None:
        if self.cpu < 0 or self.bw < 0:
            raise ConfigurationError(
                f"demand at source {self.source}: cpu and bw must be non-negative"
            )


@dataclass(frozen=True)
class Instance:
    """A full optimization instance."""

    topology: Topology
    demands: tuple[Demand, ...]
    k_max: int = 1
    phi: float = 0.0
    capacitated: bool = True
    sp_dc_enabled: bool = False
    big_m: Optional[float] = None

    def __post_init__(self) -> None:
        if self.k_max < 1:
            raise ConfigurationError(f"k_max must be >= 1, got {self.k_max}")
        if self.phi < 0:
            raise ConfigurationError(f"phi must be non-negative, got {self.phi}")
        iot = set(self.topology.nodes_of_kind(NodeKind.IOT_DEVICE))
        sources = [d.source for d in self.demands]
        if len(set(sources)) != len(sources):
            raise ConfigurationError("each source node may carry at most one demand")
        for d in self.demands:
            if d.source not in iot:
                raise ConfigurationError(f"demand source {d.source} is not an IoT node")
        if self.big_m is not None and self.big_m < self.min_big_m():
            raise ConfigurationError(
                f"big_m={self.big_m} is smaller than the demand totals "
                f"({self.min_big_m()}); it would silently cut optima"
            )

    def min_big_m(self) -> float:
        return max(
            sum(d.cpu for d in self.demands),
            sum(d.bw for d in self.demands),
            1.0,
        )

    @property
    def effective_big_m(self) -> float:
        return self.big_m if self.big_m is not None else self.min_big_m() * 10.0

    @property
    def sources(self) -> tuple[int, ...]:
        return tuple(d.source for d in self.demands)

    def demand_of(self, source: int) -> Demand:
        for d in self.demands:
            if d.source == source:
                return d
        raise KeyError(source)


@dataclass
class VariableSet:
    """Values of every model variable group, keyed by node/pair indices.

    Sparse: a key absent from a dict means the variable is zero.
    """

    rho: dict[tuple[int, int], float] = field(default_factory=dict)
    omega_sd: dict[tuple[int, int], int] = field(default_factory=dict)
    omega_d: dict[int, int] = field(default_factory=dict)
    lambda_sd: dict[tuple[int, int], float] = field(default_factory=dict)
    flow: dict[tuple[int, int, int, int], float] = field(default_factory=dict)
    lambda_node: dict[int, float] = field(default_factory=dict)
    theta: dict[int, float] = field(default_factory=dict)
    beta: dict[int, int] = field(default_factory=dict)
    gamma: dict[tuple[int, int], int] = field(default_factory=dict)
    n_servers: dict[int, float] = field(default_factory=dict)
    w_mn: dict[tuple[int, int], float] = field(default_factory=dict)
    f_mn: dict[tuple[int, int], float] = field(default_factory=dict)
    ag: dict[int, float] = field(default_factory=dict)
    sync_pair: dict[tuple[int, int, int], int] = field(default_factory=dict)
    sync_rho: dict[tuple[int, int, int], float] = field(default_factory=dict)
    sync_traffic: dict[tuple[int, int], float] = field(default_factory=dict)
    sync_flow: dict[tuple[int, int, int, int], float] = field(default_factory=dict)
    sync_node: dict[int, float] = field(default_factory=dict)

    def get(self, group: str, key) -> float:
        mapping = getattr(self, group)
        if mapping is None:
            raise IncompleteAssignmentError(f"variable group {group!r} missing")
        return mapping.get(key, 0.0)


@dataclass(frozen=True)
class VarDef:
    index: int
    name: str
    group: str
    key: object
    lb: float
    ub: float
    integer: bool


@dataclass(frozen=True)
class Row:
    name: str
    coeffs: Mapping[int, float]
    sense: str  # "<=", ">=", "=="
    rhs: float


@dataclass(frozen=True)
class Violation:
    constraint: str
    residual: float

    def __str__(self) -> str:  # pragma: no cover - cosmetic
        return f"{self.constraint}: residual {self.residual:.6g}"


class MilpModel:
    """Variables, linear objective and constraint rows of one instance."""

    def __init__(self, instance: Instance):
        self.instance = instance
        self.variables: list[VarDef] = []
        self.rows: list[Row] = []
        self.objective: dict[int, float] = {}
        self._by_name: dict[str, int] = {}
        self._by_key: dict[tuple[str, object], int] = {}

    # -- construction helpers ------------------------------------------------

    def add_var(
        self,
        name: str,
        group: str,
        key,
        lb: float = 0.0,
        ub: float = math.inf,
        integer: bool = False,
    ) -> int:
        idx = len(self.variables)
        self.variables.append(VarDef(idx, name, group, key, lb, ub, integer))
        self._by_name[name] = idx
        self._by_key[(group, key)] = idx
        return idx

    def add_row(self, name: str, coeffs: Mapping[int, float], sense: str, rhs: float) -> None:
        self.rows.append(Row(name, dict(coeffs), sense, rhs))

    def add_objective(self, idx: int, coeff: float) -> None:
        if coeff:
            self.objective[idx] = self.objective.get(idx, 0.0) + coeff

    def var(self, group: str, key) -> int:
        return self._by_key[(group, key)]

    def has_var(self, group: str, key) -> bool:
        return (group, key) in self._by_key

    # -- value mapping ---------------------------------------------------------

    def extract(self, x: Sequence[float]) -> VariableSet:
        """Turn a raw solution vector into a VariableSet (integers rounded)."""
        vs = VariableSet()
        for v in self.variables:
            value = float(x[v.index])
            if v.integer:
                value = float(round(value))
            elif abs(value) < 1e-11:
                value = 0.0
            if value != 0.0:
                getattr(vs, v.group)[v.key] = value
        return vs

    def vector(self, vs: VariableSet) -> list[float]:
        return [vs.get(v.group, v.key) for v in self.variables]

    def objective_value(self, x: Sequence[float]) -> float:
        return sum(coeff * x[idx] for idx, coeff in self.objective.items())


# ---------------------------------------------------------------------------
# model construction
# ---------------------------------------------------------------------------

def build_model(inst: Instance) -> MilpModel:
    """Assemble the complete MILP for an instance.

    Emits the placement/flow/activation constraints (18)-(38), the
    server-count covering bound (48), the fiber-activation link for the
    gamma binaries and - when the synchronization overhead ratio is
    positive - the overhead extension (42)-(50).
    """
    t = inst.topology
    M = inst.effective_big_m
    phi = inst.phi
    sources = inst.sources
    proc = t.processing_nodes
    nodes = [n.id for n in t.nodes]
    core = set(t.core_nodes)
    iot = set(t.nodes_of_kind(NodeKind.IOT_DEVICE))
    arcs: list[tuple[int, int]] = []
    for link in t.links:
        arcs.append((link.a, link.b))
        arcs.append((link.b, link.a))
    core_arcs = [(m, n) for (m, n) in arcs if m in core and n in core]

    # Activation threshold for constraint (32): the printed lower bound of
    # 1 Mbps is infeasible for sub-1-Mbps demands, so it is tightened to the
    # smallest positive demand bitrate (identical behaviour at >= 1 Mbps).
    positive_bw = [d.bw for d in inst.demands if d.bw > 0]
    q_min = min(1.0, min(positive_bw)) if positive_bw else 1.0

    model = MilpModel(inst)
    model.arcs = tuple(arcs)
    model.core_arcs = tuple(core_arcs)
    model.q_min = q_min

    # -- variables -------------------------------------------------------------
    for s in sources:
        for d in proc:
            model.add_var(f"rho_s{s}_d{d}", "rho", (s, d))
            model.add_var(f"om_s{s}_d{d}", "omega_sd", (s, d), ub=1.0, integer=True)
            model.add_var(f"lam_s{s}_d{d}", "lambda_sd", (s, d))
    for s in sources:
        for d in proc:
            if d == s:
                continue
            for (m, n) in arcs:
                model.add_var(f"fl_s{s}_d{d}_{m}_{n}", "flow", (s, d, m, n))
    for d in proc:
        model.add_var(f"omd_{d}", "omega_d", d, ub=1.0, integer=True)
        model.add_var(f"th_{d}", "theta", d)
        cap_servers = t.node(d).proc.max_servers
        ub = cap_servers if math.isfinite(cap_servers) else math.inf
        model.add_var(f"nsrv_{d}", "n_servers", d, ub=ub, integer=True)
    for m in nodes:
        model.add_var(f"lnode_{m}", "lambda_node", m)
        model.add_var(f"beta_{m}", "beta", m, ub=1.0, integer=True)
    for (m, n) in core_arcs:
        model.add_var(f"w_{m}_{n}", "w_mn", (m, n), integer=True)
        model.add_var(f"fib_{m}_{n}", "f_mn", (m, n), integer=True)
        model.add_var(f"gam_{m}_{n}", "gamma", (m, n), ub=1.0, integer=True)
    for m in sorted(core):
        model.add_var(f"ag_{m}", "ag", m, integer=True)
    if phi > 0:
        for s in sources:
            for a in proc:
                for b in proc:
                    if a == b:
                        continue
                    model.add_var(f"sy_s{s}_{a}_{b}", "sync_pair", (s, a, b), ub=1.0, integer=True)
                    model.add_var(f"syr_s{s}_{a}_{b}", "sync_rho", (s, a, b))
        for a in proc:
            for b in proc:
                if a == b:
                    continue
                model.add_var(f"st_{a}_{b}", "sync_traffic", (a, b))
                for (m, n) in arcs:
                    model.add_var(f"sf_{a}_{b}_{m}_{n}", "sync_flow", (a, b, m, n))
        for m in nodes:
            model.add_var(f"snd_{m}", "sync_node", m)

    # -- objective -------------------------------------------------------------
    _build_objective(model, t, phi)

    # -- constraints -----------------------------------------------------------
    adjacency = t.adjacency

    # (18) flow conservation of service traffic.
    for s in sources:
        for d in proc:
            if d == s:
                continue
            lam_sd = model.var("lambda_sd", (s, d))
            for m in nodes:
                coeffs: dict[int, float] = {}
                for n in adjacency[m]:
                    coeffs[model.var("flow", (s, d, m, n))] = 1.0
                    coeffs[model.var("flow", (s, d, n, m))] = (
                        coeffs.get(model.var("flow", (s, d, n, m)), 0.0) - 1.0
                    )
                if m == s:
                    coeffs[lam_sd] = coeffs.get(lam_sd, 0.0) - 1.0
                elif m == d:
                    coeffs[lam_sd] = coeffs.get(lam_sd, 0.0) + 1.0
                model.add_row(f"c18_s{s}_d{d}_m{m}", coeffs, "==", 0.0)

    # (19) total processing demand of each source is met.
    for s in sources:
        coeffs = {model.var("rho", (s, d)): 1.0 for d in proc}
        model.add_row(f"c19_s{s}", coeffs, "==", inst.demand_of(s).cpu)

    # (20)/(21) rho <-> omega linking.
    for s in sources:
        for d in proc:
            r = model.var("rho", (s, d))
            o = model.var("omega_sd", (s, d))
            model.add_row(f"c20_s{s}_d{d}", {r: 1.0, o: -1.0}, ">=", 0.0)
            model.add_row(f"c21_s{s}_d{d}", {r: 1.0, o: -M}, "<=", 0.0)

    # (22) at most K sub-services per source.
    for s in sources:
        coeffs = {model.var("omega_sd", (s, d)): 1.0 for d in proc}
        model.add_row(f"c22_s{s}", coeffs, "<=", float(inst.k_max))

    # (23) server counts within the deployable maximum.
    for d in proc:
        cap_servers = t.node(d).proc.max_servers
        if math.isfinite(cap_servers):
            model.add_row(f"c23_d{d}", {model.var("n_servers", d): 1.0}, "<=", cap_servers)

    # (24)/(25) processing-node activation linking.
    n_src = max(len(sources), 1)
    for d in proc:
        coeffs = {model.var("omega_sd", (s, d)): 1.0 for s in sources}
        od = model.var("omega_d", d)
        lo = dict(coeffs)
        lo[od] = -1.0
        model.add_row(f"c24_d{d}", lo, ">=", 0.0)
        hi = dict(coeffs)
        hi[od] = -float(n_src)
        model.add_row(f"c25_d{d}", hi, "<=", 0.0)

    # (26)-(28) node traffic definitions: sources count outgoing plus hosted
    # traffic, other access/metro/cloud nodes count incoming traffic, core
    # nodes count all outgoing traffic.
    source_set = set(sources)
    for m in nodes:
        coeffs = {model.var("lambda_node", m): -1.0}
        if m in core:
            name = f"c28_m{m}"
            for s in sources:
                for d in proc:
                    if d == s:
                        continue
                    for n in adjacency[m]:
                        idx = model.var("flow", (s, d, m, n))
                        coeffs[idx] = coeffs.get(idx, 0.0) + 1.0
        elif m in source_set:
            name = f"c26_m{m}"
            for d in proc:
                if d == m:
                    continue
                for n in adjacency[m]:
                    idx = model.var("flow", (m, d, m, n))
                    coeffs[idx] = coeffs.get(idx, 0.0) + 1.0
            for s in sources:
                if s == m:
                    continue
                for d in proc:
                    if d == s:
                        continue
                    for n in adjacency[m]:
                        idx = model.var("flow", (s, d, n, m))
                        coeffs[idx] = coeffs.get(idx, 0.0) + 1.0
        else:
            name = f"c27_m{m}"
            for s in sources:
                for d in proc:
                    if d == s:
                        continue
                    for n in adjacency[m]:
                        idx = model.var("flow", (s, d, n, m))
                        coeffs[idx] = coeffs.get(idx, 0.0) + 1.0
        model.add_row(name, coeffs, "==", 0.0)

    # (29)-(31) theta = lambda_d * omega_d linearization.
    for d in proc:
        th = model.var("theta", d)
        ln = model.var("lambda_node", d)
        od = model.var("omega_d", d)
        model.add_row(f"c29_d{d}", {th: 1.0, od: -M}, "<=", 0.0)
        model.add_row(f"c30_d{d}", {th: 1.0, ln: -1.0}, "<=", 0.0)
        model.add_row(f"c31_d{d}", {th: 1.0, ln: -1.0, od: -M}, ">=", -M)

    # (32)/(33) network-node activation linking (threshold q_min, see above).
    for m in nodes:
        ln = model.var("lambda_node", m)
        b = model.var("beta", m)
        model.add_row(f"c32_m{m}", {ln: 1.0, b: -q_min}, ">=", 0.0)
        model.add_row(f"c33_m{m}", {ln: 1.0, b: -M}, "<=", 0.0)

    # (34) every hosting node receives the full demand bitrate.
    for s in sources:
        bw = inst.demand_of(s).bw
        for d in proc:
            coeffs = {
                model.var("lambda_sd", (s, d)): 1.0,
                model.var("omega_sd", (s, d)): -bw,
            }
            model.add_row(f"c34_s{s}_d{d}", coeffs, "==", 0.0)

    # (35) link capacities outside the core.
    for (m, n) in arcs:
        if m in core:
            continue
        capacity = t.link_between(m, n).capacity
        if not math.isfinite(capacity):
            continue
        coeffs = {}
        for s in sources:
            for d in proc:
                if d == s:
                    continue
                coeffs[model.var("flow", (s, d, m, n))] = 1.0
        if coeffs:
            model.add_row(f"c35_m{m}_n{n}", coeffs, "<=", capacity)

    # (36) aggregation router ports cover the node traffic.
    B = t.core.wavelength_rate
    for m in sorted(core):
        coeffs = {model.var("ag", m): 1.0, model.var("lambda_node", m): -1.0 / B}
        model.add_row(f"c36_m{m}", coeffs, ">=", 0.0)

    # (37)/(38) wavelength and fiber capacities on core links.
    W = float(t.core.wavelengths_per_fiber)
    for (m, n) in core_arcs:
        coeffs = {}
        for s in sources:
            for d in proc:
                if d == s:
                    continue
                coeffs[model.var("flow", (s, d, m, n))] = 1.0
        coeffs[model.var("w_mn", (m, n))] = -B
        model.add_row(f"c37_m{m}_n{n}", coeffs, "<=", 0.0)
        model.add_row(
            f"c38_m{m}_n{n}",
            {model.var("w_mn", (m, n)): 1.0, model.var("f_mn", (m, n)): -W},
            "<=",
            0.0,
        )
        model.add_row(
            f"cgamma_m{m}_n{n}",
            {model.var("f_mn", (m, n)): 1.0, model.var("gamma", (m, n)): -M},
            "<=",
            0.0,
        )

    # (48) servers cover the hosted load (plus sync overhead when phi > 0).
    for d in proc:
        cap = t.node(d).proc.capacity
        coeffs = {model.var("n_servers", d): 1.0}
        for s in sources:
            coeffs[model.var("rho", (s, d))] = -1.0 / cap
        if phi > 0:
            for s in sources:
                for a in proc:
                    if a == d:
                        continue
                    coeffs[model.var("sync_rho", (s, a, d))] = -1.0 / cap
        model.add_row(f"c48_d{d}", coeffs, ">=", 0.0)

    if phi > 0:
        _build_sync_constraints(model, inst, arcs, adjacency)

    return model


def _build_objective(model: MilpModel, t: Topology, phi: float) -> None:
    core = t.core
    core_ids = set(t.core_nodes)
    derived = power_mod.core_derived(core)
    pue_c = t.node(t.core_nodes[0]).pue if t.core_nodes else 1.0

    for node in t.nodes:
        if node.kind in (NodeKind.GP_DC, NodeKind.SP_DC):
            pass
        else:
            model.add_objective(
                model.var("lambda_node", node.id), power_mod.node_traffic_coefficient(node, t)
            )
            model.add_objective(
                model.var("beta", node.id), power_mod.node_activation_coefficient(node, t)
            )
        if node.proc is not None:
            model.add_objective(
                model.var("n_servers", node.id), power_mod.proc_idle_coefficient(node)
            )
            model.add_objective(
                model.var("theta", node.id), power_mod.intra_traffic_coefficient(node)
            )
            model.add_objective(
                model.var("omega_d", node.id), power_mod.intra_activation_coefficient(node)
            )

    for s in model.instance.sources:
        for d in model.instance.topology.processing_nodes:
            model.add_objective(
                model.var("rho", (s, d)),
                power_mod.proc_traffic_coefficient(t.node(d)),
            )

    for m in sorted(core_ids):
        model.add_objective(
            model.var("ag", m),
            pue_c * core.router_port.idle_share_delta * core.router_port.p_idle,
        )
    flow_core_coeff = pue_c * (
        core.edfa.energy_per_bit * derived.edfa_count_per_fiber
        + core.regenerator.energy_per_bit * derived.regen_count
    )
    for (m, n) in model.core_arcs:
        model.add_objective(
            model.var("w_mn", (m, n)),
            pue_c
            * (
                core.router_port.idle_share_delta * core.router_port.p_idle
                + core.transponder.idle_share_delta * core.transponder.p_idle
                + core.regenerator.idle_share_delta
                * core.regenerator.p_idle
                * derived.regen_count
            ),
        )
        model.add_objective(
            model.var("f_mn", (m, n)),
            pue_c
            * core.edfa.idle_share_delta
            * core.edfa.p_idle
            * derived.edfa_count_per_fiber,
        )
        if flow_core_coeff:
            for s in model.instance.sources:
                for d in model.instance.topology.processing_nodes:
                    if d == s:
                        continue
                    model.add_objective(model.var("flow", (s, d, m, n)), flow_core_coeff)

    if phi > 0:
        for s in model.instance.sources:
            for a in model.instance.topology.processing_nodes:
                for b in model.instance.topology.processing_nodes:
                    if a == b:
                        continue
                    model.add_objective(
                        model.var("sync_rho", (s, a, b)),
                        power_mod.proc_traffic_coefficient(t.node(b)),
                    )


def _build_sync_constraints(
    model: MilpModel,
    inst: Instance,
    arcs: Sequence[tuple[int, int]],
    adjacency: Mapping[int, tuple[int, ...]],
) -> None:
    t = inst.topology
    proc = t.processing_nodes
    nodes = [n.id for n in t.nodes]
    phi = inst.phi

    # (42) conservation of synchronization traffic between host pairs.
    for a in proc:
        for b in proc:
            if a == b:
                continue
            st = model.var("sync_traffic", (a, b))
            for m in nodes:
                coeffs: dict[int, float] = {}
                for n in adjacency[m]:
                    out_idx = model.var("sync_flow", (a, b, m, n))
                    coeffs[out_idx] = coeffs.get(out_idx, 0.0) + 1.0
                    in_idx = model.var("sync_flow", (a, b, n, m))
                    coeffs[in_idx] = coeffs.get(in_idx, 0.0) - 1.0
                if m == a:
                    coeffs[st] = coeffs.get(st, 0.0) - 1.0
                elif m == b:
                    coeffs[st] = coeffs.get(st, 0.0) + 1.0
                model.add_row(f"c42_a{a}_b{b}_m{m}", coeffs, "==", 0.0)

    # (43)-(45) sync-pair indicator = omega_sd[a] AND omega_sd[b].
    for s in inst.sources:
        for a in proc:
            for b in proc:
                if a == b:
                    continue
                sy = model.var("sync_pair", (s, a, b))
                oa = model.var("omega_sd", (s, a))
                ob = model.var("omega_sd", (s, b))
                model.add_row(f"c43_s{s}_a{a}_b{b}", {sy: 1.0, oa: -1.0}, "<=", 0.0)
                model.add_row(f"c44_s{s}_a{a}_b{b}", {sy: 1.0, ob: -1.0}, "<=", 0.0)
                model.add_row(
                    f"c45_s{s}_a{a}_b{b}", {sy: 1.0, oa: -1.0, ob: -1.0}, ">=", -1.0
                )
                # (46) overhead MIPS realized per co-hosting pair.
                model.add_row(
                    f"c46_s{s}_a{a}_b{b}",
                    {
                        model.var("sync_rho", (s, a, b)): 1.0,
                        sy: -phi * inst.demand_of(s).cpu,
                    },
                    "==",
                    0.0,
                )

    # (47) synchronization traffic incident to each node.
    for m in nodes:
        coeffs = {model.var("sync_node", m): -1.0}
        for a in proc:
            for b in proc:
                if a == b:
                    continue
                for n in adjacency[m]:
                    out_idx = model.var("sync_flow", (a, b, m, n))
                    coeffs[out_idx] = coeffs.get(out_idx, 0.0) + 1.0
                    in_idx = model.var("sync_flow", (a, b, n, m))
                    coeffs[in_idx] = coeffs.get(in_idx, 0.0) + 1.0
        model.add_row(f"c47_m{m}", coeffs, "==", 0.0)

    # (49) server-count cap (restated alongside the extension).
    for d in proc:
        cap_servers = t.node(d).proc.max_servers
        if math.isfinite(cap_servers):
            model.add_row(f"c49_d{d}", {model.var("n_servers", d): 1.0}, "<=", cap_servers)

    # (50) pairwise sync traffic volume.
    for a in proc:
        for b in proc:
            if a == b:
                continue
            coeffs = {model.var("sync_traffic", (a, b)): 1.0}
            for s in inst.sources:
                coeffs[model.var("sync_pair", (s, a, b))] = -inst.demand_of(s).bw
            model.add_row(f"c50_a{a}_b{b}", coeffs, "==", 0.0)


# ---------------------------------------------------------------------------
# LP-format export
# ---------------------------------------------------------------------------

def _fmt(value: float) -> str:
    text = f"{value:.12g}"
    return text


def _term(coeff: float, name: str) -> str:
    sign = "-" if coeff < 0 else "+"
    return f"{sign} {_fmt(abs(coeff))} {name}"


def export_lp(model: MilpModel) -> str:
    """Serialize the model as deterministic LP-format text."""
    lines: list[str] = ["\\ fogplace MILP export", "Minimize"]
    terms = [
        _term(coeff, model.variables[idx].name)
        for idx, coeff in model.objective.items()
        if coeff
    ]
    lines.extend(_wrap("obj:", terms))

    lines.append("Subject To")
    sense_txt = {"<=": "<=", ">=": ">=", "==": "="}
    for row in model.rows:
        terms = [
            _term(coeff, model.variables[idx].name)
            for idx, coeff in row.coeffs.items()
            if coeff
        ]
        if not terms:
            terms = ["+ 0 " + model.variables[0].name]
        tail = f" {sense_txt[row.sense]} {_fmt(row.rhs)}"
        wrapped = _wrap(f"{row.name}:", terms)
        wrapped[-1] += tail
        lines.extend(wrapped)

    lines.append("Bounds")
    for v in model.variables:
        if v.integer and v.ub == 1.0 and v.lb == 0.0:
            continue  # binaries are bounded by their section
        if v.lb == 0.0 and math.isinf(v.ub):
            continue  # LP default bound
        lo = _fmt(v.lb)
        hi = "+inf" if math.isinf(v.ub) else _fmt(v.ub)
        lines.append(f" {lo} <= {v.name} <= {hi}")

    lines.append("Generals")
    for v in model.variables:
        if v.integer and not (v.ub == 1.0 and v.lb == 0.0):
            lines.append(f" {v.name}")
    lines.append("Binaries")
    for v in model.variables:
        if v.integer and v.ub == 1.0 and v.lb == 0.0:
            lines.append(f" {v.name}")
    lines.append("End")
    return "\n".join(lines) + "\n"


def _wrap(head: str, terms: Iterable[str], per_line: int = 6) -> list[str]:
    terms = list(terms)
    if not terms:
        return [f" {head} 0"]
    lines = []
    current = f" {head}"
    count = 0
    for term in terms:
        current += f" {term}"
        count += 1
        if count == per_line:
            lines.append(current)
            current = "   "
            count = 0
    if count or not lines:
        lines.append(current)
    return lines


# ---------------------------------------------------------------------------
# feasibility checking
# ---------------------------------------------------------------------------

def check_solution(
    model: MilpModel,
    assignment: VariableSet,
    tol: float = FEASIBILITY_TOL,
) -> list[Violation]:
    """Evaluate every row, bound and integrality requirement.

    Returns the (possibly empty) list of violations; raises
    :class:`IncompleteAssignmentError` when a whole variable group is
    missing from the assignment.
    """
    x = model.vector(assignment)

    violations: list[Violation] = []
    for v in model.variables:
        value = x[v.index]
        if value < v.lb - tol or value > v.ub + tol:
            violations.append(Violation(f"bound_{v.name}", _bound_residual(v, value)))
        if v.integer and abs(value - round(value)) > INTEGRALITY_TOL:
            violations.append(
                Violation(f"integrality_{v.name}", abs(value - round(value)))
            )

    for row in model.rows:
        lhs = sum(coeff * x[idx] for idx, coeff in row.coeffs.items())
        if row.sense == "==":
            residual = abs(lhs - row.rhs)
        elif row.sense == "<=":
            residual = lhs - row.rhs
        else:
            residual = row.rhs - lhs
        if residual > tol:
            violations.append(Violation(row.name, residual))
    return violations


def _bound_residual(v: VarDef, value: float) -> float:
    if value < v.lb:
        return v.lb - value
    return value - v.ub
