"""Reference IoT-fog-cloud topology and device parameter tables.

Builds the fixed evaluation graph: 20 IoT devices in 4 groups of 5, each
group attached to an ONU, a single OLT, a metro switch + metro router pair,
a 2-node IP-over-WDM core, and a general-purpose cloud data centre (plus an
optional special-purpose DC) hanging off the far core node.  Every node
carries its network-device profile, processing profile (where the layer can
host servers), intra-node LAN profiles, and PUE, all in canonical units
(watts, Mbps, MIPS, km).
"""

from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass, field, replace
from enum import Enum
from typing import Iterable, Mapping, Optional, Sequence


class TopologyError(ValueError):
    """Invalid topology construction input (bad override, broken profile)."""


class NoPathError(LookupError):
    """Raised when no path exists between the requested endpoints."""


class NodeKind(Enum):
    IOT_DEVICE = "iot_device"
    ONU = "onu"                 # hosts CF servers
    OLT = "olt"                 # hosts AF servers
    METRO_SWITCH = "metro_switch"  # hosts MF servers
    METRO_ROUTER = "metro_router"
    CORE_NODE = "core_node"
    GP_DC = "gp_dc"
    SP_DC = "sp_dc"


#: Node kinds that may host processing servers.
PROCESSING_KINDS = frozenset(
    {
        NodeKind.IOT_DEVICE,
        NodeKind.ONU,
        NodeKind.OLT,
        NodeKind.METRO_SWITCH,
        NodeKind.GP_DC,
        NodeKind.SP_DC,
    }
)


@dataclass(frozen=True)
class NetDeviceProfile:
    """Linear power profile of a network device.

    ``idle_share_delta`` is the fraction of the idle power attributed to the
    studied application: 1.0 for dedicated devices (IoT radios, ONUs, CF
    switches), 0.03 for shared infrastructure (OLT, metro, core, DC LAN).
    """

    p_max: float          # watts
    p_idle: float         # watts
    bit_rate: float       # Mbps
    idle_share_delta: float = 1.0

    def __post_init__(self) -> None:
        if not (0 <= self.p_idle <= self.p_max):
            raise TopologyError(
                f"network profile requires 0 <= p_idle <= p_max, got "
                f"p_idle={self.p_idle}, p_max={self.p_max}"
            )
        if self.bit_rate <= 0:
            raise TopologyError(f"bit_rate must be positive, got {self.bit_rate}")
        if not (0 <= self.idle_share_delta <= 1):
            raise TopologyError(
                f"idle_share_delta must lie in [0, 1], got {self.idle_share_delta}"
            )

    @property
    def capacity(self) -> float:
        """Load capacity used by the linear profile (alias of bit_rate)."""
        return self.bit_rate

    @property
    def energy_per_bit(self) -> float:
        """Proportional slope in W/Mbps."""
        return (self.p_max - self.p_idle) / self.bit_rate


@dataclass(frozen=True)
class ProcProfile:
    """Linear power profile of one processing server."""

    p_max: float          # watts
    p_idle: float         # watts
    clock_ghz: float
    ipc: float            # instructions per cycle
    cores: int
    max_servers: float    # V_d; math.inf = unbounded

    def __post_init__(self) -> None:
        if not (0 <= self.p_idle <= self.p_max):
            raise TopologyError(
                f"processing profile requires 0 <= p_idle <= p_max, got "
                f"p_idle={self.p_idle}, p_max={self.p_max}"
            )
        if self.clock_ghz <= 0 or self.ipc <= 0 or self.cores <= 0:
            raise TopologyError("clock_ghz, ipc and cores must all be positive")
        if self.max_servers < 1:
            raise TopologyError(f"max_servers must be >= 1, got {self.max_servers}")

    @property
    def capacity(self) -> float:
        """MIPS per server: clock (GHz) x instructions/cycle x cores x 1000."""
        return self.clock_ghz * self.ipc * self.cores * 1000.0

    @property
    def energy_per_instruction(self) -> float:
        """Proportional slope in W/MIPS."""
        return (self.p_max - self.p_idle) / self.capacity


@dataclass(frozen=True)
class IntraNodeNetProfile:
    """Router/switch LAN deployed inside a processing node."""

    router: Optional[NetDeviceProfile] = None
    switch: Optional[NetDeviceProfile] = None


@dataclass(frozen=True)
class CoreParams:
    """IP-over-WDM core network parameters."""

    span_edfa_km: float           # Se
    span_regen_km: float          # Sg
    wavelengths_per_fiber: int    # W
    wavelength_rate: float        # B, Mbps
    hop_distance_km: float        # D_mn
    router_port: NetDeviceProfile
    transponder: NetDeviceProfile
    edfa: NetDeviceProfile
    optical_switch: NetDeviceProfile
    regenerator: NetDeviceProfile

    def __post_init__(self) -> None:
        for name in ("span_edfa_km", "span_regen_km", "wavelength_rate", "hop_distance_km"):
            if getattr(self, name) <= 0:
                raise TopologyError(f"core parameter {name} must be positive")
        if self.wavelengths_per_fiber < 1:
            raise TopologyError("wavelengths_per_fiber must be >= 1")


@dataclass(frozen=True)
class Node:
    id: int
    kind: NodeKind
    net: NetDeviceProfile
    pue: float
    proc: Optional[ProcProfile] = None
    intra: Optional[IntraNodeNetProfile] = None

    def __post_init__(self) -> None:
        if self.pue < 1:
            raise TopologyError(f"node {self.id}: pue must be >= 1, got {self.pue}")


@dataclass(frozen=True)
class Link:
    a: int
    b: int
    capacity: float  # Mbps; math.inf = capacity handled elsewhere (core fibers)
    layer: str       # one of {"wifi", "pon", "metro", "core"}


@dataclass(frozen=True)
class Topology:
    nodes: tuple[Node, ...]
    links: tuple[Link, ...]
    groups: Mapping[int, tuple[int, ...]]  # onu id -> attached IoT ids
    core: CoreParams
    metro_redundancy: float
    adjacency: Mapping[int, tuple[int, ...]] = field(repr=False, default_factory=dict)

    def __post_init__(self) -> None:
        adj: dict[int, list[int]] = {n.id: [] for n in self.nodes}
        for link in self.links:
            adj[link.a].append(link.b)
            adj[link.b].append(link.a)
        frozen = {m: tuple(sorted(ns)) for m, ns in adj.items()}
        object.__setattr__(self, "adjacency", frozen)
        object.__setattr__(self, "_by_id", {n.id: n for n in self.nodes})
        object.__setattr__(
            self,
            "_link_by_pair",
            {frozenset((l.a, l.b)): l for l in self.links},
        )

    def node(self, node_id: int) -> Node:
        try:
            return self._by_id[node_id]  # type: ignore[attr-defined]
        except KeyError:
            raise NoPathError(f"node {node_id} not in topology") from None

    def link_between(self, a: int, b: int) -> Link:
        return self._link_by_pair[frozenset((a, b))]  # type: ignore[attr-defined]

    def nodes_of_kind(self, *kinds: NodeKind) -> tuple[int, ...]:
        return tuple(n.id for n in self.nodes if n.kind in kinds)

    @property
    def processing_nodes(self) -> tuple[int, ...]:
        return tuple(n.id for n in self.nodes if n.proc is not None)

    @property
    def core_nodes(self) -> tuple[int, ...]:
        return self.nodes_of_kind(NodeKind.CORE_NODE)


# ---------------------------------------------------------------------------
# Default parameter tables
# ---------------------------------------------------------------------------

#: Network device defaults: p_max (W), p_idle (W), bit rate (Mbps), idle share.
NET_DEFAULTS: dict[str, NetDeviceProfile] = {
    "iot_wifi": NetDeviceProfile(0.56, 0.34, 100.0, 1.0),
    "onu": NetDeviceProfile(15.0, 9.0, 300.0, 1.0),
    "olt": NetDeviceProfile(1940.0, 60.0, 8_600_000.0, 0.03),
    "metro_router_port": NetDeviceProfile(30.0, 27.0, 40_000.0, 0.03),
    "metro_switch": NetDeviceProfile(470.0, 423.0, 600_000.0, 0.03),
}

#: Intra-node LAN device defaults.  The AF rows are carried as data (their
#: derived energy-per-bit figures are checked against the published table)
#: but no intra-node network is modelled at the OLT.
INTRA_DEFAULTS: dict[str, NetDeviceProfile] = {
    "cf_switch": NetDeviceProfile(1.78, 0.36, 1_600.0, 1.0),
    "af_router": NetDeviceProfile(13.0, 11.7, 40_000.0, 0.03),
    "af_switch": NetDeviceProfile(210.0, 189.0, 240_000.0, 0.03),
    "mf_router": NetDeviceProfile(13.0, 11.7, 40_000.0, 0.03),
    "mf_switch": NetDeviceProfile(210.0, 189.0, 600_000.0, 0.03),
    "dc_router": NetDeviceProfile(30.0, 27.0, 40_000.0, 0.03),
    "dc_switch": NetDeviceProfile(470.0, 423.0, 600_000.0, 0.03),
}

#: Processing server defaults (capacitated server counts V_d included).
#: capacity = clock_ghz * ipc * cores * 1000 reproduces the published kMIPS.
PROC_DEFAULTS: dict[str, ProcProfile] = {
    "iot": ProcProfile(3.96, 0.5, 1.0, 1, 1, max_servers=1),
    "cf": ProcProfile(12.5, 2.0, 1.2, 2, 1, max_servers=1),
    "af": ProcProfile(95.0, 57.0, 1.9, 3, 6, max_servers=2),
    "mf": ProcProfile(95.0, 57.0, 3.06, 4, 6, max_servers=2),
    "gp_dc": ProcProfile(130.0, 78.0, 2.7, 5, 8, max_servers=64),
    "sp_dc": ProcProfile(75.0, 45.0, 1.25, 864, 1, max_servers=64),
}

#: PUE per node kind.
PUE_DEFAULTS: dict[str, float] = {
    "iot": 1.0,
    "cf": 1.0,     # ONU / CPE fog
    "af": 1.5,     # OLT / access fog
    "mf": 1.4,     # metro switch, metro router
    "dc": 1.12,
    "core": 1.5,
}

CORE_DEFAULTS = CoreParams(
    span_edfa_km=80.0,
    span_regen_km=2500.0,
    wavelengths_per_fiber=32,
    wavelength_rate=40_000.0,
    hop_distance_km=2500.0,
    router_port=NetDeviceProfile(638.0, 574.2, 40_000.0, 0.03),
    transponder=NetDeviceProfile(129.0, 116.0, 40_000.0, 0.03),
    edfa=NetDeviceProfile(85.0, 11.0, 40_000.0, 0.03),
    optical_switch=NetDeviceProfile(85.0, 77.0, 40_000.0, 0.03),
    # The regenerator idle term is charged in full (no idle share).
    regenerator=NetDeviceProfile(71.4, 64.0, 40_000.0, 1.0),
)

METRO_REDUNDANCY_DEFAULT = 2.0

#: Fixed node numbering of the reference build.
N_IOT = 20
N_GROUPS = 4
IOT_IDS = tuple(range(0, 20))
ONU_IDS = (20, 21, 22, 23)
OLT_ID = 24
METRO_SWITCH_ID = 25
METRO_ROUTER_ID = 26
CORE_IDS = (27, 28)
GP_DC_ID = 29
SP_DC_ID = 30

#: Published derived columns used for table-reproduction checks:
#: W/MIPS (Table 3) and intra-node energy-per-bit in W/Gb/s (Table 4).
PUBLISHED_W_PER_MIPS = {
    "iot": 3460e-6,
    "cf": 4375e-6,
    "af": 1111e-6,
    "mf": 517e-6,
    "gp_dc": 481e-6,
    "sp_dc": 27e-6,
}
PUBLISHED_EB_W_PER_GBPS = {
    "cf_switch": 0.89,
    "af_router": 0.03,
    "af_switch": 0.08,
    "mf_router": 0.03,
    "mf_switch": 0.04,
    "dc_router": 0.08,
    "dc_switch": 0.08,
}

_PROFILE_FIELDS = {"p_max", "p_idle", "bit_rate", "idle_share_delta"}
_PROC_FIELDS = {"p_max", "p_idle", "clock_ghz", "ipc", "cores", "max_servers"}
_CORE_SCALAR_FIELDS = {
    "span_edfa_km",
    "span_regen_km",
    "wavelengths_per_fiber",
    "wavelength_rate",
    "hop_distance_km",
}
_CORE_PROFILE_FIELDS = {
    "router_port",
    "transponder",
    "edfa",
    "optical_switch",
    "regenerator",
}


def _apply_profile_override(
    base: NetDeviceProfile, patch: Mapping[str, object], where: str
) -> NetDeviceProfile:
    unknown = set(patch) - _PROFILE_FIELDS
    if unknown:
        raise TopologyError(f"{where}: unknown field(s) {sorted(unknown)}")
    try:
        return replace(base, **{k: float(v) for k, v in patch.items()})  # type: ignore[arg-type]
    except TopologyError as exc:
        raise TopologyError(f"{where}: {exc}") from None


def _apply_proc_override(
    base: ProcProfile, patch: Mapping[str, object], where: str
) -> ProcProfile:
    unknown = set(patch) - _PROC_FIELDS
    if unknown:
        raise TopologyError(f"{where}: unknown field(s) {sorted(unknown)}")
    coerced: dict[str, object] = {}
    for k, v in patch.items():
        coerced[k] = int(v) if k == "cores" else float(v)  # type: ignore[arg-type]
    try:
        return replace(base, **coerced)  # type: ignore[arg-type]
    except TopologyError as exc:
        raise TopologyError(f"{where}: {exc}") from None


def build_reference_topology(
    overrides: Optional[Mapping[str, object]] = None,
    *,
    sp_dc_enabled: Optional[bool] = None,
    capacitated: bool = True,
) -> Topology:
    """Build the reference evaluation topology from the default tables.

    ``overrides`` is a JSON-style document keyed by the default-table names
    (``iot_wifi``, ``onu``, ``olt``, ``metro_router_port``, ``metro_switch``,
    the ``INTRA_DEFAULTS`` names, the ``PROC_DEFAULTS`` names under
    ``proc``, ``pue``, ``core``, ``max_servers``, ``metro_redundancy``,
    ``sp_dc_enabled``).  Unknown keys are rejected.

    ``capacitated=False`` lifts every server-count bound except on the IoT
    devices, which remain limited to their single on-board processor.
    """
    overrides = dict(overrides or {})

    if sp_dc_enabled is None:
        sp_dc_enabled = bool(overrides.pop("sp_dc_enabled", False))
    else:
        overrides.pop("sp_dc_enabled", None)

    net = dict(NET_DEFAULTS)
    intra = dict(INTRA_DEFAULTS)
    proc = dict(PROC_DEFAULTS)
    pue = dict(PUE_DEFAULTS)
    core = CORE_DEFAULTS
    metro_redundancy = METRO_REDUNDANCY_DEFAULT

    for key in list(overrides):
        patch = overrides.pop(key)
        if key in net:
            net[key] = _apply_profile_override(net[key], patch, key)  # type: ignore[arg-type]
        elif key in intra:
            intra[key] = _apply_profile_override(intra[key], patch, key)  # type: ignore[arg-type]
        elif key == "proc":
            for pname, ppatch in patch.items():  # type: ignore[union-attr]
                if pname not in proc:
                    raise TopologyError(f"proc: unknown server class {pname!r}")
                proc[pname] = _apply_proc_override(proc[pname], ppatch, f"proc.{pname}")
        elif key == "pue":
            for lname, value in patch.items():  # type: ignore[union-attr]
                if lname not in pue:
                    raise TopologyError(f"pue: unknown layer {lname!r}")
                value = float(value)
                if value < 1:
                    raise TopologyError(f"pue.{lname}: must be >= 1, got {value}")
                pue[lname] = value
        elif key == "core":
            fields: dict[str, object] = {}
            for cname, cval in patch.items():  # type: ignore[union-attr]
                if cname in _CORE_SCALAR_FIELDS:
                    fields[cname] = (
                        int(cval) if cname == "wavelengths_per_fiber" else float(cval)
                    )
                elif cname in _CORE_PROFILE_FIELDS:
                    fields[cname] = _apply_profile_override(
                        getattr(core, cname), cval, f"core.{cname}"
                    )
                else:
                    raise TopologyError(f"core: unknown field {cname!r}")
            core = replace(core, **fields)  # type: ignore[arg-type]
        elif key == "max_servers":
            for pname, count in patch.items():  # type: ignore[union-attr]
                if pname not in proc:
                    raise TopologyError(f"max_servers: unknown server class {pname!r}")
                proc[pname] = replace(proc[pname], max_servers=float(count))
        elif key == "metro_redundancy":
            metro_redundancy = float(patch)  # type: ignore[arg-type]
            if metro_redundancy < 1:
                raise TopologyError("metro_redundancy must be >= 1")
        else:
            raise TopologyError(f"unknown override key {key!r}")

    if not capacitated:
        # Un-capacitated regime: no server-count limits anywhere except the
        # IoT devices, which keep their single on-board processor.
        for pname in proc:
            if pname != "iot":
                proc[pname] = replace(proc[pname], max_servers=math.inf)

    nodes: list[Node] = []
    for iot in IOT_IDS:
        nodes.append(
            Node(iot, NodeKind.IOT_DEVICE, net["iot_wifi"], pue["iot"], proc=proc["iot"])
        )
    for onu in ONU_IDS:
        nodes.append(
            Node(
                onu,
                NodeKind.ONU,
                net["onu"],
                pue["cf"],
                proc=proc["cf"],
                intra=IntraNodeNetProfile(switch=intra["cf_switch"]),
            )
        )
    nodes.append(Node(OLT_ID, NodeKind.OLT, net["olt"], pue["af"], proc=proc["af"]))
    nodes.append(
        Node(
            METRO_SWITCH_ID,
            NodeKind.METRO_SWITCH,
            net["metro_switch"],
            pue["mf"],
            proc=proc["mf"],
            intra=IntraNodeNetProfile(router=intra["mf_router"], switch=intra["mf_switch"]),
        )
    )
    nodes.append(
        Node(METRO_ROUTER_ID, NodeKind.METRO_ROUTER, net["metro_router_port"], pue["mf"])
    )
    for c in CORE_IDS:
        nodes.append(Node(c, NodeKind.CORE_NODE, core.router_port, pue["core"]))
    dc_intra = IntraNodeNetProfile(router=intra["dc_router"], switch=intra["dc_switch"])
    nodes.append(
        Node(GP_DC_ID, NodeKind.GP_DC, intra["dc_router"], pue["dc"], proc=proc["gp_dc"], intra=dc_intra)
    )
    if sp_dc_enabled:
        nodes.append(
            Node(SP_DC_ID, NodeKind.SP_DC, intra["dc_router"], pue["dc"], proc=proc["sp_dc"], intra=dc_intra)
        )

    links: list[Link] = []
    groups: dict[int, tuple[int, ...]] = {}
    group_size = N_IOT // N_GROUPS
    for g, onu in enumerate(ONU_IDS):
        members = tuple(range(g * group_size, (g + 1) * group_size))
        groups[onu] = members
        for iot in members:
            links.append(Link(iot, onu, net["iot_wifi"].bit_rate, "wifi"))
        links.append(Link(onu, OLT_ID, net["onu"].bit_rate, "pon"))
    links.append(Link(OLT_ID, METRO_SWITCH_ID, net["olt"].bit_rate, "metro"))
    links.append(Link(METRO_SWITCH_ID, METRO_ROUTER_ID, net["metro_switch"].bit_rate, "metro"))
    links.append(Link(METRO_ROUTER_ID, CORE_IDS[0], net["metro_router_port"].bit_rate, "metro"))
    # Core fiber: capacity governed by wavelength/fiber counting, not a flat cap.
    links.append(Link(CORE_IDS[0], CORE_IDS[1], math.inf, "core"))
    links.append(Link(CORE_IDS[1], GP_DC_ID, intra["dc_router"].bit_rate, "core"))
    if sp_dc_enabled:
        links.append(Link(CORE_IDS[1], SP_DC_ID, intra["dc_router"].bit_rate, "core"))

    return Topology(
        nodes=tuple(nodes),
        links=tuple(links),
        groups=groups,
        core=core,
        metro_redundancy=metro_redundancy,
    )


# ---------------------------------------------------------------------------
# Validation
# ---------------------------------------------------------------------------

def validate_topology(t: Topology) -> list[str]:
    """Return a list of invariant violations (empty when the topology is valid)."""
    violations: list[str] = []
    ids = [n.id for n in t.nodes]
    if len(set(ids)) != len(ids):
        violations.append("duplicate node ids")

    for n in t.nodes:
        has_proc = n.proc is not None
        if has_proc != (n.kind in PROCESSING_KINDS):
            what = "missing" if not has_proc else "unexpected"
            violations.append(f"node {n.id} ({n.kind.value}): {what} processing profile")
        if n.pue < 1:
            violations.append(f"node {n.id}: pue {n.pue} < 1")
        if n.proc is not None:
            expected = n.proc.clock_ghz * n.proc.ipc * n.proc.cores * 1000.0
            if not math.isclose(n.proc.capacity, expected, rel_tol=1e-12):
                violations.append(f"node {n.id}: capacity does not match clock*ipc*cores")
        # Intra-node LAN presence per kind.
        if n.kind is NodeKind.ONU:
            ok = n.intra is not None and n.intra.switch is not None and n.intra.router is None
            if not ok:
                violations.append(f"node {n.id} (onu): intra profile must be switch-only")
        elif n.kind in (NodeKind.METRO_SWITCH, NodeKind.GP_DC, NodeKind.SP_DC):
            ok = n.intra is not None and n.intra.switch is not None and n.intra.router is not None
            if not ok:
                violations.append(
                    f"node {n.id} ({n.kind.value}): intra profile must carry router+switch"
                )
        elif n.intra is not None:
            violations.append(f"node {n.id} ({n.kind.value}): unexpected intra profile")

    # Graph shape: whole graph connected; the non-core restriction is a
    # forest (unique simple paths), so only the core may be meshed.
    known = set(ids)
    for link in t.links:
        if link.a not in known or link.b not in known:
            violations.append(f"link {link.a}-{link.b}: endpoint not in topology")
    if t.nodes:
        seen = {t.nodes[0].id}
        queue = deque(seen)
        while queue:
            m = queue.popleft()
            for n in t.adjacency.get(m, ()):
                if n not in seen:
                    seen.add(n)
                    queue.append(n)
        if seen != known:
            violations.append("graph is not connected")

    core_ids = set(t.core_nodes)
    noncore_edges = [l for l in t.links if l.a not in core_ids and l.b not in core_ids]
    noncore_nodes = known - core_ids
    components = _count_components(noncore_nodes, noncore_edges)
    if len(noncore_edges) != len(noncore_nodes) - components:
        violations.append("non-core subgraph contains a cycle (paths are not unique)")

    for n in t.nodes:
        if n.kind is NodeKind.IOT_DEVICE and len(t.adjacency.get(n.id, ())) != 1:
            violations.append(
                f"node {n.id} (iot_device): must have exactly one uplink, "
                f"found {len(t.adjacency.get(n.id, ()))}"
            )

    # Groups must partition the IoT set and match the wiring.
    grouped = [iot for members in t.groups.values() for iot in members]
    iot_ids = set(t.nodes_of_kind(NodeKind.IOT_DEVICE))
    if sorted(grouped) != sorted(iot_ids):
        violations.append("groups do not partition the IoT node set")
    for onu, members in t.groups.items():
        for iot in members:
            if onu not in t.adjacency.get(iot, ()):
                violations.append(f"group wiring: IoT {iot} not attached to ONU {onu}")

    return violations


def _count_components(nodes: set[int], edges: Sequence[Link]) -> int:
    adj: dict[int, list[int]] = {m: [] for m in nodes}
    for l in edges:
        adj[l.a].append(l.b)
        adj[l.b].append(l.a)
    seen: set[int] = set()
    components = 0
    for start in nodes:
        if start in seen:
            continue
        components += 1
        queue = deque([start])
        seen.add(start)
        while queue:
            m = queue.popleft()
            for n in adj[m]:
                if n not in seen:
                    seen.add(n)
                    queue.append(n)
    return components


# ---------------------------------------------------------------------------
# Routing
# ---------------------------------------------------------------------------

def path_between(t: Topology, a: int, b: int) -> list[int]:
    """Unique simple path between two nodes (deterministic BFS).

    The reference graph is a tree outside the core, so shortest paths are
    unique; neighbor exploration in ascending node-id order makes the result
    deterministic regardless.
    """
    if a == b:
        raise ValueError("path_between requires distinct endpoints")
    t.node(a)
    t.node(b)
    parent: dict[int, int] = {a: a}
    queue = deque([a])
    while queue:
        m = queue.popleft()
        if m == b:
            break
        for n in t.adjacency.get(m, ()):
            if n not in parent:
                parent[n] = m
                queue.append(n)
    if b not in parent:
        raise NoPathError(f"no path between {a} and {b}")
    path = [b]
    while path[-1] != a:
        path.append(parent[path[-1]])
    path.reverse()
    return path
