"""Service dependency graph model and preprocessing transforms.

The graph is a simple directed graph: named components connected by
information flows, with no self-loops and no parallel edges. Values are
immutable after construction; every transform returns a new graph.
"""

from __future__ import annotations

import logging
from collections import deque
from dataclasses import dataclass, field
from enum import Enum
from functools import cached_property
from typing import Iterable, Mapping

logger = logging.getLogger(__name__)

#: Lowercase substrings that mark a component as a database at ingestion time.
DATABASE_NAME_TOKENS = ("mysql", "mongo", "database")


class GraphError(ValueError):
    """Raised for structurally invalid graphs or invalid transforms."""


class ComponentKind(Enum):
    SERVICE = "service"
    EXTERNAL = "external"
    DATABASE = "database"


def infer_kind(name: str) -> ComponentKind:
    """Classify a component by name: database-like names get DATABASE."""
    lowered = name.lower()
    if any(token in lowered for token in DATABASE_NAME_TOKENS):
        return ComponentKind.DATABASE
    return ComponentKind.SERVICE


@dataclass(frozen=True)
class ComponentNode:
    """A named, typed component (node) of the dependency graph."""

    name: str
    kind: ComponentKind = ComponentKind.SERVICE

    def __post_init__(self) -> None:
        if not isinstance(self.name, str) or not self.name:
            raise GraphError("component name must be a non-empty string")


@dataclass(frozen=True, order=True)
class InformationFlow:
    """A directed call edge from one component to another."""

    source: str
    target: str

    def __post_init__(self) -> None:
        if self.source == self.target:
            raise GraphError(f"self-loop on {self.source!r} not permitted")


@dataclass(frozen=True)
class ServiceDependencyGraph:
    """Immutable simple directed graph of components and information flows.

    Nodes are kept sorted by name and edges by (source, target) so that
    every derived quantity (adjacency order, matrix layout, output files)
    is deterministic for a given logical graph.
    """

    nodes: tuple[ComponentNode, ...]
    edges: tuple[InformationFlow, ...]
    metadata: Mapping[str, str] = field(default_factory=dict)

    def __post_init__(self) -> None:
        names = [n.name for n in self.nodes]
        if len(set(names)) != len(names):
            dupes = sorted({x for x in names if names.count(x) > 1})
            raise GraphError(f"duplicate node names: {', '.join(dupes)}")
        known = set(names)
        seen_pairs: set[tuple[str, str]] = set()
        for e in self.edges:
            if e.source not in known:
                raise GraphError(f"edge references unknown node {e.source!r}")
            if e.target not in known:
                raise GraphError(f"edge references unknown node {e.target!r}")
            pair = (e.source, e.target)
            if pair in seen_pairs:
                raise GraphError(f"parallel edge {e.source!r} -> {e.target!r}")
            seen_pairs.add(pair)

    @classmethod
    def build(
        cls,
        nodes: Iterable[ComponentNode],
        edges: Iterable[InformationFlow],
        metadata: Mapping[str, str] | None = None,
    ) -> "ServiceDependencyGraph":
        """Construct a graph with canonical node/edge ordering."""
        ordered_nodes = tuple(sorted(nodes, key=lambda n: n.name))
        ordered_edges = tuple(sorted(edges))
        return cls(ordered_nodes, ordered_edges, dict(metadata or {}))

    @property
    def node_count(self) -> int:
        return len(self.nodes)

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    @cached_property
    def node_names(self) -> tuple[str, ...]:
        return tuple(n.name for n in self.nodes)

    @cached_property
    def node_index(self) -> dict[str, int]:
        return {n.name: i for i, n in enumerate(self.nodes)}

    @cached_property
    def successors(self) -> dict[str, tuple[str, ...]]:
        out: dict[str, list[str]] = {n.name: [] for n in self.nodes}
        for e in self.edges:
            out[e.source].append(e.target)
        return {k: tuple(v) for k, v in out.items()}

    @cached_property
    def predecessors(self) -> dict[str, tuple[str, ...]]:
        inc: dict[str, list[str]] = {n.name: [] for n in self.nodes}
        for e in self.edges:
            inc[e.target].append(e.source)
        return {k: tuple(v) for k, v in inc.items()}

    @cached_property
    def undirected_neighbors(self) -> dict[str, tuple[str, ...]]:
        """Neighbor sets with edge directions ignored (each neighbor once)."""
        adj: dict[str, set[str]] = {n.name: set() for n in self.nodes}
        for e in self.edges:
            adj[e.source].add(e.target)
            adj[e.target].add(e.source)
        return {k: tuple(sorted(v)) for k, v in adj.items()}

    def in_degree(self, name: str) -> int:
        return len(self.predecessors[name])

    def out_degree(self, name: str) -> int:
        return len(self.successors[name])

    def total_degree(self, name: str) -> int:
        return self.in_degree(name) + self.out_degree(name)

    def subgraph(self, names: Iterable[str]) -> "ServiceDependencyGraph":
        """Induced subgraph on the given node names (directions preserved)."""
        keep = set(names)
        missing = keep - set(self.node_names)
        if missing:
            raise GraphError(f"unknown nodes: {', '.join(sorted(missing))}")
        nodes = tuple(n for n in self.nodes if n.name in keep)
        edges = tuple(
            e for e in self.edges if e.source in keep and e.target in keep
        )
        return ServiceDependencyGraph(nodes, edges, dict(self.metadata))


@dataclass(frozen=True)
class SanityReport:
    """Edge-count plausibility check for a reconstructed graph."""

    node_count: int
    edge_count: int
    suspicious: bool

    @property
    def verdict(self) -> str:
        return "suspiciously sparse" if self.suspicious else "plausible"


def weak_components(g: ServiceDependencyGraph) -> list[tuple[str, ...]]:
    """All weakly connected components as sorted name tuples.

    Ordered largest first; ties broken by the lexicographically smallest
    member so the result is deterministic.
    """
    unvisited = set(g.node_names)
    components: list[tuple[str, ...]] = []
    while unvisited:
        start = min(unvisited)
        seen = {start}
        queue = deque([start])
        while queue:
            u = queue.popleft()
            for w in g.undirected_neighbors[u]:
                if w not in seen:
                    seen.add(w)
                    queue.append(w)
        unvisited -= seen
        components.append(tuple(sorted(seen)))
    components.sort(key=lambda c: (-len(c), c[0]))
    return components


def extract_gwcc(g: ServiceDependencyGraph) -> ServiceDependencyGraph:
    """Keep only the greatest weakly connected component.

    Component membership ignores edge directions; the induced subgraph
    preserves them. Among equal-size components the one containing the
    lexicographically smallest node name wins.
    """
    if g.node_count == 0:
        raise GraphError("empty graph")
    components = weak_components(g)
    largest = components[0]
    if len(components) > 1:
        dropped = g.node_count - len(largest)
        logger.info(
            "keeping largest weak component (%d nodes), dropping %d node(s) "
            "in %d smaller component(s)",
            len(largest), dropped, len(components) - 1,
        )
    return g.subgraph(largest)


def filter_database_nodes(g: ServiceDependencyGraph) -> ServiceDependencyGraph:
    """Drop single-neighbor databases identified by name.

    Removes every node whose lowercased name contains one of
    ``DATABASE_NAME_TOKENS`` and whose total degree (in + out) is exactly 1,
    i.e. private per-service databases. Shared databases (degree > 1) stay.
    Applied once, not to fixpoint.
    """
    removable = [
        n.name
        for n in g.nodes
        if any(tok in n.name.lower() for tok in DATABASE_NAME_TOKENS)
        and g.total_degree(n.name) == 1
    ]
    if not removable:
        return g
    logger.info("removing %d private database node(s): %s",
                len(removable), ", ".join(sorted(removable)))
    keep = [name for name in g.node_names if name not in set(removable)]
    return g.subgraph(keep)


def sanity_check_edge_count(g: ServiceDependencyGraph) -> SanityReport:
    """Flag graphs with fewer edges than a spanning tree would need.

    A connected graph on N nodes needs at least N-1 edges, so falling short
    of that bound indicates the reconstruction missed connections.
    """
    suspicious = g.edge_count < g.node_count - 1
    return SanityReport(g.node_count, g.edge_count, suspicious)


def preprocess(g: ServiceDependencyGraph) -> ServiceDependencyGraph:
    """Standard preprocessing: drop private databases, then keep the GWCC.

    This order is fixed: removing a degree-1 database can never disconnect
    anything, and doing it first prevents a database-only appendage from
    influencing the component selection.
    """
    return extract_gwcc(filter_database_nodes(g))
