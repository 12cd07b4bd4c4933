"""Weighted clump graphs: layered, colored, weighted vertex sets with
adjacency implied by saturation, plus blow-up to plain graphs and BFS
metrics.

A clump is identified by its (layer, color) pair; at most one clump per
pair may exist.  Two clumps are adjacent iff they sit in the same or
consecutive layers and carry different colors.  Adjacency is always
derived from this rule, never stored.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence


class ClumpGraphError(ValueError):
    """Raised when a layered clump description violates the structural rules."""


@dataclass(frozen=True)
class Clump:
    layer: int
    color: int
    weight: int


@dataclass(frozen=True)
class LayerProfile:
    """Per-layer totals of a clump graph.

    ell[i] is the total weight of layer i (the order of the layer after
    blow-up), clump_counts[i] the number of clumps, colors[i] the color
    set.  Out-of-range layers count as empty.
    """

    ell: tuple[int, ...]
    clump_counts: tuple[int, ...]
    colors: tuple[frozenset[int], ...]
    n: int
    diameter_index: int

    def ell_at(self, i: int) -> int:
        if 0 <= i <= self.diameter_index:
            return self.ell[i]
        return 0

    def count_at(self, i: int) -> int:
        if 0 <= i <= self.diameter_index:
            return self.clump_counts[i]
        return 0

    def is_single(self, i: int) -> bool:
        return self.count_at(i) == 1

    @property
    def singles(self) -> frozenset[int]:
        return frozenset(i for i, c in enumerate(self.clump_counts) if c == 1)


class WeightedClumpGraph:
    """A k-colored, layered, weighted clump graph with derived adjacency."""

    def __init__(self, k: int, layers: Sequence[Sequence[Clump]], rooted: bool = True):
        self.k = k
        self.layers = tuple(
            tuple(sorted(layer, key=lambda c: c.color)) for layer in layers
        )
        self.rooted = rooted
        self._validate()

    # -- validation ------------------------------------------------------

    def _validate(self) -> None:
        if self.k < 2:
            raise ClumpGraphError(f"color count k={self.k} must be at least 2")
        if not self.layers:
            raise ClumpGraphError("graph must have at least one layer")
        for i, layer in enumerate(self.layers):
            if not layer:
                raise ClumpGraphError(f"layer {i} is empty")
            seen: set[int] = set()
            for c in layer:
                if c.layer != i:
                    raise ClumpGraphError(
                        f"clump {c} stored in layer {i} carries layer index {c.layer}"
                    )
                if not 0 <= c.color < self.k:
                    raise ClumpGraphError(
                        f"layer {i}: color {c.color} outside [0, {self.k})"
                    )
                if c.color in seen:
                    raise ClumpGraphError(f"layer {i}: duplicate color {c.color}")
                if c.weight < 1:
                    raise ClumpGraphError(f"layer {i}: weight {c.weight} < 1")
                seen.add(c.color)
        if self.rooted:
            root_layer = self.layers[0]
            if len(root_layer) != 1 or root_layer[0].weight != 1:
                raise ClumpGraphError(
                    "rooted graph needs a single weight-1 clump in layer 0"
                )
        # every clump must be reachable from the previous layer
        for i in range(1, len(self.layers)):
            prev_colors = {c.color for c in self.layers[i - 1]}
            for c in self.layers[i]:
                if prev_colors <= {c.color}:
                    raise ClumpGraphError(
                        f"layer {i}: clump of color {c.color} has no "
                        f"differently-colored clump in layer {i - 1}"
                    )

    # -- basic queries ---------------------------------------------------

    @property
    def diameter_index(self) -> int:
        """Index D of the last layer (layers run L_0 .. L_D)."""
        return len(self.layers) - 1

    @property
    def total_weight(self) -> int:
        return sum(c.weight for layer in self.layers for c in layer)

    def clumps(self) -> Iterator[Clump]:
        for layer in self.layers:
            yield from layer

    def clump_at(self, layer: int, color: int) -> Clump:
        for c in self.layers[layer]:
            if c.color == color:
                return c
        raise KeyError((layer, color))

    def has_clump(self, layer: int, color: int) -> bool:
        if not 0 <= layer <= self.diameter_index:
            return False
        return any(c.color == color for c in self.layers[layer])

    def neighbors(self, layer: int, color: int) -> Iterator[Clump]:
        """Clumps adjacent to (layer, color) under the saturation rule."""
        if not self.has_clump(layer, color):
            raise KeyError((layer, color))
        for j in (layer - 1, layer, layer + 1):
            if 0 <= j <= self.diameter_index:
                for c in self.layers[j]:
                    if c.color != color:
                        yield c

    def colors_of_layer(self, i: int) -> frozenset[int]:
        if 0 <= i <= self.diameter_index:
            return frozenset(c.color for c in self.layers[i])
        return frozenset()

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, WeightedClumpGraph):
            return NotImplemented
        return (self.k, self.layers, self.rooted) == (other.k, other.layers, other.rooted)

    def __hash__(self) -> int:
        return hash((self.k, self.layers, self.rooted))

    def __repr__(self) -> str:
        shape = [len(layer) for layer in self.layers]
        return f"WeightedClumpGraph(k={self.k}, layers={shape}, n={self.total_weight})"


def make_clump_graph(
    k: int,
    layers: Sequence[Sequence[tuple[int, int]]],
    rooted: bool = True,
) -> WeightedClumpGraph:
    """Build a validated clump graph from (color, weight) pairs per layer."""
    built = [
        [Clump(layer=i, color=color, weight=weight) for color, weight in layer]
        for i, layer in enumerate(layers)
    ]
    return WeightedClumpGraph(k, built, rooted=rooted)


def weighted_degree(graph: WeightedClumpGraph, layer: int, color: int) -> int:
    """Sum of the weights of the neighbors of clump (layer, color).

    Equals the plain-graph degree of every blown-up copy of the clump.
    """
    return sum(c.weight for c in graph.neighbors(layer, color))


def min_weighted_degree(graph: WeightedClumpGraph) -> int:
    return min(
        weighted_degree(graph, c.layer, c.color) for c in graph.clumps()
    )


def layer_profile(graph: WeightedClumpGraph) -> LayerProfile:
    ell = tuple(sum(c.weight for c in layer) for layer in graph.layers)
    counts = tuple(len(layer) for layer in graph.layers)
    colors = tuple(frozenset(c.color for c in layer) for layer in graph.layers)
    return LayerProfile(
        ell=ell,
        clump_counts=counts,
        colors=colors,
        n=sum(ell),
        diameter_index=graph.diameter_index,
    )


# -- simple graphs and blow-up ------------------------------------------


class SimpleGraph:
    """Plain undirected graph as sorted adjacency lists, no loops or
    parallel edges."""

    def __init__(self, n: int, edges: Iterable[tuple[int, int]]):
        self.n = n
        adjacency: list[set[int]] = [set() for _ in range(n)]
        for u, v in edges:
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) outside vertex range")
            adjacency[u].add(v)
            adjacency[v].add(u)
        self.adjacency = [sorted(s) for s in adjacency]

    @property
    def m(self) -> int:
        return sum(len(a) for a in self.adjacency) // 2

    def edges(self) -> Iterator[tuple[int, int]]:
        for u, nbrs in enumerate(self.adjacency):
            for v in nbrs:
                if u < v:
                    yield (u, v)

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])


def blow_up(graph: WeightedClumpGraph) -> SimpleGraph:
    """Expand every clump into `weight` independent copies.

    Vertex order is layer-major, then color, then copy index, so exports
    are byte-for-byte reproducible.
    """
    index: dict[tuple[int, int], range] = {}
    next_id = 0
    for layer in graph.layers:
        for c in layer:
            index[(c.layer, c.color)] = range(next_id, next_id + c.weight)
            next_id += c.weight
    edges: list[tuple[int, int]] = []
    for layer in graph.layers:
        for c in layer:
            for nbr in graph.neighbors(c.layer, c.color):
                if (nbr.layer, nbr.color) <= (c.layer, c.color):
                    continue  # emit each clump pair once
                for u in index[(c.layer, c.color)]:
                    for v in index[(nbr.layer, nbr.color)]:
                        edges.append((u, v))
    return SimpleGraph(next_id, edges)


def bfs_distances(graph: SimpleGraph, source: int) -> list[int]:
    dist = [-1] * graph.n
    dist[source] = 0
    queue = deque([source])
    while queue:
        u = queue.popleft()
        for v in graph.adjacency[u]:
            if dist[v] < 0:
                dist[v] = dist[u] + 1
                queue.append(v)
    return dist


def diameter(graph: SimpleGraph) -> int:
    """Exact diameter by BFS from every vertex; errors on disconnected input."""
    if graph.n == 0:
        raise ValueError("empty graph has no diameter")
    best = 0
    for source in range(graph.n):
        dist = bfs_distances(graph, source)
        ecc = max(dist)
        if min(dist) < 0:
            raise ValueError("graph is disconnected")
        best = max(best, ecc)
    return best


def _clump_bfs(graph: WeightedClumpGraph, source: tuple[int, int]) -> dict[tuple[int, int], int]:
    dist = {source: 0}
    queue = deque([source])
    while queue:
        cur = queue.popleft()
        for nbr in graph.neighbors(*cur):
            key = (nbr.layer, nbr.color)
            if key not in dist:
                dist[key] = dist[cur] + 1
                queue.append(key)
    return dist


def blow_up_diameter(graph: WeightedClumpGraph) -> int:
    """Diameter of blow_up(graph) computed at clump level.

    Copies of one clump share their neighborhood, so the distance between
    distinct blown-up vertices is the clump-graph distance when the clumps
    differ and 2 when they coincide (weight >= 2).  A pair of clumps that
    are i and j layers deep satisfies dist <= (j - i) + 2, because every
    clump can walk back one layer per step and fix up the endpoint within
    two extra steps.  Hence only pairs spanning at least D - 1 layers can
    exceed the trivial lower bound D, and BFS from the first and last two
    layers decides the diameter exactly.  Cross-checked against
    diameter(blow_up(...)) in the tests.
    """
    num_clumps = sum(len(layer) for layer in graph.layers)
    if num_clumps == 1:
        only = graph.layers[0][0]
        if only.weight >= 2:
            raise ValueError("two copies of an isolated clump are disconnected")
        return 0
    d_index = graph.diameter_index
    boundary_layers = {0, 1, d_index - 1, d_index} & set(range(d_index + 1))
    best = 2 if any(c.weight >= 2 for c in graph.clumps()) else 1
    span_cap = d_index  # pairs within this span cannot beat span + 2 <= D
    for i in boundary_layers:
        for c in graph.layers[i]:
            dist = _clump_bfs(graph, (c.layer, c.color))
            if len(dist) != num_clumps:
                raise ValueError("clump graph is disconnected")
            best = max(best, max(dist.values()))
    # interior pairs are bounded by span + 2; make sure that cannot win
    if d_index >= 2 and span_cap - 2 + 2 > best:
        best = max(best, d_index)  # root eccentricity is exactly D
    return best


def export_edge_list(graph: SimpleGraph) -> str:
    """Text edge list: header "n m", then one "u v" line per edge."""
    lines = [f"{graph.n} {graph.m}"]
    lines.extend(f"{u} {v}" for u, v in graph.edges())
    return "\n".join(lines) + "\n"
