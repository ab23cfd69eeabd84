"""Multi-layered social network model.

The core container of the library: a set of labelled nodes, a set of
named layers, and directed edges tagged with the layer they belong to.
Loops are rejected and an ordered (source, target) pair carries at most
one edge per layer, so two nodes are joined by at most ``2 * |L|``
directed edges in total.

Neighbourhood queries deliberately ignore edge direction: two nodes
count as neighbours on a layer as soon as an edge runs between them
either way.  ``multilayer_neighborhood(x, alpha)`` collects the nodes
tied to ``x`` on at least ``alpha`` distinct layers, and
``flatten_alpha`` materialises those pairs as an undirected working
graph (:class:`FlatGraph`).

Externally nodes and layers are identified by opaque string labels;
internally everything runs on dense integer indices, with a per-node
count of how many layers connect it to each neighbour so that
threshold queries are single scans rather than per-layer loops.
"""

from __future__ import annotations

from collections import deque
from typing import Iterable, Iterator

from .errors import (
    AlphaOutOfRangeError,
    DuplicateEdgeError,
    SelfLoopError,
    UnknownLayerError,
    UnknownNodeError,
)

__all__ = ["MultiLayerNetwork", "FlatGraph"]


class MultiLayerNetwork:
    """Directed multi-layer network over string-labelled nodes and layers.

    Nodes and layers register automatically on first use in
    :meth:`add_edge`; isolated nodes and empty layers can be declared
    explicitly with :meth:`add_node` / :meth:`add_layer`.
    """

    def __init__(self):
        self._node_index: dict[str, int] = {}
        self._node_labels: list[str] = []
        self._layer_index: dict[str, int] = {}
        self._layer_labels: list[str] = []
        # adjacency[node][layer] -> set of neighbour indices
        self._out: list[list[set[int]]] = []
        self._in: list[list[set[int]]] = []
        # per node: neighbour index -> number of layers with an edge in
        # either direction (the basis of all alpha-threshold queries)
        self._nbr_layers: list[dict[int, int]] = []
        self._edge_count = 0

    # -- registration -------------------------------------------------

    def add_node(self, label: str) -> int:
        """Register a node label (idempotent) and return its index."""
        idx = self._node_index.get(label)
        if idx is None:
            idx = len(self._node_labels)
            self._node_index[label] = idx
            self._node_labels.append(label)
            width = len(self._layer_labels)
            self._out.append([set() for _ in range(width)])
            self._in.append([set() for _ in range(width)])
            self._nbr_layers.append({})
        return idx

    def add_layer(self, label: str) -> int:
        """Register a layer label (idempotent) and return its index."""
        idx = self._layer_index.get(label)
        if idx is None:
            idx = len(self._layer_labels)
            self._layer_index[label] = idx
            self._layer_labels.append(label)
            for row in self._out:
                row.append(set())
            for row in self._in:
                row.append(set())
        return idx

    def add_edge(self, source: str, target: str, layer: str) -> None:
        """Add the directed edge (source, target) on the given layer.

        Unknown node and layer labels are registered on the fly.
        Raises :class:`SelfLoopError` when source equals target and
        :class:`DuplicateEdgeError` when the triple is already stored.
        """
        if source == target:
            raise SelfLoopError(f"self-loop on node {source!r} is not allowed")
        x = self.add_node(source)
        y = self.add_node(target)
        l = self.add_layer(layer)
        if y in self._out[x][l]:
            raise DuplicateEdgeError(
                f"edge ({source!r}, {target!r}, {layer!r}) already present"
            )
        connected_before = y in self._out[x][l] or y in self._in[x][l]
        self._out[x][l].add(y)
        self._in[y][l].add(x)
        self._edge_count += 1
        if not connected_before:
            self._nbr_layers[x][y] = self._nbr_layers[x].get(y, 0) + 1
            self._nbr_layers[y][x] = self._nbr_layers[y].get(x, 0) + 1

    def remove_pair_edges(self, x: str, y: str) -> int:
        """Delete every edge between x and y, all layers and directions.

        Returns the number of directed edges removed (0 when the pair
        was not connected at all).
        """
        i = self._require_node(x)
        j = self._require_node(y)
        if i == j:
            raise SelfLoopError(f"cannot remove pair edges of {x!r} with itself")
        return self._remove_pair_edges_idx(i, j)

    def _remove_pair_edges_idx(self, i: int, j: int) -> int:
        removed = 0
        for l in range(len(self._layer_labels)):
            if j in self._out[i][l]:
                self._out[i][l].remove(j)
                self._in[j][l].remove(i)
                removed += 1
            if i in self._out[j][l]:
                self._out[j][l].remove(i)
                self._in[i][l].remove(j)
                removed += 1
        if removed:
            self._nbr_layers[i].pop(j, None)
            self._nbr_layers[j].pop(i, None)
            self._edge_count -= removed
        return removed

    # -- basic accessors ----------------------------------------------

    @property
    def node_count(self) -> int:
        return len(self._node_labels)

    @property
    def layer_count(self) -> int:
        return len(self._layer_labels)

    @property
    def edge_count(self) -> int:
        return self._edge_count

    def nodes(self) -> list[str]:
        """Node labels in registration order."""
        return list(self._node_labels)

    def layers(self) -> list[str]:
        """Layer labels in registration order."""
        return list(self._layer_labels)

    def has_node(self, label: str) -> bool:
        return label in self._node_index

    def has_layer(self, label: str) -> bool:
        return label in self._layer_index

    def has_edge(self, source: str, target: str, layer: str) -> bool:
        x = self._node_index.get(source)
        y = self._node_index.get(target)
        l = self._layer_index.get(layer)
        if x is None or y is None or l is None:
            return False
        return y in self._out[x][l]

    def edges(self) -> Iterator[tuple[str, str, str]]:
        """Yield (source, target, layer) triples in a deterministic order.

        Order is source registration order, then layer registration
        order, then target label order within each adjacency set.
        """
        labels = self._node_labels
        for x, row in enumerate(self._out):
            for l, targets in enumerate(row):
                layer = self._layer_labels[l]
                for y in sorted(targets, key=labels.__getitem__):
                    yield labels[x], labels[y], layer

    def node_label(self, index: int) -> str:
        return self._node_labels[index]

    def node_index(self, label: str) -> int:
        return self._require_node(label)

    def layer_label(self, index: int) -> str:
        return self._layer_labels[index]

    def layer_index(self, label: str) -> int:
        return self._require_layer(label)

    def layers_connecting(self, x: str, y: str) -> int:
        """Number of layers carrying an edge between x and y, either way."""
        i = self._require_node(x)
        j = self._require_node(y)
        return self._nbr_layers[i].get(j, 0)

    # -- neighbourhoods ------------------------------------------------

    def neighborhood(self, x: str, layer: str) -> set[str]:
        """Nodes connected to x on the given layer, in either direction."""
        i = self._require_node(x)
        l = self._require_layer(layer)
        labels = self._node_labels
        return {labels[j] for j in self._out[i][l] | self._in[i][l]}

    def multilayer_neighborhood(self, x: str, alpha: int) -> set[str]:
        """Nodes connected to x on at least ``alpha`` distinct layers."""
        i = self._require_node(x)
        self._check_alpha(alpha)
        labels = self._node_labels
        return {labels[j] for j, c in self._nbr_layers[i].items() if c >= alpha}

    def project_layer(self, layer: str) -> "MultiLayerNetwork":
        """Single-layer network with all nodes and only this layer's edges."""
        l = self._require_layer(layer)
        net = MultiLayerNetwork()
        for label in self._node_labels:
            net.add_node(label)
        net.add_layer(layer)
        labels = self._node_labels
        for x, row in enumerate(self._out):
            for y in sorted(row[l]):
                net.add_edge(labels[x], labels[y], layer)
        return net

    def flatten_alpha(self, alpha: int) -> "FlatGraph":
        """Undirected simple graph of the pairs connected on >= alpha layers."""
        self._check_alpha(alpha)
        labels = self._node_labels
        flat = FlatGraph(labels)
        for i, counts in enumerate(self._nbr_layers):
            for j, c in counts.items():
                if j > i and c >= alpha:
                    flat.add_edge(labels[i], labels[j])
        return flat

    def copy(self) -> "MultiLayerNetwork":
        """Independent deep copy (labels, layers, adjacency)."""
        net = MultiLayerNetwork()
        net._node_index = dict(self._node_index)
        net._node_labels = list(self._node_labels)
        net._layer_index = dict(self._layer_index)
        net._layer_labels = list(self._layer_labels)
        net._out = [[set(s) for s in row] for row in self._out]
        net._in = [[set(s) for s in row] for row in self._in]
        net._nbr_layers = [dict(d) for d in self._nbr_layers]
        net._edge_count = self._edge_count
        return net

    # -- internals ------------------------------------------------------

    def _require_node(self, label: str) -> int:
        idx = self._node_index.get(label)
        if idx is None:
            raise UnknownNodeError(f"unknown node {label!r}")
        return idx

    def _require_layer(self, label: str) -> int:
        idx = self._layer_index.get(label)
        if idx is None:
            raise UnknownLayerError(f"unknown layer {label!r}")
        return idx

    def _check_alpha(self, alpha: int) -> None:
        count = len(self._layer_labels)
        if not 1 <= alpha <= count:
            raise AlphaOutOfRangeError(
                f"alpha must be in [1, {count}] for a network with "
                f"{count} layer(s); got {alpha}"
            )

    def _mn_idx(self, i: int, alpha: int) -> set[int]:
        """Multi-layered neighbourhood of node index i, as indices."""
        return {j for j, c in self._nbr_layers[i].items() if c >= alpha}

    def _alpha_adjacency(self, alpha: int) -> list[set[int]]:
        """Fresh undirected index adjacency of the alpha-threshold graph."""
        return [
            {j for j, c in counts.items() if c >= alpha}
            for counts in self._nbr_layers
        ]


class FlatGraph:
    """Undirected simple graph over string node labels.

    Used as the working graph of the divisive detector and for
    degree-based group validity checks.  No loops, no parallel edges.
    """

    def __init__(
        self,
        nodes: Iterable[str] = (),
        edges: Iterable[tuple[str, str]] = (),
    ):
        self._adj: dict[str, set[str]] = {}
        self._edge_count = 0
        for label in nodes:
            self.add_node(label)
        for a, b in edges:
            self.add_edge(a, b)

    def add_node(self, label: str) -> None:
        if label not in self._adj:
            self._adj[label] = set()

    def add_edge(self, a: str, b: str) -> None:
        """Insert the undirected pair {a, b}; re-inserting is a no-op."""
        if a == b:
            raise SelfLoopError(f"self-loop on node {a!r} is not allowed")
        self.add_node(a)
        self.add_node(b)
        if b not in self._adj[a]:
            self._adj[a].add(b)
            self._adj[b].add(a)
            self._edge_count += 1

    @property
    def node_count(self) -> int:
        return len(self._adj)

    @property
    def edge_count(self) -> int:
        return self._edge_count

    def nodes(self) -> list[str]:
        return list(self._adj)

    def has_node(self, label: str) -> bool:
        return label in self._adj

    def has_edge(self, a: str, b: str) -> bool:
        return a in self._adj and b in self._adj[a]

    def neighbors(self, label: str) -> set[str]:
        try:
            return set(self._adj[label])
        except KeyError:
            raise UnknownNodeError(f"unknown node {label!r}") from None

    def degree(self, label: str) -> int:
        try:
            return len(self._adj[label])
        except KeyError:
            raise UnknownNodeError(f"unknown node {label!r}") from None

    def edges(self) -> list[tuple[str, str]]:
        """Sorted list of label pairs, each sorted within the pair."""
        out = []
        for a, nbrs in self._adj.items():
            for b in nbrs:
                if a < b:
                    out.append((a, b))
        out.sort()
        return out

    def connected_components(self) -> list[set[str]]:
        """Partition of the nodes into connected components.

        Components are listed by first appearance of a member in node
        insertion order, so the result is deterministic.
        """
        seen: set[str] = set()
        components: list[set[str]] = []
        for start in self._adj:
            if start in seen:
                continue
            comp = {start}
            queue = deque([start])
            while queue:
                u = queue.popleft()
                for v in self._adj[u]:
                    if v not in comp:
                        comp.add(v)
                        queue.append(v)
            seen |= comp
            components.append(comp)
        return components
