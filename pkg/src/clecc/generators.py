"""Network builders: a worked demo fixture and seeded synthetic models.

Both random generators emit reciprocal directed edge pairs, because
every measure in this library ignores edge direction — one-directional
sampling would only halve the effective densities.  They are pure
functions of their parameters including the seed, so any published run
can be replayed exactly.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

from .errors import InvalidParamsError
from .network import MultiLayerNetwork

__all__ = [
    "demo_network",
    "PlantedParams",
    "PlantedNetwork",
    "generate_planted",
    "generate_density_scenario",
]

_DEMO_EDGES = [
    ("x", "y", "l1"),
    ("y", "x", "l1"),
    ("x", "z", "l1"),
    ("z", "x", "l1"),
    ("y", "z", "l1"),
    ("u", "z", "l1"),
    ("u", "v", "l1"),
    ("v", "u", "l1"),
]


def demo_network() -> MultiLayerNetwork:
    """Five users, one layer, eight directed edges.

    The small friendship network used throughout the documentation and
    tests: x and y, x and z, and u and v know each other reciprocally,
    y and u each point at z one-way.
    """
    net = MultiLayerNetwork()
    for source, target, layer in _DEMO_EDGES:
        net.add_edge(source, target, layer)
    return net


@dataclass(frozen=True)
class PlantedParams:
    """Planted-partition model: dense blocks, sparse in between.

    ``sizes`` gives the community sizes, ``layers`` how many layers to
    sample independently.  On every layer each same-community pair is
    connected with probability ``p_in`` and each cross-community pair
    with probability ``p_out`` (reciprocal edges both times).
    """

    sizes: tuple[int, ...]
    layers: int
    p_in: float
    p_out: float
    seed: int

    def __post_init__(self):
        if not self.sizes or any(s < 1 for s in self.sizes):
            raise InvalidParamsError(f"community sizes must all be >= 1, got {self.sizes}")
        if self.layers < 1:
            raise InvalidParamsError(f"layer count must be >= 1, got {self.layers}")
        for name, p in (("p_in", self.p_in), ("p_out", self.p_out)):
            if not 0.0 <= p <= 1.0:
                raise InvalidParamsError(f"{name} must lie in [0, 1], got {p}")


@dataclass(frozen=True)
class PlantedNetwork:
    """A generated network together with its ground-truth communities."""

    network: MultiLayerNetwork
    truth: dict[str, int]

    def truth_partition(self) -> list[set[str]]:
        """Ground truth as a list of node-label blocks."""
        blocks: dict[int, set[str]] = {}
        for label, community in self.truth.items():
            blocks.setdefault(community, set()).add(label)
        return [blocks[c] for c in sorted(blocks)]


def generate_planted(params: PlantedParams) -> PlantedNetwork:
    """Sample a planted-partition multi-layer network.

    Layers are drawn independently; within a layer the unordered node
    pairs are visited in a fixed order, so the result is a pure
    function of ``params``.
    """
    n = sum(params.sizes)
    width = len(str(n - 1)) if n > 1 else 1
    labels = [f"n{i:0{width}d}" for i in range(n)]
    truth: dict[str, int] = {}
    i = 0
    for community, size in enumerate(params.sizes):
        for _ in range(size):
            truth[labels[i]] = community
            i += 1

    rng = random.Random(params.seed)
    net = MultiLayerNetwork()
    for label in labels:
        net.add_node(label)
    for l in range(params.layers):
        layer = f"l{l + 1}"
        net.add_layer(layer)
        for a in range(n):
            for b in range(a + 1, n):
                p = params.p_in if truth[labels[a]] == truth[labels[b]] else params.p_out
                if rng.random() < p:
                    net.add_edge(labels[a], labels[b], layer)
                    net.add_edge(labels[b], labels[a], layer)
    return PlantedNetwork(network=net, truth=truth)


_SCENARIO_LAYERS = [("dense1", 50_000), ("dense2", 50_000), ("sparse1", 5_000), ("sparse2", 5_000)]


def generate_density_scenario(seed: int) -> MultiLayerNetwork:
    """1000 nodes, four layers of very different density.

    Two layers carry 50,000 directed edges each and two carry 5,000,
    sampled uniformly without loops or duplicate (source, target,
    layer) triples — the setting where tuning alpha between 1 and 4
    changes which ties count as multi-layered.
    """
    n = 1000
    labels = [f"n{i:03d}" for i in range(n)]
    rng = random.Random(seed)
    net = MultiLayerNetwork()
    for label in labels:
        net.add_node(label)
    for layer, edge_count in _SCENARIO_LAYERS:
        net.add_layer(layer)
        # encode ordered pairs (x, y), x != y, as integers below n*(n-1)
        for code in rng.sample(range(n * (n - 1)), edge_count):
            x, rest = divmod(code, n - 1)
            y = rest if rest < x else rest + 1
            net.add_edge(labels[x], labels[y], layer)
    return net
