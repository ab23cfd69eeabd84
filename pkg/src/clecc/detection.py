"""Divisive extraction of multi-layered groups.

The algorithm works on the alpha-flattened view of the network: the
undirected graph whose edges are the node pairs connected on at least
``alpha`` layers.  It repeatedly

1. looks up the candidate pair with the lowest cross-layer edge
   clustering value (ties broken lexicographically or by a seeded
   uniform draw),
2. deletes all layer edges between that pair from a working copy,
3. repairs the value table incrementally (only entries containing one
   of the two endpoints can change), and
4. when the deletion separates a working component, checks each side
   against the configured validity condition, evaluated on the
   *original* network: sides that qualify are frozen as groups and see
   no further removals, one-node sides become singletons, and failing
   sides stay in play.

The loop ends when every node sits in a frozen group or is a
singleton.  Pairs below the alpha threshold never enter the working
graph: they are not candidates and do not count for connectivity, so
every iteration shrinks a finite edge set and termination is
guaranteed.

Validity conditions: ``MinSize(k)`` accepts components with at least
``k`` members; ``WeakCommunity`` requires the summed internal degree of
the member set to exceed its summed external degree; ``StrongCommunity``
requires that node-by-node.  Degrees are counted on the alpha=1
flattening of the original network.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from typing import Iterable, Union

from .errors import EmptyNetworkError, InvalidParamsError
from .measures import CleccTable, clecc_table, _update_after_removal_idx
from .network import MultiLayerNetwork

__all__ = [
    "MinSize",
    "WeakCommunity",
    "StrongCommunity",
    "ValidityCondition",
    "Lexicographic",
    "SeededRandom",
    "TiePolicy",
    "DetectionConfig",
    "RemovalRecord",
    "DetectionResult",
    "validity_tag",
    "parse_validity",
    "validate_group",
    "select_min_pair",
    "run_detection",
]


@dataclass(frozen=True)
class MinSize:
    """Accept a component once it has at least k members."""

    k: int

    def __post_init__(self):
        if self.k < 1:
            raise InvalidParamsError(f"MinSize needs k >= 1, got {self.k}")


@dataclass(frozen=True)
class WeakCommunity:
    """Summed internal degree strictly exceeds summed external degree."""


@dataclass(frozen=True)
class StrongCommunity:
    """Every member's internal degree strictly exceeds its external degree."""


ValidityCondition = Union[MinSize, WeakCommunity, StrongCommunity]


@dataclass(frozen=True)
class Lexicographic:
    """Break value ties by the label-wise smallest pair."""


@dataclass(frozen=True)
class SeededRandom:
    """Break value ties uniformly at random, driven by a fixed seed."""

    seed: int


TiePolicy = Union[Lexicographic, SeededRandom]


@dataclass(frozen=True)
class DetectionConfig:
    alpha: int = 1
    validity: ValidityCondition = WeakCommunity()
    tie_policy: TiePolicy = Lexicographic()
    log_removals: bool = True


@dataclass(frozen=True)
class RemovalRecord:
    """One edge-removal step: which pair went, at what value, how many edges."""

    step: int
    pair: tuple[str, str]
    clecc: float
    edges_removed: int


@dataclass
class DetectionResult:
    """Partition of the nodes into groups and singletons, plus the removal log."""

    config: DetectionConfig
    groups: list[set[str]]
    singletons: list[str]
    removals: list[RemovalRecord] = field(default_factory=list)

    def partition(self) -> list[set[str]]:
        """Groups plus one block per singleton; covers every node exactly once."""
        return [set(g) for g in self.groups] + [{s} for s in self.singletons]


def validity_tag(condition: ValidityCondition) -> str:
    """Stable string form of a validity condition ("min-size:3", "weak", ...)."""
    if isinstance(condition, MinSize):
        return f"min-size:{condition.k}"
    if isinstance(condition, WeakCommunity):
        return "weak"
    if isinstance(condition, StrongCommunity):
        return "strong"
    raise TypeError(f"not a validity condition: {condition!r}")


def parse_validity(tag: str) -> ValidityCondition:
    """Inverse of :func:`validity_tag`."""
    if tag == "weak":
        return WeakCommunity()
    if tag == "strong":
        return StrongCommunity()
    if tag.startswith("min-size:"):
        try:
            k = int(tag.split(":", 1)[1])
        except ValueError:
            raise InvalidParamsError(f"bad min-size value in {tag!r}") from None
        return MinSize(k)
    raise InvalidParamsError(
        f"unknown validity condition {tag!r}; expected min-size:K, weak or strong"
    )


def _condition_holds(
    condition: ValidityCondition,
    members: set[int],
    flat1: list[set[int]],
) -> bool:
    """Evaluate a condition for a member set against alpha=1 adjacency."""
    if isinstance(condition, MinSize):
        return len(members) >= condition.k
    if isinstance(condition, WeakCommunity):
        internal = 0
        external = 0
        for v in members:
            inside = len(flat1[v] & members)
            internal += inside
            external += len(flat1[v]) - inside
        return internal > external
    if isinstance(condition, StrongCommunity):
        for v in members:
            inside = len(flat1[v] & members)
            if inside <= len(flat1[v]) - inside:
                return False
        return len(members) > 0
    raise TypeError(f"not a validity condition: {condition!r}")


def validate_group(
    net: MultiLayerNetwork,
    members: Iterable[str],
    condition: ValidityCondition,
) -> bool:
    """Does the member set qualify as a group in this (original) network?

    Degree-based conditions count internal and external neighbours on
    the alpha=1 flattening, i.e. a pair is adjacent when any layer
    connects it in any direction.
    """
    idx = {net.node_index(label) for label in members}
    flat1 = net._alpha_adjacency(1) if net.layer_count else [set()] * net.node_count
    return _condition_holds(condition, idx, flat1)


def select_min_pair(
    table: CleccTable,
    policy: TiePolicy,
    rng: random.Random | None = None,
) -> tuple[str, str]:
    """Pair attaining the table's minimum value, label-sorted.

    Under :class:`SeededRandom` the draw among tied pairs is uniform;
    pass ``rng`` to continue an existing sequence, otherwise a fresh
    generator is seeded from the policy.
    """
    key = _select_min_idx(table, policy, rng)
    a, b = table._label_of[key[0]], table._label_of[key[1]]
    return (a, b) if a < b else (b, a)


def _select_min_idx(
    table: CleccTable,
    policy: TiePolicy,
    rng: random.Random | None,
) -> tuple[int, int]:
    if isinstance(policy, Lexicographic):
        return table._select_min_lex()
    if isinstance(policy, SeededRandom):
        if rng is None:
            rng = random.Random(policy.seed)
        return table._select_min_random(rng)
    raise TypeError(f"not a tie policy: {policy!r}")


def _split_components(
    adj: list[set[int]], a: int, b: int
) -> tuple[set[int], set[int]] | None:
    """Components of a and b after their direct edge was dropped.

    Returns ``None`` while a and b are still connected.  Searches from
    both endpoints, always growing the smaller frontier, so the cost is
    bounded by the smaller side when they did separate.
    """
    seen_a, seen_b = {a}, {b}
    frontier_a, frontier_b = [a], [b]
    while frontier_a and frontier_b:
        if len(frontier_a) <= len(frontier_b):
            frontier, seen, other = frontier_a, seen_a, seen_b
        else:
            frontier, seen, other = frontier_b, seen_b, seen_a
        nxt = []
        for u in frontier:
            for v in adj[u]:
                if v in seen:
                    continue
                if v in other:
                    return None
                seen.add(v)
                nxt.append(v)
        if frontier is frontier_a:
            frontier_a = nxt
        else:
            frontier_b = nxt
    if frontier_a:
        seen_a = _full_component(adj, a)
    elif frontier_b:
        seen_b = _full_component(adj, b)
    return seen_a, seen_b


def _full_component(adj: list[set[int]], start: int) -> set[int]:
    comp = {start}
    stack = [start]
    while stack:
        u = stack.pop()
        for v in adj[u]:
            if v not in comp:
                comp.add(v)
                stack.append(v)
    return comp


def run_detection(net: MultiLayerNetwork, config: DetectionConfig) -> DetectionResult:
    """Run the divisive algorithm and return the extracted partition.

    The input network is never mutated; removals happen on a private
    working copy while validity is judged against the original.  With
    ``Lexicographic`` ties the run is fully deterministic; with
    ``SeededRandom`` it is a pure function of the seed.
    """
    n = net.node_count
    if n == 0:
        raise EmptyNetworkError("detection needs at least one node")
    net._check_alpha(config.alpha)
    if isinstance(config.tie_policy, SeededRandom):
        rng = random.Random(config.tie_policy.seed)
    else:
        rng = None

    work = net.copy()
    table = clecc_table(work, config.alpha)
    adj = work._alpha_adjacency(config.alpha)
    labels = work._node_labels
    flat1: list[set[int]] | None = None  # built on first weak/strong check

    frozen = [False] * n
    groups_idx: list[list[int]] = []
    removals: list[RemovalRecord] = []
    step = 0

    def freeze(members: set[int]) -> None:
        for v in members:
            frozen[v] = True
            for w in adj[v]:
                if w > v:
                    table._delete((v, w))
        groups_idx.append(sorted(members))

    def qualifies(members: set[int]) -> bool:
        nonlocal flat1
        if isinstance(config.validity, MinSize):
            return len(members) >= config.validity.k
        if flat1 is None:
            flat1 = net._alpha_adjacency(1)
        return _condition_holds(config.validity, members, flat1)

    while len(table):
        step += 1
        i, j = _select_min_idx(table, config.tie_policy, rng)
        value = table._values[(i, j)]
        edges_removed = work._remove_pair_edges_idx(i, j)
        _update_after_removal_idx(table, work, (i, j))
        adj[i].discard(j)
        adj[j].discard(i)
        if config.log_removals:
            a, b = labels[i], labels[j]
            pair = (a, b) if a < b else (b, a)
            removals.append(RemovalRecord(step, pair, float(value), edges_removed))

        split = _split_components(adj, i, j)
        if split is None:
            continue
        comp_i, comp_j = split
        # inspect the side holding the label-wise smaller endpoint first
        if labels[i] <= labels[j]:
            sides = (comp_i, comp_j)
        else:
            sides = (comp_j, comp_i)
        for comp in sides:
            # one-node sides are terminal singletons, never groups
            if len(comp) > 1 and qualifies(comp):
                freeze(comp)

    # the table is empty: every unfrozen node is now isolated in the
    # working graph, i.e. a singleton
    groups = [{labels[v] for v in comp} for comp in groups_idx]
    singletons = [labels[v] for v in range(n) if not frozen[v]]
    return DetectionResult(
        config=config,
        groups=groups,
        singletons=singletons,
        removals=removals,
    )
