"""Edge clustering measures for single- and multi-layer networks.

Two measures live here:

* ``ecc(net, x, y)`` — the classic single-layer edge clustering
  coefficient ``(z + 1) / s`` where ``z`` counts the triangles realised
  on the edge and ``s = min(deg(x) - 1, deg(y) - 1)`` counts the
  triangles the edge could possibly close.
* ``clecc(net, x, y, alpha)`` — the cross-layer generalisation: the
  share of alpha-neighbours the two nodes have in common,
  ``|MN(x) & MN(y)| / |(MN(x) | MN(y)) - {x, y}|``, where ``MN`` is the
  multi-layered neighbourhood at the chosen alpha.

``clecc_table`` evaluates the measure for every candidate pair (the
pairs connected on at least alpha layers) and ``update_after_removal``
repairs such a table exactly after all edges of one pair were deleted:
only entries containing one of the two endpoints can change, because a
pair's value depends solely on the neighbourhoods of its members.

Values are kept as exact rationals (:class:`fractions.Fraction`) so
that minimum selection and tie detection never suffer floating-point
artifacts; convert with ``float()`` for display.
"""

from __future__ import annotations

import heapq
import random
from fractions import Fraction
from itertools import islice
from typing import Iterator

from .errors import (
    EmptyTableError,
    InconsistentTableError,
    NotAdjacentError,
)
from .network import MultiLayerNetwork

__all__ = ["CleccTable", "ecc", "clecc", "clecc_table", "update_after_removal"]


def _candidate_value(a: set[int], b: set[int]) -> Fraction:
    """Value for a candidate pair, i.e. one inside each other's MN.

    For such pairs both endpoints sit in the union of the two
    neighbourhoods, so the denominator is |a| + |b| - |a & b| - 2.
    A zero denominator forces a zero numerator (the pair's only
    alpha-neighbours are each other) and is defined as 1: a mutually
    exclusive dyad is maximally embedded in itself.
    """
    inter = len(a & b)
    den = len(a) + len(b) - inter - 2
    if den == 0:
        return Fraction(1)
    return Fraction(inter, den)


class CleccTable:
    """Mapping from unordered candidate node pair to its exact value.

    Besides plain lookups the table maintains a value-bucket index and
    a lazy min-heap so the current minimum value, and the full set of
    pairs attaining it, are available cheaply — that is what the
    divisive detector loops over.  Pairs are stored as index tuples;
    the public surface speaks labels.
    """

    def __init__(self, alpha: int, index_of: dict[str, int], label_of: list[str]):
        self.alpha = alpha
        self._index_of = index_of
        self._label_of = label_of
        self._values: dict[tuple[int, int], Fraction] = {}
        self._buckets: dict[Fraction, dict[tuple[int, int], None]] = {}
        self._heap: list[Fraction] = []
        self._rank: list[int] | None = None

    # -- public, label-based ------------------------------------------

    def __len__(self) -> int:
        return len(self._values)

    def __contains__(self, pair: tuple[str, str]) -> bool:
        key = self._key_from_labels(pair)
        return key is not None and key in self._values

    def value(self, x: str, y: str) -> Fraction:
        key = self._key_from_labels((x, y))
        if key is None or key not in self._values:
            raise KeyError(f"no table entry for pair ({x!r}, {y!r})")
        return self._values[key]

    def items(self) -> Iterator[tuple[tuple[str, str], Fraction]]:
        """Yield ((label_a, label_b), value) with each pair label-sorted."""
        label_of = self._label_of
        for (i, j), v in self._values.items():
            a, b = label_of[i], label_of[j]
            if b < a:
                a, b = b, a
            yield (a, b), v

    def pairs(self) -> list[tuple[str, str]]:
        return sorted(pair for pair, _ in self.items())

    def min_value(self) -> Fraction:
        """Smallest value currently stored; EmptyTableError when empty."""
        return self._peek_min()

    def as_dict(self) -> dict[tuple[str, str], Fraction]:
        return dict(self.items())

    # -- internal, index-based ----------------------------------------

    def _key_from_labels(self, pair: tuple[str, str]) -> tuple[int, int] | None:
        i = self._index_of.get(pair[0])
        j = self._index_of.get(pair[1])
        if i is None or j is None:
            return None
        return (i, j) if i < j else (j, i)

    def _get(self, key: tuple[int, int]) -> Fraction | None:
        return self._values.get(key)

    def _set(self, key: tuple[int, int], value: Fraction) -> None:
        old = self._values.get(key)
        if old is not None:
            if old == value:
                return
            bucket = self._buckets[old]
            del bucket[key]
            if not bucket:
                del self._buckets[old]
        self._values[key] = value
        bucket = self._buckets.get(value)
        if bucket is None:
            self._buckets[value] = {key: None}
            heapq.heappush(self._heap, value)
        else:
            bucket[key] = None

    def _delete(self, key: tuple[int, int]) -> None:
        value = self._values.pop(key)
        bucket = self._buckets[value]
        del bucket[key]
        if not bucket:
            del self._buckets[value]

    def _peek_min(self) -> Fraction:
        heap = self._heap
        while heap and heap[0] not in self._buckets:
            heapq.heappop(heap)
        if not heap:
            raise EmptyTableError("the table has no entries")
        return heap[0]

    def _min_bucket(self) -> dict[tuple[int, int], None]:
        return self._buckets[self._peek_min()]

    def _label_rank(self) -> list[int]:
        """Rank of each node index under label (string) order."""
        labels = self._label_of
        if self._rank is None or len(self._rank) != len(labels):
            order = sorted(range(len(labels)), key=labels.__getitem__)
            rank = [0] * len(labels)
            for r, i in enumerate(order):
                rank[i] = r
            self._rank = rank
        return self._rank

    def _lex_key(self, key: tuple[int, int]):
        rank = self._label_rank()
        a, b = rank[key[0]], rank[key[1]]
        return (a, b) if a < b else (b, a)

    def _select_min_lex(self) -> tuple[int, int]:
        return min(self._min_bucket(), key=self._lex_key)

    def _select_min_random(self, rng: random.Random) -> tuple[int, int]:
        bucket = self._min_bucket()
        pick = rng.randrange(len(bucket))
        return next(islice(iter(bucket), pick, None))


def ecc(net: MultiLayerNetwork, x: str, y: str) -> float | None:
    """Edge clustering coefficient of the edge {x, y} in a one-layer network.

    Counts common neighbours of the endpoints (triangles realised on
    the edge) against ``min(deg(x) - 1, deg(y) - 1)`` (triangles the
    edge could close).  Degrees ignore edge direction.  Returns ``None``
    when the denominator is zero, i.e. one endpoint has no other
    neighbour; the value is undefined there rather than infinite.
    """
    if net.layer_count != 1:
        raise ValueError(
            "ecc is a single-layer measure; project the network onto one "
            f"layer first (got {net.layer_count} layers)"
        )
    i = net.node_index(x)
    j = net.node_index(y)
    adj = net._alpha_adjacency(1)
    if j not in adj[i]:
        raise NotAdjacentError(f"no edge between {x!r} and {y!r}")
    triangles = len(adj[i] & adj[j])
    possible = min(len(adj[i]) - 1, len(adj[j]) - 1)
    if possible == 0:
        return None
    return (triangles + 1) / possible


def clecc(net: MultiLayerNetwork, x: str, y: str, alpha: int) -> float:
    """Cross-layer edge clustering coefficient of the pair {x, y}.

    Shared alpha-neighbours of the pair over all alpha-neighbours of
    the pair (the pair itself excluded from the union).  Defined for
    any two distinct nodes, adjacent or not; the 0/0 case (no
    alpha-neighbours besides possibly each other) is pinned to 1.0.
    """
    if x == y:
        raise ValueError(f"pair must consist of two distinct nodes, got {x!r} twice")
    i = net.node_index(x)
    j = net.node_index(y)
    net._check_alpha(alpha)
    a = net._mn_idx(i, alpha)
    b = net._mn_idx(j, alpha)
    inter = len(a & b)
    den = len(a) + len(b) - inter - (j in a) - (i in b)
    if den == 0:
        return 1.0
    return inter / den


def clecc_table(net: MultiLayerNetwork, alpha: int) -> CleccTable:
    """Evaluate the measure for every pair connected on >= alpha layers."""
    net._check_alpha(alpha)
    table = CleccTable(alpha, net._node_index, net._node_labels)
    mn = net._alpha_adjacency(alpha)
    for i, a in enumerate(mn):
        for j in a:
            if j > i:
                table._set((i, j), _candidate_value(a, mn[j]))
    return table


def update_after_removal(
    table: CleccTable, net: MultiLayerNetwork, x: str, y: str
) -> CleccTable:
    """Repair a table right after ``net.remove_pair_edges(x, y)``.

    Drops the {x, y} entry and recomputes every entry containing x or
    y against the current network.  No other entry can have changed:
    a value depends only on the neighbourhoods of its own two nodes,
    and deleting x–y edges alters only the neighbourhoods of x and y.
    The table ends up identical to a from-scratch rebuild.  Mutates and
    returns ``table``.
    """
    i = net.node_index(x)
    j = net.node_index(y)
    key = (i, j) if i < j else (j, i)
    if table._get(key) is None:
        raise InconsistentTableError(
            f"pair ({x!r}, {y!r}) has no table entry; the table does not "
            "match the network this removal was applied to"
        )
    _update_after_removal_idx(table, net, key)
    return table


def _update_after_removal_idx(
    table: CleccTable, net: MultiLayerNetwork, key: tuple[int, int]
) -> None:
    table._delete(key)
    alpha = table.alpha
    mn_cache: dict[int, set[int]] = {}
    for e in key:
        mn_e = net._mn_idx(e, alpha)
        for z in mn_e:
            mn_z = mn_cache.get(z)
            if mn_z is None:
                mn_z = mn_cache[z] = net._mn_idx(z, alpha)
            pair = (e, z) if e < z else (z, e)
            table._set(pair, _candidate_value(mn_e, mn_z))
        mn_cache[e] = mn_e
