"""Edge-list files and canonical JSON serialization of results.

The edge-list format is one directed layer edge per line,
``source<delim>target<delim>layer``, comma-delimited by default.  A
first content line that spells exactly ``source,target,layer`` (with
the active delimiter) is treated as a header and skipped; blank lines
and lines starting with ``#`` are ignored.  Labels are opaque text and
are never coerced to numbers, so ``01`` and ``1`` stay distinct nodes.
There is no quoting: the delimiter and newlines cannot appear inside
labels.

Result JSON has a fixed key order and sorted label arrays, so two
equal detection results always serialize to identical bytes.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Iterable

from .detection import DetectionResult, SeededRandom, validity_tag
from .errors import (
    DuplicateEdgeError,
    MalformedLineError,
    SelfLoopError,
)
from .network import MultiLayerNetwork

__all__ = [
    "ParsedEdgeList",
    "parse_edge_list",
    "write_edge_list",
    "write_result",
    "result_to_dict",
    "partition_from_json",
    "partition_to_dict",
]

_HEADER_FIELDS = ("source", "target", "layer")


@dataclass
class ParsedEdgeList:
    """Outcome of reading an edge-list document."""

    network: MultiLayerNetwork
    records: int
    had_header: bool
    duplicates_dropped: int


def parse_edge_list(
    source: str | Iterable[str],
    *,
    delimiter: str = ",",
    dedupe: bool = False,
) -> ParsedEdgeList:
    """Build a network from edge-list text.

    ``source`` may be a string of CSV text or any iterable of lines
    (an open file works).  Errors carry the 1-based line number.  With
    ``dedupe=True`` repeated (source, target, layer) triples are
    dropped and counted instead of raising.
    """
    lines = source.splitlines() if isinstance(source, str) else source
    net = MultiLayerNetwork()
    records = 0
    had_header = False
    duplicates = 0
    expect_header = True
    for line_no, raw in enumerate(lines, start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        fields = [f.strip() for f in line.split(delimiter)]
        if expect_header:
            expect_header = False
            if fields == list(_HEADER_FIELDS):
                had_header = True
                continue
        if len(fields) != 3 or any(not f for f in fields):
            raise MalformedLineError(
                f"line {line_no}: expected 3 non-empty fields separated by "
                f"{delimiter!r}, got {raw!r}",
                line=line_no,
            )
        src, dst, layer = fields
        try:
            net.add_edge(src, dst, layer)
        except SelfLoopError:
            raise SelfLoopError(
                f"line {line_no}: self-loop on node {src!r}", line=line_no
            ) from None
        except DuplicateEdgeError:
            if dedupe:
                duplicates += 1
                continue
            raise DuplicateEdgeError(
                f"line {line_no}: duplicate edge ({src!r}, {dst!r}, {layer!r})",
                line=line_no,
            ) from None
        records += 1
    return ParsedEdgeList(
        network=net,
        records=records,
        had_header=had_header,
        duplicates_dropped=duplicates,
    )


def write_edge_list(
    net: MultiLayerNetwork, *, delimiter: str = ",", header: bool = True
) -> str:
    """Serialize a network as edge-list text, sorted canonically.

    Re-parsing the output reproduces the exact edge multiset.  Labels
    containing the delimiter or a newline, and source labels starting
    with ``#``, cannot round-trip and are rejected.
    """
    for label in list(net.nodes()) + list(net.layers()):
        if delimiter in label or "\n" in label or "\r" in label:
            raise ValueError(
                f"label {label!r} contains the delimiter or a newline and "
                "cannot be written as an edge list"
            )
    rows = sorted(net.edges())
    for src, _, _ in rows:
        if src.startswith("#"):
            raise ValueError(
                f"source label {src!r} starts with '#' and would parse as a comment"
            )
    lines = [delimiter.join(_HEADER_FIELDS)] if header else []
    lines.extend(delimiter.join(row) for row in rows)
    return "\n".join(lines) + "\n"


def result_to_dict(result: DetectionResult) -> dict:
    """Plain-dict form of a detection result, with canonical ordering."""
    config = result.config
    seed = (
        config.tie_policy.seed
        if isinstance(config.tie_policy, SeededRandom)
        else None
    )
    return {
        "alpha": config.alpha,
        "validity": validity_tag(config.validity),
        "tie_policy": "random" if isinstance(config.tie_policy, SeededRandom) else "lex",
        "seed": seed,
        "groups": [
            {"id": gid, "nodes": sorted(group)}
            for gid, group in enumerate(result.groups)
        ],
        "singletons": sorted(result.singletons),
        "removals": [
            {
                "step": rec.step,
                "pair": sorted(rec.pair),
                "clecc": rec.clecc,
                "edges_removed": rec.edges_removed,
            }
            for rec in result.removals
        ],
    }


def write_result(result: DetectionResult, pretty: bool = False) -> str:
    """JSON text for a detection result; equal results give equal bytes."""
    payload = result_to_dict(result)
    if pretty:
        return json.dumps(payload, indent=2)
    return json.dumps(payload, separators=(",", ":"))


def partition_to_dict(partition: Iterable[Iterable[str]]) -> dict:
    """Partition as the ``groups`` + ``singletons`` JSON shape.

    Blocks of two or more nodes become groups; one-node blocks are
    listed as singletons.
    """
    groups = []
    singletons = []
    for block in partition:
        nodes = sorted(block)
        if len(nodes) == 1:
            singletons.append(nodes[0])
        else:
            groups.append(nodes)
    return {
        "groups": [{"id": gid, "nodes": nodes} for gid, nodes in enumerate(groups)],
        "singletons": sorted(singletons),
    }


def partition_from_json(text: str) -> list[set[str]]:
    """Read a partition from JSON in the ``groups`` + ``singletons`` shape.

    Accepts both a bare partition document and a full detection result
    (any extra keys are ignored).
    """
    try:
        payload = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ValueError(f"not valid JSON: {exc}") from None
    if not isinstance(payload, dict):
        raise ValueError("partition JSON must be an object")
    blocks: list[set[str]] = []
    for group in payload.get("groups", []):
        nodes = group["nodes"] if isinstance(group, dict) else group
        blocks.append({str(n) for n in nodes})
    for singleton in payload.get("singletons", []):
        blocks.append({str(singleton)})
    return blocks
