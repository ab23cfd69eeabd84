"""
Edge-list files, result JSON, and the brute-force cross-check
=============================================================

Networks travel as plain CSV triples (source,target,layer), results as
canonical JSON whose bytes are identical for identical runs.  The
package also ships deliberately naive reference implementations that
recompute everything from raw edges — slow, but independent, which is
exactly what you want when validating the fast paths.
"""

import tempfile
from pathlib import Path

from clecc import (
    DetectionConfig,
    MinSize,
    clecc,
    naive_clecc,
    naive_detect,
    parse_edge_list,
    run_detection,
    write_edge_list,
    write_result,
)
from clecc.cli import cli_main

# ----------------------------------------------------------------------
# Round-tripping a network through text.  The writer emits a header and
# sorted rows, the parser skips the header, ignores blanks and #
# comments, and reports line numbers on bad input.

csv_text = """\
source,target,layer
# the barbell: two triangles bridged by c-d
a,b,l1
b,a,l1
a,c,l1
c,a,l1
b,c,l1
c,b,l1
d,e,l1
e,d,l1
d,f,l1
f,d,l1
e,f,l1
f,e,l1
c,d,l1
d,c,l1
"""

parsed = parse_edge_list(csv_text)
net = parsed.network
print(f"parsed {parsed.records} edges over {net.node_count} nodes")
assert write_edge_list(net) == write_edge_list(parse_edge_list(write_edge_list(net)).network)

# ----------------------------------------------------------------------
# Detection results serialize with fixed key order and sorted labels,
# so equal results are byte-equal — handy for regression files.

config = DetectionConfig(alpha=1, validity=MinSize(3))
result = run_detection(net, config)
print(write_result(result, pretty=True))

# ----------------------------------------------------------------------
# The naive reference recomputes neighbourhoods by scanning every edge
# per query and rebuilds its whole table each iteration.  On anything
# small it must agree with the optimized path to the byte.

assert naive_clecc(net, "c", "d", 1) == clecc(net, "c", "d", 1)
assert write_result(naive_detect(net, config)) == write_result(result)
print("reference implementations agree")

# ----------------------------------------------------------------------
# The same check is wired into the CLI behind --oracle, and the whole
# pipeline is scriptable: generate a benchmark, detect, score.

with tempfile.TemporaryDirectory() as tmp:
    tmp = Path(tmp)
    cli_main([
        "generate", "planted", "--sizes", "12,12", "--layers", "2",
        "--p-in", "0.8", "--p-out", "0.05", "--seed", "3",
        "--output", str(tmp / "bench.csv"), "--truth", str(tmp / "truth.json"),
    ])
    cli_main([
        "detect", "--input", str(tmp / "bench.csv"), "--alpha", "1",
        "--oracle", "--output", str(tmp / "result.json"),
    ])
    print("eval nmi ->", end=" ")
    cli_main([
        "eval", "nmi", "--truth", str(tmp / "truth.json"),
        "--predicted", str(tmp / "result.json"),
    ])
