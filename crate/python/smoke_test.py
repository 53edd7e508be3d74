"""Smoke test for the pyoneplanar extension.

Imports an installed ``pyoneplanar`` if there is one, otherwise loads the
library cargo left in ``target/``.  Run ``cargo build -p oneplanar-python``
first in the second case.
"""

import glob
import importlib
import importlib.util
import json
import os
import sys

ROOT = os.path.dirname(os.path.dirname(os.path.abspath(__file__)))


def load():
    try:
        return importlib.import_module("pyoneplanar")
    except ImportError:
        pass
    candidates = []
    for profile in ("release", "debug"):
        for pattern in ("libpyoneplanar.so", "libpyoneplanar.dylib", "pyoneplanar.dll"):
            candidates += glob.glob(os.path.join(ROOT, "target", profile, pattern))
    if not candidates:
        sys.exit("pyoneplanar not found; run `cargo build -p oneplanar-python`")
    path = max(candidates, key=os.path.getmtime)
    spec = importlib.util.spec_from_file_location("pyoneplanar", path)
    mod = importlib.util.module_from_spec(spec)
    spec.loader.exec_module(mod)
    return mod


def main():
    op = load()

    assert op.palette_size(5) == 88
    assert op.palette_size(100) == 198

    k6 = op.named_instance("k6_1planar")
    assert op.validate(k6)
    n, edges = op.drawing_graph(k6)
    assert (n, len(edges)) == (6, 15)
    assert op.discharge(k6) == ("-8", "-8")

    d = op.generate("random_oneplanar", n=60, seed=11, fraction="1/2")
    assert d == op.generate("random_oneplanar", n=60, seed=11, fraction="1/2")
    assert op.validate(op.triangulate(d))

    assert op.write_graph6(3, [(0, 1), (0, 2), (1, 2)]) == "Bw"
    assert op.parse_graph6("C~") == (4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)])

    ico_n, ico_edges = op.drawing_graph(op.named_instance("icosahedron"))
    kind, center, nbrs = op.find_configuration(ico_n, ico_edges)
    assert (kind, center, len(nbrs)) == ("C4", 0, 5)
    k9 = [(u, v) for u in range(9) for v in range(u + 1, 9)]
    assert op.find_configuration(9, k9) is None

    colors = op.acyclic_edge_color(n, edges)
    assert len(colors) == 15 and max(colors.values()) < 88
    assert op.verify_acyclic(n, edges, colors)
    c4 = [(0, 1), (1, 2), (2, 3), (0, 3)]
    assert not op.verify_acyclic(4, c4, {(0, 1): 0, (1, 2): 1, (2, 3): 0, (0, 3): 1})
    assert op.oracle_chi_a(4, c4, 10) == 3
    assert op.oracle_chi_a(4, c4, 2) is None

    manifest = json.dumps({"entries": [{"name": "oct", "source": {"named": "octahedron"}}]})
    report = json.loads(op.run_suite(manifest, threads=1))
    assert report["summary"]["failed"] == 0, report["summary"]

    try:
        op.named_instance("nope")
    except ValueError:
        pass
    else:
        raise AssertionError("unknown instance accepted")

    print(f"pyoneplanar {op.__version__}: smoke test passed")


if __name__ == "__main__":
    main()
