#!/usr/bin/env python3
"""Smoke test for the sombor_py extension module.

Build the extension first, then run this script:

    cargo build -p sombor-py --release
    python3 python/smoke_test.py

The script locates the built cdylib under target/, stages it under the
importable name `sombor_py`, and checks a handful of known values.
"""

import math
import shutil
import sys
import tempfile
from pathlib import Path

ROOT = Path(__file__).resolve().parent.parent


def stage_module() -> None:
    names = ["libsombor_py.so", "libsombor_py.dylib", "sombor_py.dll"]
    candidates = [
        ROOT / "target" / profile / name
        for profile in ("release", "debug")
        for name in names
    ]
    built = next((p for p in candidates if p.exists()), None)
    if built is None:
        sys.exit(
            "sombor_py cdylib not found; run `cargo build -p sombor-py` first"
        )
    stage = Path(tempfile.mkdtemp(prefix="sombor_py_"))
    suffix = ".pyd" if built.suffix == ".dll" else ".so"
    shutil.copy2(built, stage / f"sombor_py{suffix}")
    sys.path.insert(0, str(stage))


def close(a: float, b: float, tol: float = 1e-9) -> bool:
    return abs(a - b) <= tol * (1.0 + abs(b))


def main() -> None:
    stage_module()
    import sombor_py as sp

    s2, s5, s13 = math.sqrt(2), math.sqrt(5), math.sqrt(13)

    # Graph construction and census of the two-ring chain.
    naphthalene = sp.build_chain_graph("hex:2:")
    assert naphthalene.vertex_count == 10
    assert naphthalene.edge_count == 11
    assert naphthalene.census() == {(2, 2): 6, (2, 3): 4, (3, 3): 1}
    assert naphthalene.average_degree() == (11, 5)
    assert close(naphthalene.sombor(0.0), 15 * s2 + 4 * s13)
    assert close(naphthalene.sombor_variant("reduced"), 8 * s2 + 4 * s5)

    # JSON round trip through the canonical form.
    again = sp.Graph.from_json(naphthalene.to_json())
    assert again.edges() == naphthalene.edges()

    # Incremental chain census and index agree with a built graph.
    assert sp.chain_census("hex:4:22") == (6, 12, 3)
    graph = sp.build_chain_graph("phen:3:2")
    assert close(sp.chain_index("phen:3:2", "plain"), graph.sombor(0.0))

    # Closed-form expectations and their exhaustive oracle.
    closed = sp.expected_value("hex", 6, 1 / 3, 1 / 3, "plain")
    assert close(sp.exact_expectation("hex", 6, 1 / 3, 1 / 3, 0.0), closed)
    lo, hi = sp.chain_extreme_values("hex", 6, "plain")
    assert lo < closed < hi
    assert close(sp.chain_average("hex", 6, 0.0), closed)
    gap_plain, gap_reduced = sp.expectation_gaps(6)
    assert close(gap_plain, 45 * s2) and close(gap_reduced, 30 * s2)

    # Lattice families: census summaries and the two coronoid routes.
    sheet = sp.build_graphene_graph(2, 2)
    summary = sp.family_census_summary("graphene", n=2, k=2)
    assert summary["vertices"] == sheet.vertex_count
    assert sheet.census() == {
        (2, 2): summary["m22"],
        (2, 3): summary["m23"],
        (3, 3): summary["m33"],
    }
    cone = sp.build_nanocone_graph(5, 1)
    assert close(cone.sombor(0.0), sp.family_index("nanocone", "plain", k=5, n=1))
    census_route = sp.family_index("coronoid", "plain", "census", n=3, p=1, r=1)
    paper_route = sp.family_index("coronoid", "plain", "paper", n=3, p=1, r=1)
    assert close(census_route, 60 * s2 + 28 * s13)
    assert close(paper_route, 28 * s13 + 75 * s2)
    assert sp.family_average_degree("coronoid", n=3, p=1, r=1) == (5, 2)

    # Monte Carlo: deterministic across worker counts, zero error at n = 2.
    one = sp.mc_estimate("phen", 30, 0.3, 0.4, "plain", 20000, 7, workers=1)
    four = sp.mc_estimate("phen", 30, 0.3, 0.4, "plain", 20000, 7, workers=4)
    assert one["mean"] == four["mean"]
    assert one["std_error"] == four["std_error"]
    trivial = sp.mc_estimate("hex", 2, 0.5, 0.5, "plain", 100, 0)
    assert trivial["std_error"] == 0.0
    assert close(trivial["mean"], 15 * s2 + 4 * s13)

    # Enumeration and sampling surfaces.
    assert len(sp.enumerate_chain_specs("hex", 5)) == 27
    spec = sp.sample_chain_spec("hex", 8, 0.0, 1.0, seed=1)
    assert spec == "hex:8:222222"

    # Errors surface as ValueError.
    for bad in (
        lambda: sp.build_chain_graph("hex:1:"),
        lambda: sp.Graph(3, [(0, 1)]),
        lambda: sp.family_index("coronoid", "plain", n=2, p=1, r=1),
    ):
        try:
            bad()
        except ValueError:
            pass
        else:
            raise AssertionError("expected ValueError")

    print("sombor_py smoke test: all checks passed")


if __name__ == "__main__":
    main()
