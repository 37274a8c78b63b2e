"""Smoke test for the `domrec` extension module.

Build it and put it on the path first:

    PYO3_BUILD_EXTENSION_MODULE=1 cargo build -p domrec-py --release
    cp target/release/libdomrec.so python/domrec.so
    python3 python/smoke_test.py
"""

import domrec

g = domrec.Graph.named("K4-e")
assert g.n == 4 and len(g.edges()) == 5
assert domrec.Graph.from_graph6(g.to_graph6()).edges() == g.edges()

assert domrec.parameter(g, "gamma") == 1
assert domrec.parameter(domrec.Graph.named("K2"), "gamma-id") == "infinity"
assert domrec.parameter(domrec.Graph(3, [(0, 1)]), "gamma-t") == "undefined"

c = domrec.Graph.gadget("c")
assert domrec.optimal_sets(c, "gamma-id") == [[0, 1, 2]]
assert domrec.brute_force_sets(c, "gamma-id") == [[0, 1, 2]]
assert domrec.satisfies(c, [0, 1, 2], "gamma-id")

slide = domrec.variant_graph(domrec.Graph.named("C4"), "gamma", "slide")
assert len(slide["nodes"]) == 6

d2 = domrec.k_dominating_graph(domrec.Graph.named("P3"), 2)
assert len(d2["nodes"]) == 4 and len(d2["edges"]) == 2

conn, labels = domrec.construct("connelly", g)
assert conn.n == 9 and labels["c"] == 6
a = domrec.analyze(conn, "gamma")
assert a["components"] == 1
assert all(f == [labels["c"]] for f in a["frozen"])

report = domrec.verify_realizability(g, "gamma")
assert report["isomorphic"] and report["family_matches"] and report["value"] == 2

assert domrec.are_isomorphic(domrec.Graph.named("C4"), domrec.Graph(4, [(0, 2), (2, 1), (1, 3), (3, 0)]))

print("domrec smoke test ok:", len(domrec.VARIANTS), "variants")
