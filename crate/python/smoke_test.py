#!/usr/bin/env python3
"""Smoke test for the d2cs Python extension.

Builds nothing itself: run `cargo build -p d2cs-python` first, then
`python3 python/smoke_test.py`. The script locates the compiled cdylib
under target/, stages it as an importable module, and exercises the main
entry points against known values.
"""
import json
import shutil
import sys
import sysconfig
import tempfile
from pathlib import Path


def stage_module() -> Path:
    root = Path(__file__).resolve().parent.parent
    candidates = [
        root / "target" / profile / name
        for profile in ("debug", "release")
        for name in ("libd2cs.so", "libd2cs.dylib", "d2cs.dll")
    ]
    built = next((p for p in candidates if p.exists()), None)
    if built is None:
        sys.exit("extension not found; run `cargo build -p d2cs-python` first")
    stage = Path(tempfile.mkdtemp(prefix="d2cs-py-"))
    ext = sysconfig.get_config_var("EXT_SUFFIX") or ".so"
    shutil.copy2(built, stage / f"d2cs{ext}")
    return stage


sys.path.insert(0, str(stage_module()))
import d2cs  # noqa: E402

checks = 0


def ok(label, condition):
    global checks
    assert condition, f"FAIL: {label}"
    checks += 1
    print(f"ok {checks} - {label}")


# graph primitives
p4 = d2cs.Graph(4, [(1, 2), (2, 3), (3, 4)])
ok("P_4 has n=4 m=3", p4.n == 4 and p4.m == 3)
ok("bfs distances from 1", p4.bfs_distances(1) == [0, 1, 2, 3])
ok("diameter of P_4", p4.diameter() == 3)
ok("square of P_4", p4.square().edges() == [(1, 2), (1, 3), (2, 3), (2, 4), (3, 4)])
ok("{1,2,3} is a D2CS of P_4", p4.is_d2cs([1, 2, 3]))
ok("{1,3} is not (subsets need not be)", not p4.is_d2cs([1, 3]))
ok("closed neighborhood", p4.closed_neighborhood(2) == [1, 2, 3])
sub, mapping = p4.induced_subgraph([1, 3])
ok("induced subgraph on {1,3}", sub.m == 0 and mapping == [1, 3])

two_comp = d2cs.Graph(3, [(1, 2)])
ok("disconnected diameter is None", two_comp.diameter() is None)
ok("unreachable distance is None", two_comp.bfs_distances(1)[2] is None)

# generators + formulas + oracle agree
star = d2cs.generate("star", "3")
ok("star K_{1,3} layout", star.edges() == [(1, 2), (1, 3), (1, 4)])
value, disputed = d2cs.count_formula("star", "3")
ok("count_formula star 3 = 12", value == 12 and not disputed)
total, by_size, _ = d2cs.oracle_count(star)
ok("oracle agrees on the star", total == 12 and by_size[:3] == [1, 4, 3])

value, disputed = d2cs.count_formula("ktree", "4,2")
ok("k-tree formula is flagged disputed", value == 16 and disputed)

ok("binomial count is exact past u64",
   d2cs.count_formula("binomial", "64")[0] == 64 * 2**64 + 2)
ok("fib/lucas", d2cs.fib(7) == 13 and d2cs.lucas(4) == 7)
ok("kary bounds at (3,2)", d2cs.kary_bounds(3, 2) == (12, 36, 36))

# enumeration pipeline
total, sets = d2cs.enum_all_d2cs(p4, emit_sets=True)
ok("enum-all on P_4", total == 10 and sets == [[1, 2, 3], [2, 3, 4]])
c5 = d2cs.generate("cycle", "5")
ok("enum-all counts C_5", d2cs.enum_all_d2cs(c5)[0] == 17)
try:
    d2cs.enum_all_d2cs(two_comp)
    ok("disconnected input rejected", False)
except ValueError as e:
    ok("disconnected input rejected", "disconnected" in str(e))

# oracle extremes
p5 = d2cs.generate("path", "5")
ok("oracle total on P_5", d2cs.oracle_count(p5)[0] == 13)
ok("oracle maximal on P_5",
   d2cs.oracle_maximal(p5) == [[1, 2, 3], [2, 3, 4], [3, 4, 5]])
ok("oracle maximum tie-break", d2cs.oracle_maximum(p5) == [1, 2, 3])

# strongly chordal machinery
ok("P_5 natural order is an s.e.o.", d2cs.verify_seo(p5, [1, 2, 3, 4, 5]) is None)
c4 = d2cs.generate("cycle", "4")
ok("C_4 rejected with a witness", "NOT_SIMPLICIAL" in d2cs.verify_seo(c4, [1, 2, 3, 4]))
ok("C_6 has no s.e.o.", d2cs.find_seo(d2cs.generate("cycle", "6")) is None)

b3 = d2cs.generate("binomial", "3")
order = d2cs.find_seo(b3)
ok("binomial tree has an s.e.o.", order is not None and d2cs.verify_seo(b3, order) is None)
paper, notes = d2cs.maximal_d2cs_paper(b3, order, dedup=True)
reference = d2cs.maximal_d2cs_reference(b3)
ok("paper algorithm matches the reference on B_3", sorted(paper) == reference)
ok("reference matches the oracle on B_3", reference == d2cs.oracle_maximal(b3))
ok("maximal count within the n bound", d2cs.count_maximal_schordal(b3) <= b3.n)

# reconciliation report
report = json.loads(d2cs.reconcile_default("findings"))
ok("report schema", report["schema"] == "d2cs/1")
mismatched = [e for e in report["entries"] if e["verdict"] == "MISMATCH"]
ok("findings suite records mismatches with both values",
   mismatched and all(e["formula_value"] and e["oracle_value"] for e in mismatched))

# round trip through the file format
text = star.to_edgelist()
ok("edge-list round trip", d2cs.Graph.parse(text).edges() == star.edges())

print(f"\nall {checks} smoke checks passed")
