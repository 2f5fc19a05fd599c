#!/usr/bin/env python3
"""End-to-end tests for the hk4-verify command-line interface.

Usage: run_cli_tests.py <path-to-hk4-verify> <data-dir>

Covers exit codes (0 success / 1 precondition / 2 usage or parse error),
stdout determinism, the JSON record stream, and the cubic subcommands on the
fixture files in <data-dir>.
"""

import json
import subprocess
import sys

BIN = sys.argv[1]
DATA = sys.argv[2].rstrip("/")

checks = 0


def run(*args):
    return subprocess.run([BIN, *args], capture_output=True, text=True)


def ok(name, cond, detail=""):
    global checks
    checks += 1
    if not cond:
        print(f"FAIL: {name} {detail}")
        sys.exit(1)
    print(f"ok: {name}")


# ---- verify ------------------------------------------------------------------

r1 = run("verify", "all")
ok("verify all exits 0", r1.returncode == 0, f"rc={r1.returncode}\n{r1.stdout}\n{r1.stderr}")
pass_lines = [l for l in r1.stdout.splitlines() if l.startswith("[pass]") or l.startswith("[FAIL]")]
ok("verify all emits at least 40 records", len(pass_lines) >= 40, f"got {len(pass_lines)}")
ok("verify all has no failing records", not any(l.startswith("[FAIL]") for l in pass_lines))
ok("verify all stdout carries no timing", "elapsed" not in r1.stdout)
ok("timing goes to stderr", "elapsed" in r1.stderr)

r2 = run("verify", "all")
ok("verify all stdout is byte-identical across runs", r1.stdout == r2.stdout)

rs = run("verify", "sym2")
ok("verify sym2 exits 0", rs.returncode == 0)
ok("verify sym2 includes qdualint-575", "qdualint-575" in rs.stdout)
ok("verify sym2 includes smalldisc-704", "smalldisc-704" in rs.stdout)

rc = run("verify", "charclass")
ok("verify charclass prints the identity table", rc.returncode == 0 and "cc-chi-y" in rc.stdout)

rb = run("verify", "bogus")
ok("verify bogus is a usage error (exit 2)", rb.returncode == 2, f"rc={rb.returncode}")

# ---- JSON stream ---------------------------------------------------------------

rj = run("verify", "all", "--json")
ok("verify all --json exits 0", rj.returncode == 0)
lines = rj.stdout.splitlines()
docs = [json.loads(l) for l in lines]  # every line is a complete JSON document
meta, records, summary = docs[0], docs[1:-1], docs[-1]
ok("json meta line present", meta.get("kind") == "verification-report" and meta.get("seed") == 1)
ok("json record count matches meta", meta.get("records") == len(records))
ok("json records all pass", all(r["pass"] for r in records))
ok("json records carry expected/computed", all("expected" in r and "computed" in r for r in records))
ok("json summary line", summary.get("kind") == "summary" and summary.get("failed") == 0)
ok("json required ids present",
   {"qdualint-575", "smalldisc-704"} <= {r["id"] for r in records})

rj2 = run("verify", "all", "--json")
ok("json stream byte-identical across runs", rj.stdout == rj2.stdout)

rjs = run("verify", "lattice", "--json", "--seed", "42", "--box", "2")
ok("verify accepts --seed/--box after the subcommand", rjs.returncode == 0)
ok("json meta reflects flags", json.loads(rjs.stdout.splitlines()[0]).get("seed") == 42)

# ---- cubic adapt / lines-surface -----------------------------------------------

ra = run("cubic", "adapt", "--point", "0,0,0,0,0,1", f"{DATA}/adapted_node_cubic.txt")
ok("cubic adapt exits 0", ra.returncode == 0, ra.stderr)
ok("cubic adapt prints F", "F = 1*X0*X1" in ra.stdout)
ok("cubic adapt prints G", "G = 1*X2^3" in ra.stdout)

rl = run("cubic", "lines-surface", f"{DATA}/adapted_node_cubic.txt")
ok("lines-surface emits the two equations",
   rl.returncode == 0 and "F = 1*X0*X1" in rl.stdout and "G = 1*X2^3" in rl.stdout)

rjson = run("cubic", "adapt", f"{DATA}/adapted_node_cubic.txt", "--json")
doc = json.loads(rjson.stdout)
ok("cubic adapt --json record", doc["f"] == "1*X0*X1" and doc["g"] == "1*X2^3")

rbad = run("cubic", "adapt", "--point", "1,1,1,1,1,1", f"{DATA}/adapted_node_cubic.txt")
ok("adapt at a smooth point violates a precondition (exit 1)", rbad.returncode == 1)

rarity = run("cubic", "adapt", "--point", "0,0,1", f"{DATA}/adapted_node_cubic.txt")
ok("wrong point arity is a parse error (exit 2)", rarity.returncode == 2)

rmiss = run("cubic", "duval-check", f"{DATA}/no_such_file.txt")
ok("missing input file is a parse error (exit 2)", rmiss.returncode == 2)

# ---- cubic two-node-quartic ----------------------------------------------------

rt = run("cubic", "two-node-quartic", f"{DATA}/two_node_cubic.txt")
ok("two-node-quartic exits 0", rt.returncode == 0, rt.stderr)
ok("two-node quartic value", "P = 2*X1^2*X2^2 - 1*X0*X3^3" in rt.stdout)
ok("two-node identities reported",
   "det-identity: yes" in rt.stdout and "gradient-identity: yes" in rt.stdout)

# ---- cubic duval-check ---------------------------------------------------------

rd = run("cubic", "duval-check", f"{DATA}/triple_point_curve.txt")
ok("duval-check exits 0 on a rejected model", rd.returncode == 0)
ok("single-tangent triple point is rejected", rd.stdout.splitlines()[-1] == "rejected")

rdc = run("cubic", "duval-check", f"{DATA}/cusp_curve.txt")
ok("cusp is accepted", rdc.returncode == 0 and rdc.stdout.splitlines()[-1] == "accepted")

rdp = run("cubic", "duval-check", "--point", "1,3,1", f"{DATA}/cusp_curve.txt")
ok("off-curve point is accepted", rdp.returncode == 0 and rdp.stdout.splitlines()[-1] == "accepted")

# ---- cubic yg-fit --------------------------------------------------------------

ry1 = run("cubic", "yg-fit", f"{DATA}/net_basepoint_free.txt")
ok("yg-fit exits 0", ry1.returncode == 0, ry1.stderr)
ok("yg-fit solution is unique", "kernel-dim: 1" in ry1.stdout)
hash1 = [l for l in ry1.stdout.splitlines() if l.startswith("content-hash:")]
ok("yg-fit prints a content hash", len(hash1) == 1)

ry2 = run("cubic", "yg-fit", f"{DATA}/net_basepoint_free.txt")
ok("yg-fit output is byte-identical across runs", ry1.stdout == ry2.stdout)

ry3 = run("cubic", "yg-fit", f"{DATA}/net_basepoint_free.txt", "--seed", "5")
hash3 = [l for l in ry3.stdout.splitlines() if l.startswith("content-hash:")]
ok("yg-fit hash is stable across seeds (unique normalized solution)", hash1 == hash3)

rc1 = run("cubic", "yg-fit", f"{DATA}/net_cone.txt", "--json")
cone = json.loads(rc1.stdout)
ok("base-point net sweeps a cone", cone["cone_space_dim"] == 1)
ok("cone vertex is the marked point", cone["cone_vertex"] == ["0", "0", "0", "0", "0", "1"])
ok("cone fit doubly vanishes on the curve",
   cone["double_vanish_on_curve"] and cone["in_double_kernel"])
ok("distinct nets give distinct cubics",
   json.loads(run("cubic", "yg-fit", f"{DATA}/net_basepoint_free.txt", "--json").stdout)["content_hash"]
   != cone["content_hash"])

# ---- lattice info --------------------------------------------------------------

rli = run("lattice", "U + U + U + E8(-1) + E8(-1) + <-2>")
ok("lattice info exits 0", rli.returncode == 0)
ok("lattice info reports the invariants",
   "rank: 23" in rli.stdout and "signature: (3,20)" in rli.stdout and "disc: 2" in rli.stdout)

rle = run("lattice", "E7 + junk")
ok("bad lattice expression is a parse error (exit 2)", rle.returncode == 2)

rnosub = run()
ok("missing subcommand is a usage error (exit 2)", rnosub.returncode == 2)

rver = run("--version")
ok("--version exits 0", rver.returncode == 0 and "hk4-verify" in rver.stdout)

print(f"cli: all {checks} checks passed")
