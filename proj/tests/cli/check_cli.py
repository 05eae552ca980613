#!/usr/bin/env python3
"""Runs the minorperc tool, validates JSON output against docs/schemas and
checks exit codes, determinism and a few known answers."""
import json
import os
import subprocess
import sys
import tempfile
from pathlib import Path

import jsonschema

exe, schema_dir = sys.argv[1], Path(sys.argv[2])
failures = []


def run(args, env=None, code=0):
    full_env = dict(os.environ)
    full_env.pop("MINORPERC_SEED", None)
    full_env.update(env or {})
    p = subprocess.run([exe, *args], capture_output=True, text=True, env=full_env)
    if p.returncode != code:
        failures.append(f"{args}: exit {p.returncode}, wanted {code}: {p.stderr.strip()}")
    return p.stdout


def check_json(schema, args, **kw):
    out = run(args, **kw)
    try:
        doc = json.loads(out)
    except json.JSONDecodeError as e:
        failures.append(f"{args}: not JSON ({e})")
        return {}
    try:
        jsonschema.validate(doc, json.loads((schema_dir / f"{schema}.schema.json").read_text()))
    except jsonschema.ValidationError as e:
        failures.append(f"{args}: schema {schema}: {e.message}")
    return doc


def expect(cond, what):
    if not cond:
        failures.append(what)


c = check_json("classify", ["classify", "--r", "3", "--H", "K3,3", "--property", "degenerate"])
expect(c.get("q") == 5 and c.get("case") == "case3", "classify K3,3 r=3")
c = check_json("classify", ["classify", "--r", "2", "--H", "K3", "--property", "degenerate"])
expect(c.get("tightness") == "ThetaOne", "classify K3 r=2")
c = check_json("classify", ["classify", "--r", "4", "--H", "K5", "--property", "choosable"])
expect(c.get("q") == 9, "classify K5 r=4 choosable")
c = check_json("classify", ["classify", "--r", "3", "--H", "K3,3", "--property", "colorable"])
expect(c.get("bounds") == [5, 6], "classify colorable K3,3")
check_json("classify", ["classify", "--r", "3", "--H", "C4", "--property", "noregular"])

t = check_json("tau", ["tau", "--H", "petersen"])
expect(t.get("tau") == 6, "tau petersen")
m = check_json("minor", ["minor", "--G", "petersen", "--H", "K5"])
expect(m.get("verdict") == "yes", "petersen has K5 minor")
m = check_json("minor", ["minor", "--G", "C9", "--H", "K3", "--depth", "0"])
expect(m.get("verdict") == "no" and m.get("branch_sets") is None, "shallow minor depth 0")

g = check_json("generate", ["generate", "--family", "joincliques:r=3,w=1,t=3", "--format", "json"])
expect(g.get("graph", {}).get("n") == 8, "generate joincliques order")
g = check_json("generate", ["generate", "--family", "joincliques:r=2,w=1", "--bad-lists"])
expect(len(g.get("lists", [])) == g.get("graph", {}).get("n"), "bad lists per vertex")
edge_list = run(["generate", "--family", "lt:r=4", "--n", "12"])
expect(edge_list.splitlines()[0] == "12 27", "generate lt edge list header")

with tempfile.TemporaryDirectory() as tmp:
    path = Path(tmp) / "g.txt"
    path.write_text(edge_list)
    k = check_json("core", ["core", "--G", str(path), "--r", "3"])
    expect(k.get("in_Dr") is False, "core of L_t graph")
    out = Path(tmp) / "o.json"
    run(["tau", "--H", "K4", "--out", str(out)])
    expect(json.loads(out.read_text()).get("tau") == 3, "--out writes the report")
    coll = Path(tmp) / "c.json"
    s = check_json("signature", ["signature", "--G", "K4", "--r", "2"])
    coll.write_text(json.dumps(s.get("collection", {})))
    jsonschema.validate(s.get("collection", {}), json.loads((schema_dir / "collection.schema.json").read_text()))
    s = check_json("signature", ["signature", "--G", "K4", "--r", "2", "--builder", "none", "--collection", str(coll),
                                 "--verify"])
    expect(s.get("verified") is True, "reloaded collection verifies")

col = check_json("color", ["color", "--G", "petersen", "--r", "3"])
expect(col.get("verdict") == "yes", "petersen 3-colourable")
ch = check_json("choosable", ["choosable", "--G", "K2,4", "--r", "2"])
expect(ch.get("choosable") is False and ch.get("bad_assignment"), "K2,4 not 2-choosable")
reg = check_json("regular", ["regular", "--G", "petersen", "--r", "3"])
expect(reg.get("verdict") == "yes", "petersen 3-regular subgraph")

s = check_json("signature", ["signature", "--G", "K4", "--r", "2", "--builder", "weak", "--verify"])
expect(s.get("size") == 4 and s.get("verified") is True, "weak collection on K4")
s = check_json("signature", ["signature", "--G", "P4", "--r", "2", "--builder", "weak"])
expect(s.get("size") == 0, "weak collection on P4")
s = check_json("signature", ["signature", "--G", "K4", "--r", "2", "--builder", "none", "--verify"])
expect(s.get("verified") is False, "empty collection fails")
run(["signature", "--G", "K7", "--r", "2", "--verify"], code=2)

o = check_json("oracle-table", ["oracle-table", "--H", "K4", "--n-max", "5"])
expect([r["f"] for r in o.get("rows", [])] == [0, 1, 3, 5, 7], "extremal table K4")

p = check_json("percolate", ["percolate", "--family", "kbip:r=2", "--n", "100", "--p", "0", "--trials", "30",
                             "--format", "json"])
expect(all(r["phat"] == 1 for r in p.get("rows", [])), "p=0 gives phat 1")
p = check_json("percolate", ["percolate", "--family", "joincliques:r=3,w=1", "--n", "60,120,240",
                             "--property", "degenerate:r=3", "--trials", "200", "--fit", "--format", "json"])
expect("fit" in p and p["fit"]["slope"] < 0, "threshold fit slope negative")
a = run(["percolate", "--family", "kbip:r=2", "--n", "50,100", "--p", "0.1,0.2", "--trials", "500", "--workers", "1"])
b = run(["percolate", "--family", "kbip:r=2", "--n", "50,100", "--p", "0.1,0.2", "--trials", "500", "--workers", "3"])
expect(a == b and a.count("\n") == 5, "CSV identical across worker counts")
c1 = run(["percolate", "--family", "kbip:r=2", "--n", "50", "--p", "0.1", "--trials", "100"],
         env={"MINORPERC_SEED": "7"})
expect(c1.strip().endswith(",7"), "MINORPERC_SEED reaches the CSV")
run(["percolate", "--family", "kbip:r=2", "--n", "50", "--p", "0.3", "--trials", "50",
     "--property", "colorable:r=2", "--budget", "1"], code=1)

run(["classify", "--r", "2", "--H", "nonsense"], code=2)
run(["classify", "--r", "2"], code=2)
run(["generate", "--family", "joincliques:r=3"], code=2)
run(["percolate", "--family", "kbip:r=2", "--n", "50", "--p", "2", "--trials", "5"], code=2)
run(["tau", "--H", "K3"], env={"MINORPERC_SEED": "abc"}, code=2)

for f in failures:
    print("FAIL:", f)
print(f"{len(failures)} failures")
sys.exit(1 if failures else 0)
