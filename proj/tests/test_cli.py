#!/usr/bin/env python3
"""End-to-end checks of the CLI surface: subcommands, exit codes, JSON shapes."""

import json
import os
import subprocess
import sys
import tempfile

BIN = sys.argv[1]

M5 = "x1*x2*x3 + x2^2*x4 + x3^2*x5 + x1*x4*x5"
FERMAT = "x1^3 + x2^3 + x3^3"

failures = []


def run(args, env=None):
    e = dict(os.environ)
    if env:
        e.update(env)
    return subprocess.run([BIN] + args, capture_output=True, text=True, env=e)


def check(name, cond, detail=""):
    if cond:
        print(f"ok   {name}")
    else:
        print(f"FAIL {name} {detail}")
        failures.append(name)


r = run(["hilbert", "X1*X2*X3 + X1*X2^2"])
check("hilbert worked example", r.returncode == 0 and r.stdout.strip() == "(1,3,3,1)",
      repr(r.stdout))

r = run(["hilbert", "x1*x2*x3 + x1*x2^2"], env={"APOLAR_FIELD": "rational"})
check("hilbert over rationals via APOLAR_FIELD", r.returncode == 0 and "(1,3,3,1)" in r.stdout)

r = run(["apolar", "x1*x2*x3 + x1*x2^2"])
check("apolar lists the annihilator",
      r.returncode == 0 and "x2^2 - x2*x3" in r.stdout and "length: 8" in r.stdout)

r = run(["tangent", "--cubic", M5])
check("tangent on the m=5 cubic",
      r.returncode == 0 and "concentrated in degree -1: true" in r.stdout
      and "positive part vanishes: true" in r.stdout)

r = run(["tangent", M5, "--window", "-4:2", "--json"])
check("tangent respects --window and --json",
      r.returncode == 0 and json.loads(r.stdout)["t1"]["window"] == [-4, 2])

r = run(["paper-examples"])
check("paper-examples prints both concentration lines",
      r.stdout.count("concentrated in degree -1: true") == 2)
check("paper-examples exit reflects the printed m=7 Hilbert mismatch", r.returncode == 1)
check("paper-examples reports the computed (1,6,6,1)", "(1,6,6,1)" in r.stdout)

r = run(["union", M5, M5])
check("union of two m=5 cubics",
      r.returncode == 0 and "(1,10,10,2)" in r.stdout and "length: 23" in r.stdout)

r = run(["connect", M5, M5])
check("connect agrees on both presentations",
      r.returncode == 0 and "agree: true" in r.stdout and "(1,10,10,1)" in r.stdout)

with tempfile.TemporaryDirectory() as tmp:
    fpath = os.path.join(tmp, "F.txt")
    gpath = os.path.join(tmp, "G.txt")
    with open(fpath, "w") as fh:
        fh.write(M5 + "\n")
    with open(gpath, "w") as fh:
        fh.write(M5 + "\n")
    r = run(["certify", fpath, gpath, "--json"])
    check("certify from files with --json", r.returncode == 0)
    cert = json.loads(r.stdout)
    for key in ["schema_version", "field", "inputs", "setting", "extra", "tiers",
                "verdict", "evidence", "canonical_hash"]:
        check(f"certificate key {key}", key in cert)
    check("certificate verdict", cert["verdict"] == "certified")
    check("certificate field", cert["field"] == {"type": "fp", "p": 32003})
    check("certificate hash format", cert["canonical_hash"].startswith("fnv1a64:"))

    log = os.path.join(tmp, "log.jsonl")
    r = run(["search", "--n", "3", "--trials", "4", "--seed", "11", "--out", log])
    check("search exits 0", r.returncode == 0)
    with open(log) as fh:
        lines = [json.loads(line) for line in fh if line.strip()]
    check("search wrote one JSONL record per trial", len(lines) == 4)
    check("search records carry seeds", all("subseed" in rec for rec in lines))
    check("search on 3 variables never finds TNT", not any(rec.get("tnt") for rec in lines))

r = run(["certify", FERMAT, FERMAT])
check("certify Fermat pair exits 1 listing failures",
      r.returncode == 1 and "t1_concentrated" in r.stderr)

r = run(["very-general", FERMAT])
check("very-general on Fermat exits 1", r.returncode == 1)

r = run(["frobnicate"])
check("unknown subcommand is a usage error", r.returncode == 2)

r = run(["hilbert", "x1**2"])
check("malformed input is a usage error", r.returncode == 2 and "SyntaxError" in r.stderr)

r = run(["hilbert", "x1^2", "--field", "bogus"])
check("bad field is a usage error", r.returncode == 2)

r = run(["hilbert", "x1*x2*x3*x4*x5*x6*x7*x8*x9*x10*x11*x12*x13*x14*x15*x16*x17"])
check("variable limit is a usage error", r.returncode == 2 and "VariableLimitExceeded" in r.stderr)

r = run(["tangent", M5, "--window", "bogus"])
check("bad window is a usage error", r.returncode == 2)

r = run(["fiber", "x^3", "x^3"])
check("fiber on X^3, Y^3",
      r.returncode == 0 and "tangent dimension at the origin: 2 (expected 2)" in r.stdout)

r = run(["--json", "betti", M5])
check("betti --json emits triples",
      r.returncode == 0 and [1, 2, 10] in json.loads(r.stdout)["betti"])

print()
if failures:
    print(f"{len(failures)} CLI check(s) failed")
    sys.exit(1)
print("all CLI checks passed")
