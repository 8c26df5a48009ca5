#!/usr/bin/env python3
"""Exit-code contract, report schema and report determinism for algdl."""

import json
import subprocess
import sys
import tempfile
from pathlib import Path

import jsonschema

ALGDL, SCHEMA = str(Path(sys.argv[1]).resolve()), sys.argv[2]
validator = jsonschema.Draft202012Validator(json.loads(Path(SCHEMA).read_text()))
work = Path(tempfile.mkdtemp(prefix="algdl-"))
failures = []


def run(args, expect, report=True):
    rep = work / f"r{len(list(work.glob('r*.json')))}.json"
    cmd = [ALGDL, *args] + (["--report", str(rep)] if report else [])
    p = subprocess.run(cmd, cwd=work, capture_output=True, text=True)
    tag = " ".join(args)
    if p.returncode != expect:
        failures.append(f"{tag}: exit {p.returncode}, want {expect}\n{p.stdout}{p.stderr}")
        return None
    if expect == 2:
        if not p.stderr.strip():
            failures.append(f"{tag}: no message on stderr")
        return None
    if not report:
        return None
    doc = json.loads(rep.read_text())
    errs = sorted(validator.iter_errors(doc), key=str)
    if errs:
        failures.append(f"{tag}: schema: {errs[0].message}")
    if doc["exit_status"] != expect:
        failures.append(f"{tag}: exit_status {doc['exit_status']}")
    return doc


def check(cond, what):
    if not cond:
        failures.append(what)


def write(name, text):
    (work / name).write_text(text)
    return name


# catalog exports
families = ["octonion_char2", "octonion_u_char2", "b12", "b42", "b_gamma", "division_super_1",
            "division_super_2", "division_super_3", "division_super_4", "checkerboard",
            "jordan_Mnm", "jordan_Qn", "jordan_Pn", "jordan_osp", "jordan_Dt",
            "jordan_superform", "jordan_JP3", "jordan_H3B42"]
for f in families:
    run(["catalog", f, "--emit", f + ".alg"], 0)
run(["catalog", "checkerboard", "--size", "n=1", "--size", "m=1", "--char", "5", "--emit", "m11.alg"], 0)
run(["catalog", "jordan_Dt", "--param", "t=2", "--char", "5", "--emit", "dt2.alg"], 0)
run(["catalog", "nope", "--emit", "x.alg"], 2)
run(["catalog", "b12", "--size", "n", "--emit", "x.alg"], 2)
run(["catalog", "b12"], 2, report=False)

# identities
d = run(["check", "b42.alg", "--identity", "assoc"], 1)
check(d and d["results"][0]["witness"], "assoc on B(4,2) lacks a witness")
for spec in ("alt-left", "alt-right"):
    for alg in ("b12.alg", "b42.alg", "octonion_char2.alg"):
        run(["check", alg, "--identity", spec], 0)
run(["check", "b12.alg", "--identity", "assoc"], 1)
run(["check", "jordan_JP3.alg", "--identity", "super-jordan"], 0)
run(["check", "b12.alg", "--identity", "nope"], 2)
run(["check", "missing.alg", "--identity", "assoc"], 2)
write("bad.alg", "char 3\nbasis a b\nodd a b\nmul a b = a\n")
run(["check", "bad.alg", "--identity", "assoc"], 2)
write("syntax.alg", "char 3\nbasis a\nmul a a = (a\n")
run(["check", "syntax.alg", "--identity", "assoc"], 2)

# centers and simplicity
d = run(["center", "b42.alg"], 0)
check(d and (d["results"][0]["even_dim"], d["results"][0]["odd_dim"]) == (1, 0), "center of B(4,2)")
d = run(["center", "octonion_char2.alg", "--specialize", "p=2", "--nonzero", "mu,beta,gamma"], 0)
check(d and (d["results"][0]["even_dim"], d["results"][0]["odd_dim"]) == (1, 0), "center of octonions")
run(["center", "b12.alg", "--specialize", "q=3"], 2)
d = run(["simple", "b12.alg", "--trials", "10", "--seed", "1"], 0)
check(d and d["results"][0]["verdict"] == "simple", "B(1,2) verdict")
run(["simple", "dt2.alg", "--trials", "10", "--seed", "1"], 0)
run(["simple", "m11.alg", "--trials", "10", "--seed", "1"], 0)
write("kk.alg", "char 5\nbasis e f\nmul e e = e\nmul f f = f\n")
d = run(["simple", "kk.alg", "--trials", "10", "--seed", "1"], 1)
check(d and d["results"][0]["ideal"], "k+k ideal")
write("triv.alg", "char 5\nbasis a b\n")
run(["simple", "triv.alg", "--trials", "10", "--seed", "1"], 1)
run(["simple", "octonion_char2.alg", "--trials", "10"], 2)

# proofs
d = run(["verify-proofs", "--case", "alt-3", "--field", "gf3"], 0)
check(d and len(d["results"][0]["records"]) == 3 and
      all(r["status"] == "verified" for r in d["results"][0]["records"]), "alt-3 records")
run(["verify-proofs", "--case", "jordan-f", "--field", "gf5"], 0)
run(["verify-proofs", "--case", "alt-1b", "--field", "gf2"], 1)
run(["verify-proofs", "--case", "alt-3", "--field", "q"], 2)
run(["verify-proofs", "--case", "nope", "--field", "q"], 2)
run(["verify-proofs", "--case", "alt-3", "--field", "gf7"], 2)
run(["verify-proofs", "--case", "alt-3", "--field", "gf3"], 2, report=False)
d = run(["discrepancies"], 0)
check(d and any(x["case"] == "alt-1b" for x in d["results"]), "alt-1b discrepancy")

# usage
run([], 2, report=False)
run(["frob"], 2, report=False)
run(["center", "b12.alg", "--bogus"], 2)

# determinism: byte-identical reports for identical inputs
for args in (["verify-proofs", "--field", "q"], ["discrepancies", "--field", "gf3"],
             ["simple", "b42.alg", "--trials", "5", "--seed", "7"],
             ["center", "jordan_superform.alg", "--specialize", "p=5", "--seed", "3"]):
    outs = []
    for i in range(2):
        out = work / f"det{i}.json"
        subprocess.run([ALGDL, *args, "--report", str(out)], cwd=work, capture_output=True)
        outs.append(out.read_bytes())
    check(outs[0] == outs[1], "nondeterministic report: " + " ".join(args))

for f in failures:
    print("FAIL", f)
print(f"cli: {len(failures)} failures")
sys.exit(1 if failures else 0)
