"""End-to-end checks of the cmfield command line."""

import json
import subprocess
import sys

import jsonschema

exe, schema_path = sys.argv[1], sys.argv[2]
with open(schema_path) as f:
    schema = json.load(f)

failures = []


def run(*args):
    return subprocess.run([exe, *args], capture_output=True, text=True)


def validate(doc, name):
    sub = dict(schema)
    sub["$ref"] = "#/$defs/" + name
    jsonschema.validate(doc, sub)


def check(cond, what):
    if not cond:
        failures.append(what)


r = run("hminus", "--field", "zeta:23", "--json")
check(r.returncode == 0, "hminus zeta:23 exit")
doc = json.loads(r.stdout)
validate(doc, "hminus")
check(doc["h_minus"] == "3", "h-(zeta_23)")

r = run("hminus", "--field", "quad:-20", "--csv")
check(r.stdout.splitlines()[0] == "field,conductor,degree,w,Q,rule,h_minus", "csv header")
check(r.stdout.splitlines()[1].endswith(",2"), "h-(-20) csv")

r = run("unit-index", "--field", "quad:-4*quad:136")
doc = json.loads(r.stdout)
validate(doc, "unitindex")
check(doc["Q"] == 2 and doc["kappa"] == 1, "unit index Q(i, sqrt 34)")

r = run("unit-index", "--field", "quad:-4*quad:40", "--override", "2")
check(json.loads(r.stdout)["rule"] == "user-override", "override")

r = run("table", "unitindex", "--spec", "zeta:15", "--spec", "zeta:16", "--json")
doc = json.loads(r.stdout)
validate(doc, "unitindex_table")
check([row["Q"] for row in doc] == [2, 1], "table unitindex Q column")

r = run("table", "hminus", "--zeta-range", "3..40", "--json", "--threads", "4")
doc = json.loads(r.stdout)
validate(doc, "hminus_table")
check([row["field"] for row in doc] == ["zeta:%d" % m for m in range(3, 41) if m % 4 != 2], "zeta range rows")
for row in doc:
    again = run("hminus", "--field", row["field"], "--json")
    check(json.loads(again.stdout) == row, "row %s reproducible" % row["field"])

r1 = run("table", "hminus", "--zeta-range", "3..30", "--csv", "--threads", "1")
r2 = run("table", "hminus", "--zeta-range", "3..30", "--csv", "--threads", "8")
check(r1.stdout == r2.stdout, "deterministic table output")

r = run("table", "hminus")
check(r.returncode == 0 and r.stdout.strip() == "field  conductor  degree  w  Q  rule  h_minus", "empty table")

r = run("table", "hminus", "--spec", "quad:5", "--spec", "zeta:7", "--json")
doc = json.loads(r.stdout)
validate(doc, "hminus_table")
check(r.returncode == 0 and "error" in doc[0] and doc[1]["h_minus"] == "1", "error row")
r = run("--strict", "table", "hminus", "--spec", "quad:5")
check(r.returncode != 0, "strict exit code")

r = run("hminus", "--field", "quad:-4*zeta:x")
check(r.returncode == 2 and "offset 13" in r.stderr, "parse error offset: " + r.stderr)

r = run("verify", "masley", "--m", "4", "--n", "5", "--json")
doc = json.loads(r.stdout)
validate(doc, "checks")
check(r.returncode == 0 and doc[0]["verdict"] == "pass", "verify masley")

for args in (["v4", "--d1", "-4", "--d2", "-40"],
             ["counterexample", "--family", "2", "--m", "5"],
             ["counterexample", "--family", "1", "--d1", "-4", "--d2", "5"],
             ["martinet", "--p", "17"],
             ["metsankyla", "--l1", "quad:-4", "--l2", "zeta:5"],
             ["odd-degree", "--k", "quad:-23", "--l", "zeta:23"],
             ["martinet", "--sweep", "--max", "120"],
             ["v4", "--sweep", "--max", "300"]):
    r = run("verify", *args, "--json")
    check(r.returncode == 0, "verify " + " ".join(args) + ": " + r.stderr)
    validate(json.loads(r.stdout), "checks")

r = run("verify", "counterexample", "--family", "2", "--m", "1", "--json")
check(r.returncode == 0 and json.loads(r.stdout)[0]["verdict"] == "vacuous", "vacuous check exits 0")

r = run("--max-degree", "16", "hminus", "--field", "zeta:97")
check(r.returncode == 2 and "degree" in r.stderr, "degree bound")

if failures:
    for f in failures:
        print("FAIL:", f)
    sys.exit(1)
print("cli ok")
