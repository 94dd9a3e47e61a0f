#!/usr/bin/env python3
"""End-to-end checks of the pp4q command line binary (path in argv[1])."""

import json
import os
import subprocess
import sys
import tempfile

BIN = sys.argv[1]

COUNTS_CSV = """n,a_n,b_n,c_n,d_n,e_n,s_n
0,0,0,0,0,0,1
1,0,0,0,0,0,3
2,1,0,2,0,0,6
3,2,1,4,1,0,11
4,4,4,6,3,1,21
5,9,12,8,7,5,44
6,22,33,10,16,17,101
7,56,88,12,38,50,247
8,145,232,14,94,138,626
9,378,609,16,239,370,1615
10,988,1596,18,617,979,4201
"""

SUMS_CSV = """n,a_hat_n,b_hat_n,c_hat_n,d_hat_n,e_hat_n,s_hat_n
0,0,0,0,0,0,1
1,0,0,0,0,0,3
2,2,0,4,0,0,9
3,6,2,12,6,0,29
4,18,10,28,36,8,103
5,58,38,60,170,70,399
6,194,134,124,768,418,1641
7,658,462,252,3458,2156,6989
8,2242,1582,508,15596,10388,30319
9,7650,5406,1020,70314,48342,132735
10,26114,18462,2044,316296,220746,583665
"""

LABELS_LEVEL2 = """(row=0, i=0, h=2) 1 1
(row=1, i=0, h=1) C 2
(row=1, i=1, h=1) C 2
(row=2, i=0, h=0) 1 1
(row=2, i=1, h=0) A 2
(row=2, i=2, h=0) 1 1
"""

GF_DEFAULT = """which: shat (q = 5)
numerator: 1 - 5x + 4x^2
denominator: 1 - 8x + 19x^2 - 14x^3
series: 1 3 9 29 103 399 1641 6989 30319 132735 583665
"""

failures = []


def run(args, env_extra=None):
    env = dict(os.environ)
    env.pop("PP4Q_CAP_VERTICES", None)
    if env_extra:
        env.update(env_extra)
    return subprocess.run([BIN] + args, capture_output=True, text=True, env=env)


def check(name, cond, note=""):
    if cond:
        print(f"ok {name}")
    else:
        print(f"FAIL {name} {note}")
        failures.append(name)


def main():
    r = run(["counts", "--q", "5", "--n", "10", "--format", "csv"])
    check("counts csv", r.returncode == 0 and r.stdout == COUNTS_CSV, repr(r.stdout[:80]))

    r = run(["sums", "--q", "5", "--n", "10", "--format", "csv"])
    check("sums csv", r.returncode == 0 and r.stdout == SUMS_CSV, repr(r.stdout[:80]))

    r = run(["counts", "--q", "5", "--n", "10", "--format", "json"])
    ok = r.returncode == 0
    if ok:
        doc = json.loads(r.stdout)
        ok = doc["q"] == 5 and doc["rows"][10]["s"] == "4201" and doc["rows"][4]["e"] == "1"
    check("counts json", ok)

    r = run(["counts", "--q", "5", "--n", "5", "--format", "table"])
    check("counts table header", r.returncode == 0 and r.stdout.splitlines()[0].lstrip().startswith("n  a_n"))

    with tempfile.TemporaryDirectory() as d:
        path = os.path.join(d, "out.csv")
        r = run(["counts", "--q", "5", "--n", "10", "--format", "csv", "--output", path])
        with open(path) as f:
            body = f.read()
        check("counts --output", r.returncode == 0 and r.stdout == "" and body == COUNTS_CSV)

    r = run(["labels", "--q", "5", "--level", "2"])
    check("labels level 2", r.returncode == 0 and r.stdout == LABELS_LEVEL2, repr(r.stdout))

    r = run(["verify", "--q", "5", "--n", "8"])
    check("verify text", r.returncode == 0 and "result: " in r.stdout and "FAIL" not in r.stdout)

    r = run(["verify", "--q", "5", "--n", "8", "--json"])
    ok = r.returncode == 0
    if ok:
        doc = json.loads(r.stdout)
        ok = doc["all_passed"] is True and len(doc["errata"]) == 7
    check("verify json", ok)

    r = run(["verify", "--q", "4", "--n", "8"])
    check("verify euclidean", r.returncode == 0)

    r = run(["verify", "--q", "5", "--n", "4", "--printed-d-feed"])
    check("verify printed d feed exits 1", r.returncode == 1
          and "printed d^ feed" in r.stdout and "FAIL" in r.stdout)

    r = run(["verify", "--q", "3", "--n", "4"])
    check("verify bad q exits 2", r.returncode == 2 and "ERROR" in r.stdout)

    r = run(["export", "--q", "5", "--level", "4", "--format", "dot"])
    ok = (r.returncode == 0 and r.stdout.startswith("digraph levels {")
          and r.stdout.count(" -> ") == 38 and r.stdout.count("[label=") == 32)
    check("export dot 3->4", ok, f"edges={r.stdout.count(' -> ')}")

    r = run(["export", "--q", "7", "--level", "3", "--format", "json"])
    ok = r.returncode == 0
    if ok:
        doc = json.loads(r.stdout)
        ok = (doc["q"] == 7 and doc["size"] == 13 and len(doc["vertices"]) == 13
              and all(v["level"] == 3 for v in doc["vertices"]))
    check("export json q7", ok)

    r = run(["export", "--q", "5", "--level", "1", "--format", "csv"])
    check("export csv level 1", r.returncode == 0
          and r.stdout == "row,index,height,type,label\n0,0,1,1,1\n1,0,0,1,1\n1,1,0,1,1\n")

    r = run(["export", "--q", "5", "--level", "0", "--format", "dot"])
    check("export dot needs level >= 1", r.returncode == 2)

    r = run(["gf"])
    check("gf default", r.returncode == 0 and r.stdout == GF_DEFAULT, repr(r.stdout))

    r = run(["gf", "--which", "s", "--q", "5", "--terms", "11"])
    lines = r.stdout.splitlines()
    ok = (r.returncode == 0 and lines[1] == "numerator: 1 - 2x - x^2"
          and lines[2] == "denominator: 1 - 5x + 8x^2 - 5x^3 + x^4"
          and lines[3] == "series: 1 3 6 11 21 44 101 247 626 1615 4201")
    check("gf counts", ok, repr(r.stdout))

    r = run(["gf", "--format", "json", "--terms", "4"])
    ok = r.returncode == 0
    if ok:
        doc = json.loads(r.stdout)
        ok = doc["denominator"] == ["1", "-8", "19", "-14"] and doc["series"] == ["1", "3", "9", "29"]
    check("gf json", ok)

    r = run(["gf", "--which", "bogus"])
    check("gf bad which exits 2", r.returncode == 2)

    r = run(["gf", "--q", "5", "--which", "shat", "--n", "6"])
    check("gf --n alias", r.returncode == 0 and "series: 1 3 9 29 103 399\n" in r.stdout)

    r = run(["ratio", "--q", "5"])
    lines = r.stdout.splitlines()
    ok = (r.returncode == 0 and lines[0] == "q: 5" and lines[1] == "exact: 3 + sqrt(2)"
          and lines[2].startswith("decimal: 4.414213562373095")
          and lines[3].startswith("observed (n=20): ")
          and lines[4] == "references: euclidean layer ratio 3, planar {4,5} mosaic ratio ~10.351")
    check("ratio q5", ok, repr(r.stdout))

    r = run(["ratio", "--q", "4"])
    ok = (r.returncode == 0 and "exact: 3\n" in r.stdout and "decimal: 3.0\n" in r.stdout
          and "observed (n=20): 3" in r.stdout)
    check("ratio q4", ok, repr(r.stdout))

    r = run(["ratio", "--q", "6"])
    check("ratio q6", r.returncode == 0 and "exact: (7 + sqrt(17))/2" in r.stdout)

    r = run(["counts", "--q", "3"])
    check("counts bad q exits 2", r.returncode == 2 and "error:" in r.stderr)

    r = run(["counts", "--format", "bogus"])
    check("counts bad format exits 2", r.returncode == 2)

    r = run(["labels", "--q", "5", "--level", "8", "--cap", "100"])
    check("labels cap flag exits 2", r.returncode == 2 and "cap" in r.stderr)

    r = run(["labels", "--q", "5", "--level", "8"], {"PP4Q_CAP_VERTICES": "100"})
    check("labels cap env exits 2", r.returncode == 2)

    r = run(["labels", "--q", "5", "--level", "8"], {"PP4Q_CAP_VERTICES": "1000"})
    check("labels cap env admits", r.returncode == 0)

    r = run(["labels", "--q", "5", "--level", "2"], {"PP4Q_CAP_VERTICES": "abc"})
    check("labels bad env exits 2", r.returncode == 2)

    r = run(["--help"])
    check("help exits 0", r.returncode == 0 and "counts" in r.stdout)

    r = run([])
    check("missing subcommand exits 2", r.returncode == 2)

    a = run(["export", "--q", "5", "--level", "6", "--format", "json"])
    b = run(["export", "--q", "5", "--level", "6", "--format", "json"])
    check("export deterministic", a.stdout == b.stdout and a.returncode == b.returncode == 0)

    a = run(["verify", "--q", "5", "--n", "6", "--json"])
    b = run(["verify", "--q", "5", "--n", "6", "--json"])
    da, db = json.loads(a.stdout), json.loads(b.stdout)
    da.pop("elapsed_seconds"), db.pop("elapsed_seconds")
    check("verify deterministic", da == db)

    if failures:
        print(f"{len(failures)} cli check(s) failed: {', '.join(failures)}")
        return 1
    print("all cli checks passed")
    return 0


if __name__ == "__main__":
    sys.exit(main())
