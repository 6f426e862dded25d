#!/usr/bin/env python3
"""Regenerate the offline fixture files under data/fixtures/.

Newform orbit data and the zeros of the 11.2.a.a L-function are computed
with PARI/GP (``pip install cypari``).  The reference sign table and the
rank-1 / rank-2 isogeny class listings are transcribed by hand and kept
here so that the JSON files can be rebuilt from a single place.

Usage: python3 tools/fixtures/generate_fixtures.py [output_dir]
"""

import json
import os
import sys

from cypari import pari

SCHEMA_VERSION = 1

# No elliptic curve over Q has conductor below 11.
EMPTY_CONDUCTORS = list(range(1, 11))

# Published table of a(2) signs for S_k^new(N), k in {2,...,12}, N in {1,...,15}.
# "neg" / "pos" / "zero" mark a single newform with that sign of a(2); an
# integer is the dimension of the newform space; "" is an empty space.
REFERENCE_TABLE = {
    2: ["", "", "", "", "", "", "", "", "", "", "neg", "", "", "neg", "neg"],
    4: ["", "", "", "", "neg", "neg", "neg", "zero", "zero", "pos", 2, "zero", 3, 2, 2],
    6: ["", "", "neg", "zero", "pos", "pos", 3, 1, 1, 3, 4, "", 5, 2, 4],
    8: ["", "neg", "pos", "", 3, 1, 3, 2, 3, 1, 6, 2, 7, 4, 4],
    10: ["", "pos", 2, 1, 3, 1, 5, 2, 3, 3, 8, 1, 9, 4, 6],
    12: ["neg", "", "pos", 1, 3, 3, 5, 3, 4, 5, 8, 2, 11, 6, 8],
}

# (class label, rank, number of isogeny classes at the conductor)
RANK1_CLASSES = [
    ("37.a", 2), ("43.a", 1), ("53.a", 1), ("57.a", 3), ("58.a", 2),
    ("61.a", 1), ("65.a", 1), ("77.a", 3), ("79.a", 1), ("82.a", 1),
    ("88.a", 1), ("89.a", 2), ("91.a", 2), ("91.b", 2), ("92.a", 2),
    ("99.a", 4), ("101.a", 1), ("102.a", 3), ("106.a", 4), ("112.a", 3),
    ("117.a", 1), ("118.a", 4), ("121.b", 3),
]

RANK2_CLASSES = [
    ("446.a", 4), ("571.a", 2), ("664.a", 3), ("681.a", 5), ("718.a", 3),
    ("794.a", 4), ("817.a", 2), ("916.a", 5), ("994.a", 11),
]

# Smallest rank-2 conductor; it has a single isogeny class so it is not part
# of the tabulated rows.
RANK2_EXTRA = [("389.a", 1)]

pari.allocatemem(2 * 10**9)
pari("default(realprecision, 38)")

pari('''orbinfo(N,k)=
{
  my(mf=mfinit([N,k],0), B, res=List());
  if (mfdim(mf)==0, return([]));
  B = mfeigenbasis(mf);
  for (i=1, #B,
    my(F=B[i], P=mfparams(F)[4], d=if(type(P)=="t_POL", poldegree(P), 1),
       co=mfcoefs(F,30), tr, a2);
    tr = vector(30, n, my(x=co[n+1]); if(type(x)=="t_POLMOD", trace(x), d*x));
    a2 = co[3];
    if (type(a2)=="t_POLMOD", a2 = lift(a2);
        if (poldegree(a2)>0, a2="irr", a2 = polcoef(a2,0)));
    listput(res, [d, tr, a2]));
  Vec(res);
}''')


def newform_orbits(level, weight):
    orbits = []
    for o in pari(f"orbinfo({level},{weight})"):
        a2 = o[2]
        a2_int = None if "irr" in str(a2) else int(a2)
        orbits.append({"dim": int(o[0]), "traces": [int(t) for t in o[1]], "a2": a2_int})
    # LMFDB orders Galois orbits by dimension, then by trace form.
    orbits.sort(key=lambda o: (o["dim"], o["traces"]))
    records = []
    for i, o in enumerate(orbits):
        rec = {
            "label": f"{level}.{weight}.a.{chr(ord('a') + i)}",
            "weight": weight,
            "level": level,
            "dim": o["dim"],
        }
        if o["a2"] is None:
            rec["a2_sign"] = "nonrational"
        else:
            rec["a2_sign"] = "negative" if o["a2"] < 0 else ("zero" if o["a2"] == 0 else "positive")
            rec["a2_integer"] = o["a2"]
            rec["a2_normalized"] = o["a2"] / 2 ** ((weight - 1) / 2)
        records.append(rec)
    return records


def table1():
    cells = []
    newforms = []
    for k, row in REFERENCE_TABLE.items():
        for n, entry in enumerate(row, start=1):
            cells.append({"weight": k, "level": n, "entry": str(entry)})
    for k in REFERENCE_TABLE:
        top = 21 if k == 2 else 15
        for n in range(1, top + 1):
            newforms.extend(newform_orbits(n, k))
    return {
        "schema_version": SCHEMA_VERSION,
        "description": "Signs of a(2) for newforms in S_k^new(N) with trivial character",
        "weights": sorted(REFERENCE_TABLE),
        "levels": list(range(1, 16)),
        "coverage": [{"weight": k, "max_level": 21 if k == 2 else 15} for k in REFERENCE_TABLE],
        "reference_table": cells,
        "newforms": newforms,
    }


def class_records(rows, rank, tabulated=True):
    out = []
    for label, count in rows:
        out.append({
            "conductor": int(label.split(".")[0]),
            "class_label": label,
            "rank": rank,
            "classes_at_conductor": count,
            "tabulated": tabulated,
        })
    return out


def zeros_11a():
    E = pari("ellinit([0,-1,1,-10,-20])")
    L = pari.lfuncreate(E)
    height = 420
    zeros = [float(z) for z in pari.lfunzeros(L, height)]
    an = [int(x) for x in pari.ellan(E, 200)]
    return {
        "schema_version": SCHEMA_VERSION,
        "newform_label": "11.2.a.a",
        "lfunction_label": "2-11-1.1-c1-0-0",
        "weight": 2,
        "level": 11,
        "degree": 2,
        "analytic_rank": 0,
        "sign": 1,
        "completeness_height": height,
        "positive_ordinates": zeros,
        "dirichlet_coefficients": an,
    }


def main():
    out = sys.argv[1] if len(sys.argv) > 1 else os.path.join(
        os.path.dirname(__file__), "..", "..", "data", "fixtures")
    os.makedirs(out, exist_ok=True)

    def dump(name, doc):
        with open(os.path.join(out, name), "w") as fh:
            json.dump(doc, fh, indent=1)
            fh.write("\n")

    dump("table1.json", table1())
    dump("rank1_classes.json", {
        "schema_version": SCHEMA_VERSION,
        "rank": 1,
        "empty_conductors": EMPTY_CONDUCTORS,
        "classes": class_records(RANK1_CLASSES, 1),
    })
    dump("rank2_classes.json", {
        "schema_version": SCHEMA_VERSION,
        "rank": 2,
        "empty_conductors": EMPTY_CONDUCTORS,
        "classes": class_records(RANK2_EXTRA, 2, tabulated=False) + class_records(RANK2_CLASSES, 2),
    })
    dump("zeros_11a.json", zeros_11a())


if __name__ == "__main__":
    main()
