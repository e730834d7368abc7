#!/usr/bin/env python3
"""Writes the structured-output goldens for the two worked examples.

Values are typed in by hand from the worked examples; nothing here calls the
library.
"""
import json
import pathlib

HERE = pathlib.Path(__file__).parent


def m(rows):
    return [[str(x) for x in row] for row in rows]


CRYER_L = m([[0], [1], [1]])
CRYER_U = m([[1, 0, 1]])
CRYER_TRACE = [
    ("D 1", [[0, 0], [1, 0], [0, 1]], [[1, 0, 1], [1, 0, 1]]),
    ("E 1 1 1", [[0, 0], [1, 0], [1, 1]], [[1, 0, 1], [0, 0, 0]]),
    ("D 2", [[0], [1], [1]], [[1, 0, 1]]),
]

STAIR_L = m([[1, 0], [2, 0], [1, 1], [3, 4]])
STAIR_U = m([[0, 1, 2, 1], [0, 0, 0, 2]])
STAIR_TRACE = [
    ("E 3 2 3", [[1, 0, 0, 0], [0, 1, 0, 0], [0, 0, 1, 0], [0, 0, 3, 1]],
     [[0, 1, 2, 1], [0, 2, 4, 2], [0, 1, 2, 3], [0, 0, 0, 2]]),
    ("E 2 2 1/2", [[1, 0, 0, 0], [0, 1, 0, 0], [0, "1/2", 1, 0], [0, "3/2", 3, 1]],
     [[0, 1, 2, 1], [0, 2, 4, 2], [0, 0, 0, 2], [0, 0, 0, 2]]),
    ("E 1 2 2", [[1, 0, 0, 0], [2, 1, 0, 0], [1, "1/2", 1, 0], [3, "3/2", 3, 1]],
     [[0, 1, 2, 1], [0, 0, 0, 0], [0, 0, 0, 2], [0, 0, 0, 2]]),
    ("D 2", [[1, 0, 0], [2, 0, 0], [1, 1, 0], [3, 3, 1]],
     [[0, 1, 2, 1], [0, 0, 0, 2], [0, 0, 0, 2]]),
    ("E 2 4 1", [[1, 0, 0], [2, 0, 0], [1, 1, 0], [3, 4, 1]],
     [[0, 1, 2, 1], [0, 0, 0, 2], [0, 0, 0, 0]]),
    ("D 3", [[1, 0], [2, 0], [1, 1], [3, 4]], [[0, 1, 2, 1], [0, 0, 0, 2]]),
]


def decompose_doc(method, r, c, l, u, cross_check=None, trace=None):
    doc = {"command": "decompose", "method": method, "class": {"r": r, "c": c}, "L": l, "U": u}
    if method == "auto":
        doc["cross_check"] = cross_check
    if trace is not None:
        doc["trace"] = [{"move": mv, "L": m(sl), "U": m(su)} for mv, sl, su in trace]
    return doc


def write(name, doc):
    (HERE / name).write_text(json.dumps(doc, indent=2) + "\n")


for method in ("auto", "explicit", "neville", "reconstruct"):
    write(f"cryer_{method}.json",
          decompose_doc(method, [2], [1], CRYER_L, CRYER_U, "neville" if method == "auto" else None))
write("cryer_neville_trace.json", decompose_doc("neville", [2], [1], CRYER_L, CRYER_U, trace=CRYER_TRACE))
write("staircase_auto_trace.json",
      decompose_doc("auto", [1, 3], [2, 4], STAIR_L, STAIR_U, "neville", STAIR_TRACE))
write("staircase_neville_trace.json", decompose_doc("neville", [1, 3], [2, 4], STAIR_L, STAIR_U, trace=STAIR_TRACE))
