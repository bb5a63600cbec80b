#!/usr/bin/env python3
"""Recompute layout metrics from a JSON layout document.

Usage: recompute_metrics.py LAYOUT.json

Prints the recomputed metrics and exits with status 1 when they differ from
the document's own "metrics" block.
"""

import json
import math
import sys


def orient(a, b, c):
    return (b[0] - a[0]) * (c[1] - a[1]) - (b[1] - a[1]) * (c[0] - a[0])


def proper(a, b, c, d):
    d1, d2 = orient(a, b, c), orient(a, b, d)
    d3, d4 = orient(c, d, a), orient(c, d, b)
    return d1 * d2 < 0 and d3 * d4 < 0


def segments(doc):
    out = []
    for idx, edge in enumerate(doc["edges"]):
        pts = edge["route"]
        for p, q in zip(pts, pts[1:]):
            if p != q:
                out.append((tuple(p), tuple(q), idx))
    return out


def crossings(doc):
    segs = segments(doc)
    total = 0
    for i in range(len(segs)):
        a, b, ri = segs[i]
        for j in range(i + 1, len(segs)):
            c, d, rj = segs[j]
            if ri != rj and proper(a, b, c, d):
                total += 1
    return total


def bends(doc):
    total = 0
    for edge in doc["edges"]:
        pts = []
        for p in edge["route"]:
            if not pts or pts[-1] != p:
                pts.append(p)
        for a, b, c in zip(pts, pts[1:], pts[2:]):
            d1 = (b[0] - a[0], b[1] - a[1])
            d2 = (c[0] - b[0], c[1] - b[1])
            g1, g2 = math.gcd(*d1), math.gcd(*d2)
            if (d1[0] // g1, d1[1] // g1) != (d2[0] // g2, d2[1] // g2):
                total += 1
    return total


def recompute(doc):
    xs = {v["x"] for v in doc["vertices"]}
    ys = {v["y"] for v in doc["vertices"]}
    for edge in doc["edges"]:
        for x, y in edge["route"]:
            xs.add(x)
            ys.add(y)
    width = len(xs)
    height = max(len(ys) - 1, 0)
    return {
        "crossings": crossings(doc),
        "bends": bends(doc),
        "width": width,
        "height": height,
        "area": width * height,
    }


def main(argv):
    if len(argv) != 2:
        print(__doc__.strip(), file=sys.stderr)
        return 2
    with open(argv[1], encoding="utf-8") as fh:
        doc = json.load(fh)
    got = recompute(doc)
    for key, value in got.items():
        print(f"{key}={value}")
    if got != doc["metrics"]:
        print(f"mismatch: document says {doc['metrics']}", file=sys.stderr)
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main(sys.argv))
