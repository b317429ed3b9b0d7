#!/usr/bin/env python3
"""Regenerate data/knots.csv from a KnotInfo export.

Usage: import_knotinfo.py KNOTINFO_CSV > data/knots.csv

KNOTINFO_CSV is knotinfo_data_complete.csv from the database_knotinfo
package ('|'-separated). Composite rows are derived from their prime
summands by multiplicativity and additivity.
"""
import csv
import re
import sys
from fractions import Fraction

import sympy

T = sympy.Symbol("t")
PRIME = ["3_1", "4_1", "5_1", "5_2", "6_1", "6_2", "6_3", "8_20", "9_46", "10_140",
         "12n_553", "12n_556"]
SOURCE = "KnotInfo (database_knotinfo 2024.12.1), retrieved 2026-10-15"


def laurent(text):
    expr = sympy.sympify(text.replace("^", "**"), locals={"t": T})
    expr = sympy.expand(expr)
    terms = {}
    for term in sympy.Add.make_args(expr):
        c, e = term.as_coeff_exponent(T)
        terms[int(e)] = terms.get(int(e), 0) + int(c)
    return {e: c for e, c in terms.items() if c}


def fmt(p):
    if not p:
        return "0"
    out = ""
    for i, e in enumerate(sorted(p)):
        c = p[e]
        mag = abs(c)
        if e == 0:
            body = str(mag)
        else:
            var = "t" if e == 1 else "t^%d" % e
            body = var if mag == 1 else "%d%s" % (mag, var)
        if i == 0:
            out = ("-" if c < 0 else "") + body
        else:
            out += (" - " if c < 0 else " + ") + body
    return out


def normalize_alexander(p):
    lo, hi = min(p), max(p)
    shift = -(lo + hi) // 2 if (lo + hi) % 2 == 0 else -lo
    q = {e + shift: c for e, c in p.items()}
    if sum(q.values()) < 0:
        q = {e: -c for e, c in q.items()}
    return q


def mul(a, b):
    out = {}
    for e1, c1 in a.items():
        for e2, c2 in b.items():
            out[e1 + e2] = out.get(e1 + e2, 0) + c1 * c2
    return {e: c for e, c in out.items() if c}


def invert(p):
    return {-e: c for e, c in p.items()}


def parse_signature_function(text):
    """[(angle/pi, left, at, right)] from KnotInfo's signature_function."""
    text = text.strip()
    if re.fullmatch(r"\{\s*-?\d+\s*\}", text):
        return int(text.strip("{} ")), []
    jumps = []
    for m in re.finditer(r"\{\s*([0-9.]+)\s*,\s*\{\s*(-?\d+)\s*,\s*(-?\d+)\s*,\s*(-?\d+)\s*\}", text):
        jumps.append((float(m.group(1)), int(m.group(2)), int(m.group(3)), int(m.group(4))))
    return None, jumps


def simplest_between(a, b):
    q = 1
    while True:
        p = int(a * q) + 1
        if Fraction(p, q) < b:
            return Fraction(p, q)
        q += 1


def exact_angle(x):
    f = Fraction(x).limit_denominator(60)
    return f if abs(float(f) - x) < 1e-8 else None


def samples(constant, jumps):
    if not jumps:
        pts = [Fraction(1, 2), Fraction(1), Fraction(3, 2)]
        return [(a, constant) for a in pts]
    out = []
    edges = [0.0] + [j[0] for j in jumps] + [1.0]
    values = [jumps[0][1]] + [j[3] for j in jumps]
    for i in range(len(edges) - 1):
        lo, hi = edges[i], edges[i + 1]
        w = hi - lo
        out.append((simplest_between(Fraction(lo + w / 4), Fraction(hi - w / 4)), values[i]))
        if i < len(jumps):
            a = exact_angle(jumps[i][0])
            if a is not None:
                out.append((a, jumps[i][2]))
    if all(a != 1 for a, _ in out) and jumps[-1][0] < 1:
        out.append((Fraction(1), values[-1]))
    # One conjugate point as a symmetry check.
    a, v = out[0]
    out.append((2 - a, v))
    return out


def add_profiles(s1, s2):
    d2 = dict(s2)
    return [(a, v + d2[a]) for a, v in s1 if a in d2]


def fmt_samples(s):
    return ";".join("%s=%d" % (a, v) for a, v in s)


def main():
    csv.field_size_limit(10**9)
    rows = {}
    with open(sys.argv[1], newline="") as f:
        for r in csv.DictReader(f, delimiter="|"):
            if r["name"] in PRIME:
                rows[r["name"]] = r
    w = csv.writer(sys.stdout, lineterminator="\n")
    w.writerow(["name", "braid_strands", "braid_word", "pd", "jones", "alexander",
                "determinant", "signature_samples", "provenance"])
    data = {}
    for name in PRIME:
        r = rows[name]
        letters = [int(x) for x in re.findall(r"-?\d+", r["braid_notation"])]
        strands = max(int(r["braid_index"]), max(abs(x) for x in letters) + 1)
        pd = "PD[" + ",".join("X[%s]" % ",".join(x.split(","))
                              for x in re.findall(r"\[(\d+,\d+,\d+,\d+)\]", r["pd_notation"])) + "]"
        jones = laurent(r["jones_polynomial"])
        alex = normalize_alexander(laurent(r["alexander_polynomial"]))
        const, jumps = parse_signature_function(r["signature_function"])
        s = samples(const, jumps)
        data[name] = (letters, strands, jones, alex, int(r["determinant"]), s)
        w.writerow([name, strands, "{%s}" % ",".join(map(str, letters)), pd, fmt(jones),
                    fmt(alex), r["determinant"], fmt_samples(s), SOURCE])
    letters, strands, jones, alex, det, s = data["3_1"]
    mirror_s = [(a, -v) for a, v in s]
    for name, second, j2, sig2 in [
        ("3_1#3_1", letters, jones, s),
        ("3_1#-3_1", [-x for x in letters], invert(jones), mirror_s),
    ]:
        word = letters + [x + (1 if x > 0 else -1) * (strands - 1) for x in second]
        w.writerow([name, 2 * strands - 1, "{%s}" % ",".join(map(str, word)), "",
                    fmt(mul(jones, j2)), fmt(mul(alex, alex)), det * det,
                    fmt_samples(add_profiles(s, sig2)),
                    "3_1 row of " + SOURCE + "; composite values by multiplicativity"])


if __name__ == "__main__":
    main()
