#!/usr/bin/env python3
"""Regenerate data/knots.json from KnotInfo (pip package `database_knotinfo`).

Usage: python3 tools/gen_dataset.py [--out data/knots.json]
"""

import argparse
import json
import pathlib
from fractions import Fraction

from database_knotinfo import link_list

ROOT = pathlib.Path(__file__).resolve().parent.parent
TABLE = ROOT / "data" / "appendix_c_expected.txt"

PRIME_8 = ["3_1", "4_1", "5_1", "5_2"] + [f"6_{i}" for i in range(1, 4)] + \
          [f"7_{i}" for i in range(1, 8)] + [f"8_{i}" for i in range(1, 22)]

# x-denominators sampled for the Tristram-Levine signature.
SAMPLE_DENOMS = range(2, 9)

# Knots whose Alexander module ideal E_1 is not principal.
E1_NONTRIVIAL = {"8_18", "9_46"}

EXTERNAL = {
    "7_1": [{"index": "1+", "reason": "7_1 is not slice in CP^2"}],
}


def read_known():
    known = {}
    for line in TABLE.read_text().splitlines():
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        name, k, _ = (c.strip() for c in line.split("|"))
        known[name] = [t.strip() for t in k.split(",") if t.strip()]
    return known


def signature_sampler(k):
    """Our x in (0,1) is half of KnotInfo's; returns None on a jump."""
    sf = json.loads(k["signature_function"])
    if sf == [0]:
        return (lambda x: 0), (0, 0)
    jumps = [(float(t), vals[2]) for t, vals, _ in sf]
    plateau = [0] + [after for _, after in jumps]

    def at(x):
        y = 2 * float(x)
        if y > 1:
            y = 2 - y
        val = 0
        for t, after in jumps:
            if abs(y - t) < 1e-7:
                return None
            if y > t:
                val = after
        return val

    return at, (min(plateau), max(plateau))


def branched_ranks(k):
    ranks = {}
    for q, factors in json.loads(k["torsion_numbers"]):
        ranks[str(q)] = len([f for f in factors if f != 1])
    return ranks


def as_int(s):
    try:
        return int(s)
    except (TypeError, ValueError):
        return None


def knotinfo_record(k, known):
    name = k["name"]
    sample, rng = signature_sampler(k)
    samples = {}
    for l in SAMPLE_DENOMS:
        for r in range(1, l):
            x = Fraction(r, l)
            if x.denominator != l:
                continue
            s = sample(x)
            if s is not None:
                samples[f"{x.numerator}/{x.denominator}"] = s
    rec = {
        "name": name,
        "alternating": k["alternating"] == "Y",
        "thin": k["alternating"] == "Y" or k["quasi_alternating"] == "Y",
        "signature": int(k["signature"]),
        "determinant": int(k["determinant"]),
        "arf": int(k["arf_invariant"]),
        "genus": int(k["three_genus"]),
    }
    if (g4 := as_int(k["smooth_four_genus"])) is not None:
        rec["genus4"] = g4
    if (tau := as_int(k["ozsvath_szabo_tau_invariant"])) is not None:
        rec["tau"] = tau
    rec["signature_samples"] = dict(sorted(samples.items(), key=lambda kv: Fraction(kv[0])))
    rec["signature_range"] = list(rng)
    if k["two_bridge_notation"]:
        p, q = json.loads(k["two_bridge_notation"])
        rec["two_bridge"] = [p, q % p]
    rec["branched_ranks"] = branched_ranks(k)
    if name in E1_NONTRIVIAL:
        rec["e1_trivial"] = False
    rec["known_indices"] = known.get(name, [])
    if name in EXTERNAL:
        rec["external_obstructions"] = EXTERNAL[name]
    return rec


def build(out):
    kl = {k["name"]: k for k in link_list()}
    known = read_known()
    records = []
    for name in PRIME_8:
        if name == "8_19":
            records.append({"name": "8_19", "construction": "T(3,4)",
                            "branched_ranks": branched_ranks(kl[name]),
                            "known_indices": known[name]})
        else:
            records.append(knotinfo_record(kl[name], known))
    records.append({"name": "-7_7", "construction": "-7_7"})
    for name in ("9_5", "9_46", "12a_369"):
        records.append(knotinfo_record(kl[name], known))
    records += [
        {"name": "3T(2,3)", "construction": "3*T(2,3)", "branched_ranks": {"2": 3}},
        {"name": "T(2,25)#-T(3,8)", "construction": "T(2,25) # -T(3,8)", "tau": 5, "genus4": 7},
        {"name": "T(7,8)", "construction": "T(7,8)"},
        {"name": "T(3,17)", "construction": "T(3,17)"},
        {"name": "WhT23", "alternating": False, "thin": False, "signature": 0, "determinant": 1, "arf": 0,
         "genus": 1, "genus4": 1, "tau": 1, "signature_samples": {}, "signature_range": [0, 0],
         "d_spin_double_cover": "-4"},
        {"name": "T(2,3)#WhT23", "construction": "T(2,3) # WhT23"},
    ]
    out.write_text(json.dumps(records, indent=1) + "\n")
    print(f"wrote {len(records)} records to {out}")


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--out", type=pathlib.Path, default=ROOT / "data" / "knots.json")
    build(ap.parse_args().out)


if __name__ == "__main__":
    main()
