"""Regenerate the bundled knot tables from a KnotInfo CSV export.

Usage: python3 tools/make_fixtures.py path/to/knotinfo_data_complete.csv

KnotInfo is pipe-delimited.  Signatures there use the opposite sign
convention (positive knots negative); each entry is converted and attached
to the chirality that the DT realization actually produces, decided by
comparing Jones polynomials.
"""

from __future__ import annotations

import csv
import json
import sys
from pathlib import Path

from knotbounds.algebra import LaurentPoly
from knotbounds.covering import goeritz, linking_form, self_linking_spectrum
from knotbounds.diagram import parse_pd, realize_dt
from knotbounds.invariants import jones

ROOT = Path(__file__).resolve().parent.parent
DATA = ROOT / "src" / "knotbounds" / "data"
TEST_DATA = ROOT / "tests" / "data"

WORKED_EXAMPLES = [
    "3_1", "4_1", "5_1", "6_1", "7_4", "7_7", "8_16", "8_18", "9_15", "9_17", "9_37",
    "9_40", "9_46", "9_47", "9_48", "9_49", "10_83", "10_86", "10_103", "10_105",
    "10_106", "10_109", "10_116", "10_121", "10_131",
]

# K, u with '?' marks; factors of the form !K are mirror images
COMPOSITES = """
3_1#3_1 2        3_1#!6_1 2    3_1#!7_2 2    3_1#!7_7 2
3_1#!3_1 2       3_1#6_2 2     3_1#7_3 3     4_1#6_1 2
3_1#4_1 2        3_1#!6_2 2    3_1#!7_3 3?   4_1#6_2 2
3_1#5_1 3        3_1#6_3 2     3_1#7_4 3     4_1#6_3 2
3_1#!5_1 3?      4_1#5_1 3     3_1#!7_4 3?   5_1#5_1 4
3_1#5_2 2        4_1#5_2 2     3_1#7_5 3     5_1#!5_1 4??
3_1#!5_2 2       3_1#3_1#4_1 3 3_1#!7_5 3?   5_1#5_2 3
4_1#4_1 2        3_1#!3_1#4_1 3? 3_1#7_6 2   5_1#!5_2 3?
3_1#3_1#3_1 3    3_1#7_1 4     3_1#!7_6 2    5_2#5_2 2
3_1#3_1#!3_1 3   3_1#!7_1 4??  3_1#7_7 2     5_2#!5_2 2
3_1#6_1 2        3_1#7_2 2
"""

HEADER = "#! naming: rolfsen\n"


def load(path):
    csv.field_size_limit(10**9)
    with open(path, newline="") as fh:
        return {r["name"]: r for r in csv.DictReader(fh, delimiter="|")}


def u_text(raw: str) -> str:
    raw = raw.strip()
    if raw.isdigit():
        return raw
    lo, hi = (int(x) for x in raw.strip("[]").split(","))
    return f"{hi}{'?' * (hi - lo)}"


def signed_sigma(row) -> int:
    """Signature of the realized diagram in this package's convention."""
    d = realize_dt(row["dt_notation"])
    v = jones(d)
    ref = LaurentPoly.parse(row["jones_polynomial"], "t")
    sk = int(row["signature"])
    if v == ref and v == v.substitute_inverse():
        if sk == 0:
            return 0
        # V is blind here; compare linking forms with the KnotInfo PD diagram,
        # whose signature is -sk in this convention
        ours, theirs = spectrum_values(d), spectrum_values(parse_pd(row["pd_notation"]))
        if ours == theirs and ours != {(-x) % 1 for x in ours}:
            return -sk
        if ours == {(-x) % 1 for x in theirs} and ours != theirs:
            return sk
        raise SystemExit(f"{row['name']}: chirality undecidable from V or the linking form")
    if v == ref:
        return -sk
    if v == ref.substitute_inverse():
        return sk
    raise SystemExit(f"{row['name']}: Jones polynomial does not match")


def spectrum_values(d) -> set:
    return {e.self_linking for e in self_linking_spectrum(linking_form(goeritz(d)))}


def prime_line(row) -> str:
    cn, idx = row["name"].replace("a", "").split("_")
    dt = " ".join(row["dt_notation"].strip("[]").replace(",", " ").split())
    return f"{cn} {idx} {dt} {row['determinant']} {signed_sigma(row)} {u_text(row['unknotting_number'])}\n"


def main(argv):
    rows = load(argv[1])
    primes = [
        r for r in rows.values()
        if "_" in r["name"] and r["name"].split("_")[0].isdigit() and 3 <= int(r["name"].split("_")[0]) <= 10
    ]
    primes.sort(key=lambda r: tuple(int(x) for x in r["name"].split("_")))

    with open(DATA / "knots_le10.txt", "w") as fh:
        fh.write(HEADER)
        fh.write("# prime knots up to 10 crossings: n index DT-code det sigma u\n")
        fh.write("# sigma is that of the diagram realized from the DT code; positive trefoil +2\n")
        for r in primes:
            fh.write(prime_line(r))

    with open(DATA / "worked_examples.txt", "w") as fh:
        fh.write(HEADER)
        fh.write("# knots with unknotting numbers settled or discussed by the criteria\n")
        for name in WORKED_EXAMPLES:
            if name == "10_105":
                fh.write("10 105 : 91 (0,0,0,1)\n")
            fh.write(prime_line(rows[name]))

    with open(DATA / "composites.txt", "w") as fh:
        fh.write(HEADER)
        fh.write("# composite knots up to 10 crossings: name u (x?? = at most x, x-2 not excluded)\n")
        fh.write("# factors are the representatives with sigma >= 0; !K is the mirror image\n")
        for name, u in zip(COMPOSITES.split()[::2], COMPOSITES.split()[1::2]):
            fh.write(f"{name} {u}\n")

    TEST_DATA.mkdir(parents=True, exist_ok=True)
    with open(TEST_DATA / "knots_12.txt", "w") as fh:
        fh.write(HEADER)
        fh.write("# 12-crossing alternating knot 664 (KnotScape numbering)\n")
        row = dict(rows["12a_664"])
        row["name"] = "12_664"
        fh.write(prime_line(row))

    ref = {}
    for r in primes:
        ref[r["name"]] = {
            "dt": r["dt_notation"],
            "pd": r["pd_notation"],
            "jones": r["jones_polynomial"],
            "q": r["q_polynomial"],
            "det": int(r["determinant"]),
            "signature_knotinfo": int(r["signature"]),
            "unknotting_number": r["unknotting_number"],
        }
    with open(TEST_DATA / "knotinfo_le10.json", "w") as fh:
        json.dump(ref, fh, indent=1, sort_keys=True)
        fh.write("\n")


if __name__ == "__main__":
    main(sys.argv)
