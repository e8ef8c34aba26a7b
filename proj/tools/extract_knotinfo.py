#!/usr/bin/env python3
"""Regenerate the bundled knot tables from the KnotInfo database package.

Usage: pip download database_knotinfo; python3 extract_knotinfo.py <knotinfo_data_complete.csv> <repo-root>
"""
import csv
import re
import sys

csv.field_size_limit(10**9)

NAMED = ["6a_1", "9n_4", "10n_10", "10n_13", "11n_38", "11n_49", "11n_116",
         "12n_121", "12n_200", "12n_309", "12n_318", "13n_469", "13n_572",
         "13n_1021", "13n_2527", "13n_3158"]


def dt_list(text):
    return [int(x) for x in re.findall(r"-?\d+", text)]


def first_braid(text):
    # a few entries list alternative words as [[...],[...]]
    words = re.findall(r"\[([^\[\]]*)\]", text)
    return dt_list(words[0] if words else text)


def ht_name(dt_name):
    m = re.fullmatch(r"(\d+)([an])_(\d+)", dt_name)
    return "K%s%s%s" % m.groups()


def main(src, root):
    rows = list(csv.DictReader(open(src), delimiter="|"))[1:]
    table = [r for r in rows if r["crossing_number"].isdigit() and 3 <= int(r["crossing_number"]) <= 9]
    with open(root + "/data/prime_knots_le9.csv", "w") as f:
        f.write("name,dt\n")
        for r in table:
            f.write("%s,%s\n" % (r["name"], " ".join(map(str, dt_list(r["dt_notation"])))))
    by_dt = {r["dt_name"]: r for r in rows}
    with open(root + "/data/named_knots.csv", "w") as f:
        f.write("name,dt\n")
        for n in NAMED:
            r = by_dt[n]
            f.write("%s,%s\n" % (ht_name(n), " ".join(map(str, dt_list(r["dt_notation"])))))
    with open(root + "/tests/data/knotinfo_reference.csv", "w") as f:
        f.write("name,dt,braid,alexander,signature,determinant,arf\n")
        for r in table + [by_dt[n] for n in NAMED]:
            name = r["name"] if r in table else ht_name(r["dt_name"])
            alex = r["alexander_polynomial"].replace(" ", "")
            f.write("%s,%s,%s,%s,%s,%s,%s\n" % (name, " ".join(map(str, dt_list(r["dt_notation"]))),
                                                " ".join(map(str, first_braid(r["braid_notation"]))),
                                                alex, r["signature"], r["determinant"], r["arf_invariant"]))


if __name__ == "__main__":
    main(sys.argv[1], sys.argv[2])
