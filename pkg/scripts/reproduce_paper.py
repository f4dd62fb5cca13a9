"""Re-run every counterexample check on T, S and P6 and print a table.

    python scripts/reproduce_paper.py [--json out.json]
"""

import argparse
import json

from graceful_lab.families import FamilyFilter
from graceful_lab.fixtures import P6, S, S_NAMES, T, T_NAMES
from graceful_lab.probes import hunt, probe_q1, probe_q2, probe_q3, relaxed_s_check, zero_centered


def rows():
    yield "T not 0-centered", zero_centered(T)
    yield "T center never n-1", probe_q2(T)
    yield "T: center at c, almost central at n-1", probe_q3(T)
    yield "S: centers at c and n-1", probe_q1(S)
    yield "P6: centers at c and n-1", probe_q1(P6)


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--json", help="write all certificates here")
    args = ap.parse_args()

    dump = {}
    for title, v in rows():
        detail = ", ".join(
            f"{k}: {c.status}" + (f" (c={c.forced_critical})" if c.forced_critical is not None else "")
            for k, c in v.certificates.items()
        )
        print(f"{title:42s} {'FAILS' if v.failed else 'holds':6s} {detail}")
        dump[title] = v.to_dict()

    relaxed = relaxed_s_check()
    for name, cert in relaxed.items():
        title = f"S: v2 at {'c' if name == 'critical' else 'n-1'}, alpha"
        print(f"{title:42s} {cert.status:6s} {len(cert.witnesses)} alpha-labelings")
        dump[f"S relaxed {name}"] = cert.to_dict()

    fam = FamilyFilter.diameter(5, max_k_distance=2, center_count=2)
    report = hunt(7, fam, "q1")
    print(f"Q1 hunt, n <= 7: {len(report.applicable)} applicable, failures {[e.code for e in report.failures]}")
    dump["hunt"] = report.to_dict()

    if args.json:
        with open(args.json, "w") as fh:
            json.dump(dump, fh, indent=2)
    print(f"(T numbering {T_NAMES}; S numbering {S_NAMES})")


if __name__ == "__main__":
    main()
