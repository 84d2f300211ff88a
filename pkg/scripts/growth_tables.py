"""Print growth tables side by side and certify the obstruction window.

Columns: the triangular ring's layer dimensions, the quotient table after
killing the corner ideal, and the series model's m-adic quotient table.
The quotient table is the one the growth certificates run on; the script
certifies t*H(n) > s*H(n+p) witnesses for every offset p up to the bound
and shows a probe of the growth shape.

    python scripts/growth_tables.py --depth 16 --max-offset 8 --json out.json
"""

import argparse
import json

from grfilt.workbench import make
from grfilt.filtration import (standard_filtration, weak_adic_filtration,
                               hilbert, induced_quotient_filtration)
from grfilt.certifier import (growth_obstruction, verify_certificate,
                              subexp_probe)


def tables(depth):
    ring = make("R_2x2", degcap=2 * depth + 2)
    filt = standard_filtration(ring.pres, depth)
    quo = induced_quotient_filtration(ring.pres, [ring.el("beta")], depth,
                                      base=filt)
    rprime = make("R_prime", degcap=depth + 2)
    adic = weak_adic_filtration(rprime.pres, depth)
    mquo = induced_quotient_filtration(rprime.pres, [rprime.el("beta")], 0,
                                       base=adic)
    return {"ring": list(hilbert(filt, depth).values),
            "quotient": list(hilbert(quo.filtration, depth).values),
            "madic_quotient": list(hilbert(mquo.filtration, depth).values)}


def main(argv=None):
    ap = argparse.ArgumentParser(description="growth tables and "
                                             "obstruction certificates")
    ap.add_argument("--depth", type=int, default=16)
    ap.add_argument("--s", type=int, default=1)
    ap.add_argument("--t", type=int, default=2)
    ap.add_argument("--max-offset", type=int, default=None,
                    help="default: depth // 2")
    ap.add_argument("--json", metavar="FILE",
                    help="also write everything to FILE")
    args = ap.parse_args(argv)
    max_p = args.max_offset if args.max_offset is not None \
        else args.depth // 2

    cols = tables(args.depth)
    print(f"{'n':>4} {'H_ring':>8} {'H_quot':>8} {'H_madic':>8}")
    for n in range(args.depth + 1):
        print(f"{n:>4} {cols['ring'][n]:>8} {cols['quotient'][n]:>8} "
              f"{cols['madic_quotient'][n]:>8}")

    cert = growth_obstruction(cols["quotient"], args.s, args.t, max_p)
    if hasattr(cert, "rows"):
        print(f"\nobstruction witnesses, {args.t}*H(n) > "
              f"{args.s}*H(n+p), quotient table:")
        for row in cert.rows:
            print(f"  p = {row['p']:>2}: first n = {row['n']} "
                  f"(H = {row['H_n']} vs {row['H_n_plus_p']})")
        print(f"re-verified: {verify_certificate(cert)}")
    else:
        print(f"\nno witness for p = {cert.first_failed_p}: {cert.note}")

    probe = subexp_probe(cols["quotient"])
    print(f"\ngrowth shape probe: max ratio {probe['max_ratio']}, fitted "
          f"degree {probe['fitted_degree']}, subexponential consistent = "
          f"{probe['subexponential_consistent']}")

    if args.json:
        blob = {"depth": args.depth, "tables": cols,
                "certificate": (cert.to_json() if hasattr(cert, "to_json")
                                else str(cert)),
                "probe": probe}
        with open(args.json, "w") as fh:
            json.dump(blob, fh, indent=2, default=str)
            fh.write("\n")
        print(f"wrote {args.json}")


if __name__ == "__main__":
    main()
