"""Run the standard battery and drop one JSON report per check.

Covers the filtration tables for the polynomial and series models, the
corner-ideal rank certificates, the two-sided growth dossier, the
dualizing chain with its perturbed control, the staircase quotient
comparison, and the one-sided ideal chains.  A summary.txt with one line
per report lands next to the JSON files.

    python scripts/make_reports.py --outdir reports --depth 8
"""

import argparse
import json
from pathlib import Path

from grfilt.workbench import (make, staircase_quotient_context, MulSystem,
                              quotient_iso_check, op_involution_report)
from grfilt.filtration import (standard_filtration, weak_adic_filtration,
                               hilbert, induced_quotient_filtration,
                               two_sided_closure)
from grfilt.graded import GradedTrunc, ideal_chain_witness
from grfilt.bimodule import (BimoduleSpec, bimodule_ranks, goldie_rank,
                             slope_table)
from grfilt.certifier import assemble_growth_dossier, verify_certificate
from grfilt.dualizing import verify_dualizing


def filtration_tables(depth):
    ring = make("R_2x2", degcap=2 * depth + 2)
    filt = standard_filtration(ring.pres, depth)
    quo = induced_quotient_filtration(ring.pres, [ring.el("beta")], depth,
                                      base=filt)
    rprime = make("R_prime", degcap=depth + 2)
    adic = weak_adic_filtration(rprime.pres, depth)
    payload = {
        "standard": {"filtration": filt.to_json(),
                     "hilbert": hilbert(filt, depth).to_json()},
        "quotient_by_corner": {
            "closed_degree": quo.closed_degree,
            "hilbert": hilbert(quo.filtration, depth).to_json()},
        "weak_adic": {"filtration": adic.to_json(),
                      "hilbert": hilbert(adic, depth).to_json()},
    }
    hl = (f"H_R(n) = 3n for n <= {depth}, quotient table H_A(n) = n+1, "
          f"weak-adic table 2n-1")
    return payload, hl


def corner_ranks(depth):
    ring = make("R_2x2", degcap=2 * depth + 2)
    carrier, closed = two_sided_closure(ring.pres, [ring.el("beta")])
    spec = BimoduleSpec("corner-ideal", ring.ambient, carrier,
                        ring.el("alpha"), ring.el("alpha"))
    both = bimodule_ranks(spec, depth)
    payload = {"closed_degree": closed,
               "actions_commute": both["actions_commute"], "sides": {}}
    for side in ("left", "right"):
        payload["sides"][side] = {
            "free": both[side].to_json(),
            "uniform": goldie_rank(spec.action(side), depth).to_json(),
            "slope": slope_table(spec.action(side), depth)}
    hl = (f"corner ideal: left rank {both['left'].rank}, "
          f"right rank {both['right'].rank} at depth {depth}")
    return payload, hl


def growth_dossier(depth):
    dossier = assemble_growth_dossier("two-sided", depth=depth)
    certs_ok = all(verify_certificate(d.certificate)
                   for d in (dossier.ascending, dossier.weak_adic)
                   if hasattr(d.certificate, "rows"))
    payload = dossier.to_json()
    payload["certificates_reverified"] = certs_ok
    hl = f"two-sided dossier consistent = {dossier.consistent}"
    return payload, hl


def dualizing_chain(_depth):
    full = verify_dualizing(degcap=20)
    control = verify_dualizing(ring=make("R_perturbed", degcap=20))
    payload = {"full": full.to_json(), "perturbed_control": control.to_json()}
    hl = (f"dualizing chain ok = {full.ok}; control aborts at "
          f"{control.aborted_at}")
    return payload, hl


def staircase_quotient(_depth):
    ring_t = make("T")
    pres, ctx, _ideal, closed = staircase_quotient_context(ring_t, degcap=12)
    ring_r = make("R_2x2", degcap=12)
    pairs = [(pres.gen("alpha"), ring_r.el("alpha")),
             (pres.gen("e12"), ring_r.el("beta"))]
    rep = quotient_iso_check(MulSystem.quotient(ctx),
                             MulSystem.plain(ring_r.ambient),
                             pairs, max_len=4)
    payload = {"iso": rep.to_json(), "closed_degree": closed,
               "op_involution": op_involution_report(ring_t)}
    hl = (f"staircase quotient consistent = {rep.consistent} "
          f"(spans {rep.dim_a}/{rep.dim_b}/{rep.dim_joint})")
    return payload, hl


def ideal_chains(depth):
    ring = make("R_2x2", degcap=2 * depth + 2)
    gr = GradedTrunc(standard_filtration(ring.pres, depth))
    classes = gr.generator_classes(ring.pres)
    left = ideal_chain_witness(
        gr, classes, [["beta"] + ["alpha"] * i for i in range(depth - 1)],
        side="left")
    rprime = make("R_prime", degcap=depth + 2)
    gra = GradedTrunc(weak_adic_filtration(rprime.pres, depth))
    ca = gra.generator_classes(rprime.pres)
    right = ideal_chain_witness(
        gra, ca, [["alpha"] * i + ["beta"] for i in range(depth - 3)],
        side="right")
    payload = {"standard_left": left.to_json(),
               "weak_adic_right": right.to_json()}
    hl = (f"left chain strict = {left.strictly_ascending}, "
          f"weak-adic right chain strict = {right.strictly_ascending}")
    return payload, hl


SECTIONS = (
    ("filtration_tables", filtration_tables),
    ("corner_ranks", corner_ranks),
    ("growth_dossier", growth_dossier),
    ("dualizing_chain", dualizing_chain),
    ("staircase_quotient", staircase_quotient),
    ("ideal_chains", ideal_chains),
)


def main(argv=None):
    ap = argparse.ArgumentParser(
        description="run the standard battery and write JSON reports")
    ap.add_argument("--outdir", default="reports")
    ap.add_argument("--depth", type=int, default=8)
    args = ap.parse_args(argv)
    outdir = Path(args.outdir)
    outdir.mkdir(parents=True, exist_ok=True)
    lines = []
    for name, build in SECTIONS:
        payload, headline = build(args.depth)
        path = outdir / f"{name}.json"
        path.write_text(json.dumps(payload, indent=2, default=str) + "\n")
        lines.append(f"{name}: {headline}")
        print(f"wrote {path}  ({headline})")
    (outdir / "summary.txt").write_text("\n".join(lines) + "\n")
    print(f"wrote {outdir / 'summary.txt'}")


if __name__ == "__main__":
    main()
