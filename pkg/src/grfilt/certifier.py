"""Growth-obstruction certificates and the dossiers that assemble them.

The core inequality: given rank data s < t and a Hilbert table H, a
certificate records, for every shift p up to a bound, the first n with
t*H(n) > s*H(n+p).  Such a table shows that no offset can reconcile
t-fold growth with s-fold growth across the window: any filtration
comparison that would need H(n+p) to absorb t/s copies of H(n) fails at
the recorded n.  When some shift admits no witness inside the window the
result is an ObstructionGap, not a certificate; exponential tables gap
immediately at p = 1.

Dossiers bundle the certificate with its supporting facts for the
triangular worked example: the one-sided ranks feeding (s, t), the induced
quotient Hilbert table, the divergence of one one-sided good filtration
against the intrinsic one (with the other side matching exactly), and a
strictly ascending chain of one-sided ideals in the associated graded.
The ascending filtration is obstructed on the left; the weak-adic one on
the right; the two-sided dossier checks the swap is consistent.
"""

from dataclasses import dataclass

from .fields import QQ
from .filtration import (standard_filtration, weak_adic_filtration, hilbert,
                         induced_quotient_filtration,
                         induced_good_filtration,
                         intrinsic_module_filtration, equivalence_offset)
from .graded import GradedTrunc, ideal_chain_witness
from .bimodule import BimoduleSpec, free_rank
from .workbench import make


@dataclass(frozen=True)
class GrowthCertificate:
    s: int
    t: int
    case: str
    max_offset: int
    rows: tuple
    hilbert: tuple
    verdict: str

    def to_json(self):
        return {"s": self.s, "t": self.t, "case": self.case,
                "max_offset": self.max_offset,
                "rows": [dict(r) for r in self.rows],
                "hilbert": list(self.hilbert), "verdict": self.verdict}


@dataclass(frozen=True)
class ObstructionGap:
    s: int
    t: int
    case: str
    first_failed_p: int
    hilbert: tuple
    note: str

    def to_json(self):
        return {"s": self.s, "t": self.t, "case": self.case,
                "first_failed_p": self.first_failed_p,
                "hilbert": list(self.hilbert), "note": self.note}


def growth_obstruction(values, s, t, max_offset, case="table"):
    """Certificate that t-scaled growth outruns every shift by p <= bound.

    values: trusted Hilbert numbers H(0..N).  For each p the witness is the
    FIRST n with t*H(n) > s*H(n+p); if some p has none inside the window,
    an ObstructionGap is returned with that p.  Requires s < t: with
    s >= t the inequality family is not a growth statement at all.
    """
    if s >= t:
        raise ValueError("s < t required")
    if s < 1:
        raise ValueError("ranks must be positive")
    vals = list(values)
    rows = []
    for p in range(1, max_offset + 1):
        hit = None
        for n in range(len(vals) - p):
            if t * vals[n] > s * vals[n + p]:
                hit = n
                break
        if hit is None:
            return ObstructionGap(
                s, t, case, p, tuple(vals),
                f"no n in the window has {t}*H(n) > {s}*H(n+{p}); "
                f"the table's growth absorbs this shift")
        rows.append({"p": p, "n": hit, "H_n": vals[hit],
                     "H_n_plus_p": vals[hit + p]})
    return GrowthCertificate(
        s, t, case, max_offset, tuple(rows), tuple(vals),
        f"growth obstruction through offset {max_offset}: "
        f"{t}-fold growth outruns {s}-fold growth at every shift")


def verify_certificate(cert):
    """Recheck a certificate (object or its JSON dict) from its own table."""
    if isinstance(cert, dict):
        s, t, rows, vals = (cert["s"], cert["t"], cert["rows"],
                            list(cert["hilbert"]))
        max_offset = cert["max_offset"]
    else:
        s, t, rows, vals = cert.s, cert.t, cert.rows, list(cert.hilbert)
        max_offset = cert.max_offset
    if s >= t:
        return False
    seen = set()
    for row in rows:
        p, n = row["p"], row["n"]
        seen.add(p)
        if n + p >= len(vals):
            return False
        if row["H_n"] != vals[n] or row["H_n_plus_p"] != vals[n + p]:
            return False
        if not t * vals[n] > s * vals[n + p]:
            return False
        if any(t * vals[m] > s * vals[m + p] for m in range(n)):
            return False
    return seen == set(range(1, max_offset + 1))


def subexp_probe(values):
    """Window probe of growth shape: max consecutive ratio plus the lowest
    finite-difference order whose tail goes constant.  A probe, never a
    proof: any window is consistent with wild behavior beyond it."""
    vals = [v for v in values]
    ratios = [vals[i + 1] / vals[i]
              for i in range(len(vals) - 1) if vals[i]]
    seq = vals
    fitted = None
    for k in range(1, max(len(vals) - 2, 1)):
        seq = [b - a for a, b in zip(seq, seq[1:])]
        if len(seq) >= 2 and len(set(seq[len(seq) // 2:])) == 1:
            fitted = k
            break
    return {"max_ratio": round(max(ratios), 4) if ratios else None,
            "fitted_degree": fitted,
            "subexponential_consistent": fitted is not None,
            "note": "window probe only, not a proof"}


# ------------------------------------------------------------------ dossiers

@dataclass(frozen=True)
class ObstructionDossier:
    case: str
    s: int
    t: int
    ranks: dict
    hilbert: object
    certificate: object
    offsets: dict
    chain: object
    probe: dict
    verdict: str

    def to_json(self):
        return {"case": self.case, "s": self.s, "t": self.t,
                "ranks": {k: v.to_json() for k, v in self.ranks.items()},
                "hilbert": self.hilbert.to_json(),
                "certificate": self.certificate.to_json(),
                "offsets": {k: v.to_json() for k, v in self.offsets.items()},
                "chain": self.chain.to_json(), "probe": self.probe,
                "verdict": self.verdict}


def _triangular_rank_pair(depth, field):
    """One-sided ranks of the nilpotent ideal over the diagonal image,
    certified on the polynomial model (series truncation cannot carry a
    rank certificate)."""
    ring = make("R_2x2", degcap=2 * depth + 2, field=field)
    carrier, _ = _nilpotent_carrier(ring, depth)
    spec = BimoduleSpec("nilpotent-ideal", ring.ambient, carrier,
                        ring.el("alpha"), ring.el("alpha"))
    left = free_rank(spec.action("left"), depth)
    right = free_rank(spec.action("right"), depth)
    if left.verdict != "free" or right.verdict != "free":
        raise ValueError("rank pair not certified at this depth")
    return ring, spec, left, right


def _nilpotent_carrier(ring, depth):
    from .filtration import two_sided_closure
    ideal, closed = two_sided_closure(ring.pres, [ring.el("beta")])
    return ideal, closed


def assemble_growth_dossier(case, depth=8, field=QQ):
    """Build the complete obstruction dossier for one filtration kind."""
    if case == "two-sided":
        return assemble_two_sided(depth, field)
    if case not in ("ascending", "weak-adic"):
        raise ValueError(f"unknown case {case!r}")
    ring_poly, spec, left, right = _triangular_rank_pair(depth, field)
    s, t = left.rank, right.rank
    ranks = {"left": left, "right": right}
    if case == "ascending":
        ring = ring_poly
        filt = standard_filtration(ring.pres, depth)
        quo = induced_quotient_filtration(ring.pres, [ring.el("beta")],
                                          depth, base=filt)
        table = hilbert(quo.filtration, depth)
        carrier = spec.carrier
        lo, hi = 0, depth
        max_p = depth // 2
        diverging_side, matching_side = "left", "right"
    else:
        ring = make("R_prime", degcap=depth + 2, field=field)
        filt = weak_adic_filtration(ring.pres, depth)
        quo = induced_quotient_filtration(ring.pres, [ring.el("beta")],
                                          0, base=filt)
        table = hilbert(quo.filtration, depth)
        carrier = quo.ideal
        lo, hi = -depth, 0
        max_p = (depth - 1) // 2
        diverging_side, matching_side = "right", "left"
    cert = growth_obstruction(table.values, s, t, max_p, case=case)
    amb = ring.ambient
    alpha, beta = ring.el("alpha"), ring.el("beta")
    albe = amb.mul(alpha, beta)
    shift = 1 if case == "ascending" else -1
    gens = [(beta, shift), (albe, 2 * shift)]
    goods = {sd: induced_good_filtration(filt, gens, sd, lo, hi,
                                         name=f"{sd}-good")
             for sd in ("left", "right")}
    intrinsic = intrinsic_module_filtration(carrier, filt, lo, hi,
                                            name="intrinsic")
    eq_bound = max((depth - 3) // 2, 1)
    offsets = {
        "diverging": equivalence_offset(goods[diverging_side], intrinsic,
                                        max_offset=eq_bound),
        "matching": equivalence_offset(goods[matching_side], intrinsic,
                                       max_offset=eq_bound)}
    gr = GradedTrunc(filt)
    classes = gr.generator_classes(ring.pres)
    steps = min(4, depth - 2)
    if case == "ascending":
        words = [["beta"] + ["alpha"] * i for i in range(steps)]
        chain = ideal_chain_witness(gr, classes, words, side="left")
    else:
        words = [["alpha"] * i + ["beta"] for i in range(steps)]
        chain = ideal_chain_witness(gr, classes, words, side="right")
    probe = subexp_probe(table.values)
    verdict = (f"{case} filtration: {diverging_side}-side obstruction "
               f"({diverging_side}-good filtrations diverge from the "
               f"intrinsic one; ranks {s} against {t}; {matching_side} "
               f"side matches exactly)")
    return ObstructionDossier(case, s, t, ranks, table, cert, offsets,
                              chain, probe, verdict)


@dataclass(frozen=True)
class TwoSidedDossier:
    ascending: ObstructionDossier
    weak_adic: ObstructionDossier
    consistent: bool
    checks: dict
    verdict: str

    def to_json(self):
        return {"ascending": self.ascending.to_json(),
                "weak_adic": self.weak_adic.to_json(),
                "consistent": self.consistent, "checks": dict(self.checks),
                "verdict": self.verdict}


def assemble_two_sided(depth=8, field=QQ):
    """Both dossiers plus the consistency of their swapped obstructions."""
    asc = assemble_growth_dossier("ascending", depth, field)
    adi = assemble_growth_dossier("weak-adic", depth, field)
    checks = {
        "same_rank_pair": (asc.s, asc.t) == (adi.s, adi.t),
        "both_certified": all(isinstance(d.certificate, GrowthCertificate)
                              for d in (asc, adi)),
        "sides_swap": ("left-side" in asc.verdict
                       and "right-side" in adi.verdict),
        "both_chains_strict": (asc.chain.strictly_ascending
                               and adi.chain.strictly_ascending),
        "divergence_witnessed": (not asc.offsets["diverging"].equivalent
                                 and not adi.offsets["diverging"].equivalent),
        "matching_sides_exact": (asc.offsets["matching"].offset == 0
                                 and adi.offsets["matching"].offset == 0)}
    consistent = all(checks.values())
    verdict = ("two-sided: obstructions land on opposite sides with the "
               "same rank data" if consistent else
               "two-sided: INCONSISTENT, see checks")
    return TwoSidedDossier(asc, adi, consistent, checks, verdict)
