"""Rank certificates for one-sided k[t]-actions on matrix carriers.

A ModuleAction is a subspace window of an ambient together with a ring
element acting by left or right multiplication; the subring k[t] it
generates is the coefficient ring.  Everything is decided on the computed
degree window and reported as an explicit certificate, with three honest
outcomes: free of a definite rank, not free (with a relation witness), or
inconclusive at the probed depth.

The naive growth slope dim M_{<=n} / dim k[t]_{<=n} misrepresents twisted
actions: an actor can raise carrier degree by more than one step, in which
case the slope undercounts the rank by exactly that step.  slope_table is
therefore exposed as a probe with the correction factor spelled out, never
as the rank itself.
"""

from dataclasses import dataclass

from .linalg import SpanTracker, kernel_combos
from .linspace import (Subspace, restrict_degree, intersect, sum_spaces,
                       zero_space, span, DegreeOverflowError)


@dataclass(frozen=True)
class ModuleAction:
    name: str
    ambient: object
    carrier: Subspace
    actor: object
    side: str
    ctx: object = None

    def __post_init__(self):
        if self.side not in ("left", "right"):
            raise ValueError("side must be 'left' or 'right'")

    def apply(self, mat):
        if self.side == "left":
            out = self.ambient.mul(self.actor, mat)
        else:
            out = self.ambient.mul(mat, self.actor)
        if self.ctx is not None:
            out = self.ctx.reduce_mat(out)
        return out

    def power_orbit(self, mat, max_power=None):
        """[mat, t*mat, t^2*mat, ...] while products stay representable.

        Degree-raising actors stop at the degree cap on their own.  The
        default bound of ambient dim + 1 applications covers the rest:
        past that many vectors the cumulative span is stable under the
        actor, and a zero or a linear collision, if one ever occurs,
        has already occurred.
        """
        if max_power is None:
            max_power = self.ambient.dim + 1
        out = [mat]
        k = 0
        while k < max_power:
            try:
                nxt = self.apply(out[-1])
            except DegreeOverflowError:
                break
            if nxt.is_zero():
                out.append(nxt)
                break
            out.append(nxt)
            k += 1
        return out

    def effective_step(self):
        """Observed degree increase of one application on the carrier."""
        best = 0
        for b in self.carrier.basis_matrices():
            try:
                img = self.apply(b)
            except DegreeOverflowError:
                continue
            if not img.is_zero():
                best = max(best, img.degree() - b.degree())
        return best


@dataclass(frozen=True)
class RankReport:
    name: str
    side: str
    verdict: str
    rank: object
    depth: int
    effective_step: int
    generator_degrees: tuple
    generators: tuple
    relation: object
    spanned_through: int

    def to_json(self):
        return {"name": self.name, "side": self.side,
                "verdict": self.verdict, "rank": self.rank,
                "depth": self.depth,
                "effective_step": self.effective_step,
                "generator_degrees": list(self.generator_degrees),
                "relation": self.relation,
                "spanned_through": self.spanned_through}


def free_rank(action, depth):
    """Greedy degreewise generators plus an exact relation scan.

    Every carrier basis vector of degree <= depth is either absorbed into
    the k[t]-span of the generators found so far or adopted as a new
    generator; each adopted generator contributes its full power orbit to
    the span, and any linear collision among orbit vectors is a genuine
    k[t]-relation (products are computed exactly, so nothing spurious).

    Verdicts: "free" when no relation appeared and generator discovery has
    been quiet for more than effective_step degrees below depth;
    "not free" with the relation; otherwise "inconclusive".
    """
    amb = action.ambient
    tracker = SpanTracker(amb.field, amb.dim)
    gens = []
    relation = None
    step = action.effective_step()
    basis = [b for b in action.carrier.basis_matrices()
             if b.degree() <= depth]
    basis.sort(key=lambda m: m.degree())
    for b in basis:
        vb = amb.encode(b)
        if tracker.express(vb) is not None:
            continue
        gi = len(gens)
        gens.append(b)
        for k, mat in enumerate(action.power_orbit(b)):
            v = amb.encode(mat)
            if not any(v):
                relation = relation or {
                    "kind": "nilpotent", "generator": gi, "power": k,
                    "combo": []}
                break
            if not tracker.add(v, (gi, k)):
                combo = tracker.express(v)
                relation = relation or {
                    "kind": "collision", "generator": gi, "power": k,
                    "combo": sorted(
                        [[j, l, str(c)] for (j, l), c in combo.items()])}
                break
    if relation is not None:
        verdict, rank = "not free", None
    elif gens and gens[-1].degree() > depth - max(step, 1):
        verdict, rank = "inconclusive", None
    else:
        verdict, rank = "free", len(gens)
    return RankReport(action.name, action.side, verdict, rank, depth,
                      step, tuple(g.degree() for g in gens),
                      tuple(gens), relation, depth)


def verify_rank_certificate(action, report):
    """Recheck a rank report's claims from its stored data."""
    amb = action.ambient
    if report.verdict == "not free":
        rel = report.relation
        if rel is None:
            return False
        gens = list(report.generators)
        gi, k = rel["generator"], rel["power"]
        orbit = action.power_orbit(gens[gi], max_power=k)
        if len(orbit) <= k:
            return False
        vec = list(amb.encode(orbit[k]))
        if rel["kind"] == "nilpotent":
            return not any(vec)
        if not any(vec):
            return False
        for j, l, cs in rel["combo"]:
            c = _coeff_from_str(amb.field, cs)
            other = action.power_orbit(gens[j], max_power=l)[l]
            ov = amb.encode(other)
            vec = [a - c * b for a, b in zip(vec, ov)]
        return not any(vec)
    if report.verdict != "free":
        return True
    tracker = SpanTracker(amb.field, amb.dim)
    expected = 0
    for gi, g in enumerate(report.generators):
        for k, mat in enumerate(action.power_orbit(g)):
            v = amb.encode(mat)
            if not any(v):
                return False
            if not tracker.add(v, (gi, k)):
                return False
            expected += 1
    if tracker.dim != expected:
        return False
    window = restrict_degree(action.carrier, report.spanned_through)
    return all(tracker.express(r) is not None for r in window.rows)


def _coeff_from_str(field, s):
    if field.name == "Q":
        from fractions import Fraction
        return Fraction(s)
    return field.of(int(s.split("~")[0]))


def torsion_window(action, max_power=None):
    """Window part of the torsion submodule: elements killed by t^K.

    K defaults to the deepest power budget the degree cap allows."""
    amb = action.ambient
    dt = max(action.actor.degree(), 1)
    if max_power is None:
        max_power = max(amb.degcap // dt, 1)
    domain = restrict_degree(action.carrier, amb.degcap - max_power * dt) \
        if not amb.series else action.carrier
    if domain.dim == 0:
        return zero_space(amb)
    images = []
    for b in domain.basis_matrices():
        m = b
        for _ in range(max_power):
            m = action.apply(m)
        images.append(list(amb.encode(m)))
    combos = kernel_combos(images, amb.field)
    vecs = []
    for c in combos:
        vec = [amb.field.zero] * amb.dim
        for coef, row in zip(c, domain.rows):
            if coef:
                vec = [a + coef * b for a, b in zip(vec, row)]
        vecs.append(vec)
    return Subspace.from_vectors(amb, vecs)


def slope_table(action, depth):
    """Probe table: window dimension against k[t]-budget, with the twist
    correction made explicit.  Not a rank; see free_rank / goldie_rank."""
    step = max(action.effective_step(), 1)
    rows = []
    for n in range(1, depth + 1):
        dim_n = restrict_degree(action.carrier, n).dim
        raw = dim_n / (n + 1)
        rows.append({"n": n, "carrier_dim": dim_n,
                     "raw_slope": round(raw, 4),
                     "twist_corrected": round(raw * step, 4)})
    return {"effective_step": step, "rows": rows,
            "note": "probe only; raw slope counts carrier degrees against "
                    "k[t] degrees one for one and undercounts twisted "
                    "actions by the step factor"}


@dataclass(frozen=True)
class GoldieReport:
    name: str
    side: str
    verdict: str
    rank: object
    family_degrees: tuple
    family: tuple
    essential_ok: bool
    budget_ok: bool
    regular_ok: bool
    depth: int
    slope: dict

    def to_json(self):
        return {"name": self.name, "side": self.side,
                "verdict": self.verdict, "rank": self.rank,
                "family_degrees": list(self.family_degrees),
                "essential_ok": self.essential_ok,
                "budget_ok": self.budget_ok,
                "regular_ok": self.regular_ok,
                "depth": self.depth, "slope": self.slope}


def goldie_rank(action, depth):
    """Uniform rank certificate: a maximal greedy family with directly
    summed k[t]-orbits, plus the check that every window element has a
    nonzero multiple inside the family span (essentiality).

    Needs the actor to act regularly (injectively) on the window; a kernel
    element is reported instead of a rank.  Series ambients are refused:
    truncation makes every element nilpotent under the action, so no
    uniform-rank statement about the untruncated module can come out.
    """
    amb = action.ambient
    if amb.series:
        raise ValueError(
            "goldie_rank needs polynomial mode; in a series ambient every "
            "element is torsion by truncation and the certificate is empty")
    dt = max(action.actor.degree(), 1)
    domain = restrict_degree(action.carrier, amb.degcap - dt)
    regular_ok = True
    if domain.dim:
        images = [list(amb.encode(action.apply(b)))
                  for b in domain.basis_matrices()]
        if kernel_combos(images, amb.field):
            regular_ok = False
    if not regular_ok:
        return GoldieReport(action.name, action.side,
                            "not certified: actor has a kernel on the "
                            "window", None, (), (), False, False, False,
                            depth, slope_table(action, depth))
    family = []
    orbit_spans = []
    total = zero_space(amb)
    budget_ok = True
    basis = [b for b in action.carrier.basis_matrices()
             if b.degree() <= depth]
    basis.sort(key=lambda m: m.degree())
    for b in basis:
        orbit = action.power_orbit(b)
        sb = span(amb, orbit)
        if intersect(total, sb).dim == 0:
            family.append(b)
            orbit_spans.append(sb)
            total = sum_spaces(total, sb)
            if len(orbit) < 2:
                budget_ok = False
    essential_ok = True
    for b in basis:
        sb = span(amb, action.power_orbit(b))
        if intersect(total, sb).dim == 0:
            essential_ok = False
            break
    verdict = "certified" if (essential_ok and budget_ok) else "inconclusive"
    return GoldieReport(action.name, action.side, verdict,
                        len(family) if verdict == "certified" else None,
                        tuple(m.degree() for m in family), tuple(family),
                        essential_ok, budget_ok, True, depth,
                        slope_table(action, depth))


def verify_goldie_certificate(action, report):
    """Recheck pairwise directness and essentiality of a stored family."""
    if report.verdict != "certified":
        return True
    amb = action.ambient
    total = zero_space(amb)
    for m in report.family:
        sb = span(amb, action.power_orbit(m))
        if intersect(total, sb).dim != 0:
            return False
        total = sum_spaces(total, sb)
    for b in action.carrier.basis_matrices():
        if b.degree() > report.depth:
            continue
        sb = span(amb, action.power_orbit(b))
        if intersect(total, sb).dim == 0:
            return False
    return True


@dataclass(frozen=True)
class BimoduleSpec:
    """A carrier with commuting left and right k[t]-actions."""
    name: str
    ambient: object
    carrier: Subspace
    left_actor: object
    right_actor: object
    ctx: object = None

    def action(self, side):
        actor = self.left_actor if side == "left" else self.right_actor
        return ModuleAction(f"{self.name}:{side}", self.ambient,
                            self.carrier, actor, side, self.ctx)


def bimodule_ranks(spec, depth):
    """Free-rank reports for both actions, plus the commuting check
    (t_left (m) t_right) computed both ways on the carrier basis."""
    left = spec.action("left")
    right = spec.action("right")
    commute_ok = True
    for b in spec.carrier.basis_matrices():
        try:
            one_way = right.apply(left.apply(b))
            other = left.apply(right.apply(b))
        except DegreeOverflowError:
            continue
        if one_way != other:
            commute_ok = False
            break
    return {"left": free_rank(left, depth),
            "right": free_rank(right, depth),
            "actions_commute": commute_ok}
