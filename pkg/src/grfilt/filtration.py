"""Filtrations of matrix-polynomial algebras and of their modules.

Two kinds are supported, indexed so that layers increase with the index in
both cases.  An ascending filtration is a chain Gamma_0 <= Gamma_1 <= ...
with Gamma_m Gamma_n <= Gamma_{m+n}; the standard one takes Gamma_n to be
the span of all products of at most n generators.  A weak-adic filtration
on a ring with a distinguished ideal m puts Gamma_i = R for i >= 0 and
Gamma_{-i} = m^i, so its stored layers sit at indices lo..0.

Layers outside the computed window are reported honestly: below an
ascending window they are zero, above it (or below a weak-adic window) the
accessor raises WindowExceeded rather than guessing.  Quotient layers that
would need ideal saturation beyond the trusted degree raise
TruncationError; rebuild with a larger degree cap.
"""

from dataclasses import dataclass

from .linspace import (Subspace, span, zero_space, sum_spaces, intersect,
                       subspace_product, quotient_dim, QuotientContext,
                       DegreeOverflowError)


class WindowExceeded(Exception):
    pass


class TruncationError(Exception):
    pass


@dataclass(frozen=True)
class AlgebraPresentation:
    """A named list of generators inside an ambient matrix ring.  The unit
    is always implicit."""

    name: str
    ambient: object
    gens: tuple

    def __post_init__(self):
        for _, g in self.gens:
            self.ambient.encode(g)

    def gen(self, name):
        for nm, g in self.gens:
            if nm == name:
                return g
        raise KeyError(name)

    def gen_mats(self):
        return [g for _, g in self.gens]

    def gen_names(self):
        return [nm for nm, _ in self.gens]


class Filtration:
    def __init__(self, kind, ambient, layers, name=""):
        if kind not in ("ascending", "weak-adic"):
            raise ValueError(f"unknown filtration kind {kind!r}")
        self.kind = kind
        self.ambient = ambient
        self.layers = dict(layers)
        self.name = name
        idx = sorted(self.layers)
        if not idx:
            raise ValueError("a filtration needs at least one layer")
        self.lo, self.hi = idx[0], idx[-1]
        if idx != list(range(self.lo, self.hi + 1)):
            raise ValueError("layer indices must be contiguous")
        if kind == "weak-adic" and self.hi != 0:
            raise ValueError("weak-adic layers are indexed lo..0")

    def layer(self, n):
        if n in self.layers:
            return self.layers[n]
        if self.kind == "ascending":
            if n < self.lo:
                return zero_space(self.ambient)
        else:
            if n > 0:
                return self.layers[0]
        raise WindowExceeded(
            f"layer {n} of {self.name or 'filtration'} is outside the "
            f"computed window [{self.lo}, {self.hi}]")

    def known(self, n):
        if n in self.layers:
            return True
        if self.kind == "ascending":
            return n < self.lo
        return n > 0

    def dims(self):
        return {n: self.layers[n].dim for n in sorted(self.layers)}

    def to_json(self):
        return {"kind": self.kind, "name": self.name,
                "window": [self.lo, self.hi], "dims": self.dims()}

    def __repr__(self):
        return (f"Filtration({self.kind}, {self.name!r}, "
                f"window=[{self.lo},{self.hi}])")


@dataclass(frozen=True)
class HilbertTable:
    kind: str
    values: tuple
    name: str = ""

    def value(self, n):
        return self.values[n]

    def to_json(self):
        return {"kind": self.kind, "name": self.name,
                "values": list(self.values)}


def hilbert(filt, upto):
    """Hilbert function of a filtration.

    Ascending: H(n) = dim Gamma_n.  Weak-adic: H(n) = dim Gamma_0/Gamma_{-n},
    so H(0) = 0 and H grows with the codimension of the ideal powers.
    """
    if filt.kind == "ascending":
        vals = [filt.layer(n).dim for n in range(upto + 1)]
    else:
        vals = [quotient_dim(filt.layer(0), filt.layer(-n))
                for n in range(upto + 1)]
    return HilbertTable(filt.kind, tuple(vals), name=filt.name)


def standard_filtration(pres, upto):
    """Gamma_n = span of products of at most n generators (Gamma_0 = k)."""
    amb = pres.ambient
    gens = pres.gen_mats()
    layers = {0: span(amb, [amb.one()])}
    for n in range(1, upto + 1):
        prev = layers[n - 1]
        prods = [amb.mul(m, g) for m in prev.basis_matrices() for g in gens]
        layers[n] = Subspace.from_vectors(
            amb, list(prev.rows) + [amb.encode(p) for p in prods])
    return Filtration("ascending", amb, layers, name=f"standard:{pres.name}")


def full_span(pres, maxiter=200):
    """Span of all words in the generators, closed under multiplication.

    Stabilizes for series ambients (finite dimensional); in polynomial mode
    a word exceeding the degree cap raises DegreeOverflowError instead of
    being dropped.
    """
    amb = pres.ambient
    gens = pres.gen_mats()
    cur = span(amb, [amb.one()] + gens)
    for _ in range(maxiter):
        prods = [amb.mul(m, g) for m in cur.basis_matrices() for g in gens]
        nxt = Subspace.from_vectors(
            amb, list(cur.rows) + [amb.encode(p) for p in prods])
        if nxt.dim == cur.dim:
            return nxt
        cur = nxt
    raise TruncationError("word closure did not stabilize; raise maxiter")


def weak_adic_filtration(pres, depth):
    """Gamma_0 = R, Gamma_{-i} = m^i where m is the two-sided ideal
    generated by the presentation's generators.

    Built over a series ambient only.  The ideal is assembled as the left
    ideal sum(R g) and then checked to be closed under right multiplication
    by the generators; a failure raises ValueError.
    """
    amb = pres.ambient
    if not amb.series:
        raise ValueError("weak-adic filtrations need a series ambient")
    ring = full_span(pres)
    gens = pres.gen_mats()
    m1 = Subspace.from_vectors(
        amb, [amb.encode(amb.mul(b, g))
              for b in ring.basis_matrices() for g in gens])
    for b in m1.basis_matrices():
        for g in gens:
            if not m1.member(amb.mul(b, g)):
                raise ValueError("generated left ideal is not two-sided")
    layers = {0: ring, -1: m1}
    for i in range(2, depth + 1):
        layers[-i] = subspace_product(layers[-(i - 1)], m1)
    return Filtration("weak-adic", amb, layers,
                      name=f"weak-adic:{pres.name}")


def two_sided_closure(pres, seeds):
    """Two-sided ideal generated by the seed matrices, as a subspace.

    Returns (ideal, closed_degree).  Products that would exceed the degree
    cap are discarded, so the result is exact only through closed_degree =
    degcap - max generator degree (everything in series mode); it is a
    genuine subset of the ideal in all degrees.  Exactness through
    closed_degree additionally needs the ideal to be spanned degreewise by
    generator-times-word products of no larger degree, which holds for the
    monomial-shaped ideals this toolkit works with.
    """
    amb = pres.ambient
    gens = pres.gen_mats()
    gmax = max(g.degree() for g in gens)
    cur = span(amb, seeds)
    frontier = cur.basis_matrices()
    while frontier:
        fresh = []
        rows = list(cur.rows)
        for m in frontier:
            for g in gens:
                for left, right in ((g, m), (m, g)):
                    try:
                        p = amb.mul(left, right)
                    except DegreeOverflowError:
                        continue
                    if not cur.member(p) and all(
                            amb.encode(p) != amb.encode(q) for q in fresh):
                        fresh.append(p)
        if not fresh:
            break
        cur = Subspace.from_vectors(
            amb, rows + [amb.encode(p) for p in fresh])
        frontier = fresh
    closed_degree = amb.degcap if amb.series else amb.degcap - gmax
    return cur, closed_degree


@dataclass(frozen=True)
class QuotientFiltration:
    filtration: Filtration
    context: QuotientContext
    ideal: Subspace
    closed_degree: int


def induced_quotient_filtration(pres, seeds, upto, base=None):
    """Image of the standard filtration in R/(two-sided ideal of seeds).

    Layer images are canonical representatives inside the same ambient.  A
    layer whose basis reaches beyond the ideal's trusted degree raises
    TruncationError rather than reporting an unreliable dimension.
    """
    ideal, closed_degree = two_sided_closure(pres, seeds)
    ctx = QuotientContext(pres.ambient, ideal)
    filt = base if base is not None else standard_filtration(pres, upto)
    layers = {}
    for n in range(filt.lo, upto + 1):
        lay = filt.layer(n)
        if lay.maxdeg() > closed_degree:
            raise TruncationError(
                f"quotient layer {n} reaches degree {lay.maxdeg()} but the "
                f"ideal is only saturated through degree {closed_degree}; "
                f"rebuild with a larger degree cap")
        layers[n] = ctx.image(lay)
    out = Filtration(filt.kind, pres.ambient, layers,
                     name=f"quotient:{pres.name}")
    return QuotientFiltration(out, ctx, ideal, closed_degree)


def translate(sub, mat, side):
    """Span of b*mat (side 'right') or mat*b (side 'left') over basis b."""
    amb = sub.ambient
    if side == "left":
        prods = [amb.mul(mat, b) for b in sub.basis_matrices()]
    elif side == "right":
        prods = [amb.mul(b, mat) for b in sub.basis_matrices()]
    else:
        raise ValueError("side must be 'left' or 'right'")
    return span(amb, prods)


def induced_good_filtration(ring_filt, generators, side, lo, hi, name=""):
    """Module filtration Omega_n = sum_i Gamma_{n-s_i} m_i.

    generators: list of (matrix, shift) pairs.  side 'left' means the ring
    acts on the left, so Omega_n collects Gamma_{n-s} * m; 'right' collects
    m * Gamma_{n-s}.  Ring layers are taken from ring_filt; asking beyond
    its window raises WindowExceeded.
    """
    amb = ring_filt.ambient
    layers = {}
    for n in range(lo, hi + 1):
        acc = zero_space(amb)
        for mat, shift in generators:
            gam = ring_filt.layer(n - shift)
            if side == "left":
                part = translate(gam, mat, "right")
            else:
                part = translate(gam, mat, "left")
            acc = sum_spaces(acc, part)
        layers[n] = acc
    return Filtration(ring_filt.kind, amb, layers, name=name)


def intrinsic_module_filtration(module_span, ring_filt, lo, hi, name=""):
    """Lambda_n = M intersect Gamma_n for a module sitting inside the ring."""
    layers = {n: intersect(module_span, ring_filt.layer(n))
              for n in range(lo, hi + 1)}
    return Filtration(ring_filt.kind, ring_filt.ambient, layers, name=name)


@dataclass(frozen=True)
class OffsetReport:
    a_name: str
    b_name: str
    a_in_b: object
    b_in_a: object
    equivalent: bool
    offset: object
    max_offset: int
    pairs_checked: int

    def to_json(self):
        return {"a": self.a_name, "b": self.b_name, "a_in_b": self.a_in_b,
                "b_in_a": self.b_in_a, "equivalent": self.equivalent,
                "offset": self.offset, "max_offset": self.max_offset,
                "pairs_checked": self.pairs_checked}


def _contains_at_offset(fa, fb, q, lo, hi):
    """Whether A_n <= B_{n+q} for every n in the fixed range."""
    for n in range(lo, hi + 1):
        if not fb.layer(n + q).contains(fa.layer(n)):
            return False
    return True


def equivalence_offset(fa, fb, max_offset=3):
    """Smallest q with A_n <= B_{n+q} and B_n <= A_{n+q} on a fixed range.

    Every offset is tested on the same index range, cut down so that all
    shifted layers up to max_offset are computed; checking each q on
    whatever pairs happen to survive would let large offsets pass vacuously
    at the window edge.  A side with no admissible q is reported as None,
    which witnesses divergence on the compared range, not a proof for all
    n.  Choose the window deep enough that the range [lo, hi] reaches past
    where divergence is expected to show.
    """
    lo = max(fa.lo, fb.lo)
    hi = min(fa.hi, fb.hi) - max_offset
    if hi < lo:
        raise ValueError(
            f"windows too small to compare at offsets up to {max_offset}")
    a_in_b = b_in_a = None
    for q in range(max_offset + 1):
        if _contains_at_offset(fa, fb, q, lo, hi):
            a_in_b = q
            break
    for q in range(max_offset + 1):
        if _contains_at_offset(fb, fa, q, lo, hi):
            b_in_a = q
            break
    equivalent = a_in_b is not None and b_in_a is not None
    return OffsetReport(fa.name, fb.name, a_in_b, b_in_a, equivalent,
                        max(a_in_b, b_in_a) if equivalent else None,
                        max_offset, hi - lo + 1)


@dataclass(frozen=True)
class GoodnessReport:
    side: str
    submultiplicative_ok: bool
    first_violation: object
    stable_from: object
    pairs_checked: int
    pairs_skipped: int

    def to_json(self):
        return {"side": self.side,
                "submultiplicative_ok": self.submultiplicative_ok,
                "first_violation": self.first_violation,
                "stable_from": self.stable_from,
                "pairs_checked": self.pairs_checked,
                "pairs_skipped": self.pairs_skipped}


def _action_product(ring_layer, mod_layer, side):
    if side == "left":
        return subspace_product(ring_layer, mod_layer)
    return subspace_product(mod_layer, ring_layer)


def is_good(ring_filt, mod_filt, side="left"):
    """Check Gamma_a Omega_b <= Omega_{a+b} and locate a stability bound.

    stable_from is the least module index n0 such that every checkable
    product with the deeper argument past n0 lands exactly on the target
    layer; None when no such bound shows up in the window.
    """
    amb = ring_filt.ambient
    if ring_filt.kind == "ascending":
        ring_idx = [a for a in range(max(ring_filt.lo, 0), ring_filt.hi + 1)]
    else:
        ring_idx = [a for a in range(ring_filt.lo, 1)]
    checked = skipped = 0
    violation = None
    ok = True
    exact = {}
    for a in ring_idx:
        ga = ring_filt.layer(a)
        for b in range(mod_filt.lo, mod_filt.hi + 1):
            if not mod_filt.known(a + b):
                continue
            ob = mod_filt.layer(b)
            if (not amb.series and
                    ga.maxdeg() + max(ob.maxdeg(), 0) > amb.degcap):
                skipped += 1
                continue
            target = mod_filt.layer(a + b)
            prod = _action_product(ga, ob, side)
            checked += 1
            if not target.contains(prod):
                ok = False
                if violation is None:
                    violation = f"Gamma_{a} * Omega_{b} not inside " \
                                f"Omega_{a + b}"
            exact[(a, b)] = (prod == target)
    stable_from = None
    if ok:
        if ring_filt.kind == "ascending":
            for n0 in range(mod_filt.lo, mod_filt.hi + 1):
                pairs = [(a, b) for (a, b) in exact
                         if a >= 1 and b >= n0]
                if pairs and all(exact[p] for p in pairs):
                    stable_from = n0
                    break
        else:
            for n0 in range(0, mod_filt.lo - 1, -1):
                pairs = [(a, b) for (a, b) in exact
                         if a <= -1 and b <= n0]
                if pairs and all(exact[p] for p in pairs):
                    stable_from = n0
                    break
    return GoodnessReport(side, ok, violation, stable_from, checked, skipped)


@dataclass(frozen=True)
class AxiomReport:
    nested_ok: bool
    unit_ok: bool
    multiplicative_ok: bool
    pairs_checked: int
    pairs_skipped: int
    detail: object

    @property
    def ok(self):
        return self.nested_ok and self.unit_ok and self.multiplicative_ok

    def to_json(self):
        return {"nested_ok": self.nested_ok, "unit_ok": self.unit_ok,
                "multiplicative_ok": self.multiplicative_ok,
                "pairs_checked": self.pairs_checked,
                "pairs_skipped": self.pairs_skipped, "detail": self.detail}


def verify_filtration_axioms(filt, unital=True):
    """Nesting, unit membership, and submultiplicativity on the window."""
    amb = filt.ambient
    detail = None
    nested_ok = True
    for n in range(filt.lo, filt.hi):
        if not filt.layer(n + 1).contains(filt.layer(n)):
            nested_ok = False
            detail = f"layer {n} not inside layer {n + 1}"
            break
    unit_ok = True
    if unital:
        unit_ok = filt.layer(0).member(amb.one())
        if not unit_ok and detail is None:
            detail = "unit missing from layer 0"
    checked = skipped = 0
    mult_ok = True
    if filt.kind == "ascending":
        idx = range(max(filt.lo, 0), filt.hi + 1)
    else:
        idx = range(filt.lo, 1)
    for m in idx:
        for n in idx:
            if not filt.known(m + n):
                skipped += 1
                continue
            lm, ln = filt.layer(m), filt.layer(n)
            if (not amb.series and
                    max(lm.maxdeg(), 0) + max(ln.maxdeg(), 0) > amb.degcap):
                skipped += 1
                continue
            checked += 1
            if not filt.layer(m + n).contains(subspace_product(lm, ln)):
                mult_ok = False
                if detail is None:
                    detail = f"layer {m} * layer {n} escapes layer {m + n}"
    return AxiomReport(nested_ok, unit_ok, mult_ok, checked, skipped, detail)
