"""Catalog of the worked example rings and their structural checks.

Every ring here is a subalgebra of a matrix ring over k[x] or k[x,y],
described by generators plus a closed-form shape predicate.  The shape is
what the generators are supposed to span in each degree; tests confirm the
two views agree on truncated windows.

Series-mode entries model the x-adically truncated ring: an ambient with
series=True and degree cap d is M_n(k[x]/(x^(d+1))), so products reduce
modulo x^(d+1) by ring structure rather than by silent truncation.
"""

from dataclasses import dataclass

from .fields import QQ
from .linalg import rref
from .linspace import Ambient, QuotientContext
from .filtration import AlgebraPresentation, two_sided_closure
from .poly import Poly, PolyMatrix


CATALOG = ("R_2x2", "S", "T", "R_prime", "R_hat", "C_diag")


def _unit_mat(n, arity, i, j, p):
    z = Poly.zero(arity)
    rows = [[z] * n for _ in range(n)]
    rows[i][j] = p
    return PolyMatrix(rows)


def _xvar(arity, fld):
    return Poly.variable(arity, 0, fld.one)


def _yvar(arity, fld):
    return Poly.variable(arity, 1, fld.one)


def _y0_part(p):
    """Terms of a two-variable polynomial with no y factor."""
    return Poly(p.arity, {e: c for e, c in p.terms.items() if e[1] == 0})


def _sub_x_squared(p, series_cap=None):
    if p.is_zero():
        return p
    one = next(c / c for c in p.terms.values())
    q = p.substitute({0: Poly.variable(p.arity, 0, one) ** 2})
    if series_cap is not None:
        q = q.truncate(series_cap)
    return q


@dataclass
class ExampleRing:
    name: str
    ambient: Ambient
    pres: AlgebraPresentation
    description: str
    elements: dict
    shape_member: object
    in_catalog: bool = True

    def el(self, name):
        return self.elements[name]


def _shape_r2x2(amb):
    """Membership in {[[f(x), g(x)], [0, f(x^2)]]}."""
    cap = amb.degcap if amb.series else None

    def check(mat):
        if not mat.entry(1, 0).is_zero():
            return False
        f = mat.entry(0, 0)
        d = mat.entry(1, 1).truncate(cap) if cap is not None else \
            mat.entry(1, 1)
        return d == _sub_x_squared(f, cap)
    return check


def _shape_s(amb):
    """R-shape modulo y: arbitrary y-multiples are allowed everywhere."""
    def check(mat):
        if not _y0_part(mat.entry(1, 0)).is_zero():
            return False
        f = _y0_part(mat.entry(0, 0))
        return _y0_part(mat.entry(1, 1)) == _sub_x_squared(f)
    return check


def _shape_t(amb):
    """y-free part must be [[f, g, h], [0, f(x^2), l], [0, 0, f]]."""
    def check(mat):
        for (i, j) in ((1, 0), (2, 0), (2, 1)):
            if not _y0_part(mat.entry(i, j)).is_zero():
                return False
        f = _y0_part(mat.entry(0, 0))
        if _y0_part(mat.entry(2, 2)) != f:
            return False
        return _y0_part(mat.entry(1, 1)) == _sub_x_squared(f)
    return check


def _shape_c_diag(amb):
    cap = amb.degcap if amb.series else None

    def check(mat):
        if not (mat.entry(0, 1).is_zero() and mat.entry(1, 0).is_zero()):
            return False
        f = mat.entry(0, 0)
        d = mat.entry(1, 1).truncate(cap) if cap is not None else \
            mat.entry(1, 1)
        return d == _sub_x_squared(f, cap)
    return check


def make(name, degcap=None, field=QQ):
    """Build a catalog ring.  degcap defaults to a size adequate for the
    standard windows used in the tests and reports."""
    if name in ("R_2x2", "R_perturbed"):
        cap = 12 if degcap is None else degcap
        amb = Ambient(2, 1, cap, field)
        x = _xvar(1, field)
        alpha = PolyMatrix([[x, Poly.zero(1)], [Poly.zero(1), x * x]])
        beta = _unit_mat(2, 1, 0, 1, Poly.const(1, field.one))
        xbeta = _unit_mat(2, 1, 0, 1, x)
        if name == "R_2x2":
            pres = AlgebraPresentation(
                "R_2x2", amb, (("alpha", alpha), ("beta", beta)))
            return ExampleRing(
                name, amb, pres,
                "triangular subring {[[f(x), g(x)], [0, f(x^2)]]} of "
                "M_2(k[x]); generators alpha = diag(x, x^2) and beta = e12",
                {"alpha": alpha, "beta": beta, "e12": beta, "xe12": xbeta},
                _shape_r2x2(amb))
        pres = AlgebraPresentation(
            "R_perturbed", amb, (("alpha", alpha), ("xbeta", xbeta)))
        return ExampleRing(
            name, amb, pres,
            "same shape with the nilpotent generator moved up one degree: "
            "generators alpha and x*e12; misses the constant at e12",
            {"alpha": alpha, "beta": beta, "e12": beta, "xe12": xbeta,
             "x2e12": _unit_mat(2, 1, 0, 1, x * x)},
            _shape_r2x2(amb), in_catalog=False)
    if name == "S":
        cap = 6 if degcap is None else degcap
        amb = Ambient(2, 2, cap, field)
        x, y = _xvar(2, field), _yvar(2, field)
        z = Poly.zero(2)
        alpha = PolyMatrix([[x, z], [z, x * x]])
        beta = _unit_mat(2, 2, 0, 1, Poly.const(2, field.one))
        ygens = [(f"ye{i + 1}{j + 1}", _unit_mat(2, 2, i, j, y))
                 for i in range(2) for j in range(2)]
        pres = AlgebraPresentation(
            "S", amb, (("alpha", alpha), ("beta", beta)) + tuple(ygens))
        return ExampleRing(
            name, amb, pres,
            "two-variable thickening: triangular x-shape plus y*M_2(k[x,y])",
            {"alpha": alpha, "beta": beta, **dict(ygens)},
            _shape_s(amb))
    if name == "T":
        cap = 6 if degcap is None else degcap
        amb = Ambient(3, 2, cap, field)
        x, y = _xvar(2, field), _yvar(2, field)
        z = Poly.zero(2)
        alpha = PolyMatrix([[x, z, z], [z, x * x, z], [z, z, x]])
        one2 = Poly.const(2, field.one)
        eij = {(i, j): _unit_mat(3, 2, i, j, one2)
               for (i, j) in ((0, 1), (0, 2), (1, 2))}
        ygens = [(f"ye{i + 1}{j + 1}", _unit_mat(3, 2, i, j, y))
                 for i in range(3) for j in range(3)]
        pres = AlgebraPresentation(
            "T", amb,
            (("alpha", alpha), ("e12", eij[(0, 1)]), ("e13", eij[(0, 2)]),
             ("e23", eij[(1, 2)])) + tuple(ygens))
        return ExampleRing(
            name, amb, pres,
            "3x3 staircase: diag(f(x), f(x^2), f(x)) plus free upper "
            "triangle over k[x], plus y*M_3(k[x,y])",
            {"alpha": alpha, "e12": eij[(0, 1)], "e13": eij[(0, 2)],
             "e23": eij[(1, 2)], **dict(ygens)},
            _shape_t(amb))
    if name in ("R_prime", "R_hat"):
        cap = 9 if degcap is None else degcap
        amb = Ambient(2, 1, cap, field, series=True)
        x = _xvar(1, field)
        alpha = PolyMatrix([[x, Poly.zero(1)], [Poly.zero(1), x * x]])
        beta = _unit_mat(2, 1, 0, 1, Poly.const(1, field.one))
        pres = AlgebraPresentation(name, amb, (("alpha", alpha),
                                               ("beta", beta)))
        what = ("localized at the ideal (alpha, beta)"
                if name == "R_prime" else "x-adically completed")
        return ExampleRing(
            name, amb, pres,
            f"triangular ring {what}, modeled as the finite quotient over "
            f"k[x]/(x^{cap + 1})",
            {"alpha": alpha, "beta": beta, "e12": beta},
            _shape_r2x2(amb))
    if name == "C_diag":
        cap = 12 if degcap is None else degcap
        amb = Ambient(2, 1, cap, field)
        x = _xvar(1, field)
        c = PolyMatrix([[x, Poly.zero(1)], [Poly.zero(1), x * x]])
        pres = AlgebraPresentation("C_diag", amb, (("c", c),))
        return ExampleRing(
            name, amb, pres,
            "commutative diagonal subring {diag(c(x), c(x^2))}, isomorphic "
            "to k[x]; the triangular ring is module-finite over it",
            {"c": c},
            _shape_c_diag(amb))
    raise KeyError(f"unknown example ring {name!r}; "
                   f"catalog: {', '.join(CATALOG)} (+ R_perturbed)")


def diagonal_embed(amb, c):
    """Embed a one-variable polynomial as diag(c(x), c(x^2))."""
    z = Poly.zero(c.arity)
    return PolyMatrix([[c, z], [z, _sub_x_squared(
        c, amb.degcap if amb.series else None)]])


# ---------------------------------------------------------------- op twist

def op_transpose(mat):
    """Antidiagonal transpose tau(M)[i][j] = M[n-1-j][n-1-i].

    tau is an anti-automorphism of the full matrix ring; what is specific
    to a subring is whether tau maps it into itself.
    """
    n = mat.n
    return PolyMatrix([[mat.entry(n - 1 - j, n - 1 - i) for j in range(n)]
                       for i in range(n)])


def op_involution_report(ring, word_len=3):
    """Check tau preserves the shape on all short words and reverses
    products on all generator pairs."""
    amb = ring.ambient
    gens = ring.pres.gen_mats()
    words = [amb.one()]
    frontier = [amb.one()]
    for _ in range(word_len):
        frontier = [amb.mul(w, g) for w in frontier for g in gens]
        words.extend(frontier)
    shape_ok = all(ring.shape_member(op_transpose(w)) for w in words)
    anti_ok = all(
        op_transpose(amb.mul(a, b)) == amb.mul(op_transpose(b),
                                               op_transpose(a))
        for a in gens for b in gens)
    return {"shape_preserved": shape_ok, "anti_multiplicative": anti_ok,
            "words_checked": len(words)}


# ------------------------------------------------- quotient comparison kit

def y_kill(mat):
    """Entrywise y -> 0, a ring map when the y-multiples form an ideal."""
    return PolyMatrix([[_y0_part(p) for p in row] for row in mat.rows])


def collapse_to_one_variable(mat):
    """Reinterpret a y-free two-variable matrix inside M_n(k[x])."""
    out = []
    for row in mat.rows:
        new = []
        for p in row:
            if any(e[1] for e in p.terms):
                raise ValueError("matrix still involves y")
            new.append(Poly(1, {(e[0],): c for e, c in p.terms.items()}))
        out.append(new)
    return PolyMatrix(out)


def right_ideal_escape_witness(ring):
    """Product showing e13*T + e23*T is not a left ideal of T.

    Left-multiplying e13 by y*e31 lands in row 3, while the right ideal
    generated by e13 and e23 lives entirely in rows 1 and 2.
    """
    amb = ring.ambient
    ye31 = ring.el("ye31")
    prod = amb.mul(ye31, ring.el("e13"))
    in_rows_12 = all(prod.entry(2, j).is_zero() for j in range(3))
    return prod, in_rows_12


@dataclass(frozen=True)
class IsoReport:
    consistent: bool
    dim_a: int
    dim_b: int
    dim_joint: int
    words_checked: int
    max_len: int

    def to_json(self):
        return {"consistent": self.consistent, "dim_a": self.dim_a,
                "dim_b": self.dim_b, "dim_joint": self.dim_joint,
                "words_checked": self.words_checked, "max_len": self.max_len}


class MulSystem:
    """Evaluation context for words: an ambient plus a product map, which
    for quotient systems reduces into canonical representatives."""

    def __init__(self, ambient, one, mul):
        self.ambient = ambient
        self.one = one
        self.mul = mul

    @classmethod
    def plain(cls, ambient):
        return cls(ambient, ambient.one(), ambient.mul)

    @classmethod
    def quotient(cls, ctx):
        return cls(ctx.ambient, ctx.reduce_mat(ctx.ambient.one()), ctx.mul)


def quotient_iso_check(sys_a, sys_b, pairs, max_len=4):
    """Does elt_a -> elt_b extend to an algebra isomorphism of word spans?

    Evaluates every word in both systems and spans the joined vectors
    (value in A concatenated with value in B).  The correspondence extends
    to a well-defined bijective multiplicative linear map between the word
    spans iff the joint span has the same dimension as each side alone.
    """
    if sys_a.ambient.field != sys_b.ambient.field:
        raise ValueError("systems must share a coefficient field")
    fld = sys_a.ambient.field
    level = [(sys_a.one, sys_b.one)]
    all_words = list(level)
    for _ in range(max_len):
        level = [(sys_a.mul(a, ga), sys_b.mul(b, gb))
                 for (a, b) in level for (ga, gb) in pairs]
        all_words.extend(level)
    vecs_a = [sys_a.ambient.encode(a) for a, _ in all_words]
    vecs_b = [sys_b.ambient.encode(b) for _, b in all_words]
    joint = [tuple(va) + tuple(vb) for va, vb in zip(vecs_a, vecs_b)]
    dim_a = len(rref(list(vecs_a), fld)[0])
    dim_b = len(rref(list(vecs_b), fld)[0])
    dim_joint = len(rref(joint, fld)[0])
    consistent = dim_joint == dim_a == dim_b
    return IsoReport(consistent, dim_a, dim_b, dim_joint,
                     len(all_words), max_len)


def staircase_mod_y(ring_t, degcap=None, fld=QQ):
    """The y-free model T0 of the staircase ring inside M_3(k[x]).

    Passing to y -> 0 entrywise is the quotient by the ideal of y-multiples;
    it is multiplicative because that set absorbs products on both sides.
    """
    cap = ring_t.ambient.degcap if degcap is None else degcap
    amb = Ambient(3, 1, cap, fld)
    gens = tuple(
        (nm, collapse_to_one_variable(y_kill(ring_t.el(nm))))
        for nm in ("alpha", "e12", "e13", "e23"))
    pres = AlgebraPresentation("T0", amb, gens)
    return pres


def staircase_quotient_context(ring_t, degcap=12, fld=QQ):
    """Quotient of T0 by the two-sided ideal generated by e13 and e23.

    Returns (presentation of T0, quotient context, ideal, closed_degree).
    """
    pres = staircase_mod_y(ring_t, degcap, fld)
    ideal, closed = two_sided_closure(
        pres, [pres.gen("e13"), pres.gen("e23")])
    return pres, QuotientContext(pres.ambient, ideal), ideal, closed
