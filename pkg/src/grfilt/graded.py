"""Associated graded of a filtration, truncated to the computed window.

The degree-m piece is Gamma_m / Gamma_{m-1}.  Cosets are represented by
canonical vectors: reduce a layer element against the RREF basis of the
layer below, then express it in the echelon complement of that layer.  Two
elements of the same coset always produce identical coordinates, so piece
arithmetic is exact.

Products of pieces land in the piece at the summed degree.  Asking for a
product outside the window raises WindowExceeded rather than truncating,
and relation checks report exactly which degrees they covered.
"""

from dataclasses import dataclass

from .linalg import reduce_by_rref, rref
from .linspace import complement_section
from .filtration import WindowExceeded


@dataclass(frozen=True)
class GrElement:
    degree: int
    coords: tuple

    def is_zero(self):
        return not any(self.coords)

    def scale(self, c):
        return GrElement(self.degree, tuple(c * v for v in self.coords))

    def add(self, other):
        if other.degree != self.degree:
            raise ValueError("cannot add pieces of different degrees")
        return GrElement(self.degree,
                         tuple(a + b for a, b in zip(self.coords,
                                                     other.coords)))


class GradedTrunc:
    def __init__(self, filt):
        self.filt = filt
        self.ambient = filt.ambient
        if filt.kind == "ascending":
            self.degrees = list(range(max(filt.lo, 0), filt.hi + 1))
            self.gen_degree = 1
        else:
            self.degrees = list(range(filt.lo + 1, 1))
            self.gen_degree = -1
        self.sections = {}
        for m in self.degrees:
            self.sections[m] = complement_section(filt.layer(m),
                                                  filt.layer(m - 1))

    def piece(self, m):
        if m not in self.sections:
            raise WindowExceeded(
                f"graded piece {m} outside window "
                f"[{self.degrees[0]}, {self.degrees[-1]}]")
        return self.sections[m]

    def piece_dims(self):
        return {m: self.sections[m].dim for m in self.degrees}

    def piece_basis(self, m):
        sec = self.piece(m)
        zero, one = self.ambient.field.zero, self.ambient.field.one
        out = []
        for i in range(sec.dim):
            coords = [zero] * sec.dim
            coords[i] = one
            out.append(GrElement(m, tuple(coords)))
        return out

    def zero(self, m):
        return GrElement(m, (self.ambient.field.zero,) * self.piece(m).dim)

    def class_of(self, mat, m):
        """Coset of a layer-m element in the degree-m piece."""
        vec = self.ambient.encode(mat)
        lay = self.filt.layer(m)
        if not lay.member_vec(vec):
            raise ValueError(f"element does not lie in layer {m}")
        below = self.filt.layer(m - 1)
        rem = below.reduce(vec)
        coords = self.piece(m).coords_of(rem)
        if coords is None:
            raise ValueError("reduction escaped the echelon complement")
        return GrElement(m, coords)

    def lift(self, el):
        """Canonical representative matrix of a coset."""
        sec = self.piece(el.degree)
        vec = [self.ambient.field.zero] * self.ambient.dim
        for c, row in zip(el.coords, sec.rows):
            if c:
                vec = [a + c * b for a, b in zip(vec, row)]
        return self.ambient.decode(vec)

    def mul(self, e1, e2):
        target = e1.degree + e2.degree
        self.piece(target)
        prod = self.ambient.mul(self.lift(e1), self.lift(e2))
        return self.class_of(prod, target)

    def generator_classes(self, pres):
        """Principal symbols of the presentation's generators."""
        return {nm: self.class_of(g, self.gen_degree)
                for nm, g in pres.gens}

    def one(self):
        return self.class_of(self.ambient.one(), 0)

    def word(self, classes, letters):
        """Product of generator symbols; [] gives the unit coset."""
        if not letters:
            return self.one()
        out = classes[letters[0]]
        for nm in letters[1:]:
            out = self.mul(out, classes[nm])
        return out

    def to_json(self):
        return {"kind": self.filt.kind, "name": self.filt.name,
                "piece_dims": self.piece_dims()}


def check_relation(gr, classes, word_a, word_b=None):
    """Whether two words in the symbols agree (or word_a vanishes)."""
    ea = gr.word(classes, list(word_a))
    if word_b is None:
        return ea.is_zero()
    eb = gr.word(classes, list(word_b))
    return ea.degree == eb.degree and ea.add(eb.scale(
        -gr.ambient.field.one)).is_zero()


def sandwich_zero_sweep(gr, classes, name):
    """Check g * (every piece basis coset) * g == 0 across the window.

    Returns (all_zero, products_checked); degrees whose target piece falls
    outside the window are skipped, not assumed.
    """
    g = classes[name]
    checked = 0
    for m in gr.degrees:
        target = g.degree + m + g.degree
        if target not in gr.sections:
            continue
        for u in gr.piece_basis(m):
            prod = gr.mul(gr.mul(g, u), g)
            checked += 1
            if not prod.is_zero():
                return False, checked
    return True, checked


@dataclass(frozen=True)
class SpanningReport:
    patterns: tuple
    degrees: tuple
    covered: tuple
    all_covered: bool

    def to_json(self):
        return {"patterns": [list(map(list, p)) for p in self.patterns],
                "degrees": list(self.degrees),
                "covered": list(self.covered),
                "all_covered": self.all_covered}


def spanning_check(gr, classes, patterns, degrees=None):
    """Do the pattern families span every piece in the window?

    A pattern (pre, star, post) denotes the elements pre * star^k * post
    for k >= 0.  This certifies statements like "the graded ring is
    generated over k[a] by {1, b, ab}" degree by degree.
    """
    if degrees is None:
        degrees = [m for m in gr.degrees]
    covered = []
    for m in degrees:
        sec = gr.piece(m)
        vecs = []
        for pre, star, post in patterns:
            fixed = len(pre) + len(post)
            k = abs(m) - fixed
            if k < 0:
                continue
            word = list(pre) + [star] * k + list(post)
            if len(word) == 0 and m != 0:
                continue
            el = gr.word(classes, word)
            if el.degree != m:
                raise ValueError("pattern degree bookkeeping is off")
            vecs.append(list(el.coords))
        if sec.dim == 0:
            covered.append(True)
            continue
        if not vecs:
            covered.append(False)
            continue
        dim = len(rref(vecs, gr.ambient.field)[0])
        covered.append(dim == sec.dim)
    return SpanningReport(tuple(tuple(map(tuple, p)) for p in patterns),
                          tuple(degrees), tuple(covered), all(covered))


# ------------------------------------------------------------ ideal chains

@dataclass(frozen=True)
class ChainReport:
    side: str
    words: tuple
    ideal_dims: tuple
    strictly_ascending: bool
    witnesses: tuple
    window: tuple

    def to_json(self):
        return {"side": self.side,
                "words": [list(w) for w in self.words],
                "ideal_dims": list(self.ideal_dims),
                "strictly_ascending": self.strictly_ascending,
                "witnesses": [dict(w) for w in self.witnesses],
                "window": list(self.window)}


def _graded_ideal_pieces(gr, gens, side):
    """Piece-by-piece span of the one-sided ideal generated by gens."""
    pieces = {}
    for m in gr.degrees:
        vecs = []
        for g in gens:
            rest = m - g.degree
            if rest not in gr.sections:
                continue
            for u in gr.piece_basis(rest):
                prod = gr.mul(u, g) if side == "left" else gr.mul(g, u)
                vecs.append(list(prod.coords))
        if vecs:
            rows, pivots = rref(vecs, gr.ambient.field)
        else:
            rows, pivots = (), ()
        pieces[m] = (rows, pivots)
    return pieces


def _piece_member(piece, coords):
    rows, pivots = piece
    return not any(reduce_by_rref(list(coords), rows, pivots))


def ideal_chain_witness(gr, classes, words, side="left"):
    """Strictness certificate for the chain of one-sided ideals generated
    by growing prefixes of the word list.

    Step k uses words[0..k].  The witness for strictness at step k is the
    new generator itself: it must lie outside the previous ideal's piece at
    its own degree.  Dimensions are totals over the window.
    """
    gens = [gr.word(classes, list(w)) for w in words]
    dims = []
    witnesses = []
    strict = True
    prev_pieces = None
    for k in range(len(gens)):
        pieces = _graded_ideal_pieces(gr, gens[:k + 1], side)
        total = sum(len(rows) for rows, _ in pieces.values())
        dims.append(total)
        if k > 0:
            g = gens[k]
            inside = _piece_member(prev_pieces[g.degree], g.coords) \
                if g.degree in prev_pieces else False
            if inside:
                strict = False
            else:
                witnesses.append({"step": k, "degree": g.degree,
                                  "word": list(words[k])})
        prev_pieces = pieces
    return ChainReport(side, tuple(tuple(w) for w in words), tuple(dims),
                       strict, tuple(witnesses),
                       (gr.degrees[0], gr.degrees[-1]))


def verify_chain_report(gr, classes, report):
    """Recheck every witness of a chain report from scratch."""
    words = [list(w) for w in report.words]
    gens = [gr.word(classes, w) for w in words]
    for wit in report.witnesses:
        k = wit["step"]
        pieces = _graded_ideal_pieces(gr, gens[:k], report.side)
        g = gens[k]
        if g.degree in pieces and _piece_member(pieces[g.degree], g.coords):
            return False
    return True


def rees_dims(filt, upto):
    """Dimensions of the layered sum, degree by degree (partial sums)."""
    out = []
    total = 0
    for n in range(upto + 1):
        total += filt.layer(n if filt.kind == "ascending" else -n).dim
        out.append(total)
    return out
