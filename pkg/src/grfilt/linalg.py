"""Exact dense linear algebra over a field.

Vectors are lists of field elements.  rref produces the canonical reduced
row echelon form (pivot entries 1, pivot columns cleared, rows sorted by
pivot), which is what makes Subspace equality a plain tuple comparison.

For rationals there is a fraction-free forward pass (rows rescaled to
primitive integer vectors after each elimination step) that keeps numerator
growth down on larger instances; both paths return identical output.
"""

from fractions import Fraction
from math import gcd

from .fields import QQ


def _first_nonzero(row):
    for j, v in enumerate(row):
        if v:
            return j
    return None


def _primitive(row):
    """Rescale a rational row to coprime integers (sign-normalized)."""
    den = 1
    for v in row:
        if v:
            den = den * v.denominator // gcd(den, v.denominator)
    ints = [int(v * den) for v in row]
    g = 0
    for v in ints:
        g = gcd(g, abs(v))
    if g > 1:
        ints = [v // g for v in ints]
    lead = next((v for v in ints if v), 1)
    if lead < 0:
        ints = [-v for v in ints]
    return [Fraction(v) for v in ints]


def rref(rows, field, fraction_free=None):
    """Canonical RREF.  Returns (rows, pivots), rows sorted by pivot column.

    fraction_free defaults to automatic: enabled over Q when the instance is
    big enough to care.
    """
    mat = [list(r) for r in rows if any(r)]
    if not mat:
        return [], []
    ncols = len(mat[0])
    if fraction_free is None:
        fraction_free = field == QQ and len(mat) * ncols > 4000
    if fraction_free and field == QQ:
        mat = [_primitive(r) for r in mat]

    pivots = []
    rank = 0
    for col in range(ncols):
        sel = None
        for i in range(rank, len(mat)):
            if mat[i][col]:
                sel = i
                break
        if sel is None:
            continue
        mat[rank], mat[sel] = mat[sel], mat[rank]
        inv = field.one / mat[rank][col]
        if inv != field.one:
            mat[rank] = [v * inv for v in mat[rank]]
        for i in range(len(mat)):
            if i != rank and mat[i][col]:
                c = mat[i][col]
                mat[i] = [a - c * b for a, b in zip(mat[i], mat[rank])]
                if fraction_free and i > rank and field == QQ:
                    mat[i] = _primitive(mat[i]) if any(mat[i]) else mat[i]
        pivots.append(col)
        rank += 1
        if rank == len(mat):
            break
    return [tuple(r) for r in mat[:rank]], pivots


def reduce_by_rref(vec, rows, pivots):
    """Residual of vec modulo the row space (rows must be canonical RREF)."""
    v = list(vec)
    for row, p in zip(rows, pivots):
        c = v[p]
        if c:
            v = [a - c * b for a, b in zip(v, row)]
    return v


def coords_in_rref(vec, rows, pivots):
    """Coefficients of vec over RREF rows, or None if not in the span."""
    coeffs = [vec[p] for p in pivots]
    residual = reduce_by_rref(vec, rows, pivots)
    if any(residual):
        return None
    return coeffs


def nullspace(rows, field):
    """Basis of {x : M x = 0} where rows are the equations of M."""
    if not rows:
        raise ValueError("nullspace needs at least the column count; pass "
                         "explicit rows (possibly zero rows)")
    ncols = len(rows[0])
    red, pivots = rref(rows, field)
    pivset = set(pivots)
    basis = []
    for j in range(ncols):
        if j in pivset:
            continue
        v = [field.zero] * ncols
        v[j] = field.one
        for row, p in zip(red, pivots):
            if row[j]:
                v[p] = -row[j]
        basis.append(tuple(v))
    return basis


def kernel_combos(vectors, field):
    """Combinations c with sum c_i * vectors_i = 0 (vectors as columns)."""
    if not vectors:
        return []
    ncoords = len(vectors[0])
    if ncoords == 0:
        out = []
        for i in range(len(vectors)):
            v = [field.zero] * len(vectors)
            v[i] = field.one
            out.append(tuple(v))
        return out
    rows = [[v[i] for v in vectors] for i in range(ncoords)]
    return nullspace(rows, field)


class SpanTracker:
    """Incremental span with expression of members as tagged combinations.

    add() keeps rows forward-reduced (leading column unique per row), so
    express() can read off the combination while reducing.
    """

    def __init__(self, field, ncols):
        self.field = field
        self.ncols = ncols
        self.rows = {}      # leading column -> (vector, combo dict)

    def _reduce(self, vec, combo):
        vec = list(vec)
        while True:
            lead = _first_nonzero(vec)
            if lead is None or lead not in self.rows:
                return vec, combo, lead
            row, rcombo = self.rows[lead]
            c = vec[lead]
            vec = [a - c * b for a, b in zip(vec, row)]
            for tag, coef in rcombo.items():
                s = combo.get(tag, self.field.zero) - c * coef
                if s:
                    combo[tag] = s
                else:
                    combo.pop(tag, None)
        # unreachable

    def add(self, vec, tag):
        """Insert a tagged vector; True if it enlarged the span."""
        vec, combo, lead = self._reduce(vec, {tag: self.field.one})
        if lead is None:
            return False
        inv = self.field.one / vec[lead]
        vec = [v * inv for v in vec]
        combo = {t: c * inv for t, c in combo.items()}
        self.rows[lead] = (tuple(vec), combo)
        return True

    def express(self, vec):
        """{tag: coeff} with vec = sum coeff * tagged vector, or None."""
        vec, combo, lead = self._reduce(vec, {})
        if lead is not None:
            return None
        return {t: -c for t, c in combo.items()}

    @property
    def dim(self):
        return len(self.rows)
