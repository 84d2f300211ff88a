"""Sparse exact polynomials and square polynomial matrices.

A Poly is a sparse map from exponent vectors (length = arity, 1 or 2) to
nonzero field elements.  A PolyMatrix is an n x n grid of Polys of equal
arity.  Both are immutable value objects: every operation returns a fresh
instance and never mutates inputs, so they can be hashed, cached, and shared
freely.  Coefficient arithmetic is whatever the field elements implement;
nothing here ever constructs a bare int coefficient.
"""


class Poly:
    __slots__ = ("arity", "terms")

    def __init__(self, arity, terms=None):
        self.arity = arity
        clean = {}
        if terms:
            for e, c in terms.items():
                if len(e) != arity:
                    raise ValueError(f"exponent {e} has wrong arity")
                if any(k < 0 for k in e):
                    raise ValueError(f"negative exponent in {e}")
                if c:
                    clean[tuple(e)] = c
        self.terms = clean

    # -------------------------------------------------------- constructors

    @classmethod
    def zero(cls, arity):
        return cls(arity, {})

    @classmethod
    def const(cls, arity, c):
        return cls(arity, {(0,) * arity: c})

    @classmethod
    def variable(cls, arity, index, one):
        e = [0] * arity
        e[index] = 1
        return cls(arity, {tuple(e): one})

    @classmethod
    def monomial(cls, arity, expo, c):
        return cls(arity, {tuple(expo): c})

    # -------------------------------------------------------------- queries

    def is_zero(self):
        return not self.terms

    def degree(self):
        """Total degree; -1 for the zero polynomial."""
        if not self.terms:
            return -1
        return max(sum(e) for e in self.terms)

    def coeff(self, expo):
        return self.terms.get(tuple(expo))

    # ------------------------------------------------------------ operators

    def __add__(self, other):
        self._match(other)
        terms = dict(self.terms)
        for e, c in other.terms.items():
            s = terms.get(e)
            s = c if s is None else s + c
            if s:
                terms[e] = s
            else:
                terms.pop(e, None)
        return Poly(self.arity, terms)

    def __sub__(self, other):
        return self + (-other)

    def __neg__(self):
        return Poly(self.arity, {e: -c for e, c in self.terms.items()})

    def __mul__(self, other):
        self._match(other)
        terms = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                s = terms.get(e)
                prod = c1 * c2
                s = prod if s is None else s + prod
                if s:
                    terms[e] = s
                else:
                    terms.pop(e, None)
        return Poly(self.arity, terms)

    def __pow__(self, k):
        if k < 1:
            raise ValueError("Poly powers need k >= 1")
        out = self
        for _ in range(k - 1):
            out = out * self
        return out

    def scale(self, c):
        if not c:
            return Poly.zero(self.arity)
        return Poly(self.arity, {e: c * v for e, v in self.terms.items()})

    def substitute(self, mapping):
        """Ring-map images of variables: mapping[i] replaces variable i.

        Unmapped variables are left alone.  This computes an algebra
        homomorphism, e.g. {0: x**2} sends f(x) to f(x^2).
        """
        out = Poly.zero(self.arity)
        for e, c in self.terms.items():
            kept = tuple(0 if i in mapping else k for i, k in enumerate(e))
            factor = Poly(self.arity, {kept: c})
            for i, k in enumerate(e):
                if i in mapping and k > 0:
                    factor = factor * (mapping[i] ** k)
            out = out + factor
        return out

    def truncate(self, maxdeg):
        """Drop all terms of total degree above maxdeg."""
        return Poly(self.arity,
                    {e: c for e, c in self.terms.items() if sum(e) <= maxdeg})

    # ------------------------------------------------------------- plumbing

    def _match(self, other):
        if not isinstance(other, Poly) or other.arity != self.arity:
            raise TypeError("arity mismatch")

    def __eq__(self, other):
        return (isinstance(other, Poly) and other.arity == self.arity
                and other.terms == self.terms)

    def __bool__(self):
        return bool(self.terms)

    def __hash__(self):
        return hash((self.arity, frozenset(self.terms.items())))

    def __repr__(self):
        if not self.terms:
            return "0"
        names = "xy"
        bits = []
        for e in sorted(self.terms, key=lambda e: (sum(e), e)):
            c = self.terms[e]
            mono = "".join(
                f"{names[i]}" + (f"^{k}" if k > 1 else "")
                for i, k in enumerate(e) if k)
            if not mono:
                bits.append(str(c))
            elif str(c) == "1":
                bits.append(mono)
            else:
                bits.append(f"{c}*{mono}")
        return " + ".join(bits)


class PolyMatrix:
    __slots__ = ("n", "arity", "rows")

    def __init__(self, rows):
        rows = tuple(tuple(r) for r in rows)
        n = len(rows)
        if any(len(r) != n for r in rows):
            raise ValueError("matrix must be square")
        arity = rows[0][0].arity
        for r in rows:
            for p in r:
                if p.arity != arity:
                    raise ValueError("mixed arities in matrix")
        self.n = n
        self.arity = arity
        self.rows = rows

    @classmethod
    def zero(cls, n, arity):
        z = Poly.zero(arity)
        return cls([[z] * n for _ in range(n)])

    @classmethod
    def identity(cls, n, arity, one):
        z = Poly.zero(arity)
        c = Poly.const(arity, one)
        return cls([[c if i == j else z for j in range(n)] for i in range(n)])

    def entry(self, i, j):
        return self.rows[i][j]

    def __add__(self, other):
        self._match(other)
        return PolyMatrix([[a + b for a, b in zip(ra, rb)]
                           for ra, rb in zip(self.rows, other.rows)])

    def __sub__(self, other):
        return self + (-other)

    def __neg__(self):
        return PolyMatrix([[-p for p in r] for r in self.rows])

    def __mul__(self, other):
        self._match(other)
        n = self.n
        out = []
        for i in range(n):
            row = []
            for j in range(n):
                acc = Poly.zero(self.arity)
                for k in range(n):
                    p = self.rows[i][k]
                    q = other.rows[k][j]
                    if p and q:
                        acc = acc + p * q
                row.append(acc)
            out.append(row)
        return PolyMatrix(out)

    def scale(self, factor):
        if isinstance(factor, Poly):
            return PolyMatrix([[factor * p for p in r] for r in self.rows])
        return PolyMatrix([[p.scale(factor) for p in r] for r in self.rows])

    def substitute(self, mapping):
        return PolyMatrix([[p.substitute(mapping) for p in r]
                           for r in self.rows])

    def truncate(self, maxdeg):
        return PolyMatrix([[p.truncate(maxdeg) for p in r]
                           for r in self.rows])

    def transpose(self):
        return PolyMatrix([[self.rows[j][i] for j in range(self.n)]
                           for i in range(self.n)])

    def degree(self):
        """Max total degree over entries; -1 for the zero matrix."""
        return max(p.degree() for r in self.rows for p in r)

    def is_zero(self):
        return all(p.is_zero() for r in self.rows for p in r)

    def _match(self, other):
        if (not isinstance(other, PolyMatrix) or other.n != self.n
                or other.arity != self.arity):
            raise TypeError("matrix shape/arity mismatch")

    def __eq__(self, other):
        return (isinstance(other, PolyMatrix) and other.n == self.n
                and other.rows == self.rows)

    def __hash__(self):
        return hash((self.n, self.rows))

    def __repr__(self):
        body = "; ".join(", ".join(repr(p) for p in r) for r in self.rows)
        return f"[{body}]"
