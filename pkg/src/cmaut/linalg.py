"""Exact rational linear algebra and univariate polynomials.

Everything here computes over the field of rationals with no rounding:
matrices are immutable grids of fractions.Fraction, elimination is
fraction-free (Bareiss) with leftmost-nonzero pivoting, and polynomial
evaluation at a matrix uses Horner's scheme.
"""

from __future__ import annotations

import itertools
import math
from fractions import Fraction

NEG_INF = float("-inf")


def as_fraction(x) -> Fraction:
    """Coerce an int, Fraction, or 'p/q' string to an exact Fraction."""
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int) and not isinstance(x, bool):
        return Fraction(x)
    if isinstance(x, str):
        return Fraction(x)
    raise TypeError(f"not an exact scalar: {x!r}")


def format_fraction(x: Fraction) -> object:
    """Render a Fraction as an int when integral, else a 'p/q' string."""
    x = as_fraction(x)
    return x.numerator if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


# ---------------------------------------------------------------------------
# Row-level elimination helpers (rectangular inputs allowed)
# ---------------------------------------------------------------------------

def _integerized(rows):
    """Scale each row by the lcm of its denominators; rank is unchanged."""
    out = []
    for row in rows:
        row = [as_fraction(x) for x in row]
        den = 1
        for x in row:
            den = den * x.denominator // math.gcd(den, x.denominator)
        out.append([int(x * den) for x in row])
    return out


def rank_rows(rows) -> int:
    """Exact rank of a list of row vectors (Bareiss, leftmost pivots)."""
    m = _integerized(rows)
    if not m or not m[0]:
        return 0
    nrow, ncol = len(m), len(m[0])
    prev = 1
    r = 0
    for c in range(ncol):
        if r == nrow:
            break
        pivot = next((i for i in range(r, nrow) if m[i][c] != 0), None)
        if pivot is None:
            continue
        m[r], m[pivot] = m[pivot], m[r]
        for i in range(r + 1, nrow):
            for j in range(c + 1, ncol):
                m[i][j] = (m[r][c] * m[i][j] - m[i][c] * m[r][j]) // prev
            m[i][c] = 0
        prev = m[r][c]
        r += 1
    return r


def rref_rows(rows):
    """Reduced row echelon form over the rationals.

    Returns (rref_rows, pivot_columns); deterministic by leftmost-nonzero
    pivot choice with topmost rows preferred.
    """
    m = [[as_fraction(x) for x in row] for row in rows]
    if not m or not m[0]:
        return m, []
    nrow, ncol = len(m), len(m[0])
    pivots = []
    r = 0
    for c in range(ncol):
        if r == nrow:
            break
        pivot = next((i for i in range(r, nrow) if m[i][c] != 0), None)
        if pivot is None:
            continue
        m[r], m[pivot] = m[pivot], m[r]
        inv = 1 / m[r][c]
        m[r] = [x * inv for x in m[r]]
        for i in range(nrow):
            if i != r and m[i][c] != 0:
                f = m[i][c]
                m[i] = [a - f * b for a, b in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
    return m, pivots


def kernel_from_rows(rows, ncol=None):
    """Canonical basis of the right kernel {v : rows @ v = 0}."""
    if ncol is None:
        ncol = len(rows[0]) if rows else 0
    if not rows:
        return [tuple(Fraction(int(i == j)) for j in range(ncol)) for i in range(ncol)]
    rref, pivots = rref_rows(rows)
    free = [c for c in range(ncol) if c not in pivots]
    basis = []
    for fc in free:
        v = [Fraction(0)] * ncol
        v[fc] = Fraction(1)
        for i, pc in enumerate(pivots):
            v[pc] = -rref[i][fc]
        basis.append(tuple(v))
    return basis


def solve_consistent(rows, rhs):
    """One exact solution of rows @ x = rhs with free variables set to 0.

    Returns None when the system is inconsistent.
    """
    aug = [list(row) + [b] for row, b in zip(rows, rhs)]
    rref, pivots = rref_rows(aug)
    ncol = len(rows[0]) if rows else 0
    if ncol in pivots:
        return None
    x = [Fraction(0)] * ncol
    for i, pc in enumerate(pivots):
        x[pc] = rref[i][-1]
    return tuple(x)


# ---------------------------------------------------------------------------
# Matrices
# ---------------------------------------------------------------------------

class Matrix:
    """Immutable square matrix over the rationals; equality is entrywise."""

    __slots__ = ("rows", "n")

    def __init__(self, rows):
        rows = tuple(tuple(as_fraction(x) for x in row) for row in rows)
        n = len(rows)
        if n == 0 or any(len(row) != n for row in rows):
            raise ValueError("matrix must be square and nonempty")
        object.__setattr__(self, "rows", rows)
        object.__setattr__(self, "n", n)

    def __setattr__(self, *a):
        raise AttributeError("Matrix is immutable")

    @classmethod
    def zero(cls, n: int) -> "Matrix":
        return cls([[0] * n for _ in range(n)])

    @classmethod
    def identity(cls, n: int) -> "Matrix":
        return cls([[int(i == j) for j in range(n)] for i in range(n)])

    @classmethod
    def elementary(cls, n: int, i: int, j: int) -> "Matrix":
        """E_ij with a single 1 in row i, column j (0-indexed)."""
        rows = [[0] * n for _ in range(n)]
        rows[i][j] = 1
        return cls(rows)

    @classmethod
    def diagonal(cls, entries) -> "Matrix":
        entries = list(entries)
        n = len(entries)
        return cls([[entries[i] if i == j else 0 for j in range(n)] for i in range(n)])

    def __getitem__(self, ij):
        i, j = ij
        return self.rows[i][j]

    def __eq__(self, other):
        return isinstance(other, Matrix) and self.rows == other.rows

    def __hash__(self):
        return hash(self.rows)

    def __repr__(self):
        body = "; ".join(" ".join(str(x) for x in row) for row in self.rows)
        return f"Matrix[{body}]"

    def __add__(self, other: "Matrix") -> "Matrix":
        self._same_dim(other)
        return Matrix([[a + b for a, b in zip(r1, r2)]
                       for r1, r2 in zip(self.rows, other.rows)])

    def __sub__(self, other: "Matrix") -> "Matrix":
        self._same_dim(other)
        return Matrix([[a - b for a, b in zip(r1, r2)]
                       for r1, r2 in zip(self.rows, other.rows)])

    def __neg__(self) -> "Matrix":
        return Matrix([[-x for x in row] for row in self.rows])

    def __mul__(self, other):
        if isinstance(other, Matrix):
            self._same_dim(other)
            n = self.n
            cols = list(zip(*other.rows))
            return Matrix([[sum(a * b for a, b in zip(row, col)) for col in cols]
                           for row in self.rows])
        return self.scale(other)

    def __rmul__(self, other):
        return self.scale(other)

    def scale(self, c) -> "Matrix":
        c = as_fraction(c)
        return Matrix([[c * x for x in row] for row in self.rows])

    def _same_dim(self, other: "Matrix") -> None:
        if self.n != other.n:
            raise ValueError(f"dimension mismatch: {self.n} vs {other.n}")

    def trace(self) -> Fraction:
        return sum((self.rows[i][i] for i in range(self.n)), Fraction(0))

    def is_zero(self) -> bool:
        return all(x == 0 for row in self.rows for x in row)

    def rank(self) -> int:
        return rank_rows(self.rows)

    def det(self) -> Fraction:
        """Exact determinant via fraction-free elimination."""
        m = [list(row) for row in self.rows]
        n = self.n
        den = []
        for i in range(n):
            d = 1
            for x in m[i]:
                d = d * x.denominator // math.gcd(d, x.denominator)
            m[i] = [int(x * d) for x in m[i]]
            den.append(d)
        prev = 1
        sign = 1
        for c in range(n):
            pivot = next((i for i in range(c, n) if m[i][c] != 0), None)
            if pivot is None:
                return Fraction(0)
            if pivot != c:
                m[c], m[pivot] = m[pivot], m[c]
                sign = -sign
            for i in range(c + 1, n):
                for j in range(c + 1, n):
                    m[i][j] = (m[c][c] * m[i][j] - m[i][c] * m[c][j]) // prev
                m[i][c] = 0
            prev = m[c][c]
        d_all = 1
        for d in den:
            d_all *= d
        return Fraction(sign * prev, d_all)

    def is_invertible(self) -> bool:
        return self.det() != 0

    def inverse(self) -> "Matrix":
        n = self.n
        aug = [list(row) + [Fraction(int(i == j)) for j in range(n)]
               for i, row in enumerate(self.rows)]
        rref, pivots = rref_rows(aug)
        if pivots != list(range(n)):
            raise ValueError("matrix not invertible")
        return Matrix([row[n:] for row in rref])

    def char_poly(self) -> "Polynomial":
        """Monic characteristic polynomial det(t*I - M), Faddeev-LeVerrier."""
        n = self.n
        cs = []
        m = self
        for k in range(1, n + 1):
            if k > 1:
                m = self * (m - Matrix.identity(n).scale(cs[-1]))
            ck = m.trace() / k
            cs.append(ck)
        coeffs = [Fraction(0)] * (n + 1)
        coeffs[n] = Fraction(1)
        for k, ck in enumerate(cs, start=1):
            coeffs[n - k] = -ck
        return Polynomial(coeffs)

    def column(self, j: int):
        return tuple(self.rows[i][j] for i in range(self.n))

    def flatten(self):
        return tuple(x for row in self.rows for x in row)

    @classmethod
    def from_flat(cls, vec, n: int) -> "Matrix":
        vec = list(vec)
        if len(vec) != n * n:
            raise ValueError("flat vector has wrong length")
        return cls([vec[i * n:(i + 1) * n] for i in range(n)])


def commutator(a: Matrix, b: Matrix) -> Matrix:
    return a * b - b * a


def rank(m: Matrix) -> int:
    """Rank over the fraction field by exact elimination."""
    return m.rank()


def kernel_basis(m: Matrix):
    """Exact basis of the right kernel; empty iff m is invertible."""
    return kernel_from_rows(m.rows, m.n)


# ---------------------------------------------------------------------------
# Univariate polynomials
# ---------------------------------------------------------------------------

class Polynomial:
    """Univariate polynomial over the rationals, dense little-endian coeffs.

    No trailing zeros are stored; the zero polynomial reports degree -inf.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        cs = [as_fraction(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    def __setattr__(self, *a):
        raise AttributeError("Polynomial is immutable")

    @classmethod
    def zero(cls) -> "Polynomial":
        return cls(())

    @classmethod
    def constant(cls, c) -> "Polynomial":
        return cls((c,))

    @classmethod
    def variable(cls) -> "Polynomial":
        return cls((0, 1))

    @classmethod
    def monomial(cls, deg: int, c=1) -> "Polynomial":
        return cls([0] * deg + [c])

    @property
    def degree(self):
        return len(self.coeffs) - 1 if self.coeffs else NEG_INF

    def is_zero(self) -> bool:
        return not self.coeffs

    def coeff(self, k: int) -> Fraction:
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else Fraction(0)

    def __eq__(self, other):
        return isinstance(other, Polynomial) and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        if not self.coeffs:
            return "Poly(0)"
        return "Poly(" + ", ".join(str(c) for c in self.coeffs) + ")"

    def __add__(self, other: "Polynomial") -> "Polynomial":
        a, b = self.coeffs, other.coeffs
        out = [Fraction(0)] * max(len(a), len(b))
        for i, c in enumerate(a):
            out[i] += c
        for i, c in enumerate(b):
            out[i] += c
        return Polynomial(out)

    def __sub__(self, other: "Polynomial") -> "Polynomial":
        return self + (-other)

    def __neg__(self) -> "Polynomial":
        return Polynomial([-c for c in self.coeffs])

    def __mul__(self, other):
        if not isinstance(other, Polynomial):
            c = as_fraction(other)
            return Polynomial([c * x for x in self.coeffs])
        if self.is_zero() or other.is_zero():
            return Polynomial.zero()
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return Polynomial(out)

    def __rmul__(self, other):
        return self * other

    def __call__(self, x) -> Fraction:
        x = as_fraction(x)
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def compose(self, inner: "Polynomial") -> "Polynomial":
        """self(inner(y)) by Horner over the polynomial ring."""
        acc = Polynomial.zero()
        for c in reversed(self.coeffs):
            acc = acc * inner + Polynomial.constant(c)
        return acc

    def derivative(self) -> "Polynomial":
        return Polynomial([i * c for i, c in enumerate(self.coeffs)][1:])

    def monic(self) -> "Polynomial":
        if self.is_zero():
            return self
        lead = self.coeffs[-1]
        return Polynomial([c / lead for c in self.coeffs])

    def divmod(self, other: "Polynomial"):
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        div = other.coeffs
        quo = [Fraction(0)] * max(len(rem) - len(div) + 1, 0)
        while len(rem) >= len(div):
            c = rem[-1] / div[-1]
            k = len(rem) - len(div)
            quo[k] = c
            for i, d in enumerate(div):
                rem[k + i] -= c * d
            while rem and rem[-1] == 0:
                rem.pop()
            if not rem:
                break
        return Polynomial(quo), Polynomial(rem)

    def gcd(self, other: "Polynomial") -> "Polynomial":
        a, b = self, other
        while not b.is_zero():
            a, b = b, a.divmod(b)[1]
        return a.monic()

    def is_squarefree(self) -> bool:
        if self.is_zero():
            return False
        g = self.gcd(self.derivative())
        return g.degree <= 0


def poly_eval_matrix(p: Polynomial, m: Matrix) -> Matrix:
    """p(M) by Horner; a constant c gives c*I."""
    acc = Matrix.zero(m.n)
    for c in reversed(p.coeffs):
        acc = acc * m + Matrix.identity(m.n).scale(c)
    return acc


# ---------------------------------------------------------------------------
# Invertible element in a matrix span
# ---------------------------------------------------------------------------

def invertible_in_span(basis):
    """Find an invertible rational combination of the basis matrices, or None.

    The determinant of sum(t_i * B_i) is a polynomial of degree at most n in
    each t_i, so over an infinite field it vanishes identically iff it
    vanishes on the grid {0, .., n}^k. The grid is scanned in lexicographic
    order and the first invertible combination is returned, which also makes
    the answer deterministic. Cost is (n+1)^k determinants, so keep the span
    dimension k small.
    """
    basis = list(basis)
    if not basis:
        return None
    n = basis[0].n
    if any(b.n != n for b in basis):
        raise ValueError("span basis matrices must share a dimension")
    for b in basis:
        if b.det() != 0:
            return b
    for coeffs in itertools.product(range(n + 1), repeat=len(basis)):
        m = Matrix.zero(n)
        for c, b in zip(coeffs, basis):
            if c:
                m = m + b.scale(c)
        if m.det() != 0:
            return m
    return None
