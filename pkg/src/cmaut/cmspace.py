"""Calogero-Moser matrix pairs: the rank-one locus, base points,
PGL-conjugacy of pairs, and orbit-tangent dimensions of subgroup actions.

A point of the n-th space is a pair (X, Y) of n x n rational matrices with
rank([X, Y] + I) = 1; the geometric point is its class under simultaneous
conjugation, so entrywise equality of CMPoints is only equality of
representatives.
"""

from __future__ import annotations

from fractions import Fraction

from .linalg import (
    Matrix,
    commutator,
    invertible_in_span,
    kernel_from_rows,
    poly_eval_matrix,
    rank_rows,
)

SUBGROUP_TAGS = ("A", "B", "U", "G0")


class CMPoint:
    """A rank-one pair representative; the constructor enforces the invariant."""

    __slots__ = ("n", "X", "Y")

    def __init__(self, X: Matrix, Y: Matrix):
        if X.n != Y.n:
            raise ValueError(f"dimension mismatch: {X.n} vs {Y.n}")
        R = commutator(X, Y) + Matrix.identity(X.n)
        if R.rank() != 1:
            raise ValueError("not a Calogero-Moser pair: rk([X,Y] + I) != 1")
        object.__setattr__(self, "n", X.n)
        object.__setattr__(self, "X", X)
        object.__setattr__(self, "Y", Y)

    def __setattr__(self, *a):
        raise AttributeError("CMPoint is immutable")

    def __eq__(self, other):
        return (isinstance(other, CMPoint)
                and self.X == other.X and self.Y == other.Y)

    def __hash__(self):
        return hash((self.X, self.Y))

    def __repr__(self):
        return f"CMPoint(n={self.n}, X={self.X!r}, Y={self.Y!r})"

    def rank_one_matrix(self) -> Matrix:
        return commutator(self.X, self.Y) + Matrix.identity(self.n)

    def conjugated(self, g: Matrix) -> "CMPoint":
        gi = g.inverse()
        return CMPoint(g * self.X * gi, g * self.Y * gi)

    def invariant_key(self):
        """Conjugation-invariant container key; never a complete invariant.

        Char polys of X, Y and X + Y agree on conjugate representatives;
        pgl_equivalent is the final discriminator when keys collide.
        """
        return (self.n,
                self.X.char_poly().coeffs,
                self.Y.char_poly().coeffs,
                (self.X + self.Y).char_poly().coeffs)


class ConjugacyWitness:
    """An invertible g with g X = X' g and g Y = Y' g, held exactly."""

    __slots__ = ("g",)

    def __init__(self, g: Matrix, source: CMPoint, target: CMPoint):
        if g.det() == 0:
            raise ValueError("witness must be invertible")
        if g * source.X != target.X * g or g * source.Y != target.Y * g:
            raise ValueError("witness does not intertwine the pair")
        object.__setattr__(self, "g", g)

    def __setattr__(self, *a):
        raise AttributeError("ConjugacyWitness is immutable")

    def __repr__(self):
        return f"ConjugacyWitness({self.g!r})"


def is_cm_point(X: Matrix, Y: Matrix) -> bool:
    """True iff rank([X, Y] + I) = 1 exactly."""
    if X.n != Y.n:
        raise ValueError(f"dimension mismatch: {X.n} vs {Y.n}")
    return (commutator(X, Y) + Matrix.identity(X.n)).rank() == 1


def base_point(n: int) -> CMPoint:
    """The distinguished pair: X0 = sum E_{k+1,k}, Y0 = sum (k-n) E_{k,k+1}.

    Indices run over k = 1..n-1 (1-based), so n = 1 gives the origin (0, 0).
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    X = [[Fraction(0)] * n for _ in range(n)]
    Y = [[Fraction(0)] * n for _ in range(n)]
    for k in range(1, n):
        X[k][k - 1] = Fraction(1)
        Y[k - 1][k] = Fraction(k - n)
    return CMPoint(Matrix(X), Matrix(Y))


def intertwiner_basis(p: CMPoint, q: CMPoint):
    """Basis of {g : g X_p = X_q g and g Y_p = Y_q g}, an exact linear solve."""
    n = p.n
    rows = []
    for (S, T) in ((p.X, q.X), (p.Y, q.Y)):
        # equation (r, s): sum_j g[r][j] S[j][s] - sum_i T[r][i] g[i][s] = 0
        for r in range(n):
            for s in range(n):
                row = [Fraction(0)] * (n * n)
                for j in range(n):
                    row[r * n + j] += S[j, s]
                for i in range(n):
                    row[i * n + s] -= T[r, i]
                rows.append(row)
    return [Matrix.from_flat(v, n) for v in kernel_from_rows(rows, n * n)]


def pgl_equivalent(p: CMPoint, q: CMPoint):
    """Decide simultaneous conjugacy of the two pairs.

    Solves the linear intertwiner system exactly, then searches the solution
    span for an invertible element; existence over the algebraic closure
    already forces a rational witness, so None is a definite negative.
    """
    if p.n != q.n:
        raise ValueError(f"dimension mismatch: {p.n} vs {q.n}")
    basis = intertwiner_basis(p, q)
    if not basis:
        return None
    g = invertible_in_span(basis)
    if g is None:
        return None
    return ConjugacyWitness(g, p, q)


# ---------------------------------------------------------------------------
# Orbit-tangent dimension
# ---------------------------------------------------------------------------

def _pair_to_row(a: Matrix, b: Matrix):
    return a.flatten() + b.flatten()


def _traceless_basis(n: int):
    basis = []
    for i in range(n):
        for j in range(n):
            if i != j:
                basis.append(Matrix.elementary(n, i, j))
    for i in range(n - 1):
        basis.append(Matrix.elementary(n, i, i) - Matrix.elementary(n, n - 1, n - 1))
    return basis


def _subgroup_directions(tag: str, X: Matrix, Y: Matrix):
    """Derivatives at t = 0 of one-parameter generator families at (X, Y).

    Scalings give (X, -Y), the two translations give (I, 0) and (0, I),
    shears give (Y, 0) and (0, X), and the one-parameter polynomial
    transformations contribute (Y^m, 0) and (0, X^m) for monomials up to
    degree 2n (Cayley-Hamilton makes higher degrees redundant).
    """
    n = X.n
    I = Matrix.identity(n)
    Z = Matrix.zero(n)
    if tag == "A":
        return [(I, Z), (Z, I), (X, -Y), (Y, Z), (Z, X)]
    if tag == "U":
        return [(I, Z), (Z, I), (X, -Y), (Y, Z)]
    if tag == "B":
        dirs = [(X, -Y), (Z, I)]
        power = I
        for _ in range(2 * n + 1):
            dirs.append((power, Z))
            power = power * Y
        return dirs
    if tag == "G0":
        dirs = [(I, Z), (Z, I), (X, -Y)]
        ypow = I
        xpow = I
        for _ in range(2 * n + 1):
            dirs.append((ypow, Z))
            dirs.append((Z, xpow))
            ypow = ypow * Y
            xpow = xpow * X
        return dirs
    raise ValueError(f"unknown subgroup tag: {tag!r}")


def orbit_tangent_dimension(tag: str, p: CMPoint) -> int:
    """Dimension of the tag-subgroup orbit through the class of p.

    Computed as rank(subgroup directions + conjugation directions) minus
    rank(conjugation directions), where conjugation directions are
    ([Z, X], [Z, Y]) over a trace-zero basis Z. The value is invariant under
    replacing the representative by a conjugate.
    """
    X, Y = p.X, p.Y
    conj_rows = [_pair_to_row(commutator(Z, X), commutator(Z, Y))
                 for Z in _traceless_basis(p.n)]
    sub_rows = [_pair_to_row(a, b) for a, b in _subgroup_directions(tag, X, Y)]
    return rank_rows(conj_rows + sub_rows) - rank_rows(conj_rows)
