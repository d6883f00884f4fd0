"""Words in the symplectic automorphism group A *_U B and their action.

Letters come in two flavours. An affine letter sends (x, y) to
(ax + by + e, cx + dy + f) with ad - bc = 1; a triangular (Jonquieres)
letter sends (x, y) to (ax + q(y), y/a + h) with a != 0. Their overlap U
consists of the maps (x, y) -> (ax + by + e, y/a + h). Words are unreduced
letter sequences; group multiplication is composition of substitutions, so
a word w = l1 l2 ... lk denotes l1 o l2 o ... o lk.

The action on matrix pairs evaluates the inverse substitution at (X, Y):
for an affine letter, (X, Y) -> (dX - bY + (bf - de) I, -cX + aY + (ce - af) I);
for a triangular letter, (X, Y) -> ((X - q(a(Y - hI))) / a, a(Y - hI)).
Both leave [X, Y] unchanged, so the rank-one locus is preserved exactly.
"""

from __future__ import annotations

from fractions import Fraction

from .linalg import Matrix, Polynomial, as_fraction, poly_eval_matrix
from .cmspace import CMPoint, ConjugacyWitness, base_point, pgl_equivalent


# ---------------------------------------------------------------------------
# Letters
# ---------------------------------------------------------------------------

class AffineGen:
    """Affine letter (x, y) -> (ax + by + e, cx + dy + f), ad - bc = 1."""

    __slots__ = ("a", "b", "c", "d", "e", "f")

    def __init__(self, a, b, c, d, e=0, f=0):
        a, b, c, d, e, f = map(as_fraction, (a, b, c, d, e, f))
        if a * d - b * c != 1:
            raise ValueError("affine letter needs determinant 1")
        for name, val in zip(self.__slots__, (a, b, c, d, e, f)):
            object.__setattr__(self, name, val)

    def __setattr__(self, *args):
        raise AttributeError("letters are immutable")

    def params(self):
        return (self.a, self.b, self.c, self.d, self.e, self.f)

    def __eq__(self, other):
        return isinstance(other, AffineGen) and self.params() == other.params()

    def __hash__(self):
        return hash(("A",) + self.params())

    def __repr__(self):
        return "A(%s)" % ", ".join(str(v) for v in self.params())

    def is_identity(self) -> bool:
        return self.params() == (1, 0, 0, 1, 0, 0)


class TriangularGen:
    """Triangular letter (x, y) -> (ax + q(y), y/a + h), a != 0."""

    __slots__ = ("a", "q", "h")

    def __init__(self, a, q: Polynomial, h=0):
        a = as_fraction(a)
        h = as_fraction(h)
        if a == 0:
            raise ValueError("triangular letter needs a != 0")
        if not isinstance(q, Polynomial):
            q = Polynomial(q)
        object.__setattr__(self, "a", a)
        object.__setattr__(self, "q", q)
        object.__setattr__(self, "h", h)

    def __setattr__(self, *args):
        raise AttributeError("letters are immutable")

    def __eq__(self, other):
        return (isinstance(other, TriangularGen)
                and (self.a, self.q, self.h) == (other.a, other.q, other.h))

    def __hash__(self):
        return hash(("B", self.a, self.q, self.h))

    def __repr__(self):
        return f"B({self.a}; {list(self.q.coeffs)}; {self.h})"

    def is_identity(self) -> bool:
        return self.a == 1 and self.h == 0 and self.q.is_zero()


Letter = (AffineGen, TriangularGen)

AFFINE_IDENTITY = AffineGen(1, 0, 0, 1, 0, 0)
TRIANGULAR_IDENTITY = TriangularGen(1, Polynomial.zero(), 0)
SWAP = AffineGen(0, 1, -1, 0, 0, 0)          # (x, y) -> (y, -x)
SWAP_INV = AffineGen(0, -1, 1, 0, 0, 0)      # (x, y) -> (-y, x)


class UGen:
    """Element of the overlap U: (x, y) -> (ax + by + e, y/a + h)."""

    __slots__ = ("a", "b", "e", "h")

    def __init__(self, a, b=0, e=0, h=0):
        a, b, e, h = map(as_fraction, (a, b, e, h))
        if a == 0:
            raise ValueError("U element needs a != 0")
        for name, val in zip(self.__slots__, (a, b, e, h)):
            object.__setattr__(self, name, val)

    def __setattr__(self, *args):
        raise AttributeError("UGen is immutable")

    def params(self):
        return (self.a, self.b, self.e, self.h)

    def __eq__(self, other):
        return isinstance(other, UGen) and self.params() == other.params()

    def __hash__(self):
        return hash(("U",) + self.params())

    def __repr__(self):
        return "U(%s)" % ", ".join(str(v) for v in self.params())

    def is_identity(self) -> bool:
        return self.params() == (1, 0, 0, 0)

    def as_affine(self) -> AffineGen:
        return AffineGen(self.a, self.b, 0, 1 / self.a, self.e, self.h)

    def as_triangular(self) -> TriangularGen:
        return TriangularGen(self.a, Polynomial((self.e, self.b)), self.h)

    def inverse(self) -> "UGen":
        u = in_U(invert_letter(self.as_affine()))
        assert u is not None
        return u


U_IDENTITY = UGen(1, 0, 0, 0)


def in_U(letter):
    """The U-form of a letter when it lies in the overlap, else None."""
    if isinstance(letter, AffineGen):
        if letter.c != 0:
            return None
        return UGen(letter.a, letter.b, letter.e, letter.f)
    if isinstance(letter, TriangularGen):
        if letter.q.degree > 1:
            return None
        return UGen(letter.a, letter.q.coeff(1), letter.q.coeff(0), letter.h)
    raise TypeError(f"not a letter: {letter!r}")


def u_compose(u1: UGen, u2: UGen) -> UGen:
    u = in_U(compose_in_factor(u1.as_affine(), u2.as_affine()))
    assert u is not None
    return u


# ---------------------------------------------------------------------------
# Composition and inversion inside a factor
# ---------------------------------------------------------------------------

def compose_in_factor(x, y):
    """Group product x . y of two same-type letters (composition of maps).

    Substitutions compose contravariantly on coefficients: the linear part
    of an affine product is M(y) M(x).
    """
    if isinstance(x, AffineGen) and isinstance(y, AffineGen):
        a1, b1, c1, d1, e1, f1 = x.params()
        a2, b2, c2, d2, e2, f2 = y.params()
        return AffineGen(
            a2 * a1 + b2 * c1, a2 * b1 + b2 * d1,
            c2 * a1 + d2 * c1, c2 * b1 + d2 * d1,
            a2 * e1 + b2 * f1 + e2, c2 * e1 + d2 * f1 + f2,
        )
    if isinstance(x, TriangularGen) and isinstance(y, TriangularGen):
        a1, q1, h1 = x.a, x.q, x.h
        a2, q2, h2 = y.a, y.q, y.h
        q = q1 * a2 + q2.compose(Polynomial((h1, 1 / a1)))
        return TriangularGen(a1 * a2, q, h1 / a2 + h2)
    raise TypeError("compose_in_factor needs two letters of the same type")


def invert_letter(x):
    if isinstance(x, AffineGen):
        a, b, c, d, e, f = x.params()
        return AffineGen(d, -b, -c, a, b * f - d * e, c * e - a * f)
    if isinstance(x, TriangularGen):
        a, q, h = x.a, x.q, x.h
        qi = q.compose(Polynomial((-a * h, a))) * Fraction(-1, 1) * (1 / a)
        return TriangularGen(1 / a, qi, -a * h)
    raise TypeError(f"not a letter: {x!r}")


# ---------------------------------------------------------------------------
# Words
# ---------------------------------------------------------------------------

class Word:
    """Unreduced sequence of letters; w = l1 l2 ... lk means l1 o ... o lk."""

    __slots__ = ("letters",)

    def __init__(self, letters=()):
        letters = tuple(letters)
        for l in letters:
            if not isinstance(l, Letter):
                raise TypeError(f"not a letter: {l!r}")
        object.__setattr__(self, "letters", letters)

    def __setattr__(self, *args):
        raise AttributeError("Word is immutable")

    @classmethod
    def identity(cls) -> "Word":
        return cls(())

    def __mul__(self, other: "Word") -> "Word":
        return Word(self.letters + other.letters)

    def inverse(self) -> "Word":
        return Word(tuple(invert_letter(l) for l in reversed(self.letters)))

    def __len__(self):
        return len(self.letters)

    def __iter__(self):
        return iter(self.letters)

    def __eq__(self, other):
        return isinstance(other, Word) and self.letters == other.letters

    def __hash__(self):
        return hash(self.letters)

    def __repr__(self):
        return "Word[" + " * ".join(repr(l) for l in self.letters) + "]"


def psi(q) -> Word:
    """(x, y) -> (x + q(y), y) as a single triangular letter."""
    if not isinstance(q, Polynomial):
        q = Polynomial(q)
    return Word((TriangularGen(1, q, 0),))


def phi(p) -> Word:
    """(x, y) -> (x, y + p(x)), spelled through the symplectic swap.

    phi(p) = swap^-1 . psi(-p) . swap, so the alphabet stays {affine,
    triangular}; phi(0) is the empty word.
    """
    if not isinstance(p, Polynomial):
        p = Polynomial(p)
    if p.is_zero():
        return Word.identity()
    return Word((SWAP_INV, TriangularGen(1, -p, 0), SWAP))


# ---------------------------------------------------------------------------
# Action on Calogero-Moser pairs
# ---------------------------------------------------------------------------

def act_letter(letter, p: CMPoint) -> CMPoint:
    X, Y = p.X, p.Y
    I = Matrix.identity(p.n)
    if isinstance(letter, AffineGen):
        a, b, c, d, e, f = letter.params()
        X2 = X.scale(d) - Y.scale(b) + I.scale(b * f - d * e)
        Y2 = Y.scale(a) - X.scale(c) + I.scale(c * e - a * f)
        return CMPoint(X2, Y2)
    if isinstance(letter, TriangularGen):
        a, q, h = letter.a, letter.q, letter.h
        Ys = Y - I.scale(h)
        X2 = (X - poly_eval_matrix(q, Ys.scale(a))).scale(1 / a)
        return CMPoint(X2, Ys.scale(a))
    raise TypeError(f"not a letter: {letter!r}")


def act(w: Word, p: CMPoint) -> CMPoint:
    """Left action: act(w1 * w2, p) = act(w1, act(w2, p)).

    Letters apply right-to-left; every intermediate pair re-validates the
    rank-one invariant, so a violation raises instead of propagating.
    """
    for letter in reversed(w.letters):
        p = act_letter(letter, p)
    return p


# ---------------------------------------------------------------------------
# Amalgam normal form (Britton reduction)
# ---------------------------------------------------------------------------
#
# Every group element factors uniquely as u . c1 . c2 ... ck with u in U and
# the c_i alternating canonical representatives of nontrivial right cosets:
#   A-side: A(s, -1, 1, 0, 0, 0), one per coset (s = a/c);
#   B-side: B(1, q, 0) with q(0) = q'(0) = 0 and deg q >= 2.
# Reduction folds letters in from the left, merging same-type neighbours and
# pushing U-parts leftward into the prefix.

def canonical_a_rep(s) -> AffineGen:
    return AffineGen(s, -1, 1, 0, 0, 0)


def is_canonical_a_rep(letter) -> bool:
    return (isinstance(letter, AffineGen)
            and (letter.b, letter.c, letter.d, letter.e, letter.f)
            == (-1, 1, 0, 0, 0))


def is_canonical_b_rep(letter) -> bool:
    return (isinstance(letter, TriangularGen)
            and letter.a == 1 and letter.h == 0
            and letter.q.degree >= 2
            and letter.q.coeff(0) == 0 and letter.q.coeff(1) == 0)


def decompose_letter(letter):
    """Split letter = u . rep with rep the canonical coset representative.

    Returns (u, None) when the letter already lies in U.
    """
    u = in_U(letter)
    if u is not None:
        return u, None
    if isinstance(letter, AffineGen):
        rep = canonical_a_rep(letter.a / letter.c)
    else:
        a, q, h = letter.a, letter.q, letter.h
        r = q.compose(Polynomial((-a * h, a)))  # q(a(y - h))
        qt = r - Polynomial((r.coeff(0), r.coeff(1)))
        rep = TriangularGen(1, qt, 0)
    u = in_U(compose_in_factor(letter, invert_letter(rep)))
    if u is None:
        raise AssertionError("coset decomposition left the overlap")
    return u, rep


class NormalForm:
    """U-prefix plus a strictly alternating tuple of coset representatives."""

    __slots__ = ("prefix", "reps")

    def __init__(self, prefix: UGen, reps=()):
        reps = tuple(reps)
        for i, r in enumerate(reps):
            if not (is_canonical_a_rep(r) or is_canonical_b_rep(r)):
                raise ValueError(f"not a canonical representative: {r!r}")
            if i and isinstance(r, type(reps[i - 1])):
                raise ValueError("representatives must alternate types")
        object.__setattr__(self, "prefix", prefix)
        object.__setattr__(self, "reps", reps)

    def __setattr__(self, *args):
        raise AttributeError("NormalForm is immutable")

    def is_identity(self) -> bool:
        return not self.reps and self.prefix.is_identity()

    def __eq__(self, other):
        return (isinstance(other, NormalForm)
                and self.prefix == other.prefix and self.reps == other.reps)

    def __hash__(self):
        return hash((self.prefix, self.reps))

    def __len__(self):
        return len(self.reps)

    def __repr__(self):
        return f"NormalForm({self.prefix!r}, {list(self.reps)!r})"

    def to_word(self) -> Word:
        letters = []
        if not self.prefix.is_identity():
            letters.append(self.prefix.as_affine())
        letters.extend(self.reps)
        return Word(letters)


def _prepend(letter, prefix: UGen, reps):
    """Normal form of letter . (prefix . reps)."""
    if isinstance(letter, AffineGen):
        z = compose_in_factor(letter, prefix.as_affine())
    else:
        z = compose_in_factor(letter, prefix.as_triangular())
    if reps and isinstance(reps[0], type(z)):
        z = compose_in_factor(z, reps[0])
        reps = reps[1:]
    u, rep = decompose_letter(z)
    if rep is None:
        return u, reps
    return u, (rep,) + reps


def normal_form(w: Word) -> NormalForm:
    """Britton reduction to the unique alternating form, folding from the right."""
    prefix = U_IDENTITY
    reps: tuple = ()
    for letter in reversed(w.letters):
        prefix, reps = _prepend(letter, prefix, reps)
    return NormalForm(prefix, reps)


def is_identity(w: Word) -> bool:
    """Word problem: true iff the normal form is trivial."""
    return normal_form(w).is_identity()


# ---------------------------------------------------------------------------
# Stabilizer membership
# ---------------------------------------------------------------------------

def stabilizes_basepoint(w: Word, n: int):
    """Witness that w fixes the class of base_point(n), or None.

    A non-None return certifies membership in the stabilizer subgroup of
    the n-th base point, i.e. w represents an automorphism of the n-th
    member of the Morita family.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    p = base_point(n)
    return pgl_equivalent(act(w, p), p)


def is_stabilizer(w: Word, n: int) -> bool:
    return stabilizes_basepoint(w, n) is not None
