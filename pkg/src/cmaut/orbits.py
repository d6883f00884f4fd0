"""Sampling the rank-one pair varieties and classifying subgroup orbits.

Orbit identity under the infinite-dimensional subgroups cannot be decided by
word search, so points are clustered by exact invariant signatures: the
orbit-tangent dimension plus, for the triangular-side subgroups, the repeated
eigenvalue structure of Y measured against the rank-one matrix [X, Y] + I.
Signature invariance is itself a tested property, not an assumption.
"""

from __future__ import annotations

import heapq
from fractions import Fraction

from .linalg import Matrix, Polynomial, poly_eval_matrix, rank_rows, solve_consistent
from .cmspace import CMPoint, base_point, commutator, orbit_tangent_dimension, pgl_equivalent
from .autgroup import (
    SWAP,
    AffineGen,
    TriangularGen,
    Word,
    act,
)


# ---------------------------------------------------------------------------
# Sampling
# ---------------------------------------------------------------------------

class SampleSet:
    """Deterministically generated points: count random bounded words applied
    to the base point."""

    __slots__ = ("n", "points", "seed", "word_len", "height", "words")

    def __init__(self, n, points, seed, word_len, height, words):
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "points", tuple(points))
        object.__setattr__(self, "seed", seed)
        object.__setattr__(self, "word_len", word_len)
        object.__setattr__(self, "height", height)
        object.__setattr__(self, "words", tuple(words))

    def __setattr__(self, *a):
        raise AttributeError("SampleSet is immutable")

    def __len__(self):
        return len(self.points)

    def __iter__(self):
        return iter(self.points)


def random_fraction(rng, height: int, nonzero: bool = False) -> Fraction:
    while True:
        v = Fraction(rng.randint(-height, height), rng.randint(1, height))
        if not nonzero or v != 0:
            return v


def random_letter(rng, height: int):
    """One letter among translations, scalings, shears, the swap, and
    triangular letters of small degree."""
    kind = rng.randrange(6)
    if kind == 0:
        return AffineGen(1, 0, 0, 1, random_fraction(rng, height), random_fraction(rng, height))
    if kind == 1:
        a = random_fraction(rng, height, nonzero=True)
        return AffineGen(a, 0, 0, 1 / a, 0, 0)
    if kind == 2:
        return AffineGen(1, random_fraction(rng, height), 0, 1, 0, 0)
    if kind == 3:
        return AffineGen(1, 0, random_fraction(rng, height), 1, 0, 0)
    if kind == 4:
        return SWAP
    deg = rng.randint(0, 3)
    q = Polynomial([random_fraction(rng, height) for _ in range(deg + 1)])
    return TriangularGen(random_fraction(rng, height, nonzero=True), q, random_fraction(rng, height))


def random_word(rng, word_len: int, height: int) -> Word:
    return Word([random_letter(rng, height) for _ in range(rng.randint(0, word_len))])


def sample_points(n: int, count: int, seed: int, word_len: int = 6, height: int = 5) -> SampleSet:
    if n < 1 or count < 1:
        raise ValueError("need n >= 1 and count >= 1")
    import random
    rng = random.Random(seed)
    base = base_point(n)
    words = [random_word(rng, word_len, height) for _ in range(count)]
    points = [act(w, base) for w in words]
    return SampleSet(n, points, seed, word_len, height, words)


# ---------------------------------------------------------------------------
# Signatures
# ---------------------------------------------------------------------------

def _repeated_eigen_structure(p: CMPoint):
    """Exact invariant of Y's repeated-root locus against R = [X, Y] + I.

    char(Y) squarefree gives the sentinel "sep". Otherwise S = ker(g(Y)) for
    g = gcd(char, char'), and the signature records dim S together with
    whether S lies inside ker R and whether im R lies inside S. All three are
    stable under the triangular-side action composed with conjugation: such
    letters move Y by an affine map, move X by a polynomial in Y plus a
    scaling, and leave R untouched up to conjugation.
    """
    cp = p.Y.char_poly()
    g = cp.gcd(cp.derivative())
    if g.degree <= 0:
        return ("sep",)
    gY = poly_eval_matrix(g, p.Y)
    from .linalg import kernel_from_rows
    s_basis = kernel_from_rows(gY.rows, p.n)
    R = p.rank_one_matrix()
    inside_ker = all(
        all(sum(R[i, j] * v[j] for j in range(p.n)) == 0 for i in range(p.n))
        for v in s_basis)
    s_rows = [list(v) for v in s_basis]
    r_cols = [[R[i, j] for i in range(p.n)] for j in range(p.n)]
    image_inside = rank_rows(s_rows + r_cols) == rank_rows(s_rows)
    return (len(s_basis), inside_ker, image_inside)


def orbit_signature(tag: str, p: CMPoint):
    """Exact tuple invariant under the tagged subgroup's action and conjugation."""
    dim = orbit_tangent_dimension(tag, p)
    if tag in ("B", "U"):
        return (dim,) + _repeated_eigen_structure(p)
    if tag in ("A", "G0"):
        return (dim,)
    raise ValueError(f"unknown subgroup tag: {tag!r}")


class OrbitRecord:
    """A signature class of sampled points for one subgroup."""

    __slots__ = ("tag", "signature", "dimension", "representative", "members")

    def __init__(self, tag, signature, representative, members):
        object.__setattr__(self, "tag", tag)
        object.__setattr__(self, "signature", signature)
        object.__setattr__(self, "dimension", signature[0])
        object.__setattr__(self, "representative", representative)
        object.__setattr__(self, "members", tuple(members))

    def __setattr__(self, *a):
        raise AttributeError("OrbitRecord is immutable")

    def __repr__(self):
        return (f"OrbitRecord(tag={self.tag}, signature={self.signature}, "
                f"members={len(self.members)})")


def classify(tag: str, points):
    """Group points by signature, sorted by signature for stable labels."""
    buckets = {}
    for p in points:
        buckets.setdefault(orbit_signature(tag, p), []).append(p)
    records = []
    for sig in sorted(buckets, key=repr):
        members = buckets[sig]
        records.append(OrbitRecord(tag, sig, members[0], members))
    return records


# ---------------------------------------------------------------------------
# Orbit graph
# ---------------------------------------------------------------------------

class OrbitGraph:
    """Bipartite class graph: affine-side and triangular-side vertices joined
    by overlap classes."""

    __slots__ = ("n", "a_records", "b_records", "u_records", "edges", "connected")

    def __init__(self, n, a_records, b_records, u_records, edges):
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "a_records", tuple(a_records))
        object.__setattr__(self, "b_records", tuple(b_records))
        object.__setattr__(self, "u_records", tuple(u_records))
        object.__setattr__(self, "edges", tuple(edges))
        object.__setattr__(self, "connected", self._connected())

    def __setattr__(self, *a):
        raise AttributeError("OrbitGraph is immutable")

    def _connected(self) -> bool:
        verts = ([("A", i) for i in range(len(self.a_records))]
                 + [("B", i) for i in range(len(self.b_records))])
        if not verts:
            return True
        adj = {v: set() for v in verts}
        for _, ai, bi in self.edges:
            adj[("A", ai)].add(("B", bi))
            adj[("B", bi)].add(("A", ai))
        seen = {verts[0]}
        frontier = [verts[0]]
        while frontier:
            v = frontier.pop()
            for w in adj[v]:
                if w not in seen:
                    seen.add(w)
                    frontier.append(w)
        return len(seen) == len(verts)

    def summary(self) -> str:
        return (f"vertices: {len(self.a_records)} affine-side + "
                f"{len(self.b_records)} triangular-side, "
                f"edges: {len(self.edges)}, "
                f"connected: {self.connected}")


def build_orbit_graph(n: int, samples) -> OrbitGraph:
    """Cluster a sample into classes and assemble the bipartite orbit graph.

    Each overlap class must meet exactly one class on each side; anything
    else means the signature failed to separate orbits and is a hard error.
    n = 0 is the degenerate one-point variety and returns the segment.
    """
    if n == 0:
        a = OrbitRecord("A", ("point",), None, ())
        b = OrbitRecord("B", ("point",), None, ())
        u = OrbitRecord("U", ("point",), None, ())
        return OrbitGraph(0, [a], [b], [u], [(0, 0, 0)])
    points = list(samples)
    if not points:
        raise ValueError("samples must be nonempty")
    a_records = classify("A", points)
    b_records = classify("B", points)
    u_records = classify("U", points)
    a_index = {}
    for i, rec in enumerate(a_records):
        for p in rec.members:
            a_index[p] = i
    b_index = {}
    for i, rec in enumerate(b_records):
        for p in rec.members:
            b_index[p] = i
    edges = []
    for ui, rec in enumerate(u_records):
        a_classes = {a_index[p] for p in rec.members}
        b_classes = {b_index[p] for p in rec.members}
        if len(a_classes) != 1 or len(b_classes) != 1:
            raise RuntimeError(
                f"defective signature: overlap class {rec.signature} meets "
                f"{len(a_classes)} affine-side and {len(b_classes)} "
                f"triangular-side classes")
        edges.append((ui, a_classes.pop(), b_classes.pop()))
    return OrbitGraph(n, a_records, b_records, u_records, edges)


# ---------------------------------------------------------------------------
# Reduction to the base point
# ---------------------------------------------------------------------------

def complexity(p: CMPoint) -> int:
    """Total bit size of all numerators and denominators in the pair."""
    total = 0
    for m in (p.X, p.Y):
        for row in m.rows:
            for x in row:
                total += abs(x.numerator).bit_length() + x.denominator.bit_length()
    return total


def _fit_polynomial(target: Matrix, source: Matrix, max_deg: int):
    """Least-squares polynomial q with q(source) closest to target.

    Solves the normal equations of target = sum q_k source^k exactly; the
    system is always consistent, and free coefficients are pinned to zero.
    """
    powers = []
    m = Matrix.identity(source.n)
    for _ in range(max_deg + 1):
        powers.append(m.flatten())
        m = m * source
    t = target.flatten()
    k = len(powers)
    gram = [[sum(a * b for a, b in zip(powers[i], powers[j])) for j in range(k)]
            for i in range(k)]
    rhs = [sum(a * b for a, b in zip(powers[i], t)) for i in range(k)]
    sol = solve_consistent(gram, rhs)
    if sol is None:
        return Polynomial.zero()
    return Polynomial(sol)


def _candidate_moves(p: CMPoint):
    """Moves for the descent: trace centering, polynomial elimination in both
    directions, and the symplectic swap."""
    n = p.n
    moves = []
    e = p.X.trace() / n
    f = p.Y.trace() / n
    if e != 0 or f != 0:
        moves.append(Word((AffineGen(1, 0, 0, 1, e, f),)))
    q = _fit_polynomial(p.X, p.Y, n)
    if not q.is_zero():
        moves.append(Word((TriangularGen(1, q, 0),)))
    r = _fit_polynomial(p.Y, p.X, n)
    if not r.is_zero():
        # (X, Y) -> (X, Y - r(X)) is the phi-type move
        moves.append(Word((SWAP, TriangularGen(1, -r, 0),
                           AffineGen(0, -1, 1, 0, 0, 0))).inverse())
    moves.append(Word((SWAP,)))
    return moves


def reduce_to_basepoint(p: CMPoint, budget: int = 300):
    """Best-effort word moving p into the base point's conjugacy class.

    Best-first search on the bit-size complexity of the pair; success is
    decided by the exact conjugacy test, so the returned word w satisfies
    pgl_equivalent(act(w, p), base_point(n)). None when the budget runs out,
    which is a legitimate outcome for hard points.
    """
    base = base_point(p.n)
    counter = 0
    heap = [(complexity(p), counter, p, Word.identity())]
    seen = {(p.X, p.Y)}
    expanded = 0
    while heap and expanded < budget:
        _, _, cur, word = heapq.heappop(heap)
        if pgl_equivalent(cur, base) is not None:
            assert pgl_equivalent(act(word, p), base) is not None
            return word
        expanded += 1
        for move in _candidate_moves(cur):
            nxt = act(move, cur)
            key = (nxt.X, nxt.Y)
            if key in seen:
                continue
            seen.add(key)
            counter += 1
            heapq.heappush(heap, (complexity(nxt), counter, nxt, move * word))
    return None
