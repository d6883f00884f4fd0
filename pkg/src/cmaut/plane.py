"""Projection of words to automorphisms of the commutative plane.

A word's image is the pair (sigma(x), sigma(y)) of polynomials in two
commuting variables; every letter has Jacobian determinant 1, so the
composite does too.
"""

from __future__ import annotations

import sympy

from .autgroup import AffineGen, TriangularGen, Word

PLANE_X, PLANE_Y = sympy.symbols("x y")


def _rat(f):
    return sympy.Rational(f.numerator, f.denominator)


def _poly_expr(q, arg):
    expr = sympy.Integer(0)
    for k, c in enumerate(q.coeffs):
        expr += _rat(c) * arg ** k
    return expr


def project_to_plane(w: Word):
    """Images of x and y in the commutative polynomial ring, expanded."""
    px, py = PLANE_X, PLANE_Y
    for letter in w.letters:
        if isinstance(letter, AffineGen):
            nx = _rat(letter.a) * px + _rat(letter.b) * py + _rat(letter.e)
            ny = _rat(letter.c) * px + _rat(letter.d) * py + _rat(letter.f)
        elif isinstance(letter, TriangularGen):
            nx = _rat(letter.a) * px + _poly_expr(letter.q, py)
            ny = py / _rat(letter.a) + _rat(letter.h)
        else:
            raise TypeError(f"not a letter: {letter!r}")
        px, py = sympy.expand(nx), sympy.expand(ny)
    return px, py


def jacobian_determinant(pair):
    px, py = pair
    jac = (sympy.diff(px, PLANE_X) * sympy.diff(py, PLANE_Y)
           - sympy.diff(px, PLANE_Y) * sympy.diff(py, PLANE_X))
    return sympy.expand(jac)
