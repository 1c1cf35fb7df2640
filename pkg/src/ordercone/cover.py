"""Order structure of the coordinatewise cover: modulus domination,
pointwise order-density validation, and majorization tests.

The cover of a space is Q^m with the coordinatewise order; an element of the
cover is a plain length-m vector.  All three predicates here reduce to exact
LPs over the upper sets {z : F z >= w}, with the pointwise comparison used as
a sound shortcut (row j of the constraints already bounds the j-th minimum
below by w_j).
"""

from __future__ import annotations

from .cones import OrderedSpace, embed
from .errors import ParseError
from .linalg import Vec, dot, mat, vabs, vec
from .lp import Polyhedron, feasible_point, upper_set_min, upper_set_minima


def cover_modulus(space: OrderedSpace, x: Vec) -> Vec:
    """|i(x)| in the cover: the coordinatewise absolute value of the image."""
    return vabs(embed(space, x))


def tighten(space: OrderedSpace, w: Vec) -> Vec:
    """Coordinatewise minima of the images over the upper set of w."""
    if len(w) != space.m:
        raise ParseError(f"cover element must have length {space.m}")
    return upper_set_minima(space.F, w)


def modulus_dominates(space: OrderedSpace, x: Vec, y: Vec) -> bool:
    """Whether every upper bound of {y,-y} bounds {x,-x}: the solid order |x| <= |y|.

    Decided coordinatewise: {z : F z >= |F y|} lies inside {z : F z >= |F x|}
    iff each minimum min{f_j(z) : F z >= |F y|} reaches |F x|_j.  Coordinates
    with |F x|_j <= |F y|_j pass without an LP.
    """
    wx = cover_modulus(space, x)
    wy = cover_modulus(space, y)
    for j in range(space.m):
        if wx[j] > wy[j] and upper_set_min(space.F, wy, j) < wx[j]:
            return False
    return True


def order_density_at(space: OrderedSpace, y: Vec) -> bool:
    """Whether y is the infimum of the images above it (cover premise at y)."""
    if len(y) != space.m:
        raise ParseError(f"cover element must have length {space.m}")
    return all(upper_set_min(space.F, y, j) == y[j] for j in range(space.m))


def is_majorizing(space: OrderedSpace, basis, J) -> bool:
    """Whether the span of `basis` majorizes the coordinate band with support J.

    True iff some d in the span has f_j(d) >= 1 on J and f_j(d) = 0 off J;
    scaling such a d then dominates every element of the band.  One LP over
    the span coefficients.
    """
    J = frozenset(J)
    if not J <= set(range(1, space.m + 1)):
        raise ParseError(f"J must be a subset of 1..{space.m}")
    basis = tuple(basis)
    if not basis:
        return not J
    d = len(basis)
    rows, rhs = [], []
    for j in range(space.m):
        coeffs = tuple(dot(space.F[j], b) for b in basis)
        if j + 1 in J:
            rows.append(coeffs)
            rhs.append(1)
        else:
            rows.append(coeffs)
            rhs.append(0)
            rows.append(tuple(-e for e in coeffs))
            rhs.append(0)
    return feasible_point(Polyhedron(mat(rows), vec(rhs), d)) is not None
