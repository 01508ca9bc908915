"""Triangles of a given shape that sit closest to the unit regular triangle.

Given side lengths and orientation, :func:`nearest_pair` builds two
concrete triangles with centroid 0:

* ``z_star_affine`` is similar to the input and its plain distance to
  :data:`~orbitdev.triangles.DELTA` is the affine deviation;
* ``z_star_isometric`` is congruent to the input and its distance to
  ``DELTA`` is the isometric deviation.

Both are multiples of the "ring" triangle ``z°`` returned by
:func:`z_rings`.
"""

from __future__ import annotations

from dataclasses import dataclass

from .polygon import DomainError, centered, inner_product
from .triangles import (
    DELTA,
    SQRT3,
    Triangle,
    TriangleSides,
    _signed_terms,
    normalized_area,
    triangle_from_sides,
)

#: below this value of ``1 + sign*sqrt(3 - 6q)`` the isometric witness is
#: taken from the equilateral clockwise branch ``mean_side * conj(DELTA)``
DEGENERATE_ISOMETRIC = 1e-20


@dataclass(frozen=True)
class NearestPair:
    z_star_affine: Triangle
    z_star_isometric: Triangle
    degenerate_isometric: bool


def _require_nonsingular(s: TriangleSides) -> None:
    if s.is_singular():
        raise DomainError("a singular triangle has no nearest triangles")


def z_rings(s: TriangleSides) -> Triangle:
    """The centered triangle ``z°`` evaluated from the side-length formulas."""
    _require_nonsingular(s)
    a2, b2, c2 = s.a**2, s.b**2, s.c**2
    t = 3.0 * s.sign * (s.sum_of_squares / 3.0) * normalized_area(s)
    z1 = complex((2 * a2 + 2 * c2 - b2 + t) / (6 * SQRT3), (c2 - a2) / 6)
    z2 = complex((c2 - 5 * a2 + b2 - t) / (12 * SQRT3), (a2 - c2 + 3 * b2 + t) / 12)
    z3 = complex((a2 - 5 * c2 + b2 - t) / (12 * SQRT3), -(c2 - a2 + 3 * b2 + t) / 12)
    return Triangle([z1, z2, z3])


def nearest_pair(s: TriangleSides) -> NearestPair:
    """Build ``z*`` and ``z★`` for the triangle with sides ``s``.

    ``z° = conj(<w|DELTA>) * w`` with ``w`` the centered canonical placement
    of ``s``, which is what :func:`z_rings` expands. The product form is
    used here because it keeps ``z★`` exactly congruent to ``w`` when
    ``<w|DELTA>`` is tiny; ``z★ = z° / |<w|DELTA>|`` is then a pure rotation
    of ``w``.
    """
    _require_nonsingular(s)
    w = centered(triangle_from_sides(s))
    p = inner_product(w, DELTA)
    u = s.u
    z_aff = w * (p.conjugate() / u / u)

    _, plus = _signed_terms(s)
    if plus < DEGENERATE_ISOMETRIC or p == 0:
        mean_side = (s.a + s.b + s.c) / 3.0
        return NearestPair(z_aff, DELTA.conjugate() * mean_side, True)
    return NearestPair(z_aff, w * (p.conjugate() / abs(p)), False)

