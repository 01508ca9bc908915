"""Closed-form deviations of one n-gon from another.

For a group ``G`` of affine maps of the plane, the G-deviation of ``x``
from ``y`` is the infimum of ``distance(g(x), y)`` over ``g`` in ``G``.
Four groups are supported:

==========  =======================  ==========================
GroupKind   maps ``z -> a*z + b``    constraint
==========  =======================  ==========================
ROTATION    ``|a| = 1, b = 0``       unit circle
LINEAR      ``a != 0, b = 0``        non-zero multipliers
ISOMETRY    ``|a| = 1``              rotations plus shifts
AFFINE      ``a != 0``               similarities
==========  =======================  ==========================

Each function returns the deviation together with the map that attains
it. The value is evaluated as the residual ``distance(g(x), y)`` of that
map. Subtracting squared norms gives the same number but loses about
half the significant digits when the deviation is small.
"""

from __future__ import annotations

import cmath
import enum
import math
from dataclasses import dataclass

import numpy as np

from .polygon import (
    AffineWitness,
    DomainError,
    Polygon,
    _check_same_length,
    centroid,
    distance,
    inner_product,
    norm,
)

#: ``|<x|y>| <= ZERO_INNER_PRODUCT * |x| * |y|`` selects the "any witness" branch.
ZERO_INNER_PRODUCT = 1e-12


class GroupKind(enum.Enum):
    ROTATION = "rotation"
    LINEAR = "linear"
    ISOMETRY = "isometry"
    AFFINE = "affine"


@dataclass(frozen=True)
class DeviationResult:
    value: float
    witness: AffineWitness


def _is_zero_product(p: complex, nx: float, ny: float) -> bool:
    return abs(p) <= ZERO_INNER_PRODUCT * nx * ny


def _result(x: Polygon, y: Polygon, w: AffineWitness) -> DeviationResult:
    return DeviationResult(distance(w(x), y), w)


def _multiplier(p: complex, nx: float) -> complex:
    a = p.conjugate() / nx / nx
    if not cmath.isfinite(a):
        raise DomainError("the optimal multiplier overflows; rescale the polygons")
    return a


def rotational_deviation(x: Polygon, y: Polygon) -> DeviationResult:
    """Distance from ``y`` to the orbit of ``x`` under rotations about 0.

    The optimal multiplier is ``conj(<x|y>) / |<x|y>|``; when the inner
    product vanishes every rotation is optimal and ``a = 1`` is returned.
    """
    _check_same_length(x, y)
    p = inner_product(x, y)
    if _is_zero_product(p, norm(x), norm(y)):
        return _result(x, y, AffineWitness(1, 0))
    return _result(x, y, AffineWitness(p.conjugate() / abs(p), 0))


def isometric_deviation(x: Polygon, y: Polygon) -> DeviationResult:
    """Distance from ``y`` to the orbit of ``x`` under rigid motions.

    Both polygons are centered, the rotational problem is solved on the
    centered pair, and the shift is recomposed as ``b = y0 - a*x0`` so the
    witness acts on the original polygons.
    """
    _check_same_length(x, y)
    x0, y0 = centroid(x), centroid(y)
    xc, yc = x - x0, y - y0
    p = inner_product(xc, yc)
    if _is_zero_product(p, norm(xc), norm(yc)):
        a = 1 + 0j
    else:
        a = p.conjugate() / abs(p)
    return _result(x, y, AffineWitness(a, y0 - a * x0))


def linear_deviation(x: Polygon, y: Polygon) -> DeviationResult:
    """Distance from ``y`` to the orbit of ``x`` under ``z -> a*z``, ``a != 0``.

    For ``x = 0`` the orbit is the single point 0. When ``<x|y> = 0`` for a
    non-zero ``x`` the infimum ``|y|`` is only approached as ``a -> 0``; the
    returned witness then has ``attained=False``.
    """
    _check_same_length(x, y)
    nx = norm(x)
    if nx == 0.0:
        return DeviationResult(norm(y), AffineWitness(1, 0))
    p = inner_product(x, y)
    if _is_zero_product(p, nx, norm(y)):
        return DeviationResult(norm(y), AffineWitness(0, 0, attained=False))
    return _result(x, y, AffineWitness(_multiplier(p, nx), 0))


def affine_deviation(x: Polygon, y: Polygon) -> DeviationResult:
    """Distance from ``y`` to the orbit of ``x`` under similarities.

    A constant ``x`` is mapped onto the centroid of ``y``. The boundary
    case ``<x - x0|y - y0> = 0`` is reported like in :func:`linear_deviation`,
    with ``b = y0``.
    """
    _check_same_length(x, y)
    x0, y0 = centroid(x), centroid(y)
    yc = y - y0
    if x.is_constant():
        return DeviationResult(norm(yc), AffineWitness(1, y0 - x0))
    xc = x - x0
    nx = norm(xc)
    p = inner_product(xc, yc)
    if nx == 0.0 or _is_zero_product(p, nx, norm(yc)):
        return DeviationResult(norm(yc), AffineWitness(0, y0, attained=False))
    a = _multiplier(p, nx)
    return _result(x, y, AffineWitness(a, y0 - a * x0))


_DISPATCH = {
    GroupKind.ROTATION: rotational_deviation,
    GroupKind.LINEAR: linear_deviation,
    GroupKind.ISOMETRY: isometric_deviation,
    GroupKind.AFFINE: affine_deviation,
}


def deviation(group: GroupKind | str, x: Polygon, y: Polygon) -> DeviationResult:
    return _DISPATCH[GroupKind(group)](x, y)


def formula_value(group: GroupKind | str, x: Polygon, y: Polygon) -> float:
    """The deviation evaluated from norms and inner products alone.

    This is the square-root expression without any witness; it agrees
    with ``deviation(group, x, y).value`` but is less accurate near 0.
    Negative radicands from rounding are clamped to 0.
    """
    group = GroupKind(group)
    _check_same_length(x, y)
    if group in (GroupKind.ISOMETRY, GroupKind.AFFINE):
        x, y = x - centroid(x), y - centroid(y)
    nx, ny = norm(x), norm(y)
    p = abs(inner_product(x, y))
    if group in (GroupKind.ROTATION, GroupKind.ISOMETRY):
        radicand = nx**2 + ny**2 - 2.0 * p
    elif nx == 0.0:
        radicand = ny**2
    else:
        radicand = ny**2 - (p / nx) ** 2
    return math.sqrt(max(radicand, 0.0))


def orbit_sample(group: GroupKind | str, rng: np.random.Generator) -> AffineWitness:
    """A random element of ``group`` (used by property tests and the CLI)."""
    group = GroupKind(group)
    angle = rng.uniform(0.0, 2.0 * math.pi)
    a = complex(math.cos(angle), math.sin(angle))
    if group in (GroupKind.LINEAR, GroupKind.AFFINE):
        a *= math.exp(rng.uniform(-2.0, 2.0))
    b = 0j
    if group in (GroupKind.ISOMETRY, GroupKind.AFFINE):
        b = complex(*rng.uniform(-10.0, 10.0, 2))
    return AffineWitness(a, b)
