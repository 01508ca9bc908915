"""Complex-plane n-gons and the Hilbert-space operations on them.

An n-gon is an ordered tuple of points of the complex plane. Points are
plain Python ``complex`` values; a :class:`Polygon` wraps a read-only
``complex128`` array so that the deviation formulas can use vectorized
numpy arithmetic.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from numbers import Complex, Real
from typing import Iterable, Union

import numpy as np


class DimensionError(ValueError):
    """Two polygons that must share a vertex count do not."""


class DomainError(ValueError):
    """An argument lies outside the domain of an operation."""


PointLike = Union[complex, float, int, tuple, list]


def as_point(value: PointLike) -> complex:
    """Coerce ``value`` to a finite complex number.

    Accepts a number or a ``(re, im)`` pair. NaN and infinite coordinates
    are rejected rather than propagated.
    """
    if isinstance(value, (tuple, list, np.ndarray)):
        if len(value) != 2:
            raise ValueError(f"expected an (re, im) pair, got {value!r}")
        re, im = value
        if not isinstance(re, Real) or not isinstance(im, Real) or isinstance(re, bool) or isinstance(im, bool):
            raise ValueError(f"coordinates must be real numbers, got {value!r}")
        z = complex(float(re), float(im))
    elif isinstance(value, Complex) and not isinstance(value, bool):
        z = complex(value)
    else:
        raise ValueError(f"cannot interpret {value!r} as a point")
    if not (math.isfinite(z.real) and math.isfinite(z.imag)):
        raise ValueError(f"non-finite coordinate in {value!r}")
    return z


class Polygon:
    """An ordered n-gon in the complex plane, n >= 1.

    Vertices are matched index-to-index by every binary operation, so
    their order is part of the value.
    """

    __slots__ = ("_z",)

    def __init__(self, vertices: Iterable[PointLike] | np.ndarray):
        if isinstance(vertices, Polygon):
            z = vertices._z
        elif isinstance(vertices, np.ndarray) and vertices.ndim == 1:
            z = np.array(vertices, dtype=np.complex128)
            if not np.all(np.isfinite(z)):
                raise ValueError("non-finite vertex coordinate")
        else:
            z = np.array([as_point(v) for v in vertices], dtype=np.complex128)
        if z.ndim != 1 or len(z) < 1:
            raise ValueError("a polygon needs at least one vertex")
        z.flags.writeable = False
        self._z = z

    @property
    def vertices(self) -> np.ndarray:
        """Read-only ``complex128`` array of the vertices."""
        return self._z

    def __len__(self) -> int:
        return len(self._z)

    def __iter__(self):
        return (complex(v) for v in self._z)

    def __getitem__(self, k: int) -> complex:
        return complex(self._z[k])

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Polygon):
            return NotImplemented
        return len(self) == len(other) and bool(np.all(self._z == other._z))

    def __hash__(self) -> int:
        return hash(tuple(self))

    def __repr__(self) -> str:
        pts = ", ".join(f"{v.real:.6g}{v.imag:+.6g}j" for v in self)
        return f"{type(self).__name__}([{pts}])"

    # Arithmetic returns plain Polygons; shifting a Triangle stays a Triangle
    # through ``_like``.
    def _like(self, z: np.ndarray) -> "Polygon":
        return type(self)(z)

    def __add__(self, other) -> "Polygon":
        if isinstance(other, Polygon):
            _check_same_length(self, other)
            return self._like(self._z + other._z)
        return self._like(self._z + as_point(other))

    __radd__ = __add__

    def __sub__(self, other) -> "Polygon":
        if isinstance(other, Polygon):
            _check_same_length(self, other)
            return self._like(self._z - other._z)
        return self._like(self._z - as_point(other))

    def __mul__(self, scalar) -> "Polygon":
        return self._like(self._z * as_point(scalar))

    __rmul__ = __mul__

    def __truediv__(self, scalar) -> "Polygon":
        return self._like(self._z / as_point(scalar))

    def __neg__(self) -> "Polygon":
        return self._like(-self._z)

    def conjugate(self) -> "Polygon":
        return self._like(np.conj(self._z))

    def is_constant(self) -> bool:
        return bool(np.all(self._z == self._z[0]))

    def to_pairs(self) -> list[list[float]]:
        return [[v.real, v.imag] for v in self]


@dataclass(frozen=True)
class AffineWitness:
    """The map ``z -> a*z + b``.

    ``attained`` is False when the infimum of a deviation sits on the
    boundary ``a -> 0`` of the group; ``a`` is then 0 and the map is the
    constant ``z -> b`` that the orbit approaches.
    """

    a: complex = 1 + 0j
    b: complex = 0j
    attained: bool = True

    def __post_init__(self):
        object.__setattr__(self, "a", as_point(self.a))
        object.__setattr__(self, "b", as_point(self.b))
        if self.attained and self.a == 0:
            raise DomainError("an attained witness needs a non-zero multiplier")
        if not self.attained and self.a != 0:
            raise DomainError("a boundary witness has multiplier 0")

    def __call__(self, x: Polygon) -> Polygon:
        return apply_affine(self, x)


def _check_same_length(x: Polygon, y: Polygon) -> None:
    if len(x) != len(y):
        raise DimensionError(f"polygons have {len(x)} and {len(y)} vertices")


def inner_product(x: Polygon, y: Polygon) -> complex:
    """Return ``sum(x_k * conj(y_k))``."""
    _check_same_length(x, y)
    # np.vdot conjugates its first argument.
    return complex(np.vdot(y.vertices, x.vertices))


def _euclidean(v: np.ndarray) -> float:
    # math.hypot rescales internally, so tiny or huge coordinates do not underflow.
    return math.hypot(*np.abs(v).tolist())


def norm(x: Polygon) -> float:
    return _euclidean(x.vertices)


def distance(x: Polygon, y: Polygon) -> float:
    _check_same_length(x, y)
    return _euclidean(x.vertices - y.vertices)


def centroid(x: Polygon) -> complex:
    return complex(np.mean(x.vertices))


def centered(x: Polygon) -> Polygon:
    """``x`` shifted so that its centroid is the origin."""
    return x - centroid(x)


def apply_affine(w: AffineWitness, x: Polygon) -> Polygon:
    return x._like(w.a * x.vertices + w.b)
