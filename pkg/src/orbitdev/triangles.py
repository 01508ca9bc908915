"""Triangle asymmetry metrics measured against the unit regular triangle.

Everything except :func:`symmetric_components` and the vertex form of
:func:`unbalance_factor` depends on the side lengths and the orientation
sign only. The side-length expressions are evaluated in
cancellation-free form: the normalized area through Kahan's stable Heron
product and ``1 - normalized_area`` through the sum of squared
differences of the squared sides. Both are algebraically identical to
the quadrofactor forms ``sqrt(3 - 6q)`` and ``1 - sqrt(3 - 6q)``, but
keep full relative precision for nearly regular and nearly flat
triangles.
"""

from __future__ import annotations

import enum
import math
from dataclasses import InitVar, asdict, dataclass
from typing import Union

import numpy as np

from .polygon import DomainError, Polygon

SQRT3 = math.sqrt(3.0)
#: primitive cube root of unity e^{2 pi i / 3}
OMEGA = complex(-0.5, SQRT3 / 2.0)

#: relative slack for the triangle inequality on raw side triples
SIDE_RTOL = 1e-12
#: relative spread of side lengths below which a triangle counts as equilateral
EQUILATERAL_RTOL = 1e-9
#: unbalance ratios above this are reported as infinity
INFINITE_UNBALANCE = 1e12


class Triangle(Polygon):
    """A polygon with exactly three vertices ``(z1, z2, z3)``."""

    __slots__ = ()

    def __init__(self, vertices):
        super().__init__(vertices)
        if len(self) != 3:
            raise ValueError(f"a triangle has 3 vertices, got {len(self)}")


#: the unit regular counter-clockwise triangle with centroid 0
DELTA = Triangle(np.array([1.0, OMEGA, OMEGA.conjugate()]) / SQRT3)


class Classification(enum.Enum):
    SINGULAR = "Singular"
    LINEAR_NON_SINGULAR = "LinearNonSingular"
    REGULAR_CCW = "RegularCCW"
    REGULAR_CW = "RegularCW"
    GENERIC_CCW = "GenericCCW"
    GENERIC_CW = "GenericCW"


@dataclass(frozen=True)
class TriangleSides:
    """Side lengths ``a = |z1-z2|``, ``b = |z2-z3|``, ``c = |z3-z1|`` and orientation.

    ``sign`` is +1 for counter-clockwise, -1 for clockwise or singular and
    0 for collinear non-singular triangles. With ``strict`` (the default)
    the triple must be realizable: it satisfies the triangle inequality,
    ``sign`` is 0 exactly when the inequality is tight, and the all-zero
    triple carries ``sign = -1``. :func:`side_lengths` skips the tightness
    rule because it determines the sign from the vertices themselves.
    """

    a: float
    b: float
    c: float
    sign: int
    strict: InitVar[bool] = True

    def __post_init__(self, strict):
        for name in "abc":
            v = getattr(self, name)
            if isinstance(v, bool) or not isinstance(v, (int, float, np.floating, np.integer)):
                raise DomainError(f"side {name} must be a real number, got {v!r}")
            v = float(v)
            if not math.isfinite(v) or v < 0:
                raise DomainError(f"side {name} must be finite and non-negative, got {v!r}")
            object.__setattr__(self, name, v)
        if self.sign not in (-1, 0, 1) or isinstance(self.sign, bool):
            raise DomainError(f"sign must be -1, 0 or 1, got {self.sign!r}")
        object.__setattr__(self, "sign", int(self.sign))
        if not strict:
            return
        if self.is_singular():
            if self.sign != -1:
                raise DomainError("a singular triangle has orientation -1")
            return
        slack = _inequality_slack(self.a, self.b, self.c)
        longest = max(self.a, self.b, self.c)
        if slack < -SIDE_RTOL * longest:
            raise DomainError(f"sides {self.a}, {self.b}, {self.c} violate the triangle inequality")
        tight = slack <= SIDE_RTOL * longest
        if tight and self.sign != 0:
            raise DomainError("a degenerate side triple must have orientation 0")
        if not tight and self.sign == 0:
            raise DomainError("orientation 0 requires collinear sides (a tight triangle inequality)")

    def is_singular(self) -> bool:
        return self.a == 0.0 and self.b == 0.0 and self.c == 0.0

    @property
    def sum_of_squares(self) -> float:
        return self.a**2 + self.b**2 + self.c**2

    @property
    def u(self) -> float:
        """Root-mean-square side length."""
        scale, a, b, c = _scaled(self)
        return scale * math.sqrt((a * a + b * b + c * c) / 3.0)

    def conjugate(self) -> "TriangleSides":
        """Sides of the mirror image; singular triangles keep sign -1."""
        sign = self.sign if self.is_singular() else -self.sign
        return TriangleSides(self.a, self.b, self.c, sign, strict=False)


def _inequality_slack(a: float, b: float, c: float) -> float:
    x, y, z = sorted((a, b, c), reverse=True)
    return (y - x) + z


TriangleLike = Union[Triangle, TriangleSides]


def _as_triangle(t) -> Triangle:
    return t if isinstance(t, Triangle) else Triangle(t)


def signed_double_area(t: Triangle) -> float:
    """``Im(conj(z2 - z1) * (z3 - z1))``, positive for counter-clockwise."""
    z1, z2, z3 = _as_triangle(t)
    return ((z2 - z1).conjugate() * (z3 - z1)).imag


def shoelace_area(t: Triangle) -> float:
    return abs(signed_double_area(t)) / 2.0


def orientation(t: Triangle) -> int:
    """+1 counter-clockwise, -1 clockwise or singular, 0 collinear non-singular.

    Collinearity uses the scale-aware cutoff ``|2A| <= 1e-12 * max(1, u^2)``.
    """
    t = _as_triangle(t)
    z1, z2, z3 = t
    if z1 == z2 == z3:
        return -1
    twice_area = signed_double_area(t)
    u2 = (abs(z1 - z2) ** 2 + abs(z2 - z3) ** 2 + abs(z3 - z1) ** 2) / 3.0
    if abs(twice_area) <= 1e-12 * max(1.0, u2):
        return 0
    return 1 if twice_area > 0 else -1


def side_lengths(t: Triangle) -> TriangleSides:
    t = _as_triangle(t)
    z1, z2, z3 = t
    return TriangleSides(abs(z1 - z2), abs(z2 - z3), abs(z3 - z1), orientation(t), strict=False)


def _coerce_sides(s) -> TriangleSides:
    if isinstance(s, TriangleSides):
        return s
    if isinstance(s, Triangle):
        return side_lengths(s)
    raise TypeError(f"expected TriangleSides or Triangle, got {type(s).__name__}")


def _stable_area(a: float, b: float, c: float) -> float:
    # Kahan's ordering of Heron's product; exact for degenerate triples.
    # Each factor is rooted separately so the product cannot under- or overflow.
    x, y, z = sorted((a, b, c), reverse=True)
    factors = (x + (y + z), z - (x - y), z + (x - y), x + (y - z))
    return 0.25 * math.prod(math.sqrt(max(f, 0.0)) for f in factors)


def _scaled(s: TriangleSides) -> tuple[float, float, float, float]:
    """``(scale, a, b, c)`` with the sides divided by a power of two near the longest.

    Power-of-two scaling is exact, so tight triples stay tight.
    """
    longest = max(s.a, s.b, s.c)
    if longest == 0.0:
        return 1.0, 0.0, 0.0, 0.0
    scale = math.ldexp(1.0, math.frexp(longest)[1])
    return scale, s.a / scale, s.b / scale, s.c / scale


def heron_area(s: TriangleSides | tuple[float, float, float]) -> float:
    """Area from side lengths, ``1/4 sqrt((a²+b²+c²)² - 2(a⁴+b⁴+c⁴))``.

    Raises :class:`DomainError` for a raw triple that violates the
    triangle inequality.
    """
    if isinstance(s, TriangleSides):
        return _stable_area(s.a, s.b, s.c)
    a, b, c = (float(v) for v in s)
    if min(a, b, c) < 0 or _inequality_slack(a, b, c) < -SIDE_RTOL * max(a, b, c):
        raise DomainError(f"sides {a}, {b}, {c} violate the triangle inequality")
    return _stable_area(a, b, c)


def quadrofactor(s: TriangleLike) -> float:
    """``(a⁴+b⁴+c⁴) / (a²+b²+c²)²``, clamped into [1/3, 1/2]; 1/2 for singular triangles."""
    s = _coerce_sides(s)
    if s.is_singular():
        return 0.5
    _, a, b, c = _scaled(s)
    q = (a**4 + b**4 + c**4) / (a * a + b * b + c * c) ** 2
    return min(max(q, 1.0 / 3.0), 0.5)


def normalized_area(s: TriangleLike) -> float:
    """``4 sqrt(3) A / (a²+b²+c²)``, which equals ``sqrt(3 - 6q)``."""
    s = _coerce_sides(s)
    if s.is_singular():
        return 0.0
    _, a, b, c = _scaled(s)
    return min(4.0 * SQRT3 * _stable_area(a, b, c) / (a * a + b * b + c * c), 1.0)


def _regularity_gap(s: TriangleSides) -> float:
    """``1 - sqrt(3 - 6q)`` without cancellation.

    Uses ``1 - (3 - 6q) = 2 * sum((a²-b²)²) / (a²+b²+c²)²``.
    """
    if s.is_singular():
        return 1.0
    _, a, b, c = _scaled(s)
    a2, b2, c2 = a * a, b * b, c * c
    s2 = a2 + b2 + c2
    spread = ((a2 - b2) ** 2 + (b2 - c2) ** 2 + (c2 - a2) ** 2) / s2**2
    eta = normalized_area(s)
    return min(max(2.0 * spread / (1.0 + eta), 0.0), 1.0)


def _signed_terms(s: TriangleSides) -> tuple[float, float]:
    """``(1 - sign*eta, 1 + sign*eta)`` with ``eta`` the normalized area.

    A singular triangle gets ``sign*eta = -1``: its affine orbit is the set
    of constant triangles, at distance ``|DELTA| = 1`` from ``DELTA``, which is
    the value of the equilateral clockwise limit. The convention ``q = 1/2``
    would give ``1/sqrt(2)`` there, which is not the infimum.
    """
    if s.is_singular():
        return 2.0, 0.0
    if s.sign == 0:
        return 1.0, 1.0
    gap, eta = _regularity_gap(s), normalized_area(s)
    if s.sign > 0:
        return gap, 1.0 + eta
    return 1.0 + eta, gap


def isometric_deviation_from_delta(s: TriangleLike) -> float:
    """Isometric deviation from :data:`DELTA`, from sides and orientation.

    ``sqrt(1 + u² - sqrt(2) u sqrt(1 + sign sqrt(3 - 6q)))``, rearranged as
    ``(1 - u)² + 2u (1 - sign*eta) / (2 + sqrt(2 (1 + sign*eta)))``.
    """
    s = _coerce_sides(s)
    u = s.u
    minus, plus = _signed_terms(s)
    radicand = (1.0 - u) ** 2 + 2.0 * u * minus / (2.0 + math.sqrt(2.0 * plus))
    return math.sqrt(max(radicand, 0.0))


def affine_deviation_from_delta(s: TriangleLike) -> float:
    """Affine deviation from :data:`DELTA`: ``sqrt((1 - sign sqrt(3 - 6q)) / 2)``."""
    s = _coerce_sides(s)
    minus, _ = _signed_terms(s)
    return min(math.sqrt(0.5 * minus), 1.0)


def symmetric_components(t: Triangle) -> tuple[complex, complex, complex]:
    """Fortescue ``(positive, negative, zero)`` sequence components of the vertices."""
    z1, z2, z3 = _as_triangle(t)
    w, wc = OMEGA, OMEGA.conjugate()
    positive = (z1 + z2 * wc + z3 * w) / 3.0
    negative = (z1 + z2 * w + z3 * wc) / 3.0
    zero = (z1 + z2 + z3) / 3.0
    return positive, negative, zero


def unbalance_factor(t: TriangleLike) -> float:
    """Ratio ``|negative| / |positive|`` of the symmetric components.

    A :class:`Triangle` is evaluated from its components, a
    :class:`TriangleSides` from ``sqrt((1 - sign*eta) / (1 + sign*eta))``.
    Returns ``math.inf`` when the positive component vanishes (ratios above
    :data:`INFINITE_UNBALANCE`). A singular triangle has both components
    zero and is reported as ``inf``, matching its affine deviation 1.
    """
    if isinstance(t, TriangleSides):
        minus, plus = _signed_terms(t)
        if minus > INFINITE_UNBALANCE**2 * plus:
            return math.inf
        return math.sqrt(minus / plus)
    positive, negative, _ = symmetric_components(t)
    pos, neg = abs(positive), abs(negative)
    if neg >= INFINITE_UNBALANCE * pos:
        return math.inf
    return neg / pos


def affine_to_unbalance(d: float) -> float:
    """Unbalance factor ``K = d / sqrt(1 - d²)`` for an affine deviation ``d`` in [0, 1]."""
    if not 0.0 <= d <= 1.0:
        raise DomainError(f"affine deviation must lie in [0, 1], got {d!r}")
    if d == 1.0:
        return math.inf
    return d / math.sqrt((1.0 - d) * (1.0 + d))


def unbalance_to_affine(k: float) -> float:
    """Affine deviation ``d = K / sqrt(1 + K²)``; ``K = inf`` maps to 1."""
    if math.isnan(k) or k < 0:
        raise DomainError(f"unbalance factor must be non-negative, got {k!r}")
    if math.isinf(k):
        return 1.0
    return k / math.hypot(1.0, k)


def is_equilateral(s: TriangleSides) -> bool:
    longest = max(s.a, s.b, s.c)
    return longest - min(s.a, s.b, s.c) <= EQUILATERAL_RTOL * longest


def classify(s: TriangleLike) -> Classification:
    s = _coerce_sides(s)
    if s.is_singular():
        return Classification.SINGULAR
    if s.sign == 0:
        return Classification.LINEAR_NON_SINGULAR
    if is_equilateral(s):
        return Classification.REGULAR_CCW if s.sign > 0 else Classification.REGULAR_CW
    return Classification.GENERIC_CCW if s.sign > 0 else Classification.GENERIC_CW


def triangle_from_sides(s: TriangleSides) -> Triangle:
    """Canonical placement ``z1 = 0``, ``z2 = a``, ``z3 = c e^{±iβ}``.

    ``β`` is the angle at ``z1``. ``z3`` is built from its projection on the
    real axis and the height ``2A / a``, with the sides rescaled by a power
    of two near the longest one so that tiny or huge triangles neither
    underflow nor overflow. Collinear input (``sign = 0``) is placed on the
    real axis, with ``z3 = ±c`` whichever reproduces ``b`` better.
    """
    if s.is_singular():
        return Triangle([0.0, 0.0, 0.0])
    if s.sign == 0:
        forward = abs(abs(s.c - s.a) - s.b) <= abs(s.c + s.a - s.b)
        return Triangle([0.0, s.a, s.c if forward else -s.c])
    scale, a, b, c = _scaled(s)
    if a == 0.0:
        return Triangle([0.0, 0.0, s.c])
    height = min(2.0 * _stable_area(a, b, c) / a, c)
    z3 = complex(0.5 * (a + (c - b) / a * (c + b)), s.sign * height)
    return Triangle([0.0, s.a, z3 * scale])


@dataclass(frozen=True)
class TriangleReport:
    u: float
    q: float
    normalized_area: float
    area: float
    sign: int
    isometric_dev: float
    affine_dev: float
    unbalance: float
    classification: Classification

    def as_dict(self) -> dict:
        d = asdict(self)
        d["classification"] = self.classification.value
        return d


def triangle_report(t: TriangleLike) -> TriangleReport:
    """All side-derived metrics of a triangle in one record.

    Vertex input is reduced to :func:`side_lengths` first, so every field
    (including ``unbalance``) comes from the side-length formulas.
    """
    s = _coerce_sides(t)
    return TriangleReport(
        u=s.u,
        q=quadrofactor(s),
        normalized_area=normalized_area(s),
        area=heron_area(s),
        sign=s.sign,
        isometric_dev=isometric_deviation_from_delta(s),
        affine_dev=affine_deviation_from_delta(s),
        unbalance=unbalance_factor(s),
        classification=classify(s),
    )
