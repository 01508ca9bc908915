"""Brute-force minimization of ``distance(g(x), y)`` over a transformation group.

This is the independent check for the closed forms in
:mod:`orbitdev.deviations`: it never looks at an inner product or a
closed-form witness, it only evaluates residuals on a grid and polishes
the best grid point with a bounded scalar search (one-parameter groups)
or Nelder-Mead simplex descent (two-parameter multipliers).

The shift of the isometry and affine groups is eliminated by matching
centroids; for a fixed multiplier ``a`` that is the exact least-squares
shift. The affine search additionally polishes ``(a, b)`` jointly as a
four-parameter simplex so the shift is searched too.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np
from scipy.optimize import minimize, minimize_scalar

from .deviations import GroupKind
from .polygon import Polygon, _check_same_length

#: objective rows evaluated per numpy block in the grid stage
_GRID_BLOCK = 1 << 15


def _default_scales() -> tuple[float, ...]:
    return tuple(float(v) for v in np.logspace(-3.0, 3.0, 64))


@dataclass(frozen=True)
class OracleConfig:
    angle_samples: int = 4096
    scale_grid: tuple[float, ...] = field(default_factory=_default_scales)
    refine_iters: int = 200
    tolerance: float = 1e-8

    def __post_init__(self):
        if self.angle_samples < 16:
            raise ValueError("angle_samples must be at least 16")
        if not self.tolerance > 0:
            raise ValueError("tolerance must be positive")
        if not self.scale_grid or min(self.scale_grid) <= 0:
            raise ValueError("scale_grid must hold positive scales")
        if self.refine_iters < 1:
            raise ValueError("refine_iters must be positive")


def _residuals(a: np.ndarray, x: np.ndarray, y: np.ndarray) -> np.ndarray:
    """``|a_j * x - y|`` for every multiplier ``a_j``, evaluated blockwise."""
    out = np.empty(len(a))
    for start in range(0, len(a), _GRID_BLOCK):
        block = a[start : start + _GRID_BLOCK, None]
        out[start : start + _GRID_BLOCK] = np.linalg.norm(block * x[None, :] - y[None, :], axis=1)
    return out


def _min_over_circle(x: np.ndarray, y: np.ndarray, cfg: OracleConfig) -> float:
    n = cfg.angle_samples
    step = 2.0 * math.pi / n
    angles = step * np.arange(n)
    values = _residuals(np.exp(1j * angles), x, y)
    k = int(np.argmin(values))
    best = float(values[k])
    centre = angles[k]

    def sq(delta: float) -> float:
        r = np.exp(1j * (centre + delta)) * x - y
        return float(np.vdot(r, r).real)

    # Search the offset from the best sample so the bracket is centred on 0
    # and the absolute x-tolerance is not swamped by |angle|.
    res = minimize_scalar(sq, bounds=(-step, step), method="bounded", options={"xatol": 1e-15, "maxiter": 500})
    return min(best, math.sqrt(max(res.fun, 0.0)))


def _nelder_mead(fun, start: np.ndarray, steps: np.ndarray, cfg: OracleConfig) -> tuple[np.ndarray, float]:
    point, value = np.asarray(start, dtype=float), float(fun(start))
    for _ in range(8):
        simplex = np.vstack([point] + [point + np.diag(steps)[i] for i in range(len(point))])
        res = minimize(
            fun,
            point,
            method="Nelder-Mead",
            options={
                "initial_simplex": simplex,
                "maxiter": cfg.refine_iters,
                "xatol": 1e-14,
                "fatol": 1e-3 * cfg.tolerance,
            },
        )
        improved = value - res.fun
        if res.fun < value:
            point, value = res.x, float(res.fun)
        if improved <= 1e-3 * cfg.tolerance * (1.0 + value):
            break
        steps = np.maximum(np.abs(steps) * 0.1, 1e-12)
    return point, value


def _min_over_multipliers(x: np.ndarray, y: np.ndarray, cfg: OracleConfig) -> tuple[complex, float]:
    """Best ``a != 0`` for ``|a*x - y|``: (angle x scale) grid, then simplex polish."""
    n = cfg.angle_samples
    step = 2.0 * math.pi / n
    scales = np.asarray(cfg.scale_grid, dtype=float)
    phases = np.exp(1j * step * np.arange(n))
    grid = (scales[:, None] * phases[None, :]).ravel()
    values = _residuals(grid, x, y)
    j = int(np.argmin(values))
    a0 = complex(grid[j])

    def fun(p: np.ndarray) -> float:
        return float(np.linalg.norm(complex(p[0], p[1]) * x - y))

    ratio = scales[1] / scales[0] if len(scales) > 1 else 2.0
    h = abs(a0) * max(step, ratio - 1.0)
    point, value = _nelder_mead(fun, np.array([a0.real, a0.imag]), np.array([h, h]), cfg)
    return complex(point[0], point[1]), min(value, float(values[j]))


def oracle_min(group: GroupKind | str, x: Polygon, y: Polygon, cfg: OracleConfig | None = None) -> float:
    """Numerically approximate ``inf { distance(g(x), y) : g in group }``.

    For the linear group a zero ``x`` and for the affine group a constant
    ``x`` have a one-point orbit (up to shift), and the distance to it is
    returned directly.
    """
    cfg = cfg or OracleConfig()
    group = GroupKind(group)
    _check_same_length(x, y)
    xv, yv = x.vertices, y.vertices

    if group is GroupKind.ROTATION:
        return _min_over_circle(xv, yv, cfg)
    if group is GroupKind.ISOMETRY:
        return _min_over_circle(xv - xv.mean(), yv - yv.mean(), cfg)
    if group is GroupKind.LINEAR:
        if not np.any(xv):
            return float(np.linalg.norm(yv))
        return _min_over_multipliers(xv, yv, cfg)[1]

    x0, y0 = xv.mean(), yv.mean()
    if np.all(xv == xv[0]):
        return float(np.linalg.norm(yv - y0))
    a, value = _min_over_multipliers(xv - x0, yv - y0, cfg)
    b = y0 - a * x0

    def fun(p: np.ndarray) -> float:
        return float(np.linalg.norm(complex(p[0], p[1]) * xv + complex(p[2], p[3]) - yv))

    h = max(abs(a), 1e-6) * 1e-4
    hb = max(abs(b), 1.0) * 1e-4
    _, joint = _nelder_mead(fun, np.array([a.real, a.imag, b.real, b.imag]), np.array([h, h, hb, hb]), cfg)
    return min(value, joint)
