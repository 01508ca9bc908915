import math
import os

import numpy as np
import pytest
from hypothesis import settings
from hypothesis import strategies as st

from orbitdev import Polygon, Triangle

settings.register_profile("thorough", max_examples=1000, deadline=None)
settings.register_profile("default", deadline=None)
settings.load_profile(os.environ.get("HYPOTHESIS_PROFILE", "default"))

# magnitudes below 1e-100 would make optimal multipliers overflow
coords = st.one_of(st.just(0.0), st.floats(1e-100, 10), st.floats(-10, -1e-100))
points = st.builds(complex, coords, coords)


def polygons(min_size=1, max_size=8):
    return st.lists(points, min_size=min_size, max_size=max_size).map(Polygon)


@st.composite
def polygon_pairs(draw, min_size=1, max_size=8):
    n = draw(st.integers(min_size, max_size))
    x = draw(st.lists(points, min_size=n, max_size=n))
    y = draw(st.lists(points, min_size=n, max_size=n))
    return Polygon(x), Polygon(y)


triangles = st.lists(points, min_size=3, max_size=3).map(Triangle)


@st.composite
def group_elements(draw, scaled=True, shifted=True):
    angle = draw(st.floats(0, 2 * math.pi))
    a = complex(math.cos(angle), math.sin(angle))
    if scaled:
        a *= math.exp(draw(st.floats(-2, 2)))
    b = complex(draw(coords), draw(coords)) if shifted else 0j
    return a, b


def random_polygon(rng: np.random.Generator, n: int) -> Polygon:
    return Polygon(rng.uniform(-10, 10, n) + 1j * rng.uniform(-10, 10, n))


def random_triangle(rng: np.random.Generator) -> Triangle:
    return Triangle(rng.uniform(-10, 10, 3) + 1j * rng.uniform(-10, 10, 3))


def close(a: float, b: float, rel: float, abs_: float = 0.0) -> bool:
    return abs(a - b) <= max(rel * max(abs(a), abs(b)), abs_)


@pytest.fixture
def rng():
    return np.random.default_rng(12345)
