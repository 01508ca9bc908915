"""Regenerate src/orbitdev/data/regression.csv (50 triangles, every classification)."""

import csv
import math
from pathlib import Path

import numpy as np

OUT = Path(__file__).resolve().parents[1] / "src" / "orbitdev" / "data" / "regression.csv"
W = complex(-0.5, math.sqrt(3) / 2)


def regular(scale, angle, shift):
    base = np.array([1, W, W.conjugate()]) / math.sqrt(3)
    return base * scale * complex(math.cos(angle), math.sin(angle)) + shift


def main():
    rng = np.random.default_rng(20240519)
    rows = [
        # singular
        [0, 0, 0, 0, 0, 0],
        [1.5, -2, 1.5, -2, 1.5, -2],
        [1000, 1000, 1000, 1000, 1000, 1000],
        [-7.25, 3.5, -7.25, 3.5, -7.25, 3.5],
        # linear, not singular
        [0, 0, 2, 0, 1, 0],
        [0, 0, 1, 1, 3, 3],
        [0, 0, 0, 0, 2, 1],
        [1, 2, 1, 5, 1, -4],
        [-2, 0, 4, 0, 1, 0],
        [0, 0, 2, 4, 1, 2],
        [5, 5, 5, 5, 5, 6],
        [-3, -1, 0, 0, 6, 2],
    ]
    for k in range(6):
        z = regular(rng.uniform(0.1, 20), rng.uniform(0, 2 * math.pi), complex(*rng.uniform(-10, 10, 2)))
        rows.append([v for p in z for v in (p.real, p.imag)])
    for k in range(6):
        z = regular(rng.uniform(0.1, 20), rng.uniform(0, 2 * math.pi), complex(*rng.uniform(-10, 10, 2))).conjugate()
        rows.append([v for p in z for v in (p.real, p.imag)])
    for want in (1, -1):
        count = 0
        while count < 13:
            z = rng.uniform(-10, 10, 3) + 1j * rng.uniform(-10, 10, 3)
            cross = ((z[1] - z[0]).conjugate() * (z[2] - z[0])).imag
            if np.sign(cross) != want or abs(cross) < 1.0:
                continue
            rows.append([v for p in z for v in (p.real, p.imag)])
            count += 1
    with OUT.open("w", newline="") as fh:
        writer = csv.writer(fh, lineterminator="\n")
        writer.writerow(["x1", "y1", "x2", "y2", "x3", "y3"])
        for row in rows:
            writer.writerow([format(float(v), ".17g") for v in row])
    print(f"wrote {len(rows)} rows to {OUT}")


if __name__ == "__main__":
    main()
