#!/usr/bin/env python3
"""Bulk cross-validation of the two evolution routes.

Samples random built-in graphs and times, then compares the spectral
transition matrix against the series oracle and checks unitarity and the
group law. Prints the worst deviations observed.

Usage:
    python scripts/cross_validate.py [n_samples]
"""

import sys

sys.path.insert(0, "src")

import numpy as np

from pairwalk import circulant, complete, cycle, laplacian, path
from pairwalk.dynamics import expm_oracle, transition_matrix
from pairwalk.spectral import float_decompose


def random_graph(rng):
    kind = rng.choice(["path", "cycle", "complete", "circulant"])
    if kind == "path":
        return path(int(rng.integers(2, 13)))
    if kind == "cycle":
        return cycle(int(rng.integers(3, 13)))
    if kind == "complete":
        return complete(int(rng.integers(2, 13)))
    n = int(rng.integers(3, 13))
    pool = list(range(1, n // 2 + 1))
    take = [s for s in pool if rng.random() < 0.5] or [pool[0]]
    conns = set()
    for s in take:
        conns |= {s, (n - s) % n}
    return circulant(n, sorted(conns))


def main() -> int:
    n_samples = int(sys.argv[1]) if len(sys.argv) > 1 else 500
    rng = np.random.default_rng(2024)
    worst = {"route": 0.0, "unitarity": 0.0, "group": 0.0}
    cache = {}
    for _ in range(n_samples):
        g = random_graph(rng)
        which = rng.choice(["laplacian", "adjacency"])
        m = laplacian(g) if which == "laplacian" else g.adj
        key = (which, m.shape[0], m.tobytes())
        if key not in cache:
            cache[key] = float_decompose(m)
        dec = cache[key]
        t = float(rng.uniform(-10, 10))
        u = transition_matrix(dec, t)
        worst["route"] = max(worst["route"], float(np.abs(u - expm_oracle(m, t)).max()))
        worst["unitarity"] = max(
            worst["unitarity"], float(np.abs(u @ u.conj().T - np.eye(g.n)).max())
        )
        s = float(rng.uniform(-3, 3))
        worst["group"] = max(
            worst["group"],
            float(np.abs(transition_matrix(dec, t + s) - u @ transition_matrix(dec, s)).max()),
        )
    print(f"{n_samples} samples over {len(cache)} distinct matrices")
    print(f"  spectral vs series oracle : {worst['route']:.3e}")
    print(f"  unitarity                 : {worst['unitarity']:.3e}")
    print(f"  group law                 : {worst['group']:.3e}")
    ok = worst["route"] < 1e-9 and worst["unitarity"] < 1e-10 and worst["group"] < 1e-10
    print("all within tolerance" if ok else "TOLERANCE EXCEEDED")
    return 0 if ok else 1


if __name__ == "__main__":
    sys.exit(main())
