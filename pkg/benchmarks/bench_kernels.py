"""Compare the compiled and pure-Python orbit kernels.

Usage: python benchmarks/bench_kernels.py
"""

import time

from kronkit._kernels import available_implementations
from kronkit.zoo import FamilySpec, zoo_build

CASES = [
    ("symmetric 4, d=3", FamilySpec("symmetric", (4,)), 3),
    ("symmetric 5, d=2", FamilySpec("symmetric", (5,)), 2),
    ("psl2 7, d=2", FamilySpec("psl2", (7,)), 2),
    ("extraspecial2 (2,0), d=3", FamilySpec("extraspecial2", (2, 0)), 3),
]


def run(impl, G, d):
    mul_flat = [v for row in G.mul for v in row]
    gens = list(G.generating_set()) or [0]
    t0 = time.perf_counter()
    root = impl.conjugation_orbit_roots(mul_flat, list(G.inv), gens, G.order, d)
    dt = time.perf_counter() - t0
    orbits = sum(1 for t, r in enumerate(root) if r == t)
    return dt, orbits


def main():
    impls = available_implementations()
    print(f"kernels available: {', '.join(sorted(impls))}")
    for name, spec, d in CASES:
        G = zoo_build(spec)
        row = [f"{name:28s} |G|^d = {G.order**d:>9}"]
        counts = set()
        for iname in sorted(impls):
            dt, orbits = run(impls[iname], G, d)
            counts.add(orbits)
            row.append(f"{iname}: {dt * 1000:8.1f} ms")
        assert len(counts) == 1, "kernel outputs disagree"
        row.append(f"orbits: {counts.pop()}")
        print("  ".join(row))


if __name__ == "__main__":
    main()
