"""Compare the compiled and pure-Python measurement kernels.

Usage: python3 benchmarks/bench_kernels.py [--repeat N]
"""
import argparse
import time

import numpy as np

from deformed_discord import kernels
from deformed_discord.oracle import discord_numeric
from deformed_discord.states import CatBasis, werner_from_basis


def states(n, seed=0):
    rng = np.random.default_rng(seed)
    out = [werner_from_basis(p, CatBasis.from_overlap(0.6)) for p in np.linspace(0, 1, n // 2)]
    for _ in range(n - len(out)):
        g = rng.normal(size=(4, 4)) + 1j * rng.normal(size=(4, 4))
        rho = g @ g.conj().T
        out.append(rho / np.trace(rho).real)
    return out


def time_backend(name, rhos, repeat):
    best = float("inf")
    values = None
    for _ in range(repeat):
        t0 = time.perf_counter()
        values = [discord_numeric(r, backend=name).value for r in rhos]
        best = min(best, time.perf_counter() - t0)
    return best, np.array(values)


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--states", type=int, default=60)
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()

    rhos = states(args.states)
    backends = ["python"]
    try:
        kernels.get_backend("cython")
        backends.insert(0, "cython")
    except ImportError:
        print("compiled extension not built; timing the fallback only")

    results = {name: time_backend(name, rhos, args.repeat) for name in backends}
    for name, (t, _) in results.items():
        print(f"{name:>7}: {t:8.4f} s  ({1e3 * t / len(rhos):.3f} ms per discord)")
    if len(results) == 2:
        (tc, vc), (tp, vp) = results["cython"], results["python"]
        print(f"speedup: {tp / tc:.1f}x, max |difference| = {np.max(np.abs(vc - vp)):.2e}")


if __name__ == "__main__":
    main()
