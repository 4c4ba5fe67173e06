#!/usr/bin/env python3
"""Time the compiled and numpy kernels on the twelve presets.

    python benchmarks/bench_kernels.py [--samples 512] [--members 200] [--repeat 3]

Reports the best wall time per backend and the largest disagreement between
the two on the same inputs.
"""
from argparse import ArgumentParser
import time

import numpy as np

from varreg import kernels
from varreg.presets import PRESETS
from varreg.region import uniform_thetas
from varreg.samplers import _pack, random_members


def best_of(fn, repeat):
    times = []
    for _ in range(repeat):
        t0 = time.perf_counter()
        out = fn()
        times.append(time.perf_counter() - t0)
    return min(times), out


def main():
    p = ArgumentParser()
    p.add_argument("--samples", type=int, default=512)
    p.add_argument("--members", type=int, default=200)
    p.add_argument("--repeat", type=int, default=3)
    p.add_argument("--tol", type=float, default=1e-10)
    P = p.parse_args()

    names = kernels.available_backends()
    if "compiled" not in names:
        print("compiled kernels not built; timing the numpy backend only")
    a = np.exp(1j * uniform_thetas(P.samples))

    print(f"{'preset':<7}{'kernel':<10}" + "".join(f"{n:>12}" for n in names) + f"{'speedup':>10}{'max diff':>12}")
    totals = {n: 0.0 for n in names}
    for pid, preset in PRESETS.items():
        lam, z0 = preset.lam, preset.z0
        zeros, counts, lead = _pack(random_members(0, preset.params, P.members))
        jobs = {
            "extremal": lambda m: m.extremal_batch(a, lam, z0, P.tol, 2 ** 15),
            "member": lambda m: m.member_batch(zeros, counts, lead, lam, z0, P.tol, 2 ** 15),
        }
        for kind, job in jobs.items():
            times, vals = {}, {}
            for n in names:
                times[n], out = best_of(lambda: job(kernels.backend(n)), P.repeat)
                vals[n] = out[0]
                totals[n] += times[n]
            diff = np.max(np.abs(vals[names[0]] - vals[names[-1]]) / np.maximum(1, np.abs(vals[names[-1]])))
            speed = times["python"] / times["compiled"] if len(names) == 2 else 1.0
            print(f"{pid:<7}{kind:<10}" + "".join(f"{times[n] * 1e3:10.2f}ms" for n in names)
                  + f"{speed:9.1f}x{diff:12.2e}")
    print("total   " + " ".join(f"{n}={totals[n]:.3f}s" for n in names))


if __name__ == "__main__":
    main()
