"""Compare the compiled history kernel against the pure-Python fallback.

Times the three hot kernel functions on synthetic histories of several
sizes, then one full scenario run per backend, and prints a small table.

Run from the repository root:

    python benchmarks/bench_kernels.py
"""
import random
import time
from array import array

from setd2d.trust import _histcore_py

try:
    from setd2d.trust import _histcore_c
except ImportError:
    _histcore_c = None

BACKENDS = {"python": _histcore_py}
if _histcore_c is not None:
    BACKENDS["compiled"] = _histcore_c

SIZES = (10, 100, 1000)
REPEATS = 5


def make_history(n, rng):
    ts = []
    t = 0.0
    for _ in range(n):
        t += rng.uniform(0.1, 30.0)
        ts.append(t)
    sf = array("d", (rng.random() for _ in range(n)))
    so = array("d", (rng.uniform(0.05, 1.0) for _ in range(n)))
    return sf, so, array("d", ts), t + 10.0


def time_call(fn, *args, loops=200):
    best = float("inf")
    for _ in range(REPEATS):
        start = time.perf_counter()
        for _ in range(loops):
            fn(*args)
        best = min(best, (time.perf_counter() - start) / loops)
    return best


def bench_kernels():
    rng = random.Random(0)
    rows = []
    for n in SIZES:
        sf, so, ts, t = make_history(n, rng)
        calls = {
            "windowed_opinion": lambda b: b.windowed_opinion(
                sf, so, ts, t, 0.5, 0.5, n),
            "opinion_stats": lambda b: b.opinion_stats(
                sf, so, ts, t, 0.5, 0.5, 20, 5),
            "sort_integrity": lambda b: b.sort_integrity(
                sf, so, ts, t, 0.5, 0.5, 0.5),
        }
        for name, call in calls.items():
            timings = {label: time_call(lambda: call(backend))
                       for label, backend in BACKENDS.items()}
            rows.append((name, n, timings))
    return rows


def bench_scenario():
    from setd2d.harness.config import Scenario
    from setd2d.harness import sim
    from setd2d.trust import kernels

    scenario = Scenario(n_nodes=30, frames=20, file_kbits=100.0,
                        malicious_fraction=0.3, seed=1)
    results = {}
    original = {k: getattr(kernels, k) for k in
                ("windowed_opinion", "opinion_stats", "sort_integrity")}
    try:
        for label, backend in BACKENDS.items():
            for k in original:
                setattr(kernels, k, getattr(backend, k))
            start = time.perf_counter()
            out = sim.run_scenario(scenario)
            results[label] = (time.perf_counter() - start,
                              out.summary()["mean_non_corrupted_kbits"])
    finally:
        for k, fn in original.items():
            setattr(kernels, k, fn)
    return results


def main():
    print(f"backends available: {', '.join(BACKENDS)}")
    print()
    print(f"{'kernel':<18} {'n':>5} " + "".join(f"{b:>12}" for b in BACKENDS)
          + ("     speedup" if len(BACKENDS) == 2 else ""))
    for name, n, timings in bench_kernels():
        cells = "".join(f"{timings[b] * 1e6:>10.1f}us" for b in BACKENDS)
        extra = ""
        if len(BACKENDS) == 2:
            extra = f"{timings['python'] / timings['compiled']:>11.1f}x"
        print(f"{name:<18} {n:>5} {cells}{extra}")
    print()
    scen = bench_scenario()
    for label, (elapsed, kbits) in scen.items():
        print(f"scenario ({label:>8}): {elapsed:6.2f}s  "
              f"mean_non_corrupted_kbits={kbits:.4f}")
    if len(scen) == 2:
        vals = [v[1] for v in scen.values()]
        agree = "identical" if vals[0] == vals[1] else "DIFFERENT"
        print(f"backend results {agree}")


if __name__ == "__main__":
    main()
