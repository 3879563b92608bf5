"""Compare the compiled and pure-Python exact kernels.

Runs a kernel micro-benchmark in-process, then the catalog workload
(signatures and minimal searches) in a subprocess per backend, since the
backend is fixed at import.

    python3 benchmarks/bench_kernels.py [--repeat N]
"""
import argparse
import os
import random
import subprocess
import sys
import timeit

from einets import _kernels_py

try:
    from einets import _kernels as _kernels_c
except ImportError:
    _kernels_c = None

WORKLOAD = """
import time
from einets import kernels
from einets.enumeration import EnumerationSpec, enumerate_networks
from einets.odeequiv import partition_classes
start = time.perf_counter()
for cls in ("REI", "PEI", "UEI", "CEI"):
    partition_classes(enumerate_networks(EnumerationSpec(2, cls, 2)), with_minimal=True)
print(kernels.BACKEND, time.perf_counter() - start)
"""


def random_rows(rng, count=8, width=16, bound=3):
    return [[rng.randint(-bound, bound) for _ in range(width)] for _ in range(count)]


def micro(repeat):
    rng = random.Random(0)
    batches = [random_rows(rng) for _ in range(200)]
    results = {}
    for name, mod in (("python", _kernels_py), ("cython", _kernels_c)):
        if mod is None:
            continue
        t = min(timeit.repeat(lambda: [mod.rref_key(b) for b in batches], number=1, repeat=repeat))
        results[name] = t
        print(f"rref_key x200 [{name}]: {t * 1e3:.1f} ms")
    if _kernels_c is not None:
        assert all(_kernels_c.rref_key(b) == _kernels_py.rref_key(b) for b in batches)
        print(f"speedup: {results['python'] / results['cython']:.1f}x")


def workload(repeat):
    times = {}
    for backend, env in (("python", {"EINETS_PURE_PYTHON": "1"}), ("default", {})):
        runs = []
        for _ in range(repeat):
            full = {k: v for k, v in os.environ.items() if k != "EINETS_PURE_PYTHON"} | env
            out = subprocess.run([sys.executable, "-c", WORKLOAD], env=full, capture_output=True, text=True, check=True)
            name, secs = out.stdout.split()
            runs.append(float(secs))
        times[name] = min(runs)
        print(f"catalog classification with minimal search [{name}]: {times[name]:.2f} s")
    if "cython" in times:
        print(f"speedup: {times['python'] / times['cython']:.1f}x")


def main():
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--repeat", type=int, default=3)
    args = p.parse_args()
    micro(args.repeat)
    workload(args.repeat)


if __name__ == "__main__":
    main()
