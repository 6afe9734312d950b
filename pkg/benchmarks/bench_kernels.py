"""Compare the compiled kernels with the pure-Python fallback.

    python3 benchmarks/bench_kernels.py [--repeat 5]

Kernel timings call both modules directly in this process. The end-to-end
row builds a few groups in a subprocess per backend, since the backend is
fixed at import.
"""

import argparse
import os
import random
import subprocess
import sys
import timeit

import numpy as np

from quotshrink import _kernels_py as pure

try:
    from quotshrink import _kernels as compiled
except ImportError:
    compiled = None

END_TO_END = """
import time
from quotshrink import catalog as C
from quotshrink.quotient import embed_quotient
from quotshrink.wreath import wreath_imprimitive
t = time.perf_counter()
for _ in range(3):
    G = wreath_imprimitive(C.symmetric(5), C.symmetric(4)).group
    G.order
    embed_quotient(C.pgammal2(9), C.psl2(9))
print(time.perf_counter() - t)
"""


def _perm(rng, n):
    p = list(range(n))
    rng.shuffle(p)
    return tuple(p)


def _workloads(mod, rng):
    n = 60
    a, b = _perm(rng, n), _perm(rng, n)
    gens = [_perm(rng, n) for _ in range(3)]
    # two levels of a stabilizer chain are enough to exercise sift
    bases = [0, 1]
    invt = []
    for base in bases:
        tr = pure.orbit_transversal(gens, base)
        invt.append({y: pure.inv(u) for y, u in tr.items()})
    m = 4000
    cols = np.array([[(x * k + 1) % m for x in range(m)] for k in (1, 3)], dtype=np.int32)
    mask = np.zeros(m, dtype=np.uint8)
    mask[0] = 1
    return {
        "mul": lambda: mod.mul(a, b),
        "inv": lambda: mod.inv(a),
        "orbit": lambda: mod.orbit(gens, 0),
        "orbit_transversal": lambda: mod.orbit_transversal(gens, 0),
        "sift": lambda: mod.sift(a, bases, invt),
        "closure_mask": lambda: mod.closure_mask(cols, mask),
    }


def _end_to_end(pure_backend: bool) -> float:
    env = dict(os.environ)
    env["QUOTSHRINK_PURE"] = "1" if pure_backend else "0"
    out = subprocess.run([sys.executable, "-c", END_TO_END], env=env, capture_output=True, text=True, check=True)
    return float(out.stdout.strip())


def main(argv=None) -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=5)
    ap.add_argument("--number", type=int, default=200)
    args = ap.parse_args(argv)
    if compiled is None:
        print("compiled extension not built; only the pure kernels are available")
    rows = []
    mods = [("python", pure)] + ([("cython", compiled)] if compiled else [])
    results = {}
    for label, mod in mods:
        for name, fn in _workloads(mod, random.Random(1)).items():
            best = min(timeit.repeat(fn, number=args.number, repeat=args.repeat)) / args.number
            results[(label, name)] = best
    names = list(_workloads(pure, random.Random(1)))
    print(f"{'kernel':<20}{'python (us)':>14}{'cython (us)':>14}{'speedup':>10}")
    for name in names:
        p = results[("python", name)] * 1e6
        c = results.get(("cython", name))
        if c is None:
            rows.append(f"{name:<20}{p:>14.2f}{'-':>14}{'-':>10}")
        else:
            rows.append(f"{name:<20}{p:>14.2f}{c * 1e6:>14.2f}{p / (c * 1e6):>9.1f}x")
    print("\n".join(rows))
    p = _end_to_end(True)
    line = f"{'end-to-end (s)':<20}{p:>14.3f}"
    if compiled is not None:
        c = _end_to_end(False)
        line += f"{c:>14.3f}{p / c:>9.1f}x"
    print(line)
    return 0


if __name__ == "__main__":
    sys.exit(main())
