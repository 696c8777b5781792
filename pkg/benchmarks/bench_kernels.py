"""Compiled vs pure-Python kernels.

    python3 benchmarks/bench_kernels.py [--repeat 5] [--json]

Each kernel is timed on both backends with identical inputs; the end-to-end
row runs a CLI sweep in a subprocess with and without SLICEKIT_PURE_PYTHON.
"""

import argparse
import json
import os
import random
import subprocess
import sys
import time
import timeit

from slicekit import _pykernels
from slicekit.rootdatum import build_root_datum

try:
    from slicekit import _ckernels
except ImportError:
    _ckernels = None


def workloads():
    rng = random.Random(7)
    f4 = build_root_datum("F4")
    e6 = build_root_datum("E6")
    d4 = build_root_datum("D4")
    vecs = [tuple(rng.randint(-6, 6) for _ in range(4)) for _ in range(2000)]
    lam = (3, 3, 3, 3)
    mu = tuple(-x for x in lam)
    bounds = f4.coroot_coefficients(tuple(a - b for a, b in zip(lam, mu)))
    return [
        ("dominant_rep  F4 x2000", "dominant_rep",
         lambda k: [k.dominant_rep(v, f4.simple_roots, f4.simple_coroots) for v in vecs]),
        ("orbit         E6 w1 (27)", "orbit",
         lambda k: k.orbit(e6.fundamental_coweight(1), e6.simple_roots, e6.simple_coroots)),
        ("orbit         D4 (1,1,1,1)", "orbit",
         lambda k: k.orbit((1, 1, 1, 1), d4.simple_roots, d4.simple_coroots)),
        ("dominant_box  F4 (3,3,3,3)", "dominant_box",
         lambda k: k.dominant_box(lam, bounds, f4.simple_roots, f4.simple_coroots)),
    ]


def best_of(fn, repeat):
    return min(timeit.repeat(fn, number=1, repeat=repeat))


def end_to_end(pure):
    env = dict(os.environ)
    if pure:
        env["SLICEKIT_PURE_PYTHON"] = "1"
    cmd = [sys.executable, "-m", "slicekit", "check", "pairing-orbit", "F4", "--box", "2"]
    t = time.perf_counter()
    subprocess.run(cmd, env=env, check=True, capture_output=True)
    return time.perf_counter() - t


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=5)
    ap.add_argument("--json", action="store_true")
    args = ap.parse_args(argv)
    if _ckernels is None:
        print("compiled kernels not built; only the Python backend is available", file=sys.stderr)
    rows = []
    for name, _, fn in workloads():
        py = best_of(lambda: fn(_pykernels), args.repeat)
        if _ckernels is not None:
            # the two backends must agree before their timings mean anything
            assert fn(_pykernels) == fn(_ckernels), name
            cy = best_of(lambda: fn(_ckernels), args.repeat)
        else:
            cy = None
        rows.append({"kernel": name, "python_s": py, "cython_s": cy})
    rows.append({"kernel": "end-to-end   check pairing-orbit F4 --box 2",
                 "python_s": end_to_end(True),
                 "cython_s": end_to_end(False) if _ckernels is not None else None})
    if args.json:
        print(json.dumps(rows, indent=2))
        return
    print(f"{'workload':44s} {'python':>10s} {'cython':>10s} {'speedup':>8s}")
    for r in rows:
        cy = r["cython_s"]
        speed = f"{r['python_s'] / cy:7.1f}x" if cy else "      -"
        cy_text = f"{cy * 1e3:8.2f}ms" if cy is not None else "         -"
        print(f"{r['kernel']:44s} {r['python_s'] * 1e3:8.2f}ms {cy_text} {speed}")


if __name__ == "__main__":
    main()
