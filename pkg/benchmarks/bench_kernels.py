"""Time the numba kernels against the pure-numpy fallback.

The backend is fixed at import time, so each one runs in its own subprocess:

    python benchmarks/bench_kernels.py
    python benchmarks/bench_kernels.py --repeat 5 --quick
"""

import argparse
import json
import os
import subprocess
import sys
import time


def workloads(quick):
    from planeaut import catalog, ff
    from planeaut.autgrp import exhaustive_aut
    from planeaut.poly import points_exhaustive, singular_points_exhaustive

    K = ff.field_for(31)
    sextic = catalog.fermat(6, K)
    out = {
        "points over F_31^2": lambda: len(points_exhaustive(sextic, 2)),
        "singular search over F_31^2": lambda: len(singular_points_exhaustive(sextic, 2)),
        "Fermat quartic, PGL_3(F_13)": lambda: exhaustive_aut(catalog.fermat(4, ff.field_for(13))).order,
    }
    if not quick:
        out["Klein quartic, PGL_3(F_11^3)"] = lambda: exhaustive_aut(catalog.klein(4, ff.field_for(11)), 3).order
    return out


def worker(repeat, quick):
    from planeaut import _kernels

    res = {"jit": _kernels.USE_JIT, "runs": {}}
    for name, fn in workloads(quick).items():
        value = fn()  # warm-up, also pays numba compilation
        times = []
        for _ in range(repeat):
            t = time.perf_counter()
            fn()
            times.append(time.perf_counter() - t)
        res["runs"][name] = {"value": value, "best": min(times)}
    print(json.dumps(res))


def run_backend(no_jit, repeat, quick):
    env = dict(os.environ)
    env["PLANEAUT_NO_JIT"] = "1" if no_jit else "0"
    cmd = [sys.executable, __file__, "--worker", "--repeat", str(repeat)] + (["--quick"] if quick else [])
    out = subprocess.run(cmd, env=env, capture_output=True, text=True, check=True)
    return json.loads(out.stdout.strip().splitlines()[-1])


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3)
    ap.add_argument("--quick", action="store_true", help="skip the slowest workload")
    ap.add_argument("--worker", action="store_true", help=argparse.SUPPRESS)
    args = ap.parse_args()
    if args.worker:
        worker(args.repeat, args.quick)
        return 0

    jit = run_backend(False, args.repeat, args.quick)
    ref = run_backend(True, args.repeat, args.quick)
    if not jit["jit"]:
        print("numba is unavailable; both columns use numpy")
    print(f"{'workload':<32} {'numba s':>9} {'numpy s':>9} {'speedup':>8}  agree")
    bad = 0
    for name, r in jit["runs"].items():
        n = ref["runs"][name]
        same = r["value"] == n["value"]
        bad += not same
        print(f"{name:<32} {r['best']:9.3f} {n['best']:9.3f} {n['best'] / r['best']:8.1f}  {same}")
    return 1 if bad else 0


if __name__ == "__main__":
    sys.exit(main())
