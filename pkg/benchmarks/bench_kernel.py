"""Benchmark the compiled kernel against the pure-Python fallback.

Runs a fixed workload in two subprocesses (one per backend, selected with
FDEPTH_KERNEL) and prints a side-by-side table.  Usage:

    python benchmarks/bench_kernel.py            # all benchmarks
    python benchmarks/bench_kernel.py --quick    # skip the elliptic cone
"""

import argparse
import json
import os
import subprocess
import sys
from pathlib import Path

REPO = Path(__file__).resolve().parent.parent

WORKER = r"""
import json, sys, time
import fdepth
from fdepth import (Ideal, RingCtx, buchberger, cd, eliminate,
                    free_resolution, parse_polynomial, report)

quick = bool(int(sys.argv[1]))
results = {"backend": fdepth.BACKEND}


def timed(name, fn, repeat=1):
    best = None
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn()
        dt = time.perf_counter() - t0
        best = dt if best is None else min(best, dt)
    results[name] = best


# 1. Groebner basis of a dense-ish cubic system
def bench_gb():
    ctx = RingCtx(32003, ("x", "y", "z", "w"))
    gens = ["x^3 + y^2*w - z*w^2", "x*y*z - w^3 + y^3",
            "x^2*w + y*z^2 - x*w^2"]
    Ideal(ctx, gens).groebner()

timed("groebner_cubics", bench_gb, repeat=3)


# 2. Resolution + full report for the disjoint-triangles ideal at p = 3
def bench_report():
    ctx = RingCtx(3, ("a", "b", "c", "d", "e", "f"))
    gens = ["a*d", "a*e", "a*f", "b*d", "b*e", "b*f", "c*d", "c*e", "c*f"]
    report(Ideal(ctx, gens))

timed("two_triangles_report", bench_report, repeat=3)


# 3. Elliptic-cone flagship: elimination, resolution and chains at p = 7
def bench_segre():
    names = ("z11", "z12", "z21", "z22", "z31", "z32",
             "x", "y", "z", "s", "t")
    ctx = RingCtx(7, names)
    gens = [parse_polynomial(f"{zi} - {u}*{v}", ctx)
            for zi, u, v in (("z11", "x", "s"), ("z12", "x", "t"),
                             ("z21", "y", "s"), ("z22", "y", "t"),
                             ("z31", "z", "s"), ("z32", "z", "t"))]
    gens.append(parse_polynomial("x^3 + y^3 + z^3", ctx))
    I = eliminate(Ideal(ctx, gens), ["x", "y", "z", "s", "t"])
    assert cd(I) == 4

if not quick:
    timed("elliptic_cone_p7_cd", bench_segre)

print(json.dumps(results))
"""


def run_backend(kernel, quick):
    env = dict(os.environ, FDEPTH_KERNEL=kernel,
               PYTHONPATH=str(REPO / "src"))
    proc = subprocess.run([sys.executable, "-c", WORKER, str(int(quick))],
                          capture_output=True, text=True, env=env)
    if proc.returncode != 0:
        sys.stderr.write(proc.stderr)
        return None
    return json.loads(proc.stdout.strip().splitlines()[-1])


def main(argv=None):
    ap = argparse.ArgumentParser()
    ap.add_argument("--quick", action="store_true",
                    help="skip the elliptic-cone benchmark")
    args = ap.parse_args(argv)

    rows = {}
    backends = []
    for kernel in ("cy", "py"):
        res = run_backend(kernel, args.quick)
        if res is None:
            print(f"backend {kernel!r} unavailable, skipping")
            continue
        backends.append(res["backend"])
        for key, val in res.items():
            if key != "backend":
                rows.setdefault(key, {})[res["backend"]] = val

    if not rows:
        return 1
    width = max(len(k) for k in rows) + 2
    header = f"{'benchmark':<{width}}" + "".join(f"{b:>12}" for b in backends)
    if len(backends) == 2:
        header += f"{'speedup':>10}"
    print(header)
    for key, vals in rows.items():
        line = f"{key:<{width}}"
        for b in backends:
            line += f"{vals.get(b, float('nan')):>11.3f}s"
        if len(backends) == 2 and all(b in vals for b in backends):
            line += f"{vals[backends[1]] / vals[backends[0]]:>9.1f}x"
        print(line)
    return 0


if __name__ == "__main__":
    sys.exit(main())
