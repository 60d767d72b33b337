"""Time the branch-and-bound kernels under numba and under the numpy fallback.

    python benchmarks/bench_kernels.py            # both backends, table on stdout
    python benchmarks/bench_kernels.py --quick    # smaller instances only

Each backend runs in its own interpreter because the backend is fixed at
import time by MISNORMAL_PURE_NUMPY.
"""

import argparse
import json
import os
import subprocess
import sys
import time

CASES = [
    ("cycle:5^2", False),
    ("complete:3^3", False),
    ("kneser:5,2^2", True),
    ("cycle:5^3", True),
]

WORKER = r"""
import json, sys, time
from misnormal import BACKEND, solver
from misnormal.cli import load_input
out = []
for text in json.loads(sys.argv[1]):
    G = load_input(text)
    G = G.graph if hasattr(G, "graph") else G
    solver.enumerate_mis(G)            # warm-up: numba compilation, caches
    solver.clear_caches()
    stats = solver.SearchStats()
    t = time.perf_counter()
    res = solver.enumerate_mis(G, stats=stats)
    out.append({"input": text, "n": G.n, "alpha": res.alpha, "num_mis": res.num_sets,
                "nodes": stats.nodes, "seconds": time.perf_counter() - t, "backend": BACKEND})
print(json.dumps(out))
"""


def run_backend(pure_numpy, inputs):
    env = dict(os.environ)
    if pure_numpy:
        env["MISNORMAL_PURE_NUMPY"] = "1"
    else:
        env.pop("MISNORMAL_PURE_NUMPY", None)
    proc = subprocess.run([sys.executable, "-c", WORKER, json.dumps(inputs)], env=env, capture_output=True, text=True, check=True)
    return json.loads(proc.stdout)


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--quick", action="store_true")
    args = ap.parse_args()
    inputs = [c for c, big in CASES if not (args.quick and big)]
    t0 = time.time()
    fast = run_backend(False, inputs)
    slow = run_backend(True, inputs)
    print(f"{'input':<14}{'n':>5}{'alpha':>7}{'|I|':>5}{'nodes':>9}{'numba s':>11}{'numpy s':>11}{'speedup':>9}")
    for a, b in zip(fast, slow):
        assert (a["alpha"], a["num_mis"], a["nodes"]) == (b["alpha"], b["num_mis"], b["nodes"]), (a, b)
        print(
            f"{a['input']:<14}{a['n']:>5}{a['alpha']:>7}{a['num_mis']:>5}{a['nodes']:>9}"
            f"{a['seconds']:>11.4f}{b['seconds']:>11.4f}{b['seconds'] / max(a['seconds'], 1e-9):>9.0f}x"
        )
    print(f"total wall time {time.time() - t0:.1f} s")


if __name__ == "__main__":
    main()
