"""Compare the compiled and pure-Python kernels.

    python3 benchmarks/bench_kernels.py [--repeat N]

Each micro-benchmark runs the same workload against both kernel modules;
the end-to-end row times ``kb_order_of`` on random 40-node trees in a fresh
interpreter per backend (selected with OMEGA_TREES_PURE).
"""
from __future__ import annotations

import argparse
import os
import random
import subprocess
import sys
import timeit

from omega_trees import _pykernels

try:
    from omega_trees import _ckernels
except ImportError:  # extension not built
    _ckernels = None

rng = random.Random(0)
PAIRS = [(rng.randrange(10**6), rng.randrange(10**6)) for _ in range(20_000)]
CODES = [_pykernels.encode(tuple(rng.randrange(1000) for _ in range(rng.randrange(9)))) for _ in range(5_000)]
SEQS = [tuple(rng.randrange(8) for _ in range(rng.randrange(1, 7))) for _ in range(400)]
SEQ_PAIRS = [(rng.choice(SEQS), rng.choice(SEQS)) for _ in range(20_000)]


def workloads(k):
    return {
        "pair": lambda: [k.pair(a, b) for a, b in PAIRS],
        "unpair": lambda: [k.unpair(z) for z, _ in PAIRS],
        "encode": lambda: [k.encode(u) for u in SEQS * 10],
        "decode": lambda: [k.decode(c) for c in CODES],
        "kb_leq": lambda: [k.kb_leq(u, v) for u, v in SEQ_PAIRS],
    }


END_TO_END = """
import random, time
from omega_trees.trees import FiniteTree
from omega_trees.kborder import kb_order_of
rng = random.Random(1)
trees = []
for _ in range(20):
    nodes = {()}
    while len(nodes) < 40:
        u = rng.choice(sorted(nodes))
        if len(u) < 6:
            nodes.add(u + (rng.randint(0, 3),))
    trees.append(FiniteTree(nodes))
t = time.perf_counter()
for tr in trees:
    kb_order_of(tr)
print(time.perf_counter() - t)
"""


def end_to_end(pure: bool) -> float:
    env = dict(os.environ)
    env.pop("OMEGA_TREES_PURE", None)
    if pure:
        env["OMEGA_TREES_PURE"] = "1"
    out = subprocess.run([sys.executable, "-c", END_TO_END], env=env, capture_output=True, text=True, check=True)
    return float(out.stdout)


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=5)
    args = ap.parse_args()
    if _ckernels is None:
        print("compiled kernels not built; run `python3 setup.py build_ext --inplace`")
        return 1
    py, cy = workloads(_pykernels), workloads(_ckernels)
    print(f"{'kernel':<12}{'python ms':>12}{'cython ms':>12}{'speedup':>10}")
    for name in py:
        tp = min(timeit.repeat(py[name], number=1, repeat=args.repeat)) * 1e3
        tc = min(timeit.repeat(cy[name], number=1, repeat=args.repeat)) * 1e3
        print(f"{name:<12}{tp:>12.2f}{tc:>12.2f}{tp / tc:>9.1f}x")
    tp, tc = end_to_end(True) * 1e3, end_to_end(False) * 1e3
    print(f"{'kb_order_of':<12}{tp:>12.2f}{tc:>12.2f}{tp / tc:>9.1f}x")
    return 0


if __name__ == "__main__":
    sys.exit(main())
