"""Time the compiled kernels against the pure-Python fallback.

Each backend runs in its own interpreter (``TWOFACED_PURE_PYTHON=1`` selects
the fallback) so module-level caches never leak between them.

    python3 benchmarks/bench_kernels.py [--repeat 3] [--json out.json]
"""

from __future__ import annotations

import argparse
import json
import os
import subprocess
import sys
import time

CASES = {
    "scalar_arith": "scalar arithmetic, 200k mixed ops",
    "partition_rgs": "enumerate set partitions of 11 points",
    "rgs_predicates": "non-crossing/interval tests over 10 points",
    "cumulants_n6": "all four cumulant tables, random pair, N=6",
    "bi_haar_n8": "R-diagonal scan of the bi-Haar pair, N=8",
    "product_formula": "product formula vs partition sum, 3 seeds",
}


def _scalar_arith():
    from twofaced.kernels import GaussianRational
    a, b = GaussianRational(3, 2) / 7, GaussianRational(1, -5) / 3
    acc = GaussianRational(0)
    for _ in range(50_000):
        acc = acc + a * b
        acc = acc - b
        acc = acc * GaussianRational(1) / 1
    return acc


def _partition_rgs():
    from twofaced.kernels import set_partition_rgs
    return sum(1 for _ in set_partition_rgs(11))


def _rgs_predicates():
    from twofaced.kernels import rgs_is_interval, rgs_is_noncrossing, set_partition_rgs
    parts = list(set_partition_rgs(10))
    return sum(rgs_is_noncrossing(r) + rgs_is_interval(r) for r in parts)


def _cumulants_n6():
    from twofaced.cumulants import cumulant_table
    from twofaced.distribution import cumulants_to_moments
    from twofaced.ncpoly import Alphabet
    from twofaced.random_tables import random_moment_table
    mu = random_moment_table(Alphabet([("x", "L"), ("y", "R")]), 6, seed=1)
    for kind in ("bifree", "biboolean", "free", "boolean"):
        back = cumulants_to_moments(cumulant_table(mu, kind, 6), 6)
        assert mu.first_difference(back, 6) is None


def _bi_haar_n8():
    from twofaced.diagonal import is_r_diagonal
    from twofaced.distribution import bi_haar
    assert is_r_diagonal(bi_haar(8), 8).passed


def _product_formula():
    from twofaced.products import REVERSED, compare_formula
    from twofaced.random_tables import random_sequences
    for s in range(3):
        v = compare_formula(random_sequences(8, s), random_sequences(8, s + 100), REVERSED)
        assert v.passed


FUNCS = {
    "scalar_arith": _scalar_arith,
    "partition_rgs": _partition_rgs,
    "rgs_predicates": _rgs_predicates,
    "cumulants_n6": _cumulants_n6,
    "bi_haar_n8": _bi_haar_n8,
    "product_formula": _product_formula,
}


def worker() -> dict:
    from twofaced import kernels
    out = {"backend": kernels.BACKEND, "times": {}}
    for name, fn in FUNCS.items():
        t0 = time.perf_counter()
        fn()
        out["times"][name] = time.perf_counter() - t0
    return out


def run_backend(pure: bool, repeat: int) -> dict:
    """Best of ``repeat`` cold runs; each run is a fresh interpreter because
    lattice and cumulant caches would otherwise make later repeats free."""
    env = dict(os.environ)
    env.pop("TWOFACED_PURE_PYTHON", None)
    if pure:
        env["TWOFACED_PURE_PYTHON"] = "1"
    best = None
    for _ in range(repeat):
        proc = subprocess.run([sys.executable, __file__, "--worker"],
                              env=env, capture_output=True, text=True, check=True)
        res = json.loads(proc.stdout)
        if best is None:
            best = res
        else:
            for k, v in res["times"].items():
                best["times"][k] = min(best["times"][k], v)
    return best


def main(argv=None) -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3)
    ap.add_argument("--json", help="also write the raw timings here")
    ap.add_argument("--worker", action="store_true", help=argparse.SUPPRESS)
    args = ap.parse_args(argv)
    if args.worker:
        print(json.dumps(worker()))
        return 0
    fast = run_backend(False, args.repeat)
    slow = run_backend(True, args.repeat)
    if fast["backend"] != "cython":
        print("compiled extension not available; only the fallback was timed", file=sys.stderr)
    print(f"{'case':<18}{fast['backend']:>10}{slow['backend']:>10}{'speedup':>9}  description")
    for name, desc in CASES.items():
        a, b = fast["times"][name], slow["times"][name]
        print(f"{name:<18}{a:>9.3f}s{b:>9.3f}s{b / a:>8.2f}x  {desc}")
    if args.json:
        with open(args.json, "w", encoding="utf-8") as fh:
            json.dump({"compiled": fast, "fallback": slow}, fh, indent=1)
    return 0


if __name__ == "__main__":
    sys.exit(main())
