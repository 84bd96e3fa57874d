"""Compare the compiled and pure-Python kernels on the same workload.

    python benchmarks/bench_kernels.py [--repeat N]
"""

import argparse
import random
import time

from basiclocus import _kernels_py
from basiclocus.rootdata import get_root_datum

try:
    from basiclocus import _kernels as _kernels_c
except ImportError:
    _kernels_c = None


def workload(family, rank, count, seed=0):
    """Random affine elements of the given type, as raw (lam, mat, minv) triples."""
    from basiclocus.affweyl import from_word
    rng = random.Random(seed)
    dt = get_root_datum(family, rank)
    out = []
    for _ in range(count):
        w = from_word(dt, [rng.randrange(rank + 1) for _ in range(rng.randrange(4, 24))])
        out.append((w.lam, w.mat, w.minv))
    return dt, out


def run(mod, dt, elems, repeat):
    d = dt.dim
    t0 = time.perf_counter()
    acc = 0
    for _ in range(repeat):
        for i, (lam, mat, minv) in enumerate(elems):
            acc += mod.im_length(d, lam, mat, dt.pos_fns, dt.rho_check)
            acc += len(mod.left_descents(d, lam, mat, dt.affine_fns, dt.affine_ks, dt.rho_check))
            acc += len(mod.right_descents(d, lam, minv, dt.affine_fns, dt.affine_ks, dt.rho_check))
            lam2, mat2, _ = elems[i - 1]
            acc += mod.affine_mul(d, lam, mat, lam2, mat2)[0][0]
    return time.perf_counter() - t0, acc


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--repeat", type=int, default=20)
    ap.add_argument("--count", type=int, default=500)
    args = ap.parse_args()
    print(f"{'type':6} {'python s':>10} {'cython s':>10} {'speedup':>8}")
    for fam, rank in [("A", 3), ("B", 4), ("C", 5), ("D", 6), ("E", 6)]:
        dt, elems = workload(fam, rank, args.count)
        tp, ap_ = run(_kernels_py, dt, elems, args.repeat)
        if _kernels_c is None:
            print(f"{dt.name:6} {tp:10.3f} {'n/a':>10}")
            continue
        tc, ac = run(_kernels_c, dt, elems, args.repeat)
        assert ap_ == ac, "backends disagree"
        print(f"{dt.name:6} {tp:10.3f} {tc:10.3f} {tp / tc:8.1f}x")


if __name__ == "__main__":
    main()
