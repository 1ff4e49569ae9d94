"""Time the subset-OR sweep: compiled core against the pure Python fallback."""
import argparse
import time

from colorquot import HAVE_COMPILED, INF, RingSpec, piece, sweep_min_cover
from colorquot.spaces import divisor_masks

CASES = (
    (RingSpec((INF, INF), (2, 2)), 2),
    (RingSpec((INF,), (3,)), 4),
    (RingSpec((INF, INF), (1, 3)), 3),
)


def time_one(masks, target, force, repeat):
    best = None
    result = None
    for _ in range(repeat):
        t0 = time.perf_counter()
        result = sweep_min_cover(masks, target, force=force)
        elapsed = time.perf_counter() - t0
        best = elapsed if best is None else min(best, elapsed)
    return best, result


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--repeat", type=int, default=3)
    args = parser.parse_args()

    print("compiled core available:", HAVE_COMPILED)
    header = "%-28s %5s %12s %12s %8s" % (
        "ring", "piece", "python", "compiled", "speedup")
    print(header)
    print("-" * len(header))
    for spec, d in CASES:
        masks = divisor_masks(spec, d)
        target = piece(spec, d - 1).size
        label = "a=%s lam=%s d=%d" % (spec.a, spec.lam, d)
        t_py, r_py = time_one(masks, target, "python", args.repeat)
        if HAVE_COMPILED:
            t_c, r_c = time_one(masks, target, "compiled", args.repeat)
            assert r_py == r_c
            print("%-28s %5d %10.1fms %10.1fms %7.1fx"
                  % (label, len(masks), t_py * 1e3, t_c * 1e3, t_py / t_c))
        else:
            print("%-28s %5d %10.1fms %12s %8s"
                  % (label, len(masks), t_py * 1e3, "-", "-"))


if __name__ == "__main__":
    main()
