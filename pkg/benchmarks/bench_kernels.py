"""Time the compiled kernels against the pure-Python fallback.

    python3 benchmarks/bench_kernels.py --codes 200 --hmax 40
"""

import argparse
import random
import timeit

from platslide import _kernels_py
from platslide.colored_graph import random_admissible

try:
    from platslide import _kernels as compiled
except ImportError:
    compiled = None


def workload(mod, codes):
    for f in codes:
        ms = mod.build_matchings(*f.astuple())
        n = len(ms[0])
        for m in ms:
            mod.is_perfect_involution(m)
        for i in range(4):
            for j in range(i + 1, 4):
                mod.count_components(n, [ms[i], ms[j]])
                mod.count_alternating_cycles(ms[i], ms[j])
        mod.count_components(n, [ms[0], ms[1], ms[2]])


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--codes", type=int, default=200)
    ap.add_argument("--hmax", type=int, default=40)
    ap.add_argument("--repeat", type=int, default=5)
    ap.add_argument("--seed", type=int, default=1)
    args = ap.parse_args()
    rng = random.Random(args.seed)
    codes = [random_admissible(rng, args.hmax) for _ in range(args.codes)]
    vertices = sum(sum(f.circle_sizes()) for f in codes)
    print(f"{len(codes)} codes, {vertices} vertices in total, best of {args.repeat}")
    rows = [("python", _kernels_py)]
    if compiled is not None:
        rows.append(("cython", compiled))
    else:
        print("compiled kernels not built; reporting the fallback only")
    best = {}
    for name, mod in rows:
        best[name] = min(timeit.repeat(lambda: workload(mod, codes), number=1, repeat=args.repeat))
        print(f"{name:<8} {best[name] * 1000:9.2f} ms")
    if len(best) == 2:
        print(f"speedup  {best['python'] / best['cython']:9.1f}x")


if __name__ == "__main__":
    main()
