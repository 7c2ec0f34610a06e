"""Compiled vs pure-Python kernel timings.

    python3 benchmarks/bench_kernels.py [--repeat 5] [--batch 250]

Each row times one call of the dense kernel and of the masked kernel at a
few active fractions, on the hidden layers of the MNIST network.  GFLOP/s
uses the operation counts the kernels themselves report.  Plain ``a @ W``
through BLAS is listed for reference; it is not bit-reproducible across
masking so the forward pass does not use it.
"""

import argparse
import time

import numpy as np

from condnet import kernels

LAYERS = [(784, 1000), (1000, 600), (600, 400)]
ALPHAS = [1.0, 0.3, 0.1]


def best_of(fn, repeat):
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - t0)
    return best


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=5)
    ap.add_argument("--batch", type=int, default=250)
    args = ap.parse_args(argv)

    mods = kernels.backends()
    r = np.random.default_rng(0)
    print(f"backends: {', '.join(sorted(mods))}; simd={kernels.simd_enabled()}; batch {args.batch}")
    print(f"{'layer':>10} {'kernel':>10} {'alpha':>6} " + " ".join(f"{name + ' ms':>12}" for name in sorted(mods))
          + f" {'speedup':>8} {'GFLOP/s':>8}")
    for d, h in LAYERS:
        a, w, b = r.random((args.batch, d)), r.standard_normal((d, h)) * 0.05, np.ones(h)
        t = best_of(lambda: a @ w + b, args.repeat)
        print(f"{d}x{h:>5} {'blas':>10} {1.0:>6.2f} {1e3 * t:>12.2f}")
        rows = [("dense", 1.0, None)] + [("masked", al, (r.random((args.batch, h)) < al).astype(np.uint8))
                                         for al in ALPHAS]
        for kind, alpha, mask in rows:
            times, flops = {}, 0
            for name, mod in sorted(mods.items()):
                if kind == "dense":
                    fn = lambda: mod.dense_affine(a, w, b)
                else:
                    fn = lambda: mod.masked_affine(a, w, b, mask)
                flops = fn()[1]
                times[name] = best_of(fn, args.repeat)
            fast = times.get("compiled", times["python"])
            speed = times["python"] / fast if "compiled" in times else 1.0
            print(f"{d}x{h:>5} {kind:>10} {alpha:>6.2f} "
                  + " ".join(f"{1e3 * times[n]:>12.2f}" for n in sorted(times))
                  + f" {speed:>8.2f} {flops / fast / 1e9:>8.2f}")


if __name__ == "__main__":
    main()
