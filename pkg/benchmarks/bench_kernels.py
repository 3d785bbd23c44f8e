"""Compare the Cython kernels with the pure-Python fallback.

Micro: mul, divmod and gcd on random dense polynomials, both backends in one
process.  Macro: the ``verify`` CLI run twice in subprocesses, once with
``POLYLOG_PURE_PYTHON=1``.

    python3 benchmarks/bench_kernels.py --p 13 --sizes 8,32,128 --repeat 5
"""

import argparse
import os
import random
import subprocess
import sys
import time
import timeit

from genpolylog.kernels import available_backends


def random_poly(rng, n, p):
    coeffs = [rng.randrange(p) for _ in range(n)]
    coeffs[-1] = rng.randrange(1, p)
    return tuple(coeffs)


def micro(p, sizes, repeat, seed):
    backends = available_backends()
    rng = random.Random(seed)
    rows = []
    for n in sizes:
        a, b = random_poly(rng, n, p), random_poly(rng, n, p)
        big = random_poly(rng, 2 * n, p)
        ops = {
            "mul": lambda k: k.mul(a, b, p),
            "divmod": lambda k: k.divmod_(big, a, p),
            "gcd": lambda k: k.gcd(a, b, p),
        }
        for op, fn in ops.items():
            times = {}
            for name, mod in backends.items():
                number = max(1, 20000 // (n * n))
                best = min(timeit.repeat(lambda: fn(mod), number=number, repeat=repeat))
                times[name] = best / number
            rows.append((op, n, times))
    return rows


def macro(primes, suite, repeat):
    cmd = [sys.executable, "-m", "genpolylog", "verify", "--p", primes, "--suite", suite]
    out = {}
    for name, extra in (("cython", {}), ("python", {"POLYLOG_PURE_PYTHON": "1"})):
        env = dict(os.environ, **extra)
        best = None
        for _ in range(repeat):
            start = time.perf_counter()
            proc = subprocess.run(cmd, env=env, capture_output=True, text=True)
            elapsed = time.perf_counter() - start
            if proc.returncode != 0:
                raise SystemExit(f"verify failed under {name} backend:\n{proc.stderr}")
            best = elapsed if best is None else min(best, elapsed)
        out[name] = best
    return out


def main(argv=None):
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--p", type=int, default=13, help="prime for the micro benchmarks")
    parser.add_argument("--sizes", default="8,32,128", help="comma-separated polynomial lengths")
    parser.add_argument("--repeat", type=int, default=3)
    parser.add_argument("--seed", type=int, default=0)
    parser.add_argument("--macro-primes", default="3..11")
    parser.add_argument("--macro-suite", default="congruences")
    parser.add_argument("--skip-macro", action="store_true")
    args = parser.parse_args(argv)

    sizes = [int(s) for s in args.sizes.split(",")]
    backends = available_backends()
    if "cython" not in backends:
        print("compiled extension not available; only the Python backend will be timed")

    print(f"micro benchmarks, p={args.p} (best per-call time)")
    print(f"{'op':<8}{'n':>6}{'python':>14}{'cython':>14}{'ratio':>9}")
    for op, n, times in micro(args.p, sizes, args.repeat, args.seed):
        py = times["python"]
        cy = times.get("cython")
        cy_s = f"{cy * 1e6:11.1f} us" if cy else f"{'-':>14}"
        ratio = f"{py / cy:8.1f}x" if cy else f"{'-':>9}"
        print(f"{op:<8}{n:>6}{py * 1e6:11.1f} us{cy_s}{ratio}")

    if not args.skip_macro:
        t = macro(args.macro_primes, args.macro_suite, args.repeat)
        print(f"\nmacro: verify --p {args.macro_primes} --suite {args.macro_suite} (best wall time)")
        print(f"  cython  {t['cython']:8.2f} s")
        print(f"  python  {t['python']:8.2f} s")
        print(f"  ratio   {t['python'] / t['cython']:8.1f}x")
    return 0


if __name__ == "__main__":
    sys.exit(main())
