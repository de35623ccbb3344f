"""Compare the compiled arithmetic kernels against the pure-Python twins.

    python3 benchmarks/bench_backends.py [--number N] [--repeat R]

Times each kernel on two operand profiles: "small" stays inside the
compiled fast path (C int64 arithmetic), "big" forces the object
fallback (400-bit operands), so the table shows both the best case and
the guard overhead.  Set HEISAUT_PURE=1 when running the test suite or
CLI to force the pure backend end to end.
"""

import argparse
import timeit

from heisaut import _kernels
from heisaut._backend import backend_name

try:
    from heisaut import _speedups
except ImportError:
    _speedups = None

SMALL = 12345
BIG = 7**150  # ~420 bits, well past the fast-path guard

CASES = [
    ("heis_mul", lambda k, v: k.heis_mul(v, v, v, v, v, v)),
    ("heis_inv", lambda k, v: k.heis_inv(v, v, v)),
    ("heis_pow", lambda k, v: k.heis_pow(v, v, v, 1000)),
    ("mat_mul", lambda k, v: k.mat_mul(v, v, v, v, v, v, v, v)),
    ("aut_apply", lambda k, v: k.aut_apply(v, v, v, v, v, v, v, v, v)),
    ("aut_compose",
     lambda k, v: k.aut_compose(v, v, v, v, v, v, v, v, v, v, v, v)),
]


def best_time(fn, number, repeat):
    return min(timeit.repeat(fn, number=number, repeat=repeat)) / number


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--number", type=int, default=200_000,
                        help="calls per timing sample")
    parser.add_argument("--repeat", type=int, default=5,
                        help="timing samples (best is reported)")
    args = parser.parse_args()

    if _speedups is None:
        print("compiled extension not built; nothing to compare "
              "(pip install -e . rebuilds it)")
        return 1

    print(f"default backend: {backend_name()}")
    print(f"{args.number} calls per sample, best of {args.repeat}\n")
    header = (f"{'kernel':<12} {'operands':<8} {'pure ns':>9} "
              f"{'compiled ns':>12} {'speedup':>8}")
    print(header)
    print("-" * len(header))
    for name, call in CASES:
        for label, value in (("small", SMALL), ("big", BIG)):
            number = args.number if label == "small" else args.number // 10
            pure = best_time(lambda: call(_kernels, value), number,
                             args.repeat)
            fast = best_time(lambda: call(_speedups, value), number,
                             args.repeat)
            assert call(_kernels, value) == call(_speedups, value)
            print(f"{name:<12} {label:<8} {pure * 1e9:>9.0f} "
                  f"{fast * 1e9:>12.0f} {pure / fast:>7.1f}x")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
