"""Time the compiled kernels against the pure-Python fallback.

    python benchmarks/bench_kernels.py [--max-n 7]

The fallback is only run up to ``--max-python-n``; it is 15-40x slower.
"""

import argparse
import time

from weylmaj import _fallback

try:
    from weylmaj import _kernels
except ImportError:
    _kernels = None

# B_n, fmaj, sign character with the B_n length
AGR_ARGS = (1, 2, 1, 5, 0, 2)


def timed(fn, *args):
    t0 = time.perf_counter()
    out = fn(*args)
    return time.perf_counter() - t0, out


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--max-n", type=int, default=8)
    ap.add_argument("--max-python-n", type=int, default=6)
    args = ap.parse_args()
    if _kernels is None:
        print("compiled kernel not built; only the fallback is timed")
    print(f"{'kernel':<18}{'n':>3}{'compiled s':>13}{'python s':>12}{'speedup':>10}")
    for name, c_fn, p_fn, extra in [
        ("accumulate/agr", getattr(_kernels, "accumulate", None), _fallback.accumulate, AGR_ARGS),
        ("involution_census", getattr(_kernels, "involution_census", None), _fallback.involution_census, ()),
    ]:
        for n in range(4, args.max_n + 1):
            tc = tp = None
            if c_fn is not None:
                tc, rc = timed(c_fn, n, *extra)
            if n <= args.max_python_n:
                tp, rp = timed(p_fn, n, *extra)
                if tc is not None:
                    assert rc == rp, f"backends disagree at n={n}"
            cs = f"{tc:.4f}" if tc is not None else "-"
            ps = f"{tp:.4f}" if tp is not None else "-"
            sp = f"{tp / tc:.0f}x" if tc and tp else "-"
            print(f"{name:<18}{n:>3}{cs:>13}{ps:>12}{sp:>10}")


if __name__ == "__main__":
    main()
