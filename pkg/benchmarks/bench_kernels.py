"""Compare the compiled kernels against the pure-Python fallback.

Run as:  python3 benchmarks/bench_kernels.py

Each row times one kernel on one workload for both backends and reports the
speedup.  When the compiled extension is not built, only the fallback column
is filled in.
"""

import time

import numpy as np

from relperc.kernels import _fallback

try:
    from relperc.kernels import _ckernels
except ImportError:
    _ckernels = None


def _ring_with_chords(n, m):
    """Connected test graph: an n-cycle plus pseudo-random chords, m edges total."""
    edges = [(i, (i + 1) % n) for i in range(n)]
    rng = np.random.default_rng(1)
    seen = {tuple(sorted(e)) for e in edges}
    while len(edges) < m:
        u, v = rng.integers(0, n, size=2)
        key = (int(min(u, v)), int(max(u, v)))
        if u != v and key not in seen:
            seen.add(key)
            edges.append(key)
    eu = np.array([e[0] for e in edges], dtype=np.int32)
    ev = np.array([e[1] for e in edges], dtype=np.int32)
    return eu, ev


def _time(fn, *args, repeat=3):
    best = float("inf")
    result = None
    for _ in range(repeat):
        start = time.perf_counter()
        result = fn(*args)
        best = min(best, time.perf_counter() - start)
    return best, result


def _row(label, fn_name, *args, check=None):
    fallback_fn = getattr(_fallback, fn_name)
    t_py, r_py = _time(fallback_fn, *args)
    if _ckernels is None:
        print(f"{label:<44} {t_py:>10.4f}s {'-':>10} {'-':>8}")
        return
    compiled_fn = getattr(_ckernels, fn_name)
    t_c, r_c = _time(compiled_fn, *args)
    agree = True
    if check is not None:
        agree = check(r_py, r_c)
    flag = "" if agree else "  (MISMATCH)"
    print(f"{label:<44} {t_py:>10.4f}s {t_c:>9.4f}s {t_py / t_c:>7.1f}x{flag}")


def main():
    backend = "compiled + fallback" if _ckernels is not None else "fallback only"
    print(f"kernel benchmark ({backend})")
    print(f"{'workload':<44} {'python':>11} {'compiled':>10} {'speedup':>8}")

    eq = lambda a, b: np.array_equal(np.asarray(a), np.asarray(b))

    for n, m in ((8, 16), (9, 18), (10, 20)):
        eu, ev = _ring_with_chords(n, m)
        _row(f"connectivity_table n={n} m={m} (2^{m} subsets)",
             "connectivity_table", n, eu, ev, check=eq)

    n, m = 30, 60
    eu, ev = _ring_with_chords(n, m)
    rng = np.random.default_rng(2)
    masks = (rng.random((200_000, m)) < 0.6).astype(np.uint8)
    _row(f"count_connected_masks n={n} m={m} (200k trials)",
         "count_connected_masks", n, eu, ev, masks, check=lambda a, b: a == b)

    n, m = 20_000, 40_000
    eu, ev = _ring_with_chords(n, m)
    order = np.random.default_rng(3).permutation(m).astype(np.int64)
    _row(f"largest_component_growth n={n} m={m}",
         "largest_component_growth", n, eu, ev, order, check=eq)

    probs = np.random.default_rng(4).random(4000)
    _row("poisson_binomial_pmf N=4000",
         "poisson_binomial_pmf", probs,
         check=lambda a, b: float(np.max(np.abs(np.asarray(a) - np.asarray(b)))) < 1e-12)


if __name__ == "__main__":
    main()
