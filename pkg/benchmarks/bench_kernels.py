"""Time the compiled kernels against the pure-Python fallback.

    python benchmarks/bench_kernels.py [--repeat 5]

Each row runs the same inputs through both backends and reports the best
wall time per call; the results are checked for equality first.
"""

from __future__ import annotations

import argparse
import random
import timeit

from indecomp import _pykernels
from indecomp.families import f_n, paley7, t_odd, w_even

try:
    from indecomp import _ckernels
except ImportError:
    _ckernels = None


def _random_out(n: int, rng: random.Random) -> tuple[int, ...]:
    out = [0] * n
    for i in range(n):
        for j in range(i + 1, n):
            if rng.random() < 0.5:
                out[i] |= 1 << j
            else:
                out[j] |= 1 << i
    return tuple(out)


def cases():
    rng = random.Random(0)
    F40, T9 = f_n(40), t_odd(4)
    rand8 = [_random_out(8, rng) for _ in range(50)]
    yield "is_indecomposable F_40", lambda k: k.is_indecomposable(F40.out, F40.full), 1
    yield "indecomposable_table T_9", lambda k: k.indecomposable_table(T9.out, 9), 1
    yield "strongly_critical_mask W_12", lambda k: k.strongly_critical_mask(w_even(5).out, 12), 1
    yield "strongly_critical_mask F_14", lambda k: k.strongly_critical_mask(f_n(14).out, 14), 1
    yield "canonical_labeling P_7", lambda k: k.canonical_labeling(paley7().out, 7), 1
    yield "canonical_labeling 50 random n=8", lambda k: [k.canonical_labeling(o, 8) for o in rand8], 50


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--repeat", type=int, default=5)
    args = parser.parse_args()
    if _ckernels is None:
        raise SystemExit("compiled kernels are not built; run `pip install -e . --no-build-isolation`")
    print(f"{'case':36s} {'python':>12s} {'cython':>12s} {'speedup':>8s}")
    for name, call, per in cases():
        assert call(_pykernels) == call(_ckernels), name
        py = min(timeit.repeat(lambda: call(_pykernels), number=1, repeat=args.repeat)) / per
        cy = min(timeit.repeat(lambda: call(_ckernels), number=1, repeat=args.repeat)) / per
        print(f"{name:36s} {py * 1e3:10.3f}ms {cy * 1e3:10.3f}ms {py / cy:7.1f}x")


if __name__ == "__main__":
    main()
