"""Compiled kernels vs the NumPy/Python fallback.

    python benchmarks/bench_kernels.py [--repeat 5]

Times the two hot loops (series action and Cauchy box fill) on the same
inputs through both backends and checks that their outputs agree.
"""

import argparse
import timeit

from agcauchy import GF, CauchyProblem, MonomialOrder, PolyRing, act, kernels, vanishing_ideal
from agcauchy import _kernels_py
from agcauchy.cauchy import BoxSolver
from agcauchy.series import TruncatedSeries


def backends():
    out = {"python": (_kernels_py.act_flat, _kernels_py.cauchy_fill)}
    try:
        from agcauchy import _kernels
    except ImportError:
        print("compiled kernels not built; timing the fallback only")
    else:
        out["compiled"] = (_kernels.act_flat, _kernels.cauchy_fill)
    return out


def cases():
    F = GF(16)
    R = PolyRing(F, MonomialOrder((1, 1)))
    d = R.parse("X1^3 + 5*X1*X2^2 + 7*X2^3 + X1 + 3")
    w = TruncatedSeries(F, (63, 63), [(i * 7 + 3) % 16 for i in range(64 * 64)])
    pts = [(x, (x * x + 3) % 16) for x in range(6)]
    G = vanishing_ideal(R, pts)
    delta = sorted(G.delta_set().points)
    prob = CauchyProblem(G, {a: (i + 1) % 16 for i, a in enumerate(delta)})
    solver = BoxSolver(G, (40, 40))
    return {
        "act 64x64, 5 terms, GF(16)": lambda: act(d, w),
        "cauchy fill 41x41, |Delta|=6, GF(16)": lambda: solver.solve(prob.initial),
    }


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--repeat", type=int, default=5)
    args = ap.parse_args()
    saved = (kernels.act_flat, kernels.cauchy_fill)
    results, outputs = {}, {}
    try:
        for name, (a, c) in backends().items():
            kernels.act_flat, kernels.cauchy_fill = a, c
            for label, fn in cases().items():
                outputs[name, label] = fn()
                best = min(timeit.repeat(fn, number=1, repeat=args.repeat))
                results[name, label] = best
    finally:
        kernels.act_flat, kernels.cauchy_fill = saved
    labels = sorted({label for _, label in results})
    print(f"{'case':40s} {'python':>10s} {'compiled':>10s} {'speedup':>8s}")
    for label in labels:
        py = results["python", label]
        co = results.get(("compiled", label))
        if co is None:
            print(f"{label:40s} {py * 1e3:9.2f}ms {'-':>10s}")
            continue
        assert outputs["python", label] == outputs["compiled", label], label
        print(f"{label:40s} {py * 1e3:9.2f}ms {co * 1e3:9.2f}ms {py / co:7.1f}x")


if __name__ == "__main__":
    main()
