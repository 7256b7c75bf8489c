"""Pure-Python/NumPy versions of the compiled kernels (same signatures)."""

import numpy as np


def act_flat(add, mul, w, base, off, coef):
    out = np.zeros(len(base), dtype=np.int64)
    for k in range(len(off)):
        out = add[out, mul[coef[k], w[base + off[k]]]]
    return out


def cauchy_fill(add, mul, values, targets, tflat, choice, ptr, off, coef):
    for i in range(len(targets)):
        t = int(tflat[i])
        l = int(choice[i])
        acc = 0
        for k in range(int(ptr[l]), int(ptr[l + 1])):
            acc = add[acc, mul[coef[k], values[t + off[k]]]]
        values[targets[i]] = acc
