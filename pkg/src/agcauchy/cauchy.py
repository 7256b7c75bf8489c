"""Homogeneous Cauchy problems ``G o W = 0, W|Delta(G) = V0``.

Given a Gröbner basis ``G`` with finite delta set ``Delta``, any assignment of
values on ``Delta`` extends to exactly one array killed by every ``G_l``.
Coefficients outside ``Delta`` are produced in increasing monomial order: an
exponent ``alpha`` outside ``Delta`` lies in some cone ``d + N^r`` with
``d = LE(G_l)``; writing ``alpha = t + d``, the relation ``(G_l o W)_t = 0``
solves for ``W_alpha`` in terms of coefficients at ``beta + t`` with
``beta < d``, all of which are strictly smaller than ``alpha`` and so already
known.
"""

from __future__ import annotations

import os

import numpy as np

from . import kernels
from .errors import InconsistentBasis, InfiniteDeltaSet
from .groebner import DeltaSet, GroebnerBasis
from .polyring import Exponent, exp_sub, leq_plus
from .series import TruncatedSeries, act

DEBUG = bool(os.environ.get("AGCAUCHY_DEBUG"))


class CauchyProblem:
    """Basis ``G``, its delta set and initial data ``V0`` on that delta set."""

    def __init__(self, basis: GroebnerBasis, initial: dict):
        if not basis.polys:
            raise InfiniteDeltaSet("empty basis: the zero ideal has an unbounded delta set")
        delta = basis.delta_set()
        if not delta.finite:
            raise InfiniteDeltaSet("basis does not bound a finite delta set")
        initial = {tuple(k): int(v) for k, v in dict(initial).items()}
        missing = delta.points - initial.keys()
        extra = initial.keys() - delta.points
        if missing or extra:
            raise ValueError(
                f"initial data must be given exactly on the delta set "
                f"(missing {sorted(missing)}, extra {sorted(extra)})"
            )
        self.basis = basis
        self.delta: DeltaSet = delta
        self.initial = initial
        self.field = basis.ring.field
        self.order = basis.order

    @property
    def nvars(self) -> int:
        return self.basis.ring.nvars

    def eligible(self, alpha: Exponent) -> list[int]:
        """Indices of basis elements whose leading exponent divides ``alpha``."""
        return [i for i, le in enumerate(self.basis.leading_exponents) if leq_plus(le, alpha)]


def _recur(basis: GroebnerBasis, l: int, alpha: Exponent, lookup) -> int:
    F = basis.ring.field
    g = basis[l]
    d = g.LE
    t = exp_sub(alpha, d)
    acc = 0
    for beta, c in g.terms.items():
        if beta == d:
            continue
        acc = F.add(acc, F.mul(c, lookup(tuple(b + s for b, s in zip(beta, t)))))
    return F.neg(F.div(acc, g.LC))


class LinearRecurringSeries:
    """The unique trajectory of a Cauchy problem, computed on demand.

    Coefficients are memoised; concurrent use needs external locking.
    """

    def __init__(self, prob: CauchyProblem, check_choice: bool | None = None):
        self.problem = prob
        self.check_choice = DEBUG if check_choice is None else check_choice
        self._memo: dict = dict(prob.initial)

    def __getitem__(self, alpha) -> int:
        if isinstance(alpha, int):
            alpha = (alpha,)
        alpha = tuple(alpha)
        if alpha in self._memo:
            return self._memo[alpha]
        prob = self.problem
        order = prob.order
        for gamma in order.initial_segment(order.wdeg(alpha)):
            if gamma in self._memo:
                continue
            # basis is sorted by leading exponent: the first eligible is the minimal one
            choices = prob.eligible(gamma)
            value = _recur(prob.basis, choices[0], gamma, self._memo.__getitem__)
            if self.check_choice:
                for l in choices[1:]:
                    if _recur(prob.basis, l, gamma, self._memo.__getitem__) != value:
                        raise InconsistentBasis(
                            f"basis elements {choices[0]} and {l} disagree at {gamma}"
                        )
            self._memo[gamma] = value
        return self._memo[alpha]

    def to_series(self, box: Exponent) -> TruncatedSeries:
        return solve_box(self.problem, box, check_choice=self.check_choice)


def solve_coefficient(prob: CauchyProblem, alpha, check_choice: bool | None = None) -> int:
    """``W_alpha`` of the unique solution."""
    return LinearRecurringSeries(prob, check_choice)[alpha]


class BoxSolver:
    """Precomputed worklist for one basis and box; :meth:`solve` maps any
    initial data to its trajectory.  Needs a field with full tables."""

    def __init__(self, basis: GroebnerBasis, box, check_choice: bool | None = None):
        if isinstance(box, int):
            box = (box,)
        self.basis = basis
        self.box = tuple(box)
        self.check_choice = DEBUG if check_choice is None else check_choice
        self.field = F = basis.ring.field
        order = basis.order
        self.delta = basis.delta_set()
        wmax = order.wdeg(self.box)
        self.dims = tuple(wmax // o + 1 for o in order.weights)
        strides = np.ones(len(self.dims), dtype=np.int64)
        for i in range(len(self.dims) - 2, -1, -1):
            strides[i] = strides[i + 1] * self.dims[i + 1]
        self._strides = strides
        self._wmax = wmax

        ptr, off, coef = [0], [], []
        for g in basis:
            neg_inv = F.neg(F.inv(g.LC))
            for beta, c in g.terms.items():
                if beta != g.LE:
                    off.append(self._flat(beta))
                    coef.append(F.mul(neg_inv, c))
            ptr.append(len(off))

        targets, tflat, choice = [], [], []
        self._alternatives = []
        for gamma in order.initial_segment(wmax):
            if gamma in self.delta.points:
                continue
            options = [i for i, le in enumerate(basis.leading_exponents) if leq_plus(le, gamma)]
            l = options[0]
            targets.append(self._flat(gamma))
            tflat.append(self._flat(exp_sub(gamma, basis.leading_exponents[l])))
            choice.append(l)
            if len(options) > 1:
                self._alternatives.append((gamma, options))

        i64 = lambda xs: np.ascontiguousarray(xs, dtype=np.int64)
        self._args = tuple(map(i64, (targets, tflat, choice, ptr, off, coef)))
        self._slice = tuple(slice(0, b + 1) for b in self.box)

    def _flat(self, alpha) -> int:
        return int(np.dot(self._strides, alpha))

    def solve(self, initial: dict) -> TruncatedSeries:
        F = self.field
        values = np.zeros(int(np.prod(self.dims)), dtype=np.int64)
        for alpha, v in initial.items():
            if self.basis.order.wdeg(alpha) <= self._wmax:
                values[self._flat(alpha)] = v
        kernels.cauchy_fill(F.add_table, F.mul_table, values, *self._args)
        dense = values.reshape(self.dims)
        if self.check_choice and self._alternatives:
            lookup = lambda a: int(dense[a])
            for gamma, options in self._alternatives:
                got = int(dense[gamma])
                for l in options[1:]:
                    if _recur(self.basis, l, gamma, lookup) != got:
                        raise InconsistentBasis(
                            f"basis elements {options[0]} and {l} disagree at {gamma}"
                        )
        return TruncatedSeries(F, self.box, dense[self._slice].copy())


def solve_box(prob: CauchyProblem, box, check_choice: bool | None = None) -> TruncatedSeries:
    """The unique trajectory restricted to ``{alpha <=_+ box}``."""
    if isinstance(box, int):
        box = (box,)
    box = tuple(box)
    check_choice = DEBUG if check_choice is None else check_choice
    F = prob.field
    if any(b < 0 for b in box):
        return TruncatedSeries(F, box)
    if not F.has_tables:
        lrs = LinearRecurringSeries(prob, check_choice)
        out = TruncatedSeries(F, box)
        for alpha in out.indices():
            out.coeffs[alpha] = lrs[alpha]
        return out
    return BoxSolver(prob.basis, box, check_choice).solve(prob.initial)


def consistency_check(prob: CauchyProblem, box, series: TruncatedSeries | None = None) -> bool:
    """Re-verify ``G_l o W = 0`` by direct summation, independent of the recurrence.

    Also checks that ``W`` restricts to the initial data on the delta set.
    """
    if isinstance(box, int):
        box = (box,)
    w = solve_box(prob, tuple(box)) if series is None else series
    for alpha, v in prob.initial.items():
        if leq_plus(alpha, w.box) and w[alpha] != v:
            return False
    for g in prob.basis:
        img = act(g, w)
        if not img.is_empty() and not img.is_zero():
            return False
    return True
