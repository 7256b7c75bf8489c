"""Truncated power series and the action of polynomials on them.

A polynomial ``d = sum d_beta X^beta`` acts on ``W = sum W_alpha Y^alpha`` by
shifting and summing coefficients::

    (d o W)_alpha = sum_beta d_beta * W_{alpha + beta}

Only a finite box ``{alpha : alpha <=_+ B}`` of ``W`` is ever stored, so every
result is defined exactly on the indices whose inputs are all present.  When
that set is empty the result is an empty series and membership questions
answer :data:`Verdict.UNDECIDED` instead of a vacuous yes.
"""

from __future__ import annotations

import enum
import itertools
from typing import Sequence

import numpy as np

from . import kernels
from .errors import ArityMismatch, DimensionMismatch, FieldMismatch
from .gf import Field
from .polyring import Exponent, MultiPoly


class Verdict(enum.Enum):
    HOLDS = "holds"
    FAILS = "fails"
    UNDECIDED = "undecided"

    def __bool__(self):
        if self is Verdict.UNDECIDED:
            raise TypeError("verdict is UNDECIDED (empty box); test it explicitly")
        return self is Verdict.HOLDS


class TruncatedSeries:
    """Dense coefficients ``W_alpha`` for every ``alpha <=_+ box``.

    A box with a negative component denotes the empty series.
    """

    __slots__ = ("field", "box", "coeffs")

    def __init__(self, field: Field, box: Exponent, coeffs=None):
        self.field = field
        self.box = tuple(int(b) for b in box)
        shape = self.shape
        if coeffs is None:
            coeffs = np.zeros(shape, dtype=np.int64)
        else:
            coeffs = np.asarray(coeffs, dtype=np.int64).reshape(shape)
        self.coeffs = coeffs

    @property
    def nvars(self) -> int:
        return len(self.box)

    @property
    def shape(self) -> tuple[int, ...]:
        return tuple(max(b + 1, 0) for b in self.box)

    def is_empty(self) -> bool:
        return any(b < 0 for b in self.box)

    def __getitem__(self, alpha) -> int:
        if isinstance(alpha, int):
            alpha = (alpha,)
        return int(self.coeffs[tuple(alpha)])

    def indices(self):
        return itertools.product(*(range(s) for s in self.shape))

    def is_zero(self) -> bool:
        return not self.coeffs.any()

    def restrict(self, box: Exponent) -> "TruncatedSeries":
        box = tuple(min(b, c) for b, c in zip(box, self.box))
        sl = tuple(slice(0, max(b + 1, 0)) for b in box)
        return TruncatedSeries(self.field, box, self.coeffs[sl].copy())

    def __add__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        _check_pair(self, other)
        box = tuple(min(a, b) for a, b in zip(self.box, other.box))
        a, b = self.restrict(box), other.restrict(box)
        return TruncatedSeries(self.field, box, self.field.vadd(a.coeffs, b.coeffs))

    def scale(self, c: int) -> "TruncatedSeries":
        return TruncatedSeries(self.field, self.box, self.field.vmul(c, self.coeffs))

    def __eq__(self, other):
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        return (
            self.field == other.field
            and self.box == other.box
            and np.array_equal(self.coeffs, other.coeffs)
        )

    def __repr__(self):
        return f"TruncatedSeries(box={self.box}, coeffs={self.coeffs.tolist()})"

    def to_json(self) -> dict:
        return {
            "r": self.nvars,
            "box": list(self.box),
            "coeffs": [int(c) for c in self.coeffs.ravel()],
        }

    @classmethod
    def from_json(cls, field: Field, obj: dict) -> "TruncatedSeries":
        box = tuple(obj["box"])
        if len(box) != obj.get("r", len(box)):
            raise ArityMismatch("series box length disagrees with r")
        return cls(field, box, obj["coeffs"])


def _check_pair(a: TruncatedSeries, b: TruncatedSeries):
    if a.field != b.field:
        raise FieldMismatch("series over different fields")
    if a.nvars != b.nvars:
        raise ArityMismatch("series with different variable counts")


def _check_poly(d: MultiPoly, w: TruncatedSeries):
    if d.field != w.field:
        raise FieldMismatch("polynomial and series over different fields")
    if d.ring.nvars != w.nvars:
        raise ArityMismatch(f"polynomial in {d.ring.nvars} variables, series in {w.nvars}")


def act(d: MultiPoly, w: TruncatedSeries) -> TruncatedSeries:
    """The series ``d o w`` on the largest box where it is determined."""
    _check_poly(d, w)
    if d.is_zero():
        return TruncatedSeries(w.field, w.box)
    reach = d.max_exponent()
    out_box = tuple(b - m for b, m in zip(w.box, reach))
    out = TruncatedSeries(w.field, out_box)
    if out.is_empty():
        return out
    F = w.field
    exps = list(d.terms)
    coef = np.array([d.terms[e] for e in exps], dtype=np.int64)
    if F.has_tables:
        wflat = np.ascontiguousarray(w.coeffs).ravel()
        strides = _c_strides(w.shape)
        grids = np.indices(out.shape).reshape(w.nvars, -1)
        base = np.ascontiguousarray(strides @ grids, dtype=np.int64)
        off = np.array([int(np.dot(strides, e)) for e in exps], dtype=np.int64)
        flat = kernels.act_flat(F.add_table, F.mul_table, wflat, base, off, coef)
        out.coeffs = np.asarray(flat, dtype=np.int64).reshape(out.shape)
        return out
    for alpha in out.indices():
        acc = 0
        for e, c in zip(exps, coef):
            acc = F.add(acc, F.mul(int(c), int(w.coeffs[tuple(a + b for a, b in zip(alpha, e))])))
        out.coeffs[alpha] = acc
    return out


def act_naive(d: MultiPoly, w: TruncatedSeries) -> TruncatedSeries:
    """Reference double loop for :func:`act`, one coefficient at a time."""
    _check_poly(d, w)
    if d.is_zero():
        return TruncatedSeries(w.field, w.box)
    reach = d.max_exponent()
    out = TruncatedSeries(w.field, tuple(b - m for b, m in zip(w.box, reach)))
    F = w.field
    for alpha in out.indices():
        acc = 0
        for beta, c in d.terms.items():
            idx = tuple(a + b for a, b in zip(alpha, beta))
            acc = F.add(acc, F.mul(c, int(w.coeffs[idx])))
        out.coeffs[alpha] = acc
    return out


def _c_strides(shape) -> np.ndarray:
    strides = np.ones(len(shape), dtype=np.int64)
    for i in range(len(shape) - 2, -1, -1):
        strides[i] = strides[i + 1] * shape[i + 1]
    return strides


def _matrix_shape(R: Sequence[Sequence[MultiPoly]]) -> tuple[int, int]:
    k = len(R)
    l = len(R[0]) if k else 0
    if any(len(row) != l for row in R):
        raise DimensionMismatch("ragged polynomial matrix")
    return k, l


def act_matrix(R: Sequence[Sequence[MultiPoly]], W: Sequence[TruncatedSeries]) -> list[TruncatedSeries]:
    """Matrix-vector action: component ``i`` is ``sum_j R[i][j] o W[j]``."""
    k, l = _matrix_shape(R)
    if l != len(W):
        raise DimensionMismatch(f"matrix has {l} columns, vector has {len(W)} entries")
    if not W:
        raise DimensionMismatch("empty series vector")
    for w in W[1:]:
        _check_pair(W[0], w)
    out = []
    for row in R:
        parts = [act(d, w) for d, w in zip(row, W)]
        box = tuple(min(col) for col in zip(*(p.box for p in parts)))
        acc = TruncatedSeries(W[0].field, box)
        for p in parts:
            acc = acc + p.restrict(box)
        out.append(acc)
    return out


def is_in_kernel(R: Sequence[Sequence[MultiPoly]], W: Sequence[TruncatedSeries]) -> Verdict:
    """Whether ``R o W`` vanishes on its (nonempty) box of definition."""
    images = act_matrix(R, W)
    if any(img.is_empty() for img in images):
        return Verdict.UNDECIDED
    return Verdict.HOLDS if all(img.is_zero() for img in images) else Verdict.FAILS


def orthogonal_test(f: MultiPoly, e: TruncatedSeries) -> Verdict:
    """Whether ``f o e = 0`` where testable: the ``1 x 1`` case of :func:`is_in_kernel`."""
    return is_in_kernel([[f]], [e])
