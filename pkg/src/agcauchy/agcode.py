"""One-point algebraic-geometry codes and the generalized transform.

The working code is the dual evaluation code

    C = { c in F_q^n : sum_j c_j X^alpha(P_j) = 0  for all wdeg(alpha) <= a }

on a curve with a single point at infinity, where ``wdeg`` weights each
variable by the pole order of its coordinate function.  The generalized
transform sends a word ``w`` to the array ``W_alpha = sum_j w_j X^alpha(P_j)``;
for a codeword it vanishes on ``Z = {wdeg(alpha) <= a}``, so the received
word's transform on ``Z`` equals that of the error.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field

import numpy as np

from . import linalg
from .errors import (
    DegreeBoundViolation,
    DimensionMismatch,
    InvalidCurveMetadata,
    LengthMismatch,
    TooFewPoints,
)
from .gf import GF, Field
from .groebner import GroebnerBasis, buchberger
from .polyring import Exponent, MonomialOrder, MultiPoly, PolyRing, leq_plus
from .series import TruncatedSeries


@dataclass
class CurveSpec:
    """Affine model of a curve with one point at infinity.

    ``genus`` and ``pole_orders`` are metadata; :meth:`validate` checks them
    against the rank of monomial evaluation matrices on the rational points.
    """

    field: Field
    nvars: int
    polys: list[str]
    genus: int
    pole_orders: tuple[int, ...]
    name: str = "custom"
    ring: PolyRing = field(init=False, repr=False)
    relations: list[MultiPoly] = field(init=False, repr=False)
    relation_basis: GroebnerBasis = field(init=False, repr=False)

    def __post_init__(self):
        self.pole_orders = tuple(int(o) for o in self.pole_orders)
        if len(self.pole_orders) != self.nvars:
            raise InvalidCurveMetadata("need one pole order per variable")
        self.ring = PolyRing(self.field, MonomialOrder(self.pole_orders))
        self.relations = [self.ring.parse(p) if isinstance(p, str) else p for p in self.polys]
        self.polys = [p.to_text() for p in self.relations]
        self.relation_basis = buchberger(self.relations, self.ring)

    @property
    def order(self) -> MonomialOrder:
        return self.ring.order

    def is_standard(self, alpha: Exponent) -> bool:
        """``X^alpha`` is not reducible modulo the curve relations."""
        return not any(leq_plus(le, alpha) for le in self.relation_basis.leading_exponents)

    def monomials(self, a: int) -> list[Exponent]:
        """Standard monomials of weighted degree ``<= a`` in increasing order."""
        return [al for al in self.order.initial_segment(a) if self.is_standard(al)]

    def validate(self, points=None) -> None:
        """Riemann-Roch rank check for every ``2g - 2 < a < n``."""
        pts = enumerate_points(self) if points is None else points
        n = len(pts)
        F = self.field
        for a in range(max(2 * self.genus - 1, 0), n):
            M = evaluation_matrix(F, pts, self.monomials(a))
            rk = linalg.rank(F, M.tolist()) if len(M) else 0
            if rk != a - self.genus + 1:
                raise InvalidCurveMetadata(
                    f"{self.name}: rank {rk} != a - g + 1 = {a - self.genus + 1} at a = {a}"
                )

    def to_json(self) -> dict:
        return {
            "name": self.name,
            "r": self.nvars,
            "polys": list(self.polys),
            "genus": self.genus,
            "pole_orders": list(self.pole_orders),
        }


def projective_line(field: Field | int) -> CurveSpec:
    F = GF(field) if isinstance(field, int) else field
    return CurveSpec(F, 1, [], 0, (1,), name="line")


def hermitian(q0: int) -> CurveSpec:
    """``X1^(q0+1) = X2^q0 + X2`` over GF(q0^2): genus q0(q0-1)/2, q0^3 affine points."""
    F = GF(q0 * q0)
    neg1 = F.neg(1)
    c = "" if neg1 == 1 else f"{neg1}*"
    poly = f"X1^{q0 + 1} + {c}X2^{q0} + {c}X2"
    return CurveSpec(F, 2, [poly], q0 * (q0 - 1) // 2, (q0, q0 + 1), name=f"hermitian-{q0}")


CATALOG = {"line": projective_line, "hermitian": hermitian}


def enumerate_points(curve: CurveSpec) -> list[tuple[int, ...]]:
    """Affine F_q-rational points, lexicographic in the integer encodings."""
    return [
        pt
        for pt in itertools.product(range(curve.field.q), repeat=curve.nvars)
        if all(f.eval_int(pt) == 0 for f in curve.relations)
    ]


def power_tables(F: Field, points, max_exp: Exponent) -> list[np.ndarray]:
    """``tab[i][j, k] = P_j[i] ** k`` for ``k <= max_exp[i]``."""
    tabs = []
    for i, top in enumerate(max_exp):
        t = np.ones((len(points), top + 1), dtype=np.int64)
        for j, pt in enumerate(points):
            for k in range(1, top + 1):
                t[j, k] = F.mul(int(t[j, k - 1]), pt[i])
        tabs.append(t)
    return tabs


def evaluation_matrix(F: Field, points, exps) -> np.ndarray:
    """Rows ``(X^alpha(P_1), ..., X^alpha(P_n))`` for each ``alpha`` in ``exps``."""
    exps = list(exps)
    if not exps:
        return np.zeros((0, len(points)), dtype=np.int64)
    top = tuple(max(col) for col in zip(*exps))
    tabs = power_tables(F, points, top)
    M = np.ones((len(exps), len(points)), dtype=np.int64)
    for r, alpha in enumerate(exps):
        for i, k in enumerate(alpha):
            if k:
                M[r] = F.vmul(M[r], tabs[i][:, k])
    return M


@dataclass
class CodeSpec:
    curve: CurveSpec
    points: list[tuple[int, ...]]
    a: int
    monomials: list[Exponent]
    parity_check: list[list[int]]
    generator: list[list[int]]

    @property
    def field(self) -> Field:
        return self.curve.field

    @property
    def order(self) -> MonomialOrder:
        return self.curve.order

    @property
    def ring(self) -> PolyRing:
        return self.curve.ring

    @property
    def n(self) -> int:
        return len(self.points)

    @property
    def dimension(self) -> int:
        return len(self.generator)

    @property
    def designed_distance(self) -> int:
        return self.a - 2 * self.curve.genus + 2

    @property
    def radius(self) -> int:
        """Errors of weight up to this are the unique nearest explanation."""
        return (self.designed_distance - 1) // 2

    @property
    def zero_region(self) -> list[Exponent]:
        """``Z``: all exponents of weighted degree ``<= a``, increasing."""
        return self.order.initial_segment(self.a)

    @property
    def zero_box(self) -> Exponent:
        return tuple(self.a // o for o in self.order.weights)

    def syndrome(self, w) -> list[int]:
        return linalg.matvec(self.field, self.parity_check, w)

    def is_codeword(self, w) -> bool:
        return not any(self.syndrome(w))

    def encode(self, message) -> list[int]:
        if len(message) != self.dimension:
            raise DimensionMismatch(f"message length {len(message)} != dimension {self.dimension}")
        return linalg.vecmat(self.field, message, self.generator)

    def to_json(self) -> dict:
        return {
            "field": self.field.to_json(),
            "curve": self.curve.to_json(),
            "a": self.a,
            "points": [list(p) for p in self.points],
            "n": self.n,
            "dimension": self.dimension,
            "designed_distance": self.designed_distance,
            "monomials": [list(m) for m in self.monomials],
            "parity_check": self.parity_check,
            "generator": self.generator,
        }


def build_code(curve: CurveSpec, a: int, points=None) -> CodeSpec:
    """The dual one-point code of degree bound ``a`` on ``points`` (default: all)."""
    all_pts = enumerate_points(curve)
    if points is None:
        pts = all_pts
    else:
        pts = [tuple(int(x) for x in p) for p in points]
        bad = set(pts) - set(all_pts)
        if bad:
            raise ValueError(f"not rational points of the curve: {sorted(bad)}")
        if len(set(pts)) != len(pts):
            raise ValueError("points must be distinct")
    n, g = len(pts), curve.genus
    if n <= 2 * g - 1 or n == 0:
        raise TooFewPoints(f"n = {n} leaves no degree bound with 2g-2 < a < n (g = {g})")
    if not 2 * g - 2 < a < n:
        raise DegreeBoundViolation(f"need {2 * g - 2} < a < {n}, got a = {a}")
    F = curve.field
    mons = curve.monomials(a)
    H = evaluation_matrix(F, pts, mons).tolist()
    rk = linalg.rank(F, H)
    if rk != a - g + 1:
        raise InvalidCurveMetadata(f"parity-check rank {rk} != a - g + 1 = {a - g + 1}")
    Gm = linalg.nullspace(F, H, n)
    return CodeSpec(curve, pts, a, mons, H, Gm)


def gt(w, code: CodeSpec, box) -> TruncatedSeries:
    """Generalized transform of ``w`` on ``{alpha <=_+ box}`` by direct summation."""
    if isinstance(box, int):
        box = (box,)
    w = [int(x) for x in w]
    if len(w) != code.n:
        raise LengthMismatch(f"word length {len(w)} != n = {code.n}")
    F = code.field
    out = TruncatedSeries(F, tuple(box))
    if out.is_empty():
        return out
    exps = list(out.indices())
    M = evaluation_matrix(F, code.points, exps)
    acc = np.zeros(len(exps), dtype=np.int64)
    for j, wj in enumerate(w):
        if wj:
            acc = F.vadd(acc, F.vmul(M[:, j], wj))
    out.coeffs = acc.reshape(out.shape)
    return out


@dataclass
class SyndromeArray:
    """``E_alpha`` on the known region ``Z`` (a monomial-order initial segment)."""

    field: Field
    order: MonomialOrder
    region: list[Exponent]
    values: dict

    def __getitem__(self, alpha) -> int:
        return self.values[tuple(alpha)]

    def is_zero(self) -> bool:
        return not any(self.values.values())

    @property
    def box(self) -> Exponent:
        return tuple(max(col) for col in zip(*self.region))

    def series(self) -> TruncatedSeries:
        """Bounding-box series; positions outside ``Z`` are placeholders (0)."""
        s = TruncatedSeries(self.field, self.box)
        for alpha, v in self.values.items():
            s.coeffs[alpha] = v
        return s


def known_syndromes(w, code: CodeSpec) -> SyndromeArray:
    """``GT(w)`` on ``Z``; equals ``GT(e)`` there for ``w = c + e``."""
    region = code.zero_region
    W = gt(w, code, code.zero_box)
    return SyndromeArray(code.field, code.order, region, {al: W[al] for al in region})
