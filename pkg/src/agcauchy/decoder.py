"""Syndrome decoding of one-point codes.

Pipeline for a received word ``w = c + e``:

1. known syndromes ``E_alpha = GT(w)_alpha`` on ``Z``;
2. Berlekamp-Massey-Sakata on ``E|Z`` gives a basis of the error-locator
   ideal, the polynomials annihilating ``E``;
3. the common zeros of that basis among the code points locate the errors;
4. the Cauchy problem ``G o E = 0, E|Delta(G) = E_known`` extends ``E``;
5. error values solve ``sum_j e_j X^alpha(P_j) = E_alpha`` on the support.

Every SUCCESS is re-verified against the parity checks and the known
syndromes, so a wrong locator surfaces as a failure status instead of a
silently wrong codeword.
"""

from __future__ import annotations

import enum
import itertools
from dataclasses import dataclass, field

from . import linalg
from .agcode import CodeSpec, SyndromeArray, evaluation_matrix, gt, known_syndromes
from .cauchy import CauchyProblem, solve_box
from .errors import (
    EmptySyndromes,
    Inconsistent,
    InitialDataOutsideZ,
    LengthMismatch,
    RankDeficient,
)
from .groebner import DeltaSet, GroebnerBasis, buchberger, delta_set
from .polyring import Exponent, MonomialOrder, MultiPoly, PolyRing, exp_sub, leq_plus
from .series import TruncatedSeries


class Status(enum.Enum):
    SUCCESS = "SUCCESS"
    LOCATOR_FAILED = "LOCATOR_FAILED"
    VALUES_FAILED = "VALUES_FAILED"
    INSUFFICIENT_SYNDROMES = "INSUFFICIENT_SYNDROMES"


# --- Berlekamp-Massey-Sakata -------------------------------------------------

@dataclass
class Witness:
    """A polynomial that first failed at ``fail`` with discrepancy ``disc``."""

    poly: MultiPoly
    fail: Exponent
    disc: int

    @property
    def span(self) -> Exponent:
        return exp_sub(self.fail, self.poly.LE)


@dataclass
class BmsState:
    minimal: list[MultiPoly]
    witnesses: list[Witness]
    processed: list[Exponent] = field(default_factory=list)

    @property
    def staircase(self) -> DeltaSet:
        pts = set()
        for w in self.witnesses:
            pts.update(itertools.product(*(range(s + 1) for s in w.span)))
        return DeltaSet(frozenset(pts), True)


def _discrepancy(f: MultiPoly, E, u: Exponent) -> int:
    F = f.field
    shift = exp_sub(u, f.LE)
    acc = 0
    for beta, c in f.terms.items():
        acc = F.add(acc, F.mul(c, E[tuple(b + s for b, s in zip(beta, shift))]))
    return acc


def _maximal(witnesses: list[Witness]) -> list[Witness]:
    out: list[Witness] = []
    for w in witnesses:
        s = w.span
        if any(leq_plus(s, o.span) for o in out):
            continue
        out = [o for o in out if not leq_plus(o.span, s)]
        out.append(w)
    return out


def _corners(spans: list[Exponent], nvars: int) -> list[Exponent]:
    """Minimal exponents outside the union of the boxes below ``spans``."""
    if not spans:
        return [(0,) * nvars]
    coords = [sorted({0} | {s[i] + 1 for s in spans}) for i in range(nvars)]
    outside = [
        c for c in itertools.product(*coords)
        if not any(leq_plus(c, s) for s in spans)
    ]
    return [c for c in outside if not any(o != c and leq_plus(o, c) for o in outside)]


def bms_run(syn: SyndromeArray, order: MonomialOrder | None = None) -> BmsState:
    """Process ``E`` over ``Z`` in increasing order, keeping one minimal
    polynomial per corner of the current staircase and one witness per
    maximal point of it."""
    if not syn.region:
        raise EmptySyndromes("no known syndromes")
    order = order or syn.order
    ring = PolyRing(syn.field, order)
    F = syn.field
    E = syn.values
    state = BmsState([ring.const(1)], [])
    for u in order.sorted(syn.region):
        disc = {}
        for i, f in enumerate(state.minimal):
            if leq_plus(f.LE, u):
                b = _discrepancy(f, E, u)
                if b:
                    disc[i] = b
        state.processed.append(u)
        if not disc:
            continue
        old = state.witnesses
        fresh = [Witness(state.minimal[i], u, b) for i, b in disc.items()]
        witnesses = _maximal(old + fresh)
        spans = [w.span for w in witnesses]
        new_minimal = []
        for s in _corners(spans, ring.nvars):
            candidates = [i for i, f in enumerate(state.minimal) if leq_plus(f.LE, s)]
            passing = [i for i in candidates if i not in disc]
            i = passing[0] if passing else candidates[0]
            f = state.minimal[i]
            h = f.shift(exp_sub(s, f.LE))
            if i in disc and leq_plus(s, u):
                need = exp_sub(u, s)
                w = next((w for w in old if leq_plus(need, w.span)), None)
                if w is None:
                    raise AssertionError(f"no witness covers {need} at {u}")
                c = F.neg(F.div(disc[i], w.disc))
                h = h + w.poly.shift(exp_sub(w.span, need), c)
            new_minimal.append(h)
        state.minimal = new_minimal
        state.witnesses = witnesses
    return state


def bms(syn: SyndromeArray, order: MonomialOrder | None = None) -> GroebnerBasis:
    """Reduced basis of the polynomials BMS finds valid on the known syndromes.

    An all-zero array yields the unit basis ``{1}`` (empty staircase), the
    convention for "no error".
    """
    state = bms_run(syn, order)
    ring = state.minimal[0].ring
    return buchberger(state.minimal, ring)


# --- locating, completing, solving -----------------------------------------

def locate_errors(G: GroebnerBasis, code: CodeSpec) -> list[int]:
    """Indices of code points where every basis element vanishes."""
    if G.is_unit():
        return []
    return [
        j for j, pt in enumerate(code.points)
        if all(g.eval_int(pt) == 0 for g in G)
    ]


def complete_syndromes(G: GroebnerBasis, syn: SyndromeArray, box) -> TruncatedSeries:
    """Extend the known syndromes to ``box`` through the Cauchy problem of ``G``."""
    box = tuple(box)
    if G.is_unit():
        return TruncatedSeries(syn.field, box)
    delta = delta_set(G)
    if not delta.finite:
        raise InitialDataOutsideZ("locator staircase is unbounded")
    outside = [al for al in delta.points if al not in syn.values]
    if outside:
        raise InitialDataOutsideZ(f"initial data needed outside Z at {sorted(outside)}")
    prob = CauchyProblem(G, {al: syn.values[al] for al in delta.points})
    return solve_box(prob, box)


def solve_error_values(support, E: TruncatedSeries, code: CodeSpec, exps=None) -> list[int]:
    """Error vector supported on ``support`` reproducing ``E`` on ``exps``
    (default: the whole box of ``E``)."""
    support = list(support)
    if not support:
        raise RankDeficient("empty support")
    exps = list(E.indices()) if exps is None else [tuple(a) for a in exps]
    pts = [code.points[j] for j in support]
    A = evaluation_matrix(code.field, pts, exps).tolist()
    b = [E[al] for al in exps]
    vals = linalg.solve(code.field, A, b)
    e = [0] * code.n
    for j, v in zip(support, vals):
        e[j] = v
    return e


@dataclass
class DecodeResult:
    status: Status
    error: list[int] | None
    codeword: list[int] | None
    locator: GroebnerBasis | None
    syndromes: TruncatedSeries | None
    detail: str = ""

    @property
    def error_positions(self) -> list[int]:
        return [j for j, v in enumerate(self.error or []) if v]

    @property
    def error_values(self) -> list[int]:
        return [v for v in (self.error or []) if v]

    def to_json(self) -> dict:
        return {
            "status": self.status.value,
            "error_positions": self.error_positions,
            "error_values": self.error_values,
            "codeword": self.codeword,
            "locator_basis": [g.to_text() for g in self.locator] if self.locator else [],
        }


def decode(w, code: CodeSpec) -> DecodeResult:
    w = [int(x) for x in w]
    if len(w) != code.n:
        raise LengthMismatch(f"word length {len(w)} != n = {code.n}")
    F = code.field
    syn = known_syndromes(w, code)
    if syn.is_zero():
        ring = PolyRing(F, code.order)
        return DecodeResult(Status.SUCCESS, [0] * code.n, w, GroebnerBasis(ring, [ring.const(1)]), None)

    G = bms(syn, code.order)

    def fail(status, detail, E=None):
        return DecodeResult(status, None, None, G, E, detail)

    delta = delta_set(G)
    if G.is_unit() or not delta.finite:
        return fail(Status.LOCATOR_FAILED, "locator ideal has no finite zero set")
    if any(al not in syn.values for al in delta.points):
        return fail(Status.INSUFFICIENT_SYNDROMES, "staircase leaves Z")
    if len(delta) > code.radius:
        return fail(Status.INSUFFICIENT_SYNDROMES, f"{len(delta)} errors exceed radius {code.radius}")
    support = locate_errors(G, code)
    if len(support) != len(delta):
        return fail(Status.LOCATOR_FAILED, f"{len(support)} zeros for staircase of size {len(delta)}")

    box = tuple(b + 1 for b in code.zero_box)
    E = complete_syndromes(G, syn, box)
    if any(E[al] != v for al, v in syn.values.items()):
        return fail(Status.LOCATOR_FAILED, "completed array disagrees with known syndromes", E)
    try:
        e = solve_error_values(support, E, code)
    except (Inconsistent, RankDeficient) as exc:
        return fail(Status.VALUES_FAILED, str(exc), E)
    if any(e[j] == 0 for j in support):
        return fail(Status.VALUES_FAILED, "located position carries no error", E)

    c = [F.sub(x, y) for x, y in zip(w, e)]
    check = known_syndromes(e, code)
    if not code.is_codeword(c) or check.values != syn.values:
        return fail(Status.VALUES_FAILED, "parity re-check failed", E)
    return DecodeResult(Status.SUCCESS, e, c, G, E)


def error_patterns(n: int, q: int, weight: int):
    """Every error vector of exactly ``weight`` nonzero symbols."""
    for support in itertools.combinations(range(n), weight):
        for vals in itertools.product(range(1, q), repeat=weight):
            e = [0] * n
            for j, v in zip(support, vals):
                e[j] = v
            yield e


def validated_radius(code: CodeSpec, max_weight: int | None = None) -> int:
    """Largest ``t`` such that every error of weight ``<= t`` decodes exactly.

    Decoding sees ``w`` only through its syndromes, so sweeping errors on the
    zero codeword covers every codeword.  Measured exhaustively, not derived.
    """
    top = code.radius if max_weight is None else max_weight
    for t in range(1, top + 1):
        for e in error_patterns(code.n, code.field.q, t):
            res = decode(e, code)
            if res.status is not Status.SUCCESS or res.error != e:
                return t - 1
    return top
