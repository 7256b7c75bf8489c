"""Gröbner bases, normal forms and delta sets (footprints).

The delta set of a basis is the complement of the union of the cones
``LE(G_i) + N^r``: exactly the exponents whose monomials survive reduction.
It is the region where initial data of a Cauchy problem are prescribed.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field

from .polyring import (
    Exponent,
    MultiPoly,
    PolyRing,
    exp_add,
    exp_lcm,
    exp_sub,
    leq_plus,
)


@dataclass(frozen=True)
class DeltaSet:
    """An order ideal of N^r, or the marker for an unbounded one."""

    points: frozenset = field(default_factory=frozenset)
    finite: bool = True

    @classmethod
    def infinite(cls) -> "DeltaSet":
        return cls(frozenset(), False)

    def __contains__(self, alpha) -> bool:
        if not self.finite:
            raise ValueError("membership in an infinite delta set is not tabulated")
        return tuple(alpha) in self.points

    def __len__(self) -> int:
        if not self.finite:
            raise ValueError("infinite delta set has no size")
        return len(self.points)

    def __iter__(self):
        return iter(sorted(self.points))

    def sorted(self, order) -> list[Exponent]:
        return order.sorted(self.points)

    def bounding_box(self) -> Exponent | None:
        if not self.points:
            return None
        return tuple(max(col) for col in zip(*self.points))


def normal_form(f: MultiPoly, G) -> MultiPoly:
    """Full remainder of ``f`` on division by ``G``; support lies in the delta set."""
    basis = G.polys if isinstance(G, GroebnerBasis) else list(G)
    ring = f.ring
    F, order = ring.field, ring.order
    divisors = [(g.LE, F.inv(g.LC), g) for g in basis if g]
    p = dict(f.terms)
    rem: dict = {}
    while p:
        lt = max(p, key=order.key)
        c = p[lt]
        for le, inv_lc, g in divisors:
            if leq_plus(le, lt):
                factor = F.neg(F.mul(c, inv_lc))
                shift = exp_sub(lt, le)
                for e, gc in g.terms.items():
                    e2 = exp_add(e, shift)
                    v = F.add(p.get(e2, 0), F.mul(factor, gc))
                    if v:
                        p[e2] = v
                    else:
                        p.pop(e2, None)
                break
        else:
            rem[lt] = c
            del p[lt]
    return MultiPoly(ring, rem)


def s_polynomial(f: MultiPoly, g: MultiPoly) -> MultiPoly:
    F = f.field
    lcm = exp_lcm(f.LE, g.LE)
    a = f.shift(exp_sub(lcm, f.LE), F.inv(f.LC))
    b = g.shift(exp_sub(lcm, g.LE), F.inv(g.LC))
    return a - b


def reduce_basis(polys) -> list[MultiPoly]:
    """Minimal, inter-reduced, monic basis sorted by ascending leading exponent."""
    polys = [p.monic() for p in polys if p]
    if not polys:
        return []
    order = polys[0].ring.order
    polys.sort(key=lambda p: order.key(p.LE))
    minimal: list[MultiPoly] = []
    for p in polys:
        if not any(leq_plus(q.LE, p.LE) for q in minimal):
            minimal.append(p)
    out = []
    for i, p in enumerate(minimal):
        others = minimal[:i] + minimal[i + 1:]
        lead = p.ring.monomial(p.LE, 1)
        tail = normal_form(p - lead, others)
        out.append(lead + tail)
    return out


def buchberger(gens, ring: PolyRing | None = None) -> "GroebnerBasis":
    """Reduced Gröbner basis of the ideal generated by ``gens``.

    Pairs are taken by the normal selection strategy (smallest lcm of
    leading exponents first); the coprime-leading-exponent criterion and the
    chain criterion prune pairs that would reduce to zero.
    """
    gens = [g for g in gens]
    if ring is None:
        if not gens:
            raise ValueError("need a ring for an empty generator list")
        ring = gens[0].ring
    order = ring.order
    G: list[MultiPoly] = []
    for g in gens:
        if g.ring != ring:
            g = MultiPoly(ring, g.terms)
        h = normal_form(g, G) if G else g
        if h:
            G.append(h.monic())
    pending = {(i, j) for i in range(len(G)) for j in range(i + 1, len(G))}

    def lcm_key(pair):
        i, j = pair
        return order.key(exp_lcm(G[i].LE, G[j].LE))

    while pending:
        pair = min(pending, key=lambda pr: (lcm_key(pr), pr))
        pending.discard(pair)
        i, j = pair
        lei, lej = G[i].LE, G[j].LE
        lcm = exp_lcm(lei, lej)
        if lcm == exp_add(lei, lej):
            continue
        if _chain_criterion(G, pending, i, j, lcm):
            continue
        h = normal_form(s_polynomial(G[i], G[j]), G)
        if h:
            G.append(h.monic())
            k = len(G) - 1
            pending.update((m, k) for m in range(k))
    return GroebnerBasis(ring, reduce_basis(G))


def _chain_criterion(G, pending, i, j, lcm) -> bool:
    for k in range(len(G)):
        if k in (i, j):
            continue
        if not leq_plus(G[k].LE, lcm):
            continue
        if (min(i, k), max(i, k)) in pending or (min(j, k), max(j, k)) in pending:
            continue
        return True
    return False


class GroebnerBasis:
    """A reduced Gröbner basis together with its ring and order."""

    def __init__(self, ring: PolyRing, polys):
        self.ring = ring
        self.order = ring.order
        self.polys: list[MultiPoly] = list(polys)
        self.leading_exponents: list[Exponent] = [g.LE for g in self.polys]

    def __len__(self):
        return len(self.polys)

    def __iter__(self):
        return iter(self.polys)

    def __getitem__(self, i):
        return self.polys[i]

    def is_unit(self) -> bool:
        return any(le == self.ring.zero_exp for le in self.leading_exponents)

    def contains(self, f: MultiPoly) -> bool:
        return normal_form(f, self).is_zero()

    def is_groebner(self) -> bool:
        for f, g in itertools.combinations(self.polys, 2):
            if normal_form(s_polynomial(f, g), self):
                return False
        return True

    def same_ideal(self, other: "GroebnerBasis") -> bool:
        """Mutual normal-form reduction to zero."""
        return all(other.contains(g) for g in self) and all(self.contains(g) for g in other)

    def delta_set(self) -> DeltaSet:
        return delta_set(self)

    def to_json(self) -> dict:
        return {
            "order": self.order.to_json(),
            "field": self.ring.field.to_json(),
            "polys": [g.to_text() for g in self.polys],
        }

    def __eq__(self, other):
        return (
            isinstance(other, GroebnerBasis)
            and self.ring == other.ring
            and self.polys == other.polys
        )

    def __repr__(self):
        return f"GroebnerBasis([{', '.join(g.to_text() for g in self.polys)}])"


def delta_set_of_exponents(leading, nvars: int) -> DeltaSet:
    """Complement of the union of cones over ``leading`` exponents."""
    leading = [tuple(le) for le in leading]
    bounds = []
    for i in range(nvars):
        pure = [le[i] for le in leading if all(x == 0 for k, x in enumerate(le) if k != i)]
        if not pure:
            return DeltaSet.infinite()
        bounds.append(min(pure))
    pts = frozenset(
        alpha
        for alpha in itertools.product(*(range(b) for b in bounds))
        if not any(leq_plus(le, alpha) for le in leading)
    )
    return DeltaSet(pts, True)


def delta_set(G: GroebnerBasis) -> DeltaSet:
    if not G.polys:
        return DeltaSet.infinite()
    return delta_set_of_exponents(G.leading_exponents, G.ring.nvars)


def vanishing_ideal_generators(ring: PolyRing, points) -> list[MultiPoly]:
    """Generators of the ideal of a finite point set.

    Maximal ideals of distinct points are pairwise comaximal, so their
    intersection is their product; the products of one linear generator
    ``X_i - a_i`` per point generate it.
    """
    points = sorted({tuple(int(x) for x in pt) for pt in points})
    if not points:
        return [ring.const(1)]
    F = ring.field
    gens = ring.gens
    linear = [[gens[i] + ring.const(F.neg(pt[i])) for i in range(ring.nvars)] for pt in points]
    out = []
    for choice in itertools.product(range(ring.nvars), repeat=len(points)):
        f = ring.const(1)
        for lin, i in zip(linear, choice):
            f = f * lin[i]
        out.append(f)
    return out


def vanishing_ideal(ring: PolyRing, points) -> GroebnerBasis:
    return buchberger(vanishing_ideal_generators(ring, points), ring)
