"""Shared builders for the test modules."""

import random

from agcauchy import GF, MonomialOrder, PolyRing


def ring(q, weights=(1, 1)):
    return PolyRing(GF(q), MonomialOrder(tuple(weights)))


def random_poly(R, rng: random.Random, max_deg=3, nterms=4, nonzero=True):
    q = R.field.q
    while True:
        terms = {}
        for _ in range(nterms):
            alpha = tuple(rng.randint(0, max_deg) for _ in range(R.nvars))
            terms[alpha] = rng.randrange(q)
        f = R.poly(terms)
        if not nonzero or not f.is_zero():
            return f


def random_series(F, box, rng: random.Random):
    from agcauchy import TruncatedSeries
    import numpy as np

    shape = tuple(b + 1 for b in box)
    vals = [rng.randrange(F.q) for _ in range(int(np.prod(shape)))]
    return TruncatedSeries(F, box, vals)


def agree(a, b) -> bool:
    """Equality on the intersection of the two boxes."""
    box = tuple(min(x, y) for x, y in zip(a.box, b.box))
    return a.restrict(box) == b.restrict(box)


def action_axioms_hold(R, rng: random.Random, box_side=7) -> bool:
    """One randomized case of the module axioms for the action on truncations."""
    from agcauchy import act

    F = R.field
    d1 = random_poly(R, rng, max_deg=2, nterms=3)
    d2 = random_poly(R, rng, max_deg=2, nterms=3)
    box = (box_side,) * R.nvars
    w, v = random_series(F, box, rng), random_series(F, box, rng)
    c = rng.randrange(F.q)
    return (
        agree(act(d1 * d2, w), act(d1, act(d2, w)))
        and agree(act(d1 + d2, w), act(d1, w) + act(d2, w))
        and agree(act(d1, w + v), act(d1, w) + act(d1, v))
        and act(d1, w.scale(c)) == act(d1, w).scale(c)
        and agree(act(d1.scale(c), w), act(d1, w).scale(c))
        and act(R.const(1), w) == w
    )


def kernel_nullity(G, box) -> int:
    """Dimension of {W on box : G o W = 0 where defined, W = 0 on the delta set}.

    Zero means a series killed by G on the box is fixed by its values on the
    delta set.  Computed by exact rank over the field.
    """
    import itertools

    from agcauchy import linalg

    cells = list(itertools.product(*(range(b + 1) for b in box)))
    index = {c: i for i, c in enumerate(cells)}
    rows = []
    for g in G:
        top = g.max_exponent()
        for t in itertools.product(*(range(b - m + 1) for b, m in zip(box, top))):
            row = [0] * len(cells)
            for beta, c in g.terms.items():
                row[index[tuple(x + y for x, y in zip(beta, t))]] = c
            rows.append(row)
    for d in G.delta_set().points:
        if d in index:
            row = [0] * len(cells)
            row[index[d]] = 1
            rows.append(row)
    return len(cells) - linalg.rank(G.ring.field, rows)
