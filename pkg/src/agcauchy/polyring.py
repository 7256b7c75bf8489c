"""Sparse multivariate polynomials over a finite field.

A :class:`PolyRing` fixes the field, the number of variables and the
monomial order.  The order is weighted-graded: exponents are compared by
weighted degree ``o_1*a_1 + ... + o_r*a_r`` first and lexicographically
(``X1 > X2 > ...``) on ties.  With weights equal to the pole orders of the
coordinate functions this is the order in which syndromes become known.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from .errors import ArityMismatch, EmptySupport, FieldMismatch, ZeroPolynomial
from .gf import Field, FieldElement

Exponent = tuple[int, ...]


def leq_plus(a: Exponent, b: Exponent) -> bool:
    """Componentwise partial order on exponents."""
    return all(x <= y for x, y in zip(a, b))


def exp_add(a: Exponent, b: Exponent) -> Exponent:
    return tuple(x + y for x, y in zip(a, b))


def exp_sub(a: Exponent, b: Exponent) -> Exponent:
    return tuple(x - y for x, y in zip(a, b))


def exp_lcm(a: Exponent, b: Exponent) -> Exponent:
    return tuple(max(x, y) for x, y in zip(a, b))


@dataclass(frozen=True)
class MonomialOrder:
    """Weighted-graded order with lexicographic tie-break, ``X1 > X2 > ...``."""

    weights: tuple[int, ...]

    def __post_init__(self):
        if not self.weights or any(w <= 0 for w in self.weights):
            raise ValueError("weights must be positive integers")
        object.__setattr__(self, "weights", tuple(int(w) for w in self.weights))

    @property
    def nvars(self) -> int:
        return len(self.weights)

    def wdeg(self, alpha: Exponent) -> int:
        return sum(o * a for o, a in zip(self.weights, alpha))

    def key(self, alpha: Exponent):
        return (self.wdeg(alpha), *alpha)

    def less(self, a: Exponent, b: Exponent) -> bool:
        return self.key(a) < self.key(b)

    def max(self, exps):
        return max(exps, key=self.key)

    def sorted(self, exps, reverse=False):
        return sorted(exps, key=self.key, reverse=reverse)

    def initial_segment(self, bound: int) -> list[Exponent]:
        """All exponents of weighted degree ``<= bound`` in ascending order."""
        out: list[Exponent] = []

        def rec(prefix, i, budget):
            if i == self.nvars:
                out.append(tuple(prefix))
                return
            for k in range(budget // self.weights[i] + 1):
                prefix.append(k)
                rec(prefix, i + 1, budget - k * self.weights[i])
                prefix.pop()

        if bound >= 0:
            rec([], 0, bound)
        return self.sorted(out)

    def to_json(self) -> dict:
        return {"kind": "weighted-graded-lex", "weights": list(self.weights)}


class PolyRing:
    """The ring F[X1, ..., Xr] under a fixed :class:`MonomialOrder`."""

    def __init__(self, field: Field, order: MonomialOrder | int | tuple):
        if isinstance(order, int):
            order = MonomialOrder((1,) * order)
        elif not isinstance(order, MonomialOrder):
            order = MonomialOrder(tuple(order))
        self.field = field
        self.order = order
        self.nvars = order.nvars
        self.zero_exp: Exponent = (0,) * self.nvars

    def __eq__(self, other):
        return (
            isinstance(other, PolyRing)
            and self.field == other.field
            and self.order == other.order
        )

    def __hash__(self):
        return hash((self.field, self.order))

    def __repr__(self):
        return f"PolyRing({self.field!r}, weights={self.order.weights})"

    def poly(self, terms=None) -> "MultiPoly":
        return MultiPoly(self, terms or {})

    def zero(self) -> "MultiPoly":
        return MultiPoly(self, {})

    def const(self, c) -> "MultiPoly":
        return MultiPoly(self, {self.zero_exp: int(c)})

    def monomial(self, alpha: Exponent, c=1) -> "MultiPoly":
        if len(alpha) != self.nvars:
            raise ArityMismatch(f"exponent {alpha} has wrong arity")
        return MultiPoly(self, {tuple(alpha): int(c)})

    @property
    def gens(self) -> list["MultiPoly"]:
        out = []
        for i in range(self.nvars):
            e = [0] * self.nvars
            e[i] = 1
            out.append(self.monomial(tuple(e)))
        return out

    _TERM = re.compile(r"^(?:(\d+)\*?)?((?:X\d+(?:\^\d+)?\*?)*)$")

    def parse(self, text: str) -> "MultiPoly":
        """Parse the text form, e.g. ``"2*X1^2*X2 + 1"`` (``-`` allowed)."""
        s = text.replace(" ", "")
        if s in ("", "0"):
            return self.zero()
        s = s.replace("-", "+-")
        result = self.zero()
        for chunk in s.split("+"):
            if not chunk:
                continue
            negate = chunk.startswith("-")
            chunk = chunk.lstrip("-")
            m = self._TERM.match(chunk)
            if m is None or chunk == "":
                raise ValueError(f"cannot parse term {chunk!r}")
            coeff = int(m.group(1)) if m.group(1) else 1
            if not 0 <= coeff < self.field.q:
                raise ValueError(f"coefficient {coeff} out of range for {self.field!r}")
            alpha = [0] * self.nvars
            for var, power in re.findall(r"X(\d+)(?:\^(\d+))?", m.group(2)):
                i = int(var) - 1
                if not 0 <= i < self.nvars:
                    raise ArityMismatch(f"variable X{var} outside 1..{self.nvars}")
                alpha[i] += int(power) if power else 1
            term = self.monomial(tuple(alpha), coeff)
            result = result - term if negate else result + term
        return result


class MultiPoly:
    """Immutable sparse polynomial: exponent tuple -> nonzero canonical integer."""

    __slots__ = ("ring", "terms", "_lead")

    def __init__(self, ring: PolyRing, terms: dict):
        self.ring = ring
        self.terms = {tuple(e): int(c) for e, c in terms.items() if int(c)}
        self._lead = None

    # -- basic accessors --------------------------------------------------

    @property
    def field(self) -> Field:
        return self.ring.field

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    @property
    def LE(self) -> Exponent:
        if self._lead is None:
            if not self.terms:
                raise ZeroPolynomial("zero polynomial has no leading exponent")
            self._lead = self.ring.order.max(self.terms)
        return self._lead

    @property
    def LC(self) -> int:
        return self.terms[self.LE]

    def support(self) -> list[Exponent]:
        """Exponents in descending order."""
        return self.ring.order.sorted(self.terms, reverse=True)

    def max_exponent(self) -> Exponent:
        """Componentwise maximum of the support (the reach of the action)."""
        if not self.terms:
            raise ZeroPolynomial("zero polynomial has empty support")
        return tuple(max(col) for col in zip(*self.terms))

    def coeff(self, alpha: Exponent) -> int:
        return self.terms.get(tuple(alpha), 0)

    # -- arithmetic -------------------------------------------------------

    def _check(self, other: "MultiPoly"):
        if other.ring.nvars != self.ring.nvars:
            raise ArityMismatch("polynomials have different variable counts")
        if other.ring.field != self.ring.field:
            raise FieldMismatch("polynomials live over different fields")

    def _coerce(self, other):
        if isinstance(other, MultiPoly):
            self._check(other)
            return other
        if isinstance(other, FieldElement):
            if other.field != self.field:
                raise FieldMismatch("scalar from another field")
            return self.ring.const(other.value)
        if isinstance(other, int):
            return self.ring.const(other % self.field.q)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        F = self.field
        out = dict(self.terms)
        for e, c in other.terms.items():
            out[e] = F.add(out.get(e, 0), c)
        return MultiPoly(self.ring, out)

    __radd__ = __add__

    def __neg__(self):
        F = self.field
        return MultiPoly(self.ring, {e: F.neg(c) for e, c in self.terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        F = self.field
        out: dict = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = exp_add(e1, e2)
                out[e] = F.add(out.get(e, 0), F.mul(c1, c2))
        return MultiPoly(self.ring, out)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        result = self.ring.const(1)
        for _ in range(k):
            result = result * self
        return result

    def scale(self, c: int) -> "MultiPoly":
        F = self.field
        return MultiPoly(self.ring, {e: F.mul(v, c) for e, v in self.terms.items()})

    def shift(self, gamma: Exponent, c: int = 1) -> "MultiPoly":
        """``c * X^gamma * self``."""
        F = self.field
        return MultiPoly(
            self.ring, {exp_add(e, gamma): F.mul(v, c) for e, v in self.terms.items()}
        )

    def monic(self) -> "MultiPoly":
        return self.scale(self.field.inv(self.LC))

    def eval_int(self, point) -> int:
        F = self.field
        acc = 0
        for e, c in self.terms.items():
            t = c
            for x, k in zip(point, e):
                if k:
                    t = F.mul(t, F.pow(x, k))
            acc = F.add(acc, t)
        return acc

    def __call__(self, *point) -> FieldElement:
        if len(point) == 1 and isinstance(point[0], (tuple, list)):
            point = tuple(point[0])
        if len(point) != self.ring.nvars:
            raise ArityMismatch(f"expected {self.ring.nvars} coordinates, got {len(point)}")
        vals = []
        for x in point:
            if isinstance(x, FieldElement):
                if x.field != self.field:
                    raise FieldMismatch("point coordinate from another field")
                x = x.value
            vals.append(int(x))
        return FieldElement(self.field, self.eval_int(vals))

    # -- comparison and display -------------------------------------------

    def __eq__(self, other):
        if isinstance(other, MultiPoly):
            return self.ring == other.ring and self.terms == other.terms
        if isinstance(other, int) and other == 0:
            return not self.terms
        return NotImplemented

    def __hash__(self):
        return hash((self.ring, frozenset(self.terms.items())))

    def to_text(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for e in self.support():
            c = self.terms[e]
            mono = "*".join(
                f"X{i + 1}" + (f"^{k}" if k > 1 else "") for i, k in enumerate(e) if k
            )
            if not mono:
                parts.append(str(c))
            elif c == 1:
                parts.append(mono)
            else:
                parts.append(f"{c}*{mono}")
        return " + ".join(parts)

    __str__ = to_text

    def __repr__(self):
        return f"MultiPoly({self.to_text()!r})"


def leading_exponent(d: MultiPoly, order: MonomialOrder | None = None) -> Exponent:
    """The ``order``-maximal exponent of the support of ``d``."""
    if d.is_zero():
        raise ZeroPolynomial("zero polynomial has no leading exponent")
    if order is None:
        return d.LE
    return order.max(d.terms)


def vanishing_product(ring: PolyRing, points) -> MultiPoly:
    """``prod_i prod_j (X_i - a_i^(j))``: nonzero and zero on every point."""
    points = [tuple(int(x) for x in pt) for pt in points]
    if not points:
        raise EmptySupport("vanishing product of an empty point set")
    F = ring.field
    result = ring.const(1)
    for i, X in enumerate(ring.gens):
        for pt in points:
            if len(pt) != ring.nvars:
                raise ArityMismatch(f"point {pt} has wrong arity")
            result = result * (X + ring.const(F.neg(pt[i])))
    return result
