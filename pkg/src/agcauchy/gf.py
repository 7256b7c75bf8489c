"""Exact arithmetic in GF(p^m).

Elements are encoded as integers in ``[0, q)``: the base-``p`` digits of the
integer are the coordinates of the element in the polynomial basis
``1, t, t^2, ...`` modulo the field's modulus.  In GF(4) with modulus
``t^2 + t + 1`` the encodings ``0, 1, 2, 3`` stand for ``0, 1, t, t + 1``.

Two multiplication paths are kept: a schoolbook polynomial product with
reduction, and log/antilog tables (built from the schoolbook path) for
``q <= 2**16``.  Fields with ``q <= 256`` also carry full ``q x q`` addition
and multiplication tables as NumPy arrays, which the vectorised series
kernels consume.
"""

from __future__ import annotations

import functools
import itertools
import warnings

import numpy as np

from .errors import DivisionByZero, FieldMismatch, NotPrime, ReducibleModulus

LOG_TABLE_LIMIT = 2**16
FULL_TABLE_LIMIT = 256

# Low-to-high coefficient lists; Conway polynomials where one is standard.
DEFAULT_MODULI = {
    (2, 2): (1, 1, 1),
    (2, 3): (1, 1, 0, 1),
    (2, 4): (1, 1, 0, 0, 1),
    (2, 5): (1, 0, 1, 0, 0, 1),
    (2, 6): (1, 1, 0, 1, 1, 0, 1),
    (2, 8): (1, 0, 1, 1, 1, 0, 0, 0, 1),
    (3, 2): (2, 2, 1),
    (3, 3): (1, 2, 0, 1),
    (5, 2): (2, 4, 1),
    (7, 2): (3, 6, 1),
}


class UnsupportedSizeWarning(UserWarning):
    """Field too large for log tables; arithmetic falls back to schoolbook."""


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


def _prime_factors(n: int) -> list[int]:
    out, f = [], 2
    while f * f <= n:
        if n % f == 0:
            out.append(f)
            while n % f == 0:
                n //= f
        f += 1
    if n > 1:
        out.append(n)
    return out


# --- polynomials over GF(p) as low-to-high coefficient lists --------------

def _trim(a: list[int]) -> list[int]:
    while a and a[-1] == 0:
        a.pop()
    return a


def _poly_mod(a: list[int], m: list[int], p: int) -> list[int]:
    a = _trim([c % p for c in a])
    dm = len(m) - 1
    inv_lead = pow(m[-1], p - 2, p)
    while len(a) - 1 >= dm:
        c = a[-1] * inv_lead % p
        shift = len(a) - 1 - dm
        for i, mc in enumerate(m):
            a[shift + i] = (a[shift + i] - c * mc) % p
        _trim(a)
    return a


def is_irreducible(modulus, p: int) -> bool:
    """Trial division of ``modulus`` by every monic polynomial of degree <= m/2."""
    m = len(modulus) - 1
    if m < 1:
        return False
    if m == 1:
        return True
    mod = list(modulus)
    for d in range(1, m // 2 + 1):
        for low in itertools.product(range(p), repeat=d):
            if not _poly_mod(mod, list(low) + [1], p):
                return False
    return True


class Field:
    """The finite field GF(p^m) with a fixed irreducible modulus.

    Immutable after construction.  Two fields compare equal when they share
    characteristic and modulus, which is exactly when their integer
    encodings agree.
    """

    __slots__ = (
        "p", "m", "q", "modulus", "generator", "exp_table", "log_table",
        "add_table", "mul_table", "neg_table", "inv_table", "_hash",
    )

    def __init__(self, p: int, m: int = 1, modulus=None):
        if not is_prime(p):
            raise NotPrime(f"{p} is not prime")
        if m < 1:
            raise ValueError("extension degree must be >= 1")
        if modulus is None:
            modulus = DEFAULT_MODULI.get((p, m), (0, 1) if m == 1 else None)
            if modulus is None:
                raise ValueError(f"no default modulus for GF({p}^{m}); pass one")
        modulus = tuple(int(c) % p for c in modulus)
        if len(modulus) != m + 1 or modulus[-1] != 1:
            raise ValueError(f"modulus must be monic of degree {m}")
        if not is_irreducible(modulus, p):
            raise ReducibleModulus(f"{list(modulus)} is reducible over GF({p})")
        self.p, self.m, self.q = p, m, p**m
        self.modulus = modulus
        self._hash = hash((p, modulus))
        self.exp_table = self.log_table = None
        self.add_table = self.mul_table = self.neg_table = self.inv_table = None
        self.generator = self._find_generator()
        if self.q <= LOG_TABLE_LIMIT:
            self._build_log_tables()
        else:
            warnings.warn(
                f"GF({p}^{m}) exceeds {LOG_TABLE_LIMIT} elements; no log tables",
                UnsupportedSizeWarning,
                stacklevel=2,
            )
        if self.q <= FULL_TABLE_LIMIT:
            self._build_full_tables()

    # -- encoding ---------------------------------------------------------

    def digits(self, a: int) -> list[int]:
        p = self.p
        out = []
        for _ in range(self.m):
            a, d = divmod(a, p)
            out.append(d)
        return out

    def from_digits(self, ds) -> int:
        v = 0
        for d in reversed(list(ds)):
            v = v * self.p + (d % self.p)
        return v

    # -- arithmetic on canonical integers ---------------------------------

    def add(self, a: int, b: int) -> int:
        if self.m == 1:
            return (a + b) % self.p
        if self.p == 2:
            return a ^ b
        if self.add_table is not None:
            return int(self.add_table[a, b])
        return self.from_digits(x + y for x, y in zip(self.digits(a), self.digits(b)))

    def neg(self, a: int) -> int:
        if self.m == 1:
            return -a % self.p
        if self.p == 2:
            return a
        return self.from_digits(-x for x in self.digits(a))

    def sub(self, a: int, b: int) -> int:
        return self.add(a, self.neg(b))

    def mul_schoolbook(self, a: int, b: int) -> int:
        if self.m == 1:
            return a * b % self.p
        if a == 0 or b == 0:
            return 0
        p = self.p
        da, db = self.digits(a), self.digits(b)
        prod = [0] * (2 * self.m - 1)
        for i, x in enumerate(da):
            if x:
                for j, y in enumerate(db):
                    prod[i + j] += x * y
        return self.from_digits(_poly_mod(prod, list(self.modulus), p) + [0] * self.m)

    def mul(self, a: int, b: int) -> int:
        if a == 0 or b == 0:
            return 0
        if self.m == 1:
            return a * b % self.p
        if self.log_table is not None:
            lt = self.log_table
            return int(self.exp_table[(lt[a] + lt[b]) % (self.q - 1)])
        return self.mul_schoolbook(a, b)

    def pow(self, a: int, k: int) -> int:
        if k < 0:
            return self.pow(self.inv(a), -k)
        if a == 0:
            return 1 if k == 0 else 0
        if self.m == 1:
            return pow(a, k, self.p)
        if self.log_table is not None:
            return int(self.exp_table[self.log_table[a] * k % (self.q - 1)])
        result, base = 1, a
        while k:
            if k & 1:
                result = self.mul_schoolbook(result, base)
            base = self.mul_schoolbook(base, base)
            k >>= 1
        return result

    def inv(self, a: int) -> int:
        if a == 0:
            raise DivisionByZero("inverse of zero")
        if self.m == 1:
            return pow(a, self.p - 2, self.p)
        if self.log_table is not None:
            return int(self.exp_table[(-self.log_table[a]) % (self.q - 1)])
        return self.pow(a, self.q - 2)

    def div(self, a: int, b: int) -> int:
        return self.mul(a, self.inv(b))

    # -- construction helpers ---------------------------------------------

    def _find_generator(self) -> int:
        if self.q == 2:
            return 1
        order = self.q - 1
        factors = _prime_factors(order)
        for g in range(2 if self.m == 1 else self.p, self.q):
            if all(self._pow_slow(g, order // f) != 1 for f in factors):
                return g
        raise AssertionError("multiplicative group has no generator")

    def _pow_slow(self, a: int, k: int) -> int:
        result, base = 1, a
        while k:
            if k & 1:
                result = self.mul_schoolbook(result, base)
            base = self.mul_schoolbook(base, base)
            k >>= 1
        return result

    def _build_log_tables(self):
        n = self.q - 1
        exp = np.zeros(2 * n if n else 1, dtype=np.int64)
        log = np.full(self.q, -1, dtype=np.int64)
        x = 1
        for i in range(n):
            exp[i] = x
            log[x] = i
            x = self.mul_schoolbook(x, self.generator)
        if x != 1:
            raise AssertionError("generator order is not q - 1")
        exp[n:] = exp[:n]
        self.exp_table, self.log_table = exp, log

    def _build_full_tables(self):
        q = self.q
        idx = np.arange(q)
        if self.m == 1:
            add = (idx[:, None] + idx[None, :]) % q
        elif self.p == 2:
            add = idx[:, None] ^ idx[None, :]
        else:
            dig = np.array([self.digits(a) for a in range(q)])
            place = self.p ** np.arange(self.m)
            add = ((dig[:, None, :] + dig[None, :, :]) % self.p) @ place
        mul = np.zeros((q, q), dtype=np.int64)
        if q > 1:
            lg = self.log_table[1:]
            mul[1:, 1:] = self.exp_table[(lg[:, None] + lg[None, :]) % (q - 1)]
        self.add_table = add.astype(np.int64)
        self.mul_table = mul
        self.neg_table = np.array([int(np.flatnonzero(add[a] == 0)[0]) for a in range(q)])
        inv = np.zeros(q, dtype=np.int64)
        for a in range(1, q):
            inv[a] = int(np.flatnonzero(mul[a] == 1)[0])
        self.inv_table = inv

    # -- vectorised helpers (NumPy arrays of canonical integers) ------------

    @property
    def has_tables(self) -> bool:
        return self.mul_table is not None

    def vadd(self, a, b):
        a, b = np.asarray(a, dtype=np.int64), np.asarray(b, dtype=np.int64)
        if self.m == 1:
            return (a + b) % self.p
        if self.p == 2:
            return a ^ b
        if self.add_table is not None:
            return self.add_table[a, b]
        return np.vectorize(self.add, otypes=[np.int64])(a, b)

    def vmul(self, a, b):
        a, b = np.asarray(a, dtype=np.int64), np.asarray(b, dtype=np.int64)
        if self.m == 1:
            return (a * b) % self.p
        if self.mul_table is not None:
            return self.mul_table[a, b]
        return np.vectorize(self.mul, otypes=[np.int64])(a, b)

    def vneg(self, a):
        a = np.asarray(a, dtype=np.int64)
        if self.m == 1:
            return (-a) % self.p
        if self.p == 2:
            return a
        return np.vectorize(self.neg, otypes=[np.int64])(a)

    # -- element API ----------------------------------------------------------

    def __call__(self, value) -> "FieldElement":
        if isinstance(value, FieldElement):
            if value.field != self:
                raise FieldMismatch("element belongs to another field")
            return value
        v = int(value)
        if not 0 <= v < self.q:
            raise ValueError(f"{v} is not a canonical encoding in GF({self.q})")
        return FieldElement(self, v)

    def elements(self):
        return [FieldElement(self, v) for v in range(self.q)]

    @property
    def zero(self) -> "FieldElement":
        return FieldElement(self, 0)

    @property
    def one(self) -> "FieldElement":
        return FieldElement(self, 1)

    def to_json(self) -> dict:
        return {"p": self.p, "m": self.m, "modulus": list(self.modulus)}

    def __eq__(self, other):
        return (
            isinstance(other, Field)
            and self.p == other.p
            and self.modulus == other.modulus
        )

    def __hash__(self):
        return self._hash

    def __repr__(self):
        if self.m == 1:
            return f"GF({self.p})"
        return f"GF({self.p}^{self.m}, modulus={list(self.modulus)})"


@functools.lru_cache(maxsize=None)
def _cached_field(p, m, modulus):
    return Field(p, m, modulus)


def field_new(p: int, m: int = 1, modulus=None) -> Field:
    """Return GF(p^m); instances are cached so table construction runs once."""
    if modulus is None:
        modulus = DEFAULT_MODULI.get((p, m), (0, 1) if m == 1 else None)
    if modulus is not None:
        modulus = tuple(int(c) % p for c in modulus)
    return _cached_field(p, m, modulus)


def GF(q: int) -> Field:
    """Field of order ``q`` using the default modulus catalog."""
    for p in range(2, q + 1):
        if q % p == 0:
            break
    m, r = 0, q
    while r % p == 0:
        r //= p
        m += 1
    if r != 1 or not is_prime(p):
        raise NotPrime(f"{q} is not a prime power")
    return field_new(p, m)


def field_from_json(obj: dict) -> Field:
    return field_new(int(obj["p"]), int(obj.get("m", 1)), obj.get("modulus"))


class FieldElement:
    """A single element of a :class:`Field`, with operator overloads."""

    __slots__ = ("field", "value")

    def __init__(self, field: Field, value: int):
        self.field = field
        self.value = value

    def _other(self, other) -> int:
        if isinstance(other, FieldElement):
            if other.field != self.field:
                raise FieldMismatch(f"{self.field!r} vs {other.field!r}")
            return other.value
        raise FieldMismatch(f"cannot combine a field element with {type(other).__name__}")

    def __add__(self, other):
        return FieldElement(self.field, self.field.add(self.value, self._other(other)))

    def __sub__(self, other):
        return FieldElement(self.field, self.field.sub(self.value, self._other(other)))

    def __mul__(self, other):
        return FieldElement(self.field, self.field.mul(self.value, self._other(other)))

    def __truediv__(self, other):
        return FieldElement(self.field, self.field.div(self.value, self._other(other)))

    def __neg__(self):
        return FieldElement(self.field, self.field.neg(self.value))

    def __pow__(self, k: int):
        return FieldElement(self.field, self.field.pow(self.value, k))

    def inv(self):
        return FieldElement(self.field, self.field.inv(self.value))

    def __bool__(self):
        return self.value != 0

    def __int__(self):
        return self.value

    def __index__(self):
        return self.value

    def __eq__(self, other):
        if isinstance(other, FieldElement):
            return self.field == other.field and self.value == other.value
        return NotImplemented

    def __hash__(self):
        return hash((self.field, self.value))

    def __repr__(self):
        return f"{self.field!r}({self.value})"
