"""Finite fields F_p and F_{p^k} with elements encoded as integers.

An element of F_{p^k} is a polynomial in the generator t of degree < k with
coefficients in F_p; its index is the base-p number whose digits are those
coefficients, constant term as the least significant digit.  Index 0 is zero,
index 1 is one.
"""
from __future__ import annotations

import functools
import itertools
from dataclasses import dataclass

from .config import GuardError, current_guards, Guards

TABLE_LIMIT = 2**12  # log/exp tables up to this order
ADD_TABLE_LIMIT = 2**8


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


def split_prime_power(q: int) -> tuple[int, int]:
    """Return (p, k) with q = p**k, p prime; ValueError otherwise."""
    if not isinstance(q, int) or q < 2:
        raise ValueError(f"{q!r} is not a prime power")
    p = next(d for d in itertools.count(2) if q % d == 0)
    k = 0
    m = q
    while m % p == 0:
        m //= p
        k += 1
    if m != 1:
        raise ValueError(f"{q} is not a prime power")
    return p, k


# -- plain F_p polynomial helpers, used only to pick the modulus -----------

def _fp_rem(a: list[int], b: list[int], p: int) -> list[int]:
    a = list(a)
    inv_lead = pow(b[-1], p - 2, p)
    while len(a) >= len(b):
        c = a[-1] * inv_lead % p
        shift = len(a) - len(b)
        for i, bi in enumerate(b):
            a[shift + i] = (a[shift + i] - c * bi) % p
        while a and a[-1] == 0:
            a.pop()
    return a


def _fp_is_irreducible(coeffs: list[int], p: int) -> bool:
    k = len(coeffs) - 1
    for e in range(1, k // 2 + 1):
        for low in itertools.product(range(p), repeat=e):
            if not _fp_rem(coeffs, list(low) + [1], p):
                return False
    return True


def least_irreducible(p: int, k: int) -> tuple[int, ...]:
    """Least monic irreducible of degree k over F_p.

    Candidates are ordered by their low coefficients (c_0, c_1, ..., c_{k-1})
    compared lexicographically, constant term first.
    """
    for low in itertools.product(range(p), repeat=k):
        coeffs = list(low) + [1]
        if low[0] != 0 and _fp_is_irreducible(coeffs, p):
            return tuple(coeffs)
    raise AssertionError(f"no irreducible of degree {k} over F_{p}")  # pragma: no cover


class Field:
    """The field F_q, q = p**k.  Build instances with :func:`make_field`.

    Arithmetic methods act on integer indices; :class:`FieldElement` wraps an
    index together with its field for operator syntax.
    """

    __slots__ = ("p", "k", "modulus", "order", "_exp", "_log", "_add", "_neg")

    def __init__(self, p: int, k: int, modulus: tuple[int, ...] | None):
        self.p = p
        self.k = k
        self.modulus = modulus
        self.order = p**k
        self._exp = self._log = self._add = self._neg = None
        if k > 1 and self.order <= TABLE_LIMIT:
            self._build_tables()

    # identity and serialization
    def _key(self):
        return (self.p, self.k, self.modulus)

    def __eq__(self, other):
        return isinstance(other, Field) and self._key() == other._key()

    def __hash__(self):
        return hash(self._key())

    def __repr__(self):
        return f"F_{self.order}" if self.k == 1 else f"F_{self.order}[mod {list(self.modulus)}]"

    def to_json(self) -> dict:
        return {"p": self.p, "k": self.k,
                "modulus": None if self.modulus is None else list(self.modulus)}

    @property
    def q(self) -> int:
        return self.order

    # index <-> digit vector
    def digits(self, a: int) -> list[int]:
        out = []
        for _ in range(self.k):
            a, r = divmod(a, self.p)
            out.append(r)
        return out

    def from_digits(self, digits) -> int:
        digits = list(digits)
        if len(digits) > self.k or any(not 0 <= d < self.p for d in digits):
            raise ValueError(f"invalid digit vector {digits} for {self!r}")
        idx = 0
        for d in reversed(digits):
            idx = idx * self.p + d
        return idx

    # on-the-fly digit arithmetic (no tables)
    def _add_digits(self, a: int, b: int) -> int:
        if self.p == 2:
            return a ^ b
        p = self.p
        return self.from_digits((x + y) % p for x, y in zip(self.digits(a), self.digits(b)))

    def _neg_digits(self, a: int) -> int:
        p = self.p
        return self.from_digits((-x) % p for x in self.digits(a))

    def _mul_digits(self, a: int, b: int) -> int:
        p, k = self.p, self.k
        da, db = self.digits(a), self.digits(b)
        prod = [0] * (2 * k - 1)
        for i, x in enumerate(da):
            if x:
                for j, y in enumerate(db):
                    prod[i + j] = (prod[i + j] + x * y) % p
        m = self.modulus
        for top in range(2 * k - 2, k - 1, -1):
            c = prod[top]
            if c:
                for i in range(k + 1):
                    prod[top - k + i] = (prod[top - k + i] - c * m[i]) % p
        return self.from_digits(prod[:k])

    def _build_tables(self):
        q = self.order
        # primitive element: order exactly q - 1
        for g in range(2, q):
            exp = [1]
            x = g
            while x != 1:
                exp.append(x)
                x = self._mul_digits(x, g)
            if len(exp) == q - 1:
                break
        else:  # pragma: no cover
            raise AssertionError("no primitive element found")
        log = [0] * q
        for i, x in enumerate(exp):
            log[x] = i
        self._exp = exp + exp  # doubled to skip a modulo in mul
        self._log = log
        self._neg = [self._neg_digits(a) for a in range(q)]
        if q <= ADD_TABLE_LIMIT and self.p != 2:
            self._add = [[self._add_digits(a, b) for b in range(q)] for a in range(q)]

    # index arithmetic
    def add(self, a: int, b: int) -> int:
        if self.k == 1:
            return (a + b) % self.p
        if self.p == 2:
            return a ^ b
        if self._add is not None:
            return self._add[a][b]
        return self._add_digits(a, b)

    def neg(self, a: int) -> int:
        if self.k == 1:
            return (-a) % self.p
        if self.p == 2:
            return a
        if self._neg is not None:
            return self._neg[a]
        return self._neg_digits(a)

    def sub(self, a: int, b: int) -> int:
        return self.add(a, self.neg(b))

    def mul(self, a: int, b: int) -> int:
        if self.k == 1:
            return a * b % self.p
        if a == 0 or b == 0:
            return 0
        if self._exp is not None:
            return self._exp[self._log[a] + self._log[b]]
        return self._mul_digits(a, b)

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError(f"inverse of zero in {self!r}")
        if self.k == 1:
            return pow(a, self.p - 2, self.p)
        if self._exp is not None:
            return self._exp[(self.order - 1 - self._log[a]) % (self.order - 1)]
        return self.power(a, self.order - 2)

    def power(self, a: int, e: int) -> int:
        if e < 0:
            a, e = self.inv(a), -e
        result = 1
        while e:
            if e & 1:
                result = self.mul(result, a)
            a = self.mul(a, a)
            e >>= 1
        return result

    # element views
    def __call__(self, index: int) -> "FieldElement":
        return self.element(index)

    def element(self, index: int) -> "FieldElement":
        if not 0 <= index < self.order:
            raise ValueError(f"index {index} out of range for {self!r}")
        return FieldElement(self, index)

    def elements(self) -> list["FieldElement"]:
        return [FieldElement(self, i) for i in range(self.order)]

    @property
    def zero(self) -> "FieldElement":
        return FieldElement(self, 0)

    @property
    def one(self) -> "FieldElement":
        return FieldElement(self, 1)

    @property
    def t(self) -> "FieldElement":
        """Class of the modulus variable (index p); only defined for k > 1."""
        if self.k == 1:
            raise ValueError("prime fields have no adjoined generator")
        return FieldElement(self, self.p)


@dataclass(frozen=True)
class FieldElement:
    field: Field
    index: int

    def _check(self, other) -> int:
        if isinstance(other, int) and not isinstance(other, bool):
            return self.field.element(other).index
        if not isinstance(other, FieldElement):
            return NotImplemented
        if other.field != self.field:
            raise ValueError(f"mixed-field operands: {self.field!r} and {other.field!r}")
        return other.index

    def _wrap(self, idx: int) -> "FieldElement":
        return FieldElement(self.field, idx)

    def __add__(self, other):
        b = self._check(other)
        return NotImplemented if b is NotImplemented else self._wrap(self.field.add(self.index, b))

    __radd__ = __add__

    def __sub__(self, other):
        b = self._check(other)
        return NotImplemented if b is NotImplemented else self._wrap(self.field.sub(self.index, b))

    def __rsub__(self, other):
        b = self._check(other)
        return NotImplemented if b is NotImplemented else self._wrap(self.field.sub(b, self.index))

    def __mul__(self, other):
        b = self._check(other)
        return NotImplemented if b is NotImplemented else self._wrap(self.field.mul(self.index, b))

    __rmul__ = __mul__

    def __truediv__(self, other):
        b = self._check(other)
        return NotImplemented if b is NotImplemented else self._wrap(self.field.mul(self.index, self.field.inv(b)))

    def __neg__(self):
        return self._wrap(self.field.neg(self.index))

    def __pow__(self, e: int):
        return self._wrap(self.field.power(self.index, e))

    def inverse(self) -> "FieldElement":
        return self._wrap(self.field.inv(self.index))

    def __bool__(self):
        return self.index != 0

    def __repr__(self):
        return f"{self.field!r}({self.index})"


@functools.lru_cache(maxsize=None)
def _build_field(p: int, k: int) -> Field:
    return Field(p, k, None if k == 1 else least_irreducible(p, k))


def make_field(p: int, k: int = 1, guards: Guards | None = None) -> Field:
    """Return F_{p^k}; the same (p, k) always yields the same object."""
    if not isinstance(p, int) or not is_prime(p):
        raise ValueError(f"characteristic {p!r} is not prime")
    if not isinstance(k, int) or k < 1:
        raise ValueError(f"extension degree must be a positive integer, got {k!r}")
    limit = current_guards(guards).max_field_order
    if p**k > limit:
        raise GuardError(f"field order {p}^{k} exceeds guard {limit}")
    return _build_field(p, k)


def field_of_order(q: int, guards: Guards | None = None) -> Field:
    p, k = split_prime_power(q)
    return make_field(p, k, guards)


def field_from_json(obj: dict, guards: Guards | None = None) -> Field:
    f = make_field(obj["p"], obj["k"], guards)
    modulus = obj.get("modulus")
    expected = None if f.modulus is None else list(f.modulus)
    if (None if modulus is None else list(modulus)) != expected:
        raise ValueError(f"modulus {modulus} does not match canonical modulus {expected} for F_{f.order}")
    return f


def field_arith(f: Field, op: str, a: FieldElement, b: FieldElement | None = None) -> FieldElement:
    """Dispatch form of the field operations: op in {add, mul, neg, inv}."""
    for x in (a, b):
        if x is not None and x.field != f:
            raise ValueError(f"operand {x!r} does not belong to {f!r}")
    if op in ("add", "mul"):
        if b is None:
            raise ValueError(f"{op} needs two operands")
        return FieldElement(f, getattr(f, op)(a.index, b.index))
    if op in ("neg", "inv"):
        return FieldElement(f, getattr(f, op)(a.index))
    raise ValueError(f"unknown field operation {op!r}")


def enumerate_elements(f: Field) -> list[FieldElement]:
    return f.elements()
