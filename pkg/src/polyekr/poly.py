"""Polynomials over a finite field: arithmetic, gcd/lcm, factoring, enumeration.

Coefficients are stored as field-element indices, constant term first, with
trailing zeros stripped; the zero polynomial has no coefficients.
"""
from __future__ import annotations

import functools
import threading
from dataclasses import dataclass

from .config import GuardError, Guards, current_guards
from .field import Field, FieldElement


class _NegInf:
    """Degree of the zero polynomial: below every integer, absorbs addition."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "NEG_INF"

    def __lt__(self, other):
        return other is not self

    def __le__(self, other):
        return True

    def __gt__(self, other):
        return False

    def __ge__(self, other):
        return other is self

    def __eq__(self, other):
        return other is self

    def __hash__(self):
        return hash("NEG_INF")

    def __add__(self, other):
        return self

    __radd__ = __add__

    def __sub__(self, other):
        return self


NEG_INF = _NegInf()


def degree_to_json(d) -> int:
    return -1 if d is NEG_INF else d


class Poly:
    __slots__ = ("field", "coeffs")

    def __init__(self, field: Field, coeffs=()):
        coeffs = [c.index if isinstance(c, FieldElement) else c for c in coeffs]
        for c in coeffs:
            if not isinstance(c, int) or not 0 <= c < field.order:
                raise ValueError(f"coefficient {c!r} is not an element index of {field!r}")
        while coeffs and coeffs[-1] == 0:
            coeffs.pop()
        self.field = field
        self.coeffs = tuple(coeffs)

    @classmethod
    def _raw(cls, field: Field, coeffs: list[int]) -> "Poly":
        # trusted constructor: indices already valid
        while coeffs and coeffs[-1] == 0:
            coeffs.pop()
        obj = object.__new__(cls)
        obj.field = field
        obj.coeffs = tuple(coeffs)
        return obj

    @classmethod
    def x(cls, field: Field) -> "Poly":
        return cls._raw(field, [0, 1])

    @classmethod
    def constant(cls, field: Field, c: int = 1) -> "Poly":
        return cls(field, [c])

    @classmethod
    def monomial(cls, field: Field, d: int, c: int = 1) -> "Poly":
        return cls(field, [0] * d + [c])

    @classmethod
    def from_roots(cls, field: Field, roots) -> "Poly":
        """Product of (x - r) over the given root indices."""
        out = cls.constant(field, 1)
        for r in roots:
            out = out * cls._raw(field, [field.neg(r), 1])
        return out

    # basic properties
    @property
    def degree(self):
        return len(self.coeffs) - 1 if self.coeffs else NEG_INF

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_monic(self) -> bool:
        return bool(self.coeffs) and self.coeffs[-1] == 1

    @property
    def leading(self) -> int:
        return self.coeffs[-1] if self.coeffs else 0

    def coefficients(self) -> list[FieldElement]:
        return [FieldElement(self.field, c) for c in self.coeffs]

    def __eq__(self, other):
        return isinstance(other, Poly) and self.field == other.field and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.field, self.coeffs))

    def __bool__(self):
        return bool(self.coeffs)

    def __repr__(self):
        return f"Poly({self.field!r}, {list(self.coeffs)})"

    def __str__(self):
        if not self.coeffs:
            return "0"
        terms = []
        for i in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[i]
            if c == 0:
                continue
            mono = "" if i == 0 else ("x" if i == 1 else f"x^{i}")
            if not mono:
                terms.append(str(c))
            elif c == 1:
                terms.append(mono)
            else:
                terms.append(f"{c}*{mono}")
        return " + ".join(terms)

    def to_json(self) -> list[int]:
        return list(self.coeffs)

    def sort_key(self):
        return (degree_to_json(self.degree), poly_index(self) if self.is_monic() else -1, self.coeffs)

    def __lt__(self, other: "Poly"):
        return self.sort_key() < other.sort_key()

    # arithmetic
    def _same(self, other: "Poly") -> Field:
        if not isinstance(other, Poly):
            raise TypeError(f"expected Poly, got {type(other).__name__}")
        if other.field != self.field:
            raise ValueError(f"mixed-field operands: {self.field!r} and {other.field!r}")
        return self.field

    def __add__(self, other: "Poly") -> "Poly":
        f = self._same(other)
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] = f.add(out[i], c)
        return Poly._raw(f, out)

    def __neg__(self) -> "Poly":
        f = self.field
        return Poly._raw(f, [f.neg(c) for c in self.coeffs])

    def __sub__(self, other: "Poly") -> "Poly":
        return self + (-other)

    def __mul__(self, other) -> "Poly":
        if isinstance(other, FieldElement):
            other = Poly(self.field, [other])
        f = self._same(other)
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return Poly._raw(f, [])
        out = [0] * (len(a) + len(b) - 1)
        add, mul = f.add, f.mul
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    if y:
                        out[i + j] = add(out[i + j], mul(x, y))
        return Poly._raw(f, out)

    def scale(self, c: int) -> "Poly":
        f = self.field
        return Poly._raw(f, [f.mul(c, x) for x in self.coeffs])

    def __pow__(self, e: int) -> "Poly":
        if e < 0:
            raise ValueError("negative exponent")
        result = Poly._raw(self.field, [1])
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def __divmod__(self, other: "Poly"):
        return poly_divmod(self, other)

    def __floordiv__(self, other: "Poly") -> "Poly":
        return poly_divmod(self, other)[0]

    def __mod__(self, other: "Poly") -> "Poly":
        return poly_divmod(self, other)[1]

    def monic(self) -> "Poly":
        if not self.coeffs:
            return self
        lc = self.coeffs[-1]
        return self if lc == 1 else self.scale(self.field.inv(lc))

    def divides(self, other: "Poly") -> bool:
        return poly_divmod(other, self)[1].is_zero()

    def __call__(self, a: int) -> int:
        """Evaluate at the field element with index a (Horner)."""
        f = self.field
        acc = 0
        for c in reversed(self.coeffs):
            acc = f.add(f.mul(acc, a), c)
        return acc


def poly_arith(op: str, a: Poly, b: Poly) -> Poly:
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    raise ValueError(f"unknown polynomial operation {op!r}")


def poly_divmod(a: Poly, b: Poly) -> tuple[Poly, Poly]:
    """Euclidean division: a = quot*b + rem with deg rem < deg b."""
    f = a._same(b)
    if b.is_zero():
        raise ZeroDivisionError("polynomial division by zero")
    rem = list(a.coeffs)
    bc = b.coeffs
    nb = len(bc)
    if len(rem) < nb:
        return Poly._raw(f, []), a
    inv_lead = f.inv(bc[-1])
    quot = [0] * (len(rem) - nb + 1)
    add, mul, neg = f.add, f.mul, f.neg
    for shift in range(len(rem) - nb, -1, -1):
        c = rem[shift + nb - 1]
        if c == 0:
            continue
        c = mul(c, inv_lead)
        quot[shift] = c
        nc = neg(c)
        for i in range(nb):
            if bc[i]:
                rem[shift + i] = add(rem[shift + i], mul(nc, bc[i]))
    return Poly._raw(f, quot), Poly._raw(f, rem[: nb - 1])


def poly_gcd(a: Poly, b: Poly) -> Poly:
    """Monic gcd by the Euclidean algorithm."""
    a._same(b)
    if a.is_zero() and b.is_zero():
        raise ValueError("gcd(0, 0) is undefined")
    while b.coeffs:
        a, b = b, poly_divmod(a, b)[1]
    return a.monic()


def poly_lcm(a: Poly, b: Poly) -> Poly:
    a._same(b)
    if a.is_zero() or b.is_zero():
        raise ValueError("lcm of the zero polynomial")
    return poly_divmod((a * b).monic(), poly_gcd(a, b))[0]


def gcd_all(polys) -> Poly:
    it = iter(polys)
    g = next(it)
    for p in it:
        if g.degree == 0:
            break
        g = poly_gcd(g, p)
    return g.monic()


# -- encoding of monic polynomials -----------------------------------------

def poly_index(p: Poly) -> int:
    """Integer code of a monic p of degree d in [0, q^d): low coefficients as base-q digits."""
    if not p.is_monic():
        raise ValueError(f"poly_index needs a monic polynomial, got {p}")
    q = p.field.order
    idx = 0
    for c in reversed(p.coeffs[:-1]):
        idx = idx * q + c
    return idx


def poly_from_index(f: Field, d: int, i: int) -> Poly:
    q = f.order
    if d < 0 or not 0 <= i < q**d:
        raise ValueError(f"index {i} out of range for monic degree {d} over {f!r}")
    coeffs = []
    for _ in range(d):
        i, r = divmod(i, q)
        coeffs.append(r)
    coeffs.append(1)
    return Poly._raw(f, coeffs)


def _check_enumeration(f: Field, d: int, guards: Guards | None):
    if d < 0:
        raise ValueError(f"degree must be non-negative, got {d}")
    limit = current_guards(guards).max_enumeration
    if f.order**d > limit:
        raise GuardError(f"q^d = {f.order}^{d} exceeds enumeration guard {limit}")


def enumerate_monic(f: Field, d: int, guards: Guards | None = None) -> list[Poly]:
    """All q^d monic polynomials of degree d, by increasing poly_index."""
    _check_enumeration(f, d, guards)
    return [poly_from_index(f, d, i) for i in range(f.order**d)]


# -- irreducibles -----------------------------------------------------------

class _IrreducibleCache:
    """Per-field table degree -> monic irreducibles; append-only, locked writes."""

    def __init__(self):
        self._lock = threading.Lock()
        self._table: dict[tuple[Field, int], tuple[Poly, ...]] = {}

    def get(self, f: Field, d: int):
        return self._table.get((f, d))

    def put(self, f: Field, d: int, polys: tuple[Poly, ...]):
        with self._lock:
            return self._table.setdefault((f, d), polys)


_CACHE = _IrreducibleCache()


def _sieve_irreducibles(f: Field, d: int, guards: Guards | None) -> tuple[Poly, ...]:
    # Strike out every product g*h with g irreducible, 1 <= deg g <= d/2.
    q = f.order
    composite = bytearray(q**d)
    for e in range(1, d // 2 + 1):
        cofactors = enumerate_monic(f, d - e, guards)
        for g in enumerate_irreducible_monic(f, e, guards):
            for h in cofactors:
                composite[poly_index(g * h)] = 1
    return tuple(poly_from_index(f, d, i) for i in range(q**d) if not composite[i])


def enumerate_irreducible_monic(f: Field, d: int, guards: Guards | None = None) -> list[Poly]:
    """Monic irreducibles of degree d, by increasing poly_index."""
    if d < 1:
        raise ValueError(f"irreducibles need positive degree, got {d}")
    cached = _CACHE.get(f, d)
    if cached is None:
        _check_enumeration(f, d, guards)
        cached = _CACHE.put(f, d, _sieve_irreducibles(f, d, guards))
    return list(cached)


def is_irreducible(p: Poly, guards: Guards | None = None) -> bool:
    """Trial division by the cached monic irreducibles of degree <= deg(p)/2."""
    if p.is_zero() or p.degree < 1:
        raise ValueError(f"irreducibility is undefined for constant {p}")
    for e in range(1, p.degree // 2 + 1):
        for g in enumerate_irreducible_monic(p.field, e, guards):
            if poly_divmod(p, g)[1].is_zero():
                return False
    return True


@dataclass(frozen=True)
class Factorization:
    unit: int
    factors: tuple[tuple[Poly, int], ...]

    def expand(self, field: Field) -> Poly:
        out = Poly.constant(field, self.unit)
        for g, m in self.factors:
            out = out * g**m
        return out

    def to_json(self) -> dict:
        return {"unit": self.unit, "factors": [[g.to_json(), m] for g, m in self.factors]}


def factor(p: Poly, guards: Guards | None = None) -> Factorization:
    """Trial-division factorization; factors sorted by (degree, poly_index)."""
    if p.is_zero():
        raise ValueError("cannot factor the zero polynomial")
    unit = p.leading
    rest = p.monic()
    factors = []
    e = 1
    while 2 * e <= rest.degree:
        for g in enumerate_irreducible_monic(p.field, e, guards):
            m = 0
            while True:
                quot, rem = poly_divmod(rest, g)
                if not rem.is_zero():
                    break
                rest, m = quot, m + 1
            if m:
                factors.append((g, m))
            if 2 * e > rest.degree:
                break
        e += 1
    if rest.degree >= 1:
        # remaining cofactor has no factor of degree <= half its own
        factors.append((rest, 1))
    merged: dict[Poly, int] = {}
    for g, m in factors:
        merged[g] = merged.get(g, 0) + m
    ordered = sorted(merged.items(), key=lambda gm: gm[0].sort_key())
    return Factorization(unit, tuple(ordered))


# -- counting ---------------------------------------------------------------

def mobius(n: int) -> int:
    if n < 1:
        raise ValueError("mobius is defined on positive integers")
    result = 1
    d = 2
    while d * d <= n:
        if n % d == 0:
            n //= d
            if n % d == 0:
                return 0
            result = -result
        d += 1
    if n > 1:
        result = -result
    return result


def divisors(n: int) -> list[int]:
    return [d for d in range(1, n + 1) if n % d == 0]


@functools.lru_cache(maxsize=None)
def count_irreducibles(q: int, n: int) -> int:
    """Number of monic irreducibles of degree n over F_q (Moebius inversion)."""
    if n < 1:
        raise ValueError(f"degree must be positive, got {n}")
    total = sum(mobius(n // d) * q**d for d in divisors(n))
    count, rem = divmod(total, n)
    if rem:
        raise AssertionError(f"Moebius sum {total} not divisible by {n}")
    return count


def _iroot(x: int, r: int) -> int:
    """floor(x ** (1/r)) for x >= 0, exact."""
    lo, hi = 0, 1
    while hi**r <= x:
        hi *= 2
    while hi - lo > 1:
        mid = (lo + hi) // 2
        if mid**r <= x:
            lo = mid
        else:
            hi = mid
    return lo


def irreducible_lower_bound_holds(q: int, n: int) -> bool:
    """Exact test of N_q(n) >= q^n/n - q^(n/2)/n - q^(n/3).

    Rewritten as q^n - n*N <= sqrt(q^n) + n*cbrt(q^n).  Integer floor/ceiling
    roots settle almost every case; the narrow window between them is decided
    with 50+ digit decimal arithmetic.
    """
    qn = q**n
    gap = qn - n * count_irreducibles(q, n)
    s, t = _iroot(qn, 2), _iroot(qn, 3)
    if gap <= s + n * t:
        return True
    s_exact, t_exact = s * s == qn, t**3 == qn
    if gap > (s if s_exact else s + 1) + n * (t if t_exact else t + 1):
        return False
    from decimal import Decimal, getcontext

    getcontext().prec = max(50, 3 * len(str(qn)))
    rhs = Decimal(qn).sqrt() + n * Decimal(qn) ** (Decimal(1) / Decimal(3))
    return Decimal(gap) <= rhs


# -- H_d --------------------------------------------------------------------

def hd_degree(q: int, d: int) -> int:
    """deg H_d = sum over e <= d of e * N_q(e) * floor(d / e)."""
    return sum(e * count_irreducibles(q, e) * (d // e) for e in range(1, d + 1))


def lcm_all_monic_degree(f: Field, d: int, check: bool = True, guards: Guards | None = None) -> Poly:
    """H_d, the monic lcm of all monic degree-d polynomials.

    Built from the closed form prod g^floor(d/deg g) over irreducibles g of
    degree <= d; with ``check`` it is also folded with lcm over every monic
    degree-d polynomial and the two must agree.
    """
    if d < 1:
        raise ValueError(f"d must be positive, got {d}")
    _check_enumeration(f, d, guards)
    closed = Poly.constant(f, 1)
    for e in range(1, d + 1):
        for g in enumerate_irreducible_monic(f, e, guards):
            closed = closed * g ** (d // e)
    if check:
        folded = Poly.constant(f, 1)
        for p in enumerate_monic(f, d, guards):
            folded = poly_lcm(folded, p)
        if folded != closed:
            raise RuntimeError(f"H_{d} over {f!r}: lcm fold {folded} != closed form {closed}")
    return closed
