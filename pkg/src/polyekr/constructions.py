"""Families of monic polynomials and the three extremal constructions."""
from __future__ import annotations

from dataclasses import dataclass

from .config import Guards
from .field import Field, make_field
from .poly import Poly, enumerate_monic, lcm_all_monic_degree, poly_divmod


@dataclass(frozen=True)
class Family:
    """Monic polynomials over one field with a declared intersection level.

    Members are kept sorted by (degree, poly_index).  Build with
    :meth:`Family.of`, which validates; the bare constructor trusts its input.
    """

    field: Field
    ell: int
    members: tuple[Poly, ...]

    @classmethod
    def of(cls, field: Field, polys, ell: int) -> "Family":
        polys = list(polys)
        seen = set()
        for i, p in enumerate(polys):
            if p.field != field:
                raise ValueError(f"member {i} ({p}) is over {p.field!r}, not {field!r}")
            if not p.is_monic():
                raise ValueError(f"member {i} ({p}) is not monic")
            if p in seen:
                raise ValueError(f"member {i} ({p}) is a duplicate")
            seen.add(p)
        if not isinstance(ell, int) or ell < 0:
            raise ValueError(f"intersection level must be a non-negative integer, got {ell!r}")
        if polys and ell > min(p.degree for p in polys):
            raise ValueError(f"level {ell} exceeds the smallest member degree")
        return cls(field, ell, tuple(sorted(polys, key=Poly.sort_key)))

    def __len__(self):
        return len(self.members)

    def __iter__(self):
        return iter(self.members)

    def __contains__(self, p):
        return p in self.members

    @property
    def q(self) -> int:
        return self.field.order

    @property
    def degree_set(self) -> frozenset[int]:
        return frozenset(p.degree for p in self.members)

    @property
    def uniform_degree(self) -> int | None:
        degs = self.degree_set
        return next(iter(degs)) if len(degs) == 1 else None

    def same_members(self, other: "Family") -> bool:
        return self.field == other.field and self.members == other.members

    def with_level(self, ell: int) -> "Family":
        return Family.of(self.field, self.members, ell)

    def to_json(self) -> dict:
        return {"field": self.field.to_json(), "ell": self.ell,
                "polys": [p.to_json() for p in self.members]}


def trivial_family(g: Poly, n: int, guards: Guards | None = None) -> Family:
    """All g*p with p monic of degree n - deg g; level deg g."""
    if not g.is_monic():
        raise ValueError(f"generator {g} must be monic")
    ell = g.degree
    if n < ell:
        raise ValueError(f"n = {n} is smaller than deg g = {ell}")
    return Family.of(g.field, (g * p for p in enumerate_monic(g.field, n - ell, guards)), ell)


def primary_family(f: Field, d: int, guards: Guards | None = None) -> Family:
    """{H_d / p : p monic of degree d}, of degree deg H_d - d and level deg H_d - 2d."""
    hd = lcm_all_monic_degree(f, d, guards=guards)
    members = []
    for p in enumerate_monic(f, d, guards):
        quot, rem = poly_divmod(hd, p)
        if not rem.is_zero():
            raise RuntimeError(f"H_{d} is not divisible by {p}")
        members.append(quot)
    return Family.of(f, members, hd.degree - 2 * d)


def exceptional_family() -> Family:
    """The four cubics x^2(x+1), x(x+1)^2, x(x^2+x+1), (x+1)(x^2+x+1) over F_2."""
    f2 = make_field(2)
    return Family.of(f2, [Poly(f2, c) for c in ([0, 0, 1, 1], [0, 1, 0, 1], [0, 1, 1, 1], [1, 0, 0, 1])], 1)


def scale_family(fam: Family, g: Poly, direction: str = "multiply") -> Family:
    """F*g or F/g; the declared level moves by deg g."""
    if not g.is_monic():
        raise ValueError(f"scaling polynomial {g} must be monic")
    if g.field != fam.field:
        raise ValueError(f"{g} is not over {fam.field!r}")
    if direction == "multiply":
        return Family.of(fam.field, (p * g for p in fam.members), fam.ell + g.degree)
    if direction == "divide":
        members = []
        for p in fam.members:
            quot, rem = poly_divmod(p, g)
            if not rem.is_zero():
                raise ValueError(f"{g} does not divide member {p}")
            members.append(quot)
        if fam.ell < g.degree:
            raise ValueError(f"declared level {fam.ell} is below deg g = {g.degree}; cannot shift down")
        return Family.of(fam.field, members, fam.ell - g.degree)
    raise ValueError(f"direction must be 'multiply' or 'divide', got {direction!r}")
