"""Intersection checks, irreducible witnesses and extremal-family classification."""
from __future__ import annotations

import itertools
import math
from dataclasses import dataclass

from .config import GuardError, Guards, current_guards
from .constructions import Family, exceptional_family, primary_family
from .poly import (Poly, enumerate_irreducible_monic, gcd_all, hd_degree,
                   poly_divmod, poly_gcd)

TRIVIAL = "Trivial"
PRIMARY = "PrimaryConstruction"
EXCEPTIONAL = "Exceptional"
OTHER = "Other"
KINDS = (TRIVIAL, PRIMARY, EXCEPTIONAL, OTHER)


class NotExtremalError(ValueError):
    """classify_extremal was given a family outside its precondition."""


def gcd_degree(a: Poly, b: Poly) -> int:
    if not (a.is_monic() and b.is_monic()):
        raise ValueError("gcd_degree needs monic, nonzero polynomials")
    return poly_gcd(a, b).degree


def realized_level(fam: Family) -> int:
    """Minimum gcd degree over distinct pairs; the member degree for singletons."""
    if not fam.members:
        raise ValueError("empty family")
    if len(fam) == 1:
        return fam.members[0].degree
    return min(gcd_degree(a, b) for a, b in itertools.combinations(fam.members, 2))


def is_ell_intersecting(fam: Family, ell: int) -> bool:
    if not fam.members:
        raise ValueError("empty family")
    return all(gcd_degree(a, b) >= ell for a, b in itertools.combinations(fam.members, 2))


def is_k_wise_intersecting(fam: Family, k: int, ell: int, guards: Guards | None = None) -> bool:
    """Every k members share a common divisor of degree >= ell.

    Subsets are grown depth-first with a running gcd, so a prefix whose gcd
    already fell below ell is rejected without visiting its extensions.
    """
    if k < 2:
        raise ValueError(f"k must be at least 2, got {k}")
    limit = current_guards(guards).max_subsets
    if math.comb(len(fam), k) > limit:
        raise GuardError(f"binomial({len(fam)}, {k}) exceeds subset guard {limit}")
    members = fam.members
    m = len(members)

    def extend(start: int, depth: int, g: Poly) -> bool:
        if depth == k:
            return True
        for i in range(start, m - (k - depth) + 1):
            h = members[i] if g is None else poly_gcd(g, members[i])
            if depth >= 1 and h.degree < ell:
                return False
            if not extend(i + 1, depth + 1, h):
                return False
        return True

    return extend(0, 0, None)


def family_common_divisor(fam: Family) -> Poly:
    if not fam.members:
        raise ValueError("empty family")
    return gcd_all(fam.members)


def check_irreducible_witnesses(fam: Family, ell: int, guards: Guards | None = None) -> tuple[bool, list[Poly]]:
    """For every monic irreducible f of degree n - ell, is some member a multiple of f?

    Returns (all witnessed, irreducibles without a witness).
    """
    n = fam.uniform_degree
    if n is None:
        raise ValueError("witness check needs a family of uniform degree")
    if n < ell:
        raise ValueError(f"level {ell} exceeds member degree {n}")
    if n == ell:
        return True, []
    missing = [f for f in enumerate_irreducible_monic(fam.field, n - ell, guards)
               if not any(poly_divmod(p, f)[1].is_zero() for p in fam.members)]
    return not missing, missing


def extremal_bound(q: int, degrees, ell: int) -> int:
    return sum(q ** (d - ell) for d in degrees)


@dataclass(frozen=True)
class Classification:
    kind: str
    common_divisor: Poly
    realized_level: int
    d: int | None = None

    def to_json(self) -> dict:
        return {"kind": self.kind, "common_divisor": self.common_divisor.to_json(),
                "d": self.d, "realized_level": self.realized_level}


def _quotient(fam: Family, c: Poly) -> tuple[Poly, ...]:
    return tuple(sorted((poly_divmod(p, c)[0] for p in fam.members), key=Poly.sort_key))


def classify_extremal(fam: Family, ell: int, guards: Guards | None = None) -> Classification:
    """Label an extremal ell-intersecting family.

    Precedence is Trivial, Exceptional, PrimaryConstruction, Other.  "Trivial"
    is decided by deg(common divisor) >= ell, which is only sound because the
    family is required to have extremal size: a family of size q^(n-ell) whose
    members share a degree->=ell divisor must be all its degree-n multiples.
    Mixed-degree families (bound sum q^(d-ell)) can only be Trivial or Other.
    """
    if not fam.members:
        raise NotExtremalError("empty family")
    bound = extremal_bound(fam.q, fam.degree_set, ell)
    if len(fam) != bound:
        raise NotExtremalError(f"size {len(fam)} is not the extremal size {bound}")
    level = realized_level(fam)
    if level < ell:
        raise NotExtremalError(f"family is not {ell}-intersecting (realized level {level})")
    c = family_common_divisor(fam)
    if c.degree >= ell:
        return Classification(TRIVIAL, c, level)
    n = fam.uniform_degree
    if n is None:
        return Classification(OTHER, c, level)
    quotient = _quotient(fam, c)
    if fam.q == 2 and quotient == exceptional_family().members:
        return Classification(EXCEPTIONAL, c, level)
    d = n - ell
    if d >= 1 and hd_degree(fam.q, d) - d == n - c.degree:
        if quotient == primary_family(fam.field, d, guards).members:
            return Classification(PRIMARY, c, level, d)
    return Classification(OTHER, c, level)
