"""Brute-force reference computations, deliberately naive.

None of these use the Euclidean gcd, the sieve, or the clique search; they
exist to pin the fast paths.
"""
import itertools

from polyekr.poly import Poly, enumerate_monic, poly_divmod


def divides(d: Poly, p: Poly) -> bool:
    return poly_divmod(p, d)[1].is_zero()


def brute_gcd(a: Poly, b: Poly) -> Poly:
    """Highest-degree monic common divisor, by trying every monic candidate."""
    best = Poly.constant(a.field, 1)
    for e in range(1, min(a.degree, b.degree) + 1):
        for c in enumerate_monic(a.field, e):
            if divides(c, a) and divides(c, b):
                best = c
    return best


def has_root(p: Poly) -> bool:
    return any(p(a) == 0 for a in range(p.field.order))


def expand_product(f, factors):
    """Schoolbook expansion of a list of coefficient vectors, all arithmetic done here."""
    out = [1]
    for fac in factors:
        new = [0] * (len(out) + len(fac) - 1)
        for i, x in enumerate(out):
            for j, y in enumerate(fac):
                new[i + j] = f.add(new[i + j], f.mul(x, y))
        out = new
    while out and out[-1] == 0:
        out.pop()
    return out


def naive_max_cliques(graph):
    """Largest k with some k-subset pairwise adjacent, and every such subset."""
    n = graph.n
    for k in range(n, 0, -1):
        found = [c for c in itertools.combinations(range(n), k)
                 if all(graph.has_edge(i, j) for i, j in itertools.combinations(c, 2))]
        if found:
            return k, found
    return 0, [()]


def brute_is_intersecting(polys, ell):
    return all(brute_gcd(a, b).degree >= ell for a, b in itertools.combinations(polys, 2))
