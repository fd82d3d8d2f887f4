"""Exhaustive search for maximum l-intersecting families.

l-intersecting families of monic polynomials with degrees in a set D are the
cliques of the compatibility graph (edge iff gcd degree >= l).  Maximum
cliques are found by branch and bound with a greedy-colouring bound and
enumerated in lexicographic order of their sorted vertex lists.
"""
from __future__ import annotations

import os
import time
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

from .config import GuardError, Guards, current_guards
from .constructions import Family
from .field import Field, field_of_order
from .poly import Poly, enumerate_monic, poly_gcd
from .verifier import (EXCEPTIONAL, KINDS, OTHER, TRIVIAL, NotExtremalError,
                       check_irreducible_witnesses, classify_extremal,
                       extremal_bound, family_common_divisor,
                       is_ell_intersecting)

REPORT_VERSION = 1


class TheoremViolation(RuntimeError):
    """A search contradicted a proven statement: an implementation bug."""

    def __init__(self, message: str, report: "SearchReport | None" = None):
        super().__init__(message)
        self.report = report


@dataclass(frozen=True)
class CompatibilityGraph:
    field: Field
    degrees: tuple[int, ...]
    ell: int
    vertices: tuple[Poly, ...]
    adjacency: tuple[int, ...]  # bitmask of neighbours per vertex

    @property
    def n(self) -> int:
        return len(self.vertices)

    def has_edge(self, i: int, j: int) -> bool:
        return bool(self.adjacency[i] >> j & 1)

    def edge_count(self) -> int:
        return sum(bin(a).count("1") for a in self.adjacency) // 2

    def matrix(self) -> list[list[bool]]:
        return [[self.has_edge(i, j) for j in range(self.n)] for i in range(self.n)]

    def family(self, clique) -> Family:
        return Family.of(self.field, (self.vertices[i] for i in clique), self.ell)


def build_graph(f: Field, degrees, ell: int, guards: Guards | None = None) -> CompatibilityGraph:
    degrees = tuple(sorted(set(degrees)))
    if not degrees:
        raise ValueError("need at least one degree")
    if ell < 0 or ell > degrees[0]:
        raise ValueError(f"level {ell} must lie in [0, min degree = {degrees[0]}]")
    g = current_guards(guards)
    count = sum(f.order**d for d in degrees)
    if count > g.max_vertices:
        raise GuardError(f"{count} vertices exceed guard {g.max_vertices}")
    vertices = tuple(p for d in degrees for p in enumerate_monic(f, d, guards))
    adj = [0] * len(vertices)
    for i, a in enumerate(vertices):
        for j in range(i + 1, len(vertices)):
            if poly_gcd(a, vertices[j]).degree >= ell:
                adj[i] |= 1 << j
                adj[j] |= 1 << i
    return CompatibilityGraph(f, degrees, ell, vertices, tuple(adj))


# -- clique search ----------------------------------------------------------

@dataclass
class CliqueResult:
    size: int
    cliques: list[tuple[int, ...]]
    count: int | None  # None when only the size was requested
    truncated: bool
    timed_out: bool


def _colour_bound(adj, cand: int) -> int:
    """Number of greedy colour classes of the induced subgraph: a clique bound."""
    colours = 0
    while cand:
        colours += 1
        avail = cand
        while avail:
            low = avail & -avail
            v = low.bit_length() - 1
            cand &= ~low
            avail &= ~low & ~adj[v]
    return colours


class _Searcher:
    CHECK_EVERY = 2048

    def __init__(self, adj, cap: int, enumerate_all: bool, deadline: float | None, best: int = 0):
        self.adj = adj
        self.cap = cap
        self.enumerate_all = enumerate_all
        self.deadline = deadline
        self.best = best
        self.cliques: list[tuple[int, ...]] = []
        self.count = 0
        self.timed_out = False
        self._ticks = 0

    def _out_of_time(self) -> bool:
        if self.deadline is None:
            return False
        self._ticks += 1
        if self._ticks % self.CHECK_EVERY == 0 and time.monotonic() > self.deadline:
            self.timed_out = True
        return self.timed_out

    def _record(self, clique: list[int]):
        size = len(clique)
        if size > self.best:
            self.best, self.cliques, self.count = size, [], 0
        if self.enumerate_all:
            self.count += 1
            if len(self.cliques) < self.cap:
                self.cliques.append(tuple(clique))
        elif not self.cliques or size > len(self.cliques[0]):
            self.cliques = [tuple(clique)]

    def _prune(self, bound: int) -> bool:
        # enumeration keeps ties; size-only search needs strictly larger
        return bound < self.best if self.enumerate_all else bound <= self.best

    def expand(self, clique: list[int], cand: int):
        if self.timed_out or self._out_of_time():
            return
        if not cand:
            if not self._prune(len(clique)):
                self._record(clique)
            return
        adj = self.adj
        depth = len(clique)
        if self._prune(depth + bin(cand).count("1")):
            return
        rest = cand
        while rest:
            low = rest & -rest
            v = low.bit_length() - 1
            rest &= ~low
            child = rest & adj[v]
            if self._prune(depth + 1 + bin(child).count("1")):
                continue
            if child and self._prune(depth + 1 + _colour_bound(adj, child)):
                continue
            clique.append(v)
            self.expand(clique, child)
            clique.pop()
            if self.timed_out:
                return

    def root(self, v: int):
        higher = ~((1 << (v + 1)) - 1)
        self.expand([v], self.adj[v] & higher)


def _run_roots(adj, roots, cap, enumerate_all, deadline):
    s = _Searcher(adj, cap, enumerate_all, deadline)
    for v in roots:
        s.root(v)
        if s.timed_out:
            break
    return s.best, s.cliques, s.count, s.timed_out


def maximum_cliques(graph: CompatibilityGraph, cap: int | None = None, *, enumerate_all: bool = True,
                    workers: int = 1, timeout: float | None = None,
                    guards: Guards | None = None) -> CliqueResult:
    """Exact maximum clique size, plus (optionally) all maximum cliques.

    Cliques come back as sorted vertex-index tuples in lexicographic order;
    at most ``cap`` are stored, but ``count`` is exact.  With ``workers > 1``
    the top-level branches are split across processes and merged, which gives
    the same result as the serial run.
    """
    g = current_guards(guards)
    cap = g.clique_cap if cap is None else cap
    if cap < 1:
        raise ValueError("clique cap must be positive")
    timeout = g.timeout if timeout is None else timeout
    adj = list(graph.adjacency)
    n = len(adj)
    if n == 0:
        return CliqueResult(0, [()], 1 if enumerate_all else None, False, False)
    deadline = None if timeout is None else time.monotonic() + timeout
    if workers <= 1:
        parts = [_run_roots(adj, range(n), cap, enumerate_all, deadline)]
    else:
        chunks = [list(range(i, n, workers)) for i in range(min(workers, n))]
        with ProcessPoolExecutor(max_workers=len(chunks)) as pool:
            futures = [pool.submit(_run_roots, adj, c, cap, enumerate_all, deadline) for c in chunks]
            parts = [fut.result() for fut in futures]
    best = max(p[0] for p in parts)
    timed_out = any(p[3] for p in parts)
    winners = [p for p in parts if p[0] == best]
    cliques = sorted({c for p in winners for c in p[1]})
    if enumerate_all:
        count = sum(p[2] for p in winners)
        truncated = count > cap
        cliques = cliques[:cap]
    else:
        count, truncated = None, False
        cliques = cliques[:1]
    return CliqueResult(best, cliques, count, truncated, timed_out)


# -- reports ----------------------------------------------------------------

@dataclass
class SearchReport:
    field: Field
    degrees: tuple[int, ...]
    ell: int
    predicted_bound: int
    max_size_found: int
    maximum_family_count: int | None
    truncated: bool
    complete: bool
    classifications: dict[str, int]
    families: list[Family] | None = None
    family_kinds: list[dict] | None = None
    violations: list[str] = field(default_factory=list)
    meta: dict = field(default_factory=dict)

    @property
    def q(self) -> int:
        return self.field.order

    def to_json(self, include_families: bool = True, include_meta: bool = True) -> dict:
        out = {
            "v": REPORT_VERSION,
            "parameters": {"q": self.q, "field": self.field.to_json(),
                           "degrees": list(self.degrees), "ell": self.ell},
            "predicted_bound": self.predicted_bound,
            "max_size_found": self.max_size_found,
            "maximum_family_count": self.maximum_family_count,
            "truncated": self.truncated,
            "complete": self.complete,
            "classifications": dict(self.classifications),
            "violations": list(self.violations),
        }
        if include_families and self.families is not None:
            out["families"] = [
                {"polys": [p.to_json() for p in fam.members], "classification": kind}
                for fam, kind in zip(self.families, self.family_kinds)
            ]
        if include_meta:
            out["meta"] = dict(self.meta)
        return out


def _search(f: Field, degrees, ell: int, enumerate_all: bool, cap, workers, timeout, guards) -> SearchReport:
    started = time.monotonic()
    graph = build_graph(f, degrees, ell, guards)
    res = maximum_cliques(graph, cap, enumerate_all=enumerate_all, workers=workers,
                          timeout=timeout, guards=guards)
    bound = extremal_bound(f.order, graph.degrees, ell)
    report = SearchReport(
        field=f, degrees=graph.degrees, ell=ell, predicted_bound=bound,
        max_size_found=res.size, maximum_family_count=res.count,
        truncated=res.truncated, complete=not res.timed_out,
        classifications={}, families=None,
    )
    if res.size > bound:
        report.violations.append(f"found an {ell}-intersecting family of size {res.size} > bound {bound}")
    if enumerate_all:
        families, kinds_json = [], []
        hist = Counter()
        for clique in res.cliques:
            fam = graph.family(clique)
            families.append(fam)
            if not is_ell_intersecting(fam, ell) or len(fam) != res.size:
                report.violations.append(f"listed family {clique} is not a {ell}-intersecting family of size {res.size}")
            try:
                cls = classify_extremal(fam, ell, guards)
                kinds_json.append(cls.to_json())
                hist[cls.kind] += 1
            except NotExtremalError:
                kinds_json.append(None)
                hist["NotExtremal"] += 1
        report.families = families
        report.family_kinds = kinds_json
        report.classifications = {k: hist[k] for k in (*KINDS, "NotExtremal") if hist[k]}
    report.meta = {"elapsed_seconds": round(time.monotonic() - started, 3), "workers": workers,
                   "vertices": graph.n, "edges": graph.edge_count()}
    return report


def _witness_violations(report: SearchReport, guards) -> list[str]:
    out = []
    for fam in report.families or []:
        ok, missing = check_irreducible_witnesses(fam, report.ell, guards)
        if not ok:
            out.append(f"family {[p.to_json() for p in fam.members]} has no multiple of "
                       f"{[m.to_json() for m in missing]}")
    return out


def verify_theorem1(q: int, n: int, ell: int, *, enumerate_all: bool = True, cap: int | None = None,
                    workers: int = 1, timeout: float | None = None, guards: Guards | None = None,
                    raise_on_violation: bool = True) -> SearchReport:
    """Maximum l-intersecting families of monic degree-n polynomials over F_q.

    Checks that the maximum is q^(n-l); with enumeration, that every maximum
    family has a multiple of each irreducible of degree n-l, is never of kind
    Other, and, for n > 2l, is Trivial except for the single Exceptional
    family at (q, n, l) = (2, 3, 1).
    """
    f = field_of_order(q, guards)
    if not 0 <= ell <= n:
        raise ValueError(f"need 0 <= ell <= n, got ell={ell}, n={n}")
    report = _search(f, [n], ell, enumerate_all, cap, workers, timeout, guards)
    if report.complete:
        v = report.violations
        if report.max_size_found != report.predicted_bound:
            v.append(f"maximum size {report.max_size_found} != q^(n-l) = {report.predicted_bound}")
        if enumerate_all:
            v.extend(_witness_violations(report, guards))
            hist = report.classifications
            if hist.get(OTHER) or hist.get("NotExtremal"):
                v.append(f"maximum families outside the known constructions: {hist}")
            if n > 2 * ell:
                nontrivial = {k: c for k, c in hist.items() if k != TRIVIAL}
                expected = {EXCEPTIONAL: 1} if (q, n, ell) == (2, 3, 1) else {}
                if nontrivial != expected and not report.truncated:
                    v.append(f"n > 2l but non-trivial maximum families {nontrivial}, expected {expected}")
    if raise_on_violation and report.violations:
        raise TheoremViolation("; ".join(report.violations), report)
    return report


def verify_theorem4(q: int, degrees, ell: int, *, enumerate_all: bool = True, cap: int | None = None,
                    workers: int = 1, timeout: float | None = None, guards: Guards | None = None,
                    raise_on_violation: bool = True) -> SearchReport:
    """Mixed-degree version: the maximum is sum q^(d-l) and every maximum family is trivial."""
    degrees = sorted(set(degrees))
    if len(degrees) < 2:
        raise ValueError("need at least two distinct degrees")
    if any(d <= ell for d in degrees):
        raise ValueError(f"every degree must exceed ell = {ell}")
    f = field_of_order(q, guards)
    report = _search(f, degrees, ell, enumerate_all, cap, workers, timeout, guards)
    if report.complete:
        v = report.violations
        if report.max_size_found != report.predicted_bound:
            v.append(f"maximum size {report.max_size_found} != sum q^(d-l) = {report.predicted_bound}")
        for fam in report.families or []:
            c = family_common_divisor(fam)
            per_degree = Counter(p.degree for p in fam.members)
            full = c.degree >= ell and all(per_degree[d] == q ** (d - ell) for d in degrees)
            if not full:
                v.append(f"maximum family {[p.to_json() for p in fam.members]} is not trivial")
    if raise_on_violation and report.violations:
        raise TheoremViolation("; ".join(report.violations), report)
    return report


def default_workers() -> int:
    return os.cpu_count() or 1
