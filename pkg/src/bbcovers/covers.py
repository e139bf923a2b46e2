"""Cover relationships between bivariate bicycle codes.

A candidate code Q~(A~, B~, l~, m~) covers a base Q(A, B, l, m) when l | l~,
m | m~ and each defining term of the candidate reduces, exponentwise modulo
(l, m), to a distinct term of the corresponding base polynomial.  This module
decides and certifies that relation, enumerates all covers for given target
lattice parameters with canonical deduplication, and cross-validates the
algebra against an explicit derived-graph construction.
"""

from __future__ import annotations

from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from itertools import product

from .codes import BBCode, Refusal
from .rings import Monomial, Poly, RingContext


class CoverRefusal(Refusal):
    """The candidate is not a cover; names the first violated condition."""

    def __init__(self, condition: int, message: str) -> None:
        super().__init__(f"cover condition {condition} violated: {message}")
        self.condition = condition


@dataclass(frozen=True)
class CoverWitness:
    """Certificate that cover's Tanner graph is an h-fold cover of base's."""

    base: BBCode
    cover: BBCode
    u: int
    t: int
    a_matching: tuple[tuple[Monomial, Monomial], ...]  # (cover term, base term)
    b_matching: tuple[tuple[Monomial, Monomial], ...]

    @property
    def h(self) -> int:
        return self.u * self.t


def _match_terms(cand: Poly, base: Poly, l: int, m: int) -> tuple[tuple[Monomial, Monomial], ...]:
    """Pair each candidate term with the base term it reduces to, or raise.

    Terms are unordered sets, so the matching is by reduced value; base terms
    are distinct, which makes the bijection unique when it exists.
    """
    if cand.weight != base.weight:
        raise ValueError(f"term counts differ ({cand.weight} vs {base.weight})")
    by_value = {term: term for term in base.terms}
    matching = []
    hit = set()
    for ct in cand.terms:
        reduced = Monomial(ct.a % l, ct.b % m)
        bt = by_value.get(reduced)
        if bt is None or bt in hit:
            raise ValueError(f"term {ct.render()} reduces to {reduced.render()}, not a base term")
        hit.add(bt)
        matching.append((ct, bt))
    return tuple(matching)


def check_cover(base: BBCode, cand: BBCode) -> CoverWitness:
    """Decide the h-cover relation; returns a witness or raises CoverRefusal."""
    lt, mt = cand.l, cand.m
    l, m = base.l, base.m
    if lt % l != 0:
        raise CoverRefusal(1, f"l={l} does not divide candidate l~={lt}")
    if mt % m != 0:
        raise CoverRefusal(2, f"m={m} does not divide candidate m~={mt}")
    try:
        a_matching = _match_terms(cand.a, base.a, l, m)
    except ValueError as exc:
        raise CoverRefusal(3, f"A terms do not project onto base A terms: {exc}") from exc
    try:
        b_matching = _match_terms(cand.b, base.b, l, m)
    except ValueError as exc:
        raise CoverRefusal(4, f"B terms do not project onto base B terms: {exc}") from exc
    return CoverWitness(base, cand, lt // l, mt // m, a_matching, b_matching)


# --- canonical forms and enumeration -----------------------------------------

def poly_stabilizer_monomials(p: Poly) -> list[Monomial]:
    """Monomials mu with mu * p == p (always contains 1)."""
    ctx = p.ctx
    return [mu for mu in ctx.monomials() if p.shift(mu) == p]


def cover_multipliers(base_poly: Poly, u: int, t: int) -> list[Monomial]:
    """Cover monomials whose projection multiplies the base polynomial trivially.

    These are exactly the monomial multipliers that keep a lifted polynomial a
    valid lift of base_poly: all x^{il} y^{jm}, plus the lifts of any base
    monomial that stabilizes base_poly.
    """
    l, m = base_poly.ctx.l, base_poly.ctx.m
    out = []
    for mu in poly_stabilizer_monomials(base_poly):
        for i in range(u):
            for j in range(t):
                out.append(Monomial(mu.a + l * i, mu.b + m * j))
    return out


def _orbit_min(p: Poly, multipliers: list[Monomial]) -> Poly:
    return min((p.shift(mu) for mu in multipliers), key=lambda q: q.terms)


def canonical_form(a_t: Poly, b_t: Poly, base: BBCode, u: int, t: int) -> tuple[Poly, Poly]:
    """Orbit-minimal representative of (A~, B~) under independent multipliers.

    The two sides act independently, so the componentwise minimum is the
    minimum of the product orbit in (A-string, B-string) order.
    """
    return (
        _orbit_min(a_t, cover_multipliers(base.a, u, t)),
        _orbit_min(b_t, cover_multipliers(base.b, u, t)),
    )


def lifts_of_poly(p: Poly, u: int, t: int) -> list[Poly]:
    """All u*t-per-term exponent lifts of p into the (u*l, t*m) ring."""
    ctx = RingContext(p.ctx.l * u, p.ctx.m * t)
    l, m = p.ctx.l, p.ctx.m
    out = []
    for choice in product(range(u * t), repeat=p.weight):
        terms = []
        for term, c in zip(p.terms, choice):
            i, j = divmod(c, t)
            terms.append((term.a + l * i, term.b + m * j))
        out.append(Poly.make(ctx, terms))
    return out


def _side_representatives(base_poly: Poly, u: int, t: int) -> list[Poly]:
    mults = cover_multipliers(base_poly, u, t)
    reps = {}
    for cand in lifts_of_poly(base_poly, u, t):
        rep = _orbit_min(cand, mults)
        reps[rep.terms] = rep
    return sorted(reps.values(), key=lambda q: q.terms)


@dataclass(frozen=True)
class CoverRecord:
    a: Poly
    b: Poly
    k: int
    connected: bool

    def code(self) -> BBCode:
        return BBCode(self.a, self.b)


@dataclass(frozen=True)
class CoverEnumeration:
    base: BBCode
    lt: int
    mt: int
    records: tuple[CoverRecord, ...]
    deduplicated: bool = True

    @property
    def h(self) -> int:
        return (self.lt // self.base.l) * (self.mt // self.base.m)

    @property
    def k_histogram(self) -> dict[int, int]:
        hist = Counter(r.k for r in self.records)
        return dict(sorted(hist.items()))


def _tanner_connected_by_translation(a: Poly, b: Poly) -> bool:
    """Connectivity of the Tanner graph via its translation symmetry.

    Closed walks displace check labels by differences of defining exponents,
    so the graph is connected iff those differences generate Z_l x Z_m.  The
    generic BFS in is_connected agrees with this; see the cover tests.
    """
    ctx = a.ctx
    gens = []
    a0 = a.terms[0]
    for term in a.terms[1:]:
        gens.append(((term.a - a0.a) % ctx.l, (term.b - a0.b) % ctx.m))
    b0 = b.terms[0]
    for term in b.terms[1:]:
        gens.append(((term.a - b0.a) % ctx.l, (term.b - b0.b) % ctx.m))
    seen = {(0, 0)}
    frontier = [(0, 0)]
    while frontier:
        nxt = []
        for (pa, pb) in frontier:
            for (ga, gb) in gens:
                q = ((pa + ga) % ctx.l, (pb + gb) % ctx.m)
                if q not in seen:
                    seen.add(q)
                    nxt.append(q)
        frontier = nxt
    return len(seen) == ctx.dim


def _record_of(args: tuple) -> CoverRecord:
    a_terms, b_terms, lt, mt = args
    ctx = RingContext(lt, mt)
    a = Poly.make(ctx, a_terms)
    b = Poly.make(ctx, b_terms)
    code = BBCode(a, b)
    return CoverRecord(a, b, code.k, _tanner_connected_by_translation(a, b))


def enumerate_covers(
    base: BBCode,
    lt: int,
    mt: int,
    *,
    dedup: bool = True,
    workers: int = 1,
) -> CoverEnumeration:
    """All h-cover candidates of base at lattice (lt, mt), one per class.

    With dedup (the default), candidates are reduced to canonical orbit
    representatives first; class count is then at most h^4 for weight-6 codes
    and h^6 for weight-8 ones.
    """
    if lt < base.l or mt < base.m or lt % base.l != 0 or mt % base.m != 0:
        raise Refusal(f"(l~, m~) = ({lt}, {mt}) not divisible by (l, m) = ({base.l}, {base.m})")
    u, t = lt // base.l, mt // base.m
    if dedup:
        a_side = _side_representatives(base.a, u, t)
        b_side = _side_representatives(base.b, u, t)
    else:
        a_side = lifts_of_poly(base.a, u, t)
        b_side = lifts_of_poly(base.b, u, t)
    jobs = [(a.terms, b.terms, lt, mt) for a in a_side for b in b_side]
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            records = list(pool.map(_record_of, jobs, chunksize=max(1, len(jobs) // (4 * workers))))
    else:
        records = [_record_of(j) for j in jobs]
    records.sort(key=lambda r: (r.a.terms, r.b.terms))
    return CoverEnumeration(base, lt, mt, tuple(records), deduplicated=dedup)


# --- Tanner graphs and derived graphs ----------------------------------------

Vertex = tuple  # ("X"|"Z"|"L"|"R", label...) with label (a, b) or (a, b, g1, g2)


@dataclass(frozen=True)
class TannerGraph:
    """Bipartite check/qubit graph with class-tagged vertices."""

    vertices: frozenset
    edges: frozenset  # of frozenset vertex pairs

    def neighbors(self, v: Vertex) -> set:
        return self._adjacency[v]

    @property
    def _adjacency(self) -> dict:
        adj = self.__dict__.get("_adj")
        if adj is None:
            adj = {v: set() for v in self.vertices}
            for e in self.edges:
                p, q = tuple(e)
                adj[p].add(q)
                adj[q].add(p)
            self.__dict__["_adj"] = adj
        return adj

    def class_count(self, cls: str) -> int:
        return sum(1 for v in self.vertices if v[0] == cls)

    @property
    def n_checks(self) -> int:
        return self.class_count("X") + self.class_count("Z")

    @property
    def n_qubits(self) -> int:
        return self.class_count("L") + self.class_count("R")

    def degree(self, v: Vertex) -> int:
        return len(self.neighbors(v))


def build_tanner_graph(code: BBCode) -> TannerGraph:
    """Explicit Tanner graph: X-check edges from A, B; Z-check edges from
    the supports of the Z stabilizer generators."""
    ctx = code.ctx
    vertices = set()
    for cls in ("X", "Z", "L", "R"):
        for mono in ctx.monomials():
            vertices.add((cls, (mono.a, mono.b)))
    edges = set()
    for mono in ctx.monomials():
        c = (mono.a, mono.b)
        xsupp = code.stabilizer_support(mono, "X")
        for term in xsupp.left.terms:
            edges.add(frozenset((("X", c), ("L", (term.a, term.b)))))
        for term in xsupp.right.terms:
            edges.add(frozenset((("X", c), ("R", (term.a, term.b)))))
        zsupp = code.stabilizer_support(mono, "Z")
        for term in zsupp.left.terms:
            edges.add(frozenset((("Z", c), ("L", (term.a, term.b)))))
        for term in zsupp.right.terms:
            edges.add(frozenset((("Z", c), ("R", (term.a, term.b)))))
    return TannerGraph(frozenset(vertices), frozenset(edges))


def _derived_edge_generators(witness: CoverWitness):
    """(tail class, head class, cover exponent) triples generating all edges.

    X-checks reach left qubits through A terms and right qubits through B
    terms; left qubits reach Z-checks through B terms and right qubits
    through A terms (the supports of Z_c are c - beta on the left and
    c - alpha on the right).
    """
    for (cover_term, _base) in witness.a_matching:
        yield ("X", "L", cover_term)
        yield ("R", "Z", cover_term)
    for (cover_term, _base) in witness.b_matching:
        yield ("X", "R", cover_term)
        yield ("L", "Z", cover_term)


def build_derived_graph(base: BBCode, witness: CoverWitness) -> TannerGraph:
    """Right-derived graph of the base Tanner graph over Gamma = Z_u x Z_t,
    with voltages read off the witness's lifted exponents."""
    l, m = base.l, base.m
    u, t = witness.u, witness.t
    vertices = set()
    for cls in ("X", "Z", "L", "R"):
        for mono in base.ctx.monomials():
            for g1 in range(u):
                for g2 in range(t):
                    vertices.add((cls, (mono.a, mono.b), (g1, g2)))
    edges = set()
    for tail_cls, head_cls, exp in _derived_edge_generators(witness):
        ea, eb = exp.a, exp.b
        for mono in base.ctx.monomials():
            v1, v2 = mono.a, mono.b
            head = ((v1 + ea) % l, (v2 + eb) % m)
            g = ((v1 + ea) // l % u, (v2 + eb) // m % t)
            for g1 in range(u):
                for g2 in range(t):
                    edges.add(
                        frozenset(
                            (
                                (tail_cls, (v1, v2), (g1, g2)),
                                (head_cls, head, ((g1 + g[0]) % u, (g2 + g[1]) % t)),
                            )
                        )
                    )
    return TannerGraph(frozenset(vertices), frozenset(edges))


def _vertex_down(v: Vertex, l: int, m: int) -> Vertex:
    """Lemma-style bijection from a cover vertex to a derived-graph vertex."""
    cls, (a, b) = v
    return (cls, (a % l, b % m), (a // l, b // m))


def _vertex_up(v: Vertex, l: int, m: int) -> Vertex:
    cls, (a, b), (s1, s2) = v
    return (cls, (a + l * s1, b + m * s2))


def verify_cover_isomorphism(base: BBCode, cover: BBCode, witness: CoverWitness) -> bool:
    """Cross-validate the algebraic witness against explicit graphs.

    Checks that the vertex bijection maps cover edges to derived-graph edges
    and back, that projection fibers all have size h, and that projection
    restricts to a bijection on every neighborhood.
    """
    l, m = base.l, base.m
    cover_graph = build_tanner_graph(cover)
    derived = build_derived_graph(base, witness)
    if len(cover_graph.vertices) != len(derived.vertices):
        return False
    down = {v: _vertex_down(v, l, m) for v in cover_graph.vertices}
    if set(down.values()) != set(derived.vertices):
        return False
    for e in cover_graph.edges:
        p, q = tuple(e)
        if frozenset((down[p], down[q])) not in derived.edges:
            return False
    for e in derived.edges:
        p, q = tuple(e)
        if frozenset((_vertex_up(p, l, m), _vertex_up(q, l, m))) not in cover_graph.edges:
            return False
    base_graph = build_tanner_graph(base)
    fibers = Counter()
    for v in cover_graph.vertices:
        cls, (a, b) = v
        fibers[(cls, (a % l, b % m))] += 1
    if set(fibers.values()) != {witness.h}:
        return False
    for v in cover_graph.vertices:
        cls, (a, b) = v
        pv = (cls, (a % l, b % m))
        projected = [(w[0], (w[1][0] % l, w[1][1] % m)) for w in cover_graph.neighbors(v)]
        if len(set(projected)) != len(projected):
            return False
        if set(projected) != base_graph.neighbors(pv):
            return False
    return True


def is_connected(g: TannerGraph) -> bool:
    """Breadth-first connectivity over the whole bipartite graph."""
    if not g.vertices:
        return True
    start = next(iter(g.vertices))
    seen = {start}
    frontier = [start]
    while frontier:
        nxt = []
        for v in frontier:
            for w in g.neighbors(v):
                if w not in seen:
                    seen.add(w)
                    nxt.append(w)
        frontier = nxt
    return len(seen) == len(g.vertices)
