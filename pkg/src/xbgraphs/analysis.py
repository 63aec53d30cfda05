"""Structural predicates on the constructed graphs: quotient type, Cayley
structure, edge orbits and the odd-m / even-l exceptional case."""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from enum import Enum

import numpy as np

from .aut_search import full_aut
from .constructions import Case, XbParams, build_xb, classify_theorem_case
from .graph_core import EdgeClass, FactorGraph, count_cycles_through_edge
from .perm import Perm
from .perm_group import (
    PermGroup,
    is_regular,
    partition_preserving_subgroup,
    point_stabilizer_order,
)

__all__ = [
    "quotient_graph",
    "QuotientKind",
    "QuotientType",
    "NotCycleQuotient",
    "classify_quotient_type",
    "EdgeColor",
    "edge_coloring",
    "CayleyCertificate",
    "CayleyError",
    "cayley_certificate",
    "EdgeOrbit",
    "edge_orbits",
    "edge_orbit_report",
    "green_deletion_cycles",
    "EtaReport",
    "eta_exception_check",
    "ten_cycle_walk",
    "is_closed_cycle",
]


# -- quotient ---------------------------------------------------------------


def quotient_graph(g: FactorGraph) -> dict[int, set[int]]:
    """Adjacency of the graph on rings, two rings adjacent when an edge joins them."""
    q: dict[int, set[int]] = {i: set() for i in range(g.m)}
    for (u, v), c in g.edge_class.items():
        if c is not EdgeClass.RING:
            ru, rv = g.ring_of(u), g.ring_of(v)
            q[ru].add(rv)
            q[rv].add(ru)
    return q


def _is_cycle(q: dict[int, set[int]]) -> bool:
    if len(q) < 3 or any(len(nb) != 2 for nb in q.values()):
        return False
    seen, prev, cur = {0}, None, 0
    while True:
        nxt = next(x for x in sorted(q[cur]) if x != prev)
        if nxt == 0:
            break
        seen.add(nxt)
        prev, cur = cur, nxt
    return len(seen) == len(q)


class QuotientKind(str, Enum):
    ALTERNATING = "Alternating"
    BIALTERNATING = "Bialternating"


class NotCycleQuotient(ValueError):
    pass


@dataclass(frozen=True)
class QuotientType:
    kind: QuotientKind
    evidence: dict


def classify_quotient_type(g: FactorGraph) -> QuotientType:
    """Alternating or bialternating, read off the outside neighbors of v_{0,+-1}.

    Ring indices are first relabeled along the quotient cycle so that the outside
    neighbor of v_{0,0} sits in the "next" ring.
    """
    q = quotient_graph(g)
    if not _is_cycle(q):
        raise NotCycleQuotient(f"quotient of {g.family_label or 'graph'} is not a cycle of length >= 3")
    nxt = g.ring_of(g.outside[g.v(0, 0)])
    prv = next(x for x in q[0] if x != nxt)
    ring_p1 = g.ring_of(g.outside[g.v(0, 1)])
    ring_m1 = g.ring_of(g.outside[g.v(0, -1)])
    evidence = {"next_ring": nxt, "ring_of_N(v0,1)": ring_p1, "ring_of_N(v0,-1)": ring_m1}
    if ring_p1 == prv and ring_m1 == prv:
        return QuotientType(QuotientKind.ALTERNATING, evidence)
    if (ring_p1 == nxt) != (ring_m1 == nxt):
        return QuotientType(QuotientKind.BIALTERNATING, evidence)
    raise NotCycleQuotient(f"both v(0,1) and v(0,-1) link into ring {nxt}: neither type")


# -- coloring ---------------------------------------------------------------


class EdgeColor(str, Enum):
    GREEN = "green"
    RED = "red"
    BLUE = "blue"


def edge_coloring(g: FactorGraph) -> dict[tuple[int, int], EdgeColor]:
    """Red links and jumps; green ring edges v_{i,j}v_{i,j+1} with j odd; blue the rest."""
    out = {}
    for (u, v), c in g.edge_class.items():
        if c is not EdgeClass.RING:
            out[(u, v)] = EdgeColor.RED
            continue
        ju, jv = u % g.n, v % g.n
        start = ju if (ju + 1) % g.n == jv else jv
        out[(u, v)] = EdgeColor.GREEN if start % 2 else EdgeColor.BLUE
    return out


# -- Cayley structure -------------------------------------------------------


class CayleyError(RuntimeError):
    pass


@dataclass
class CayleyCertificate:
    connection: list[Perm]
    ring_actions: list[list[int]]

    @property
    def all_involutions(self) -> bool:
        return all((s * s).is_identity() and not s.is_identity() for s in self.connection)


def cayley_certificate(g: FactorGraph, G: PermGroup, v0: int = 0) -> CayleyCertificate:
    """Connection set of ``G`` for ``g`` seen as a Cayley graph.

    Returns the three elements sending ``v0`` to its neighbors, each checked to be
    an involution; the orbit map ``h -> h(v0)`` is checked to carry the Cayley
    graph onto ``g``.
    """
    if not is_regular(G):
        raise CayleyError("group is not regular on the vertex set")
    conn = []
    for w in g.adj[v0]:
        rows = np.flatnonzero(G.elements[:, v0] == w)
        s = Perm(G.elements[rows[0]], f"s[{g.vertex(w).i},{g.vertex(w).j}]")
        if not (s * s).is_identity():
            raise CayleyError(f"element sending v0 to {g.vertex(w)} is not an involution")
        conn.append(s)
    at_v0 = G.elements[:, v0]
    cay_edges = set()
    for s in conn:
        tgt = G.elements[:, s(v0)]
        for x, y in zip(at_v0.tolist(), tgt.tolist()):
            cay_edges.add((min(x, y), max(x, y)))
    if cay_edges != set(g.edge_set):
        raise CayleyError("orbit map does not carry the Cayley graph onto the graph")
    rings = [[g.ring_of(s(g.v(i, 0))) for i in range(g.m)] for s in conn]
    return CayleyCertificate(conn, rings)


# -- edge orbits ------------------------------------------------------------


@dataclass
class EdgeOrbit:
    edges: list[tuple[int, int]]
    representative: tuple[int, int]
    classes: dict[str, int]
    colors: dict[str, int]
    cycle_counts: dict[int, int] = field(default_factory=dict)

    @property
    def size(self) -> int:
        return len(self.edges)

    def to_dict(self) -> dict:
        return {
            "size": self.size,
            "representative": list(self.representative),
            "classes": self.classes,
            "colors": self.colors,
            "cycle_counts": {str(k): v for k, v in self.cycle_counts.items()},
        }


def edge_orbits(g: FactorGraph, G: PermGroup) -> list[list[tuple[int, int]]]:
    index = {e: k for k, e in enumerate(g.edges)}
    parent = list(range(len(index)))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    arrays = [p.images for p in G.generators] or list(G.elements)
    for s in arrays:
        for (u, v), k in index.items():
            a, b = int(s[u]), int(s[v])
            other = index[(min(a, b), max(a, b))]
            ra, rb = find(k), find(other)
            if ra != rb:
                parent[ra] = rb
    groups: dict[int, list[tuple[int, int]]] = {}
    for e, k in index.items():
        groups.setdefault(find(k), []).append(e)
    return sorted(groups.values(), key=lambda es: es[0])


def edge_orbit_report(
    g: FactorGraph, G: PermGroup | None = None, lengths: tuple[int, ...] = (4, 6, 7, 8)
) -> list[EdgeOrbit]:
    """Edge orbits of ``G`` (default: the full automorphism group) with cycle statistics."""
    G = full_aut(g) if G is None else G
    colors = edge_coloring(g)
    report = []
    for es in edge_orbits(g, G):
        rep = es[0]
        report.append(
            EdgeOrbit(
                edges=es,
                representative=rep,
                classes=dict(Counter(g.edge_class[e].value for e in es)),
                colors=dict(Counter(colors[e].value for e in es)),
                cycle_counts={k: count_cycles_through_edge(g, rep, k) for k in lengths},
            )
        )
    return report


def green_deletion_cycles(g: FactorGraph, G: PermGroup | None = None) -> list[int]:
    """Cycle lengths left after deleting the Aut-orbit of the edge v_{0,0}v_{0,1}."""
    G = full_aut(g) if G is None else G
    e0 = (min(g.v(0, 0), g.v(0, 1)), max(g.v(0, 0), g.v(0, 1)))
    orbit = next(es for es in edge_orbits(g, G) if e0 in es)
    covered = Counter(x for e in orbit for x in e)
    if len(covered) != g.order or any(c != 1 for c in covered.values()):
        raise ValueError("the orbit of v00v01 is not a perfect matching")
    removed = set(orbit)
    rest = [[w for w in g.adj[u] if (min(u, w), max(u, w)) not in removed] for u in range(g.order)]
    seen = [False] * g.order
    lengths = []
    for s in range(g.order):
        if seen[s]:
            continue
        size, stack = 0, [s]
        seen[s] = True
        while stack:
            x = stack.pop()
            size += 1
            for y in rest[x]:
                if not seen[y]:
                    seen[y] = True
                    stack.append(y)
        lengths.append(size)
    return sorted(lengths)


# -- odd m, even l ----------------------------------------------------------


@dataclass
class EtaReport:
    params: XbParams
    aut_order: int
    stabilizer_order: int
    c_invariant: bool
    regular: bool
    branch_fires: bool
    eta: Perm | None = None

    def to_dict(self) -> dict:
        return {
            "params": list(self.params.as_tuple()),
            "aut_order": self.aut_order,
            "stabilizer_order": self.stabilizer_order,
            "c_invariant": self.c_invariant,
            "regular": self.regular,
            "branch_fires": self.branch_fires,
            "eta": None if self.eta is None else self.eta.images.tolist(),
        }


def eta_exception_check(m: int, n: int | None = None) -> EtaReport:
    """Automorphism data of the odd-m, even-l graph with ring length ``n`` (default 4m)."""
    if m % 2 == 0 or m < 3:
        raise ValueError("m must be odd and at least 3")
    n = 4 * m if n is None else n
    n0 = n // 4
    p = XbParams(m, n, 1, 4, 2 * n0 + 2 * m - 2)
    case = classify_theorem_case(*p.as_tuple())
    if case.case is not Case.ODD_EVEN:
        raise ValueError(f"{p} is not an odd-m, even-l tuple of the classification ({case.detail})")
    g = build_xb(p)
    G = full_aut(g)
    C = partition_preserving_subgroup(G, g.rings)
    eta = None
    fires = n == 4 * m
    if fires:
        v11, v01, v10 = g.v(1, 1), g.v(0, 1), g.v(1, 0)
        E = G.elements
        rows = np.flatnonzero((E[:, v11] == v11) & (E[:, v01] == v10) & (E[:, v10] == v01))
        if len(rows) != 1:
            raise RuntimeError(f"expected a unique eta, found {len(rows)}")
        eta = Perm(E[rows[0]], "eta")
    return EtaReport(
        params=p,
        aut_order=G.order,
        stabilizer_order=point_stabilizer_order(G, 0),
        c_invariant=C.order == G.order,
        regular=is_regular(G),
        branch_fires=fires,
        eta=eta,
    )


# -- the girth-10 witness ----------------------------------------------------


def ten_cycle_walk(g: FactorGraph, a: int) -> list[int]:
    """The ten-vertex walk through v_{0,0} that closes up whenever a != 1."""
    coords = [(2, 3), (2, 2), (1, 2), (1, 1), (1, 0), (0, 0), (0, 1), (1, a), (1, a + 1), (1, a + 2)]
    return [g.v(i, j) for i, j in coords]


def is_closed_cycle(g: FactorGraph, walk: list[int]) -> bool:
    if len(set(walk)) != len(walk) or len(walk) < 3:
        return False
    return all(g.has_edge(walk[k], walk[(k + 1) % len(walk)]) for k in range(len(walk)))
