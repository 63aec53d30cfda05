"""Labeled cubic graphs on the vertex grid Z_m x Z_n.

Vertex ``v_{i,j}`` has the flat index ``i*n + j``; this single order is used by
permutations, graph6 export and hashing. Every edge carries an :class:`EdgeClass`:
ring edges ``v_{i,j} v_{i,j+1}`` form the 2-factor, links join ``V_i`` to
``V_{i+1}`` for ``i <= m-2`` and jumps close the quotient cycle from ``V_{m-1}``
back to ``V_0``.
"""

from __future__ import annotations

import json
from collections import deque
from dataclasses import dataclass, field
from enum import Enum
from functools import cached_property
from typing import Iterable, NamedTuple

__all__ = [
    "EdgeClass",
    "VertexId",
    "FactorGraph",
    "outside_neighbor",
    "girth",
    "count_cycles_through_edge",
    "is_connected",
    "export",
    "import_json",
    "decode_graph6",
]

MAX_CYCLE_LEN = 12


class EdgeClass(str, Enum):
    RING = "ring"
    LINK = "link"
    JUMP = "jump"


class VertexId(NamedTuple):
    i: int
    j: int

    def flat(self, n: int) -> int:
        return self.i * n + self.j


Edge = tuple[int, int]


def _edge(u: int, v: int) -> Edge:
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class FactorGraph:
    """A cubic graph together with its natural ring 2-factor.

    Construct through :meth:`build`, which adds the ring edges and checks all
    structural invariants.
    """

    m: int
    n: int
    edge_class: dict[Edge, EdgeClass] = field(repr=False, compare=False)
    family_label: str = ""

    @classmethod
    def build(
        cls,
        m: int,
        n: int,
        outside: Iterable[tuple[int, int, EdgeClass]],
        family_label: str = "",
    ) -> "FactorGraph":
        """Create the graph from its non-ring edges given as flat-index triples."""
        if m < 2 or n < 3:
            raise ValueError(f"need m >= 2 and n >= 3, got m={m}, n={n}")
        classes: dict[Edge, EdgeClass] = {}
        for i in range(m):
            for j in range(n):
                classes[_edge(i * n + j, i * n + (j + 1) % n)] = EdgeClass.RING
        for u, v, cls_ in outside:
            if u == v:
                raise ValueError(f"loop at vertex {u}")
            e = _edge(u, v)
            if e in classes:
                raise ValueError(f"duplicate edge {e}")
            if cls_ is EdgeClass.RING:
                raise ValueError(f"outside edge {e} tagged as ring")
            classes[e] = EdgeClass(cls_)
        g = cls(m, n, classes, family_label)
        g._check()
        return g

    def _check(self) -> None:
        mn = self.m * self.n
        degree = [0] * mn
        outside = [0] * mn
        for (u, v), c in self.edge_class.items():
            if not (0 <= u < mn and 0 <= v < mn):
                raise ValueError(f"edge {(u, v)} out of range")
            degree[u] += 1
            degree[v] += 1
            if c is not EdgeClass.RING:
                outside[u] += 1
                outside[v] += 1
                ru, rv = u // self.n, v // self.n
                if ru == rv:
                    raise ValueError(f"outside edge {(u, v)} inside ring {ru}")
        bad = [v for v in range(mn) if degree[v] != 3 or outside[v] != 1]
        if bad:
            raise ValueError(f"not cubic with a unique outside neighbor at {bad[:5]}")

    # -- coordinates --------------------------------------------------------

    @property
    def order(self) -> int:
        return self.m * self.n

    def v(self, i: int, j: int) -> int:
        """Flat index of ``v_{i,j}`` with indices reduced mod m and mod n."""
        return (i % self.m) * self.n + j % self.n

    def vertex(self, flat: int) -> VertexId:
        return VertexId(*divmod(flat, self.n))

    def ring_of(self, flat: int) -> int:
        return flat // self.n

    @cached_property
    def rings(self) -> list[list[int]]:
        return [list(range(i * self.n, (i + 1) * self.n)) for i in range(self.m)]

    # -- adjacency ----------------------------------------------------------

    @cached_property
    def adj(self) -> tuple[tuple[int, ...], ...]:
        nbrs: list[list[int]] = [[] for _ in range(self.order)]
        for u, v in self.edge_class:
            nbrs[u].append(v)
            nbrs[v].append(u)
        return tuple(tuple(sorted(x)) for x in nbrs)

    @cached_property
    def edges(self) -> list[Edge]:
        return sorted(self.edge_class)

    @cached_property
    def edge_set(self) -> frozenset[Edge]:
        return frozenset(self.edge_class)

    @cached_property
    def outside(self) -> tuple[int, ...]:
        out = [0] * self.order
        for (u, v), c in self.edge_class.items():
            if c is not EdgeClass.RING:
                out[u], out[v] = v, u
        return tuple(out)

    def has_edge(self, u: int, v: int) -> bool:
        return _edge(u, v) in self.edge_class

    def class_counts(self) -> dict[str, int]:
        counts = {c.value: 0 for c in EdgeClass}
        for c in self.edge_class.values():
            counts[c.value] += 1
        return counts

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, FactorGraph):
            return NotImplemented
        return (
            (self.m, self.n, self.family_label) == (other.m, other.n, other.family_label)
            and self.edge_class == other.edge_class
        )

    def __hash__(self) -> int:
        return hash((self.m, self.n, self.family_label, frozenset(self.edge_class.items())))


def outside_neighbor(g: FactorGraph, v: VertexId | int) -> VertexId:
    """The unique neighbor of ``v`` not on its own ring."""
    flat = g.v(*v) if isinstance(v, tuple) else v
    return g.vertex(g.outside[flat])


def is_connected(g: FactorGraph) -> bool:
    seen = {0}
    queue = deque([0])
    while queue:
        u = queue.popleft()
        for w in g.adj[u]:
            if w not in seen:
                seen.add(w)
                queue.append(w)
    return len(seen) == g.order


def girth(g: FactorGraph) -> int:
    """Length of a shortest cycle, by BFS from every vertex."""
    best = g.order + 1
    adj = g.adj
    for root in range(g.order):
        dist = {root: 0}
        parent = {root: -1}
        queue = deque([root])
        while queue:
            u = queue.popleft()
            if 2 * dist[u] + 1 >= best:
                break
            for w in adj[u]:
                if w not in dist:
                    dist[w] = dist[u] + 1
                    parent[w] = u
                    queue.append(w)
                elif parent[u] != w:
                    best = min(best, dist[u] + dist[w] + 1)
    return best


def count_cycles_through_edge(g: FactorGraph, e: Edge, length: int) -> int:
    """Number of distinct cycles of exactly ``length`` edges through ``e``."""
    if not 3 <= length <= MAX_CYCLE_LEN:
        raise ValueError(f"cycle length must lie in [3, {MAX_CYCLE_LEN}], got {length}")
    u, v = e
    if not g.has_edge(u, v):
        raise ValueError(f"{e} is not an edge")
    adj = g.adj
    # each cycle through uv is one simple v -> u path with length-1 edges
    target = length - 1
    on_path = {v}
    count = 0

    def extend(x: int, depth: int) -> None:
        nonlocal count
        for y in adj[x]:
            if y == u:
                if depth + 1 == target:
                    count += 1
                continue
            if depth + 1 >= target or y in on_path:
                continue
            on_path.add(y)
            extend(y, depth + 1)
            on_path.discard(y)

    on_path.add(u)
    extend(v, 0)
    return count


# -- serialization ----------------------------------------------------------


def _graph6_size(n: int) -> bytes:
    if n < 63:
        return bytes([n + 63])
    if n < 258048:
        return bytes([126] + [((n >> s) & 63) + 63 for s in (12, 6, 0)])
    if n < 68719476736:
        return bytes([126, 126] + [((n >> s) & 63) + 63 for s in (30, 24, 18, 12, 6, 0)])
    raise ValueError(f"graph6 cannot encode {n} vertices")


def _to_graph6(order: int, edges: Iterable[Edge]) -> bytes:
    es = set(edges)
    bits = [1 if (i, j) in es else 0 for j in range(1, order) for i in range(j)]
    bits += [0] * (-len(bits) % 6)
    body = bytes(
        63 + int("".join(map(str, bits[k : k + 6])), 2) for k in range(0, len(bits), 6)
    )
    return _graph6_size(order) + body


def decode_graph6(data: bytes | str) -> tuple[int, list[Edge]]:
    """Decode a graph6 string into (order, sorted edge list)."""
    if isinstance(data, str):
        data = data.encode("ascii")
    data = data.strip()
    if data.startswith(b">>graph6<<"):
        data = data[10:]
    if data[0] != 126:
        order, pos = data[0] - 63, 1
    elif data[1] != 126:
        order, pos = 0, 4
        for c in data[1:4]:
            order = (order << 6) | (c - 63)
    else:
        order, pos = 0, 8
        for c in data[2:8]:
            order = (order << 6) | (c - 63)
    bits = []
    for c in data[pos:]:
        x = c - 63
        bits.extend((x >> s) & 1 for s in range(5, -1, -1))
    edges = []
    k = 0
    for j in range(1, order):
        for i in range(j):
            if bits[k]:
                edges.append((i, j))
            k += 1
    return order, sorted(edges)


_DOT_COLORS = {EdgeClass.RING: "black", EdgeClass.LINK: "red", EdgeClass.JUMP: "blue"}


def _to_dot(g: FactorGraph) -> bytes:
    name = g.family_label or f"factor_{g.m}_{g.n}"
    lines = [f'graph "{name}" {{']
    for flat in range(g.order):
        i, j = g.vertex(flat)
        lines.append(f'  {flat} [label="v{i},{j}"];')
    for (u, v), c in sorted(g.edge_class.items()):
        lines.append(f'  {u} -- {v} [class="{c.value}", color="{_DOT_COLORS[c]}"];')
    lines.append("}")
    return ("\n".join(lines) + "\n").encode()


def _to_json(g: FactorGraph) -> bytes:
    doc = {
        "m": g.m,
        "n": g.n,
        "family_label": g.family_label,
        "edges": [[u, v, c.value] for (u, v), c in sorted(g.edge_class.items())],
    }
    return json.dumps(doc).encode()


def export(g: FactorGraph, fmt: str) -> bytes:
    """Serialize ``g`` as ``graph6``, ``dot`` or ``json`` (edge-list JSON)."""
    fmt = fmt.lower()
    if fmt == "graph6":
        return _to_graph6(g.order, g.edges)
    if fmt == "dot":
        return _to_dot(g)
    if fmt in ("json", "edgelistjson", "edgelist"):
        return _to_json(g)
    raise ValueError(f"unknown export format {fmt!r}")


def import_json(data: bytes | str) -> FactorGraph:
    doc = json.loads(data)
    outside = [(u, v, EdgeClass(c)) for u, v, c in doc["edges"] if c != EdgeClass.RING.value]
    g = FactorGraph.build(doc["m"], doc["n"], outside, doc.get("family_label", ""))
    ring = {(min(u, v), max(u, v)) for u, v, c in doc["edges"] if c == EdgeClass.RING.value}
    if ring != {e for e, c in g.edge_class.items() if c is EdgeClass.RING}:
        raise ValueError("ring edges in document do not match the vertex grid")
    return g
