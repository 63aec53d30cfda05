"""Materialized permutation groups and the action predicates used on them."""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Sequence

import numpy as np

from .perm import Perm

__all__ = [
    "BoundExceeded",
    "PermGroup",
    "close",
    "orbits",
    "is_transitive",
    "is_regular",
    "preserves_partition",
    "partition_preserving_subgroup",
    "setwise_stabilizer_order",
    "point_stabilizer_order",
    "s_arcs",
    "is_s_arc_regular",
]

DEFAULT_BOUND = 10**6


class BoundExceeded(RuntimeError):
    pass


@dataclass(eq=False)
class PermGroup:
    """A finite permutation group with every element stored as a row of ``elements``."""

    generators: list[Perm]
    elements: np.ndarray
    degree: int
    _index: dict[bytes, int] = field(default_factory=dict, repr=False)

    def __post_init__(self) -> None:
        if not self._index:
            self._index = {row.tobytes(): k for k, row in enumerate(self.elements)}

    @classmethod
    def from_elements(cls, generators: Sequence[Perm], elements: np.ndarray) -> "PermGroup":
        elements = np.asarray(elements, dtype=np.int64)
        return cls(list(generators), elements, elements.shape[1])

    @property
    def order(self) -> int:
        return len(self.elements)

    def __len__(self) -> int:
        return self.order

    def __contains__(self, p: Perm) -> bool:
        return p.key() in self._index

    def __iter__(self):
        for row in self.elements:
            yield Perm(row)

    def element(self, k: int) -> Perm:
        return Perm(self.elements[k])

    def to_json(self, v0: int = 0) -> str:
        return json.dumps(
            {
                "order": self.order,
                "degree": self.degree,
                "generators": [{"label": g.label, "images": g.images.tolist()} for g in self.generators],
                "orbit_sizes": sorted((len(o) for o in orbits(self)), reverse=True),
                "point_stabilizer_order": point_stabilizer_order(self, v0),
            }
        )


def close(gens: Sequence[Perm], bound: int = DEFAULT_BOUND, degree: int | None = None) -> PermGroup:
    """Breadth-first closure of ``gens`` under composition."""
    gens = list(gens)
    if degree is None:
        if not gens:
            raise ValueError("need a degree for an empty generator list")
        degree = gens[0].degree
    if any(g.degree != degree for g in gens):
        raise ValueError("generators of different degrees")
    ident = np.arange(degree, dtype=np.int64)
    seen = {ident.tobytes()}
    rows = [ident]
    frontier = [ident]
    gen_arrays = [g.images for g in gens]
    while frontier:
        nxt = []
        for x in frontier:
            for s in gen_arrays:
                y = s[x]
                key = y.tobytes()
                if key not in seen:
                    seen.add(key)
                    rows.append(y)
                    nxt.append(y)
                    if len(rows) > bound:
                        raise BoundExceeded(f"group order exceeds {bound}")
        frontier = nxt
    # finite group: closure under products with generators is closure under inverses
    return PermGroup.from_elements(gens, np.vstack(rows))


def orbits(G: PermGroup) -> list[list[int]]:
    parent = list(range(G.degree))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    arrays = [g.images for g in G.generators] or list(G.elements)
    for s in arrays:
        for x in range(G.degree):
            rx, ry = find(x), find(int(s[x]))
            if rx != ry:
                parent[rx] = ry
    groups: dict[int, list[int]] = {}
    for x in range(G.degree):
        groups.setdefault(find(x), []).append(x)
    return sorted(groups.values())


def is_transitive(G: PermGroup) -> bool:
    return len(set(G.elements[:, 0].tolist())) == G.degree


def is_regular(G: PermGroup) -> bool:
    return G.order == G.degree and is_transitive(G)


def _block_ids(blocks: Sequence[Sequence[int]], degree: int) -> np.ndarray:
    ids = np.full(degree, -1, dtype=np.int64)
    for k, blk in enumerate(blocks):
        ids[list(blk)] = k
    if (ids < 0).any():
        raise ValueError("blocks do not cover every point")
    return ids


def _rows_preserving(rows: np.ndarray, blocks: Sequence[Sequence[int]], degree: int) -> np.ndarray:
    ids = _block_ids(blocks, degree)
    mask = np.ones(len(rows), dtype=bool)
    for blk in blocks:
        img = ids[rows[:, list(blk)]]
        mask &= (img == img[:, :1]).all(axis=1)
    return mask


def preserves_partition(
    G: PermGroup, blocks: Sequence[Sequence[int]], samples: int = 100, seed: int = 0
) -> bool:
    """Whether every element of ``G`` permutes the blocks among themselves."""
    if G.generators:
        gens = np.vstack([g.images for g in G.generators])
        if not _rows_preserving(gens, blocks, G.degree).all():
            return False
        rng = np.random.default_rng(seed)
        pick = rng.integers(0, G.order, size=min(samples, G.order))
        ok = bool(_rows_preserving(G.elements[pick], blocks, G.degree).all())
        if not ok:
            raise AssertionError("generators preserve the partition but a sampled element does not")
        return True
    return bool(_rows_preserving(G.elements, blocks, G.degree).all())


def partition_preserving_subgroup(G: PermGroup, blocks: Sequence[Sequence[int]]) -> PermGroup:
    rows = G.elements[_rows_preserving(G.elements, blocks, G.degree)]
    return PermGroup.from_elements([], rows)


def setwise_stabilizer_order(G: PermGroup, S: Sequence[int]) -> int:
    S = sorted(set(S))
    member = np.zeros(G.degree, dtype=bool)
    member[S] = True
    return int(member[G.elements[:, S]].all(axis=1).sum())


def point_stabilizer_order(G: PermGroup, v: int) -> int:
    return int((G.elements[:, v] == v).sum())


def s_arcs(adj: Sequence[Sequence[int]], s: int) -> list[tuple[int, ...]]:
    arcs: list[tuple[int, ...]] = [(v,) for v in range(len(adj))]
    for _ in range(s):
        arcs = [
            a + (w,)
            for a in arcs
            for w in adj[a[-1]]
            if len(a) < 2 or w != a[-2]
        ]
    return arcs


def is_s_arc_regular(adj: Sequence[Sequence[int]], G: PermGroup, s: int) -> bool:
    """Whether ``G`` acts sharply transitively on the s-arcs of the graph."""
    arcs = s_arcs(adj, s)
    if G.order != len(arcs):
        return False
    base = list(arcs[0])
    images = {tuple(row) for row in G.elements[:, base].tolist()}
    return images == set(arcs)

