"""Brute-force automorphism groups and isomorphisms of small cubic graphs.

Individualization-refinement: a first leaf path of individualized vertices
fixes a base; for each level the orbit of the base point under the pointwise
stabilizer of the earlier points is completed by searching for one leaf per
unexplained candidate. The group is then materialized from the transversals.
Nothing here relies on the closed-form generators, so it serves as an oracle
for them.
"""

from __future__ import annotations

import os
from collections import Counter
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .graph_core import FactorGraph
from .perm import Perm
from .perm_group import PermGroup

__all__ = [
    "LimitExceeded",
    "ColorRefinement",
    "refine",
    "full_aut",
    "are_isomorphic",
    "oracle_limit",
]

DEFAULT_LIMIT = 512
ENV_LIMIT = "XBGRAPHS_ORACLE_LIMIT"


class LimitExceeded(RuntimeError):
    pass


def oracle_limit() -> int:
    return int(os.environ.get(ENV_LIMIT, DEFAULT_LIMIT))


@dataclass(frozen=True)
class ColorRefinement:
    colors: tuple[int, ...]
    stable: bool
    trace: tuple


Adj = Sequence[Sequence[int]]


def _adj_of(g: FactorGraph | Adj) -> Adj:
    return g.adj if isinstance(g, FactorGraph) else g


def refine(adj: Adj, colors: Sequence[int]) -> ColorRefinement:
    """Iterated neighbor-multiset refinement; colors are canonical ranks."""
    colors = list(colors)
    distinct = sorted(set(colors))
    rank = {c: k for k, c in enumerate(distinct)}
    colors = [rank[c] for c in colors]
    k = len(distinct)
    trace: list = [tuple(Counter(colors)[c] for c in range(k))]
    while True:
        sigs = [(colors[v], tuple(sorted(colors[w] for w in adj[v]))) for v in range(len(adj))]
        counts = Counter(sigs)
        if len(counts) == k:
            break
        distinct_sigs = sorted(counts)
        rank_sig = {s: r for r, s in enumerate(distinct_sigs)}
        colors = [rank_sig[s] for s in sigs]
        k = len(distinct_sigs)
        trace.append(tuple((s, counts[s]) for s in distinct_sigs))
    return ColorRefinement(tuple(colors), True, tuple(trace))


def _individualize(colors: Sequence[int], v: int) -> list[int]:
    return [2 * c + (1 if u == v else 0) for u, c in enumerate(colors)]


def _target_cell(colors: Sequence[int]) -> int | None:
    sizes: dict[int, int] = {}
    for c in colors:
        sizes[c] = sizes.get(c, 0) + 1
    best = None
    for c in sorted(sizes):
        if sizes[c] > 1 and (best is None or sizes[c] < sizes[best]):
            best = c
    return best


@dataclass
class _Level:
    part: ColorRefinement
    cell: int | None
    base: int | None


def _base_path(adj: Adj) -> list[_Level]:
    part = refine(adj, [0] * len(adj))
    levels = []
    while True:
        cell = _target_cell(part.colors)
        if cell is None:
            levels.append(_Level(part, None, None))
            return levels
        b = part.colors.index(cell)
        levels.append(_Level(part, cell, b))
        part = refine(adj, _individualize(part.colors, b))


def _edges_map(adj_a: Adj, adj_b: Adj, f: Sequence[int]) -> bool:
    for u, nbrs in enumerate(adj_a):
        fn = set(adj_b[f[u]])
        for w in nbrs:
            if f[w] not in fn:
                return False
    return True


def _leaf_map(base_colors: Sequence[int], colors: Sequence[int]) -> list[int]:
    where = {c: v for v, c in enumerate(colors)}
    return [where[c] for c in base_colors]


def _dfs(adj_a: Adj, adj_b: Adj, levels: list[_Level], depth: int, part: ColorRefinement) -> list[int] | None:
    """First leaf below ``part`` (partition of B at ``depth``) that maps A onto B."""
    lvl = levels[depth]
    if lvl.cell is None:
        f = _leaf_map(lvl.part.colors, part.colors)
        return f if _edges_map(adj_a, adj_b, f) else None
    want = levels[depth + 1].part.trace
    for y in [v for v, c in enumerate(part.colors) if c == lvl.cell]:
        child = refine(adj_b, _individualize(part.colors, y))
        if child.trace != want:
            continue
        found = _dfs(adj_a, adj_b, levels, depth + 1, child)
        if found is not None:
            return found
    return None


def _check_limit(n: int, limit: int | None) -> None:
    limit = oracle_limit() if limit is None else limit
    if n > limit:
        raise LimitExceeded(f"{n} vertices exceed the oracle limit {limit}")


def _orbit_with_words(point: int, gens: list[np.ndarray]) -> dict[int, np.ndarray]:
    """Orbit of ``point`` with, for each orbit point, a group element reaching it."""
    n = len(gens[0]) if gens else 0
    reps = {point: np.arange(n) if gens else None}
    queue = [point]
    while queue:
        x = queue.pop()
        for s in gens:
            y = int(s[x])
            if y not in reps:
                reps[y] = s[reps[x]]
                queue.append(y)
    return reps


def full_aut(g: FactorGraph | Adj, limit: int | None = None, max_order: int = 10**6) -> PermGroup:
    """The complete automorphism group, every element materialized."""
    adj = _adj_of(g)
    n = len(adj)
    _check_limit(n, limit)
    levels = _base_path(adj)
    k = len(levels) - 1
    gens: list[np.ndarray] = []
    level_gens: list[list[np.ndarray]] = [[] for _ in range(k)]
    transversals: list[dict[int, np.ndarray]] = [dict() for _ in range(k)]
    ident = np.arange(n)
    for t in range(k - 1, -1, -1):
        lvl = levels[t]
        active = [p for lg in level_gens[t:] for p in lg]
        reps = _orbit_with_words(lvl.base, active) if active else {lvl.base: ident}
        reps[lvl.base] = ident
        for x in [v for v, c in enumerate(lvl.part.colors) if c == lvl.cell]:
            if x in reps:
                continue
            child = refine(adj, _individualize(lvl.part.colors, x))
            if child.trace != levels[t + 1].part.trace:
                continue
            f = _dfs(adj, adj, levels, t + 1, child)
            if f is None:
                continue
            p = np.asarray(f)
            level_gens[t].append(p)
            gens.append(p)
            active.append(p)
            reps = _orbit_with_words(lvl.base, active)
            reps[lvl.base] = ident
        transversals[t] = reps
    order = 1
    for tr in transversals:
        order *= len(tr)
    if order > max_order:
        raise LimitExceeded(f"|Aut| = {order} exceeds {max_order}")
    elems = ident[None, :]
    for t in range(k - 1, -1, -1):
        elems = np.vstack([rep[elems] for _, rep in sorted(transversals[t].items())])
    return PermGroup.from_elements([Perm(p, "aut") for p in gens], elems)


def are_isomorphic(g1: FactorGraph | Adj, g2: FactorGraph | Adj, limit: int | None = None) -> Perm | None:
    """An explicit isomorphism ``g1 -> g2`` (certified edge by edge), or None."""
    a, b = _adj_of(g1), _adj_of(g2)
    _check_limit(max(len(a), len(b)), limit)
    if len(a) != len(b) or sorted(map(len, a)) != sorted(map(len, b)):
        return None
    if sum(map(len, a)) != sum(map(len, b)):
        return None
    levels = _base_path(a)
    root = refine(b, [0] * len(b))
    if root.trace != levels[0].part.trace:
        return None
    f = _dfs(a, b, levels, 0, root)
    if f is None:
        return None
    if not _edges_map(a, b, f):  # pragma: no cover - _dfs already checked
        return None
    return Perm(np.asarray(f), "iso")
