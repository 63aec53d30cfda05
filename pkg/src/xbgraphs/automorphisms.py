"""Closed-form automorphisms of the X_b graphs and of the n = 8 families.

Each builder fills a total image array and asserts every slot was written once;
whether the result really is an automorphism is decided by
:func:`is_automorphism`, never assumed.
"""

from __future__ import annotations

from typing import Sequence

import numpy as np

from .constructions import XbParams, validate_xb
from .graph_core import FactorGraph
from .perm import Perm

__all__ = [
    "is_automorphism",
    "first_violation",
    "gamma_of",
    "alpha_of",
    "beta_of",
    "rho_of",
    "gamma_condition",
    "alpha_condition",
    "n8_exceptional_gens",
    "extend_from_ring",
    "commutes_with_outside",
    "TranscriptionError",
]


class TranscriptionError(RuntimeError):
    """A formula-built permutation failed its certification."""


class _Filler:
    def __init__(self, m: int, n: int) -> None:
        self.m, self.n = m, n
        self.images = np.full(m * n, -1, dtype=np.int64)

    def set(self, src: tuple[int, int], dst: tuple[int, int]) -> None:
        s = (src[0] % self.m) * self.n + src[1] % self.n
        if self.images[s] != -1:
            raise TranscriptionError(f"image of v{src} written twice")
        self.images[s] = (dst[0] % self.m) * self.n + dst[1] % self.n

    def perm(self, label: str) -> Perm:
        missing = np.flatnonzero(self.images < 0)
        if len(missing):
            raise TranscriptionError(f"{label}: no image for flat vertices {missing[:5].tolist()}")
        return Perm(self.images, label)


# -- certification ----------------------------------------------------------


def first_violation(g: FactorGraph, p: Perm) -> tuple[int, int] | None:
    """An edge whose image is not an edge, or None."""
    if p.degree != g.order:
        raise ValueError("permutation degree does not match graph order")
    img = p.images
    for u, v in g.edges:
        if not g.has_edge(int(img[u]), int(img[v])):
            return (u, v)
    return None


def is_automorphism(g: FactorGraph, p: Perm) -> bool:
    return first_violation(g, p) is None


def commutes_with_outside(g: FactorGraph, p: Perm) -> bool:
    out = np.asarray(g.outside)
    return bool((p.images[out] == out[p.images]).all())


# -- the X_b generators -----------------------------------------------------


def _require_valid(p: XbParams) -> None:
    problems = validate_xb(p)
    if problems:
        raise ValueError(f"invalid parameters {p.as_tuple()}: " + "; ".join(problems))


def gamma_of(p: XbParams) -> Perm:
    """The shift ``v_{i,j} -> v_{i+1,j+2}`` with its twisted wrap on ``V_{m-1}``."""
    _require_valid(p)
    return _gamma(p.m, p.n, p.l)


def _gamma(m: int, n: int, l: int) -> Perm:  # noqa: E741
    f = _Filler(m, n)
    for j in range(n):
        for i in range(m - 1):
            f.set((i, j), (i + 1, j + 2))
        if l % 2 == 0:
            f.set((m - 1, j), (0, l + j - 2 * (m - 2)))
        else:
            f.set((m - 1, j), (0, l - j + 2 * (m - 2)))
    return f.perm("gamma")


def alpha_of(p: XbParams) -> Perm:
    """The ring-reversing involution swapping ``v_{0,j}`` and ``v_{1,j}``."""
    _require_valid(p)
    m, n, b, l = p.m, p.n, p.b, p.l
    if l % 2 and m % 2 == 0:
        raise ValueError("alpha is undefined for l odd and m even")
    f = _Filler(m, n)
    for j in range(n):
        f.set((0, j), (1, j))
        f.set((1, j), (0, j))
    for k in range(1, m - 1):
        # k = 2i - eps with eps in {0, 1}
        i = (k + 1) // 2
        eps = 2 * i - k
        src = m - k
        for j in range(n):
            if l % 2 == 0:
                f.set((src, 2 * src + j), (k + 1, l + 2 + 2 * eps - i * b + j))
            else:
                f.set((src, 2 * src + j), (k + 1, l + 4 * i + 2 * (eps - 1) - j))
    return f.perm("alpha")


def beta_of(p: XbParams) -> Perm:
    """The ring-preserving reflection needed when ``l`` is even."""
    _require_valid(p)
    m, n, a, b, l = p.m, p.n, p.a, p.b, p.l
    if l % 2:
        raise ValueError("beta is only used when l is even")
    f = _Filler(m, n)
    if m % 2:
        for i in range(m):
            for j in range(n):
                f.set((i, j), (i, 1 - j))
        return f.perm("beta")
    for i in range(m // 2):
        for eps in (0, 1):
            for j in range(n):
                f.set((2 * i + eps, j), (2 * i + eps, eps * (a - 1) + 1 + i * (4 - b) - j))
    return f.perm("beta")


def rho_of(g: FactorGraph, alpha: Perm, gamma: Perm) -> Perm:
    """``alpha * gamma``, checked to act as the 2-step rotation of ``V_0``."""
    rho = alpha * gamma
    for j in range(g.n):
        if rho(g.v(0, j)) != g.v(0, j + 2):
            raise TranscriptionError(
                f"alpha*gamma sends v(0,{j}) to {g.vertex(rho(g.v(0, j)))}, not v(0,{(j + 2) % g.n})"
            )
    return Perm(rho.images, "rho")


def gamma_condition(p: XbParams) -> bool:
    """Existence condition for a C-preserving automorphism sending v00 to v12."""
    n = p.n
    if p.l % 2:
        return p.b == (-4) % n and p.a == (2 * p.l - 1) % n
    return ((p.l + 2) * (p.b0 - 1)) % n == 0


def alpha_condition(p: XbParams) -> bool:
    """Existence of the C-preserving involution v00 <-> v10 (together with gamma)."""
    if not gamma_condition(p):
        return False
    m, n, l = p.m, p.n, p.l
    if m % 2 and l % 2:
        return True  # gamma_condition already forces b = -4, a = 2l - 1
    if m % 2:
        n0 = p.n0
        return (
            p.a == 1
            and p.b == 4
            and n0 % 2 == 1
            and n0 >= 3
            and (l - (2 * n0 + 2 * m - 2)) % n == 0
        )
    if l % 2:
        return False
    return (2 * (l + 2) - (m // 2) * (p.b + 4)) % n == 0


# -- the n = 8 families ------------------------------------------------------


def extend_from_ring(g: FactorGraph, ring0: Sequence[int], label: str) -> Perm:
    """Extend a dihedral map of ``V_0`` to a ring-preserving permutation.

    ``ring0[j]`` is the image index of ``v_{0,j}``. Each further ring gets the
    unique dihedral map compatible with the links from the previous ring; the
    outcome still has to pass :func:`is_automorphism`.
    """
    m, n = g.m, g.n
    maps = [list(ring0)]
    dihedral = [[(s * j + t) % n for j in range(n)] for s in (1, -1) for t in range(n)]
    for i in range(1, m):
        prev = maps[-1]
        constraints = []
        for j in range(n):
            w = g.outside[g.v(i - 1, j)]
            if g.ring_of(w) == i:
                target = g.outside[g.v(i - 1, prev[j])]
                if g.ring_of(target) != i:
                    raise TranscriptionError(f"{label}: link pattern not preserved at ring {i}")
                constraints.append((w - i * n, target - i * n))
        fits = [d for d in dihedral if all(d[x] == y for x, y in constraints)]
        if len(fits) != 1:
            raise TranscriptionError(f"{label}: {len(fits)} dihedral extensions on ring {i}")
        maps.append(fits[0])
    f = _Filler(m, n)
    for i, mp in enumerate(maps):
        for j in range(n):
            f.set((i, j), (i, mp[j]))
    return f.perm(label)


def n8_alpha(kind: str, m: int) -> Perm:
    m0 = m // 3
    shift = 1 if kind == "xb1" else 5
    f = _Filler(m, 8)
    for j in range(8):
        f.set((0, j), (1, j))
        f.set((1, j), (0, j))
    for k in range(1, m - 1):
        # k = 3i - eps with eps in {0, 1, 2}
        i = (k + 2) // 3
        eps = 3 * i - k
        for j in range(8):
            if eps in (0, 1):
                f.set((m - k, j), (k + 1, 2 * m0 + 4 * i + j))
            else:
                f.set((m - k, j), (k + 1, shift - 2 * m0 - j))
    return f.perm("alpha")


def n8_exceptional_gens(kind: str, m: int) -> list[Perm]:
    """Certified generators ``[gamma, phi0, phi1, alpha]`` of X_b^1(m) or X_b^2(m)."""
    from .constructions import build_xb1, build_xb2

    kind = kind.lower().replace("^", "").replace("_", "")
    if kind not in ("xb1", "xb2"):
        raise ValueError(f"kind must be xb1 or xb2, got {kind!r}")
    if m < 3 or m % 3:
        raise ValueError("m must be divisible by 3")
    g = build_xb1(m) if kind == "xb1" else build_xb2(m)
    gens = [
        _gamma(m, 8, 6),
        extend_from_ring(g, [(j + 4) % 8 for j in range(8)], "phi0"),
        extend_from_ring(g, [(1 - j) % 8 for j in range(8)], "phi1"),
        n8_alpha(kind, m),
    ]
    for p in gens:
        bad = first_violation(g, p)
        if bad is not None:
            raise TranscriptionError(
                f"{p.label} on {g.family_label} maps edge {g.vertex(bad[0])}-{g.vertex(bad[1])} to a non-edge"
            )
    return gens
