"""Builders for every graph family of the classification, plus parameter checks.

Parameters are arbitrary integers; ``a``, ``b`` and ``l`` are reduced mod ``n``
at the boundary so that values such as ``b = -4`` or ``l = 4m - 2`` work.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from math import gcd
from typing import Iterator

from .graph_core import EdgeClass, FactorGraph

__all__ = [
    "XbParams",
    "Case",
    "TheoremCase",
    "build_mobius_or_prism",
    "validate_xb",
    "build_xb",
    "build_xb1",
    "build_xb2",
    "build_htg",
    "classify_theorem_case",
    "enumerate_xb_params",
    "parse_tuple",
]


@dataclass(frozen=True)
class XbParams:
    m: int
    n: int
    a: int
    b: int
    l: int  # noqa: E741

    def __post_init__(self) -> None:
        if self.n > 0:
            object.__setattr__(self, "a", self.a % self.n)
            object.__setattr__(self, "b", self.b % self.n)
            object.__setattr__(self, "l", self.l % self.n)

    @property
    def n0(self) -> int:
        return self.n // 4

    @property
    def b0(self) -> int:
        return self.b // 4

    @property
    def a0(self) -> int:
        return (self.a - 1) // 4

    @property
    def l0(self) -> int:
        return (self.l - 2) // 4 if self.l % 2 == 0 else (self.l - 3) // 4

    def as_tuple(self) -> tuple[int, int, int, int, int]:
        return (self.m, self.n, self.a, self.b, self.l)

    def __str__(self) -> str:
        return f"X_b({self.m},{self.n},{self.a},{self.b},{self.l})"


def parse_tuple(text: str) -> tuple[int, ...]:
    return tuple(int(x) for x in text.replace(" ", "").split(",") if x)


# -- validation -------------------------------------------------------------


def validate_xb(p: XbParams) -> list[str]:
    """All violated construction conditions; an empty list means valid."""
    out = []
    m, n = p.m, p.n
    if m < 3:
        out.append("m must be at least 3")
    if n < 8:
        out.append("n must be at least 8")
    if n % 4:
        out.append("n must be divisible by 4")
        return out
    if n <= 0:
        return out
    n0 = n // 4
    if p.b % 4:
        out.append("b must be a multiple of 4")
    else:
        b0 = p.b // 4
        if not 1 <= b0 < n0:
            out.append("b0 = b/4 must satisfy 1 <= b0 < n/4")
        elif gcd(n0, b0) != 1:
            out.append("gcd(n/4, b/4) must be 1")
        if (p.b * b0 - 4) % n:
            out.append("b*b0 must be 4 mod n")
    if p.a % 4 != 1:
        out.append("a must be 1 mod 4")
    elif p.b % 4 == 0 and (p.b * p.a0 + p.a - 1) % n:
        out.append("b*a0 + a must be 1 mod n")
    if p.l % 4 not in (2, 3):
        out.append("l must be 2 or 3 mod 4")
    return out


def enumerate_xb_params(ms: Iterator[int] | list[int], ns: Iterator[int] | list[int]) -> list[XbParams]:
    """Every valid tuple for the given m and n values, lexicographically ordered."""
    out = []
    for m in sorted(ms):
        for n in sorted(ns):
            if n % 4 or n < 8:
                continue
            for a in range(n):
                for b in range(n):
                    for l in range(n):  # noqa: E741
                        p = XbParams(m, n, a, b, l)
                        if not validate_xb(p):
                            out.append(p)
    return out


# -- builders ---------------------------------------------------------------


def _link_class(i: int, m: int) -> EdgeClass:
    return EdgeClass.JUMP if i == m - 1 else EdgeClass.LINK


def build_xb(p: XbParams) -> FactorGraph:
    """The graph X_b(m, n, a, b, l)."""
    problems = validate_xb(p)
    if problems:
        raise ValueError(f"invalid parameters {p.as_tuple()}: " + "; ".join(problems))
    return _xb_graph(p.m, p.n, p.a, p.b, p.l, f"xb:{p.m},{p.n},{p.a},{p.b},{p.l}")


def _xb_graph(m: int, n: int, a: int, b: int, l: int, label: str) -> FactorGraph:  # noqa: E741
    n0 = n // 4

    def v(i: int, j: int) -> int:
        return (i % m) * n + j % n

    outside = []
    for j0 in range(n0):
        for d in (0, 1):
            for i in range(m - 1):
                outside.append((v(i, 2 * i + 4 * j0 + d), v(i + 1, 2 * i + b * j0 + d * a), EdgeClass.LINK))
            src = v(m - 1, 2 * (m - 1) + 4 * j0 + d)
            if l % 2 == 0:
                dst = v(0, l + b * j0 + d * a)
            else:
                dst = v(0, l - b * j0 - d * a)
            outside.append((src, dst, EdgeClass.JUMP))
    return FactorGraph.build(m, n, outside, label)


def build_mobius_or_prism(m: int, kind: str) -> FactorGraph:
    """The order-4m Mobius ladder or prism with its 2-factor of m quadrilaterals.

    The wiring is the n = 4 instance of the X_b link pattern with a = 1; the
    wrap-around parity decides between the two graphs (the prism is bipartite).
    """
    if m < 3:
        raise ValueError("m must be at least 3")
    kind = kind.lower()
    if kind not in ("mobius", "prism"):
        raise ValueError(f"kind must be 'mobius' or 'prism', got {kind!r}")
    # l even gives a bipartite graph exactly when m is even
    bipartite_l = 2 if m % 2 == 0 else 3
    l = bipartite_l if kind == "prism" else 5 - bipartite_l  # noqa: E741
    return _xb_graph(m, 4, 1, 0, l, f"{kind}:{m}")


def build_xb1(m: int) -> FactorGraph:
    """The n = 8 family with (a, b) = (4, 1)."""
    if m < 3 or m % 3:
        raise ValueError("m must be divisible by 3 (and at least 3)")
    n = 8

    def v(i: int, j: int) -> int:
        return (i % m) * n + j % n

    outside = []
    for d in (0, 1):
        for i in range(m - 1):
            outside.append((v(i, 2 * i + d), v(i + 1, 2 * i + 4 * d), EdgeClass.LINK))
            outside.append((v(i, 2 * i + 4 + d), v(i + 1, 2 * i + 1 + 4 * d), EdgeClass.LINK))
        outside.append((v(m - 1, 2 * (m - 1) + d), v(0, 6 + 4 * d), EdgeClass.JUMP))
        outside.append((v(m - 1, 2 * (m - 1) + 4 + d), v(0, 7 + 4 * d), EdgeClass.JUMP))
    return FactorGraph.build(m, n, outside, f"xb1:{m}")


def build_xb2(m: int) -> FactorGraph:
    """The n = 8 family with (a, b) = (1, 5)."""
    if m < 3 or m % 3:
        raise ValueError("m must be divisible by 3 (and at least 3)")
    n = 8

    def v(i: int, j: int) -> int:
        return (i % m) * n + j % n

    outside = []
    for d in (0, 1):
        for i in range(m - 1):
            outside.append((v(i, 2 * i + d), v(i + 1, 2 * i + d), EdgeClass.LINK))
            outside.append((v(i, 2 * i + 4 + d), v(i + 1, 2 * i + 5 - d), EdgeClass.LINK))
        outside.append((v(m - 1, 2 * (m - 1) + d), v(0, 6 + d), EdgeClass.JUMP))
        outside.append((v(m - 1, 2 * (m - 1) + 4 + d), v(0, 3 - d), EdgeClass.JUMP))
    return FactorGraph.build(m, n, outside, f"xb2:{m}")


def build_htg(m: int, n: int, l: int) -> FactorGraph:  # noqa: E741
    """Honeycomb toroidal graph HTG(m, n, l).

    Columns ``(i, *)`` are n-cycles; ``(i, j) ~ (i+1, j)`` for ``i <= m-2`` when
    ``i + j`` is even, and ``(m-1, j) ~ (0, j + l)`` when ``m - 1 + j`` is even.
    """
    if m < 2 or n < 4 or n % 2:
        raise ValueError("need m >= 2 and an even n >= 4")
    if (m - l) % 2:
        raise ValueError("m and l must have the same parity")

    def v(i: int, j: int) -> int:
        return (i % m) * n + j % n

    outside = []
    for j in range(n):
        for i in range(m - 1):
            if (i + j) % 2 == 0:
                outside.append((v(i, j), v(i + 1, j), EdgeClass.LINK))
        if (m - 1 + j) % 2 == 0:
            outside.append((v(m - 1, j), v(0, j + l), EdgeClass.JUMP))
    return FactorGraph.build(m, n, outside, f"htg:{m},{n},{l % n}")


# -- classification ---------------------------------------------------------


class Case(str, Enum):
    N4_MOBIUS_OR_PRISM = "N4_MobiusOrPrism"
    N8_XB1 = "N8_Xb1"
    N8_XB2 = "N8_Xb2"
    N8_B4 = "N8_b4"
    ODD_ODD = "OddOdd"
    ODD_EVEN = "OddEven"
    EVEN_EVEN = "EvenEven"
    INVALID = "Invalid"


@dataclass(frozen=True)
class TheoremCase:
    case: Case
    detail: str

    @property
    def admits_vt(self) -> bool:
        return self.case is not Case.INVALID


def _general_case(m: int, n: int, a: int, b: int, l: int) -> TheoremCase:  # noqa: E741
    n0 = n // 4
    if m % 2 and l % 2:
        if b != (n - 4) % n:
            return TheoremCase(Case.INVALID, "m, l odd: requires b = n - 4")
        if a != (2 * l - 1) % n:
            return TheoremCase(Case.INVALID, "m, l odd: requires a = 2l - 1")
        return TheoremCase(Case.ODD_ODD, "m and l odd, b = n-4, a = 2l-1")
    if m % 2:
        if a != 1 or b != 4:
            return TheoremCase(Case.INVALID, "m odd, l even: requires a = 1 and b = 4")
        if n0 % 2 == 0 or n0 < 3:
            return TheoremCase(Case.INVALID, "m odd, l even: requires n/4 odd and >= 3")
        if (l - (2 * n0 + 2 * m - 2)) % n:
            return TheoremCase(Case.INVALID, "m odd, l even: requires l = n/2 + 2m - 2")
        return TheoremCase(Case.ODD_EVEN, "m odd, l even, a = 1, b = 4, l = n/2 + 2m - 2")
    if l % 2:
        return TheoremCase(Case.INVALID, "m even with l odd admits no alpha")
    b0 = b // 4
    if ((l + 2) * (b0 - 1)) % n:
        return TheoremCase(Case.INVALID, "m, l even: requires (l+2)(b0-1) = 0")
    if (2 * (l + 2) - 2 * m * (b0 + 1)) % n:
        return TheoremCase(Case.INVALID, "m, l even: requires 2(l+2) = 2m(b0+1)")
    return TheoremCase(Case.EVEN_EVEN, "m, l even, (l+2)(b0-1) = 0, 2(l+2) = 2m(b0+1)")


def classify_theorem_case(m: int, n: int, a: int, b: int, l: int) -> TheoremCase:  # noqa: E741
    """Which vertex-transitive family, if any, the tuple belongs to (Case.INVALID with a reason otherwise)."""
    if n <= 0 or n % 4:
        return TheoremCase(Case.INVALID, "n must be a positive multiple of 4")
    if m < 3:
        return TheoremCase(Case.INVALID, "m must be at least 3")
    a, b, l = a % n, b % n, l % n  # noqa: E741
    if n == 4:
        if a != 1:
            return TheoremCase(Case.INVALID, "n = 4 forces a = 1")
        if l % 4 not in (2, 3):
            return TheoremCase(Case.INVALID, "l must be 2 or 3 mod 4")
        bipartite = (l % 2 == 0) == (m % 2 == 0)
        kind = "prism" if bipartite else "mobius"
        return TheoremCase(Case.N4_MOBIUS_OR_PRISM, f"n = 4: {kind} of order {4 * m}")
    if n == 8 and (a, b) in ((4, 1), (1, 5)):
        if l != 6:
            return TheoremCase(Case.INVALID, "n = 8 with (a,b) in {(4,1),(1,5)} forces l = 6")
        if m % 3:
            return TheoremCase(Case.INVALID, "m must be divisible by 3")
        if (a, b) == (4, 1):
            return TheoremCase(Case.N8_XB1, "n = 8, 3 | m, X_b^1(m)")
        return TheoremCase(Case.N8_XB2, "n = 8, 3 | m, X_b^2(m)")
    problems = validate_xb(XbParams(m, n, a, b, l))
    if problems:
        return TheoremCase(Case.INVALID, "construction: " + "; ".join(problems))
    if n == 8:
        if m % 2 and a == 5 and l in (3, 7):
            return TheoremCase(Case.N8_B4, "n = 8, m odd, a = 5, l in {3,7}")
        if m % 2 == 0 and a in (1, 5) and l in (2, 6):
            return TheoremCase(Case.N8_B4, "n = 8, m even, a in {1,5}, l in {2,6}")
        return TheoremCase(Case.INVALID, "n = 8: (m, a, l) fits neither b = 4 pattern")
    return _general_case(m, n, a, b, l)


def general_case_formula(m: int, n: int, a: int, b: int, l: int) -> TheoremCase:  # noqa: E741
    """The n >= 12 conditions evaluated for any n (used to compare against the n = 8 rules)."""
    return _general_case(m, n, a % n, b % n, l % n)
