"""Per-tuple check battery and the parameter-space survey built on it."""

from __future__ import annotations

import json
from dataclasses import asdict, dataclass, field
from typing import Iterable, Iterator

import numpy as np

from .analysis import CayleyError, cayley_certificate, edge_orbit_report
from .aut_search import LimitExceeded, full_aut
from .automorphisms import (
    alpha_of,
    beta_of,
    commutes_with_outside,
    gamma_of,
    is_automorphism,
    n8_exceptional_gens,
)
from .constructions import (
    Case,
    XbParams,
    build_htg,
    build_mobius_or_prism,
    build_xb,
    build_xb1,
    build_xb2,
    classify_theorem_case,
    enumerate_xb_params,
    validate_xb,
)
from .graph_core import FactorGraph, girth
from .perm import Perm
from .perm_group import (
    BoundExceeded,
    PermGroup,
    close,
    is_regular,
    is_transitive,
    partition_preserving_subgroup,
    point_stabilizer_order,
)

__all__ = [
    "FAMILIES",
    "build_family",
    "formula_generators",
    "VerificationReport",
    "verify",
    "SurveySpec",
    "survey_record",
    "run_survey",
]

FAMILIES = ("xb", "xb1", "xb2", "htg", "mobius", "prism")


def build_family(family: str, params: tuple[int, ...]) -> FactorGraph:
    """Build a graph from a family name and its integer parameters; ValueError on bad input."""
    need = {"xb": 5, "xb1": 1, "xb2": 1, "htg": 3, "mobius": 1, "prism": 1}
    if family not in need:
        raise ValueError(f"unknown family {family!r}; choose from {', '.join(FAMILIES)}")
    if len(params) != need[family]:
        raise ValueError(f"{family} takes {need[family]} parameter(s), got {len(params)}")
    if family == "xb":
        return build_xb(XbParams(*params))
    if family == "xb1":
        return build_xb1(params[0])
    if family == "xb2":
        return build_xb2(params[0])
    if family == "htg":
        return build_htg(*params)
    return build_mobius_or_prism(params[0], family)


def formula_generators(p: XbParams) -> dict[str, tuple[Perm, bool]]:
    """gamma, alpha and (l even) beta for a valid tuple, each with its certification verdict."""
    g = build_xb(p)
    out = {"gamma": gamma_of(p)}
    if not (p.l % 2 and p.m % 2 == 0):
        out["alpha"] = alpha_of(p)
    if p.l % 2 == 0:
        out["beta"] = beta_of(p)
    return {k: (v, is_automorphism(g, v)) for k, v in out.items()}


def _case_of(family: str, params: tuple[int, ...]):
    if family == "xb":
        return classify_theorem_case(*params)
    if family in ("xb1", "xb2"):
        a, b = (4, 1) if family == "xb1" else (1, 5)
        return classify_theorem_case(params[0], 8, a, b, 6)
    if family in ("mobius", "prism"):
        m = params[0]
        parity = 0 if family == "prism" else 1
        return classify_theorem_case(m, 4, 1, 0, 2 + ((m + parity) % 2))
    return None


def _relabel_check(g: FactorGraph, order: int, seed: int, limit: int | None) -> bool:
    """|Aut| is unchanged under a random relabeling of the vertices."""
    rng = np.random.default_rng(seed)
    pi = rng.permutation(g.order)
    inv = np.argsort(pi)
    adj = [sorted(int(pi[w]) for w in g.adj[int(inv[v])]) for v in range(g.order)]
    return full_aut(adj, limit=limit).order == order


@dataclass
class VerificationReport:
    family: str
    params: list[int]
    order: int
    theorem_case: str | None = None
    case_detail: str | None = None
    girth: int | None = None
    generators: dict[str, bool] = field(default_factory=dict)
    generators_commute_with_outside: bool | None = None
    group_order: int | None = None
    group_transitive: bool | None = None
    group_regular: bool | None = None
    cayley_involutions: int | None = None
    aut_order: int | None = None
    stabilizer_order: int | None = None
    c_invariant: bool | None = None
    c_subgroup_transitive: bool | None = None
    relabel_consistent: bool | None = None
    edge_orbits: list[dict] = field(default_factory=list)
    findings: list[str] = field(default_factory=list)
    error: str | None = None

    def to_json(self) -> str:
        return json.dumps(asdict(self), sort_keys=False)


def _expected_oracle(family: str, rep: VerificationReport) -> list[str]:
    """Claims about the full automorphism group that the classification makes for this input."""
    out = []
    case = rep.theorem_case
    if family == "xb" and case is not None:
        vt = case != Case.INVALID.value
        if rep.c_subgroup_transitive != vt:
            out.append(f"C-preserving subgroup transitive={rep.c_subgroup_transitive} but case {case}")
        if case == Case.ODD_EVEN.value:
            m, n = rep.params[0], rep.params[1]
            want = 2 if n == 4 * m else 1
            if rep.stabilizer_order != want or rep.c_invariant != (want == 1):
                out.append(
                    f"odd m, even l: stabilizer {rep.stabilizer_order}, C invariant {rep.c_invariant}"
                )
    if family == "xb1" and (rep.stabilizer_order != 2 or rep.c_invariant):
        out.append(f"X_b^1: stabilizer {rep.stabilizer_order}, C invariant {rep.c_invariant}")
    if family == "xb2" and (rep.stabilizer_order != 1 or not rep.c_invariant):
        out.append(f"X_b^2: stabilizer {rep.stabilizer_order}, C invariant {rep.c_invariant}")
    return out


def verify(
    family: str,
    params: tuple[int, ...],
    oracle: bool = False,
    seed: int = 0,
    limit: int | None = None,
    orbits: bool = False,
) -> VerificationReport:
    """Run the check battery on one graph; contradictions land in ``findings``.

    ValueError propagates for bad parameters, LimitExceeded for oversized oracle runs.
    """
    g = build_family(family, params)
    rep = VerificationReport(family, list(params), g.order, girth=girth(g))
    tc = _case_of(family, tuple(params))
    if tc is not None:
        rep.theorem_case, rep.case_detail = tc.case.value, tc.detail

    gens: list[Perm] = []
    if family == "xb":
        for name, (perm, ok) in formula_generators(XbParams(*params)).items():
            rep.generators[name] = ok
            if ok:
                gens.append(perm)
    elif family in ("xb1", "xb2"):
        gens = n8_exceptional_gens(family, params[0])
        rep.generators = {p.label: True for p in gens}
    if gens:
        rep.generators_commute_with_outside = all(commutes_with_outside(g, p) for p in gens)
        G = close(gens)
        rep.group_order = G.order
        rep.group_transitive = is_transitive(G)
        rep.group_regular = is_regular(G)
        if rep.group_regular:
            try:
                cert = cayley_certificate(g, G)
                rep.cayley_involutions = sum(1 for s in cert.connection if (s * s).is_identity())
            except CayleyError as exc:
                rep.findings.append(f"Cayley certificate: {exc}")
        if tc is not None and family == "xb" and rep.group_transitive != tc.admits_vt:
            rep.findings.append(f"formula group transitive={rep.group_transitive} but case {tc.case.value}")
    elif tc is not None and tc.admits_vt and family == "xb":
        rep.findings.append(f"case {tc.case.value} but no formula generator certifies")
    if rep.group_regular and rep.cayley_involutions is not None and rep.cayley_involutions != 3:
        rep.findings.append(f"only {rep.cayley_involutions} connection elements are involutions")
    if rep.generators_commute_with_outside is False:
        rep.findings.append("a certified generator does not commute with the outside-neighbor map")

    if oracle:
        A = full_aut(g, limit=limit)
        C = partition_preserving_subgroup(A, g.rings)
        rep.aut_order = A.order
        rep.stabilizer_order = point_stabilizer_order(A, 0)
        rep.c_invariant = C.order == A.order
        rep.c_subgroup_transitive = is_transitive(C)
        rep.relabel_consistent = _relabel_check(g, A.order, seed, limit)
        if not rep.relabel_consistent:
            rep.findings.append("oracle order changed under relabeling")
        if gens and any(p not in A for p in gens):
            rep.findings.append("a certified generator is missing from the oracle group")
        rep.findings.extend(_expected_oracle(family, rep))
        if orbits:
            rep.edge_orbits = [o.to_dict() for o in edge_orbit_report(g, A)]
    return rep


# -- survey -----------------------------------------------------------------


@dataclass
class SurveySpec:
    ms: list[int]
    ns: list[int]
    cases: list[str] | None = None
    oracle: bool = True
    oracle_max_order: int = 200
    budget: int = 100_000
    workers: int = 1

    def __post_init__(self) -> None:
        bad = [n for n in self.ns if n % 4]
        if bad:
            raise ValueError(f"n values must be multiples of 4: {bad}")
        if self.cases is not None:
            known = {c.value for c in Case}
            unknown = sorted(set(self.cases) - known)
            if unknown:
                raise ValueError(f"unknown cases {unknown}; choose from {sorted(known)}")

    def tuples(self) -> list[XbParams]:
        ps = enumerate_xb_params(sorted(set(self.ms)), sorted(set(self.ns)))
        if self.cases is not None:
            ps = [p for p in ps if classify_theorem_case(*p.as_tuple()).case.value in self.cases]
        if len(ps) > self.budget:
            raise ValueError(f"{len(ps)} tuples exceed the budget {self.budget}")
        return ps


def survey_record(p: XbParams, oracle: bool, oracle_max_order: int) -> dict:
    """One JSON-lines record; errors are captured in the record."""
    tc = classify_theorem_case(*p.as_tuple())
    rec: dict = {
        "m": p.m, "n": p.n, "a": p.a, "b": p.b, "l": p.l,
        "case": tc.case.value,
        "gamma": None, "alpha": None, "beta": None,
        "formula_transitive": None,
        "oracle": None,
        "agree": None,
        "error": None,
    }
    try:
        if validate_xb(p):
            raise ValueError("; ".join(validate_xb(p)))
        gens = formula_generators(p)
        for name, (_, ok) in gens.items():
            rec[name] = ok
        good = [perm for perm, ok in gens.values() if ok]
        rec["formula_transitive"] = bool(good) and is_transitive(close(good))
        agree = rec["formula_transitive"] == tc.admits_vt
        if oracle and p.m * p.n <= oracle_max_order:
            g = build_xb(p)
            A = full_aut(g)
            C = partition_preserving_subgroup(A, g.rings)
            rec["oracle"] = {
                "aut_order": A.order,
                "stabilizer_order": point_stabilizer_order(A, 0),
                "c_invariant": C.order == A.order,
                "c_transitive": is_transitive(C),
            }
            agree = agree and rec["oracle"]["c_transitive"] == tc.admits_vt
        rec["agree"] = agree
    except (ValueError, LimitExceeded, BoundExceeded, RuntimeError) as exc:
        rec["error"] = f"{type(exc).__name__}: {exc}"
    return rec


def _record_args(args: tuple[XbParams, bool, int]) -> dict:
    return survey_record(*args)


def run_survey(spec: SurveySpec) -> Iterator[dict]:
    """Records in lexicographic (m, n, a, b, l) order, whatever the worker count."""
    jobs: Iterable = [(p, spec.oracle, spec.oracle_max_order) for p in spec.tuples()]
    if spec.workers <= 1:
        yield from map(_record_args, jobs)
        return
    from concurrent.futures import ProcessPoolExecutor

    with ProcessPoolExecutor(max_workers=spec.workers) as pool:
        # Executor.map yields results in submission order
        yield from pool.map(_record_args, jobs, chunksize=4)
