"""Invariant-based property tests over randomly drawn valid parameter tuples."""

import numpy as np
from hypothesis import given, settings
from hypothesis import strategies as st

from xbgraphs.analysis import cayley_certificate, is_closed_cycle, quotient_graph, ten_cycle_walk
from xbgraphs.aut_search import are_isomorphic, full_aut
from xbgraphs.automorphisms import (
    alpha_condition,
    alpha_of,
    beta_of,
    commutes_with_outside,
    gamma_condition,
    gamma_of,
    is_automorphism,
)
from xbgraphs.constructions import build_xb, classify_theorem_case, enumerate_xb_params
from xbgraphs.graph_core import decode_graph6, export, girth, import_json
from xbgraphs.perm import Perm
from xbgraphs.perm_group import close

WIDE = enumerate_xb_params(range(3, 10), [8, 12, 16, 20, 24, 28])
THEOREM = [p for p in WIDE if classify_theorem_case(*p.as_tuple()).admits_vt]
SMALL = [p for p in WIDE if p.m * p.n <= 96]

valid = st.sampled_from(WIDE)
theorem = st.sampled_from(THEOREM)


@given(valid)
def test_factor_graph_invariants(p):
    g = build_xb(p)
    assert g.order == p.m * p.n and len(g.edges) == 3 * g.order // 2
    out = g.outside
    for v in range(g.order):
        assert len(g.adj[v]) == 3
        assert out[out[v]] == v and g.ring_of(out[v]) != g.ring_of(v)
    q = quotient_graph(g)
    assert all(q[i] == {(i - 1) % p.m, (i + 1) % p.m} for i in range(p.m))


@given(valid)
def test_girth_bound_and_ten_cycle(p):
    g = build_xb(p)
    assert girth(g) <= 10
    if p.a != 1:
        assert is_closed_cycle(g, ten_cycle_walk(g, p.a))


@given(valid)
def test_export_roundtrips(p):
    g = build_xb(p)
    assert import_json(export(g, "json")) == g
    order, edges = decode_graph6(export(g, "graph6"))
    assert order == g.order and sorted(edges) == list(g.edges)


@given(valid)
def test_gamma_alpha_conditions(p):
    g = build_xb(p)
    assert is_automorphism(g, gamma_of(p)) == gamma_condition(p)
    if not (p.l % 2 and p.m % 2 == 0):
        al = alpha_of(p)
        assert is_automorphism(g, al) == alpha_condition(p)
        if alpha_condition(p):
            assert (al * al).is_identity()


@given(theorem)
def test_theorem_case_generators(p):
    g = build_xb(p)
    gens = [gamma_of(p), alpha_of(p)] + ([beta_of(p)] if p.l % 2 == 0 else [])
    for s in gens:
        assert is_automorphism(g, s)
        assert commutes_with_outside(g, s)
    G = close(gens)
    assert G.order == g.order
    cert = cayley_certificate(g, G)
    assert len(cert.connection) == 3 and cert.all_involutions


@settings(max_examples=15)
@given(st.sampled_from(SMALL), st.integers(0, 2**32 - 1))
def test_full_aut_conjugation_consistency(p, seed):
    g = build_xb(p)
    A = full_aut(g)
    pi = np.random.default_rng(seed).permutation(g.order)
    inv = np.argsort(pi)
    adj = [sorted(int(pi[w]) for w in g.adj[int(inv[v])]) for v in range(g.order)]
    B = full_aut(adj)
    assert B.order == A.order
    for row in B.elements[:: max(1, B.order // 10)]:
        back = Perm(inv[row[pi]])  # pi^-1 o b o pi
        assert back in A
    f = are_isomorphic(g, adj)
    assert f is not None
    assert all(int(f(w)) in adj[int(f(v))] for v, w in g.edges)
