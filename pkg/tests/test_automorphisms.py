import json

import numpy as np
import pytest

from conftest import xb
from xbgraphs.automorphisms import (
    TranscriptionError,
    alpha_condition,
    alpha_of,
    beta_of,
    commutes_with_outside,
    extend_from_ring,
    first_violation,
    gamma_condition,
    gamma_of,
    is_automorphism,
    n8_exceptional_gens,
    rho_of,
)
from xbgraphs.constructions import XbParams, build_xb, build_xb1, build_xb2, classify_theorem_case
from xbgraphs.graph_core import EdgeClass
from xbgraphs.perm import Perm

P = XbParams(5, 12, 1, 8, 7)


def test_gamma_examples():
    g = build_xb(P)
    gm = gamma_of(P)
    assert gm(g.v(0, 0)) == g.v(1, 2)
    assert gm(g.v(4, 6)) == g.v(0, 7)
    assert is_automorphism(g, gm)


def test_gamma_on_3_12_1_4_2_is_automorphism():
    p = XbParams(3, 12, 1, 4, 2)
    assert gamma_condition(p)
    assert is_automorphism(build_xb(p), gamma_of(p))
    assert not is_automorphism(build_xb(p), alpha_of(p))


def test_gamma_failure_reports_a_jump():
    p = XbParams(3, 12, 1, 4, 3)
    g = build_xb(p)
    bad = first_violation(g, gamma_of(p))
    assert bad is not None
    assert g.edge_class[bad] is EdgeClass.JUMP
    assert first_violation(g, Perm.identity(g.order)) is None


def test_alpha_basic_and_example():
    g = build_xb(P)
    al = alpha_of(P)
    assert al(g.v(0, 0)) == g.v(1, 0)
    assert (al * al).is_identity()
    for j in range(12):
        assert al(g.v(3, 6 + j)) == g.v(3, 9 - j)
    assert is_automorphism(g, al)


def test_alpha_even_even():
    p = XbParams(4, 8, 1, 4, 6)
    assert alpha_condition(p)
    assert is_automorphism(build_xb(p), alpha_of(p))


def test_alpha_rejects_l_odd_m_even():
    with pytest.raises(ValueError):
        alpha_of(XbParams(4, 8, 5, 4, 3))


def test_beta_examples():
    p = XbParams(3, 12, 1, 4, 10)
    g = build_xb(p)
    be = beta_of(p)
    assert be(g.v(0, 0)) == g.v(0, 1)
    assert all(be(g.v(i, j)) == g.v(i, 1 - j) for i in range(3) for j in range(12))
    assert is_automorphism(g, be)
    q = XbParams(4, 8, 1, 4, 6)
    h = build_xb(q)
    bq = beta_of(q)
    assert bq(h.v(2, 0)) == h.v(2, 1)
    assert all(h.ring_of(bq(v)) == h.ring_of(v) for v in range(h.order))
    with pytest.raises(ValueError):
        beta_of(P)


def test_rho():
    g = build_xb(P)
    rho = rho_of(g, alpha_of(P), gamma_of(P))
    assert rho(g.v(0, 0)) == g.v(0, 2)
    r = rho ** (P.n // 2)
    assert all(r(g.v(0, j)) == g.v(0, j) for j in range(P.n))
    assert (rho * rho)(g.v(1, 0)) == g.v(1, 8)


def test_rho_detects_bad_alpha():
    g = build_xb(P)
    with pytest.raises(TranscriptionError):
        rho_of(g, Perm.identity(g.order), gamma_of(P))


def test_invalid_params_rejected():
    with pytest.raises(ValueError):
        gamma_of(XbParams(3, 12, 2, 4, 2))


def test_generator_conditions_are_exact(survey_tuples):
    mismatches = []
    for p in survey_tuples:
        g = build_xb(p)
        if is_automorphism(g, gamma_of(p)) != gamma_condition(p):
            mismatches.append(("gamma", p))
        if p.l % 2 and p.m % 2 == 0:
            continue
        if is_automorphism(g, alpha_of(p)) != alpha_condition(p):
            mismatches.append(("alpha", p))
    assert mismatches == []


def test_alpha_involution_when_admissible(survey_tuples):
    for p in survey_tuples:
        if not alpha_condition(p):
            continue
        al = alpha_of(p)
        assert (al * al).is_identity()


def test_certified_generators_commute_with_outside(survey_tuples):
    for p in survey_tuples:
        if not classify_theorem_case(*p.as_tuple()).admits_vt:
            continue
        g = build_xb(p)
        gens = [gamma_of(p), alpha_of(p)] + ([beta_of(p)] if p.l % 2 == 0 else [])
        for s in gens:
            assert is_automorphism(g, s), (p, s.label)
            assert commutes_with_outside(g, s)


@pytest.mark.parametrize("kind", ["xb1", "xb2"])
@pytest.mark.parametrize("m", [3, 6, 9])
def test_n8_generators(kind, m):
    g = build_xb1(m) if kind == "xb1" else build_xb2(m)
    gens = n8_exceptional_gens(kind, m)
    assert [p.label for p in gens] == ["gamma", "phi0", "phi1", "alpha"]
    for p in gens:
        assert is_automorphism(g, p)
        assert commutes_with_outside(g, p)
    alpha = gens[3]
    assert (alpha * alpha).is_identity()


def test_n8_alpha_examples():
    g = build_xb1(3)
    al = n8_exceptional_gens("xb1", 3)[3]
    for j in range(8):
        assert al(g.v(1, j)) == g.v(0, j)
        assert al(g.v(2, j)) == g.v(2, -1 - j)
    h = build_xb2(3)
    al2 = n8_exceptional_gens("Xb2", 3)[3]
    assert all(al2(h.v(2, j)) == h.v(2, 3 - j) for j in range(8))


def test_phi0_shape():
    g = build_xb1(3)
    phi0 = n8_exceptional_gens("xb1", 3)[1]
    assert all(phi0(g.v(0, j)) == g.v(0, j + 4) for j in range(8))
    ring1 = [phi0(g.v(1, j)) - 8 for j in range(8)]
    s = (ring1[1] - ring1[0]) % 8
    assert s == 7  # reflection j -> c - j
    assert all((ring1[j] + j) % 8 == ring1[0] for j in range(8))


def test_n8_bad_inputs():
    with pytest.raises(ValueError):
        n8_exceptional_gens("xb3", 3)
    with pytest.raises(ValueError):
        n8_exceptional_gens("xb1", 4)


def test_extend_from_ring_rejects_incompatible_map():
    g = xb(5, 12, 1, 8, 7)
    with pytest.raises(TranscriptionError):
        extend_from_ring(g, [(j + 1) % 12 for j in range(12)], "shift1")


def test_perm_json_roundtrip():
    al = alpha_of(P)
    back = Perm.from_json(al.to_json())
    assert back == al and back.label == "alpha"
    assert json.loads(al.to_json())["label"] == "alpha"


def test_perm_rejects_non_bijection():
    with pytest.raises(ValueError):
        Perm(np.array([0, 0, 1]))
