import json

import numpy as np
import pytest

from xbgraphs.perm import Perm
from xbgraphs.perm_group import (
    BoundExceeded,
    close,
    is_regular,
    is_s_arc_regular,
    is_transitive,
    orbits,
    partition_preserving_subgroup,
    point_stabilizer_order,
    preserves_partition,
    s_arcs,
    setwise_stabilizer_order,
)


def cyc(n, shift=1):
    return Perm(np.roll(np.arange(n), -shift))


def refl(n):
    return Perm((-np.arange(n)) % n)


def test_cyclic_and_dihedral_orders():
    assert close([cyc(7)]).order == 7
    D = close([cyc(6), refl(6)])
    assert D.order == 12
    assert is_transitive(D) and not is_regular(D)
    assert point_stabilizer_order(D, 0) == 2
    assert is_regular(close([cyc(6)]))


def test_symmetric_group():
    swap = Perm(np.array([1, 0, 2, 3, 4]))
    S5 = close([swap, cyc(5)])
    assert S5.order == 120
    assert setwise_stabilizer_order(S5, [0, 1]) == 2 * 6


def test_membership_and_elements():
    D = close([cyc(5), refl(5)])
    assert refl(5) * cyc(5) in D
    assert Perm(np.array([1, 0, 2, 3, 4])) not in D
    assert all(p in D for p in D)
    assert D.element(0).is_identity()


def test_bound():
    with pytest.raises(BoundExceeded):
        close([Perm(np.array([1, 0, 2, 3, 4, 5])), cyc(6)], bound=100)


def test_close_needs_degree():
    with pytest.raises(ValueError):
        close([])
    assert close([], degree=4).order == 1


def test_orbits_and_partitions():
    p = Perm(np.array([1, 0, 3, 4, 2, 5]))
    G = close([p])
    assert orbits(G) == [[0, 1], [2, 3, 4], [5]]
    assert preserves_partition(G, [[0, 1], [2, 3, 4], [5]])
    assert not preserves_partition(G, [[0, 2], [1, 3], [4, 5]])
    D = close([cyc(6), refl(6)])
    blocks = [[0, 3], [1, 4], [2, 5]]
    assert preserves_partition(D, blocks)
    H = partition_preserving_subgroup(D, [[0, 2, 4], [1, 3, 5]])
    assert H.order == 12
    K = partition_preserving_subgroup(D, [[0, 1], [2, 3], [4, 5]])
    assert K.order == 6


def test_s_arcs_of_triangle():
    adj = [[1, 2], [0, 2], [0, 1]]
    assert len(s_arcs(adj, 0)) == 3
    assert len(s_arcs(adj, 1)) == 6
    assert len(s_arcs(adj, 2)) == 6
    S3 = close([Perm(np.array([1, 2, 0])), Perm(np.array([1, 0, 2]))])
    assert is_s_arc_regular(adj, S3, 1)
    assert not is_s_arc_regular(adj, close([Perm(np.array([1, 2, 0]))]), 1)


def test_json():
    obj = json.loads(close([cyc(4)]).to_json())
    assert obj["order"] == 4 and obj["orbit_sizes"] == [4] and obj["point_stabilizer_order"] == 1
