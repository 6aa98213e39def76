# -*- encoding: utf-8 -*-
#
# The MIT License (MIT)
#
# Copyright (c) 2026 The ecc-spectra authors
#
# Permission is hereby granted, free of charge, to any person obtaining a copy
# of this software and associated documentation files (the "Software"), to deal
# in the Software without restriction, including without limitation the rights
# to use, copy, modify, merge, publish, distribute, sublicense, and/or sell
# copies of the Software, and to permit persons to whom the Software is
# furnished to do so, subject to the following conditions:
#
# The above copyright notice and this permission notice shall be included in
# all copies or substantial portions of the Software.
#
# THE SOFTWARE IS PROVIDED "AS IS", WITHOUT WARRANTY OF ANY KIND, EXPRESS OR
# IMPLIED, INCLUDING BUT NOT LIMITED TO THE WARRANTIES OF MERCHANTABILITY,
# FITNESS FOR A PARTICULAR PURPOSE AND NONINFRINGEMENT. IN NO EVENT SHALL THE
# AUTHORS OR COPYRIGHT HOLDERS BE LIABLE FOR ANY CLAIM, DAMAGES OR OTHER
# LIABILITY, WHETHER IN AN ACTION OF CONTRACT, TORT OR OTHERWISE, ARISING FROM,
# OUT OF OR IN CONNECTION WITH THE SOFTWARE OR THE USE OR OTHER DEALINGS IN
# THE SOFTWARE.
#

"""Tests for graph construction, distances and eccentricities."""

import networkx as nx
import numpy as np
import pytest

from scipy.sparse.csgraph import floyd_warshall

from eccspectra.analysis import CographAnalysis
from eccspectra.error import DisconnectedGraph, EccError, UsageError
from eccspectra.graph import Cograph, Distances, GeneratingSequence, \
    SimpleGraph

def build(*alphas):
    return Cograph.build(GeneratingSequence(alphas))

def random_graph(rng, n, p=0.4):
    upper = np.triu(rng.random((n, n)) < p, 1)
    return SimpleGraph(upper | upper.T)
#end function

def test_parse_sequence():
    seq = GeneratingSequence.parse(" 1, 2,1 ,2 ")
    assert seq.alphas == (1, 2, 1, 2)
    assert seq.n == 6
    assert seq.k == 2
    assert seq.odd_sum == 2
    assert seq.even_sum == 4
    assert seq.in_main_scope
    assert str(seq) == "C(1,2,1,2)"
#end function

@pytest.mark.parametrize("text", ["", "1,,2", "1,a", "0,1", "1,-2"])
def test_parse_rejects_malformed_sequences(text):
    with pytest.raises(UsageError):
        GeneratingSequence.parse(text)

def test_sequence_rejects_non_integers():
    with pytest.raises(EccError):
        GeneratingSequence((1, 2.5))

@pytest.mark.parametrize("alphas,k,in_scope", [
    ((1,), None, False),
    ((1, 2), 1, False),
    ((1, 2, 1), None, False),
    ((1, 1, 1, 1), 2, False),
    ((1, 1, 1, 2), 2, True),
    ((3, 2, 1, 2), 2, True),
])
def test_scope_predicate(alphas, k, in_scope):
    seq = GeneratingSequence(alphas)
    assert seq.k == k
    assert seq.in_main_scope == in_scope
#end function

def test_part_ranges_are_contiguous():
    seq = GeneratingSequence((3, 2, 1, 2))
    assert seq.part_ranges() == [range(0, 3), range(3, 5), range(5, 6),
                                 range(6, 8)]

def test_k2():
    g = build(1, 1)
    assert g.n == 2
    assert g.adjacency.tolist() == [[False, True], [True, False]]
    assert g.part_labels == (0, 1)
#end function

def test_part_labels_follow_the_parts():
    g = build(3, 2, 1, 2)
    assert g.part_labels == (0, 0, 0, 1, 1, 2, 3, 3)
    assert g.parts() == [[0, 1, 2], [3, 4], [5], [6, 7]]
#end function

def test_last_part_is_independent_and_universal():
    g   = build(3, 2, 1, 2)
    adj = g.adjacency

    assert g.n == 8
    assert not adj[6, 7]
    for v in (6, 7):
        assert adj[v, :6].all()
#end function

def join_of_clique_and_coclique(a1, a2):
    """K_{a1} joined to a2 K_1, assembled edge by edge."""
    n   = a1 + a2
    adj = np.zeros((n, n), dtype=bool)

    adj[:a1, :] = True
    adj[:, :a1] = True
    np.fill_diagonal(adj, False)

    return SimpleGraph(adj, [0] * a1 + [1] * a2)
#end function

@pytest.mark.parametrize("a1", range(1, 7))
@pytest.mark.parametrize("a2", range(1, 7))
def test_two_parts_give_clique_joined_to_coclique(a1, a2):
    assert build(a1, a2) == join_of_clique_and_coclique(a1, a2)

def test_representations_of_the_antiregular_graph_agree():
    one = CographAnalysis((1, 1, 1, 1, 1)).ecc_spectrum.values
    two = CographAnalysis((1, 2, 1, 1)).ecc_spectrum.values
    assert np.allclose(one, two, atol=1e-9)
#end function

def test_complement_of_k2_is_empty():
    assert SimpleGraph.complete(2).complement() == SimpleGraph.empty(2)

def test_complement_is_an_involution():
    rng = np.random.default_rng(7)
    for _ in range(50):
        g = random_graph(rng, int(rng.integers(1, 13)))
        assert g.complement().complement() == g
    #end for
#end function

def test_complement_of_union_joins_the_parts():
    g = SimpleGraph.complete(3).disjoint_union(SimpleGraph.complete(2))
    h = g.complement()

    assert h.adjacency[:3, 3:].all()
    assert not h.adjacency[:3, :3].any()
    assert not h.adjacency[3:, 3:].any()
    assert h.part_labels == (0, 0, 0, 1, 1)
#end function

def test_disjoint_union_counts():
    rng = np.random.default_rng(11)
    for _ in range(20):
        a = random_graph(rng, int(rng.integers(1, 8)))
        b = random_graph(rng, int(rng.integers(1, 8)))
        u = a.disjoint_union(b)
        assert u.n == a.n + b.n
        assert u.edge_count == a.edge_count + b.edge_count
    #end for
#end function

def test_union_of_two_singletons():
    u = SimpleGraph.empty(1).disjoint_union(SimpleGraph.empty(1))
    assert u.edge_count == 0
    assert u.part_labels == (0, 1)
    assert not u.is_connected()
#end function

def test_union_then_complement_is_the_recursion_base():
    base = SimpleGraph.complete(1).complement()
    step = base.disjoint_union(SimpleGraph.complete(1)).complement()
    assert step == build(1, 1)
#end function

def test_invalid_adjacency_is_rejected():
    with pytest.raises(EccError):
        SimpleGraph([[False, True], [False, False]])
    with pytest.raises(EccError):
        SimpleGraph([[True]])
#end function

def test_antiregular_adjacency():
    assert Cograph.antiregular_adjacency(1).tolist() == [[0]]
    assert Cograph.antiregular_adjacency(3).tolist() == [
        [0, 0, 1],
        [0, 0, 1],
        [1, 1, 0],
    ]
#end function

def test_antiregular_graph_has_one_repeated_degree():
    for m in range(2, 12):
        degrees = Cograph.antiregular_adjacency(m).sum(axis=1)
        assert len(set(degrees.tolist())) == m - 1
#end function

def test_distance_matrix_of_k2():
    assert Distances.matrix(build(1, 1)).tolist() == [[0, 1], [1, 0]]

def test_disconnected_graph_is_rejected():
    with pytest.raises(DisconnectedGraph):
        Distances.matrix(SimpleGraph.empty(3))

def test_even_cographs_have_diameter_two():
    rng = np.random.default_rng(3)
    for _ in range(30):
        k = int(rng.integers(1, 5))
        alphas = tuple(int(a) for a in rng.integers(1, 5, size=2 * k))
        d = Distances.matrix(build(*alphas))
        assert d.max() <= 2
        assert np.array_equal(d, d.T)
    #end for
    assert Distances.matrix(build(1, 2, 1, 2)).max() == 2
#end function

def test_distances_match_floyd_warshall():
    rng = np.random.default_rng(2024)
    checked = 0
    seed = 0

    while checked < 25:
        seed += 1
        n = int(rng.integers(2, 11))
        nxg = nx.gnp_random_graph(n, 0.45, seed=seed)
        if not nx.is_connected(nxg):
            continue

        adj = nx.to_numpy_array(nxg, dtype=bool)
        ours = Distances.matrix(SimpleGraph(adj))
        oracle = floyd_warshall(adj.astype(float), unweighted=True)

        assert np.array_equal(ours, oracle.astype(np.int64))
        checked += 1
    #end while
#end function

def test_eccentricities():
    assert Distances.eccentricities(Distances.matrix(build(1, 1))) == (1, 1)
    assert Distances.eccentricities(Distances.matrix(build(1, 2))) == \
        (1, 2, 2)
#end function

def test_eccentricity_one_means_universal():
    g   = build(1, 1, 1, 2)
    ecc = Distances.eccentricities(Distances.matrix(g))

    assert ecc[3] == ecc[4] == 2
    for v in range(g.n):
        universal = g.adjacency[v].sum() == g.n - 1
        assert (ecc[v] == 1) == universal
    #end for
#end function
