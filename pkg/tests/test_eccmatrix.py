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

import math

import numpy as np
import pytest

from eccspectra.eccmatrix import EccMatrix, eccentric_graph
from eccspectra.error import EccError, OutOfScope
from eccspectra.graph import Cograph, GeneratingSequence
from eccspectra.linalg import eigen_sym
from eccspectra.sweep import sample_sequence

def ecc_of(*alphas):
    return EccMatrix.of_graph(Cograph.build(GeneratingSequence(alphas)))

def test_k2():
    assert ecc_of(1, 1).entries.tolist() == [[0, 1], [1, 0]]

def test_path_on_three_vertices():
    """C(1,2) is P3 with the center first."""
    e = ecc_of(1, 2)
    assert e.entries.tolist() == [[0, 1, 1], [1, 0, 2], [1, 2, 0]]
    assert e.diameter == 2

    expected = sorted([-2.0, 1.0 - math.sqrt(3.0), 1.0 + math.sqrt(3.0)])
    assert np.allclose(eigen_sym(e.entries).eigenvalues, expected, atol=1e-10)
#end function

def test_closed_form_blocks_of_small_instance():
    expected = [
        [0, 0, 0, 2, 0, 0],
        [0, 0, 0, 2, 0, 0],
        [0, 0, 0, 2, 0, 0],
        [2, 2, 2, 0, 0, 0],
        [0, 0, 0, 0, 0, 2],
        [0, 0, 0, 0, 2, 0],
    ]
    seq = GeneratingSequence((2, 1, 1, 2))

    assert EccMatrix.closed_form(seq).entries.tolist() == expected
    assert ecc_of(2, 1, 1, 2).entries.tolist() == expected
#end function

def test_closed_form_matches_definition_on_samples():
    rng = np.random.default_rng(99)
    for _ in range(60):
        seq = sample_sequence(rng, 4, 4)
        direct = EccMatrix.of_graph(Cograph.build(seq)).entries
        closed = EccMatrix.closed_form(seq).entries
        assert np.array_equal(direct, closed), str(seq)
    #end for
#end function

def test_closed_form_needs_main_scope():
    with pytest.raises(OutOfScope):
        EccMatrix.closed_form(GeneratingSequence((1, 1, 1, 1)))

def test_every_row_is_nonzero():
    rng = np.random.default_rng(5)
    for _ in range(30):
        seq = sample_sequence(rng, 4, 4)
        assert ecc_of(*seq.alphas).entries.any(axis=1).all()
    #end for
#end function

@pytest.mark.parametrize("entries", [
    [[0, 1], [2, 0]],
    [[1, 1], [1, 0]],
    [[0, -1], [-1, 0]],
    [[0, 0], [0, 0]],
    [[0, 1, 1]],
])
def test_invalid_matrices_are_rejected(entries):
    with pytest.raises(EccError):
        EccMatrix(entries)

def test_eccentric_graph_of_k2():
    g = Cograph.build(GeneratingSequence((1, 1)))
    assert eccentric_graph(g) == g

def test_eccentric_graph_connectivity():
    reducible = eccentric_graph(
        Cograph.build(GeneratingSequence((1, 1, 1, 2)))
    )
    assert not reducible.is_connected()

    irreducible = eccentric_graph(
        Cograph.build(GeneratingSequence((1, 1, 1, 1)))
    )
    assert irreducible.is_connected()
#end function

def test_irreducible_examples():
    assert ecc_of(1, 1).irreducibility().irreducible
    assert ecc_of(1, 1, 1, 1).irreducibility().irreducible
    assert ecc_of(1, 1, 1, 1).irreducibility().witness is None
#end function

def test_reducible_witness_separates_the_last_part():
    verdict = ecc_of(1, 1, 1, 2).irreducibility()

    assert not verdict.irreducible
    sides = {frozenset(side) for side in verdict.witness}
    assert sides == {frozenset({0, 1, 2}), frozenset({3, 4})}
#end function

def test_witness_has_no_entries_across():
    rng = np.random.default_rng(17)
    for _ in range(20):
        seq = sample_sequence(rng, 4, 4)
        e = ecc_of(*seq.alphas)
        verdict = e.irreducibility()

        assert not verdict.irreducible
        side, rest = verdict.witness
        assert not e.entries[np.ix_(side, rest)].any()
    #end for
#end function

def test_irreducibility_follows_the_last_part_size():
    rng = np.random.default_rng(23)
    for _ in range(40):
        seq = sample_sequence(rng, 4, 4)
        twin = seq.alphas[:-1] + (1,)
        assert not ecc_of(*seq.alphas).irreducibility().irreducible
        assert ecc_of(*twin).irreducibility().irreducible
    #end for
#end function
