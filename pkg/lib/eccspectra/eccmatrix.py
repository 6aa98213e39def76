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

import logging

from dataclasses import dataclass
from typing import Optional, Tuple

import numpy as np

from eccspectra.error import EccError
from eccspectra.graph import (
    Distances, GeneratingSequence, SimpleGraph, connected_components
)

logger = logging.getLogger(__name__)

@dataclass(frozen=True)
class Irreducibility:
    irreducible: bool
    # (S, V - S) with no nonzero entry between the two sides
    witness: Optional[Tuple[Tuple[int, ...], Tuple[int, ...]]] = None

#end class

class EccMatrix:
    """
    The eccentricity matrix: entry (i, j) keeps d(i, j) when it equals
    min(e(v_i), e(v_j)) and is zero otherwise.
    """

    def __init__(self, entries):
        m = np.array(entries, dtype=np.int64)

        if m.ndim != 2 or m.shape[0] != m.shape[1]:
            raise EccError("eccentricity matrix must be square.")
        if not np.array_equal(m, m.T):
            raise EccError("eccentricity matrix must be symmetric.")
        if m.diagonal().any():
            raise EccError("eccentricity matrix must have a zero diagonal.")
        if (m < 0).any():
            raise EccError("eccentricity matrix entries must be nonnegative.")
        if m.shape[0] > 1 and not m.any(axis=1).all():
            row = int(np.flatnonzero(~m.any(axis=1))[0])
            raise EccError(
                "row {} of the eccentricity matrix is zero.".format(row)
            )

        m.setflags(write=False)
        self._m = m
    #end function

    @classmethod
    def from_distances(cls, d):
        d   = np.asarray(d, dtype=np.int64)
        ecc = np.array(Distances.eccentricities(d), dtype=np.int64)

        keep = d == np.minimum.outer(ecc, ecc)
        return cls(np.where(keep, d, 0))
    #end function

    @classmethod
    def of_graph(cls, g: SimpleGraph):
        return cls.from_distances(Distances.matrix(g))

    @classmethod
    def closed_form(cls, seq: GeneratingSequence):
        """Block builder for in-scope C-graphs, no distances involved."""
        seq.require_main_scope("the closed-form eccentricity matrix")

        ranges = seq.part_ranges()
        parts  = seq.length
        m      = np.zeros((seq.n, seq.n), dtype=np.int64)

        for i in range(1, parts + 1):
            for j in range(1, parts + 1):
                rows = ranges[i - 1]
                cols = ranges[j - 1]
                block = m[rows.start:rows.stop, cols.start:cols.stop]

                if i == j:
                    if i % 2 == 0:
                        block[:, :] = 2
                        np.fill_diagonal(block, 0)
                    continue
                #end if

                if i % 2 and j % 2:
                    block[:, :] = 2
                elif i % 2 != j % 2:
                    odd, even = (i, j) if i % 2 else (j, i)
                    if odd > even:
                        block[:, :] = 2
                #end if
            #end for
        #end for

        return cls(m)
    #end function

    @property
    def order(self):
        return self._m.shape[0]

    @property
    def entries(self):
        return self._m

    @property
    def diameter(self):
        return int(self._m.max(initial=0))

    def irreducibility(self) -> Irreducibility:
        components = connected_components(self._m)
        verdict    = self._decide_by_permutation()

        if verdict.irreducible != (len(components) <= 1):
            raise EccError(
                "component and permutation criteria disagree on "
                "irreducibility."
            )
        #end if

        if len(components) <= 1:
            return Irreducibility(True)

        side = tuple(components[0])
        rest = tuple(v for v in range(self.order) if v not in set(side))

        return Irreducibility(False, (side, rest))
    #end function

    # PRIVATE

    def _decide_by_permutation(self) -> Irreducibility:
        """
        Reducible iff some permutation brings the matrix to the form
        [[A, B], [0, C]] with A, C square. The candidate permutation comes
        from the reachability closure of the pattern; the zero block is then
        checked on the permuted matrix itself.
        """
        n = self.order
        if n <= 1:
            return Irreducibility(True)

        reach = (self._m != 0) | np.eye(n, dtype=bool)

        while True:
            closure = (reach.astype(np.int64) @ reach.astype(np.int64)) > 0
            if np.array_equal(closure, reach):
                break
            reach = closure
        #end while

        side = np.flatnonzero(reach[0])
        if side.size == n:
            return Irreducibility(True)

        rest  = np.setdiff1d(np.arange(n), side)
        perm  = np.concatenate([rest, side])
        p     = self._m[np.ix_(perm, perm)]
        lower = p[rest.size:, :rest.size]

        if lower.any():
            raise EccError(
                "reachability closure produced an invalid block split."
            )

        return Irreducibility(
            False, (tuple(int(v) for v in side), tuple(int(v) for v in rest))
        )
    #end function

#end class

def eccentric_graph(g: SimpleGraph) -> SimpleGraph:
    ecc = EccMatrix.of_graph(g)
    return SimpleGraph(ecc.entries != 0, g.part_labels)
#end function
