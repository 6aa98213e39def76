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

import collections
import logging

from dataclasses import dataclass
from typing import List, Optional, Sequence, Tuple

import numpy as np

from eccspectra.error import (
    DisconnectedGraph, EccError, OutOfScope, UsageError
)

logger = logging.getLogger(__name__)

@dataclass(frozen=True)
class GeneratingSequence:
    """The tuple (a_1, ..., a_l) of part sizes defining C(a_1, ..., a_l)."""

    alphas: Tuple[int, ...]

    def __post_init__(self):
        alphas = tuple(self.alphas)

        if not alphas:
            raise EccError("a generating sequence needs at least one entry.")

        for a in alphas:
            if isinstance(a, bool) or not isinstance(a, (int, np.integer)):
                raise EccError(
                    "sequence entries must be integers, got '{}'.".format(a)
                )
            if a < 1:
                raise EccError(
                    "sequence entries must be positive, got '{}'.".format(a)
                )
        #end for

        object.__setattr__(self, "alphas", tuple(int(a) for a in alphas))
    #end function

    @classmethod
    def parse(cls, text):
        fields = [f.strip() for f in text.strip().split(",")]

        try:
            alphas = [int(f) for f in fields]
        except ValueError:
            raise UsageError(
                "malformed sequence '{}', expected a1,a2,...".format(text)
            )

        try:
            return cls(tuple(alphas))
        except EccError as e:
            raise UsageError(str(e))
    #end function

    def alpha(self, i):
        """One-based access, mirroring the part numbering V_1, ..., V_l."""
        return self.alphas[i - 1]

    @property
    def length(self):
        return len(self.alphas)

    @property
    def n(self):
        return sum(self.alphas)

    @property
    def k(self) -> Optional[int]:
        if len(self.alphas) % 2:
            return None
        return len(self.alphas) // 2

    @property
    def in_main_scope(self):
        k = self.k
        return k is not None and k >= 2 and self.alphas[-1] >= 2

    @property
    def odd_sum(self):
        return sum(self.alphas[0::2])

    @property
    def even_sum(self):
        return sum(self.alphas[1::2])

    def part_ranges(self) -> List[range]:
        ranges = []
        start  = 0

        for a in self.alphas:
            ranges.append(range(start, start + a))
            start += a

        return ranges
    #end function

    def require_main_scope(self, what):
        if not self.in_main_scope:
            raise OutOfScope(
                "{} needs l = 2k even, k >= 2 and a_2k >= 2, got {}."
                .format(what, self)
            )
    #end function

    def __len__(self):
        return len(self.alphas)

    def __iter__(self):
        return iter(self.alphas)

    def __str__(self):
        return "C({})".format(",".join(str(a) for a in self.alphas))

#end class

class SimpleGraph:
    """Undirected simple graph with dense boolean adjacency."""

    def __init__(self, adjacency, part_labels: Optional[Sequence[int]] = None):
        adj = np.array(adjacency, dtype=bool)

        if adj.ndim != 2 or adj.shape[0] != adj.shape[1]:
            raise EccError("adjacency must be a square matrix.")
        if not np.array_equal(adj, adj.T):
            raise EccError("adjacency must be symmetric.")
        if adj.diagonal().any():
            raise EccError("adjacency must have a zero diagonal.")

        if part_labels is None:
            part_labels = [0] * adj.shape[0]
        if len(part_labels) != adj.shape[0]:
            raise EccError(
                "got {} part labels for {} vertices."
                .format(len(part_labels), adj.shape[0])
            )

        adj.setflags(write=False)

        self._adj         = adj
        self._part_labels = tuple(int(p) for p in part_labels)
    #end function

    @classmethod
    def empty(cls, n, part=0):
        return cls(np.zeros((n, n), dtype=bool), [part] * n)

    @classmethod
    def complete(cls, n, part=0):
        return cls(~np.eye(n, dtype=bool), [part] * n)

    @property
    def n(self):
        return self._adj.shape[0]

    @property
    def adjacency(self):
        return self._adj

    @property
    def part_labels(self):
        return self._part_labels

    @property
    def edge_count(self):
        return int(np.count_nonzero(self._adj)) // 2

    @property
    def part_count(self):
        return max(self._part_labels, default=-1) + 1

    def parts(self) -> List[List[int]]:
        parts = [[] for _ in range(self.part_count)]
        for v, p in enumerate(self._part_labels):
            parts[p].append(v)
        return parts
    #end function

    def complement(self):
        adj = ~self._adj
        np.fill_diagonal(adj, False)
        return SimpleGraph(adj, self._part_labels)
    #end function

    def disjoint_union(self, other):
        n, m = self.n, other.n

        adj = np.zeros((n + m, n + m), dtype=bool)
        adj[:n, :n] = self._adj
        adj[n:, n:] = other.adjacency

        offset = self.part_count
        labels = self._part_labels + tuple(
            p + offset for p in other.part_labels
        )

        return SimpleGraph(adj, labels)
    #end function

    def components(self):
        return connected_components(self._adj)

    def is_connected(self):
        return len(self.components()) <= 1

    def to_int_matrix(self):
        return self._adj.astype(np.int64)

    def __eq__(self, other):
        if not isinstance(other, SimpleGraph):
            return NotImplemented
        return self._part_labels == other.part_labels and \
            np.array_equal(self._adj, other.adjacency)
    #end function

#end class

def connected_components(pattern) -> List[List[int]]:
    """Components of the graph whose edges are the nonzero pattern entries."""
    pattern = np.asarray(pattern) != 0
    n       = pattern.shape[0]
    seen    = np.zeros(n, dtype=bool)
    result  = []

    for root in range(n):
        if seen[root]:
            continue

        seen[root] = True
        members    = [root]
        queue      = collections.deque([root])

        while queue:
            v = queue.popleft()
            for w in np.flatnonzero(pattern[v] & ~seen):
                seen[w] = True
                members.append(int(w))
                queue.append(int(w))
        #end while

        result.append(sorted(members))
    #end for

    return result
#end function

class Cograph:

    @staticmethod
    def build(seq: GeneratingSequence) -> SimpleGraph:
        """
        C(a_1) is the complement of K_{a_1}; each further step takes the
        disjoint union with K_{a_i} and complements. Part i occupies a
        contiguous index range.
        """
        alphas = seq.alphas
        g = SimpleGraph.complete(alphas[0]).complement()

        for i in range(1, len(alphas)):
            clique = SimpleGraph.complete(alphas[i])
            g = g.disjoint_union(clique).complement()

        logger.debug(
            "built {} with {} vertices and {} edges."
            .format(seq, g.n, g.edge_count)
        )
        return g
    #end function

    @staticmethod
    def antiregular_adjacency(m):
        if m < 1:
            raise EccError(
                "antiregular order must be positive, got {}.".format(m)
            )
        return Cograph.build(GeneratingSequence((1,) * m)).to_int_matrix()
    #end function

#end class

class Distances:

    @staticmethod
    def matrix(g: SimpleGraph):
        """All-pairs distances by level-synchronous BFS from every vertex."""
        adj = g.adjacency
        n   = g.n
        d   = np.full((n, n), -1, dtype=np.int64)

        for source in range(n):
            visited = np.zeros(n, dtype=bool)
            visited[source] = True

            frontier = np.array([source])
            level    = 0
            d[source, source] = 0

            while frontier.size:
                level += 1
                reached = adj[frontier].any(axis=0) & ~visited
                visited |= reached
                frontier = np.flatnonzero(reached)
                d[source, frontier] = level
            #end while

            if not visited.all():
                missing = int(np.flatnonzero(~visited)[0])
                raise DisconnectedGraph(
                    "vertex {} cannot reach vertex {}.".format(source, missing)
                )
            #end if
        #end for

        return d
    #end function

    @staticmethod
    def eccentricities(d) -> Tuple[int, ...]:
        d = np.asarray(d)
        return tuple(int(x) for x in d.max(axis=1))

#end class
