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
from fractions import Fraction
from typing import Tuple

import numpy as np

from eccspectra.error import EccError, NonIntegerAverage
from eccspectra.graph import Cograph, GeneratingSequence
from eccspectra.linalg import (
    Inertia, RealSymMatrix, Spectrum, eigen_sym, inertia_from_spectrum,
    integer_rank
)

logger = logging.getLogger(__name__)

@dataclass(frozen=True)
class Partition:
    part_of: Tuple[int, ...]

    def __post_init__(self):
        part_of = tuple(int(p) for p in self.part_of)

        if part_of and sorted(set(part_of)) != list(range(max(part_of) + 1)):
            raise EccError("partition labels must cover 0..m-1 without gaps.")

        object.__setattr__(self, "part_of", part_of)
    #end function

    @classmethod
    def from_sizes(cls, sizes):
        part_of = []
        for index, size in enumerate(sizes):
            if size < 1:
                raise EccError("partition parts must be nonempty.")
            part_of.extend([index] * size)
        return cls(tuple(part_of))
    #end function

    @classmethod
    def canonical(cls, seq: GeneratingSequence):
        return cls.from_sizes(seq.alphas)

    @property
    def count(self):
        return max(self.part_of, default=-1) + 1

    @property
    def part_sizes(self):
        return tuple(len(p) for p in self.parts())

    def parts(self):
        parts = [[] for _ in range(self.count)]
        for v, p in enumerate(self.part_of):
            parts[p].append(v)
        return parts
    #end function

#end class

@dataclass(frozen=True)
class QuotientResult:
    # object array of Fraction averages
    matrix: np.ndarray
    equitable: bool

    def as_integer(self):
        non_integer = [
            (i, j, b) for (i, j), b in np.ndenumerate(self.matrix)
            if b.denominator != 1
        ]

        if non_integer:
            i, j, b = non_integer[0]
            raise NonIntegerAverage(
                "block ({}, {}) has average row sum {}."
                .format(i + 1, j + 1, b)
            )

        return self.matrix.astype(np.int64)
    #end function

#end class

def quotient_matrix(m, p: Partition) -> QuotientResult:
    """
    Entry (i, j) is the average row sum of block M_{i,j}. The partition is
    equitable when every block has constant row sums; checked exactly.
    """
    a = np.asarray(m, dtype=np.int64)

    if a.shape != (len(p.part_of), len(p.part_of)):
        raise EccError(
            "partition covers {} indices but the matrix has order {}."
            .format(len(p.part_of), a.shape[0])
        )

    parts     = p.parts()
    size      = len(parts)
    q         = np.empty((size, size), dtype=object)
    equitable = True

    for i, rows in enumerate(parts):
        for j, cols in enumerate(parts):
            sums = a[np.ix_(rows, cols)].sum(axis=1)
            if (sums != sums[0]).any():
                equitable = False
            q[i, j] = Fraction(int(sums.sum()), len(rows))
        #end for
    #end for

    return QuotientResult(q, equitable)
#end function

def build_q2k(seq: GeneratingSequence):
    """The closed-form 2k x 2k quotient of the eccentricity matrix."""
    seq.require_main_scope("the closed-form quotient matrix")

    last = seq.length
    q    = np.zeros((last, last), dtype=np.int64)

    for i in range(1, last + 1):
        for j in range(1, last + 1):
            if i == last or j == last:
                if i == j:
                    q[i - 1, j - 1] = 2 * (seq.alpha(last) - 1)
                continue
            #end if

            if i == j:
                if i % 2 == 0:
                    q[i - 1, j - 1] = 2 * (seq.alpha(i) - 1)
            elif i % 2 and j % 2:
                q[i - 1, j - 1] = 2 * seq.alpha(j)
            elif i % 2 and j < i:
                q[i - 1, j - 1] = 2 * seq.alpha(j)
            elif i % 2 == 0 and j % 2 and j > i:
                q[i - 1, j - 1] = 2 * seq.alpha(j)
            #end if
        #end for
    #end for

    return q
#end function

def d_vector(seq: GeneratingSequence):
    return tuple(seq.alphas[:-1])

def dtilde_vector(seq: GeneratingSequence):
    return tuple(
        Fraction(a - 1, a) if i % 2 == 0 else Fraction(0)
        for i, a in enumerate(seq.alphas[:-1], start=1)
    )
#end function

def symmetrize_r(qtilde, dvec) -> RealSymMatrix:
    """R = D^{1/2} Q~ D^{-1/2}, the symmetric image of Q~."""
    root = np.sqrt(np.asarray(dvec, dtype=float))
    q    = np.asarray(qtilde, dtype=float)
    return RealSymMatrix(root[:, None] * q / root[None, :])
#end function

def r_from_antiregular(seq: GeneratingSequence):
    """2 D^{1/2} (A_{2k-1} + D~) D^{1/2} from the antiregular graph."""
    seq.require_main_scope("the antiregular form of R")

    dvec   = d_vector(seq)
    dtilde = dtilde_vector(seq)
    adj    = Cograph.antiregular_adjacency(len(dvec))
    root   = np.sqrt(np.asarray(dvec, dtype=float))

    r = 2.0 * root[:, None] * adj * root[None, :]
    for i, (a, t) in enumerate(zip(dvec, dtilde)):
        r[i, i] = float(2 * a * t)

    return r
#end function

def full_r(seq: GeneratingSequence) -> RealSymMatrix:
    """D^{1/2} Q_{2k} D^{-1/2} of order 2k."""
    return symmetrize_r(build_q2k(seq), seq.alphas)

def tridiagonal_t(seq: GeneratingSequence):
    """Tridiagonal row-equivalent of Q~, built from the part sizes."""
    seq.require_main_scope("the tridiagonal reduction T")

    a    = seq.alpha
    size = seq.length - 1
    t    = np.zeros((size, size), dtype=np.int64)

    def put(row, col, value):
        if col <= size:
            t[row - 1, col - 1] = value
    #end inline function

    put(1, 2, -2 * (a(2) - 1))

    for row in range(2, size + 1):
        if row % 2 == 0:
            put(row, row - 1,  2 * a(row - 1))
            put(row, row,      2 * a(row))
            put(row, row + 1, -2 * a(row + 1))
        else:
            put(row, row - 1,  2 * (a(row - 1) - 1))
            put(row, row,      2 * a(row))
            if row + 1 <= size:
                put(row, row + 1, -2 * (a(row + 1) - 1))
        #end if
    #end for

    return t
#end function

def tridiagonal_s(seq: GeneratingSequence):
    """Tridiagonal row-equivalent of Q~ + 2I, built from the part sizes."""
    seq.require_main_scope("the tridiagonal reduction S")

    a    = seq.alpha
    size = seq.length - 1
    s    = np.zeros((size, size), dtype=np.int64)

    def put(row, col, value):
        if col <= size:
            s[row - 1, col - 1] = value
    #end inline function

    put(1, 1, 2)
    put(1, 2, -2 * a(2))

    for row in range(2, size + 1):
        if row % 2 == 0:
            put(row, row - 1, 2 * (a(row - 1) - 1))
            put(row, row,     2 * a(row))
            put(row, row + 1, 2 * (1 - a(row + 1)))
        else:
            put(row, row - 1, 2 * a(row - 1))
            put(row, row,     2 * a(row))
            if row + 1 <= size:
                put(row, row + 1, -2 * a(row + 1))
        #end if
    #end for

    return s
#end function

@dataclass(frozen=True)
class QuotientBundle:
    q2k: np.ndarray
    qtilde: np.ndarray
    r: RealSymMatrix
    dvec: Tuple[int, ...]
    dtildevec: Tuple[Fraction, ...]
    tail: int

    @classmethod
    def of(cls, seq: GeneratingSequence):
        q2k    = build_q2k(seq)
        qtilde = q2k[:-1, :-1]
        dvec   = d_vector(seq)

        return cls(
            q2k, qtilde, symmetrize_r(qtilde, dvec), dvec,
            dtilde_vector(seq), int(q2k[-1, -1])
        )
    #end function

    def r_spectrum(self) -> Spectrum:
        return eigen_sym(self.r)

    def q2k_eigenvalues(self, r_spectrum=None):
        """Spec(Q_{2k}) = Spec(R) plus the explicit eigenvalue 2(a_2k - 1)."""
        spec = r_spectrum or self.r_spectrum()
        return np.sort(np.append(spec.values, float(self.tail)))
    #end function

    def qtilde_nullity(self):
        return self.qtilde.shape[0] - integer_rank(self.qtilde)

    def r_inertia(self, r_spectrum=None) -> Inertia:
        spec = r_spectrum or self.r_spectrum()
        return inertia_from_spectrum(spec, self.qtilde_nullity())

    def q2k_inertia(self, r_spectrum=None) -> Inertia:
        inner = self.r_inertia(r_spectrum)
        if self.tail <= 0:
            raise EccError(
                "the explicit quotient eigenvalue must be positive."
            )
        return Inertia(inner.n_minus, inner.n_zero, inner.n_plus + 1)
    #end function

#end class
