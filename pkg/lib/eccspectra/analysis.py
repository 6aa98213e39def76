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

from functools import cached_property

from eccspectra.eccmatrix import EccMatrix
from eccspectra.graph import Cograph, Distances, GeneratingSequence
from eccspectra.linalg import (
    eigen_sym, eigenvalue_multiplicity_exact, inertia_from_spectrum
)
from eccspectra.quotient import QuotientBundle

class CographAnalysis:
    """Lazily computed objects of one C-graph, shared between checkers."""

    def __init__(self, seq):
        if not isinstance(seq, GeneratingSequence):
            seq = GeneratingSequence(tuple(seq))
        self.seq = seq
    #end function

    @cached_property
    def graph(self):
        return Cograph.build(self.seq)

    @cached_property
    def distances(self):
        return Distances.matrix(self.graph)

    @cached_property
    def ecc(self):
        return EccMatrix.from_distances(self.distances)

    @cached_property
    def ecc_spectrum(self):
        return eigen_sym(self.ecc.entries)

    @cached_property
    def m0(self):
        return eigenvalue_multiplicity_exact(self.ecc.entries, 0)

    @cached_property
    def m_minus2(self):
        return eigenvalue_multiplicity_exact(self.ecc.entries, -2)

    @cached_property
    def ecc_inertia(self):
        return inertia_from_spectrum(self.ecc_spectrum, self.m0)

    @cached_property
    def irreducibility(self):
        return self.ecc.irreducibility()

    @cached_property
    def bundle(self):
        return QuotientBundle.of(self.seq)

    @cached_property
    def r_spectrum(self):
        return self.bundle.r_spectrum()

    @cached_property
    def q2k_eigenvalues(self):
        return self.bundle.q2k_eigenvalues(self.r_spectrum)

#end class
