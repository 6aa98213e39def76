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
import math

from dataclasses import dataclass
from typing import Tuple

import numpy as np

from eccspectra.error import EccError, InertiaAmbiguous, NoConvergence

logger = logging.getLogger(__name__)

MAX_QL_ITERATIONS = 50
SYMMETRY_TOL      = 1e-12
GROUPING_TOL      = 1e-7

class RealSymMatrix:

    def __init__(self, entries):
        a = np.array(entries, dtype=float)

        if a.ndim != 2 or a.shape[0] != a.shape[1]:
            raise EccError("a symmetric matrix must be square.")

        scale = max(1.0, float(np.abs(a).max(initial=0.0)))
        asym  = float(np.abs(a - a.T).max(initial=0.0))

        if asym > SYMMETRY_TOL * scale:
            raise EccError(
                "matrix is not symmetric (max asymmetry {:.3e}).".format(asym)
            )

        a = (a + a.T) / 2.0
        a.setflags(write=False)
        self._a = a
    #end function

    @property
    def order(self):
        return self._a.shape[0]

    @property
    def array(self):
        return self._a

    def principal(self, indices):
        idx = list(indices)
        return RealSymMatrix(self._a[np.ix_(idx, idx)])

#end class

@dataclass(frozen=True)
class Spectrum:
    """Ascending eigenvalues plus the grouping into (value, multiplicity)."""

    eigenvalues: Tuple[float, ...]
    multiplicities: Tuple[Tuple[float, int], ...]
    tol_used: float

    @property
    def values(self):
        return np.array(self.eigenvalues)

    @property
    def order(self):
        return len(self.eigenvalues)

    @property
    def distinct_count(self):
        return len(self.multiplicities)

    def count_near(self, value, tol=None):
        tol = self.tol_used if tol is None else tol
        return int(np.count_nonzero(np.abs(self.values - value) <= tol))

    def max_abs(self):
        if not self.eigenvalues:
            return 0.0
        return max(abs(self.eigenvalues[0]), abs(self.eigenvalues[-1]))

#end class

@dataclass(frozen=True)
class Inertia:
    n_minus: int
    n_zero: int
    n_plus: int

    @property
    def order(self):
        return self.n_minus + self.n_zero + self.n_plus

    def as_tuple(self):
        return (self.n_minus, self.n_zero, self.n_plus)

#end class

def householder_tridiagonal(a):
    """
    Reduce a symmetric matrix to tridiagonal form by Householder
    similarities. Returns the diagonal d and the subdiagonal e.
    """
    a = np.array(a, dtype=float)
    n = a.shape[0]

    # columns below this are round-off from earlier steps
    negligible = np.finfo(float).eps * float(np.linalg.norm(a))

    for k in range(n - 2):
        x     = a[k + 1:, k]
        xnorm = math.sqrt(float(np.dot(x, x)))

        if xnorm <= negligible:
            a[k + 1:, k] = 0.0
            a[k, k + 1:] = 0.0
            continue
        #end if

        alpha = -math.copysign(xnorm, x[0])
        v     = x.copy()
        v[0] -= alpha
        vnorm2 = float(np.dot(v, v))

        if vnorm2 == 0.0:
            continue

        sub = a[k + 1:, k + 1:]
        p   = np.dot(sub, v) * (2.0 / vnorm2)
        q   = p - (np.dot(v, p) / vnorm2) * v

        sub -= np.outer(v, q) + np.outer(q, v)

        a[k + 1:, k] = 0.0
        a[k, k + 1:] = 0.0
        a[k + 1, k]  = alpha
        a[k, k + 1]  = alpha
    #end for

    return np.diagonal(a).copy(), np.diagonal(a, -1).copy()
#end function

def ql_implicit(d, e):
    """
    Eigenvalues of the symmetric tridiagonal matrix (d, e) by QL iteration
    with implicit Wilkinson-type shifts. Returns (eigenvalues, sweeps).
    """
    d = [float(x) for x in d]
    n = len(d)
    e = [float(x) for x in e] + [0.0]
    sweeps = 0

    if n == 0:
        return np.array([]), 0

    eps   = np.finfo(float).eps
    tnorm = max(abs(x) for x in d) + max(abs(x) for x in e)

    for l in range(n):
        iterations = 0

        while True:
            m = l
            while m < n - 1:
                dd = abs(d[m]) + abs(d[m + 1])
                if abs(e[m]) <= eps * max(dd, tnorm):
                    break
                m += 1
            #end while

            if m == l:
                break

            iterations += 1
            sweeps     += 1

            if iterations > MAX_QL_ITERATIONS:
                raise NoConvergence(
                    "QL iteration did not converge for eigenvalue {} after "
                    "{} sweeps.".format(l, MAX_QL_ITERATIONS)
                )
            #end if

            g = (d[l + 1] - d[l]) / (2.0 * e[l])
            r = math.hypot(g, 1.0)
            g = d[m] - d[l] + e[l] / (g + math.copysign(r, g))

            s, c, p = 1.0, 1.0, 0.0
            underflow = False

            for i in range(m - 1, l - 1, -1):
                f = s * e[i]
                b = c * e[i]
                r = math.hypot(f, g)
                e[i + 1] = r

                if r == 0.0:
                    d[i + 1] -= p
                    e[m] = 0.0
                    underflow = True
                    break
                #end if

                s = f / r
                c = g / r
                g = d[i + 1] - p
                r = (d[i] - g) * s + 2.0 * c * b
                p = s * r
                d[i + 1] = g + p
                g = c * r - b
            #end for

            if underflow:
                continue

            d[l] -= p
            e[l]  = g
            e[m]  = 0.0
        #end while
    #end for

    return np.sort(np.array(d)), sweeps
#end function

def group_eigenvalues(values, tol):
    groups = []
    start  = 0

    for i in range(1, len(values) + 1):
        if i == len(values) or values[i] - values[i - 1] > tol:
            chunk = values[start:i]
            groups.append((float(np.mean(chunk)), len(chunk)))
            start = i
    #end for

    return tuple(groups)
#end function

def eigen_sym(m) -> Spectrum:
    if not isinstance(m, RealSymMatrix):
        m = RealSymMatrix(m)

    d, e = householder_tridiagonal(m.array)
    values, sweeps = ql_implicit(d, e)

    norm2 = float(np.abs(values).max(initial=0.0))
    tol   = GROUPING_TOL * max(1.0, norm2)

    logger.debug(
        "eigensolve of order {} took {} QL sweeps.".format(m.order, sweeps)
    )

    return Spectrum(
        tuple(float(v) for v in values),
        group_eigenvalues(values, tol),
        tol
    )
#end function

def _as_int_rows(m):
    a = np.asarray(m)

    if a.ndim != 2:
        raise EccError("expected a two-dimensional integer matrix.")
    if a.dtype.kind not in "iub" and a.dtype != object:
        if not np.array_equal(a, np.round(a)):
            raise EccError("expected integer matrix entries.")

    return [[int(x) for x in row] for row in a.tolist()]
#end function

def integer_rank(m):
    """Exact rank by fraction-free (Bareiss) elimination on Python integers."""
    a = _as_int_rows(m)
    rows = len(a)
    cols = len(a[0]) if rows else 0

    rank = 0
    prev = 1

    for j in range(cols):
        if rank == rows:
            break

        pivot_row = None
        for i in range(rank, rows):
            if a[i][j] != 0:
                pivot_row = i
                break
        #end for

        if pivot_row is None:
            continue

        a[rank], a[pivot_row] = a[pivot_row], a[rank]
        pivot = a[rank][j]

        for i in range(rank + 1, rows):
            multiplier = a[i][j]
            row = a[i]
            top = a[rank]

            for c in range(j + 1, cols):
                q, r = divmod(pivot * row[c] - multiplier * top[c], prev)
                if r:
                    raise EccError("inexact division in Bareiss elimination.")
                row[c] = q
            #end for

            row[j] = 0
        #end for

        prev  = pivot
        rank += 1
    #end for

    return rank
#end function

def inertia_from_spectrum(spectrum: Spectrum, exact_zeros) -> Inertia:
    """
    Sign counts from a float spectrum, where exact_zeros comes from an
    integer rank. Any eigenvalue inside the grouping tolerance around zero
    must be one of the exact zeros.
    """
    values = spectrum.values
    tol    = spectrum.tol_used
    near   = int(np.count_nonzero(np.abs(values) <= tol))

    if near != exact_zeros:
        raise InertiaAmbiguous(
            "{} eigenvalues lie within {:.3e} of zero but the exact "
            "nullity is {}.".format(near, tol, exact_zeros)
        )

    return Inertia(
        int(np.count_nonzero(values < -tol)),
        exact_zeros,
        int(np.count_nonzero(values > tol))
    )
#end function

def inertia_of(m) -> Inertia:
    a = np.asarray(m)
    n_zero = a.shape[0] - integer_rank(a)
    return inertia_from_spectrum(eigen_sym(a.astype(float)), n_zero)
#end function

def eigenvalue_multiplicity_exact(m, t):
    a = np.array(_as_int_rows(m), dtype=object)

    if a.shape[0] != a.shape[1]:
        raise EccError("eigenvalue multiplicity needs a square matrix.")

    for i in range(a.shape[0]):
        a[i, i] -= int(t)

    return a.shape[0] - integer_rank(a)
#end function
