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

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Dict, List, Optional

import numpy as np

from eccspectra.analysis import CographAnalysis
from eccspectra.eccmatrix import EccMatrix
from eccspectra.error import EccError, OutOfScope
from eccspectra.graph import Cograph, GeneratingSequence
from eccspectra.linalg import (
    Inertia, eigen_sym, inertia_from_spectrum, inertia_of, integer_rank
)
from eccspectra.quotient import (
    Partition, full_r, quotient_matrix, r_from_antiregular, tridiagonal_s,
    tridiagonal_t
)

logger = logging.getLogger(__name__)

PASS = "PASS"
FAIL = "FAIL"

# lower end of the eigenvalue-free interval
FREE_LOW = -1.0 - math.sqrt(2.0)

SPECTRAL_TOL   = 1e-7
K1_TOL         = 1e-8
PROPERTY_TOL   = 1e-8
SEPARATION_MIN = 1e-3

IRREDUCIBILITY        = "irreducibility"
K1_CLOSED_FORM        = "k1-closed-form"
STRUCTURAL_EIGS       = "structural-eigenvalues"
EXACT_MULTIPLICITIES  = "exact-multiplicities"
TRIDIAGONAL_RANKS     = "tridiagonal-ranks"
INERTIA               = "inertia"
INTERVAL              = "eigenvalue-free-interval"
SPECTRUM_ASSEMBLY     = "spectrum-assembly"
DISTINCT_COUNT        = "distinct-count"
ANTIREGULAR           = "antiregular-lemmas"
ANTIREGULAR_REPR      = "antiregular-representations"
CONGRUENCE            = "congruence"
ECCENTRIC_SUBMATRIX   = "eccentric-submatrix"
QUOTIENT_DIVISIBILITY = "quotient-divisibility"
QUOTIENT_INTERLACING  = "quotient-interlacing"
CLOSED_FORM_MATRIX    = "closed-form-matrix"

ERRATUM_M0 = (
    "erratum: the published multiplicity corollary swaps the a_2 = 1 and "
    "a_2 != 1 cases of m0; the inertia formula and the reference table "
    "agree with the +1-iff-a_2=1 assignment checked here."
)

def _plain(value):
    """Normalize to JSON-native types so reports survive a JSON round trip."""
    if isinstance(value, dict):
        return {str(k): _plain(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [_plain(v) for v in value]
    if isinstance(value, np.ndarray):
        return [_plain(v) for v in value.tolist()]
    if isinstance(value, (bool, np.bool_)):
        return bool(value)
    if isinstance(value, (int, np.integer)):
        return int(value)
    if isinstance(value, (float, np.floating)):
        return float(value)
    if isinstance(value, Fraction):
        return str(value)
    if isinstance(value, Inertia):
        return list(value.as_tuple())
    return value
#end function

@dataclass
class TheoremReport:
    theorem: str
    sequence: List[int]
    predicted: Dict[str, Any]
    computed: Dict[str, Any]
    verdict: str
    tolerance: Optional[float] = None
    notes: List[str] = field(default_factory=list)

    @property
    def passed(self):
        return self.verdict == PASS

    def to_dict(self):
        return {
            "theorem":   self.theorem,
            "sequence":  list(self.sequence),
            "predicted": self.predicted,
            "computed":  self.computed,
            "verdict":   self.verdict,
            "tolerance": self.tolerance,
            "notes":     list(self.notes),
        }
    #end function

    @classmethod
    def from_dict(cls, d):
        return cls(
            d["theorem"], list(d["sequence"]), d["predicted"], d["computed"],
            d["verdict"], d.get("tolerance"), list(d.get("notes", []))
        )
    #end function

#end class

def _report(theorem, seq, predicted, computed, passed, tolerance=None,
        notes=None):
    report = TheoremReport(
        theorem,
        list(seq),
        _plain(predicted),
        _plain(computed),
        PASS if passed else FAIL,
        tolerance,
        list(notes or [])
    )

    if not passed:
        logger.error("{} failed for {}.".format(theorem, _label(seq)))

    return report
#end function

def _label(seq):
    return "C({})".format(",".join(str(a) for a in seq))

def _analysis(seq, analysis=None) -> CographAnalysis:
    if analysis is not None:
        return analysis
    return CographAnalysis(seq)
#end function

def _main_scope(seq, analysis, what) -> CographAnalysis:
    analysis = _analysis(seq, analysis)
    analysis.seq.require_main_scope(what)
    return analysis
#end function

def sorted_distance(a, b):
    """Max over matched pairs of two equally long sorted spectra."""
    a = np.sort(np.asarray(a, dtype=float))
    b = np.sort(np.asarray(b, dtype=float))

    if a.shape != b.shape:
        return math.inf
    if a.size == 0:
        return 0.0

    return float(np.abs(a - b).max())
#end function

def multiset_contained(sub, sup, tol):
    """True if every value of sub can be matched to its own value of sup."""
    available = list(np.sort(np.asarray(sup, dtype=float)))

    for value in np.sort(np.asarray(sub, dtype=float)):
        best = None
        for index, candidate in enumerate(available):
            if abs(candidate - value) <= tol:
                best = index
                break
        #end for

        if best is None:
            return False

        del available[best]
    #end for

    return True
#end function

def min_gap(values):
    distinct = np.unique(np.round(np.asarray(values, dtype=float), 9))
    if distinct.size < 2:
        return None
    return float(np.diff(distinct).min())
#end function

def interlaces(big, small, tol=PROPERTY_TOL):
    """theta_i(M) <= mu_i(H) <= theta_{i+n-m}(M), H principal in M."""
    big   = np.sort(np.asarray(big, dtype=float))
    small = np.sort(np.asarray(small, dtype=float))
    n, m  = big.size, small.size

    for i in range(m):
        if big[i] > small[i] + tol or small[i] > big[i + n - m] + tol:
            return False

    return True
#end function

# THEOREM CHECKERS

def check_irreducibility(seq, analysis=None) -> TheoremReport:
    analysis = _analysis(seq, analysis)
    seq = analysis.seq

    if seq.k is None or seq.k < 2:
        raise OutOfScope(
            "the irreducibility check needs l = 2k with k >= 2, got {}."
            .format(seq)
        )

    verdict   = analysis.irreducibility
    predicted = seq.alphas[-1] == 1
    computed  = {"irreducible": verdict.irreducible}

    if verdict.witness is not None:
        computed["witness_sizes"] = [len(side) for side in verdict.witness]

    return _report(
        IRREDUCIBILITY, seq,
        {"irreducible": predicted}, computed,
        verdict.irreducible == predicted
    )
#end function

def k1_closed_form(a1, a2):
    """Eccentricity spectrum of K_{a1} joined to a2 K_1."""
    center = a1 + a2 - 2 - (a1 - 1) / 2.0
    radius = math.sqrt((a1 - a2 - (a1 - 1) / 2.0) ** 2 + a1 * a2)

    values = [-1.0] * (a1 - 1) + [-2.0] * (a2 - 1) + \
        [center - radius, center + radius]

    return sorted(values)
#end function

def check_k1_closed_form(a1, a2, analysis=None) -> TheoremReport:
    if a1 < 1 or a2 < 1:
        raise EccError("part sizes must be positive.")

    analysis  = _analysis((a1, a2), analysis)
    predicted = k1_closed_form(a1, a2)
    computed  = list(analysis.ecc_spectrum.eigenvalues)
    distance  = sorted_distance(predicted, computed)

    return _report(
        K1_CLOSED_FORM, analysis.seq,
        {"spectrum": predicted},
        {"spectrum": computed, "distance": distance},
        distance <= K1_TOL, K1_TOL
    )
#end function

def structural_vectors(seq: GeneratingSequence):
    """
    Part-difference vectors (+1 on the first vertex of a part, -1 on
    another) for the even and the odd parts, and the indicator of V_2k.
    """
    ranges = seq.part_ranges()
    n      = seq.n
    even, odd = [], []

    for index, part in enumerate(ranges, start=1):
        for other in list(part)[1:]:
            v = np.zeros(n, dtype=np.int64)
            v[part.start] = 1
            v[other]      = -1
            (even if index % 2 == 0 else odd).append(v)
        #end for
    #end for

    z = np.zeros(n, dtype=np.int64)
    z[ranges[-1].start:ranges[-1].stop] = 1

    return even, odd, z
#end function

def check_structural_eigs(seq, analysis=None) -> TheoremReport:
    analysis = _main_scope(seq, analysis, "the structural eigenvalue check")
    seq  = analysis.seq
    ecc  = analysis.ecc.entries
    k    = seq.k
    tail = 2 * (seq.alphas[-1] - 1)

    even, odd, z = structural_vectors(seq)

    residual_x = max(
        (int(np.abs(ecc @ x + 2 * x).max()) for x in even), default=0
    )
    residual_y = max(
        (int(np.abs(ecc @ y).max()) for y in odd), default=0
    )
    residual_z = int(np.abs(ecc @ z - tail * z).max())

    tail_count = analysis.ecc_spectrum.count_near(tail)

    predicted = {
        "m_minus2_at_least": seq.even_sum - k,
        "m0_at_least": seq.odd_sum - k,
        "tail_eigenvalue": tail,
    }
    computed = {
        "m_minus2": analysis.m_minus2,
        "m0": analysis.m0,
        "tail_count": tail_count,
        "residual_minus2": residual_x,
        "residual_zero": residual_y,
        "residual_tail": residual_z,
    }

    passed = analysis.m_minus2 >= seq.even_sum - k and \
        analysis.m0 >= seq.odd_sum - k and \
        tail_count >= 1 and \
        residual_x == 0 and residual_y == 0 and residual_z == 0

    return _report(
        STRUCTURAL_EIGS, seq, predicted, computed, passed,
        analysis.ecc_spectrum.tol_used
    )
#end function

def predicted_multiplicities(seq: GeneratingSequence):
    k = seq.k
    m_minus2 = seq.even_sum - k
    m0 = seq.odd_sum - k + (1 if seq.alpha(2) == 1 else 0)
    return m_minus2, m0
#end function

def check_exact_multiplicities(seq, analysis=None) -> TheoremReport:
    analysis = _main_scope(seq, analysis, "the exact multiplicity check")
    seq = analysis.seq

    m_minus2, m0 = predicted_multiplicities(seq)

    passed = analysis.m_minus2 == m_minus2 and analysis.m0 == m0

    return _report(
        EXACT_MULTIPLICITIES, seq,
        {"m_minus2": m_minus2, "m0": m0},
        {"m_minus2": analysis.m_minus2, "m0": analysis.m0},
        passed, notes=[ERRATUM_M0]
    )
#end function

def check_tridiagonal_ranks(seq, analysis=None) -> TheoremReport:
    analysis = _main_scope(seq, analysis, "the tridiagonal rank check")
    seq    = analysis.seq
    k      = seq.k
    qtilde = analysis.bundle.qtilde
    size   = qtilde.shape[0]

    rank_t  = integer_rank(tridiagonal_t(seq))
    rank_s  = integer_rank(tridiagonal_s(seq))
    rank_q  = integer_rank(qtilde)
    rank_q2 = integer_rank(qtilde + 2 * np.eye(size, dtype=np.int64))

    expected_t = 2 * k - 2 if seq.alpha(2) == 1 else 2 * k - 1

    predicted = {
        "rank_t": expected_t,
        "rank_s": 2 * k - 1,
        "zero_in_quotient": seq.alpha(2) == 1,
    }
    computed = {
        "rank_t": rank_t,
        "rank_s": rank_s,
        "rank_qtilde": rank_q,
        "rank_qtilde_plus_2i": rank_q2,
        "zero_in_quotient": rank_q < size,
    }

    passed = rank_t == expected_t and rank_s == 2 * k - 1 and \
        rank_t == rank_q and rank_s == rank_q2

    return _report(TRIDIAGONAL_RANKS, seq, predicted, computed, passed)
#end function

def predicted_inertia(seq: GeneratingSequence):
    k = seq.k

    if seq.alpha(2) == 1:
        ecc = (seq.even_sum - 1, seq.odd_sum - k + 1, k)
        q2k = (k - 1, 1, k)
    else:
        ecc = (seq.even_sum - 1, seq.odd_sum - k, k + 1)
        q2k = (k - 1, 0, k + 1)

    return ecc, q2k
#end function

def check_inertia(seq, analysis=None) -> TheoremReport:
    analysis = _main_scope(seq, analysis, "the inertia check")
    seq = analysis.seq

    ecc_pred, q2k_pred = predicted_inertia(seq)

    ecc_inertia = analysis.ecc_inertia
    q2k_inertia = analysis.bundle.q2k_inertia(analysis.r_spectrum)

    passed = ecc_inertia.as_tuple() == ecc_pred and \
        q2k_inertia.as_tuple() == q2k_pred

    return _report(
        INERTIA, seq,
        {"ecc": ecc_pred, "q2k": q2k_pred},
        {"ecc": ecc_inertia, "q2k": q2k_inertia},
        passed
    )
#end function

def interval_margins(analysis: CographAnalysis):
    """
    Largest quotient eigenvalue below zero (lambda_minus), its distance
    below the interval, and the smallest positive eccentricity eigenvalue.
    """
    tol = analysis.r_spectrum.tol_used
    q   = analysis.q2k_eigenvalues

    negatives = q[q < -tol]
    lambda_minus = float(negatives.max()) if negatives.size else None

    values    = analysis.ecc_spectrum.values
    positives = values[values > analysis.ecc_spectrum.tol_used]

    return {
        "lambda_minus": lambda_minus,
        "lower": None if lambda_minus is None else FREE_LOW - lambda_minus,
        "upper": float(positives.min()) if positives.size else None,
    }
#end function

def check_interval(seq, analysis=None) -> TheoremReport:
    analysis = _main_scope(seq, analysis, "the eigenvalue-free interval check")
    seq = analysis.seq

    q_tol = analysis.r_spectrum.tol_used
    e_tol = analysis.ecc_spectrum.tol_used

    q_inside = [
        float(x) for x in analysis.q2k_eigenvalues
        if FREE_LOW < x < -q_tol
    ]
    e_inside = [
        float(x) for x in analysis.ecc_spectrum.values
        if FREE_LOW < x < -e_tol and abs(x + 2.0) > e_tol
    ]

    margins = interval_margins(analysis)

    return _report(
        INTERVAL, seq,
        {"quotient_free": [FREE_LOW, 0.0],
         "ecc_free": [[FREE_LOW, -2.0], [-2.0, 0.0]]},
        {"quotient_inside": q_inside, "ecc_inside": e_inside,
         "lambda_minus": margins["lambda_minus"],
         "lower_margin": margins["lower"], "upper_margin": margins["upper"]},
        not q_inside and not e_inside, e_tol
    )
#end function

def assembled_spectrum(seq: GeneratingSequence, q2k_eigenvalues):
    """Quotient eigenvalues plus -2 and 0 at their structural counts."""
    k = seq.k
    values = list(q2k_eigenvalues) + \
        [-2.0] * (seq.even_sum - k) + [0.0] * (seq.odd_sum - k)
    return sorted(float(v) for v in values)
#end function

def ordering_chain(seq: GeneratingSequence, q2k_eigenvalues, tol):
    """
    lambda_{k-1}(Q) < -1-sqrt(2) < -2 < 0 < lambda_k(Q), where for a_2 = 1
    lambda_k(Q) is the simple zero and lambda_{k+1}(Q) is the first positive.
    """
    k = seq.k
    q = np.sort(np.asarray(q2k_eigenvalues, dtype=float))

    below = q[k - 2] < FREE_LOW

    if seq.alpha(2) == 1:
        return bool(below and abs(q[k - 1]) <= tol and q[k] > tol)

    return bool(below and q[k - 1] > tol)
#end function

def check_spectrum_assembly(seq, analysis=None) -> TheoremReport:
    analysis = _main_scope(seq, analysis, "the spectrum assembly check")
    seq = analysis.seq

    q         = analysis.q2k_eigenvalues
    assembled = assembled_spectrum(seq, q)
    direct    = list(analysis.ecc_spectrum.eigenvalues)
    distance  = sorted_distance(assembled, direct)
    chain     = ordering_chain(seq, q, analysis.r_spectrum.tol_used)

    notes = []
    gap = min_gap(assembled)
    confirmed = gap is None or gap > SEPARATION_MIN

    if not confirmed:
        notes.append(
            "comparison unconfirmed: distinct predicted values only {:.3e} "
            "apart.".format(gap)
        )

    return _report(
        SPECTRUM_ASSEMBLY, seq,
        {"spectrum": assembled, "ordering_chain": True},
        {"spectrum": direct, "distance": distance, "ordering_chain": chain,
         "min_gap": gap, "gap_confirmed": confirmed},
        distance < SPECTRAL_TOL and chain, SPECTRAL_TOL, notes
    )
#end function

def check_distinct_count(seq, analysis=None) -> TheoremReport:
    analysis = _main_scope(seq, analysis, "the distinct eigenvalue check")
    seq = analysis.seq

    bound    = 2 * seq.k + 2
    distinct = analysis.ecc_spectrum.distinct_count

    return _report(
        DISTINCT_COUNT, seq,
        {"at_most": bound}, {"distinct": distinct},
        distinct <= bound, analysis.ecc_spectrum.tol_used
    )
#end function

def check_antiregular_lemmas(m) -> TheoremReport:
    if m < 3 or m % 2 == 0:
        raise OutOfScope(
            "the antiregular checks need an odd order m >= 3, got {}."
            .format(m)
        )

    adj      = Cograph.antiregular_adjacency(m)
    inertia  = inertia_of(adj)
    spectrum = eigen_sym(adj.astype(float))
    tol      = spectrum.tol_used

    low  = (-1.0 - math.sqrt(2.0)) / 2.0
    high = (-1.0 + math.sqrt(2.0)) / 2.0

    nontrivial = [
        v for v in spectrum.eigenvalues
        if abs(v) > tol and abs(v + 1.0) > tol
    ]
    inside = [v for v in nontrivial if low <= v <= high]

    shifted   = adj + np.eye(m, dtype=np.int64)
    minus_one = integer_rank(shifted) < m
    half      = (m - 1) // 2

    passed = inertia.as_tuple() == (half, 1, half) and \
        not inside and not minus_one

    return _report(
        ANTIREGULAR, [1] * m,
        {"inertia": (half, 1, half), "free_closed": [low, high],
         "minus_one_eigenvalue": False},
        {"inertia": inertia, "nontrivial_inside": inside,
         "minus_one_eigenvalue": minus_one},
        passed, tol
    )
#end function

def check_antiregular_representations(m) -> TheoremReport:
    """C(1,...,1) with m ones and C(1,2,1,...,1) describe the same graph."""
    if m < 3:
        raise OutOfScope(
            "two representations need m >= 3 vertices, got {}.".format(m)
        )

    ones  = CographAnalysis((1,) * m)
    other = CographAnalysis((1, 2) + (1,) * (m - 3))

    ecc_distance = sorted_distance(
        ones.ecc_spectrum.eigenvalues, other.ecc_spectrum.eigenvalues
    )
    adj_distance = sorted_distance(
        eigen_sym(ones.graph.to_int_matrix()).eigenvalues,
        eigen_sym(other.graph.to_int_matrix()).eigenvalues
    )

    return _report(
        ANTIREGULAR_REPR, ones.seq,
        {"same_spectra_as": list(other.seq.alphas)},
        {"ecc_distance": ecc_distance, "adjacency_distance": adj_distance},
        ecc_distance <= PROPERTY_TOL and adj_distance <= PROPERTY_TOL,
        PROPERTY_TOL
    )
#end function

def check_congruence(seq, analysis=None) -> TheoremReport:
    """
    R and 2(A_{2k-1} + D~) are congruent through D^{1/2}, so they share
    inertia; Weyl bounds place lambda_k(A + D~) in [0, 1) and
    lambda_{k-1}(A + D~) below zero.
    """
    analysis = _main_scope(seq, analysis, "the congruence check")
    seq    = analysis.seq
    k      = seq.k
    bundle = analysis.bundle

    adj    = Cograph.antiregular_adjacency(2 * k - 1)
    dtilde = bundle.dtildevec
    scale  = 1
    for t in dtilde:
        scale = scale * t.denominator // math.gcd(scale, t.denominator)

    # scale * 2(A + D~) is integral, so its nullity is exact
    scaled = 2 * scale * adj.astype(object)
    for i, t in enumerate(dtilde):
        scaled[i, i] = int(2 * scale * t)

    scaled_spectrum = eigen_sym(scaled.astype(float))
    nullity = scaled.shape[0] - integer_rank(scaled)
    congruent_inertia = inertia_from_spectrum(scaled_spectrum, nullity)

    r_inertia = bundle.r_inertia(analysis.r_spectrum)

    shifted = scaled_spectrum.values / (2.0 * scale)
    tol     = scaled_spectrum.tol_used / (2.0 * scale)
    weyl_k  = float(shifted[k - 1])
    weyl_k1 = float(shifted[k - 2])

    identity = float(np.abs(r_from_antiregular(seq) - bundle.r.array).max())

    passed = r_inertia == congruent_inertia and \
        -tol <= weyl_k < 1.0 and weyl_k1 < -tol and identity <= 1e-12

    return _report(
        CONGRUENCE, seq,
        {"same_inertia": True, "lambda_k_range": [0.0, 1.0],
         "lambda_k_minus_1_negative": True, "identity_max_error": 1e-12},
        {"r_inertia": r_inertia, "congruent_inertia": congruent_inertia,
         "lambda_k": weyl_k, "lambda_k_minus_1": weyl_k1,
         "identity_max_error": identity},
        passed, tol
    )
#end function

def submatrix_indices(seq: GeneratingSequence):
    """First vertex of V_1 .. V_{2k-1}, first two vertices of V_{2k}."""
    ranges = seq.part_ranges()
    picks  = [r.start for r in ranges[:-1]]
    return picks + [ranges[-1].start, ranges[-1].start + 1]
#end function

def check_eccentric_submatrix(seq, analysis=None) -> TheoremReport:
    analysis = _main_scope(seq, analysis, "the eccentric submatrix check")
    seq = analysis.seq
    k   = seq.k

    idx = submatrix_indices(seq)
    sub = analysis.ecc.entries[np.ix_(idx, idx)]

    small_seq = GeneratingSequence((1,) * (2 * k - 1) + (2,))
    small     = EccMatrix.of_graph(Cograph.build(small_seq)).entries

    small_spectrum = eigen_sym(small).eigenvalues
    big_spectrum   = analysis.ecc_spectrum.eigenvalues

    exact   = bool(np.array_equal(sub, small))
    interl  = interlaces(big_spectrum, small_spectrum)
    big_k1  = big_spectrum[k - 2]
    small_k1 = small_spectrum[k - 2]

    passed = exact and interl and big_k1 <= small_k1 + PROPERTY_TOL and \
        small_k1 < FREE_LOW

    return _report(
        ECCENTRIC_SUBMATRIX, seq,
        {"principal_submatrix_of": list(small_seq.alphas),
         "interlacing": True, "lambda_k_minus_1_below": FREE_LOW},
        {"principal_submatrix": exact, "interlacing": interl,
         "lambda_k_minus_1": big_k1, "sub_lambda_k_minus_1": small_k1},
        passed, PROPERTY_TOL
    )
#end function

def check_closed_form_matrix(seq, analysis=None) -> TheoremReport:
    """The block builder agrees entrywise with the BFS-derived matrix."""
    analysis = _main_scope(seq, analysis, "the closed-form matrix check")
    seq = analysis.seq

    closed = EccMatrix.closed_form(seq).entries
    direct = analysis.ecc.entries
    diff   = np.argwhere(closed != direct)

    first = None
    if diff.size:
        first = [int(x) + 1 for x in diff[0]]

    return _report(
        CLOSED_FORM_MATRIX, seq,
        {"mismatches": 0},
        {"mismatches": int(diff.shape[0]), "first_mismatch": first},
        diff.size == 0
    )
#end function

def check_quotient_divisibility(seq, analysis=None) -> TheoremReport:
    analysis = _main_scope(seq, analysis, "the quotient divisibility check")
    seq = analysis.seq

    result   = quotient_matrix(analysis.ecc.entries, Partition.canonical(seq))
    matches  = False
    if result.equitable:
        matches = bool(
            np.array_equal(result.as_integer(), analysis.bundle.q2k)
        )

    contained = multiset_contained(
        analysis.q2k_eigenvalues, analysis.ecc_spectrum.eigenvalues,
        SPECTRAL_TOL * max(1.0, analysis.ecc_spectrum.max_abs())
    )

    return _report(
        QUOTIENT_DIVISIBILITY, seq,
        {"equitable": True, "matches_closed_form": True, "contained": True},
        {"equitable": result.equitable, "matches_closed_form": matches,
         "contained": contained},
        result.equitable and matches and contained, SPECTRAL_TOL
    )
#end function

def check_quotient_interlacing(seq, analysis=None) -> TheoremReport:
    analysis = _main_scope(seq, analysis, "the quotient interlacing check")
    seq = analysis.seq

    r_full   = full_r(seq)
    lambdas  = eigen_sym(r_full).eigenvalues
    failures = []

    for t in range(1, r_full.order):
        mus = eigen_sym(r_full.principal(range(t))).eigenvalues
        if not interlaces(lambdas, mus):
            failures.append(t)
    #end for

    distance = sorted_distance(lambdas, analysis.q2k_eigenvalues)

    return _report(
        QUOTIENT_INTERLACING, seq,
        {"failing_sizes": [], "similar_to_quotient": True},
        {"failing_sizes": failures, "quotient_distance": distance},
        not failures and distance <= PROPERTY_TOL, PROPERTY_TOL
    )
#end function

MAIN_SCOPE_CHECKS = (
    check_irreducibility,
    check_closed_form_matrix,
    check_structural_eigs,
    check_exact_multiplicities,
    check_tridiagonal_ranks,
    check_inertia,
    check_interval,
    check_spectrum_assembly,
    check_distinct_count,
    check_congruence,
    check_eccentric_submatrix,
    check_quotient_divisibility,
    check_quotient_interlacing,
)

def applicable_checks(seq, analysis=None) -> List[TheoremReport]:
    """
    Every checker whose hypotheses the sequence meets: the k = 1 lemma for
    l = 2, irreducibility alone for a_2k = 1, everything in main scope.
    """
    analysis = _analysis(seq, analysis)
    seq = analysis.seq

    if seq.k is None:
        raise OutOfScope(
            "no theorem covers the odd-length sequence {}.".format(seq)
        )

    if seq.k == 1:
        return [check_k1_closed_form(seq.alpha(1), seq.alpha(2), analysis)]

    if not seq.in_main_scope:
        return [check_irreducibility(seq, analysis)]

    return [check(seq, analysis) for check in MAIN_SCOPE_CHECKS]
#end function
