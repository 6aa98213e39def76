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
import multiprocessing

from dataclasses import dataclass, field
from typing import Dict, List, Optional

import numpy as np

from eccspectra.error import UsageError
from eccspectra.graph import GeneratingSequence
from eccspectra.misc.environment import Environment
from eccspectra.theorems import (
    INTERVAL, TheoremReport, applicable_checks, check_antiregular_lemmas,
    check_antiregular_representations, check_irreducibility,
    check_k1_closed_form
)

logger = logging.getLogger(__name__)

ANTIREGULAR_MAX_ORDER = 21
K1_MAX_PART = 6

def trial_rng(seed, index):
    """One independent stream per trial, so results never depend on order."""
    return np.random.default_rng([seed, index])

def sample_sequence(rng, max_k, max_alpha) -> GeneratingSequence:
    k = int(rng.integers(2, max_k + 1))
    alphas = [int(a) for a in rng.integers(1, max_alpha + 1, size=2 * k)]
    # a_2k is drawn from [2, max_alpha] to stay in main scope
    alphas[-1] = int(rng.integers(2, max_alpha + 1))
    return GeneratingSequence(tuple(alphas))
#end function

@dataclass
class TrialResult:
    index: int
    sequence: List[int]
    reports: List[TheoremReport]

    @property
    def failures(self):
        return [r for r in self.reports if not r.passed]

#end class

def run_trial(task) -> TrialResult:
    """
    Sample one main-scope sequence, run every checker on it, then run the
    irreducibility check on the same sequence with a_2k set to 1.
    """
    seed, index, max_k, max_alpha = task

    seq     = sample_sequence(trial_rng(seed, index), max_k, max_alpha)
    reports = applicable_checks(seq)

    reducible_twin = GeneratingSequence(seq.alphas[:-1] + (1,))
    reports.append(check_irreducibility(reducible_twin))

    return TrialResult(index, list(seq.alphas), reports)
#end function

def fixed_suite_reports() -> List[TheoremReport]:
    reports = []

    for m in range(3, ANTIREGULAR_MAX_ORDER + 1, 2):
        reports.append(check_antiregular_lemmas(m))
        reports.append(check_antiregular_representations(m))
    #end for

    for a1 in range(1, K1_MAX_PART + 1):
        for a2 in range(1, K1_MAX_PART + 1):
            reports.append(check_k1_closed_form(a1, a2))
    #end for

    return reports
#end function

@dataclass
class SweepSummary:
    trials: int
    seed: int
    passed: Dict[str, int] = field(default_factory=dict)
    failed: Dict[str, int] = field(default_factory=dict)
    failures: List[TheoremReport] = field(default_factory=list)
    min_lower_margin: Optional[float] = None
    min_upper_margin: Optional[float] = None

    @property
    def ok(self):
        return not self.failures

    def add(self, report: TheoremReport):
        bucket = self.passed if report.passed else self.failed
        bucket[report.theorem] = bucket.get(report.theorem, 0) + 1

        if not report.passed:
            self.failures.append(report)

        if report.theorem == INTERVAL:
            self.min_lower_margin = _min(
                self.min_lower_margin, report.computed.get("lower_margin")
            )
            self.min_upper_margin = _min(
                self.min_upper_margin, report.computed.get("upper_margin")
            )
        #end if
    #end function

    def theorems(self):
        return sorted(set(self.passed) | set(self.failed))

#end class

def _min(current, value):
    if value is None:
        return current
    if current is None:
        return value
    return min(current, value)
#end function

class Sweep:

    def __init__(self, trials=500, max_k=6, max_alpha=5, seed=42, jobs=None):
        if trials < 1:
            raise UsageError("the number of trials must be at least 1.")
        if max_k < 2:
            raise UsageError("--max-k must be at least 2.")
        if max_alpha < 2:
            raise UsageError("--max-alpha must be at least 2.")
        if jobs is not None and jobs < 1:
            raise UsageError("the number of jobs must be at least 1.")

        self.trials    = trials
        self.max_k     = max_k
        self.max_alpha = max_alpha
        self.seed      = seed
        self.jobs      = jobs
    #end function

    def tasks(self):
        return [
            (self.seed, index, self.max_k, self.max_alpha)
            for index in range(self.trials)
        ]
    #end function

    def worker_count(self):
        """Requested jobs capped by ECC_SPECTRA_THREADS and the trials."""
        cap  = Environment.threads()
        jobs = min(self.jobs or cap, cap)
        return max(1, min(jobs, self.trials))
    #end function

    def run_trials(self) -> List[TrialResult]:
        jobs = self.worker_count()

        logger.debug(
            "running {} trials on {} worker(s).".format(self.trials, jobs)
        )

        if jobs == 1:
            return [run_trial(task) for task in self.tasks()]

        chunksize = max(1, self.trials // (4 * jobs))

        with multiprocessing.Pool(jobs) as pool:
            # imap keeps task order
            return list(pool.imap(run_trial, self.tasks(), chunksize))
    #end function

    def run(self) -> SweepSummary:
        summary = SweepSummary(self.trials, self.seed)

        for trial in self.run_trials():
            for report in trial.reports:
                summary.add(report)
        #end for

        for report in fixed_suite_reports():
            summary.add(report)

        logger.debug(
            "sweep finished: {} passed, {} failed.".format(
                sum(summary.passed.values()), len(summary.failures)
            )
        )

        return summary
    #end function

#end class
