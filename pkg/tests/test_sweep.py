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

import numpy as np
import pytest

from eccspectra.error import UsageError
from eccspectra.sweep import (
    Sweep, SweepSummary, fixed_suite_reports, run_trial, sample_sequence,
    trial_rng
)
from eccspectra.theorems import TheoremReport

def test_sampler_stays_in_main_scope():
    rng = np.random.default_rng(0)
    for _ in range(200):
        seq = sample_sequence(rng, 6, 5)
        assert seq.in_main_scope
        assert 2 <= seq.k <= 6
        assert max(seq.alphas) <= 5
    #end for
#end function

def test_trial_streams_are_reproducible():
    a = sample_sequence(trial_rng(42, 3), 6, 5)
    b = sample_sequence(trial_rng(42, 3), 6, 5)
    assert a == b
#end function

def test_trial_runs_both_branches():
    trial = run_trial((7, 0, 3, 3))
    theorems = [r.theorem for r in trial.reports]

    assert theorems.count("irreducibility") == 2
    assert trial.reports[-1].computed["irreducible"]
    assert trial.reports[-1].sequence[-1] == 1
    assert not trial.failures
#end function

def test_fixed_suites_pass():
    reports = fixed_suite_reports()
    assert all(r.passed for r in reports)
    assert sum(1 for r in reports if r.theorem == "k1-closed-form") == 36
#end function

@pytest.mark.parametrize("kwargs", [
    {"trials": 0},
    {"max_k": 1},
    {"max_alpha": 1},
    {"jobs": 0},
])
def test_invalid_parameters(kwargs):
    with pytest.raises(UsageError):
        Sweep(**kwargs)

def test_small_sweep_passes():
    summary = Sweep(trials=6, max_k=3, max_alpha=3, seed=5, jobs=1).run()
    assert summary.ok
    assert summary.passed["irreducibility"] == 12
    assert summary.min_lower_margin > 0.0
#end function

def test_parallel_sweep_matches_inline():
    inline = Sweep(trials=4, max_k=3, max_alpha=3, seed=9, jobs=1)
    pooled = Sweep(trials=4, max_k=3, max_alpha=3, seed=9, jobs=2)

    a = [(t.index, t.sequence) for t in inline.run_trials()]
    b = [(t.index, t.sequence) for t in pooled.run_trials()]
    assert a == b
#end function

def test_jobs_default_to_environment(monkeypatch):
    monkeypatch.setenv("ECC_SPECTRA_THREADS", "1")
    trials = Sweep(trials=2, max_k=2, max_alpha=2, seed=1).run_trials()
    assert [t.index for t in trials] == [0, 1]
#end function

def test_summary_collects_failures():
    summary = SweepSummary(1, 0)
    summary.add(TheoremReport("inertia", [1, 2], {}, {}, "FAIL"))
    summary.add(TheoremReport("inertia", [1, 2], {}, {}, "PASS"))

    assert not summary.ok
    assert summary.failed == {"inertia": 1}
    assert summary.passed == {"inertia": 1}
    assert summary.theorems() == ["inertia"]
#end function

def test_environment_caps_requested_jobs(monkeypatch):
    monkeypatch.setenv("ECC_SPECTRA_THREADS", "2")

    assert Sweep(trials=10, jobs=8).worker_count() == 2
    assert Sweep(trials=10, jobs=1).worker_count() == 1
    assert Sweep(trials=10).worker_count() == 2
    assert Sweep(trials=1, jobs=2).worker_count() == 1
#end function
