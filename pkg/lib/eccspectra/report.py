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

import csv
import io
import json
import logging
import textwrap
import time

from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional

import numpy as np

from eccspectra.analysis import CographAnalysis
from eccspectra.eccmatrix import eccentric_graph
from eccspectra.error import UsageError
from eccspectra.graph import GeneratingSequence, SimpleGraph
from eccspectra.linalg import eigen_sym, integer_rank
from eccspectra.quotient import (
    QuotientBundle, build_q2k, tridiagonal_s, tridiagonal_t
)
from eccspectra.theorems import (
    ERRATUM_M0, TheoremReport, applicable_checks, interval_margins
)

logger = logging.getLogger(__name__)

MATRIX_SELECTORS = ("adj", "dist", "ecc", "q2k", "qtilde", "r", "t", "s")
GRAPH_SELECTORS  = ("graph", "eccentric")

CSV_COLUMNS = (
    "sequence", "n", "k", "spectrum", "inertia", "m0", "m_minus2",
    "irreducible", "lambda_minus", "passed", "failed"
)

INTERVAL_NOTE = (
    "the eigenvalue-free interval is open: for a_2 = 1 the simple quotient "
    "eigenvalue 0 sits on its upper endpoint."
)

@dataclass
class SpectralReport:
    sequence: List[int]
    n: int
    k: Optional[int]
    spectrum: List[List[Any]]
    inertia: List[int]
    m0: int
    m_minus2: int
    irreducible: bool
    lambda_minus: Optional[float] = None
    interval_margins: Optional[Dict[str, Optional[float]]] = None
    verdicts: List[TheoremReport] = field(default_factory=list)
    timing_ms: Dict[str, Optional[float]] = field(default_factory=dict)
    notes: List[str] = field(default_factory=list)

    @classmethod
    def build(cls, seq, checks=True):
        """
        Run the direct path (graph, distances, eccentricity matrix, full
        eigensolve) and, in main scope, the closed-form path (quotient
        eigensolve plus exact ranks), timing both.
        """
        analysis = CographAnalysis(seq)
        seq = analysis.seq

        start = time.perf_counter()
        analysis.ecc_spectrum
        analysis.m0
        analysis.m_minus2
        direct_ms = (time.perf_counter() - start) * 1000.0

        closed_ms = None
        if seq.in_main_scope:
            start = time.perf_counter()
            bundle = QuotientBundle.of(seq)
            analysis.bundle = bundle
            analysis.r_spectrum = eigen_sym(bundle.r)
            integer_rank(tridiagonal_t(seq))
            integer_rank(tridiagonal_s(seq))
            closed_ms = (time.perf_counter() - start) * 1000.0
        #end if

        verdicts = applicable_checks(seq, analysis) if checks else []

        report = cls(
            list(seq.alphas),
            seq.n,
            seq.k,
            [[value, count] for value, count in
                analysis.ecc_spectrum.multiplicities],
            list(analysis.ecc_inertia.as_tuple()),
            analysis.m0,
            analysis.m_minus2,
            analysis.irreducibility.irreducible,
            verdicts=verdicts,
            timing_ms={"closed_form": closed_ms, "direct": direct_ms},
        )

        if seq.in_main_scope:
            margins = interval_margins(analysis)
            report.lambda_minus = margins["lambda_minus"]
            report.interval_margins = {
                "lower": margins["lower"], "upper": margins["upper"]
            }
            report.notes.extend([ERRATUM_M0, INTERVAL_NOTE])
        elif seq.k == 1:
            report.notes.append(
                "l = 2: C({},{}) is a clique joined to a coclique, covered by "
                "the k = 1 closed form.".format(*seq.alphas)
            )
        elif seq.k is not None:
            report.notes.append(
                "a_2k = 1: only the irreducibility result applies."
            )
        else:
            report.notes.append(
                "odd-length sequence: no closed form applies."
            )
        #end if

        logger.debug(
            "report for {}: direct {:.3f} ms, closed form {}.".format(
                seq, direct_ms,
                "n/a" if closed_ms is None else "{:.3f} ms".format(closed_ms)
            )
        )

        return report
    #end function

    @property
    def passed(self):
        return all(v.passed for v in self.verdicts)

    @property
    def failures(self):
        return [v for v in self.verdicts if not v.passed]

    def to_dict(self):
        return {
            "sequence":         list(self.sequence),
            "n":                self.n,
            "k":                self.k,
            "spectrum":         [list(pair) for pair in self.spectrum],
            "inertia":          list(self.inertia),
            "m0":               self.m0,
            "m_minus2":         self.m_minus2,
            "irreducible":      self.irreducible,
            "lambda_minus":     self.lambda_minus,
            "interval_margins": self.interval_margins,
            "verdicts":         [v.to_dict() for v in self.verdicts],
            "timing_ms":        dict(self.timing_ms),
            "notes":            list(self.notes),
        }
    #end function

    @classmethod
    def from_dict(cls, d):
        return cls(
            list(d["sequence"]),
            d["n"],
            d["k"],
            [list(pair) for pair in d["spectrum"]],
            list(d["inertia"]),
            d["m0"],
            d["m_minus2"],
            d["irreducible"],
            d.get("lambda_minus"),
            d.get("interval_margins"),
            [TheoremReport.from_dict(v) for v in d.get("verdicts", [])],
            dict(d.get("timing_ms", {})),
            list(d.get("notes", [])),
        )
    #end function

    def to_json(self, indent=2):
        return json.dumps(self.to_dict(), indent=indent)

    @classmethod
    def from_json(cls, text):
        return cls.from_dict(json.loads(text))

#end class

def format_real(x):
    """Reals at 12 significant digits; negative zero prints as 0."""
    text = format(float(x), ".12g")
    return "0" if text == "-0" else text
#end function

def format_spectrum(spectrum, digits=4):
    parts = []

    for value, count in spectrum:
        text = "{:.{}f}".format(value, digits)
        if float(text) == 0.0:
            text = "0"
        parts.append(text if count == 1 else "{}^{}".format(text, count))
    #end for

    return "{" + ", ".join(parts) + "}"
#end function

def write_text(report: SpectralReport, out):
    label = "C({})".format(",".join(str(a) for a in report.sequence))

    def margin(x):
        return "n/a" if x is None else "{:.6f}".format(x)
    #end inline function

    closed = report.timing_ms.get("closed_form")

    out.write(textwrap.dedent(
        """\
        graph:        {label}
        vertices:     {n}
        k:            {k}
        spectrum:     {spectrum}
        inertia:      ({inertia})
        m0 / m-2:     {m0} / {m_minus2}
        irreducible:  {irreducible}
        lambda_minus: {lambda_minus}
        timing:       direct {direct:.3f} ms, closed form {closed}
        """
    ).format(
        label=label,
        n=report.n,
        k="n/a" if report.k is None else report.k,
        spectrum=format_spectrum(report.spectrum),
        inertia=", ".join(str(x) for x in report.inertia),
        m0=report.m0,
        m_minus2=report.m_minus2,
        irreducible="yes" if report.irreducible else "no",
        lambda_minus=margin(report.lambda_minus),
        direct=report.timing_ms.get("direct", 0.0),
        closed="n/a" if closed is None else "{:.3f} ms".format(closed),
    ))

    if report.interval_margins:
        out.write("margins:      lower {}, upper {}\n".format(
            margin(report.interval_margins["lower"]),
            margin(report.interval_margins["upper"])
        ))
    #end if

    if report.verdicts:
        out.write("\n")
        width = max(len(v.theorem) for v in report.verdicts)
        for v in report.verdicts:
            out.write("  {:<{}}  {}\n".format(v.theorem, width, v.verdict))
    #end if

    for note in report.notes:
        out.write("\nnote: {}\n".format(note))
#end function

def write_json(report: SpectralReport, out):
    out.write(report.to_json())
    out.write("\n")
#end function

def write_csv(report: SpectralReport, out, header=True):
    writer = csv.writer(out, lineterminator="\n")

    if header:
        writer.writerow(CSV_COLUMNS)

    writer.writerow([
        ",".join(str(a) for a in report.sequence),
        report.n,
        "" if report.k is None else report.k,
        " ".join(
            "{}^{}".format(format_real(v), c) for v, c in report.spectrum
        ),
        " ".join(str(x) for x in report.inertia),
        report.m0,
        report.m_minus2,
        "true" if report.irreducible else "false",
        "" if report.lambda_minus is None else
            format_real(report.lambda_minus),
        sum(1 for v in report.verdicts if v.passed),
        len(report.failures),
    ])
#end function

def write_report(report: SpectralReport, out, fmt="text"):
    if fmt == "text":
        write_text(report, out)
    elif fmt == "json":
        write_json(report, out)
    elif fmt == "csv":
        write_csv(report, out)
    else:
        raise UsageError("unknown output format '{}'.".format(fmt))
#end function

def select_matrix(seq: GeneratingSequence, which):
    if which not in MATRIX_SELECTORS:
        raise UsageError(
            "unknown matrix '{}', expected one of {}."
            .format(which, ", ".join(MATRIX_SELECTORS))
        )

    if which in ("q2k", "qtilde", "r", "t", "s"):
        seq.require_main_scope("the '{}' matrix".format(which))

    analysis = CographAnalysis(seq)

    if which == "adj":
        return analysis.graph.to_int_matrix()
    if which == "dist":
        return analysis.distances
    if which == "ecc":
        return analysis.ecc.entries
    if which == "q2k":
        return build_q2k(seq)
    if which == "qtilde":
        return build_q2k(seq)[:-1, :-1]
    if which == "r":
        return analysis.bundle.r.array
    if which == "t":
        return tridiagonal_t(seq)

    return tridiagonal_s(seq)
#end function

def write_matrix_csv(m, out):
    """Integers verbatim, reals at 12 significant digits, '\\n' endings."""
    a = np.asarray(m)
    writer = csv.writer(out, lineterminator="\n")

    if a.dtype.kind in "iub":
        for row in a.tolist():
            writer.writerow([int(x) for x in row])
    else:
        for row in a.tolist():
            writer.writerow([format_real(x) for x in row])
    #end if
#end function

def select_graph(seq: GeneratingSequence, which) -> SimpleGraph:
    if which not in GRAPH_SELECTORS:
        raise UsageError(
            "unknown graph '{}', expected one of {}."
            .format(which, ", ".join(GRAPH_SELECTORS))
        )

    graph = CographAnalysis(seq).graph

    if which == "graph":
        return graph

    return eccentric_graph(graph)
#end function

def vertex_names(g: SimpleGraph):
    """p<part>_<index>, both counted from 1."""
    seen  = {}
    names = []

    for part in g.part_labels:
        seen[part] = seen.get(part, 0) + 1
        names.append("p{}_{}".format(part + 1, seen[part]))

    return names
#end function

def write_dot(g: SimpleGraph, out, name="G"):
    names = vertex_names(g)
    adj   = g.adjacency

    out.write("graph \"{}\" {{\n".format(name))

    for v, label in enumerate(names):
        out.write("    {} [part={}];\n".format(label, g.part_labels[v] + 1))

    for u in range(g.n):
        for v in range(u + 1, g.n):
            if adj[u, v]:
                out.write("    {} -- {};\n".format(names[u], names[v]))
        #end for
    #end for

    out.write("}\n")
#end function

def render(writer, *args, **kwargs):
    """Run a stream writer into a string."""
    buf = io.StringIO()
    writer(*args, buf, **kwargs)
    return buf.getvalue()
#end function
