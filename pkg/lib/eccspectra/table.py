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

import json
import logging
import os

from dataclasses import dataclass, field
from typing import Dict, List, Tuple

from eccspectra.analysis import CographAnalysis
from eccspectra.error import EccError
from eccspectra.graph import GeneratingSequence

logger = logging.getLogger(__name__)

TABLE_FILE = os.path.join(os.path.dirname(__file__), "data", "table.json")

@dataclass(frozen=True)
class TableRow:
    seq: GeneratingSequence
    printed: Tuple[Tuple[float, int], ...]
    # printed value -> (corrected value, reason)
    corrections: Dict[float, Tuple[float, str]] = field(default_factory=dict)

    @property
    def expected(self):
        result = []
        for value, count in self.printed:
            fixed = self.corrections.get(value)
            result.append((fixed[0] if fixed else value, count))
        return tuple(result)
    #end function

#end class

@dataclass
class RowResult:
    row: TableRow
    computed: Tuple[Tuple[float, int], ...]
    mismatches: List[str] = field(default_factory=list)
    notes: List[str] = field(default_factory=list)

    @property
    def ok(self):
        return not self.mismatches

#end class

class ReferenceTable:

    def __init__(self, rows, tolerance=1e-3):
        self.rows = list(rows)
        self.tolerance = tolerance

    @classmethod
    def load(cls, filename=TABLE_FILE):
        try:
            with open(filename, "r", encoding="utf-8") as f:
                data = json.load(f)
        except (OSError, ValueError) as e:
            raise EccError(
                "failed to load reference table '{}': {}".format(filename, e)
            )

        rows = []

        for entry in data["rows"]:
            corrections = {
                float(c["printed"]): (float(c["corrected"]), c["reason"])
                for c in entry.get("corrections", [])
            }
            rows.append(TableRow(
                GeneratingSequence(tuple(entry["sequence"])),
                tuple((float(v), int(m)) for v, m in entry["spectrum"]),
                corrections
            ))
        #end for

        return cls(rows, float(data.get("tolerance", 1e-3)))
    #end function

    def compare(self, row: TableRow) -> RowResult:
        """
        Match grouped eigenvalues in ascending order: every expected value
        within the tolerance, every multiplicity exact.
        """
        computed = CographAnalysis(row.seq).ecc_spectrum.multiplicities
        result   = RowResult(row, computed)
        expected = row.expected

        if len(expected) != len(computed):
            result.mismatches.append(
                "{} distinct eigenvalues expected, {} computed."
                .format(len(expected), len(computed))
            )

        for (want, want_count), (got, got_count) in zip(expected, computed):
            if abs(want - got) > self.tolerance:
                result.mismatches.append(
                    "eigenvalue {:.4f} computed as {:.6f}.".format(want, got)
                )
            if want_count != got_count:
                result.mismatches.append(
                    "eigenvalue {:.4f} has multiplicity {}, expected {}."
                    .format(want, got_count, want_count)
                )
        #end for

        for printed, (corrected, reason) in sorted(row.corrections.items()):
            note = "erratum: {} printed as {}, corrected to {} ({}).".format(
                row.seq, printed, corrected, reason
            )
            result.notes.append(note)
            logger.warning(note)
        #end for

        return result
    #end function

    def compare_all(self) -> List[RowResult]:
        return [self.compare(row) for row in self.rows]

#end class
