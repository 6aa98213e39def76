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

import getopt
import json
import logging
import sys
import textwrap

from eccspectra.error import EccError, OutOfScope, UsageError
from eccspectra.graph import GeneratingSequence
from eccspectra.misc.environment import Environment
from eccspectra.misc.logsetup import LogSetup
from eccspectra.report import (
    GRAPH_SELECTORS, MATRIX_SELECTORS, SpectralReport, format_spectrum,
    select_graph, select_matrix, write_dot, write_matrix_csv, write_report
)
from eccspectra.sweep import Sweep
from eccspectra.table import ReferenceTable

EXIT_OK    = 0
EXIT_ERROR = 1
EXIT_USAGE = 2
EXIT_SCOPE = 3
EXIT_INTERRUPTED = 130

OUTPUT_FORMATS = ("text", "json", "csv")

logger = logging.getLogger(__name__)

def _int_option(name, value, minimum=None):
    try:
        number = int(value.strip())
    except ValueError:
        raise UsageError(
            "option {} expects an integer, got '{}'.".format(name, value)
        )

    if minimum is not None and number < minimum:
        raise UsageError(
            "option {} must be at least {}, got {}."
            .format(name, minimum, number)
        )

    return number
#end function

class EccSpectraCLI:

    COMMANDS = ("spectrum", "table", "verify", "matrix", "dot")

    def execute_command(self, *args):
        command = args[0]
        logger.debug("running command '{}'.".format(command))

        if command == "spectrum":
            return self.spectrum(*args[1:])
        elif command == "table":
            return self.table(*args[1:])
        elif command == "verify":
            return self.verify(*args[1:])
        elif command == "matrix":
            return self.matrix(*args[1:])
        elif command == "dot":
            return self.dot(*args[1:])

        raise UsageError("invalid CLI command: {}".format(command))
    #end function

    def spectrum(self, *args):
        def usage(stream=sys.stdout):
            print(textwrap.dedent(
                """
                Usage: ecc-spectra spectrum [OPTIONS] <a1,a2,...>

                OPTIONS:

                 -h,--help            Print this help message and exit immediately.
                 -f,--format <fmt>    Output format, one of text, json, csv (default: text).
                 --no-checks          Only compute the spectrum, skip the theorem checks.
                """  # noqa
            ), file=stream)
        #end inline function

        options = {
            "format":
                "text",
            "checks":
                True
        }

        try:
            opts, args = getopt.gnu_getopt(
                args, "hf:", ["help", "format=", "no-checks"]
            )
        except getopt.GetoptError:
            usage(sys.stderr)
            sys.exit(EXIT_USAGE)

        for o, v in opts:
            if o in ("-h", "--help"):
                usage()
                sys.exit(EXIT_OK)
            elif o in ("-f", "--format"):
                options["format"] = v.strip().lower()
            elif o == "--no-checks":
                options["checks"] = False
        #end for

        if len(args) != 1:
            usage(sys.stderr)
            sys.exit(EXIT_USAGE)

        if options["format"] not in OUTPUT_FORMATS:
            raise UsageError(
                'unknown output format "{}".'.format(options["format"])
            )

        seq = GeneratingSequence.parse(args[0])

        if options["checks"] and seq.k is None:
            raise OutOfScope(
                "no theorem covers the odd-length sequence {}, rerun with "
                "--no-checks.".format(seq)
            )

        report = SpectralReport.build(seq, checks=options["checks"])
        write_report(report, sys.stdout, options["format"])

        return EXIT_OK if report.passed else EXIT_ERROR
    #end function

    def table(self, *args):
        def usage(stream=sys.stdout):
            print(textwrap.dedent(
                """
                Usage: ecc-spectra table [OPTIONS]

                OPTIONS:

                 -h,--help            Print this help message and exit immediately.
                """  # noqa
            ), file=stream)
        #end inline function

        try:
            opts, args = getopt.gnu_getopt(args, "h", ["help"])
        except getopt.GetoptError:
            usage(sys.stderr)
            sys.exit(EXIT_USAGE)

        for o, v in opts:
            if o in ("-h", "--help"):
                usage()
                sys.exit(EXIT_OK)
        #end for

        if len(args) != 0:
            usage(sys.stderr)
            sys.exit(EXIT_USAGE)

        table   = ReferenceTable.load()
        results = table.compare_all()
        width   = max(len(str(r.row.seq)) for r in results)
        notes   = []

        for result in results:
            print("{:<{}}  reference {}".format(
                str(result.row.seq), width,
                format_spectrum(result.row.expected)
            ))
            print("{:<{}}  computed  {}  {}".format(
                "", width, format_spectrum(result.computed),
                "ok" if result.ok else "MISMATCH"
            ))

            for mismatch in result.mismatches:
                print("{:<{}}  - {}".format("", width, mismatch))

            notes.extend(result.notes)
        #end for

        for note in notes:
            print("\nnote: {}".format(note))

        failed = [r for r in results if not r.ok]

        print("\n{} of {} rows match within {}.".format(
            len(results) - len(failed), len(results), table.tolerance
        ))

        return EXIT_ERROR if failed else EXIT_OK
    #end function

    def verify(self, *args):
        def usage(stream=sys.stdout):
            print(textwrap.dedent(
                """
                Usage: ecc-spectra verify [OPTIONS]

                OPTIONS:

                 -h,--help            Print this help message and exit immediately.
                 -n,--trials <int>    Number of random sequences to check (default: 500).
                 --max-k <int>        Largest half-length k to sample (default: 6).
                 --max-alpha <int>    Largest part size to sample (default: 5).
                 -s,--seed <int>      Seed of the sequence sampler (default: 42).
                 -j,--jobs <int>      Worker processes, at most ECC_SPECTRA_THREADS or
                                      the number of CPUs (default: that cap).
                """  # noqa
            ), file=stream)
        #end inline function

        options = {
            "trials":
                500,
            "max_k":
                6,
            "max_alpha":
                5,
            "seed":
                42,
            "jobs":
                None
        }

        try:
            opts, args = getopt.gnu_getopt(
                args, "hn:s:j:", [
                    "help", "trials=", "max-k=", "max-alpha=", "seed=",
                    "jobs="
                ]
            )
        except getopt.GetoptError:
            usage(sys.stderr)
            sys.exit(EXIT_USAGE)

        for o, v in opts:
            if o in ("-h", "--help"):
                usage()
                sys.exit(EXIT_OK)
            elif o in ("-n", "--trials"):
                options["trials"] = _int_option(o, v)
            elif o == "--max-k":
                options["max_k"] = _int_option(o, v)
            elif o == "--max-alpha":
                options["max_alpha"] = _int_option(o, v)
            elif o in ("-s", "--seed"):
                options["seed"] = _int_option(o, v, minimum=0)
            elif o in ("-j", "--jobs"):
                options["jobs"] = _int_option(o, v, minimum=1)
        #end for

        if len(args) != 0:
            usage(sys.stderr)
            sys.exit(EXIT_USAGE)

        summary = Sweep(**options).run()
        width   = max(len(t) for t in summary.theorems())

        print("verify: {} trials, seed {}".format(
            summary.trials, summary.seed
        ))
        print("")

        for theorem in summary.theorems():
            print("  {:<{}}  {:>5} passed  {:>3} failed".format(
                theorem, width,
                summary.passed.get(theorem, 0),
                summary.failed.get(theorem, 0)
            ))
        #end for

        def margin(x):
            return "n/a" if x is None else "{:.6f}".format(x)
        #end inline function

        print("\nminimum interval margins: lower {}, upper {}".format(
            margin(summary.min_lower_margin), margin(summary.min_upper_margin)
        ))

        if not summary.ok:
            print("\nfirst failure:")
            print(json.dumps(summary.failures[0].to_dict(), indent=2))
            return EXIT_ERROR
        #end if

        return EXIT_OK
    #end function

    def matrix(self, *args):
        def usage(stream=sys.stdout):
            print(textwrap.dedent(
                """
                Usage: ecc-spectra matrix [OPTIONS] <a1,a2,...>

                OPTIONS:

                 -h,--help            Print this help message and exit immediately.
                 -w,--which <matrix>  One of adj, dist, ecc, q2k, qtilde, r, t, s
                                      (default: ecc).
                """  # noqa
            ), file=stream)
        #end inline function

        options = {
            "which":
                "ecc"
        }

        try:
            opts, args = getopt.gnu_getopt(args, "hw:", ["help", "which="])
        except getopt.GetoptError:
            usage(sys.stderr)
            sys.exit(EXIT_USAGE)

        for o, v in opts:
            if o in ("-h", "--help"):
                usage()
                sys.exit(EXIT_OK)
            elif o in ("-w", "--which"):
                options["which"] = v.strip().lower()
        #end for

        if len(args) != 1:
            usage(sys.stderr)
            sys.exit(EXIT_USAGE)

        if options["which"] not in MATRIX_SELECTORS:
            raise UsageError('unknown matrix "{}".'.format(options["which"]))

        seq = GeneratingSequence.parse(args[0])
        write_matrix_csv(select_matrix(seq, options["which"]), sys.stdout)

        return EXIT_OK
    #end function

    def dot(self, *args):
        def usage(stream=sys.stdout):
            print(textwrap.dedent(
                """
                Usage: ecc-spectra dot [OPTIONS] <a1,a2,...>

                OPTIONS:

                 -h,--help            Print this help message and exit immediately.
                 -w,--which <graph>   One of graph, eccentric (default: graph).
                """  # noqa
            ), file=stream)
        #end inline function

        options = {
            "which":
                "graph"
        }

        try:
            opts, args = getopt.gnu_getopt(args, "hw:", ["help", "which="])
        except getopt.GetoptError:
            usage(sys.stderr)
            sys.exit(EXIT_USAGE)

        for o, v in opts:
            if o in ("-h", "--help"):
                usage()
                sys.exit(EXIT_OK)
            elif o in ("-w", "--which"):
                options["which"] = v.strip().lower()
        #end for

        if len(args) != 1:
            usage(sys.stderr)
            sys.exit(EXIT_USAGE)

        if options["which"] not in GRAPH_SELECTORS:
            raise UsageError('unknown graph "{}".'.format(options["which"]))

        seq = GeneratingSequence.parse(args[0])
        write_dot(select_graph(seq, options["which"]), sys.stdout, str(seq))

        return EXIT_OK
    #end function

#end class

def usage(stream=sys.stdout):
    print(textwrap.dedent(
        """
        Usage: ecc-spectra [OPTIONS] <command> [ARGS]

        COMMANDS:

         spectrum     Eccentricity spectrum of one C-graph with theorem checks.
         table        Reproduce the reference spectrum table.
         verify       Check every theorem on randomly sampled sequences.
         matrix       Print one of the associated matrices as CSV.
         dot          Print the graph or its eccentric graph in DOT format.

        OPTIONS:

         -h,--help            Print this help message and exit immediately.
         -v,--verbose         Log debug messages to stderr.

        Type 'ecc-spectra <command> --help' for help on a specific command.
        """  # noqa
    ), file=stream)
#end function

def main(argv=None):
    argv = sys.argv[1:] if argv is None else list(argv)

    try:
        opts, args = getopt.getopt(argv, "hv", ["help", "verbose"])
    except getopt.GetoptError:
        usage(sys.stderr)
        return EXIT_USAGE

    verbose = False

    for o, v in opts:
        if o in ("-h", "--help"):
            usage()
            return EXIT_OK
        elif o in ("-v", "--verbose"):
            verbose = True
    #end for

    if not args:
        usage(sys.stderr)
        return EXIT_USAGE

    try:
        LogSetup.configure("debug" if verbose else Environment.log_level())
        return EccSpectraCLI().execute_command(*args)
    except EccError as e:
        sys.stderr.write("ecc-spectra: error: {}\n".format(e))
        return e.exit_code
    except KeyboardInterrupt:
        return EXIT_INTERRUPTED
#end function
