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

import os

from eccspectra.error import EccError

class Environment:

    THREADS_VAR   = "ECC_SPECTRA_THREADS"
    LOG_LEVEL_VAR = "ECC_SPECTRA_LOG_LEVEL"

    LOG_LEVELS = ("debug", "info", "warning", "error")

    @staticmethod
    def threads():
        value = os.environ.get(Environment.THREADS_VAR, "").strip()

        if not value:
            return os.cpu_count() or 1

        try:
            threads = int(value)
        except ValueError:
            threads = 0

        if threads < 1:
            raise EccError(
                "{} must be a positive integer, got '{}'."
                .format(Environment.THREADS_VAR, value)
            )

        return threads
    #end function

    @staticmethod
    def log_level():
        value = os.environ.get(Environment.LOG_LEVEL_VAR, "").strip().lower()

        if not value:
            return "warning"

        if value not in Environment.LOG_LEVELS:
            raise EccError(
                "{} must be one of {}, got '{}'.".format(
                    Environment.LOG_LEVEL_VAR,
                    ", ".join(Environment.LOG_LEVELS),
                    value
                )
            )
        #end if

        return value
    #end function

#end class
