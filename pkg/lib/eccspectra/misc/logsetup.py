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
import sys

from eccspectra.error import EccError

LOG_FORMAT = "%(asctime)s - %(name)s - %(levelname)s - %(message)s"

class LogSetup:

    @staticmethod
    def configure(level="warning", stream=None):
        """
        Attach one handler to the package logger. Calling it again replaces
        the handler instead of stacking a second one.
        """
        numeric = logging.getLevelName(str(level).upper())

        if not isinstance(numeric, int):
            raise EccError("unknown log level '{}'.".format(level))

        logger = logging.getLogger("eccspectra")

        for handler in list(logger.handlers):
            if getattr(handler, "_eccspectra", False):
                logger.removeHandler(handler)
        #end for

        handler = logging.StreamHandler(stream or sys.stderr)
        handler.setFormatter(logging.Formatter(LOG_FORMAT))
        handler._eccspectra = True

        logger.addHandler(handler)
        logger.setLevel(numeric)

        return logger
    #end function

#end class
