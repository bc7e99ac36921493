#!/usr/bin/env python3
# -*- coding: utf-8 -*-
# log.py

"""Logging handlers and progress bars that share the terminal."""

import logging
import sys

from tqdm import tqdm


class TqdmHandler(logging.StreamHandler):
    """Logging handler that writes through ``tqdm`` so that long searches can
    log while a progress bar is on screen.

    Records go to standard error; standard output is reserved for reports.
    """

    def __init__(self, stream=None):
        super().__init__(stream if stream is not None else sys.stderr)

    def emit(self, record):
        try:
            msg = self.format(record)
            tqdm.write(msg, file=self.stream, end=self.terminator)
            self.flush()
        except Exception:  # pylint: disable=broad-except
            self.handleError(record)


def progress_bar(total=None, desc="", disable=False):
    """Return a transient ``tqdm`` bar on standard error.

    Args:
        total (int): Number of expected updates, if known.
        desc (str): Label shown in front of the bar.
        disable (bool): Return a silent bar.
    """
    return tqdm(total=total, desc=desc, disable=disable, leave=False, file=sys.stderr)
