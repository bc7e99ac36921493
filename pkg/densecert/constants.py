#!/usr/bin/env python3
# -*- coding: utf-8 -*-
# constants.py

"""
Package-wide constants.
"""

#: Version of the JSON report layout.
SCHEMA_VERSION = 1

#: Real places of a real quadratic field. Place ``0`` sends sqrt(d) to the
#: positive square root, place ``1`` to the negative one.
REAL_PLACES = (0, 1)

#: Verdicts that exit with status 0.
SUCCESS_VERDICTS = ("dense", "accepted", "found", "verified")

#: Verdicts that exit with status 1.
FAILURE_VERDICTS = ("not-dense", "rejected", "exhausted", "failed")

#: Verdict that exits with status 2.
INCONCLUSIVE = "inconclusive"

#: All verdicts a report may carry.
VERDICTS = SUCCESS_VERDICTS + FAILURE_VERDICTS + (INCONCLUSIVE,)

#: Exit status for malformed invocations (``EX_USAGE`` from sysexits.h).
EXIT_USAGE = 64

EXIT_CODES = dict(
    [(v, 0) for v in SUCCESS_VERDICTS]
    + [(v, 1) for v in FAILURE_VERDICTS]
    + [(INCONCLUSIVE, 2)]
)
