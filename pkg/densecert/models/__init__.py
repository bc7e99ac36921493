#!/usr/bin/env python3
# -*- coding: utf-8 -*-
# models/__init__.py

"""
See |models.report| for the certification report and |models.fmt| for text
formatting helpers.

Attributes:
    Report: Alias for :class:`densecert.models.report.Report`.
"""

# pylint: disable=unused-import

from . import cmp, fmt
from .report import Report
