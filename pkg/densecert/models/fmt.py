#!/usr/bin/env python3
# -*- coding: utf-8 -*-
# models/fmt.py

"""
Helper functions for formatting pretty representations of densecert objects.
"""

from fractions import Fraction

from .. import config

# REPR_VERBOSITY levels
LOW = 0
MEDIUM = 1
HIGH = 2

# Box drawing and notation
TOP_LEFT_CORNER = "┌"
TOP_RIGHT_CORNER = "┐"
BOTTOM_LEFT_CORNER = "└"
BOTTOM_RIGHT_CORNER = "┘"
HORIZONTAL_BAR = "─"
VERTICAL_SIDE = "│"
HEADER_BAR = "═"
OMEGA = "ω"
EMPTY_SET = "∅"


def make_repr(self, attrs):
    """Return the ``repr`` of ``self``.

    At ``REPR_VERBOSITY = LOW`` this is constructor-style, listing ``attrs``;
    otherwise it is ``str(self)``.
    """
    if config.REPR_VERBOSITY == LOW:
        shown = ", ".join("{}={!r}".format(a, getattr(self, a)) for a in attrs)
        return "{}({})".format(type(self).__name__, shown)
    return str(self)


def box(lines):
    r"""Frame lines of text.

    >>> print(box(['line1', 'line 2']))
    ┌────────┐
    │ line1  │
    │ line 2 │
    └────────┘
    """
    width = max(map(len, lines))
    bar = HORIZONTAL_BAR * (width + 2)
    framed = [TOP_LEFT_CORNER + bar + TOP_RIGHT_CORNER]
    framed += [
        "{0} {1:<{2}} {0}".format(VERTICAL_SIDE, line, width) for line in lines
    ]
    framed.append(BOTTOM_LEFT_CORNER + bar + BOTTOM_RIGHT_CORNER)
    return "\n".join(framed)


def titled(title, block):
    """Center ``title`` above ``block``, underlined to the block's width."""
    width = max(len(title), *(len(line) for line in block.split("\n")))
    return "\n".join([title.center(width), HEADER_BAR * width, block])


def fmt_quadratic(a, b, generator=OMEGA):
    """Format ``a + b*generator`` with exact rational coefficients.

    >>> fmt_quadratic(Fraction(1, 2), -3)
    '1/2 - 3ω'
    >>> fmt_quadratic(0, 1)
    'ω'
    """
    a, b = Fraction(a), Fraction(b)
    if b == 0:
        return str(a)
    coeff = {1: "", -1: "-"}.get(b, str(b))
    if a == 0:
        return coeff + generator
    sign = "-" if b < 0 else "+"
    coeff = {1: ""}.get(abs(b), str(abs(b)))
    return "{} {} {}{}".format(a, sign, coeff, generator)


def fmt_value(value):
    """Render a JSON-ready certificate value as a single line."""
    if isinstance(value, dict):
        return "{" + ", ".join(
            "{}: {}".format(k, fmt_value(v)) for k, v in value.items()
        ) + "}"
    if isinstance(value, (list, tuple)):
        return "[" + ", ".join(fmt_value(v) for v in value) + "]"
    if value is None:
        return EMPTY_SET
    return str(value)


def fmt_report(report):
    """Format a ``Report`` as a boxed block of ``key: value`` lines."""
    body = ["inputs"]
    body += ["  {}: {}".format(k, fmt_value(v)) for k, v in report.inputs.items()]
    body += ["certificate"]
    body += [
        "  {}: {}".format(k, fmt_value(v)) for k, v in report.certificate.items()
    ]
    body += ["elapsed: {} ms".format(report.elapsed_ms)]
    title = "{}  [{}]".format(report.command, report.verdict)
    return titled(title, box(body))
