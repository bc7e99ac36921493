#!/usr/bin/env python3
# -*- coding: utf-8 -*-
# __about__.py

"""densecert metadata."""

__title__ = "densecert"
__version__ = "0.3.0"
__description__ = (
    "Finite-level certification of S-unit density, Honda-Tate classes and "
    "stabilizer-group approximation for quadratic fields and quaternion orders."
)
__author__ = "densecert developers"
__author_email__ = "densecert@users.noreply.github.com"
__copyright__ = "Copyright 2024 densecert developers"
__license__ = "GNU General Public License v3.0"
__url__ = "https://github.com/densecert/densecert"

__all__ = [
    "__title__",
    "__version__",
    "__description__",
    "__author__",
    "__author_email__",
    "__copyright__",
    "__license__",
    "__url__",
]
