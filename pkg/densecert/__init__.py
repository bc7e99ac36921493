#!/usr/bin/env python3
# -*- coding: utf-8 -*-
# __init__.py

"""
=========
densecert
=========

densecert certifies, at finite level and with exact arithmetic, statements
about the density of S-unit groups of quadratic fields in local unit groups,
the invariants of quadratic Weil numbers, and the approximation of stabilizer
groups and norm-one tori by global units.


Usage
~~~~~

Fields are built with |make_field|; every computation takes a field and a
rational prime, which selects the distinguished prime ideal above it. The
|density| module decides density and searches for minimal witness sets,
|hondatate| analyzes Weil numbers, |stabilizer| and |quaternion| certify
approximation results, and |cli| exposes all of it on the command line::

    densecert g-invariant -d 2 -p 2 --sigma all


Configuration (optional)
~~~~~~~~~~~~~~~~~~~~~~~~

Search bounds, enumeration caps, caching, parallelism and logging are
controlled by package-level options. These are loaded from a YAML
configuration file, ``densecert_config.yml``, in the directory where densecert
is run. If there is no such file, the default configuration is used.

See the documentation for the |config| module for a description of the
options and their defaults.
"""

from .__about__ import *  # pylint: disable=wildcard-import

from .conf import config

from . import (
    constants,
    density,
    exceptions,
    fingroup,
    forms,
    hondatate,
    jsonify,
    localunits,
    models,
    quadfield,
    quaternion,
    stabilizer,
    utils,
    validate,
)
from .quadfield import make_field

__all__ = [
    "config",
    "constants",
    "density",
    "exceptions",
    "fingroup",
    "forms",
    "hondatate",
    "jsonify",
    "localunits",
    "make_field",
    "models",
    "quadfield",
    "quaternion",
    "stabilizer",
    "utils",
    "validate",
]
