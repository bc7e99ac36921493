#!/usr/bin/env python3
# -*- coding: utf-8 -*-
# __main__.py

"""Run the command line with ``python -m densecert``."""

import sys

from .cli import main

if __name__ == "__main__":
    sys.exit(main())
