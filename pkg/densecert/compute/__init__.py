#!/usr/bin/env python3
# -*- coding: utf-8 -*-
# compute/__init__.py

"""
Engines for running candidate searches sequentially or in worker processes.
"""

from .parallel import CandidateSearch, WorkerPool, get_num_processes

__all__ = ["CandidateSearch", "WorkerPool", "get_num_processes"]
