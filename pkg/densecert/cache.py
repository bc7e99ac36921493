#!/usr/bin/env python3
# -*- coding: utf-8 -*-
# cache.py

"""
Memory-limited memoization for expensive, immutable results.

Fields, local unit quotients and maximal orders are pure functions of small
hashable arguments, so they are memoized in-process. Memoization stops adding
entries once the process exceeds ``config.MAXIMUM_CACHE_MEMORY_PERCENTAGE`` of
physical memory.
"""

# pylint: disable=dangerous-default-value

import os
from collections import namedtuple
from functools import update_wrapper

import psutil

from . import config

_CacheInfo = namedtuple("CacheInfo", ["hits", "misses", "currsize"])

#: All caches created by ``cache``, so that tests can clear them together.
_registry = []


def memory_full():
    """Check if the memory is too full for further caching."""
    current_process = psutil.Process(os.getpid())
    return current_process.memory_percent() > config.MAXIMUM_CACHE_MEMORY_PERCENTAGE


def _make_key(args, kwds, kwd_mark=(object(),)):
    """Make a flat cache key from positional and keyword arguments."""
    key = args
    if kwds:
        key += kwd_mark
        for item in sorted(kwds.items()):
            key += item
    return key


def cache(enabled_option=None):
    """Memory-limited cache decorator.

    Arguments to the cached function must be hashable. View the cache
    statistics named tuple (hits, misses, currsize) with ``f.cache_info()``.
    Clear the cache and statistics with ``f.cache_clear()``. Access the
    underlying function with ``f.__wrapped__``.

    Keyword Args:
        enabled_option (str): Name of a boolean config option; while it is
            ``False`` the cache is bypassed.
    """

    def decorating_function(user_function):
        store = {}
        stats = {"hits": 0, "misses": 0}

        def wrapper(*args, **kwds):
            if enabled_option is not None and not getattr(config, enabled_option):
                return user_function(*args, **kwds)
            key = _make_key(args, kwds)
            try:
                result = store[key]
            except KeyError:
                pass
            else:
                stats["hits"] += 1
                return result
            result = user_function(*args, **kwds)
            stats["misses"] += 1
            if not memory_full():
                store[key] = result
            return result

        def cache_info():
            """Report cache statistics."""
            return _CacheInfo(stats["hits"], stats["misses"], len(store))

        def cache_clear():
            """Clear the cache and cache statistics."""
            store.clear()
            stats["hits"] = stats["misses"] = 0

        wrapper.cache_info = cache_info
        wrapper.cache_clear = cache_clear
        _registry.append(wrapper)
        return update_wrapper(wrapper, user_function)

    return decorating_function


def clear_all():
    """Clear every cache created with ``cache``."""
    for cached in _registry:
        cached.cache_clear()
