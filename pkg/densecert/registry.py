#!/usr/bin/env python3
# -*- coding: utf-8 -*-
# registry.py

"""
Name-keyed registries for command handlers and maximal-order presentations.
"""

import collections.abc


class Registry(collections.abc.Mapping):
    """Named callables, kept in registration order.

    Keyword arguments passed to ``register`` are set as attributes of the
    registered callable, so an entry carries its own metadata (the help text
    of a command, the primes a presentation covers).

    See ``densecert.cli.COMMANDS`` and ``densecert.quaternion.PRESENTATIONS``.
    """

    #: Plural noun used in error messages.
    desc = "entries"

    def __init__(self):
        self._entries = {}

    def register(self, name, **attributes):
        """Decorator registering a callable under ``name``.

        Raises:
            KeyError: If ``name`` is taken.
        """

        def decorator(func):
            if name in self._entries:
                raise KeyError("{!r} is already one of the {}".format(name, self.desc))
            for key, value in attributes.items():
                setattr(func, key, value)
            self._entries[name] = func
            return func

        return decorator

    def all(self):
        """Return the registered names."""
        return list(self._entries)

    def first(self, predicate):
        """Return the name of the earliest entry satisfying ``predicate``.

        Raises:
            KeyError: If no entry does.
        """
        for name, func in self._entries.items():
            if predicate(func):
                return name
        raise KeyError("none of the {} {} applies".format(self.desc, self.all()))

    def __iter__(self):
        return iter(self._entries)

    def __len__(self):
        return len(self._entries)

    def __getitem__(self, name):
        if name not in self._entries:
            raise KeyError(
                "{!r} is not one of the {} {}".format(name, self.desc, self.all())
            )
        return self._entries[name]
