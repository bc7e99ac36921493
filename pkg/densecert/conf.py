#!/usr/bin/env python3
# -*- coding: utf-8 -*-
# conf.py

"""
Loading a configuration
~~~~~~~~~~~~~~~~~~~~~~~

The search bounds, size caps and output behavior of densecert can be
configured.

When densecert is imported, it checks for a YAML file named
``densecert_config.yml`` in the current directory and automatically loads it if
it exists; otherwise the default configuration is used.

.. only:: never

    This py.test fixture resets the config back to defaults after running this
    doctest. This will not be shown in the output markup.

    >>> getfixture('restore_config_afterwards')

The various settings are listed here with their defaults.

    >>> import densecert
    >>> defaults = densecert.config.defaults()

Print the ``config`` object to see the current settings:

    >>> print(densecert.config)  # doctest: +SKIP
    { 'ABELIAN_CHECK_LIMIT': 10000,
      'ASSOCIATIVITY_SAMPLES': 64,
      'CACHE_LOCAL_QUOTIENTS': True,
      ...

Settings can be changed on the fly by assigning them a new value:

    >>> densecert.config.PROGRESS_BARS = False

It is also possible to manually load a configuration file:

    >>> densecert.config.load_file('densecert_config.yml')

Or load a dictionary of configuration values:

    >>> densecert.config.load_dict({'WITNESS_SEARCH_BOUND': 500})


Search bounds and size caps
~~~~~~~~~~~~~~~~~~~~~~~~~~~

Every search in densecert is bounded. Exceeding a bound is never silent: it
either raises a dedicated exception or downgrades a verdict to
``inconclusive``.

- :attr:`~densecert.conf.DensecertConfig.ELEMENT_CAP`
- :attr:`~densecert.conf.DensecertConfig.FUNDAMENTAL_UNIT_PERIOD_CAP`
- :attr:`~densecert.conf.DensecertConfig.GENERATOR_SEARCH_BOUND`
- :attr:`~densecert.conf.DensecertConfig.PRINCIPAL_POWER_CAP`
- :attr:`~densecert.conf.DensecertConfig.MAX_STABLE_LEVEL`
- :attr:`~densecert.conf.DensecertConfig.WITNESS_SEARCH_BOUND`
- :attr:`~densecert.conf.DensecertConfig.TORUS_SEARCH_BOUND`
- :attr:`~densecert.conf.DensecertConfig.TOPGEN_SEARCH_CAP`
- :attr:`~densecert.conf.DensecertConfig.QUATERNION_MAX_LEVEL`
- :attr:`~densecert.conf.DensecertConfig.QUATERNION_PRESENTATION_LIMIT`


Group checks
~~~~~~~~~~~~

- :attr:`~densecert.conf.DensecertConfig.VALIDATE_GROUPS`
- :attr:`~densecert.conf.DensecertConfig.ABELIAN_CHECK_LIMIT`
- :attr:`~densecert.conf.DensecertConfig.ASSOCIATIVITY_SAMPLES`
- :attr:`~densecert.conf.DensecertConfig.RANDOM_SEED`


Parallelization and system resources
~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~

- :attr:`~densecert.conf.DensecertConfig.PARALLEL_CANDIDATE_SEARCH`
- :attr:`~densecert.conf.DensecertConfig.NUMBER_OF_CORES`
- :attr:`~densecert.conf.DensecertConfig.CACHE_LOCAL_QUOTIENTS`
- :attr:`~densecert.conf.DensecertConfig.MAXIMUM_CACHE_MEMORY_PERCENTAGE`


Logging
~~~~~~~

These settings control how densecert handles messages. Logs can be written to
standard error, a file, both, or none. Reports are the only thing ever written
to standard output.

- :attr:`~densecert.conf.DensecertConfig.LOG_STDOUT_LEVEL`
- :attr:`~densecert.conf.DensecertConfig.LOG_FILE_LEVEL`
- :attr:`~densecert.conf.DensecertConfig.LOG_FILE`
- :attr:`~densecert.conf.DensecertConfig.PROGRESS_BARS`
- :attr:`~densecert.conf.DensecertConfig.REPR_VERBOSITY`


The ``config`` API
~~~~~~~~~~~~~~~~~~
"""

# pylint: disable=protected-access

import contextlib
import logging
import logging.config
import os
import pprint
from copy import copy
from pathlib import Path

import yaml

from . import __about__

log = logging.getLogger(__name__)

_VALID_LOG_LEVELS = [None, "CRITICAL", "ERROR", "WARNING", "INFO", "DEBUG", "NOTSET"]


class Option:
    """A descriptor implementing densecert configuration options.

    Args:
        default: The default value of this ``Option``.

    Keyword Args:
        values (list): Allowed values for this option. A ``ValueError`` will
            be raised if ``values`` is not ``None`` and the option is set to
            be a value not in the list.
        type (type): Required type of the value, or a tuple of types.
        minimum (int): Smallest allowed value for numeric options.
        on_change (function): Optional callback that is called when the value
            of the option is changed. The ``Config`` instance is passed as
            the only argument to the callback.
        doc (str): Optional docstring for the option.
    """

    def __init__(
        self, default, values=None, type=None, minimum=None, on_change=None, doc=None
    ):
        self.default = default
        self.values = values
        self.type = type
        self.minimum = minimum
        self.on_change = on_change
        self.doc = doc
        self.__doc__ = self._docstring()

    def __set_name__(self, owner, name):
        self.name = name

    def _docstring(self):
        parts = ["``default={!r}``".format(self.default)]
        if self.values is not None:
            parts.append("``values={!r}``".format(self.values))
        if self.minimum is not None:
            parts.append("``minimum={!r}``".format(self.minimum))
        if self.on_change is not None:
            parts.append("``on_change={}``".format(self.on_change.__name__))
        return "{}\n{}".format(", ".join(parts), self.doc or "")

    def __get__(self, obj, cls=None):
        if obj is None:
            return self
        return obj._values[self.name]

    def __set__(self, obj, value):
        self._validate(value)
        obj._values[self.name] = value
        self._callback(obj)

    def _validate(self, value):
        """Validate the new value."""
        # ``bool`` is an ``int``; numeric options must not accept flags.
        if self.type is int and isinstance(value, bool):
            raise ValueError(
                "{} must be an integer for {}; got a boolean".format(value, self.name)
            )
        if self.type is not None and not isinstance(value, self.type):
            raise ValueError(
                "{} must be of type {} for {}; got {}".format(
                    value, self.type, self.name, type(value)
                )
            )
        if self.minimum is not None and value < self.minimum:
            raise ValueError(
                "{} is below the minimum {} for {}".format(
                    value, self.minimum, self.name
                )
            )
        if self.values and value not in self.values:
            raise ValueError(
                "{} ({}) is not a valid value for {}; must be one of:\n    {}".format(
                    value,
                    type(value),
                    self.name,
                    "\n    ".join(["{} ({})".format(v, type(v)) for v in self.values]),
                )
            )

    def _callback(self, obj):
        """Trigger any callbacks."""
        if self.on_change is not None:
            self.on_change(obj)


class Config:
    """Base configuration object.

    See ``DensecertConfig`` for usage.
    """

    def __init__(self):
        self._values = {}
        self._loaded_files = []

        for name, opt in self.options().items():
            opt._validate(opt.default)
            self._values[name] = opt.default

        # Hooks run only after every default is in place, since the logging
        # hook reads several options at once.
        for opt in self.options().values():
            opt._callback(self)

    def __str__(self):
        return pprint.pformat(self._values, indent=2)

    def __setattr__(self, name, value):
        if name.startswith("_") or name in self.options().keys():
            super().__setattr__(name, value)
        else:
            raise ValueError("{} is not a valid config option".format(name))

    def __iter__(self):
        return iter(self._values.items())

    @classmethod
    def options(cls):
        """Return a dictionary of the ``Option`` objects for this config."""
        return {k: v for k, v in cls.__dict__.items() if isinstance(v, Option)}

    def defaults(self):
        """Return the default values of this configuration."""
        return {k: v.default for k, v in self.options().items()}

    def load_dict(self, dct):
        """Load a dictionary of configuration values."""
        for k, v in dct.items():
            setattr(self, k, v)

    def load_file(self, filename):
        """Load config from a YAML file."""
        filename = os.path.abspath(filename)

        with open(filename) as f:
            self.load_dict(yaml.safe_load(f) or {})

        self._loaded_files.append(filename)

    def snapshot(self):
        """Return a snapshot of the current values of this configuration."""
        return copy(self._values)

    def override(self, **new_values):
        """Decorator and context manager to override configuration values.

        The initial configuration values are reset after the decorated function
        returns or the context manager completes its block, even if the
        function or block raises an exception.

        Example:
            >>> from densecert import config
            >>> @config.override(WITNESS_SEARCH_BOUND=100)
            ... def test_something():
            ...     assert config.WITNESS_SEARCH_BOUND == 100
            ...
            >>> test_something()
            >>> with config.override(MAX_STABLE_LEVEL=6):
            ...     assert config.MAX_STABLE_LEVEL == 6
            ...
        """
        return _override(self, **new_values)


class _override(contextlib.ContextDecorator):
    """See ``Config.override`` for usage."""

    def __init__(self, conf, **new_values):
        self.conf = conf
        self.new_values = new_values
        self.initial_values = conf.snapshot()

    def __enter__(self):
        """Save original config values; override with new ones."""
        self.conf.load_dict(self.new_values)

    def __exit__(self, *exc):
        """Reset config to initial values; reraise any exceptions."""
        self.conf.load_dict(self.initial_values)
        return False


def configure_logging(conf):
    """Reconfigure densecert logging based on the current configuration."""
    logging.config.dictConfig(
        {
            "version": 1,
            "disable_existing_loggers": False,
            "formatters": {
                "standard": {
                    "format": "%(asctime)s [%(name)s] %(levelname)s "
                    "%(processName)s: %(message)s"
                }
            },
            "handlers": {
                "file": {
                    "level": conf.LOG_FILE_LEVEL,
                    "filename": conf.LOG_FILE,
                    "class": "logging.FileHandler",
                    "formatter": "standard",
                    "delay": True,
                },
                "stdout": {
                    "level": conf.LOG_STDOUT_LEVEL,
                    "class": "densecert.log.TqdmHandler",
                    "formatter": "standard",
                },
            },
            "root": {
                "level": "DEBUG",
                "handlers": (["file"] if conf.LOG_FILE_LEVEL else [])
                + (["stdout"] if conf.LOG_STDOUT_LEVEL else []),
            },
        }
    )


class DensecertConfig(Config):
    """``densecert.config`` is an instance of this class."""

    ELEMENT_CAP = Option(
        10_000_000,
        type=int,
        minimum=1,
        doc="""
    Largest number of elements a subgroup closure or a residue-ring
    enumeration may reach. Exceeding it raises ``ClosureSizeError``. All groups
    are stored by full enumeration, so this is also the memory guard.""",
    )

    FUNDAMENTAL_UNIT_PERIOD_CAP = Option(
        10_000,
        type=int,
        minimum=1,
        doc="""
    Longest continued-fraction period examined when computing the fundamental
    unit of a real quadratic field.""",
    )

    GENERATOR_SEARCH_BOUND = Option(
        1_000_000,
        type=int,
        minimum=1,
        doc="""
    Coordinate bound of the generator search used to decide principality in
    real quadratic fields. When the complete search region exceeds this bound
    the outcome is *unknown* and ``GeneratorSearchBoundError`` is raised.""",
    )

    PRINCIPAL_POWER_CAP = Option(
        64,
        type=int,
        minimum=1,
        doc="""
    Largest exponent tried when looking for the smallest power of a prime ideal
    that has a sign-compatible principal generator.""",
    )

    MAX_STABLE_LEVEL = Option(
        12,
        type=int,
        minimum=1,
        doc="""
    Largest prime-power level examined while stabilizing a local unit
    quotient.""",
    )

    WITNESS_SEARCH_BOUND = Option(
        10_000,
        type=int,
        minimum=2,
        doc="""
    Default bound on the rational primes scanned by the witness-prime
    search.""",
    )

    TORUS_SEARCH_BOUND = Option(
        10_000,
        type=int,
        minimum=2,
        doc="""
    Default bound on the split primes scanned by the norm-one torus
    search.""",
    )

    TOPGEN_SEARCH_CAP = Option(
        1_000_000,
        type=int,
        minimum=2,
        doc="""
    Largest prime examined when searching for a topological generator of the
    p-adic units.""",
    )

    QUATERNION_MAX_LEVEL = Option(
        4,
        type=int,
        minimum=1,
        doc="""
    Largest level m for which the residue ring of a quaternion order modulo
    p^m is enumerated.""",
    )

    QUATERNION_PRESENTATION_LIMIT = Option(
        97,
        type=int,
        minimum=2,
        doc="""
    Largest prime p congruent to 1 mod 4 for which a maximal order of the
    quaternion algebra ramified at p and infinity is constructed. Larger such
    primes are reported as unsupported.""",
    )

    VALIDATE_GROUPS = Option(
        True,
        type=bool,
        doc="""
    Check the identity and inverse laws on every element, and closure and
    associativity on sampled triples, whenever a finite group is built.""",
    )

    ABELIAN_CHECK_LIMIT = Option(
        10_000,
        type=int,
        minimum=1,
        doc="""
    Groups up to this order are checked for commutativity exactly, through a
    generating set; larger groups are checked on sampled pairs.""",
    )

    ASSOCIATIVITY_SAMPLES = Option(
        64,
        type=int,
        minimum=0,
        doc="""
    Number of random triples (and pairs) used for spot checks.""",
    )

    RANDOM_SEED = Option(
        0,
        type=int,
        doc="""
    Seed of the generator used for spot checks. Fixing it keeps every run
    reproducible.""",
    )

    PARALLEL_CANDIDATE_SEARCH = Option(
        False,
        type=bool,
        doc="""
    Evaluate the candidate primes of the witness and torus searches in worker
    processes. The selected result does not depend on this setting.""",
    )

    NUMBER_OF_CORES = Option(
        -1,
        type=int,
        doc="""
    Controls the number of CPU cores used by parallel searches. Negative
    numbers count backwards from the total number of available cores, with
    ``-1`` meaning 'use all available cores.'""",
    )

    CACHE_LOCAL_QUOTIENTS = Option(
        True,
        type=bool,
        doc="""
    Memoize local unit quotients, maximal orders and field descriptors. The
    density and torus computations ask for the same quotient many times.""",
    )

    MAXIMUM_CACHE_MEMORY_PERCENTAGE = Option(
        50,
        type=int,
        minimum=0,
        doc="""
    Memoization stops adding entries once the process uses more than this
    percentage of the system's RAM.""",
    )

    LOG_FILE = Option(
        "densecert.log",
        type=(str, Path),
        on_change=configure_logging,
        doc="""
    Controls the name of the log file.""",
    )

    LOG_FILE_LEVEL = Option(
        "INFO",
        values=_VALID_LOG_LEVELS,
        on_change=configure_logging,
        doc="""
    Controls the level of log messages written to the log file. This setting
    has the same possible values as ``LOG_STDOUT_LEVEL``.""",
    )

    LOG_STDOUT_LEVEL = Option(
        "WARNING",
        values=_VALID_LOG_LEVELS,
        on_change=configure_logging,
        doc="""
    Controls the level of log messages written to the terminal. The messages
    go to standard error. The available levels are ``'CRITICAL'``,
    ``'ERROR'``, ``'WARNING'``, ``'INFO'``, ``'DEBUG'``, ``'NOTSET'`` and
    ``None``, which disables console logging.""",
    )

    PROGRESS_BARS = Option(
        True,
        type=bool,
        doc="""
    Controls whether to show progress bars on the console during long
    searches.""",
    )

    REPR_VERBOSITY = Option(
        2,
        type=int,
        values=[0, 1, 2],
        doc="""
    How verbose the ``repr`` of densecert objects is. At ``0`` the repr shows
    constructor-style attributes; at ``1`` and ``2`` it falls back to the
    human-readable ``str``.""",
    )

    def log(self):
        """Log current settings."""
        log.info("densecert v%s", __about__.__version__)
        if self._loaded_files:
            log.info("Loaded configuration from %s", self._loaded_files)
        else:
            log.info("Using default configuration (no configuration file provided)")
        log.info("Current densecert configuration:\n %s", str(self))


DENSECERT_CONFIG_FILENAME = "densecert_config.yml"

config = DensecertConfig()

# Try and load the config file
if os.path.exists(DENSECERT_CONFIG_FILENAME):
    config.load_file(DENSECERT_CONFIG_FILENAME)

config.log()
