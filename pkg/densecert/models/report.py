#!/usr/bin/env python3
# -*- coding: utf-8 -*-
# models/report.py

"""The certification report emitted by every command."""

from .. import constants, exceptions
from . import fmt


class Report:
    """The outcome of one command.

    ``inputs`` and ``certificate`` are converted to JSON-ready data on
    construction, so a report is a self-contained value: it compares equal to
    its own deserialization.

    Attributes:
        command (str): The subcommand name.
        inputs (dict): The parsed arguments, including defaulted bounds.
        verdict (str): One of ``constants.VERDICTS``.
        certificate (dict): Data that re-verifies the verdict offline.
        elapsed_ms (int): Wall-clock time of the computation.
    """

    #: Fields serialized as native JSON numbers rather than exact strings.
    JSON_NATIVE = ("schema", "elapsed_ms")

    def __init__(self, command, inputs, verdict, certificate=None, elapsed_ms=0):
        # pylint: disable=import-outside-toplevel
        from ..jsonify import jsonify

        if verdict not in constants.VERDICTS:
            raise ValueError(
                "unknown verdict {!r}; expected one of {}".format(
                    verdict, constants.VERDICTS
                )
            )
        self.command = command
        self.inputs = jsonify(dict(inputs))
        self.verdict = verdict
        self.certificate = jsonify(certificate if certificate is not None else {})
        self.elapsed_ms = int(elapsed_ms)

    @property
    def exit_code(self):
        return constants.EXIT_CODES[self.verdict]

    def __eq__(self, other):
        """Reports are equal when everything but the timing agrees."""
        return isinstance(other, Report) and self._key() == other._key()

    def __hash__(self):
        return hash(repr(self._key()))

    def _key(self):
        return (self.command, self.inputs, self.verdict, self.certificate)

    def __str__(self):
        return fmt.fmt_report(self)

    def __repr__(self):
        return fmt.make_repr(self, ["command", "inputs", "verdict", "certificate"])

    def to_json(self):
        return {
            "schema": constants.SCHEMA_VERSION,
            "command": self.command,
            "inputs": self.inputs,
            "verdict": self.verdict,
            "certificate": self.certificate,
            "elapsed_ms": self.elapsed_ms,
        }

    @classmethod
    def from_json(cls, dct):
        if dct.get("schema") != constants.SCHEMA_VERSION:
            raise exceptions.JSONVersionError(
                "report schema {} is not {}".format(
                    dct.get("schema"), constants.SCHEMA_VERSION
                )
            )
        return cls(
            dct["command"],
            dct["inputs"],
            dct["verdict"],
            dct["certificate"],
            dct["elapsed_ms"],
        )
