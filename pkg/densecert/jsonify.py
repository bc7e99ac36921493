#!/usr/bin/env python3
# -*- coding: utf-8 -*-
# jsonify.py

"""
Exact, NumPy-aware JSON serialization of certificates.

Objects take part by implementing a ``to_json`` method which returns a
dictionary (or a string, for compact values such as field elements and
ideals). Integers and fractions are written as decimal strings so that no
consumer rounds them; booleans and ``None`` stay native.

Loadable models (currently only ``Report``) additionally carry their class
name and the densecert version. The decoder uses this metadata to rebuild
them, and refuses JSON written by a different version::

    >>> from densecert.models import Report
    >>> r = Report('fiber', {'d': -1, 'p': 2}, 'found', {'kind': 'Multiplicative'})
    >>> loads(dumps(r)) == r
    True
"""

import json
from fractions import Fraction

import numpy as np

from . import __about__, exceptions

CLASS_KEY = "__class__"
VERSION_KEY = "__version__"


def _loadable_models():
    """A dictionary of loadable densecert models.

    These are stored in this function (instead of module scope) to resolve
    circular import issues.
    """
    # pylint: disable=import-outside-toplevel
    from .models import Report

    classes = [Report]
    return {cls.__name__: cls for cls in classes}


def _jsonify_dict(dct, native=()):
    return {
        key: value if key in native else jsonify(value) for key, value in dct.items()
    }


def _push_metadata(dct, obj):
    dct.update(
        {CLASS_KEY: obj.__class__.__name__, VERSION_KEY: __about__.__version__}
    )
    return dct


def _pop_metadata(dct):
    return dct.pop(CLASS_KEY), dct.pop(VERSION_KEY)


def jsonify(obj):  # pylint: disable=too-many-return-statements
    """Return a JSON-encodable representation of an object, recursively using
    any available ``to_json`` methods and writing exact numbers as strings.
    """
    if obj is None or isinstance(obj, (bool, np.bool_)):
        return None if obj is None else bool(obj)

    if isinstance(obj, str):
        return obj

    # Exact numbers become decimal strings.
    if isinstance(obj, (int, Fraction, np.integer)):
        return str(obj)
    if isinstance(obj, np.floating):
        return float(obj)
    if isinstance(obj, float):
        return obj

    # Call the `to_json` method if available, adding metadata to models.
    if hasattr(obj, "to_json"):
        d = obj.to_json()
        if not isinstance(d, dict):
            return jsonify(d)
        if obj.__class__.__name__ in _loadable_models():
            native = getattr(obj, "JSON_NATIVE", ())
            return _push_metadata(_jsonify_dict(d, native), obj)
        return _jsonify_dict(d)

    if isinstance(obj, np.ndarray):
        return jsonify(obj.tolist())

    if isinstance(obj, dict):
        return {str(key): jsonify(value) for key, value in obj.items()}

    if isinstance(obj, (list, tuple, set, frozenset)):
        items = sorted(obj) if isinstance(obj, (set, frozenset)) else obj
        return [jsonify(item) for item in items]

    # Recurse over object dictionaries.
    if hasattr(obj, "__dict__"):
        return _jsonify_dict(obj.__dict__)

    # Otherwise, give up and hope it's serializable.
    return obj


class DensecertJSONEncoder(json.JSONEncoder):
    """JSONEncoder that allows serializing densecert objects with
    ``jsonify``.

    Both ``json.dump`` and ``json.dumps`` reach ``iterencode``, so ``jsonify``
    runs exactly once per object.
    """

    def iterencode(self, obj, _one_shot=False):
        """Encode the output of ``jsonify`` with the default encoder."""
        return super().iterencode(jsonify(obj), _one_shot)


def _encoder_kwargs(user_kwargs):
    """Update kwargs for `dump` and `dumps` to use the densecert encoder."""
    kwargs = {
        "separators": (",", ":"),
        "ensure_ascii": False,
        "cls": DensecertJSONEncoder,
    }
    kwargs.update(user_kwargs)
    return kwargs


def dumps(obj, **user_kwargs):
    """Serialize ``obj`` as JSON-formatted stream."""
    return json.dumps(obj, **_encoder_kwargs(user_kwargs))


def dump(obj, fp, **user_kwargs):
    """Serialize ``obj`` as a JSON-formatted stream and write to ``fp`` (a
    ``.write()``-supporting file-like object.
    """
    return json.dump(obj, fp, **_encoder_kwargs(user_kwargs))


def _check_version(version):
    """Check whether the JSON version matches the densecert version."""
    if version != __about__.__version__:
        raise exceptions.JSONVersionError(
            "Cannot load JSON from a different version of densecert. "
            "JSON version = {0}, current version = {1}.".format(
                version, __about__.__version__
            )
        )


def _is_model(dct):
    """Check if ``dct`` is a densecert model serialization."""
    return CLASS_KEY in dct


class DensecertJSONDecoder(json.JSONDecoder):
    """Extension of the default decoder which automatically deserializes
    densecert JSON to the appropriate model classes.
    """

    def __init__(self, *args, **kwargs):
        kwargs["object_hook"] = self._load_object
        super().__init__(*args, **kwargs)
        self._models = _loadable_models()

    def _load_object(self, obj):
        if _is_model(obj):
            return self._load_model(obj)
        return obj

    def _load_model(self, dct):
        """Load a serialized densecert model."""
        classname, version = _pop_metadata(dct)
        _check_version(version)
        cls = self._models[classname]

        # Use `from_json` if available
        if hasattr(cls, "from_json"):
            return cls.from_json(dct)

        # Default to object constructor
        return cls(**dct)


def loads(string):
    """Deserialize a JSON string to a Python object."""
    return json.loads(string, cls=DensecertJSONDecoder)


def load(fp):
    """Deserialize a JSON stream to a Python object."""
    return json.load(fp, cls=DensecertJSONDecoder)
