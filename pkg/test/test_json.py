#!/usr/bin/env python3
# -*- coding: utf-8 -*-
# test_json.py

import json
import tempfile
from fractions import Fraction

import numpy as np
import pytest

from densecert import __about__, constants, exceptions, jsonify, quadfield
from densecert.models import Report


def test_jsonify_native():
    x = {"list": [1, 2.0, 3], "tuple": (1, 2, 3), "bool": [True, False], "null": None}
    answer = {
        "list": ["1", 2.0, "3"],
        "tuple": ["1", "2", "3"],
        "bool": [True, False],
        "null": None,
    }
    assert answer == json.loads(jsonify.dumps(x))


def test_dumps_jsonifies_once():
    assert jsonify.dumps({"a": [1]}) == '{"a":["1"]}'
    assert jsonify.dumps("w") == '"w"'


def test_jsonify_numpy():
    x = {
        "ndarray": np.array([1, 2]),
        "np.int32": np.int32(1),
        "np.int64": np.int64(2),
        "np.float64": np.float64(3),
        "np.bool_": np.bool_(True),
    }
    answer = {
        "ndarray": ["1", "2"],
        "np.int32": "1",
        "np.int64": "2",
        "np.float64": 3.0,
        "np.bool_": True,
    }
    assert answer == json.loads(jsonify.dumps(x))


def test_jsonify_is_exact():
    big = 2 ** 200 + 1
    x = {"big": big, "ratio": Fraction(-7, 3), "set": {3, 1, 2}}
    loaded = json.loads(jsonify.dumps(x))
    assert int(loaded["big"]) == big
    assert Fraction(loaded["ratio"]) == Fraction(-7, 3)
    assert loaded["set"] == ["1", "2", "3"]


def test_jsonify_densecert_values(gaussian):
    P = quadfield.splitting_type(gaussian, 5).ideal
    assert jsonify.jsonify(gaussian(3, -2)) == "3-2*w"
    assert jsonify.jsonify(P) == "(5, 3+1*w)"
    assert jsonify.jsonify(gaussian) == {"d": "-1", "disc": "-4", "signature": "0"}
    assert jsonify.jsonify(quadfield.SplittingKind.SPLIT) == "Split"


def test_json_deserialization_non_densecert_classes():
    class OtherObject:
        def __init__(self, x):
            self.x = x

    loaded = jsonify.loads(jsonify.dumps(OtherObject(1)))
    assert loaded == {"x": "1"}


@pytest.fixture
def report():
    return Report(
        "g-invariant",
        {"d": 2, "p": 2, "sigma": (0, 1)},
        "not-dense",
        {"g": 2, "quotient_order": 8},
        elapsed_ms=12,
    )


def test_report_round_trip(report):
    loaded = jsonify.loads(jsonify.dumps(report))
    assert isinstance(loaded, Report)
    assert loaded == report
    assert loaded.elapsed_ms == 12


def test_report_layout(report):
    data = json.loads(jsonify.dumps(report))
    assert data["schema"] == constants.SCHEMA_VERSION == 1
    assert isinstance(data["schema"], int)
    assert data["elapsed_ms"] == 12
    assert isinstance(data["elapsed_ms"], int)
    assert data["inputs"] == {"d": "2", "p": "2", "sigma": ["0", "1"]}
    assert data["certificate"]["g"] == "2"
    assert data[jsonify.CLASS_KEY] == "Report"
    assert data[jsonify.VERSION_KEY] == __about__.__version__


@pytest.fixture
def report_file(report):
    f = tempfile.NamedTemporaryFile(mode="w+")
    jsonify.dump(report, f)
    f.seek(0)
    yield f
    f.close()


def test_load(report_file, report):
    assert jsonify.load(report_file) == report


def test_version_check_during_deserialization(report):
    string = jsonify.dumps(report)

    # Change the version
    _obj = json.loads(string)
    _obj[jsonify.VERSION_KEY] = "0.1.bogus"
    string = json.dumps(_obj)

    with pytest.raises(exceptions.JSONVersionError):
        jsonify.loads(string)


def test_schema_check_during_deserialization(report):
    _obj = json.loads(jsonify.dumps(report))
    _obj["schema"] = constants.SCHEMA_VERSION + 1
    with pytest.raises(exceptions.JSONVersionError):
        jsonify.loads(json.dumps(_obj))
