import json

import numpy as np
import pytest

from xepu import serialize


def test_float_formatting_round_trips_exactly(rng):
    values = list(rng.standard_normal(200)) + [1e-300, 1e300, 0.25, -0.0, 3e-17]
    for v in values:
        assert float(serialize.fmt_float(v)) == float(v)


def test_dumps_is_valid_json_and_deterministic():
    obj = {"a": [1.0, 2.5e-17, 3], "b": {"c": True, "d": None, "e": "x"}, "f": []}
    text = serialize.dumps(obj)
    assert json.loads(text) == json.loads(serialize.dumps(obj))
    assert text == serialize.dumps(obj)


def test_matrix_round_trip_is_bit_exact(rng):
    m = rng.standard_normal((4, 4)) + 1j * rng.standard_normal((4, 4))
    text = serialize.dumps(serialize.matrix_to_obj(m))
    back = serialize.obj_to_matrix(json.loads(text))
    assert np.array_equal(back, m)


def test_obj_to_matrix_rejects_malformed():
    with pytest.raises(ValueError):
        serialize.obj_to_matrix({"re": [[1, 2], [3, 4]], "im": [[0, 0], [0, 0]]})
    with pytest.raises(ValueError):
        serialize.obj_to_matrix({"re": "nope"})
    with pytest.raises(ValueError):
        serialize.obj_to_matrix([1, 2, 3])


def test_csv_row_formatting():
    row = serialize.csv_row(["general", 2, 0.5, 1e-17, 42])
    assert row.split(",")[:3] == ["general", "2", "0.5"]
    assert float(row.split(",")[3]) == 1e-17
    assert row.split(",")[4] == "42"
