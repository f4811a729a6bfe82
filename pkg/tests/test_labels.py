import pytest

from unitary_bounds import parse_bound
from unitary_bounds.errors import CoordinateError


@pytest.mark.parametrize(
    "text, family, index, axis, name",
    [
        ("product", "product", (), None, "product"),
        ("I1'", "I1prime", (), None, "I1prime"),
        ("I1p", "I1prime", (), None, "I1prime"),
        ("I2", "I", (2,), None, "I2"),
        ("I12", "I", (12,), None, "I(12)"),
        ("S31", "S", (3, 1), None, "S31"),
        ("S(10,3)", "S", (10, 3), None, "S(10,3)"),
        ("M121z", "M", (1, 2, 1), "z", "M121z"),
        ("M121", "M", (1, 2, 1), None, "M121"),
        ("M(1, 2, 1, x)", "M", (1, 2, 1), "x", "M121x"),
        ("yu2", "yu", (2,), None, "yu_d2"),
        ("yu_d3", "yu", (3,), None, "yu_d3"),
    ],
)
def test_parse(text, family, index, axis, name):
    spec = parse_bound(text)
    assert (spec.family, spec.index, spec.axis, spec.name) == (family, index, axis, name)
    assert parse_bound(spec.name) == spec


@pytest.mark.parametrize("text", ["Q1", "S3", "M12", "I1z", "S(1,2,3)", "yu"])
def test_reject(text):
    with pytest.raises(CoordinateError):
        parse_bound(text)
