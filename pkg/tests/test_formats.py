import json

import pytest

from lpmrep import formats
from lpmrep.errors import FieldError, InvalidPresentation
from lpmrep.ff import ExtensionField, PrimeField
from lpmrep.matroid import GroundPartition, IntervalPresentation
from lpmrep.representation import build_extension_rep, build_prime_rep


def test_presentation_round_trip():
    data = {"n": 4, "intervals": [[1, 2], [1, 4]], "partition": [1, 3]}
    p, part = formats.presentation_from_json(data)
    assert p == IntervalPresentation(4, ((1, 2), (1, 4)))
    assert part == GroundPartition(4, (1, 3))
    assert formats.presentation_to_json(p, part) == data
    q, none = formats.presentation_from_json({"n": 3, "intervals": [[1, 3]]})
    assert none is None and q.r == 1


@pytest.mark.parametrize(
    "data",
    [{}, {"n": 3}, {"n": 3, "intervals": [[1]]}, {"n": "x", "intervals": []}, [1, 2], {"n": 3, "intervals": []}],
)
def test_presentation_rejects_malformed(data):
    with pytest.raises(InvalidPresentation):
        formats.presentation_from_json(data)


def test_field_descriptors():
    assert formats.field_to_json(PrimeField(37)) == {"p": "37", "s": 1}
    F8 = ExtensionField(2, (1, 1, 0, 1))
    assert formats.field_to_json(F8) == {"p": "2", "s": 3, "modulus": [1, 1, 0, 1]}
    assert formats.field_from_json({"p": "2", "s": 3, "modulus": [1, 1, 0, 1]}) == F8
    assert formats.field_from_json({"p": "37", "s": 1}) == PrimeField(37)
    with pytest.raises(InvalidPresentation):
        formats.field_from_json({"p": "2", "s": 3})
    with pytest.raises(InvalidPresentation):
        formats.field_from_json({"p": "2", "s": 2, "modulus": [1, 1, 0, 1]})
    with pytest.raises(FieldError):
        formats.field_from_json({"p": "2", "s": 2, "modulus": [1, 0, 1]})


def test_element_encoding():
    F = PrimeField(37)
    assert formats.element_to_json(F(35)) == "35"
    assert formats.element_from_json(F, "35") == F(35)
    F8 = ExtensionField(2, (1, 1, 0, 1))
    assert formats.element_to_json(F8.alpha**3) == [1, 1, 0]
    assert formats.element_from_json(F8, [1, 1, 0]) == F8.alpha + 1
    for bad in ([1, 1], [2, 0, 0], "x1"):
        with pytest.raises(InvalidPresentation):
            formats.element_from_json(F8, bad)
    for bad in ("37", "-1", [1], True):
        with pytest.raises((InvalidPresentation, ValueError)):
            formats.element_from_json(F, bad)


def test_big_prime_entries_are_strings():
    p = IntervalPresentation(6, ((1, 4), (2, 5), (3, 6)))
    data = formats.representation_to_json(build_prime_rep(p))
    assert all(isinstance(v, str) for row in data["entries"] for v in row)
    assert isinstance(data["field"]["p"], str)
    assert formats.representation_from_json(json.loads(formats.dumps(data))) == build_prime_rep(p)


def test_representation_dimensions_checked():
    data = formats.representation_to_json(build_extension_rep(IntervalPresentation(3, ((1, 3), (1, 3)))))
    data["cols"] = 4
    with pytest.raises(InvalidPresentation):
        formats.representation_from_json(data)


def test_shares_round_trip():
    F = PrimeField(37)
    data = formats.shares_to_json("rep.json", 1, {3: F(1), 2: F(2)})
    assert data == {"scheme": "rep.json", "p_o": 1, "shares": {"2": "2", "3": "1"}}
    assert formats.shares_from_json(F, data) == (1, {2: F(2), 3: F(1)})


def test_load_json_inline_and_path(tmp_path):
    assert formats.load_json(' {"n": 1} ') == {"n": 1}
    path = tmp_path / "p.json"
    path.write_text('{"n": 2}')
    assert formats.load_json(str(path)) == {"n": 2}


def test_dumps_is_sorted_and_stable():
    assert formats.dumps({"b": 1, "a": [1, 2]}) == '{\n  "a": [\n    1,\n    2\n  ],\n  "b": 1\n}\n'
