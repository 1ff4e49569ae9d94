"""Text and JSON round trips for specs, monomials, f-vectors, face lists."""

import json
import random

import pytest

import oracles
from colorquot import INF, Monomial, ONE, RingSpec, Variable, piece
from colorquot import formats


def test_cap_tokens():
    assert formats.cap_to_token(INF) == "inf"
    assert formats.cap_to_token(3) == 3
    assert formats.token_to_cap("inf") == INF
    assert formats.token_to_cap(4) == 4
    with pytest.raises(ValueError):
        formats.token_to_cap("lots")


def test_spec_round_trip():
    for spec in (
        RingSpec((1, 2), (2, 3)),
        RingSpec((INF, 2), (1, 1)),
        RingSpec((2,), (2,), (1, INF)),
    ):
        obj = formats.spec_to_obj(spec)
        assert formats.spec_from_obj(obj) == spec
        # survives a JSON round trip too
        assert formats.spec_from_obj(json.loads(json.dumps(obj))) == spec
    obj = formats.spec_to_obj(RingSpec((1,), (1,)))
    assert "phi" not in obj


def test_spec_from_obj_errors():
    with pytest.raises(ValueError):
        formats.spec_from_obj({"a": [1], "lambda": [1]})  # no n
    with pytest.raises(ValueError):
        formats.spec_from_obj({"n": 2, "a": [1], "lambda": [1, 1]})
    with pytest.raises(ValueError):
        formats.spec_from_obj({"n": 1, "a": [1], "lambda": [1], "phi": [1, 2]})


def test_monomial_text_round_trip():
    rng = random.Random(83)
    spec = RingSpec((3, 3), (2, 3))
    for d in (1, 2, 3):
        for m in piece(spec, d).members:
            assert formats.monomial_from_text(formats.monomial_to_text(m)) == m
    assert formats.monomial_to_text(ONE) == "1"
    assert formats.monomial_from_text("1") == ONE
    assert formats.monomial_from_text("x[1,2]") == Monomial.make({Variable(1, 2): 1})
    with pytest.raises(ValueError):
        formats.monomial_from_text("y[1,2]")
    with pytest.raises(ValueError):
        formats.monomial_from_text("x[1]")


def test_monomial_lines_skip_blanks():
    text = "x[1,1]^1\n\nx[2,1]^2\n"
    mons = formats.monomials_from_lines(text)
    assert [formats.monomial_to_text(m) for m in mons] == ["x[1,1]^1", "x[2,1]^2"]
    assert formats.monomials_to_lines(mons) == "x[1,1]^1\nx[2,1]^2\n"
    assert formats.monomials_to_lines([]) == ""


def test_fvector_text():
    from colorquot import FVector

    assert formats.fvector_to_text(FVector((1, 2, 1))) == "1,2,1"
    assert formats.fvector_from_text("1,2,1") == FVector((1, 2, 1))
    with pytest.raises(ValueError):
        formats.fvector_from_text("1,x")


def test_faces_to_monomials():
    mons = formats.faces_to_monomials("1:1\n2:1\n\n1:1 2:1\n")
    assert [formats.monomial_to_text(m) for m in mons] == [
        "x[1,1]^1",
        "x[2,1]^1",
        "x[1,1]^1*x[2,1]^1",
    ]
    with pytest.raises(ValueError):
        formats.faces_to_monomials("1:1 1:1\n")
    with pytest.raises(ValueError):
        formats.faces_to_monomials("vertex\n")


def test_budget_round_trip():
    from colorquot import Budget

    b = Budget(piece_limit=7, max_evals=99)
    assert formats.budget_from_obj(formats.budget_to_obj(b)) == b


def test_dumps_canonical():
    text = formats.dumps({"b": 1, "a": [2, 3]})
    assert text == '{\n  "a": [\n    2,\n    3\n  ],\n  "b": 1\n}\n'
