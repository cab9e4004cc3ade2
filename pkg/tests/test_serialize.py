import json
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from enqcover.algebra import GF, QQ, QZ5, ring
from enqcover.alphabets import W
from enqcover.curve import CurvePoint
from enqcover.models import hesse_model, pfaffians, u1_model
from enqcover.serialize import (
    FormatError,
    dumps,
    forms_from_doc,
    forms_to_doc,
    loads,
    model_from_doc,
    model_to_doc,
    point_to_doc,
    record_doc,
)

rationals = st.fractions(max_denominator=10**6).map(lambda x: x * 10**40)


@settings(max_examples=30, deadline=None)
@given(st.tuples(*[rationals] * 5))
def test_model_round_trip(lams):
    m = u1_model(lams)
    doc = loads(dumps(model_to_doc(m)))
    assert doc["kind"] == "model" and doc["field"] == {"type": "Q"}
    assert model_from_doc(doc) == m
    assert dumps(model_to_doc(model_from_doc(doc))) == dumps(model_to_doc(m))


@pytest.mark.parametrize("dom", [GF(11), QZ5])
def test_model_round_trip_other_fields(dom):
    b = QZ5.zeta5() if dom == QZ5 else 7
    m = hesse_model(2, b, domain=dom)
    assert model_from_doc(loads(dumps(model_to_doc(m)))) == m


def test_numbers_are_strings():
    doc = model_to_doc(hesse_model(Fraction(10**30, 7), 1))
    text = dumps(doc)
    assert '"1000000000000000000000000000000/7"' in text
    assert all(isinstance(c, str) for row in json.loads(text)["entries"] for c in row)


def test_symbolic_model_is_refused():
    with pytest.raises(FormatError):
        model_to_doc(hesse_model())


def test_forms_round_trip():
    q = pfaffians(hesse_model("a", "b"))
    doc = loads(dumps(forms_to_doc({f"p{i}": f for i, f in enumerate(q)})))
    back = forms_from_doc(doc)
    assert all(back[f"p{i}"] == q[i] for i in range(5))


def test_bad_documents():
    with pytest.raises(FormatError):
        model_from_doc({"kind": "form"})
    with pytest.raises(FormatError):
        model_from_doc({"kind": "model", "field": {"type": "Q"}, "entries": [["0"] * 5] * 9})
    with pytest.raises(FormatError):
        model_from_doc({"kind": "model", "entries": []})
    with pytest.raises(FormatError):
        loads("{not json")
    R = ring(W)
    doc = forms_to_doc({"f": R.gen("w0")})
    doc["forms"]["f"][0][0] = [1, 0]
    with pytest.raises(FormatError):
        forms_from_doc(doc)


def test_point_and_record_docs():
    d = point_to_doc(CurvePoint(QQ.coerce(Fraction(1, 3)), QQ.coerce(-2)), QQ)
    assert d["point"] == ["1/3", "-2"]
    assert point_to_doc(CurvePoint.at_infinity(), QQ)["point"] == "infinity"
    r = record_doc("invariants", {"j": None, "c4": 5}, GF(11))
    assert r == {"field": {"type": "Fp", "p": 11}, "kind": "invariants", "j": None, "c4": "5"}
