"""Wire-format round trips and decode validation."""

import json
from fractions import Fraction

import pytest

from brauerkit import brauer, csa, hondatate, numfield, serialize as ser
from brauerkit.errors import MalformedInput
from brauerkit.numfield import NumberField, SubfieldMap
from conftest import qclass


def test_polynomial_round_trip():
    p = numfield.IntegerPolynomial.make([5, -1, 1])
    assert ser.poly_to_json(p) == ["5", "-1", "1"]
    assert ser.poly_from_json(["5", "-1", "1"]) == p
    with pytest.raises(MalformedInput):
        ser.poly_from_json(["x"])
    with pytest.raises(MalformedInput):
        ser.poly_from_json("nope")


def test_field_round_trip(fields):
    for k in fields.values():
        assert ser.field_from_json(ser.field_to_json(k)) == k
    abstract = NumberField.abstract(3, {2: [3], "inf": [1, 2]})
    assert ser.field_from_json(ser.field_to_json(abstract)) == abstract


def test_class_round_trip(fields, catalog_division_classes, gaussian_quaternion):
    for cls in list(catalog_division_classes.values()) + [gaussian_quaternion]:
        doc = ser.brauer_class_to_json(cls)
        assert ser.brauer_class_from_json(json.loads(json.dumps(doc))) == cls
    abstract = NumberField.abstract(3, {2: [3], 3: [3], "inf": [1, 2]})
    cls = brauer.restrict(qclass({2: Fraction(1, 6), 3: Fraction(5, 6)}), abstract)
    assert ser.brauer_class_from_json(ser.brauer_class_to_json(cls)) == cls


def test_class_with_real_support_round_trip(catalog_division_classes):
    cls = catalog_division_classes["quat_2inf"]
    doc = ser.brauer_class_to_json(cls)
    assert any("real" in item["place"] for item in doc["inv"])
    assert ser.brauer_class_from_json(doc) == cls


def test_algebra_and_map_round_trip(fields, catalog_division_classes):
    alg = csa.CentralSimpleAlgebra(catalog_division_classes["quat_23"], 2)
    assert ser.algebra_from_json(ser.algebra_to_json(alg)) == alg
    emb = SubfieldMap.make(fields["Qi"], fields["zeta8"], [0, 0, 1])
    assert ser.subfield_map_from_json(ser.subfield_map_to_json(emb)) == emb


def test_weil_round_trip():
    w = hondatate.WeilNumber.make([5, -1, 1], hondatate.PrimePower(5, 1))
    assert ser.weil_from_json(ser.weil_to_json(w)) == w
    assert ser.prime_power_from_json(49) == hondatate.PrimePower(7, 2)
    with pytest.raises(MalformedInput):
        ser.weil_from_json({"poly": ["1"]})


def test_unknown_place_rejected(fields):
    doc = {"center": {"poly": ["1", "0", "1"]},
           "inv": [{"place": {"p": 5, "factor": ["1", "1"]}, "num": 1, "den": 2}]}
    with pytest.raises(MalformedInput):
        ser.brauer_class_from_json(doc)
