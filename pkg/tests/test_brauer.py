"""Brauer class arithmetic: constructor validation, group structure,
restriction, and the order-drop law for embedded subfields."""

import random
from fractions import Fraction

import pytest

from brauerkit import brauer, csa, numfield
from brauerkit.errors import (
    BadArchimedean,
    CenterMismatch,
    ProfileIncomplete,
    ReciprocityViolation,
)
from brauerkit.numfield import RATIONALS, NumberField, SubfieldMap
from conftest import HALF, qclass


def test_make_class_values():
    c = qclass({2: HALF, "inf": HALF})
    assert brauer.schur_index(c) == 2
    assert qclass({}).is_trivial
    with pytest.raises(ReciprocityViolation):
        qclass({2: HALF})
    with pytest.raises(BadArchimedean):
        qclass({"inf": Fraction(1, 3), 3: Fraction(2, 3)})


def test_complex_place_must_vanish(fields):
    w = numfield.archimedean_places(fields["Qi"])[0]
    assert w.kind == "complex"
    p5 = numfield.places_above(fields["Qi"], 5)
    with pytest.raises(BadArchimedean):
        brauer.make_class(fields["Qi"], {w: HALF, p5[0]: Fraction(1, 4), p5[1]: Fraction(1, 4)})


def test_combine_values():
    a = qclass({2: HALF, "inf": HALF})
    b = qclass({3: HALF, "inf": HALF})
    s = brauer.combine(a, b)
    assert s == qclass({2: HALF, 3: HALF})
    assert brauer.combine(a, a, -1).is_trivial
    assert brauer.combine(brauer.trivial(RATIONALS), b) == b
    with pytest.raises(CenterMismatch):
        brauer.combine(a, brauer.trivial(NumberField.from_polynomial([1, 0, 1])))


def test_schur_index_values():
    assert brauer.schur_index(qclass({2: HALF, "inf": HALF})) == 2
    assert brauer.schur_index(brauer.trivial(RATIONALS)) == 1
    assert brauer.schur_index(qclass({2: Fraction(1, 6), 3: Fraction(5, 6)})) == 6


def test_restrict_values(fields):
    quat = qclass({2: HALF, "inf": HALF})
    assert brauer.restrict(quat, fields["Qi"]).is_trivial
    r = brauer.restrict(quat, fields["Qs3"])
    assert [(pl.kind, v) for pl, v in r.invariants] == [("real", HALF), ("real", HALF)]
    assert brauer.restrict(brauer.trivial(RATIONALS), fields["Qs3"]).is_trivial


def test_restrict_reciprocity_and_homomorphism(fields):
    rng = random.Random(0xB0B)
    targets = [fields[n] for n in ("Qi", "Qs2", "Qs3", "golden", "Qm5", "cubic", "zeta8")]
    primes = [2, 3, 5, 7, 11, 13]
    ns = [2, 3, 4, 6]
    made = 0
    while made < 60:
        n = rng.choice(ns)
        a_num = rng.choice([x for x in range(1, n) if Fraction(x, n).denominator == n])
        p1, p2 = rng.sample(primes, 2)
        cls = qclass({p1: Fraction(a_num, n), p2: Fraction(n - a_num, n)})
        other = qclass({p1: HALF, "inf": HALF}) if rng.random() < 0.5 else qclass(
            {p2: Fraction(1, 3), rng.choice([p for p in primes if p not in (p2,)]): Fraction(2, 3)})
        target = rng.choice(targets)
        r1 = brauer.restrict(cls, target)
        r2 = brauer.restrict(other, target)
        both = brauer.restrict(brauer.combine(cls, other), target)
        assert both == brauer.combine(r1, r2)
        for res in (r1, r2, both):
            assert sum((v for _, v in res.invariants), Fraction(0)) % 1 == 0
        made += 1


def _embeddable_field(cls, target, emb=None):
    x = csa.CentralSimpleAlgebra(brauer.trivial(target), 1)
    y = csa.CentralSimpleAlgebra(cls, 1)
    return csa.yu_embedding_test(x, y, emb).embeddable


def test_order_drop_for_embedded_subfields(fields, catalog_division_classes,
                                           gaussian_quaternion):
    """ord_K[B] always divides [L:K] * ord_L[B (x) L]; when L splits B it
    divides [L:K]; when L embeds into the division algebra of B the order
    drops by exactly [L:K]."""
    targets = [fields[n] for n in ("Qi", "Qs2", "Qs3", "golden", "Qm5", "cubic", "zeta8")]
    embeddable_seen = 0
    for cls in catalog_division_classes.values():
        ord_k = brauer.schur_index(cls)
        for target in targets:
            rel = target.degree
            restricted = brauer.restrict(cls, target)
            ord_l = brauer.schur_index(restricted)
            assert (rel * ord_l) % ord_k == 0
            if restricted.is_trivial:
                assert rel % ord_k == 0
            if _embeddable_field(cls, target):
                assert rel * ord_l == ord_k
                embeddable_seen += 1
    assert embeddable_seen > 5
    # a relative pair: B over Q(i), L = Q(zeta8)
    emb = SubfieldMap.make(fields["Qi"], fields["zeta8"], [0, 0, 1])
    restricted = brauer.restrict(gaussian_quaternion, fields["zeta8"], emb)
    if _embeddable_field(gaussian_quaternion, fields["zeta8"], emb):
        assert 2 * brauer.schur_index(restricted) == brauer.schur_index(gaussian_quaternion)


def test_restrict_to_abstract_profile():
    c6 = qclass({2: Fraction(1, 6), 3: Fraction(5, 6)})
    k = NumberField.abstract(3, {2: [3], 3: [3], "inf": [1, 2]})
    r = brauer.restrict(c6, k)
    assert brauer.schur_index(r) == 2
    assert all(v == HALF for _, v in r.invariants)
    with pytest.raises(ProfileIncomplete):
        brauer.restrict(qclass({2: HALF, 5: HALF}), k)


def test_scale_class():
    c = qclass({2: Fraction(1, 4), 3: Fraction(3, 4)})
    assert brauer.schur_index(brauer.scale_class(c, 2)) == 2
    assert brauer.scale_class(c, 4).is_trivial
    assert brauer.scale_class(c, -1) == brauer.negate(c)
