"""Number field operations: worked values and structural invariants."""

from fractions import Fraction

import pytest

from brauerkit import numfield as nf
from brauerkit import polys
from brauerkit.errors import (
    DegreeLimitExceeded,
    InvalidInput,
    NonMonogenicAtP,
    NotSquarefree,
)
from brauerkit.numfield import RATIONALS, IntegerPolynomial, NumberField, SubfieldMap

ip = IntegerPolynomial.make


def test_count_real_roots_values():
    assert nf.count_real_roots(ip([1, 0, 1])) == 0
    assert nf.count_real_roots(ip([-2, 0, 1])) == 2
    assert nf.count_real_roots(ip([0, -1, 0, 1])) == 3
    with pytest.raises(NotSquarefree):
        nf.count_real_roots(ip([1, 2, 1]))


def test_factor_mod_p_values():
    out = nf.factor_mod_p(ip([1, 0, 1]), 5)
    assert [(f.coefficients, m) for f, m in out] == [((2, 1), 1), ((3, 1), 1)]
    out = nf.factor_mod_p(ip([1, 0, 1]), 2)
    assert [(f.coefficients, m) for f, m in out] == [((1, 1), 2)]
    out = nf.factor_mod_p(ip([1, 0, 1]), 3)
    assert [(f.coefficients, m) for f, m in out] == [((1, 0, 1), 1)]


def test_places_above_values(fields):
    two = nf.places_above(fields["Qi"], 5)
    assert [(p.e, p.f) for p in two] == [(1, 1), (1, 1)]
    one = nf.places_above(fields["Qi"], 2)
    assert [(p.e, p.f) for p in one] == [(2, 1)]
    k = NumberField.from_polynomial([5, -1, 1])
    assert [(p.e, p.f) for p in nf.places_above(k, 5)] == [(1, 1), (1, 1)]


@pytest.mark.parametrize("name", ["Qi", "Qs2", "Qs3", "golden", "Qm5", "cubic", "zeta8"])
@pytest.mark.parametrize("p", [2, 3, 5, 7, 11, 13])
def test_places_degree_sum(fields, name, p):
    k = fields[name]
    try:
        places = nf.places_above(k, p)
    except NonMonogenicAtP:
        return
    assert sum(pl.e * pl.f for pl in places) == k.degree


def test_dedekind_failure_is_typed():
    k = NumberField.from_polynomial([4, -2, 1])  # index divisible by 2
    with pytest.raises(NonMonogenicAtP):
        nf.places_above(k, 2)


def test_infinite_places_values(fields):
    assert nf.infinite_places(fields["Qi"]) == (0, 1)
    assert nf.infinite_places(fields["Qs3"]) == (2, 0)
    assert nf.infinite_places(fields["cubic"]) == (1, 1)
    for name in ("Qi", "Qs2", "golden", "cubic", "zeta8"):
        r1, r2 = nf.infinite_places(fields[name])
        assert r1 + 2 * r2 == fields[name].degree
        reals = nf.real_places(fields[name])
        assert len(reals) == r1
        for pl in reals:
            lo, hi = pl.interval
            assert lo < hi


def test_place_below_base_field(fields):
    emb = SubfieldMap.from_rationals(fields["Qi"])
    w = nf.places_above(fields["Qi"], 2)[0]
    v, ld = nf.place_below(emb, w)
    assert v.p == 2 and ld == 2


def test_place_below_identity(fields):
    emb = SubfieldMap.identity(fields["Qi"])
    for p in (2, 5, 13):
        for w in nf.places_above(fields["Qi"], p):
            v, ld = nf.place_below(emb, w)
            assert v == w and ld == 1


def test_place_below_quartic_example(fields):
    emb = SubfieldMap.make(fields["Qi"], fields["zeta8"], [0, 0, 1])
    for w in nf.places_above(fields["zeta8"], 5):
        v, ld = nf.place_below(emb, w)
        assert ld == 2 and v in nf.places_above(fields["Qi"], 5)
    # degree bookkeeping: sum of [L_w : K_v] over w above a fixed v
    for v in nf.places_above(fields["Qi"], 5):
        total = 0
        for w in nf.places_above(fields["zeta8"], 5):
            below, ld = nf.place_below(emb, w)
            if below == v:
                total += ld
        assert total == 2


def test_place_below_real_matching():
    quarter = NumberField.from_polynomial([-2, 0, 0, 0, 1])  # x^4 - 2
    sqrt2 = NumberField.from_polynomial([-2, 0, 1])
    emb = SubfieldMap.make(sqrt2, quarter, [0, 0, 1])
    for w in nf.real_places(quarter):
        v, ld = nf.place_below(emb, w)
        assert ld == 1
        # both real roots of x^4-2 square to the positive root of x^2-2
        assert v.index == 1


def test_compositum_values(fields):
    cands = nf.compositum_candidates(RATIONALS, fields["Qi"])
    assert len(cands) == 1 and cands[0].compositum == fields["Qi"]
    cands = nf.compositum_candidates(fields["Qs2"], fields["Qs2"])
    assert len(cands) == 2 and all(c.compositum.degree == 2 for c in cands)
    cands = nf.compositum_candidates(fields["Qs2"], fields["Qs3"])
    assert len(cands) == 1 and cands[0].compositum.degree == 4


def test_compositum_degree_bounds(fields):
    pairs = [("Qi", "Qs2"), ("Qi", "Qi"), ("cubic", "Qi"), ("Qs2", "Qs3"),
             ("cubic", "Qs3"), ("Q", "cubic")]
    for a, b in pairs:
        fa, fb = fields[a], fields[b]
        for cand in nf.compositum_candidates(fa, fb):
            d = cand.compositum.degree
            assert (fa.degree * fb.degree) % d == 0
            assert d % fa.degree == 0 and d % fb.degree == 0
            assert d >= max(fa.degree, fb.degree)
            # the recorded embeddings are genuine roots
            assert cand.from_left.source == fa and cand.from_right.source == fb


def test_compositum_limit(fields):
    with pytest.raises(DegreeLimitExceeded):
        nf.compositum_candidates(fields["cubic"], fields["zeta8"], degree_limit=4)


def test_newton_polygon_values():
    assert nf.newton_polygon(ip([5, 0, 1]), 5) == [(Fraction(1, 2), 2)]
    assert nf.newton_polygon(ip([5, -1, 1]), 5) == [(Fraction(0), 1), (Fraction(1), 1)]
    assert nf.newton_polygon(ip([-2, 1]), 5) == [(Fraction(0), 1)]


@pytest.mark.parametrize("coeffs,p", [
    ([12, 4, 3, 1], 2), ([50, 15, 1], 5), ([49, -7, 1], 7),
    ([27, 9, 3, 1], 3), ([4, -2, 1], 2), ([125, 0, 0, 1], 5),
])
def test_newton_polygon_structure(coeffs, p):
    segs = nf.newton_polygon(ip(coeffs), p)
    lams = [lam for lam, _ in segs if lam is not None]
    assert lams == sorted(lams)
    assert sum(length for _, length in segs) == len(polys.normalize(coeffs)) - 1
    # total valuation mass equals ord_p of the constant term
    total = sum(lam * length for lam, length in segs if lam is not None)
    c0 = coeffs[0]
    v = 0
    while c0 and c0 % p == 0:
        c0 //= p
        v += 1
    assert total == v


def test_newton_polygon_zero_roots():
    segs = nf.newton_polygon(ip([0, 0, 5, 1]), 5)
    assert segs[-1] == (None, 2)
    assert segs[0] == (Fraction(1), 1)


def test_abstract_fields_and_validation():
    k = NumberField.abstract(3, {2: [3], "inf": [1, 2]})
    assert not k.is_concrete
    arch = nf.archimedean_places(k)
    assert [pl.kind for pl in arch] == ["real", "complex"]
    with pytest.raises(InvalidInput):
        NumberField.abstract(3, {2: [2, 2]})
    with pytest.raises(InvalidInput):
        NumberField.abstract(3, {"inf": [3]})
    with pytest.raises(InvalidInput):
        nf.places_above(k, 2)


def test_degree_one_fields_canonicalize():
    assert NumberField.from_polynomial([-3, 1]) == RATIONALS
    assert NumberField.from_polynomial([7, 1]) == RATIONALS


def test_reducible_polynomial_rejected():
    with pytest.raises(InvalidInput):
        NumberField.from_polynomial([-6, 1, 1])
