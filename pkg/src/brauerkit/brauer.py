"""Brauer classes over number fields as finite-support local invariants.

A class is a map from places of its center to Q/Z with finite support,
subject to global reciprocity (the invariants sum to 0 mod 1) and the
archimedean constraints: real invariants lie in {0, 1/2}, complex ones
vanish.  The group operations, the order (Schur index) and restriction
of scalars are all computed on this local data.
"""

from dataclasses import dataclass
from fractions import Fraction
from math import lcm

from . import numfield
from .errors import (
    BadArchimedean,
    CenterMismatch,
    InternalCheckFailed,
    InvalidInput,
    ProfileIncomplete,
    ReciprocityViolation,
)
from .numfield import INF, NumberField, Place, SubfieldMap

HALF = Fraction(1, 2)


@dataclass(frozen=True)
class BrauerClass:
    center: NumberField
    invariants: tuple  # ((Place, Fraction), ...) sorted, nonzero values only

    def invariant_at(self, place):
        for pl, value in self.invariants:
            if pl == place:
                return value
        return Fraction(0)

    @property
    def support(self):
        return tuple(pl for pl, _ in self.invariants)

    @property
    def is_trivial(self):
        return not self.invariants

    def ramified_primes(self):
        return sorted({pl.p for pl, _ in self.invariants if pl.is_finite})


def _normalized(entries):
    out = []
    for place, value in entries:
        value = Fraction(value) % 1
        if value:
            out.append((place, value))
    out.sort(key=lambda pv: pv[0].sort_key())
    return tuple(out)


def _check_archimedean(entries):
    for place, value in entries:
        if place.kind == "real" and value not in (0, HALF):
            raise BadArchimedean(f"real invariant {value} not in {{0, 1/2}}")
        if place.kind == "complex" and value != 0:
            raise BadArchimedean("complex places carry invariant 0")


def _check_reciprocity(entries):
    total = sum((value for _, value in entries), Fraction(0))
    if total % 1:
        raise ReciprocityViolation(f"invariants sum to {total} != 0 mod 1")


def _valid_places(center):
    """Places of the center a class may be supported on, keyed by kind."""
    def finite_ok(place):
        if center.is_concrete:
            return place in numfield.places_above(center, place.p)
        entry = center.profile.get(place.p)
        return (entry is not None and place.index is not None
                and place.index < len(entry)
                and entry[place.index] == place.local_degree)

    return finite_ok


def make_class(center, data):
    """Validating constructor.

    data is a mapping Place -> rational (or an iterable of pairs); values
    are reduced mod 1, zeros dropped, reciprocity and the archimedean
    constraints enforced, and each place checked to belong to the center.
    """
    entries = data.items() if hasattr(data, "items") else data
    entries = _normalized(entries)
    finite_ok = _valid_places(center)
    arch = numfield.archimedean_places(center) if (center.is_concrete or center.profile.get(INF)) else ()
    for place, _ in entries:
        if place.kind == "finite":
            if not finite_ok(place):
                raise InvalidInput(f"place {place} does not belong to the center")
        elif place not in arch:
            raise InvalidInput(f"archimedean place {place} does not belong to the center")
    _check_archimedean(entries)
    _check_reciprocity(entries)
    return BrauerClass(center, entries)


def _trusted_class(center, entries):
    entries = _normalized(entries)
    _check_reciprocity(entries)
    return BrauerClass(center, entries)


def trivial(center):
    return BrauerClass(center, ())


def combine(a, b, sign=1):
    """Placewise a + sign*b mod 1."""
    if a.center != b.center:
        raise CenterMismatch("classes have different centers")
    if sign not in (1, -1):
        raise InvalidInput("sign must be +1 or -1")
    acc = dict(a.invariants)
    for place, value in b.invariants:
        acc[place] = acc.get(place, Fraction(0)) + sign * value
    return _trusted_class(a.center, acc.items())


def negate(a):
    return combine(trivial(a.center), a, -1)


def scale_class(a, n):
    """The n-fold sum of a class (n may be any integer)."""
    return _trusted_class(a.center, ((pl, n * v) for pl, v in a.invariants))


def schur_index(c):
    """Order of the class: the lcm of the invariant denominators."""
    out = 1
    for _, value in c.invariants:
        out = lcm(out, value.denominator)
    return out


def _restrict_to_abstract(c, l):
    if not c.center.is_rationals:
        raise InvalidInput(
            "restriction to an abstract field is only supported from Q, "
            "where profile degrees are relative degrees")
    acc = []
    for place, value in c.invariants:
        key = place.p if place.is_finite else INF
        entry = l.profile.get(key)
        if entry is None:
            raise ProfileIncomplete(f"profile has no entry at {key}")
        if place.is_finite:
            for idx, deg in enumerate(entry):
                acc.append((Place.abstract_finite(place.p, deg, idx), deg * value))
        else:
            r_idx = 0
            c_idx = 0
            for deg in entry:
                if deg == 1:
                    acc.append((Place.real(r_idx), value))
                    r_idx += 1
                else:
                    c_idx += 1
    return _trusted_class(l, acc)


def restrict(c, l, emb=None):
    """Extension of scalars along K -> L: inv_w = [L_w : K_v] * inv_v.

    emb may be omitted when the center is Q (the embedding is canonical).
    L may be abstract (with a profile covering the support) when the
    center is Q.
    """
    k = c.center
    if emb is None:
        if k.is_rationals and l.is_concrete and not l.is_rationals:
            emb = SubfieldMap.from_rationals(l)
        elif k == l or (k.is_rationals and l.is_rationals):
            return c
        elif not l.is_concrete:
            return _restrict_to_abstract(c, l)
        else:
            raise InvalidInput("an embedding of the center into L is required")
    if not l.is_concrete:
        return _restrict_to_abstract(c, l)
    if emb.source != k or emb.target != l:
        raise CenterMismatch("embedding endpoints do not match the centers")
    if not k.is_concrete:
        raise InvalidInput("cannot restrict from an abstract center")
    acc = {}
    base = k.degree == 1
    for place, value in c.invariants:
        if place.is_finite:
            for w in numfield.places_above(l, place.p):
                if base:
                    ld = w.e * w.f
                else:
                    below, ld = numfield.place_below(emb, w)
                    if below != place:
                        continue
                new = (ld * value) % 1
                if new:
                    assert w not in acc
                    acc[w] = new
        elif place.kind == "real":
            # complex places above contribute 2 * (1/2) = 0; only real
            # places of L can keep the invariant
            for w in numfield.real_places(l):
                if not base:
                    below, _ = numfield.place_below(emb, w)
                    if below != place:
                        continue
                assert w not in acc
                acc[w] = value
        else:
            raise InternalCheckFailed("complex place in support")
    return _trusted_class(l, acc.items())
