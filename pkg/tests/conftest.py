"""Shared catalog of fields and division classes used across the suite."""

from fractions import Fraction

import pytest

from brauerkit import brauer, numfield
from brauerkit.numfield import RATIONALS, NumberField

HALF = Fraction(1, 2)


def qplace(p):
    return numfield.places_above(RATIONALS, p)[0]


def qinf():
    return numfield.archimedean_places(RATIONALS)[0]


def qclass(data):
    """Class over Q from {prime or 'inf': rational}."""
    entries = {}
    for key, value in data.items():
        place = qinf() if key == "inf" else qplace(key)
        entries[place] = Fraction(value)
    return brauer.make_class(RATIONALS, entries)


FIELD_POLYS = {
    "Q": [0, 1],
    "Qi": [1, 0, 1],
    "Qs2": [-2, 0, 1],
    "Qs3": [-3, 0, 1],
    "golden": [-1, -1, 1],     # Q(sqrt5), maximal-order presentation
    "Qm5": [5, 0, 1],          # Q(sqrt-5)
    "cubic": [-1, -1, 0, 1],   # one real root, disc -23
    "zeta8": [1, 0, 0, 0, 1],
}


@pytest.fixture(scope="session")
def fields():
    return {name: NumberField.from_polynomial(cs) for name, cs in FIELD_POLYS.items()}


@pytest.fixture(scope="session")
def catalog_division_classes():
    """Division classes over Q exercising indices 2, 3, 4, 6."""
    return {
        "quat_2inf": qclass({2: HALF, "inf": HALF}),
        "quat_5inf": qclass({5: HALF, "inf": HALF}),
        "quat_23": qclass({2: HALF, 3: HALF}),
        "quat_25": qclass({2: HALF, 5: HALF}),
        "quat_35": qclass({3: HALF, 5: HALF}),
        "ind3": qclass({2: Fraction(1, 3), 3: Fraction(2, 3)}),
        "ind4": qclass({2: Fraction(1, 4), 3: Fraction(3, 4)}),
        "ind4b": qclass({2: Fraction(1, 4), 5: Fraction(3, 4)}),
        "ind6": qclass({2: Fraction(1, 6), 3: Fraction(5, 6)}),
    }


@pytest.fixture(scope="session")
def gaussian_quaternion(fields):
    """Index-2 class over Q(i) supported at the two places above 5."""
    p5 = numfield.places_above(fields["Qi"], 5)
    return brauer.make_class(fields["Qi"], {p5[0]: HALF, p5[1]: HALF})
