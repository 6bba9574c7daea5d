"""JSON encodings for every public value.

Polynomials are arrays of decimal integer strings in ascending degree
order.  Fields are {"poly": [...]} or {"abstract": {"degree": n,
"profile": {...}}}.  Place descriptors are {"p": .., "factor": [...]}
for concrete finite places, {"p": .., "index": ..} for abstract ones,
{"real": index} and {"complex": index}.  Classes list their invariants
as {"place": .., "num": .., "den": ..} in canonical place order.
Decoding is validating: structural junk raises MalformedInput, domain
violations raise their typed errors.
"""

from fractions import Fraction

from . import brauer, csa, hondatate, numfield
from .errors import MalformedInput
from .numfield import (
    INF,
    IntegerPolynomial,
    NumberField,
    Place,
    SubfieldMap,
)


def _fail(msg):
    raise MalformedInput(msg)


def _expect(cond, msg):
    if not cond:
        _fail(msg)


def poly_to_json(poly):
    return [str(c) for c in poly.coefficients]


def poly_from_json(doc):
    _expect(isinstance(doc, list), "polynomial must be an array")
    try:
        return IntegerPolynomial.make([int(c) for c in doc])
    except (TypeError, ValueError):
        _fail("polynomial coefficients must be decimal integer strings")


def _fraction_to_str(x):
    x = Fraction(x)
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def _fraction_from_str(s):
    try:
        return Fraction(str(s))
    except (ValueError, ZeroDivisionError):
        _fail(f"bad rational {s!r}")


def field_to_json(k):
    if k.is_concrete:
        return {"poly": poly_to_json(k.poly)}
    profile = {}
    for key, degs in k.profile.entries:
        profile[str(key)] = list(degs)
    return {"abstract": {"degree": k.degree, "profile": profile}}


def field_from_json(doc):
    _expect(isinstance(doc, dict), "field must be an object")
    if "poly" in doc:
        return NumberField.from_polynomial(poly_from_json(doc["poly"]))
    if "abstract" in doc:
        body = doc["abstract"]
        _expect(isinstance(body, dict) and "degree" in body and "profile" in body,
                "abstract field needs degree and profile")
        _expect(isinstance(body["profile"], dict), "profile must be an object")
        entries = {}
        for key, degs in body["profile"].items():
            _expect(isinstance(degs, list), "profile entries must be arrays")
            if key != INF:
                try:
                    key = int(key)
                except ValueError:
                    _fail(f"bad profile key {key!r}")
            entries[key] = [int(d) for d in degs]
        return NumberField.abstract(int(body["degree"]), entries)
    _fail("field must have 'poly' or 'abstract'")


def place_to_json(place):
    if place.kind == "real":
        return {"real": place.index}
    if place.kind == "complex":
        return {"complex": place.index}
    if place.factor is not None:
        return {"p": place.p, "factor": [str(c) for c in place.factor]}
    return {"p": place.p, "index": place.index}


def place_from_json(doc, center):
    _expect(isinstance(doc, dict), "place must be an object")
    if "real" in doc:
        idx = int(doc["real"])
        arch = [pl for pl in numfield.archimedean_places(center) if pl.kind == "real"]
        _expect(0 <= idx < len(arch), f"no real place with index {idx}")
        return arch[idx]
    if "complex" in doc:
        idx = int(doc["complex"])
        arch = [pl for pl in numfield.archimedean_places(center) if pl.kind == "complex"]
        _expect(0 <= idx < len(arch), f"no complex place with index {idx}")
        return arch[idx]
    _expect("p" in doc, "finite place needs a prime p")
    p = int(doc["p"])
    if "factor" in doc:
        _expect(center.is_concrete, "concrete place for an abstract center")
        factor = tuple(int(c) for c in doc["factor"])
        for pl in numfield.places_above(center, p):
            if pl.factor == factor:
                return pl
        _fail(f"no place above {p} with the given factor")
    _expect("index" in doc, "abstract place needs an index")
    _expect(not center.is_concrete, "abstract place for a concrete center")
    idx = int(doc["index"])
    entry = center.profile.get(p)
    _expect(entry is not None and 0 <= idx < len(entry),
            f"profile has no place {idx} above {p}")
    return Place.abstract_finite(p, entry[idx], idx)


def brauer_class_to_json(cls):
    return {
        "center": field_to_json(cls.center),
        "inv": [
            {"place": place_to_json(pl), "num": v.numerator, "den": v.denominator}
            for pl, v in cls.invariants
        ],
    }


def brauer_class_from_json(doc):
    _expect(isinstance(doc, dict) and "center" in doc and "inv" in doc,
            "class needs center and inv")
    center = field_from_json(doc["center"])
    _expect(isinstance(doc["inv"], list), "inv must be an array")
    data = []
    for item in doc["inv"]:
        _expect(isinstance(item, dict) and {"place", "num", "den"} <= set(item),
                "invariant entries need place, num, den")
        place = place_from_json(item["place"], center)
        data.append((place, Fraction(int(item["num"]), int(item["den"]))))
    return brauer.make_class(center, data)


def algebra_to_json(alg):
    return {"class": brauer_class_to_json(alg.brauer_class),
            "capacity": alg.capacity}


def algebra_from_json(doc):
    _expect(isinstance(doc, dict) and "class" in doc and "capacity" in doc,
            "algebra needs class and capacity")
    capacity = int(doc["capacity"])
    _expect(capacity >= 1, "capacity must be positive")
    return csa.CentralSimpleAlgebra(brauer_class_from_json(doc["class"]), capacity)


def subfield_map_to_json(emb):
    return {
        "source": field_to_json(emb.source),
        "target": field_to_json(emb.target),
        "image": [_fraction_to_str(c) for c in emb.image],
    }


def subfield_map_from_json(doc):
    _expect(isinstance(doc, dict) and {"source", "target", "image"} <= set(doc),
            "map needs source, target, image")
    source = field_from_json(doc["source"])
    target = field_from_json(doc["target"])
    _expect(isinstance(doc["image"], list), "image must be an array")
    image = [_fraction_from_str(c) for c in doc["image"]]
    return SubfieldMap.make(source, target, image)


def weil_to_json(w):
    return {"poly": poly_to_json(w.minpoly), "q": {"p": w.q.p, "m": w.q.m}}


def weil_from_json(doc):
    _expect(isinstance(doc, dict) and "poly" in doc and "q" in doc,
            "weil number needs poly and q")
    q = prime_power_from_json(doc["q"])
    return hondatate.WeilNumber.make(poly_from_json(doc["poly"]), q)


def prime_power_from_json(doc):
    if isinstance(doc, int):
        return hondatate.PrimePower.from_int(doc)
    _expect(isinstance(doc, dict) and "p" in doc and "m" in doc,
            "q must be an integer or {p, m}")
    return hondatate.PrimePower(int(doc["p"]), int(doc["m"]))


def verdict_to_json(v):
    return {
        "embeddable": v.embeddable,
        "capacity_computed": v.capacity_computed,
        "divisor_required": v.divisor_required,
        "failing_condition": v.failing_condition,
    }


def candidate_verdict_to_json(cv):
    return {
        "field": field_to_json(cv.candidate.compositum),
        "verdict": verdict_to_json(cv.verdict),
    }


def decision_to_json(cands):
    return {
        "embeddable": any(cv.verdict.embeddable for cv in cands),
        "candidates": [candidate_verdict_to_json(cv) for cv in cands],
    }


def isogeny_to_json(inv):
    return {
        "center": field_to_json(inv.center),
        "class": brauer_class_to_json(inv.endo_class),
        "schur_index": inv.schur_index,
        "dimension": inv.dimension,
    }


def obstruction_to_json(report):
    doc = {
        "verdict": report.verdict,
        "weil": weil_to_json(report.weil),
    }
    if report.reason is not None:
        doc["reason"] = report.reason
    if report.tate_class is not None:
        doc["tate_class"] = brauer_class_to_json(report.tate_class)
    if report.candidates:
        doc["candidates"] = [candidate_verdict_to_json(cv) for cv in report.candidates]
    return doc


def qm_report_to_json(report):
    return {
        "q": {"p": report.q.p, "m": report.q.m},
        "endo": brauer_class_to_json(report.endo_class),
        "all_must_split": report.all_must_split,
        "rows": [
            {"weil": weil_to_json(r.weil), "verdict": r.verdict}
            for r in report.rows
        ],
    }
