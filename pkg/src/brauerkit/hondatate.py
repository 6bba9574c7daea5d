"""The finite-field side: Weil numbers, endomorphism-algebra invariants,
and the splitting obstruction for reductions of abelian varieties.

A Weil q-number is an algebraic integer all of whose conjugates have
absolute value sqrt(q); its minimal polynomial plus q determine the
endomorphism algebra of the corresponding isogeny class of simple
abelian varieties over the q-element field.  Tate's theorem gives the
local invariants: (ord_v(pi) / ord_v(q)) * [K_v : Q_p] at places over p,
1/2 at real places, 0 elsewhere, and the Honda-Tate dimension rule reads
2g = e * [Q(pi) : Q].  All checks are exact: square-root comparisons are
done by squaring, root locations by Sturm counts.
"""

import csv
from dataclasses import dataclass
from fractions import Fraction
from math import isqrt

from . import brauer, csa, factoring, numfield, polys
from .brauer import BrauerClass, make_class, schur_index
from .errors import (
    AmbiguousSlopeMatching,
    InternalCheckFailed,
    InvalidInput,
    NonIntegralDimension,
    NotIndefinite,
    NotMonic,
    RamifiedAtP,
)
from .numfield import (
    DEFAULT_DEGREE_LIMIT,
    IntegerPolynomial,
    NumberField,
)

MUST_SPLIT = "MustSplit"
NO_OBSTRUCTION = "NoObstruction"
NOT_APPLICABLE = "NotApplicable"


def _is_prime(n):
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


@dataclass(frozen=True)
class PrimePower:
    p: int
    m: int

    def __post_init__(self):
        if not _is_prime(self.p):
            raise InvalidInput(f"{self.p} is not prime")
        if self.m < 1:
            raise InvalidInput("exponent must be positive")

    @property
    def q(self):
        return self.p**self.m

    @staticmethod
    def from_int(q):
        q = int(q)
        if q < 2:
            raise InvalidInput(f"{q} is not a prime power")
        p = 2
        while p * p <= q:
            if q % p == 0:
                break
            p += 1
        else:
            p = q
        m = 0
        while q % p == 0:
            q //= p
            m += 1
        if q != 1:
            raise InvalidInput("not a prime power")
        return PrimePower(p, m)


@dataclass(frozen=True)
class WeilNumber:
    minpoly: IntegerPolynomial
    q: PrimePower

    @staticmethod
    def make(coeffs, q):
        poly = coeffs if isinstance(coeffs, IntegerPolynomial) else IntegerPolynomial.make(coeffs)
        if not is_weil_number(poly, q):
            raise InvalidInput(
                f"{list(poly.coefficients)} is not the minimal polynomial of "
                f"a Weil {q.q}-number")
        return WeilNumber(poly, q)


@dataclass(frozen=True)
class IsogenyClassInvariants:
    center: NumberField
    endo_class: BrauerClass
    schur_index: int
    dimension: int


# ---------------------------------------------------------------------------
# Weil number validation


def real_weil_transform(f, q):
    """For even-degree f with the conjugate-closure symmetry, the monic h
    with f(x) = x^(deg/2) * h(x + q/x); None when no such h exists."""
    cs = list(f.coefficients) if isinstance(f, IntegerPolynomial) else list(f)
    n = polys.degree(cs)
    g = n // 2
    rem = list(cs)
    h = [0] * (g + 1)
    for k in range(g, -1, -1):
        coeff = rem[g + k] if g + k < len(rem) else 0
        h[k] = coeff
        term = [1]
        for _ in range(k):
            term = polys.mul(term, [q, 0, 1])
        term = polys.shift_degree(term, g - k)
        rem = polys.sub(rem, polys.scale(term, coeff))
    if rem:
        return None
    return polys.normalize(h)


def _roots_within_weil_bound(h, q):
    """All real roots of squarefree h lie in [-2 sqrt(q), 2 sqrt(q)];
    decided exactly by refining isolating intervals and squaring."""
    four_q = 4 * q

    def le_bound(x):
        # x <= 2 sqrt(q)
        return x <= 0 or x * x <= four_q

    def ge_neg_bound(x):
        return x >= 0 or x * x <= four_q

    seq = polys.sturm_sequence([Fraction(c) for c in h])
    for lo, hi in polys.isolate_real_roots(h):
        while True:
            if le_bound(hi) and ge_neg_bound(lo):
                break
            if (lo > 0 and lo * lo > four_q) or (hi < 0 and hi * hi > four_q):
                return False
            lo, hi = polys.bisect_interval(seq, lo, hi)
    return True


def is_weil_number(f, q):
    """Exact test: f monic irreducible with every root of absolute value
    sqrt(q.q)."""
    poly = f if isinstance(f, IntegerPolynomial) else IntegerPolynomial.make(f)
    if not poly.is_monic:
        raise NotMonic("monic input required")
    n = poly.degree
    if n < 1:
        raise InvalidInput("constant polynomial")
    qq = q.q
    cs = list(poly.coefficients)
    if n == 1:
        return cs[0] * cs[0] == qq
    if not factoring.is_irreducible(cs):
        return False
    if cs == [-qq, 0, 1]:
        # x^2 - q: the real pair +/- sqrt(q); irreducible means q nonsquare
        return True
    if n % 2:
        # an odd-degree irreducible would have a real root of absolute
        # value sqrt(q), whose minimal polynomial has degree <= 2
        return False
    g = n // 2
    for j in range(g + 1):
        if cs[j] != cs[n - j] * qq ** (g - j):
            return False
    h = real_weil_transform(poly, qq)
    if h is None or not polys.is_squarefree_q(h):
        return False
    if polys.count_real_roots_q(h) != g:
        return False
    return _roots_within_weil_bound(h, qq)


def enumerate_weil_polys(q, degree, bound_slack=0):
    """All monic Weil polynomials of the given degree (2 or 4) for q.

    Candidates are enumerated inside the exact coefficient bounds
    (widened by bound_slack, which never changes the result) and filtered
    through is_weil_number.
    """
    if degree not in (2, 4):
        raise InvalidInput("degree must be 2 or 4")
    qq = q.q
    out = []
    if degree == 2:
        amax = isqrt(4 * qq) + bound_slack
        for a in range(-amax, amax + 1):
            cand = IntegerPolynomial.make([qq, -a, 1])
            if is_weil_number(cand, q):
                out.append(WeilNumber(cand, q))
        real_pair = IntegerPolynomial.make([-qq, 0, 1])
        if is_weil_number(real_pair, q):
            out.append(WeilNumber(real_pair, q))
    else:
        amax = isqrt(16 * qq) + bound_slack
        for a in range(-amax, amax + 1):
            for b in range(-2 * qq - bound_slack, 6 * qq + 1 + bound_slack):
                cand = IntegerPolynomial.make([qq * qq, a * qq, b, a, 1])
                if is_weil_number(cand, q):
                    out.append(WeilNumber(cand, q))
    out.sort(key=lambda w: w.minpoly.coefficients)
    return out


# ---------------------------------------------------------------------------
# Tate invariants


def _squarefree_part(n):
    sign = -1 if n < 0 else 1
    n = abs(n)
    out = 1
    d = 2
    while d * d <= n:
        if n % d == 0:
            e = 0
            while n % d == 0:
                n //= d
                e += 1
            if e % 2:
                out *= d
        d += 1
    return sign * out * n


def _canonical_quadratic(f):
    """The maximal-order presentation of the quadratic field Q[x]/(f)."""
    b, c = f.coefficients[1], f.coefficients[0]
    d = _squarefree_part(b * b - 4 * c)
    if d % 4 == 1:
        return NumberField.from_polynomial([(1 - d) // 4, -1, 1])
    return NumberField.from_polynomial([-d, 0, 1])


def _slope_assignments(places, segments, pi_generates):
    """All ways to attach one Newton-polygon slope to each place so the
    degree bookkeeping works out: the places assigned a given slope
    account exactly for its horizontal length.

    When the places were computed from the minimal polynomial of pi
    itself (pi_generates), the residue of pi at a place is the class of
    x, so a place has positive slope exactly when its factor is x mod p;
    that constraint is imposed on the assignments.
    """
    if any(lam is None for lam, _ in segments):
        raise InvalidInput("zero roots cannot occur for a Weil number")
    out = []
    remaining = {lam: length for lam, length in segments}

    def rec(i, chosen):
        if i == len(places):
            if all(v == 0 for v in remaining.values()):
                out.append(dict(chosen))
            return
        pl = places[i]
        size = pl.local_degree
        for lam in remaining:
            if remaining[lam] < size:
                continue
            if pi_generates:
                is_x = pl.factor == (0, 1)
                if (lam > 0) != is_x:
                    continue
            remaining[lam] -= size
            chosen[pl] = lam
            rec(i + 1, chosen)
            del chosen[pl]
            remaining[lam] += size

    rec(0, {})
    return out


def tate_invariants(w, center_profile=None):
    """The Brauer class of the endomorphism algebra attached to a Weil
    number: invariant (ord_v(pi)/ord_v(q)) [K_v : Q_p] at v over p, 1/2
    at real places, 0 elsewhere.

    Valuations of pi come from the Newton polygon of its minimal
    polynomial, matched to places computed by Dedekind's criterion.
    Quadratic centers are always presented by their maximal-order
    polynomial (an isomorphic field), which keeps every rational prime
    usable downstream; there the matching tries every assignment
    consistent with the degree bookkeeping and fails loudly if they
    disagree, rather than guessing.

    When the order generated by pi is bad at p (NonMonogenicAtP; the case
    for every quartic Weil polynomial), the caller may pass the
    local-degree profile of Q(pi) as center_profile; the class is then
    computed over the abstract center, subject to the same
    no-guessing rule.
    """
    f = w.minpoly
    p, m = w.q.p, w.q.m
    segments = numfield.newton_polygon(f, p)
    if center_profile is not None:
        k = NumberField.abstract(f.degree, center_profile)
        entry = k.profile.get(p)
        if entry is None:
            raise InvalidInput(f"profile lacks an entry at p = {p}")
        places_p = [numfield.Place.abstract_finite(p, deg, idx)
                    for idx, deg in enumerate(entry)]
        pi_generates = False
    elif f.degree == 2:
        k = _canonical_quadratic(f)
        pi_generates = k.poly.coefficients == f.coefficients
        places_p = list(numfield.places_above(k, p))
    else:
        k = NumberField.from_polynomial(list(f.coefficients))
        pi_generates = True
        places_p = list(numfield.places_above(k, p))
    classes = set()
    for slope_of in _slope_assignments(places_p, segments, pi_generates):
        data = []
        for pl in places_p:
            inv = (slope_of[pl] / m) * pl.local_degree % 1
            if inv:
                data.append((pl, inv))
        classes.add(tuple(sorted(data, key=lambda pv: pv[0].sort_key())))
    if len(classes) != 1:
        raise AmbiguousSlopeMatching(
            "Newton-polygon slopes cannot be attached to places uniquely "
            f"({len(classes)} distinct invariant vectors)")
    data = dict(classes.pop())
    for pl in numfield.archimedean_places(k):
        if pl.kind == "real":
            data[pl] = Fraction(1, 2)
    cls = make_class(k, data)
    assert all(pl.p == p for pl in cls.support if pl.is_finite)
    return cls


def isogeny_invariants(w, center_profile=None):
    """Schur index and dimension of the isogeny class: e is the order of
    the Tate class and 2g = e * [Q(pi) : Q]."""
    cls = tate_invariants(w, center_profile)
    e = schur_index(cls)
    num = e * cls.center.degree
    if num % 2:
        raise NonIntegralDimension(f"e * [Q(pi):Q] = {num} is odd")
    return IsogenyClassInvariants(cls.center, cls, e, num // 2)


# ---------------------------------------------------------------------------
# The obstruction pipeline


@dataclass(frozen=True)
class ObstructionReport:
    verdict: str
    weil: WeilNumber
    tate_class: BrauerClass | None
    candidates: tuple  # of csa.CandidateVerdict
    reason: str | None = None


def reduction_obstruction(endo, ell, d, w, emb=None,
                          degree_limit=DEFAULT_DEGREE_LIMIT):
    """Decide whether a simple reduction at p is obstructed.

    endo is the division class of the endomorphism algebra over its
    center Z, ell a prime dividing its order, and d the order-ell
    restriction to a field F of degree ord/ell (as produced by
    find_prime_subalgebra, which is re-verified here).  Under the
    hypothesis that the reduction is simple, its endomorphism algebra is
    the division algebra with the Tate invariants of w; the reduction
    therefore MustSplit when d embeds into it for no compositum F(pi),
    and the verdict is NotApplicable when p meets the ramification of
    endo (the coprimality hypothesis fails).
    """
    if not _is_prime(ell):
        raise InvalidInput(f"ell = {ell} is not prime")
    if schur_index(endo) % ell:
        raise InvalidInput("ell must divide the order of the endomorphism class")
    if schur_index(d) != ell:
        raise InvalidInput(f"D must have order {ell}")
    if not d.center.is_concrete:
        raise InvalidInput("D must have a concrete center")
    if brauer.restrict(endo, d.center, emb) != d:
        raise InvalidInput("D must be the restriction of the endomorphism class")
    p = w.q.p
    if p in endo.ramified_primes():
        return ObstructionReport(
            NOT_APPLICABLE, w, None, (),
            reason=f"p = {p} lies under a ramified place of the "
                   "endomorphism algebra")
    b = tate_invariants(w)
    cands = tuple(csa.embed_decision(d, b, degree_limit))
    verdict = NO_OBSTRUCTION if any(cv.verdict.embeddable for cv in cands) else MUST_SPLIT
    return ObstructionReport(verdict, w, b, cands)


@dataclass(frozen=True)
class QmSurfaceReport:
    q: PrimePower
    endo_class: BrauerClass
    rows: tuple  # of ObstructionReport
    all_must_split: bool


def qm_surface_check(endo, q, degree_limit=DEFAULT_DEGREE_LIMIT):
    """Sweep every Frobenius candidate of degree <= 2 for q and assert the
    reduction splits.

    endo must be an indefinite quaternion class over Q (order 2, trivial
    real invariant) with q.p prime to its ramification.  The enumerated
    candidates are the rational Weil numbers (for even exponents) plus
    the degree-2 ones.
    """
    if not endo.center.is_rationals:
        raise InvalidInput("the endomorphism class must have center Q")
    if schur_index(endo) != 2:
        raise InvalidInput("the endomorphism class must be a quaternion class")
    if any(pl.kind == "real" for pl in endo.support):
        raise NotIndefinite("the quaternion class must be indefinite "
                            "(trivial invariant at the real place)")
    if q.p in endo.ramified_primes():
        raise RamifiedAtP(f"q = {q.q} is a power of a ramified prime")
    weils = []
    if q.m % 2 == 0:
        root = q.p ** (q.m // 2)
        weils.append(WeilNumber.make([-root, 1], q))
        weils.append(WeilNumber.make([root, 1], q))
    weils.extend(enumerate_weil_polys(q, 2))
    weils.sort(key=lambda w: (w.minpoly.degree, w.minpoly.coefficients))
    rows = []
    for w in weils:
        report = reduction_obstruction(endo, 2, endo, w, degree_limit=degree_limit)
        if report.verdict != MUST_SPLIT:
            raise InternalCheckFailed(
                f"candidate {list(w.minpoly.coefficients)} did not yield "
                f"MustSplit (got {report.verdict})")
        rows.append(report)
    return QmSurfaceReport(q, endo, tuple(rows), True)


# ---------------------------------------------------------------------------
# Batch import


@dataclass(frozen=True)
class CsvRowError:
    line: int
    message: str


def read_weil_csv(stream):
    """Parse a CSV with columns p,m,coeffs (coeffs space-separated,
    ascending).  Malformed rows are reported with their line numbers and
    skipped."""
    reader = csv.reader(stream)
    rows = list(reader)
    if not rows or [c.strip() for c in rows[0]] != ["p", "m", "coeffs"]:
        raise InvalidInput("expected header row p,m,coeffs")
    weils = []
    errors = []
    for line_no, row in enumerate(rows[1:], start=2):
        if not row or all(not c.strip() for c in row):
            continue
        try:
            if len(row) != 3:
                raise InvalidInput(f"expected 3 columns, got {len(row)}")
            q = PrimePower(int(row[0]), int(row[1]))
            coeffs = [int(c) for c in row[2].split()]
            weils.append(WeilNumber.make(coeffs, q))
        except (ValueError, InvalidInput, NotMonic) as exc:
            errors.append(CsvRowError(line_no, str(exc)))
    return tuple(weils), tuple(errors)
