"""Exact arithmetic for number fields.

Fields are given by a monic irreducible integer polynomial, or
abstractly by a local-degree profile when only the degrees [L_w : Q_v]
matter.  Finite places are computed with Dedekind's criterion only; when
that fails the typed error NonMonogenicAtP tells the caller to fall back
to an abstract profile.  Real places carry exact isolating intervals;
complex places are interchangeable indexed tokens.  No floating point
anywhere.
"""

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache

from . import factoring, gfpoly, polys
from .errors import (
    AmbiguousArchimedeanMatch,
    DegreeLimitExceeded,
    InvalidInput,
    NonMonogenicAtP,
    NotMonic,
    NotSquarefree,
)

DEFAULT_DEGREE_LIMIT = 16

INF = "inf"  # profile key for the archimedean place of Q


@dataclass(frozen=True)
class IntegerPolynomial:
    """Coefficients ascending, trailing zeros stripped."""

    coefficients: tuple

    @staticmethod
    def make(coeffs):
        cs = polys.normalize([int(c) for c in coeffs])
        return IntegerPolynomial(tuple(cs))

    @property
    def degree(self):
        return len(self.coefficients) - 1

    @property
    def is_monic(self):
        return bool(self.coefficients) and self.coefficients[-1] == 1

    def __call__(self, x):
        return polys.eval_at(self.coefficients, x)

    def as_list(self):
        return list(self.coefficients)


@dataclass(frozen=True)
class LocalDegreeProfile:
    """Map rational place -> multiset of local degrees [L_w : Q_v].

    Keys are primes (ints) or the string "inf"; each multiset is stored
    as a sorted tuple.
    """

    entries: tuple

    @staticmethod
    def make(mapping):
        items = []
        for key, degs in mapping.items():
            if key != INF:
                key = int(key)
            items.append((key, tuple(sorted(int(d) for d in degs))))
        return LocalDegreeProfile(tuple(sorted(items, key=lambda kv: (kv[0] == INF, kv[0] if kv[0] != INF else 0))))

    def get(self, key):
        for k, v in self.entries:
            if k == key:
                return v
        return None


@dataclass(frozen=True)
class NumberField:
    """Either Concrete (defining polynomial) or Abstract (degree + profile)."""

    poly: IntegerPolynomial | None
    profile: LocalDegreeProfile | None
    degree: int

    @staticmethod
    def from_polynomial(coeffs):
        p = coeffs if isinstance(coeffs, IntegerPolynomial) else IntegerPolynomial.make(coeffs)
        if not p.is_monic:
            raise NotMonic("defining polynomial must be monic")
        if p.degree < 1:
            raise InvalidInput("defining polynomial must be nonconstant")
        if p.degree == 1:
            # every degree-1 field is Q; canonicalize so comparisons work
            return RATIONALS
        if not _is_irreducible_cached(p.coefficients):
            raise InvalidInput("defining polynomial is reducible over Q")
        return NumberField(p, None, p.degree)

    @staticmethod
    def _trusted(coeffs):
        p = IntegerPolynomial.make(coeffs)
        if p.degree == 1:
            return RATIONALS
        return NumberField(p, None, p.degree)

    @staticmethod
    def abstract(degree, profile):
        degree = int(degree)
        if degree < 1:
            raise InvalidInput("degree must be positive")
        if not isinstance(profile, LocalDegreeProfile):
            profile = LocalDegreeProfile.make(profile)
        for key, degs in profile.entries:
            if sum(degs) != degree:
                raise InvalidInput(f"profile degrees at {key} sum to {sum(degs)}, not {degree}")
            if key == INF and any(d not in (1, 2) for d in degs):
                raise InvalidInput("archimedean local degrees must be 1 or 2")
        return NumberField(None, profile, degree)

    @property
    def is_concrete(self):
        return self.poly is not None

    @property
    def is_rationals(self):
        return self.degree == 1 and self.is_concrete


RATIONALS = NumberField(IntegerPolynomial((0, 1)), None, 1)


@lru_cache(maxsize=None)
def _is_irreducible_cached(coeffs):
    return factoring.is_irreducible(list(coeffs))


@dataclass(frozen=True)
class Place:
    """A place of a number field.

    kind is "finite", "real" or "complex".  Concrete finite places carry
    the prime p, the monic irreducible factor of the defining polynomial
    mod p, and ramification/residue data (e, f).  Abstract finite places
    carry p, an index into the profile multiset, and the local degree.
    Real places carry an isolating interval for the corresponding real
    root; the interval is refinable and excluded from identity.
    """

    kind: str
    p: int | None = None
    factor: tuple | None = None
    e: int | None = None
    f: int | None = None
    index: int | None = None
    local_degree: int | None = None
    interval: tuple | None = field(default=None, compare=False)

    @staticmethod
    def finite(p, factor, e, f):
        return Place("finite", p=p, factor=tuple(factor), e=e, f=f,
                     local_degree=e * f)

    @staticmethod
    def abstract_finite(p, degree, index):
        return Place("finite", p=p, index=index, local_degree=degree)

    @staticmethod
    def real(index, interval=None):
        return Place("real", index=index, local_degree=1, interval=interval)

    @staticmethod
    def complex_(index):
        return Place("complex", index=index, local_degree=2)

    @property
    def is_finite(self):
        return self.kind == "finite"

    def sort_key(self):
        if self.kind == "finite":
            return (0, self.p, self.factor or (), self.index or 0)
        if self.kind == "real":
            return (1, 0, (), self.index)
        return (2, 0, (), self.index)


@dataclass(frozen=True)
class SubfieldMap:
    """Embedding of one concrete field into another, recorded as the
    image of the source generator: a polynomial in the target generator
    with rational coefficients, reduced mod the target polynomial."""

    source: NumberField
    target: NumberField
    image: tuple

    @staticmethod
    def make(source, target, image):
        if not (source.is_concrete and target.is_concrete):
            raise InvalidInput("subfield maps require concrete fields")
        h = [Fraction(c) for c in target.poly.coefficients]
        img = tuple(polys.nf_reduce([Fraction(c) for c in image], h))
        value = _nf_eval(source.poly.coefficients, list(img), h)
        if value:
            raise InvalidInput("image is not a root of the source polynomial")
        return SubfieldMap(source, target, img)

    @staticmethod
    def identity(k):
        if not k.is_concrete:
            raise InvalidInput("identity map requires a concrete field")
        if k.degree == 1:
            return SubfieldMap(k, k, ())
        return SubfieldMap(k, k, (Fraction(0), Fraction(1)))

    @staticmethod
    def from_rationals(k):
        # Q is presented as Q[x]/(x), generator 0, so the image is the
        # zero polynomial
        return SubfieldMap(RATIONALS, k, ())

    @property
    def relative_degree(self):
        return self.target.degree // self.source.degree


@dataclass(frozen=True)
class CompositumCandidate:
    """One possible compositum of two fields, with both embeddings."""

    compositum: NumberField
    from_left: SubfieldMap
    from_right: SubfieldMap


def _nf_eval(f_coeffs, x, h):
    """Evaluate an integer polynomial at an element of Q[z]/(h)."""
    acc = []
    for c in reversed(f_coeffs):
        acc = polys.nf_reduce(polys.add(polys.mul(acc, x), [Fraction(c)]), h)
    return acc


# ---------------------------------------------------------------------------
# Basic operations


def count_real_roots(f):
    """Exact number of real roots of a squarefree integer polynomial."""
    cs = f.coefficients if isinstance(f, IntegerPolynomial) else polys.normalize(f)
    if not cs:
        raise InvalidInput("zero polynomial")
    if not polys.is_squarefree_q(list(cs)):
        raise NotSquarefree("gcd(f, f') is nonconstant")
    return polys.count_real_roots_q(list(cs))


def factor_mod_p(f, p):
    """Factor a monic integer polynomial modulo a prime.

    Returns [(IntegerPolynomial factor, multiplicity)], factors monic
    irreducible with coefficients in [0, p), sorted.
    """
    cs = f.coefficients if isinstance(f, IntegerPolynomial) else polys.normalize(f)
    if not cs or cs[-1] != 1:
        raise NotMonic("monic input required")
    out = gfpoly.factor(gfpoly.normalize(list(cs), p), p)
    return [(IntegerPolynomial.make(g), m) for g, m in out]


@lru_cache(maxsize=None)
def _places_above_cached(coeffs, p):
    f = list(coeffs)
    fbar = gfpoly.normalize(f, p)
    factors = gfpoly.factor(fbar, p)
    if any(m > 1 for _, m in factors):
        # Dedekind's criterion: with fbar = prod g_i^{e_i}, set g = prod g_i
        # and h = fbar / g; p is fine iff gcd((gh - f)/p, g, h) = 1 mod p
        gbar = [1]
        hbar = [1]
        for g, m in factors:
            gbar = gfpoly.mul(gbar, g, p)
            for _ in range(m - 1):
                hbar = gfpoly.mul(hbar, g, p)
        t = polys.sub(polys.mul(gbar, hbar), f)
        assert all(c % p == 0 for c in t)
        tbar = gfpoly.normalize([c // p for c in t], p)
        d = gfpoly.gcd(gfpoly.gcd(tbar, gbar, p), hbar, p)
        if gfpoly.degree(d) > 0:
            raise NonMonogenicAtP(
                f"p = {p} divides the index of the equation order; "
                "supply an abstract local-degree profile")
    places = tuple(Place.finite(p, g, m, gfpoly.degree(g)) for g, m in factors)
    assert sum(pl.e * pl.f for pl in places) == len(f) - 1
    return places


def places_above(k, p):
    """Finite places of a concrete field above a rational prime."""
    if not k.is_concrete:
        raise InvalidInput("places_above requires a concrete field")
    return _places_above_cached(k.poly.coefficients, p)


@lru_cache(maxsize=None)
def _real_data_cached(coeffs):
    f = list(coeffs)
    intervals = polys.isolate_real_roots(f)
    return tuple((Fraction(a), Fraction(b)) for a, b in intervals)


def archimedean_places(k):
    """All archimedean places: real ones first (ascending root order,
    with isolating intervals), then indexed complex ones."""
    if not k.is_concrete:
        entry = k.profile.get(INF)
        if entry is None:
            raise InvalidInput("abstract field lacks an archimedean profile entry")
        reals = [Place.real(i) for i, d in enumerate(d for d in entry if d == 1)]
        ncomplex = sum(1 for d in entry if d == 2)
        return tuple(reals) + tuple(Place.complex_(i) for i in range(ncomplex))
    intervals = _real_data_cached(k.poly.coefficients)
    r1 = len(intervals)
    r2 = (k.degree - r1) // 2
    reals = tuple(Place.real(i, iv) for i, iv in enumerate(intervals))
    return reals + tuple(Place.complex_(i) for i in range(r2))


def infinite_places(k):
    """Signature (r1, r2) of a concrete field."""
    if not k.is_concrete:
        raise InvalidInput("infinite_places requires a concrete field")
    if k.degree == 1:
        return (1, 0)
    r1 = len(_real_data_cached(k.poly.coefficients))
    return (r1, (k.degree - r1) // 2)


def real_places(k):
    return tuple(pl for pl in archimedean_places(k) if pl.kind == "real")


# ---------------------------------------------------------------------------
# Relative structure: places below an embedded subfield


def _image_mod_p(image, p):
    out = []
    for c in image:
        c = Fraction(c)
        if c.denominator % p == 0:
            raise NonMonogenicAtP(
                f"embedding image has a denominator divisible by {p}")
        out.append(c.numerator * pow(c.denominator, p - 2, p) % p)
    return gfpoly.normalize(out, p)


def _finite_place_below(emb, w):
    k = emb.source
    below = places_above(k, w.p)
    if k.degree == 1:
        v = below[0]
    else:
        p = w.p
        # reduce the image of the source generator in the residue field
        # F_p[y]/(factor of w) and find which factor below kills it
        img = _image_mod_p(emb.image, p)
        modw = list(w.factor)
        theta = gfpoly.mod(img, modw, p)
        matches = []
        for cand in below:
            val = _gf_eval_poly(cand.factor, theta, modw, p)
            if not val:
                matches.append(cand)
        assert len(matches) == 1, "residue matching must be unique"
        v = matches[0]
    ld, rem = divmod(w.e * w.f, v.e * v.f)
    assert rem == 0
    return v, ld


def _gf_eval_poly(f_coeffs, x, modulus, p):
    acc = []
    for c in reversed(f_coeffs):
        acc = gfpoly.mod(gfpoly.add(gfpoly.mul(acc, x, p), [c % p], p), modulus, p)
    return acc


def _real_place_below(emb, w):
    k, l = emb.source, emb.target
    if k.degree == 1:
        return archimedean_places(RATIONALS)[0], 1
    # the image of w's root is an irrational real root of the source
    # polynomial; shrink w's interval until the interval image isolates it
    kpoly = [Fraction(c) for c in k.poly.coefficients]
    seq_k = polys.sturm_sequence(kpoly)
    seq_l = polys.sturm_sequence([Fraction(c) for c in l.poly.coefficients])
    kplaces = real_places(k)
    bound = Fraction(polys.root_bound(kpoly))
    lo, hi = w.interval
    image = [Fraction(c) for c in emb.image]
    while True:
        ilo, ihi = polys.eval_interval(image, (lo, hi))
        if polys.sturm_count(seq_k, ilo, ihi) == 1:
            idx = polys.sturm_count(seq_k, -bound, ihi) - 1
            return kplaces[idx], 1
        lo, hi = polys.bisect_interval(seq_l, lo, hi)


def place_below(emb, w):
    """The unique place of the source field under w, with [L_w : K_v].

    Finite and real places are matched exactly.  Complex places carry no
    isolating data, so they can only be matched when the source field has
    a single archimedean place.
    """
    if w.kind == "finite":
        if w.factor is None:
            raise InvalidInput("cannot match an abstract place to a subfield")
        return _finite_place_below(emb, w)
    if w.kind == "real":
        if w.interval is None:
            w = real_places(emb.target)[w.index]
        return _real_place_below(emb, w)
    k = emb.source
    arch = archimedean_places(k)
    if len(arch) != 1:
        raise AmbiguousArchimedeanMatch(
            "complex places cannot be matched when the subfield has "
            "several archimedean places")
    v = arch[0]
    return v, 2 if v.kind == "real" else 1


# ---------------------------------------------------------------------------
# Composita


def _resultant_in_y(g, f_of_y):
    return polys.resultant([Fraction(c) for c in g], f_of_y)


def _shifted_resultant(f, g, t):
    """R_t(z) = Res_y(g(y), f(z - t*y)), computed by evaluation and
    interpolation; monic of degree deg(f)*deg(g) with integer
    coefficients."""
    m, n = polys.degree(f), polys.degree(g)
    mn = m * n
    xs, ys = [], []
    z0 = 0
    while len(xs) < mn + 1:
        # f(z0 - t*y) via Horner in the linear polynomial (z0 - t*y)
        lin = [z0, -t]
        acc = []
        for c in reversed(f):
            acc = polys.add(polys.mul(acc, lin), [c])
        xs.append(z0)
        ys.append(_resultant_in_y(g, [Fraction(c) for c in acc]))
        z0 = -z0 + (1 if z0 <= 0 else 0)
    coeffs = polys.lagrange_interpolate(xs, ys)
    out = []
    for c in coeffs:
        assert Fraction(c).denominator == 1
        out.append(int(c))
    out = polys.normalize(out)
    assert polys.degree(out) == mn and out[-1] == 1
    return out


def _recover_right_generator(f, g, t, h):
    """Inside Q[z]/(h) with generator gamma = alpha + t*beta, find beta as
    the unique common root of g(y) and f(gamma - t*y)."""
    hq = [Fraction(c) for c in h]
    gamma = [Fraction(0), Fraction(1)]
    # polynomials in y with coefficients in Q[z]/(h)
    a = [[Fraction(c)] if c else [] for c in g]
    lin = [gamma, [Fraction(-t)]]
    b = []
    for c in reversed(f):
        b = _nfpoly_add(_nfpoly_mul(b, lin, hq), [[Fraction(c)] if c else []])
    while b:
        a, b = b, _nfpoly_mod(a, b, hq)
    assert len(a) - 1 == 1, "recovered gcd must be linear"
    inv_lc = polys.nf_inv(a[1], hq)
    beta = polys.neg(polys.nf_mul(a[0], inv_lc, hq))
    return beta


def _nfpoly_add(a, b):
    n = max(len(a), len(b))
    out = []
    for i in range(n):
        ca = a[i] if i < len(a) else []
        cb = b[i] if i < len(b) else []
        out.append(polys.add(ca, cb))
    while out and not out[-1]:
        out.pop()
    return out


def _nfpoly_mul(a, b, h):
    if not a or not b:
        return []
    out = [[] for _ in range(len(a) + len(b) - 1)]
    for i, ca in enumerate(a):
        if not ca:
            continue
        for j, cb in enumerate(b):
            if not cb:
                continue
            out[i + j] = polys.add(out[i + j], polys.nf_mul(ca, cb, h))
    while out and not out[-1]:
        out.pop()
    return out


def _nfpoly_mod(a, b, h):
    assert b
    r = [list(c) for c in a]
    db = len(b) - 1
    inv_lb = polys.nf_inv(b[-1], h)
    for i in range(len(r) - 1, db - 1, -1):
        c = polys.nf_mul(r[i], inv_lb, h)
        if not c:
            continue
        for j, cb in enumerate(b):
            r[i - db + j] = polys.sub(r[i - db + j], polys.nf_mul(c, cb, h))
    while r and not r[-1]:
        r.pop()
    return r


@lru_cache(maxsize=None)
def _compositum_cached(f_coeffs, g_coeffs, limit):
    f, g = list(f_coeffs), list(g_coeffs)
    left = NumberField._trusted(f)
    right = NumberField._trusted(g)
    if max(left.degree, right.degree) > limit:
        raise DegreeLimitExceeded(
            f"every compositum has degree >= {max(left.degree, right.degree)} "
            f"> limit {limit}")
    if left.degree == 1:
        gen = Fraction(-f[0])
        return (CompositumCandidate(
            right,
            SubfieldMap(left, right, (gen,) if gen else ()),
            SubfieldMap.identity(right)),)
    if right.degree == 1:
        gen = Fraction(-g[0])
        return (CompositumCandidate(
            left,
            SubfieldMap.identity(left),
            SubfieldMap(right, left, (gen,) if gen else ())),)
    t = 0
    while True:
        rt = _shifted_resultant(f, g, t)
        if polys.is_squarefree_q(rt):
            break
        t += 1
    out = []
    for h in factoring.zassenhaus(rt):
        if polys.degree(h) > limit:
            raise DegreeLimitExceeded(
                f"compositum candidate of degree {polys.degree(h)} exceeds "
                f"limit {limit}")
        comp = NumberField._trusted(h)
        beta = _recover_right_generator(f, g, t, h)
        alpha = polys.sub([Fraction(0), Fraction(1)], polys.scale(beta, Fraction(t)))
        alpha = polys.nf_reduce(alpha, [Fraction(c) for c in h])
        out.append(CompositumCandidate(
            comp,
            SubfieldMap.make(left, comp, alpha),
            SubfieldMap.make(right, comp, beta)))
    return tuple(out)


def compositum_candidates(f_field, k_field, degree_limit=DEFAULT_DEGREE_LIMIT):
    """All composita of two concrete fields, one candidate per
    irreducible factor of the left polynomial over the right field,
    computed by the resultant method with the least squarefree shift."""
    if not (f_field.is_concrete and k_field.is_concrete):
        raise InvalidInput("compositum requires concrete fields")
    return _compositum_cached(f_field.poly.coefficients,
                              k_field.poly.coefficients, degree_limit)


# ---------------------------------------------------------------------------
# Newton polygons


def _ordp(n, p):
    v = 0
    while n % p == 0:
        n //= p
        v += 1
    return v


def newton_polygon(f, p):
    """Lower convex hull of (i, ord_p of coefficient i).

    Returns [(root valuation, horizontal length)] with valuations
    ascending; roots equal to zero are reported as a final (None, k)
    entry.
    """
    cs = f.coefficients if isinstance(f, IntegerPolynomial) else polys.normalize(f)
    if not cs or cs[-1] != 1:
        raise NotMonic("monic input required")
    k = 0
    while cs[k] == 0:
        k += 1
    body = cs[k:]
    pts = [(i, _ordp(abs(c), p)) for i, c in enumerate(body) if c != 0]
    hull = []
    for pt in pts:
        while len(hull) >= 2:
            (x1, y1), (x2, y2) = hull[-2], hull[-1]
            if (x2 - x1) * (pt[1] - y1) - (y2 - y1) * (pt[0] - x1) <= 0:
                hull.pop()
            else:
                break
        hull.append(pt)
    segments = []
    for (x1, y1), (x2, y2) in zip(hull, hull[1:]):
        lam = Fraction(y1 - y2, x2 - x1)
        segments.append((lam, x2 - x1))
    segments.sort(key=lambda s: s[0])
    if k:
        segments.append((None, k))
    return segments
