"""Factorization and irreducibility of monic integer polynomials.

The pipeline is classical: reduce modulo a few good primes, take the
cheap exits (irreducible mod p, or incompatible factor-degree patterns),
otherwise Hensel-lift the modular factors past the Mignotte bound and
recombine subsets.  Everything is exact integer arithmetic.
"""

from itertools import combinations
from math import isqrt

from . import gfpoly
from . import polys

_SMALL_PRIMES = (
    3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61, 67,
    71, 73, 79, 83, 89, 97, 101, 103, 107, 109, 113, 2,
)


def mignotte_bound(f):
    """Bound on the absolute coefficients of any monic factor of monic f."""
    n = polys.degree(f)
    norm2 = isqrt(sum(c * c for c in f)) + 1
    return norm2 << n


def _reduce_sym(c, m):
    c %= m
    if 2 * c > m:
        c -= m
    return c


def _poly_sym(cs, m):
    return polys.normalize([_reduce_sym(c, m) for c in cs])


def _gf_ext_gcd(a, b, p):
    r0, r1 = list(a), list(b)
    s0, s1 = [1], []
    t0, t1 = [], [1]
    while r1:
        q, r = gfpoly.divmod_(r0, r1, p)
        r0, r1 = r1, r
        s0, s1 = s1, gfpoly.sub(s0, gfpoly.mul(q, s1, p), p)
        t0, t1 = t1, gfpoly.sub(t0, gfpoly.mul(q, t1, p), p)
    assert gfpoly.degree(r0) == 0, "inputs not coprime"
    inv = pow(r0[0], p - 2, p)
    return gfpoly.scale(s0, inv, p), gfpoly.scale(t0, inv, p)


def _hensel_pair(f, gbar, hbar, p, pk):
    """Lift f = g*h (mod p) with monic coprime g, h to the same identity
    mod pk, one linear step at a time."""
    s, t = _gf_ext_gcd(gbar, hbar, p)
    g = [c % pk for c in gbar]
    h = [c % pk for c in hbar]
    m = p
    while m < pk:
        e = polys.sub(f, polys.mul(g, h))
        ebar = gfpoly.normalize([(c // m) % p for c in e], p)
        if ebar:
            u = gfpoly.mod(gfpoly.mul(t, ebar, p), gbar, p)
            num = gfpoly.sub(ebar, gfpoly.mul(u, hbar, p), p)
            w, r = gfpoly.divmod_(num, gbar, p)
            assert not r, "Hensel step failed to divide"
            g = polys.normalize([(c + m * u[i] if i < len(u) else c) % pk
                                 for i, c in enumerate(g)])
            h = polys.normalize([(c + m * w[i] if i < len(w) else c) % pk
                                 for i, c in enumerate(h)])
        m *= p
    return g, h


def _hensel_lift(f, factors, p, pk):
    """Lift pairwise-coprime monic factors of f mod p to factors mod pk."""
    if len(factors) == 1:
        return [polys.normalize([c % pk for c in f])]
    mid = len(factors) // 2
    gbar = [1]
    for fac in factors[:mid]:
        gbar = gfpoly.mul(gbar, fac, p)
    hbar = [1]
    for fac in factors[mid:]:
        hbar = gfpoly.mul(hbar, fac, p)
    g, h = _hensel_pair(f, gbar, hbar, p, pk)
    return _hensel_lift(g, factors[:mid], p, pk) + _hensel_lift(h, factors[mid:], p, pk)


def _degree_mask(degs, n):
    mask = 1
    for d in degs:
        mask |= mask << d
    full = (1 << (n + 1)) - 1
    return mask & full


def _modular_data(f, max_primes=3):
    """Factor f modulo up to max_primes good primes.

    Returns (best, masks) where best = (p, factors) minimizes the factor
    count and masks are attainable factor-degree bitmasks per prime.
    best is None when some reduction is irreducible.
    """
    n = polys.degree(f)
    best = None
    masks = []
    used = 0
    for p in _SMALL_PRIMES:
        fbar = gfpoly.normalize(f, p)
        if gfpoly.degree(fbar) != n:
            continue
        if gfpoly.degree(gfpoly.gcd(fbar, gfpoly.derivative(fbar, p), p)) != 0:
            continue
        factors = [g for g, _ in gfpoly.factor(fbar, p)]
        if len(factors) == 1:
            return None, []
        masks.append(_degree_mask([gfpoly.degree(g) for g in factors], n))
        if best is None or len(factors) < len(best[1]):
            best = (p, factors)
        used += 1
        if used >= max_primes:
            break
    assert best is not None, "no good prime found"
    return best, masks


def zassenhaus(f):
    """Irreducible monic factors of a monic squarefree integer polynomial."""
    n = polys.degree(f)
    if n <= 1:
        return [list(f)]
    best, masks = _modular_data(f)
    if best is None:
        return [list(f)]
    combined = masks[0]
    for m in masks[1:]:
        combined &= m
    if combined == (1 | (1 << n)):
        return [list(f)]
    p, factors = best
    bound = 2 * mignotte_bound(f)
    pk = p
    while pk <= bound:
        pk *= p
    pool = _hensel_lift(f, factors, p, pk)
    result = []
    rest = list(f)
    s = 1
    while 2 * s <= len(pool):
        found = False
        for combo in combinations(range(len(pool)), s):
            cand = [1]
            for i in combo:
                cand = _poly_sym(polys.mul(cand, pool[i]), pk)
            q, r = polys.monic_divmod(rest, cand)
            if not r:
                result.append(cand)
                rest = q
                pool = [g for i, g in enumerate(pool) if i not in combo]
                found = True
                break
        if not found:
            s += 1
    if polys.degree(rest) > 0:
        result.append(rest)
    result.sort(key=lambda g: (polys.degree(g), tuple(g)))
    return result


def squarefree_split(f):
    """Yun decomposition of a monic integer polynomial: [(part, mult)]."""
    out = []
    g = polys.clear_denominators(polys.gcd_q(f, polys.derivative(f)))
    if polys.degree(g) == 0:
        return [(list(f), 1)]
    w = polys.monic_divmod(f, _monic_int(g))[0]
    c = _monic_int(g)
    i = 1
    while polys.degree(w) > 0:
        y = _monic_int(polys.clear_denominators(polys.gcd_q(w, c)))
        fac = polys.monic_divmod(w, y)[0]
        if polys.degree(fac) > 0:
            out.append((fac, i))
        w = y
        c = polys.monic_divmod(c, y)[0]
        i += 1
    return out


def _monic_int(g):
    if g and g[-1] < 0:
        g = polys.neg(g)
    assert not g or g[-1] == 1
    return g


def factor_monic(f):
    """Full factorization of a monic integer polynomial into monic
    irreducibles with multiplicities, sorted."""
    out = []
    for part, mult in squarefree_split(f):
        for irr in zassenhaus(part):
            out.append((irr, mult))
    out.sort(key=lambda fm: (polys.degree(fm[0]), tuple(fm[0])))
    return out


def is_irreducible(f):
    """Irreducibility over Q of a monic integer polynomial.

    Tries the rational-root test, then factor-degree patterns modulo a
    few primes, then a full lift-and-recombine factorization.
    """
    n = polys.degree(f)
    if n <= 0:
        return False
    if n == 1:
        return True
    a0 = f[0]
    if a0 == 0:
        return False
    d = 1
    while d * d <= abs(a0):
        if a0 % d == 0:
            for r in (d, -d, a0 // d, -(a0 // d)):
                if polys.eval_at(f, r) == 0:
                    return False
        d += 1
    if not polys.is_squarefree_q(f):
        return False
    best, masks = _modular_data(f)
    if best is None:
        return True
    combined = masks[0]
    for m in masks[1:]:
        combined &= m
    if combined == (1 | (1 << n)):
        return True
    return len(zassenhaus(f)) == 1
