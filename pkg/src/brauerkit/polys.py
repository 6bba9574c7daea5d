"""Dense univariate polynomial arithmetic over Z and Q.

Polynomials are plain lists of coefficients in ascending degree order;
the zero polynomial is the empty list.  Integer routines never
introduce fractions; rational routines accept ints or Fractions and
return Fractions.  Everything here is exact.
"""

from fractions import Fraction
from math import gcd as int_gcd

from .errors import NotSquarefree


def normalize(cs):
    """Strip trailing zeros; return a fresh list."""
    cs = list(cs)
    while cs and cs[-1] == 0:
        cs.pop()
    return cs


def degree(cs):
    return len(cs) - 1


def is_zero(cs):
    return not cs


def leading(cs):
    return cs[-1]


def constant(c):
    return [c] if c != 0 else []


def add(a, b):
    n = max(len(a), len(b))
    out = [0] * n
    for i, c in enumerate(a):
        out[i] = c
    for i, c in enumerate(b):
        out[i] += c
    return normalize(out)


def neg(a):
    return [-c for c in a]


def sub(a, b):
    return add(a, neg(b))


def mul(a, b):
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, ca in enumerate(a):
        if ca == 0:
            continue
        for j, cb in enumerate(b):
            out[i + j] += ca * cb
    return normalize(out)


def scale(a, k):
    if k == 0:
        return []
    return [c * k for c in a]


def eval_at(cs, x):
    acc = 0
    for c in reversed(cs):
        acc = acc * x + c
    return acc


def derivative(cs):
    return normalize([i * c for i, c in enumerate(cs)][1:])


def shift_degree(cs, k):
    """Multiply by x**k."""
    if not cs:
        return []
    return [0] * k + list(cs)


def monic_divmod(a, b):
    """Division by a monic polynomial; stays in the coefficient ring."""
    assert b and b[-1] == 1
    r = list(a)
    db = degree(b)
    q = [0] * max(0, len(r) - db)
    for i in range(len(r) - 1, db - 1, -1):
        c = r[i]
        if c == 0:
            continue
        q[i - db] = c
        for j, cb in enumerate(b):
            r[i - db + j] -= c * cb
    return normalize(q), normalize(r)


def divmod_q(a, b):
    """Rational division; coefficients become Fractions."""
    assert b
    r = [Fraction(c) for c in a]
    db = degree(b)
    lb = Fraction(b[-1])
    q = [Fraction(0)] * max(0, len(r) - db)
    for i in range(len(r) - 1, db - 1, -1):
        c = r[i]
        if c == 0:
            continue
        c = c / lb
        q[i - db] = c
        for j, cb in enumerate(b):
            r[i - db + j] -= c * cb
    return normalize(q), normalize(r)


def monic_q(a):
    assert a
    lc = Fraction(a[-1])
    return [Fraction(c) / lc for c in a]


def gcd_q(a, b):
    """Monic gcd over Q; returns [] only when both inputs are zero."""
    a = [Fraction(c) for c in a]
    b = [Fraction(c) for c in b]
    while b:
        a, b = b, divmod_q(a, b)[1]
    return monic_q(a) if a else []


def ext_gcd_q(a, b):
    """Extended gcd over Q: returns (g, u, v) with u*a + v*b = g, g monic."""
    r0, r1 = [Fraction(c) for c in a], [Fraction(c) for c in b]
    u0, u1 = [Fraction(1)], []
    v0, v1 = [], [Fraction(1)]
    while r1:
        q, r = divmod_q(r0, r1)
        r0, r1 = r1, r
        u0, u1 = u1, sub(u0, mul(q, u1))
        v0, v1 = v1, sub(v0, mul(q, v1))
    if not r0:
        return [], u0, v0
    lc = Fraction(r0[-1])
    inv = 1 / lc
    return scale(r0, inv), scale(u0, inv), scale(v0, inv)


def content(cs):
    g = 0
    for c in cs:
        g = int_gcd(g, abs(c))
    return g


def is_squarefree_q(f):
    return degree(gcd_q(f, derivative(f))) <= 0


def clear_denominators(cs):
    """Rescale a rational polynomial to a primitive integer one."""
    from math import lcm

    den = 1
    for c in cs:
        den = lcm(den, Fraction(c).denominator)
    out = [int(Fraction(c) * den) for c in cs]
    g = content(out)
    if g > 1:
        out = [c // g for c in out]
    return out


# ---------------------------------------------------------------------------
# Sturm sequences and real root isolation


def sturm_sequence(f):
    """Sturm chain of a squarefree rational polynomial.

    Raises NotSquarefree when gcd(f, f') is nonconstant.
    """
    f = [Fraction(c) for c in f]
    seq = [f, derivative(f)]
    while seq[-1]:
        r = divmod_q(seq[-2], seq[-1])[1]
        seq.append(neg(r))
    seq.pop()
    if degree(seq[-1]) > 0:
        raise NotSquarefree("polynomial has a repeated root")
    return seq


def _variations(signs):
    v = 0
    prev = 0
    for s in signs:
        if s == 0:
            continue
        if prev != 0 and s != prev:
            v += 1
        prev = s
    return v


def _sign(x):
    return (x > 0) - (x < 0)


def variations_at(seq, x):
    return _variations([_sign(eval_at(g, x)) for g in seq])


def variations_at_inf(seq, positive):
    signs = []
    for g in seq:
        if not g:
            signs.append(0)
        elif positive:
            signs.append(_sign(g[-1]))
        else:
            signs.append(_sign(g[-1]) * (-1) ** (degree(g) % 2))
    return _variations(signs)


def sturm_count(seq, lo, hi):
    """Number of distinct real roots in the half-open interval (lo, hi]."""
    return variations_at(seq, lo) - variations_at(seq, hi)


def count_real_roots_q(f):
    seq = sturm_sequence(f)
    return variations_at_inf(seq, False) - variations_at_inf(seq, True)


def root_bound(f):
    """Integer B with every real root in (-B, B)."""
    lc = abs(Fraction(f[-1]))
    m = max(abs(Fraction(c)) for c in f)
    b = 1 + m / lc
    return int(b) + 1


def isolate_real_roots(f):
    """Disjoint isolating intervals (lo, hi], one real root each, ascending.

    The input must be squarefree.
    """
    seq = sturm_sequence(f)
    b = Fraction(root_bound(f))
    total = sturm_count(seq, -b, b)
    out = []
    stack = [(-b, b, total)]
    while stack:
        lo, hi, cnt = stack.pop()
        if cnt == 0:
            continue
        if cnt == 1:
            out.append((lo, hi))
            continue
        mid = (lo + hi) / 2
        left = sturm_count(seq, lo, mid)
        stack.append((mid, hi, cnt - left))
        stack.append((lo, mid, left))
    return sorted(out)


def refine_interval(seq, lo, hi, width):
    """Shrink an isolating interval below the requested width."""
    while hi - lo > width:
        mid = (lo + hi) / 2
        if sturm_count(seq, lo, mid) == 1:
            hi = mid
        else:
            lo = mid
    return lo, hi


def bisect_interval(seq, lo, hi):
    mid = (lo + hi) / 2
    if sturm_count(seq, lo, mid) == 1:
        return lo, mid
    return mid, hi


# ---------------------------------------------------------------------------
# Resultants and interpolation


def resultant(a, b):
    """res(a, b) with the convention res(a, b) = lc(a)^deg(b) * prod b(alpha)
    over the roots alpha of a."""
    a = [Fraction(c) for c in a]
    b = [Fraction(c) for c in b]
    if not a or not b:
        return Fraction(0)
    da, db = degree(a), degree(b)
    if da == 0:
        return a[0] ** db
    if db == 0:
        return b[0] ** da
    if da < db:
        sign = -1 if (da % 2 and db % 2) else 1
        return sign * resultant(b, a)
    # reduce a modulo b: res(a, b) = (-1)^(da*db) lc(b)^(da - dr) res(b, r)
    r = divmod_q(a, b)[1]
    if not r:
        return Fraction(0)
    sign = -1 if (da % 2 and db % 2) else 1
    return sign * leading(b) ** (da - degree(r)) * resultant(b, r)


def lagrange_interpolate(xs, ys):
    """Rational polynomial through the given points."""
    out = []
    for i, (xi, yi) in enumerate(zip(xs, ys)):
        basis = [Fraction(1)]
        den = Fraction(1)
        for j, xj in enumerate(xs):
            if j == i:
                continue
            basis = mul(basis, [Fraction(-xj), Fraction(1)])
            den *= xi - xj
        out = add(out, scale(basis, Fraction(yi) / den))
    return out


# ---------------------------------------------------------------------------
# Arithmetic in Q[x]/(h) for a monic h, plus rational intervals


def nf_reduce(a, h):
    return divmod_q(a, h)[1]


def nf_mul(a, b, h):
    return nf_reduce(mul(a, b), h)


def nf_inv(a, h):
    g, u, _ = ext_gcd_q(a, h)
    assert degree(g) == 0, "noninvertible element: modulus not irreducible?"
    return nf_reduce(u, h)


def iv_add(a, b):
    return (a[0] + b[0], a[1] + b[1])


def iv_mul(a, b):
    ps = (a[0] * b[0], a[0] * b[1], a[1] * b[0], a[1] * b[1])
    return (min(ps), max(ps))


def eval_interval(cs, iv):
    """Interval Horner evaluation; conservative but exact endpoints."""
    acc = (Fraction(0), Fraction(0))
    for c in reversed(cs):
        acc = iv_mul(acc, iv)
        acc = iv_add(acc, (Fraction(c), Fraction(c)))
    return acc
