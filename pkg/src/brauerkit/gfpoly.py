"""Polynomial arithmetic and factorization over prime fields.

Polynomials are lists of ints in [0, p), ascending degree.  Factoring
uses squarefree decomposition, then distinct-degree splitting, then
Cantor-Zassenhaus equal-degree splitting with a fixed-seed generator so
results are deterministic.
"""

import random


def normalize(cs, p):
    cs = [c % p for c in cs]
    while cs and cs[-1] == 0:
        cs.pop()
    return cs


def degree(cs):
    return len(cs) - 1


def add(a, b, p):
    n = max(len(a), len(b))
    out = [0] * n
    for i, c in enumerate(a):
        out[i] = c
    for i, c in enumerate(b):
        out[i] = (out[i] + c) % p
    while out and out[-1] == 0:
        out.pop()
    return out


def sub(a, b, p):
    n = max(len(a), len(b))
    out = [0] * n
    for i, c in enumerate(a):
        out[i] = c
    for i, c in enumerate(b):
        out[i] = (out[i] - c) % p
    while out and out[-1] == 0:
        out.pop()
    return out


def mul(a, b, p):
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, ca in enumerate(a):
        if ca == 0:
            continue
        for j, cb in enumerate(b):
            out[i + j] += ca * cb
    return normalize(out, p)


def scale(a, k, p):
    k %= p
    if k == 0:
        return []
    return [(c * k) % p for c in a]


def divmod_(a, b, p):
    assert b, "division by zero polynomial"
    r = list(a)
    db = degree(b)
    inv = pow(b[-1], p - 2, p)
    q = [0] * max(0, len(r) - db)
    for i in range(len(r) - 1, db - 1, -1):
        c = (r[i] * inv) % p
        if c == 0:
            continue
        q[i - db] = c
        for j, cb in enumerate(b):
            r[i - db + j] = (r[i - db + j] - c * cb) % p
    while q and q[-1] == 0:
        q.pop()
    while r and r[-1] == 0:
        r.pop()
    return q, r


def mod(a, b, p):
    return divmod_(a, b, p)[1]


def monic(a, p):
    if not a:
        return []
    return scale(a, pow(a[-1], p - 2, p), p)


def gcd(a, b, p):
    while b:
        a, b = b, mod(a, b, p)
    return monic(a, p)


def pow_mod(base, e, h, p):
    result = [1]
    base = mod(base, h, p)
    while e:
        if e & 1:
            result = mod(mul(result, base, p), h, p)
        base = mod(mul(base, base, p), h, p)
        e >>= 1
    return result


def derivative(cs, p):
    return normalize([(i * c) % p for i, c in enumerate(cs)][1:], p)


def eval_at(cs, x, p):
    acc = 0
    for c in reversed(cs):
        acc = (acc * x + c) % p
    return acc


def _pth_root(cs, p):
    # over F_p the Frobenius fixes scalars, so v(x)^p has v's coefficients
    # sitting at the indices divisible by p
    return [cs[i] for i in range(0, len(cs), p)]


def squarefree_decomposition(f, p):
    """Monic f -> list of (monic squarefree part, multiplicity)."""
    out = []
    d = derivative(f, p)
    if not d:
        if degree(f) == 0:
            return []
        for g, m in squarefree_decomposition(_pth_root(f, p), p):
            out.append((g, m * p))
        return out
    c = gcd(f, d, p)
    w = divmod_(f, c, p)[0]
    i = 1
    while degree(w) > 0:
        y = gcd(w, c, p)
        fac = divmod_(w, y, p)[0]
        if degree(fac) > 0:
            out.append((fac, i))
        w = y
        c = divmod_(c, y, p)[0]
        i += 1
    if degree(c) > 0:
        # leftover carries exactly the factors with p | multiplicity; its
        # derivative vanishes, so the recursion takes the p-th root itself
        out.extend(squarefree_decomposition(c, p))
    return out


def distinct_degree(f, p):
    """Monic squarefree f -> list of (product of degree-d factors, d)."""
    out = []
    x = [0, 1]
    h = list(x)
    rest = list(f)
    d = 0
    while degree(rest) >= 2 * (d + 1):
        d += 1
        h = pow_mod(h, p, rest, p)
        g = gcd(sub(h, x, p), rest, p)
        if degree(g) > 0:
            out.append((g, d))
            rest = divmod_(rest, g, p)[0]
            h = mod(h, rest, p)
    if degree(rest) > 0:
        out.append((rest, degree(rest)))
    return out


def _random_poly(n, p, rng):
    while True:
        cs = normalize([rng.randrange(p) for _ in range(n)], p)
        if degree(cs) >= 1:
            return cs


def equal_degree(f, d, p, rng):
    """Split a monic squarefree f whose irreducible factors all have
    degree d (Cantor-Zassenhaus; trace map for p = 2)."""
    n = degree(f)
    if n == d:
        return [f]
    while True:
        a = _random_poly(n, p, rng)
        g = gcd(a, f, p)
        if 0 < degree(g) < n:
            break
        if p == 2:
            t = list(a)
            acc = list(a)
            for _ in range(d - 1):
                acc = pow_mod(acc, 2, f, p)
                t = add(t, acc, p)
            g = gcd(t, f, p)
        else:
            b = pow_mod(a, (p**d - 1) // 2, f, p)
            g = gcd(sub(b, [1], p), f, p)
        if 0 < degree(g) < n:
            break
    rest = divmod_(f, g, p)[0]
    return equal_degree(g, d, p, rng) + equal_degree(rest, d, p, rng)


def factor(f, p):
    """Full factorization of a monic polynomial over F_p.

    Returns a list of (monic irreducible, multiplicity) sorted by degree
    then by ascending coefficient tuple.  Deterministic.
    """
    f = normalize(f, p)
    assert f and f[-1] == 1, "monic input required"
    rng = random.Random(0x5EED ^ (p << 16) ^ len(f))
    out = []
    for part, mult in squarefree_decomposition(f, p):
        for block, d in distinct_degree(part, p):
            for irr in equal_degree(block, d, p, rng):
                out.append((irr, mult))
    out.sort(key=lambda fm: (degree(fm[0]), tuple(fm[0])))
    return out
