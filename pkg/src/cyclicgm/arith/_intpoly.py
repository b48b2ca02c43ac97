"""Sparse polynomials over the integers, as plain dicts.

A polynomial is a ``dict`` mapping exponent tuples (all of the same length)
to nonzero ``int`` coefficients.  These helpers are the fast inner layer
used by :mod:`cyclicgm.arith.multipoly` for exact division and GCDs; they
never see ``Fraction`` objects.

The GCD is the subresultant polynomial remainder sequence over
``Z[other variables]``, with content / primitive-part splitting and
recursion through the coefficient ring.
"""

from __future__ import annotations

from math import gcd as igcd

IntPoly = dict  # dict[tuple[int, ...], int]


def grlex_key(e):
    return (sum(e), e)


def is_constant(p: IntPoly) -> bool:
    return len(p) <= 1 and all(not any(e) for e in p)


def is_one(p: IntPoly) -> bool:
    if len(p) != 1:
        return False
    ((e, c),) = p.items()
    return c == 1 and not any(e)


def one(nvars: int) -> IntPoly:
    return {(0,) * nvars: 1}


def add(p: IntPoly, q: IntPoly) -> IntPoly:
    if len(p) < len(q):
        p, q = q, p
    r = dict(p)
    for e, c in q.items():
        s = r.get(e, 0) + c
        if s:
            r[e] = s
        else:
            r.pop(e, None)
    return r


def sub(p: IntPoly, q: IntPoly) -> IntPoly:
    r = dict(p)
    for e, c in q.items():
        s = r.get(e, 0) - c
        if s:
            r[e] = s
        else:
            r.pop(e, None)
    return r


def scale(p: IntPoly, k: int) -> IntPoly:
    if not k:
        return {}
    return {e: c * k for e, c in p.items()}


def mul(p: IntPoly, q: IntPoly) -> IntPoly:
    if not p or not q:
        return {}
    if len(p) < len(q):
        p, q = q, p
    r: IntPoly = {}
    get = r.get
    for e2, c2 in q.items():
        for e1, c1 in p.items():
            e = tuple(a + b for a, b in zip(e1, e2))
            r[e] = get(e, 0) + c1 * c2
    return {e: c for e, c in r.items() if c}


def power(p: IntPoly, k: int, nvars: int) -> IntPoly:
    result = one(nvars)
    base = p
    while k:
        if k & 1:
            result = mul(result, base)
        k >>= 1
        if k:
            base = mul(base, base)
    return result


def shift(p: IntPoly, m) -> IntPoly:
    """Multiply by the monomial with exponent ``m`` (entries may be negative)."""
    if not any(m):
        return p
    return {tuple(a + b for a, b in zip(e, m)): c for e, c in p.items()}


def content(p: IntPoly) -> int:
    g = 0
    for c in p.values():
        g = igcd(g, c)
        if g == 1:
            break
    return g


def normalize(p: IntPoly) -> IntPoly:
    """Primitive associate with positive grlex-leading coefficient."""
    if not p:
        return {}
    g = content(p)
    lead = p[max(p, key=grlex_key)]
    if lead < 0:
        g = -g
    if g == 1:
        return p
    return {e: c // g for e, c in p.items()}


def divexact(p: IntPoly, q: IntPoly) -> IntPoly:
    """Return ``p / q``; raise ``ArithmeticError`` if ``q`` does not divide ``p``."""
    if not q:
        raise ZeroDivisionError("division by the zero polynomial")
    if not p:
        return {}
    if len(q) == 1:
        ((eq, cq),) = q.items()
        out = {}
        for e, c in p.items():
            d = tuple(a - b for a, b in zip(e, eq))
            if min(d) < 0 or c % cq:
                raise ArithmeticError("inexact polynomial division")
            out[d] = c // cq
        return out
    lq = max(q)
    cq = q[lq]
    rest = [(e, c) for e, c in q.items() if e != lq]
    r = dict(p)
    quot: IntPoly = {}
    while r:
        lr = max(r)
        cr = r.pop(lr)
        d = tuple(a - b for a, b in zip(lr, lq))
        if min(d) < 0 or cr % cq:
            raise ArithmeticError("inexact polynomial division")
        k = cr // cq
        quot[d] = k
        for e, c in rest:
            t = tuple(a + b for a, b in zip(e, d))
            s = r.get(t, 0) - k * c
            if s:
                r[t] = s
            else:
                r.pop(t, None)
    return quot


def used_vars(p: IntPoly) -> set:
    out = set()
    for e in p:
        for i, a in enumerate(e):
            if a:
                out.add(i)
    return out


def min_exponents(p: IntPoly):
    it = iter(p)
    m = list(next(it))
    for e in it:
        for i, a in enumerate(e):
            if a < m[i]:
                m[i] = a
    return tuple(m)


# --- univariate views -----------------------------------------------------


def to_uni(p: IntPoly, v: int) -> list:
    """Coefficient list of ``p`` in variable ``v``; coefficients omit ``v``."""
    deg = max(e[v] for e in p)
    out = [dict() for _ in range(deg + 1)]
    for e, c in p.items():
        k = e[v]
        out[k][e[:v] + (0,) + e[v + 1:]] = c
    return out


def from_uni(coeffs: list, v: int) -> IntPoly:
    out: IntPoly = {}
    for k, cp in enumerate(coeffs):
        for e, c in cp.items():
            out[e[:v] + (k,) + e[v + 1:]] = c
    return out


def _trim(a: list) -> list:
    while a and not a[-1]:
        a.pop()
    return a


def _uni_prem(a: list, b: list) -> list:
    """Pseudo-remainder ``lc(b)**(deg a - deg b + 1) * a mod b``."""
    db = len(b) - 1
    lcb = b[-1]
    r = list(a)
    e = len(a) - len(b) + 1
    while len(r) - 1 >= db and r:
        lcr = r[-1]
        k = len(r) - 1 - db
        r = [mul(c, lcb) for c in r[:-1]]
        for i in range(db):
            if b[i]:
                r[i + k] = sub(r[i + k], mul(lcr, b[i]))
        e -= 1
        _trim(r)
    if e > 0 and r:
        f = lcb if e == 1 else power(lcb, e, len(next(iter(lcb))))
        r = [mul(c, f) for c in r]
    return r


def _uni_content(a: list) -> IntPoly:
    coeffs = sorted((c for c in a if c), key=len)
    g = coeffs[0]
    for c in coeffs[1:]:
        if is_one(g):
            break
        g = gcd(g, c)
    return normalize(g)


def _subresultant(a: list, b: list) -> list:
    if len(a) < len(b):
        a, b = b, a
    nvars = len(next(iter(a[-1])))
    g = one(nvars)
    h = one(nvars)
    while True:
        delta = len(a) - len(b)
        r = _uni_prem(a, b)
        if not r:
            return b
        if len(r) == 1:
            return [one(nvars)]
        a = b
        den = mul(g, h if delta == 1 else power(h, delta, nvars))
        b = [divexact(c, den) for c in r]
        g = a[-1]
        if delta == 0:
            pass
        elif delta == 1:
            h = g
        else:
            h = divexact(power(g, delta, nvars), power(h, delta - 1, nvars))


def gcd(p: IntPoly, q: IntPoly) -> IntPoly:
    """Primitive, sign-normalized greatest common divisor over ``Z``."""
    if not p:
        return normalize(q)
    if not q:
        return normalize(p)
    mp, mq = min_exponents(p), min_exponents(q)
    m = tuple(min(a, b) for a, b in zip(mp, mq))
    p = shift(p, tuple(-a for a in mp))
    q = shift(q, tuple(-a for a in mq))
    return shift(_gcd_nomono(p, q), m)


def _gcd_nomono(p: IntPoly, q: IntPoly) -> IntPoly:
    nvars = len(next(iter(p)))
    vp, vq = used_vars(p), used_vars(q)
    if not vp or not vq:
        return one(nvars)
    if p == q:
        return normalize(p)
    for lone, other, var_set in ((p, q, vp - vq), (q, p, vq - vp)):
        if var_set:
            v = max(var_set)
            g = other
            for c in sorted((c for c in to_uni(lone, v) if c), key=len):
                g = gcd(g, c)
                if is_constant(g):
                    return one(nvars)
            return normalize(g)
    v = max(vp & vq)
    a, b = to_uni(p, v), to_uni(q, v)
    ca, cb = _uni_content(a), _uni_content(b)
    if not is_one(ca):
        a = [divexact(c, ca) if c else c for c in a]
    if not is_one(cb):
        b = [divexact(c, cb) if c else c for c in b]
    cont = gcd(ca, cb)
    g = _subresultant(a, b)
    if len(g) > 1:
        cg = _uni_content(g)
        if not is_one(cg):
            g = [divexact(c, cg) if c else c for c in g]
        prim = from_uni(g, v)
    else:
        prim = one(nvars)
    return normalize(mul(cont, prim))
