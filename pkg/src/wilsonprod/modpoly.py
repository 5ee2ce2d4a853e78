"""Univariate polynomial arithmetic and factorization over F_p.

Polynomials are tuples of ints in [0, p), constant term first, trimmed.
Factorization runs squarefree decomposition, then distinct-degree splitting,
then equal-degree splitting: Cantor-Zassenhaus with random binomials when
the residue field is large, and an exhaustive search over monic divisors
when p^k is small (below 10^4), which keeps the common cases free of
randomness.  The factor list is returned in a canonical sorted order.
"""

from __future__ import annotations

import random
from typing import Sequence

EDF_EXHAUSTIVE_LIMIT = 10_000

Poly = tuple


def trim(cs: Sequence[int]) -> Poly:
    cs = list(cs)
    while cs and cs[-1] == 0:
        cs.pop()
    return tuple(cs)


def normalize(cs: Sequence[int], p: int) -> Poly:
    return trim(c % p for c in cs)


def degree(a: Poly) -> int:
    return len(a) - 1


def add(a: Poly, b: Poly, p: int) -> Poly:
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for i, c in enumerate(b):
        out[i] = (out[i] + c) % p
    return trim(out)


def sub(a: Poly, b: Poly, p: int) -> Poly:
    out = list(a) + [0] * max(0, len(b) - len(a))
    for i, c in enumerate(b):
        out[i] = (out[i] - c) % p
    return trim(out)


def mul(a: Poly, b: Poly, p: int) -> Poly:
    if not a or not b:
        return ()
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] += ai * bj
    return trim(c % p for c in out)


def scale(a: Poly, c: int, p: int) -> Poly:
    c %= p
    return trim((x * c) % p for x in a)


def monic(a: Poly, p: int) -> Poly:
    if not a:
        return a
    lead = a[-1]
    if lead == 1:
        return a
    return scale(a, pow(lead, -1, p), p)


def div_mod(a: Poly, b: Poly, p: int) -> tuple[Poly, Poly]:
    assert b, "division by zero polynomial"
    inv = pow(b[-1], -1, p)
    rem = list(a)
    db = len(b) - 1
    if len(rem) <= db:
        return (), trim(rem)
    quo = [0] * (len(rem) - db)
    for k in range(len(rem) - 1, db - 1, -1):
        c = (rem[k] * inv) % p
        if c:
            quo[k - db] = c
            for j in range(db + 1):
                rem[k - db + j] = (rem[k - db + j] - c * b[j]) % p
    return trim(quo), trim(rem)


def mod(a: Poly, b: Poly, p: int) -> Poly:
    return div_mod(a, b, p)[1]


def gcd(a: Poly, b: Poly, p: int) -> Poly:
    while b:
        a, b = b, mod(a, b, p)
    return monic(a, p)


def pow_mod(base: Poly, e: int, modulus: Poly, p: int) -> Poly:
    out: Poly = (1,)
    base = mod(base, modulus, p)
    while e:
        if e & 1:
            out = mod(mul(out, base, p), modulus, p)
        base = mod(mul(base, base, p), modulus, p)
        e >>= 1
    return out


def derivative(a: Poly, p: int) -> Poly:
    return trim((i * c) % p for i, c in enumerate(a) if i > 0)


def _pth_root(a: Poly, p: int) -> Poly:
    """p-th root of a polynomial in F_p[x^p] (Frobenius is identity on F_p)."""
    return trim(a[i] for i in range(0, len(a), p))


def squarefree_parts(f: Poly, p: int) -> list[tuple[Poly, int]]:
    """Yun-style decomposition in characteristic p: [(g, m)] with f = prod g^m.

    Each g is monic squarefree, the multiplicities are distinct, and parts
    whose multiplicity is divisible by p come out of the recursive p-th-root
    branch.
    """
    f = monic(f, p)
    out: dict[int, Poly] = {}
    d = derivative(f, p)
    if not d:
        return [(g, m * p) for g, m in squarefree_parts(_pth_root(f, p), p)]
    c = gcd(f, d, p)
    w = div_mod(f, c, p)[0]
    i = 1
    while degree(w) > 0:
        y = gcd(w, c, p)
        z = div_mod(w, y, p)[0]
        if degree(z) > 0:
            out[i] = mul(out[i], z, p) if i in out else z
        w = y
        c = div_mod(c, y, p)[0]
        i += 1
    if degree(c) > 0:
        for g, m in squarefree_parts(_pth_root(c, p), p):
            mp = m * p
            out[mp] = mul(out[mp], g, p) if mp in out else g
    return sorted(((g, m) for m, g in out.items()), key=lambda t: t[1])


def distinct_degree(g: Poly, p: int) -> list[tuple[Poly, int]]:
    """Split monic squarefree g into products of equal-degree irreducibles."""
    out = []
    h: Poly = (0, 1)  # x
    k = 0
    while degree(g) >= 2 * (k + 1):
        k += 1
        h = pow_mod(h, p, g, p)
        d = gcd(sub(h, (0, 1), p), g, p)
        if degree(d) > 0:
            out.append((d, k))
            g = div_mod(g, d, p)[0]
            h = mod(h, g, p)
    if degree(g) > 0:
        out.append((g, degree(g)))
    return out


def _edf_exhaustive(h: Poly, k: int, p: int) -> list[Poly]:
    """All irreducible factors of h (each of degree k) by monic divisor search."""
    out = []
    # candidates in lexicographic coefficient order => deterministic
    total = p ** k
    for idx in range(total):
        if degree(h) == k:
            out.append(h)
            return out
        cand = []
        v = idx
        for _ in range(k):
            cand.append(v % p)
            v //= p
        cand.append(1)
        q, r = div_mod(h, tuple(cand), p)
        if not r:
            out.append(tuple(cand))
            h = q
    assert degree(h) <= 0, "exhaustive split must consume the polynomial"
    return out


def _edf_random(h: Poly, k: int, p: int, rng: random.Random) -> list[Poly]:
    """Cantor-Zassenhaus equal-degree splitting."""
    if degree(h) == k:
        return [h]
    n = degree(h)
    while True:
        if p == 2:
            # trace-map splitting
            r = tuple(rng.randrange(2) for _ in range(n)) or (1,)
            t: Poly = ()
            acc = trim(r)
            for _ in range(k):
                t = add(t, acc, p)
                acc = mod(mul(acc, acc, p), h, p)
            d = gcd(t, h, p)
        else:
            # random binomial x + a, powered to (p^k - 1) / 2
            a = rng.randrange(p)
            s = pow_mod((a, 1), (p ** k - 1) // 2, h, p)
            d = gcd(sub(s, (1,), p), h, p)
        if 0 < degree(d) < degree(h):
            rest = div_mod(h, d, p)[0]
            return _edf_random(d, k, p, rng) + _edf_random(rest, k, p, rng)


def factor(f: Poly, p: int) -> list[tuple[Poly, int]]:
    """Factor monic f over F_p into [(irreducible, multiplicity)].

    Sorted by (degree, coefficient tuple constant-term first) so repeated
    calls and different machines agree on the ordering.
    """
    f = normalize(f, p)
    assert degree(f) >= 1 and f[-1] == 1, "need a monic polynomial"
    found: dict[Poly, int] = {}
    for part, m in squarefree_parts(f, p):
        for prod, k in distinct_degree(part, p):
            if p ** k <= EDF_EXHAUSTIVE_LIMIT:
                irreducibles = _edf_exhaustive(prod, k, p)
            else:
                rng = random.Random(f"edf:{p}:{prod}")
                irreducibles = _edf_random(prod, k, p, rng)
            for g in irreducibles:
                found[g] = found.get(g, 0) + m
    return sorted(found.items(), key=lambda t: (degree(t[0]), t[0]))
