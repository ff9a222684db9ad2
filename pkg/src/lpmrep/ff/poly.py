"""Dense polynomials over a prime field F_p.

A polynomial is a tuple of residues in [0, p), lowest degree first, with no
trailing zeros; ``()`` is the zero polynomial.  All functions take the prime
as an explicit argument.
"""

from __future__ import annotations

from typing import Sequence

from .primes import prime_factors

Poly = tuple[int, ...]


def normalize(c: Sequence[int], p: int) -> Poly:
    out = [x % p for x in c]
    while out and out[-1] == 0:
        out.pop()
    return tuple(out)


def degree(f: Poly) -> int:
    return len(f) - 1


def add(f: Poly, g: Poly, p: int) -> Poly:
    if len(f) < len(g):
        f, g = g, f
    out = list(f)
    for i, c in enumerate(g):
        out[i] = (out[i] + c) % p
    return normalize(out, p)


def sub(f: Poly, g: Poly, p: int) -> Poly:
    return add(f, tuple(-c % p for c in g), p)


def mul(f: Poly, g: Poly, p: int) -> Poly:
    if not f or not g:
        return ()
    out = [0] * (len(f) + len(g) - 1)
    for i, a in enumerate(f):
        if a:
            for j, b in enumerate(g):
                out[i + j] += a * b
    return normalize(out, p)


def divmod_(f: Poly, g: Poly, p: int) -> tuple[Poly, Poly]:
    if not g:
        raise ZeroDivisionError("polynomial division by zero")
    r = list(f)
    dg = len(g) - 1
    inv_lead = pow(g[-1], -1, p)
    q = [0] * max(len(f) - dg, 0)
    for k in range(len(r) - 1, dg - 1, -1):
        c = r[k] * inv_lead % p
        if c:
            q[k - dg] = c
            for i, gi in enumerate(g):
                r[k - dg + i] = (r[k - dg + i] - c * gi) % p
    return normalize(q, p), normalize(r[:dg], p)


def mod(f: Poly, g: Poly, p: int) -> Poly:
    return divmod_(f, g, p)[1]


def monic(f: Poly, p: int) -> Poly:
    if not f:
        return f
    inv = pow(f[-1], -1, p)
    return tuple(c * inv % p for c in f)


def gcd(f: Poly, g: Poly, p: int) -> Poly:
    while g:
        f, g = g, mod(f, g, p)
    return monic(f, p)


def ext_gcd(f: Poly, g: Poly, p: int) -> tuple[Poly, Poly, Poly]:
    """Return (d, u, v) with u*f + v*g = d and d monic."""
    r0, r1 = f, g
    u0, u1 = (1,), ()
    v0, v1 = (), (1,)
    while r1:
        q, r = divmod_(r0, r1, p)
        r0, r1 = r1, r
        u0, u1 = u1, sub(u0, mul(q, u1, p), p)
        v0, v1 = v1, sub(v0, mul(q, v1, p), p)
    if not r0:
        return (), u0, v0
    inv = pow(r0[-1], -1, p)
    scale = (inv,)
    return monic(r0, p), mul(u0, scale, p), mul(v0, scale, p)


def powmod(f: Poly, e: int, m: Poly, p: int) -> Poly:
    result: Poly = (1,) if len(m) > 1 else ()
    base = mod(f, m, p)
    while e:
        if e & 1:
            result = mod(mul(result, base, p), m, p)
        e >>= 1
        if e:
            base = mod(mul(base, base, p), m, p)
    return result


def is_irreducible(f: Sequence[int], p: int) -> bool:
    """Rabin's test for a monic polynomial of degree >= 1 over F_p."""
    f = normalize(f, p)
    s = degree(f)
    if s < 1:
        raise ValueError("irreducibility needs degree >= 1")
    if f[-1] != 1:
        raise ValueError("polynomial must be monic")
    if s == 1:
        return True
    x: Poly = (0, 1)
    # frob[k] = X^(p^k) mod f
    frob = [mod(x, f, p)]
    for _ in range(s):
        frob.append(powmod(frob[-1], p, f, p))
    if frob[s] != mod(x, f, p):
        return False
    for ell in prime_factors(s):
        if degree(gcd(sub(frob[s // ell], x, p), f, p)) > 0:
            return False
    return True


def find_irreducible(p: int, s: int) -> Poly:
    """Lexicographically first monic irreducible polynomial of degree s over F_p.

    Candidates X^s + c_{s-1}X^{s-1} + ... + c_0 are scanned with the digit
    c_{s-1} most significant, so the search order is deterministic.
    """
    if s < 1:
        raise ValueError("degree must be positive")
    for index in range(p**s):
        coeffs = [0] * s
        k = index
        for i in range(s):
            coeffs[i] = k % p
            k //= p
        if s > 1 and coeffs[0] == 0:
            continue  # divisible by X
        f = tuple(coeffs) + (1,)
        if is_irreducible(f, p):
            return f
    raise AssertionError("unreachable: irreducible polynomials exist in every degree")


def to_str(f: Poly, var: str = "a") -> str:
    if not f:
        return "0"
    terms = []
    for k in range(len(f) - 1, -1, -1):
        c = f[k]
        if not c:
            continue
        mono = "" if k == 0 else (var if k == 1 else f"{var}^{k}")
        if not mono:
            terms.append(str(c))
        else:
            terms.append(mono if c == 1 else f"{c}*{mono}")
    return " + ".join(terms)
