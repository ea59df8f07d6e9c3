#!/usr/bin/env python3
"""Generate the parameter fixtures under data/params and tests/fixtures.

Independent of the C++ library: point counting, factoring and group
arithmetic here use numpy/sympy only. Output is deterministic for the
fixed seed below; rerun only when a fixture has to change.
"""
import json
import math
import random
import sys
from pathlib import Path

import numpy as np
import sympy

ROOT = Path(__file__).resolve().parent.parent
SEED = 20100101
F = 20


def add(q, a, P, Q):
    if P is None:
        return Q
    if Q is None:
        return P
    x1, y1 = P
    x2, y2 = Q
    if x1 == x2:
        if (y1 + y2) % q == 0:
            return None
        if y1 != y2:
            return None
        lam = (3 * x1 * x1 + a) * pow(2 * y1, -1, q) % q
    else:
        lam = (y2 - y1) * pow(x2 - x1, -1, q) % q
    x3 = (lam * lam - x1 - x2) % q
    return (x3, (lam * (x1 - x3) - y1) % q)


def mul(q, a, k, P):
    R = None
    while k:
        if k & 1:
            R = add(q, a, R, P)
        P = add(q, a, P, P)
        k >>= 1
    return R


_qr_cache = {}


def count(q, a, b):
    if q not in _qr_cache:
        chi = -np.ones(q, dtype=np.int64)
        ys = np.arange(1, q, dtype=np.int64)
        chi[(ys * ys) % q] = 1
        chi[0] = 0
        _qr_cache[q] = chi
    chi = _qr_cache[q]
    x = np.arange(q, dtype=object if q > 2**20 else np.int64)
    rhs = (x * x % q * x + a * x + b) % q
    return q + 1 + int(chi[rhs.astype(np.int64)].sum())


def random_point(rng, q, a, b):
    while True:
        x = rng.randrange(q)
        r = (x**3 + a * x + b) % q
        if r == 0:
            return (x, 0)
        if pow(r, (q - 1) // 2, q) == 1:
            y = sympy.sqrt_mod(r, q)
            return (x, y if rng.random() < 0.5 else (q - y) % q)


def point_of_order(rng, q, a, b, N, n):
    while True:
        G = mul(q, a, N // n, random_point(rng, q, a, b))
        if G is not None:
            assert mul(q, a, n, G) is None
            return G


def mov_ok(q, n):
    return all(pow(q, i, n) != 1 for i in range(1, F + 1))


def hx(v):
    return format(v, "x")


def dump(path, q, a, b, G, n, h, note=None):
    obj = {"q": hx(q), "a": hx(a), "b": hx(b),
           "Gx": hx(G[0]), "Gy": hx(G[1]),
           "n": hx(n), "h": hx(h)}
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(json.dumps(obj, indent=2) + "\n")
    print(f"{path.relative_to(ROOT)}: q={q} a={a} b={b} G={G} n={n} h={h}"
          + (f" ({note})" if note else ""), file=sys.stderr)


def nonsingular(q, a, b):
    return (4 * a**3 + 27 * b * b) % q != 0


def good_toy(rng):
    # q just below 2^20, #E = 4 * n with n prime.
    q = sympy.prevprime(2**20 - 1000)
    while True:
        a, b = rng.randrange(q), rng.randrange(q)
        if not nonsingular(q, a, b):
            continue
        N = count(q, a, b)
        if N % 4 or not sympy.isprime(N // 4):
            continue
        n = N // 4
        if N == q + 1 or not mov_ok(q, n) or n * n <= 16 * q:
            continue
        return q, a, b, point_of_order(rng, q, a, b, N, n), n, 4


def small_n(rng):
    q = sympy.prevprime(2**18)
    while True:
        a, b = rng.randrange(q), rng.randrange(q)
        if not nonsingular(q, a, b):
            continue
        N = count(q, a, b)
        if N == q + 1 or N == q:
            continue
        cands = [p for p in sympy.factorint(N) if 64 < p and p * p <= 16 * q and mov_ok(q, p)]
        if not cands:
            continue
        n = max(cands)
        return q, a, b, point_of_order(rng, q, a, b, N, n), n, N // n


def mov_fail(rng):
    # Trace-2 curve: #E = q - 1 = 2n, so q = 1 mod n (embedding degree 1).
    q = 2**16
    while True:
        q = sympy.nextprime(q)
        if sympy.isprime((q - 1) // 2):
            break
    n = (q - 1) // 2
    while True:
        a, b = rng.randrange(q), rng.randrange(q)
        if nonsingular(q, a, b) and count(q, a, b) == q - 1:
            return q, a, b, point_of_order(rng, q, a, b, q - 1, n), n, 2


def anomalous(rng):
    q = sympy.nextprime(2**16 + 5000)
    while True:
        a, b = rng.randrange(q), rng.randrange(q)
        if nonsingular(q, a, b) and count(q, a, b) == q:
            return q, a, b, point_of_order(rng, q, a, b, q, q), q, 1


def supersingular(rng):
    # y^2 = x^3 + x over q = 3 mod 4 has q + 1 points.
    q = 2**16
    while True:
        q = sympy.nextprime(q)
        if q % 4 == 3 and sympy.isprime((q + 1) // 4):
            break
    n = (q + 1) // 4
    assert count(q, 1, 0) == q + 1
    return q, 1, 0, point_of_order(rng, q, 1, 0, q + 1, n), n, 4


def composite_q(rng):
    # Curve over Z/(p1 p2) with G of prime order n in both components.
    while True:
        p1 = sympy.nextprime(rng.randrange(600, 2000))
        p2 = sympy.nextprime(rng.randrange(600, 2000))
        if p1 == p2:
            continue
        q = p1 * p2
        a, b = rng.randrange(q), rng.randrange(q)
        if not (nonsingular(p1, a % p1, b % p1) and nonsingular(p2, a % p2, b % p2)):
            continue
        N1, N2 = count(p1, a % p1, b % p1), count(p2, a % p2, b % p2)
        cands = [p for p in sympy.factorint(math.gcd(N1, N2)) if p > 100 and mov_ok(q, p)]
        if not cands:
            continue
        n = max(cands)
        G1 = point_of_order(rng, p1, a % p1, b % p1, N1, n)
        G2 = point_of_order(rng, p2, a % p2, b % p2, N2, n)
        G = (sympy.ntheory.modular.crt([p1, p2], [G1[0], G2[0]])[0],
             sympy.ntheory.modular.crt([p1, p2], [G1[1], G2[1]])[0])
        try:
            if mul(q, a, n, G) is not None:
                continue
        except ValueError:
            continue
        h = (q + 1 + n // 2) // n
        t = q + 1 - h * n
        assert t != 0 and t * t <= 4 * q
        return q, a, b, (int(G[0]), int(G[1])), n, h


def singular_node(rng):
    # y^2 = (x - al)^2 (x + 2 al), split node: nonsingular points form F_q^*.
    q = 2**16
    while True:
        q = sympy.nextprime(q)
        if sympy.isprime((q - 1) // 2):
            break
    n = (q - 1) // 2
    while True:
        al = rng.randrange(1, q)
        if pow(3 * al % q, (q - 1) // 2, q) != 1:
            continue
        a, b = (-3 * al * al) % q, (2 * al**3) % q
        while True:
            P = random_point(rng, q, a, b)
            if P[0] == al:
                continue
            G = mul(q, a, 2, P)
            if G is not None and mul(q, a, n, G) is None:
                return q, a, b, G, n, 2


def main():
    rng = random.Random(SEED)
    params = ROOT / "data" / "params"
    fx = ROOT / "tests" / "fixtures"

    q, a, b, G, n, h = good_toy(rng)
    dump(params / "good_toy.json", q, a, b, G, n, h)
    # Same curve, corrupted claims.
    dump(params / "bad_composite_n.json", q, a, b, G, 2 * n, 2, "n -> 2n, h -> 2")
    while True:
        P = random_point(rng, q, a, b)
        if mul(q, a, n, P) is not None:
            break
    dump(fx / "g_wrong_order.json", q, a, b, P, n, h)
    dump(fx / "wrong_cofactor.json", q, a, b, G, n, h + 1)

    dump(params / "bad_small_n.json", *small_n(rng))
    dump(params / "bad_mov.json", *mov_fail(rng))
    dump(params / "bad_n_eq_q.json", *anomalous(rng))
    dump(params / "bad_supersingular.json", *supersingular(rng))
    dump(fx / "composite_q.json", *composite_q(rng))
    dump(fx / "singular.json", *singular_node(rng))

    # Desk-scale curves from the unit tests.
    dump(fx / "f23.json", 23, 1, 1, (5, 4), 7, 4)
    dump(fx / "f23_supersingular.json", 23, 1, 0, (18, 10), 3, 8)

    # secp160r1 (SEC 2).
    p = 2**160 - 2**31 - 1
    a = p - 3
    b = 0x1C97BEFC54BD7A8B65ACF89F81D4D4ADC565FA45
    G = (0x4A96B5688EF573284664698968C38BB913CBFC82, 0x23A628553168947D59DCC912042351377AC5FB32)
    n = 0x0100000000000000000001F4C8F927AED3CA752257
    assert (G[1] ** 2 - G[0] ** 3 - a * G[0] - b) % p == 0
    assert mul(p, a, n, G) is None
    dump(params / "secp160r1.json", p, a, b, G, n, 1)


if __name__ == "__main__":
    main()
