"""Exact integer/rational polynomial arithmetic.

Slow but certified: backs the filtered Descartes path (sign resolution,
node tests), the Sturm oracle, and squarefree handling.  Coefficient
vectors are Python lists of ints, lowest degree first.  Only signs of
values matter here, so common positive factors are dropped freely.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd

import numpy as np

try:
    from gmpy2 import mpz
except ImportError:  # pragma: no cover
    mpz = int


def dyadic_ints(coeffs) -> list[int]:
    """Exact integer vector 2^E * coeffs for float64 coefficients.

    Every finite float is a dyadic rational, so this is lossless; the
    common scale E (irrelevant for sign work) is not returned.
    """
    fr = [Fraction(float(c)) for c in coeffs]
    e = 1
    for f in fr:
        e = e * f.denominator // gcd(e, f.denominator)
    return [int(f * e) for f in fr]


def strip(p: list[int]) -> list[int]:
    """Drop zero leading (high-degree) coefficients."""
    q = list(p)
    while q and q[-1] == 0:
        q.pop()
    return q


def eval_sign_rational(p: list[int], num: int, den: int) -> int:
    """Exact sign of p at num/den (den > 0)."""
    n = len(p) - 1
    if n < 0:
        return 0
    num, den = mpz(num), mpz(den)
    acc = mpz(p[n])
    dpow = mpz(1)
    for j in range(n - 1, -1, -1):
        dpow *= den
        acc = acc * num + p[j] * dpow
    return (acc > 0) - (acc < 0)


def eval_sign_at(p: list[int], x) -> int:
    """Exact sign of p at a float or Fraction point."""
    f = Fraction(x)
    return eval_sign_rational(p, f.numerator, f.denominator)


def node_descartes_test(p: list[int], a: int, depth: int):
    """Exact Descartes test for the node (a*2^-D, (a+1)*2^-D) in (0,1).

    Builds q(t) = p(2^-D (a+t)) scaled to integers by synthetic shifts,
    then the Moebius test T = shift1(reverse(q)) and its exact variation
    count.  Returns (variations, q0_zero, q1_zero) where q0/q1 flag
    exact roots at the node's left/right endpoint.
    """
    n = len(p) - 1
    am = mpz(a)
    # w(u) = p(2^-D u) * 2^(D n): integer coefficients
    w = [mpz(p[j]) << (depth * (n - j)) for j in range(n + 1)]
    # q(t) = w(a + t): synthetic division sweeps by (u - a)
    for i in range(n):
        for j in range(n - 1, i - 1, -1):
            w[j] += am * w[j + 1]
    q0_zero = w[0] == 0
    q1_zero = sum(w) == 0
    t = w[::-1]
    # T = t(y + 1): suffix-sum sweeps
    for i in range(n):
        for j in range(n - 1, i - 1, -1):
            t[j] += t[j + 1]
    return _sign_variations([int(c > 0) - int(c < 0) for c in t]), q0_zero, q1_zero


def derivative(p: list[int]) -> list[int]:
    return [j * p[j] for j in range(1, len(p))]


def _content(p: list[int]) -> int:
    c = 0
    for x in p:
        c = gcd(c, abs(x))
    return c if c else 1


def _primitive(p: list[int]) -> list[int]:
    c = _content(p)
    return [x // c for x in p]


def pseudo_rem(f: list[int], g: list[int]):
    """Pseudo-remainder r with lc(g)^(df-dg+1) * f = q*g + r.

    Returns (r, mult_sign) where mult_sign is the sign of the implied
    positive-power multiplier lc(g)^(df-dg+1).
    """
    r = list(f)
    dg = len(g) - 1
    lg = g[-1]
    steps = len(r) - len(g) + 1
    if steps <= 0:
        return strip(r), 1
    for _ in range(steps):
        dr = len(r) - 1
        c = r[-1]
        r = [lg * x for x in r[:-1]]
        if c:
            off = dr - dg
            for j in range(dg):
                r[off + j] -= c * g[j]
        # degree dropped by exactly one each pass (top cancels by design)
    m = lg ** steps
    return strip(r), (1 if m > 0 else -1)


def sturm_chain(p: list[int]) -> list[list[int]]:
    """Sign-exact Sturm chain of squarefree p over Z.

    Pseudo-remainders with positive-content stripping; the sign of the
    pseudo-multiplier is folded back so the chain satisfies the Sturm
    sign convention s_{i+1} = -rem(s_{i-1}, s_i) up to positive factors.
    """
    p = strip(p)
    chain = [p, strip(derivative(p))]
    while chain[-1]:
        r, ms = pseudo_rem(chain[-2], chain[-1])
        if not r:
            break
        r = _primitive(r)
        if ms > 0:
            r = [-x for x in r]
        chain.append(r)
    return [c for c in chain if c]


def _sign_variations(vals: list[int]) -> int:
    v = 0
    last = 0
    for x in vals:
        if x == 0:
            continue
        s = 1 if x > 0 else -1
        if last != 0 and s != last:
            v += 1
        last = s
    return v


def sturm_variations_at(chain: list[list[int]], x) -> int:
    """Variation count of the chain at x (float/Fraction) or +-inf."""
    if x == float("inf"):
        return _sign_variations([c[-1] for c in chain])
    if x == float("-inf"):
        return _sign_variations(
            [c[-1] * (1 if (len(c) - 1) % 2 == 0 else -1) for c in chain]
        )
    fx = Fraction(x)
    return _sign_variations(
        [eval_sign_rational(c, fx.numerator, fx.denominator) for c in chain]
    )


def poly_gcd(f: list[int], g: list[int]) -> list[int]:
    """Primitive gcd over Z via a primitive pseudo-remainder sequence."""
    f, g = strip(f), strip(g)
    if not f:
        return _primitive(g) if g else []
    if not g:
        return _primitive(f)
    if len(f) < len(g):
        f, g = g, f
    while g:
        r, _ = pseudo_rem(f, g)
        f, g = g, _primitive(r) if r else []
    f = _primitive(f)
    if f and f[-1] < 0:
        f = [-x for x in f]
    return f


def exact_divide(f: list[int], g: list[int]) -> list[int]:
    """f // g when g divides f over Q; result cleared to integers."""
    f = [Fraction(x) for x in strip(f)]
    g = strip(g)
    q = [Fraction(0)] * (len(f) - len(g) + 1)
    dg = len(g) - 1
    lg = Fraction(g[-1])
    while len(f) >= len(g) and any(f):
        df = len(f) - 1
        c = f[-1] / lg
        q[df - dg] = c
        for j in range(dg + 1):
            f[df - dg + j] -= c * g[j]
        while f and f[-1] == 0:
            f.pop()
    den = 1
    for x in q:
        den = den * x.denominator // gcd(den, x.denominator)
    out = [int(x * den) for x in q]
    return _primitive(out)


def squarefree_part(p: list[int]) -> tuple[list[int], bool]:
    """(p / gcd(p, p'), was_squarefree)."""
    p = strip(p)
    if len(p) <= 2:
        return p, True
    g = poly_gcd(p, derivative(p))
    if len(g) <= 1:
        return p, True
    return exact_divide(p, g), False


_SQFREE_PRIMES = (2147483629, 2147483587)


def squarefree_flag(coeffs, kernels) -> bool | None:
    """Certified squarefree check via modular gcd degree.

    Returns True when certified squarefree, None when the modular test
    is inconclusive (caller may fall back to exact gcd).
    """
    p = strip(dyadic_ints(coeffs))
    if len(p) <= 2:
        return True
    dp = derivative(p)
    for prime in _SQFREE_PRIMES:
        if p[-1] % prime == 0 or dp[-1] % prime == 0:
            continue
        a = np.array([x % prime for x in p], dtype=np.int64)
        b = np.array([x % prime for x in dp], dtype=np.int64)
        if kernels.modp_gcd_degree(a, b, prime) == 0:
            return True
    return None
