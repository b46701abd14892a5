"""Numba-jitted hot kernels.

Every function here has a pure-numpy twin in ``kernels_numpy`` with the
same name and contract; ``rootvar._backend`` picks the lane.
"""

from __future__ import annotations

import numpy as np
from numba import njit

U_EPS = 2.0 ** -53  # unit roundoff of float64

_BLOCK = 64


@njit(cache=True, nogil=True)
def kn_derivs(c2, us, order):
    """Evaluate k(u) = sum_j c2[j] u^j and derivatives up to ``order``.

    Kahan-compensated Horner, one independent chain per derivative order,
    blocked over evaluation points so the inner loop vectorizes.  Returns
    an array of shape (order+1, len(us)); row i is k^(i)(u).
    """
    n = c2.shape[0] - 1
    m = us.shape[0]
    nord = order + 1
    out = np.empty((nord, m))
    acc = np.empty((nord, _BLOCK))
    comp = np.empty((nord, _BLOCK))
    for b0 in range(0, m, _BLOCK):
        b1 = min(b0 + _BLOCK, m)
        w = b1 - b0
        acc[:, :w] = 0.0
        comp[:, :w] = 0.0
        for j in range(n, -1, -1):
            cj = c2[j]
            f = cj
            for i in range(nord):
                if j < i:
                    break
                for q in range(w):
                    u = us[b0 + q]
                    t = acc[i, q] * u
                    y = f - comp[i, q]
                    s = t + y
                    comp[i, q] = (s - t) - y
                    acc[i, q] = s
                f *= j - i
        out[:, b0:b1] = acc[:, :w]
    return out


@njit(cache=True, nogil=True)
def bernstein_from_power(p, rel_in):
    """Bernstein coefficients on [0,1] of a power-basis polynomial.

    b_i = sum_{j<=i} [C(i,j)/C(n,j)] p_j, built with the nonnegative row
    recurrence R[i,j] = R[i-1,j] + R[i-1,j-1] * j/(n-j+1), so no entry
    exceeds 1 and no overflow is possible.  Returns (b, err) where err
    is a sound per-coefficient error envelope (inputs carry relative
    error rel_in).
    """
    n = p.shape[0] - 1
    b = np.zeros(n + 1)
    e = np.zeros(n + 1)
    row = np.zeros(n + 1)
    row[0] = 1.0
    slack = (2.0 * n + 8.0) * U_EPS + rel_in
    b[0] = p[0]
    e[0] = abs(p[0]) * slack
    for i in range(1, n + 1):
        for j in range(min(i, n), 0, -1):
            row[j] = row[j] + row[j - 1] * (j / (n - j + 1.0))
        acc = 0.0
        env = 0.0
        for j in range(i + 1):
            t = row[j] * p[j]
            acc += t
            env += abs(t)
        b[i] = acc
        e[i] = env * slack
    return b, e


@njit(cache=True, nogil=True)
def decasteljau(b, err):
    """Midpoint de Casteljau subdivision with error envelope.

    Returns (bl, el, br, er): Bernstein coefficients and envelopes of the
    restriction to [0,1/2] and [1/2,1] (each rescaled to [0,1]).  All
    operations are averages, so magnitudes never grow.
    """
    n = b.shape[0] - 1
    x = b.copy()
    e = err.copy()
    bl = np.empty(n + 1)
    el = np.empty(n + 1)
    br = np.empty(n + 1)
    er = np.empty(n + 1)
    bl[0] = x[0]
    el[0] = e[0]
    br[n] = x[n]
    er[n] = e[n]
    for s in range(1, n + 1):
        for i in range(n - s + 1):
            x[i] = 0.5 * (x[i] + x[i + 1])
            e[i] = 0.5 * (e[i] + e[i + 1]) + U_EPS * abs(x[i])
        bl[s] = x[0]
        el[s] = e[0]
        br[n - s] = x[n - s]
        er[n - s] = e[n - s]
    return bl, el, br, er


@njit(cache=True, nogil=True)
def variations_certified(w, err):
    """Sign variations of ``w`` using only signs certified against ``err``.

    Returns (v_certain, n_ambiguous): v_certain counts variations of the
    subsequence with |w_j| > err_j, a lower bound for the true variation
    count; n_ambiguous is how many coefficients could not be signed.
    """
    v = 0
    amb = 0
    last = 0
    for j in range(w.shape[0]):
        a = w[j]
        if abs(a) <= err[j]:
            amb += 1
            continue
        s = 1 if a > 0.0 else -1
        if last != 0 and s != last:
            v += 1
        last = s
    return v, amb


@njit(cache=True, nogil=True)
def horner_filtered(w, err, x):
    """Evaluate poly (low-first) at x with a certified error bound.

    Returns (value, bound) with |true(x) - value| <= bound.
    """
    acc = 0.0
    e = 0.0
    ax = abs(x)
    for j in range(w.shape[0] - 1, -1, -1):
        acc = acc * x + w[j]
        e = e * ax + err[j] + 2.0 * U_EPS * abs(acc)
    return acc, e


@njit(cache=True, nogil=True)
def _modp_pow(b, e, p):
    r = 1
    b = b % p
    while e > 0:
        if e & 1:
            r = (r * b) % p
        b = (b * b) % p
        e >>= 1
    return r


@njit(cache=True, nogil=True)
def modp_gcd_degree(a, b, p):
    """Degree of gcd(a, b) modulo the prime p (coefficients reduced).

    Degree 0 certifies that the rational gcd is constant, provided the
    true leading coefficients do not vanish mod p (caller checks).
    """
    da = a.shape[0] - 1
    while da >= 0 and a[da] == 0:
        da -= 1
    db = b.shape[0] - 1
    while db >= 0 and b[db] == 0:
        db -= 1
    ra = a[: da + 1].copy()
    rb = b[: db + 1].copy()
    if da < db:
        ra, rb = rb, ra
        da, db = db, da
    while db >= 0:
        inv = _modp_pow(rb[db], p - 2, p)
        for k in range(da, db - 1, -1):
            c = (ra[k] * inv) % p
            if c != 0:
                off = k - db
                for i in range(db + 1):
                    ra[off + i] = (ra[off + i] - c * rb[i]) % p
        dr = db - 1
        while dr >= 0 and ra[dr] == 0:
            dr -= 1
        ra, rb = rb, ra[: dr + 1] if dr >= 0 else ra[:0]
        da, db = db, dr
    return da
