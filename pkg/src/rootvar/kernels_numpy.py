"""Pure-numpy fallback lane for the hot kernels (see kernels_numba)."""

from __future__ import annotations

import numpy as np

U_EPS = 2.0 ** -53

_CHUNK = 128


def kn_derivs(c2, us, order):
    """k(u) and derivatives up to ``order``; shape (order+1, len(us)).

    Chunked-Horner over coefficient blocks so the per-coefficient Python
    loop shrinks by _CHUNK; noticeably slower than the numba lane at
    large degree but bit-for-bit reasonable.
    """
    us = np.asarray(us, dtype=np.float64)
    n = c2.shape[0] - 1
    m = us.shape[0]
    nord = order + 1
    j = np.arange(n + 1, dtype=np.float64)
    # powers matrix for one chunk
    P = us[:, None] ** np.arange(_CHUNK, dtype=np.float64)[None, :]
    uq = us ** float(_CHUNK)
    out = np.empty((nord, m))
    for i in range(nord):
        wts = c2.astype(np.float64).copy()
        f = np.ones(n + 1)
        for k in range(i):
            f *= j - k
        wts *= f
        # A_i(u) = sum_j wts[j] u^j, Horner over chunks (high chunk first)
        nchunks = (n + 1 + _CHUNK - 1) // _CHUNK
        acc = np.zeros(m)
        for b in range(nchunks - 1, -1, -1):
            lo = b * _CHUNK
            hi = min(lo + _CHUNK, n + 1)
            acc = acc * uq + P[:, : hi - lo] @ wts[lo:hi]
        # k^(i)(u) = A_i(u) / u^i with an exact branch at u ~ 0
        if i == 0:
            out[0] = acc
        else:
            small = np.abs(us) < 1e-100
            safe = np.where(small, 1.0, us)
            out[i] = acc / safe ** i
            if np.any(small):
                idx = np.nonzero(small)[0]
                for q in idx:
                    u = us[q]
                    s = 0.0
                    for jj in range(i, min(i + 40, n + 1)):
                        t = c2[jj] * u ** (jj - i)
                        for k in range(i):
                            t *= jj - k
                        s += t
                    out[i, q] = s
    return out


def taylor_shift1(w, err):
    """In-place w(t+1) with error envelope.

    Each synthetic-division sweep is a suffix cumulative sum; after sweep
    i, coefficient i is final.
    """
    L = w.shape[0]
    for i in range(L - 1):
        s = np.cumsum(w[i:][::-1])[::-1]
        e = np.cumsum(err[i:][::-1])[::-1] + U_EPS * np.abs(s)
        w[i:] = s
        err[i:] = e


def variations_certified(w, err):
    sure = np.abs(w) > err
    amb = int(w.shape[0] - np.count_nonzero(sure))
    signs = np.sign(w[sure])
    if signs.shape[0] < 2:
        return 0, amb
    v = int(np.count_nonzero(signs[1:] != signs[:-1]))
    return v, amb


def horner_filtered(w, err, x):
    acc = 0.0
    e = 0.0
    ax = abs(x)
    for j in range(w.shape[0] - 1, -1, -1):
        acc = acc * x + w[j]
        e = e * ax + err[j] + 2.0 * U_EPS * abs(acc)
    return acc, e


def modp_gcd_degree(a, b, p):
    a = [int(x) % p for x in a]
    b = [int(x) % p for x in b]
    while a and a[-1] == 0:
        a.pop()
    while b and b[-1] == 0:
        b.pop()
    if len(a) < len(b):
        a, b = b, a
    while b:
        inv = pow(b[-1], p - 2, p)
        da, db = len(a) - 1, len(b) - 1
        for k in range(da, db - 1, -1):
            c = (a[k] * inv) % p
            if c:
                off = k - db
                for i in range(db + 1):
                    a[off + i] = (a[off + i] - c * b[i]) % p
        while a and a[-1] == 0:
            a.pop()
        a, b = b, a
    return len(a) - 1


def scale_half(w, err):
    f = 2.0 ** -np.arange(w.shape[0])
    w *= f
    err *= f
