"""Exact real-root counting for dyadic-coefficient polynomials.

The primary method is Descartes-rule subdivision (Vincent-Collins-Akritas
bisection) run in *filtered* form: node polynomials live in float64 with a
certified per-coefficient error envelope plus a scalar tail bound, and
every sign decision is either certified against the envelope or resolved
by exact integer arithmetic (``exactpoly``).  Counts are therefore exact.

Node transforms (Taylor shift by one, halving) are nonnegative linear
maps, so the envelope propagates through the same Pascal-matrix matvec as
the values.  An exact Sturm chain is kept as an independent oracle.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np

from . import exactpoly
from ._backend import kernels

U_EPS = 2.0 ** -53
_MATVEC_MAX = 1025          # Pascal hockey-stick sums stay finite below this
_DEPTH_CAP = 240
_DROP_EXP = -72             # drop top coeff when (|w|+e) * 2^j <= 2^-72 * max


class ZeroPolynomialError(ValueError):
    pass


class DegenerateRegionError(ValueError):
    pass


class _DepthExceeded(Exception):
    pass


@dataclass(frozen=True)
class RealInterval:
    """Interval with extended-real endpoints and per-endpoint closure."""

    lo: float
    hi: float
    closed_lo: bool = True
    closed_hi: bool = False

    def __post_init__(self):
        if math.isnan(self.lo) or math.isnan(self.hi) or self.lo > self.hi:
            raise ValueError(f"bad interval [{self.lo}, {self.hi}]")

    @staticmethod
    def real_line() -> "RealInterval":
        return RealInterval(-math.inf, math.inf, False, False)


REGION_NAMES = ("In", "-In", "In_inv", "-In_inv", "core", "rest", "R")


@dataclass(frozen=True)
class RegionSpec:
    """Bands near +-1 where almost all real roots concentrate.

    d_n = exp(log^(d/4) n), a_n = 1/d_n, b_n = d_n / n and the inner band
    is I_n = [1 - a_n, 1 - b_n); the other three bands are its mirror
    image and exact reciprocal images.  Rejects n with an empty band.
    """

    n: int
    d: float = 0.25
    d_n: float = field(init=False)
    a_n: float = field(init=False)
    b_n: float = field(init=False)
    lo: float = field(init=False)
    hi: float = field(init=False)

    def __post_init__(self):
        if not (0.0 < self.d < 0.5):
            raise DegenerateRegionError(f"d must be in (0, 1/2), got {self.d}")
        if self.n < 2:
            raise DegenerateRegionError("n too small for region construction")
        d_n = math.exp(math.log(self.n) ** (self.d / 4.0))
        a_n = 1.0 / d_n
        b_n = d_n / self.n
        if b_n > a_n:
            raise DegenerateRegionError(
                f"empty band I_n at n={self.n}: a_n={a_n:.4g} < b_n={b_n:.4g}"
            )
        object.__setattr__(self, "d_n", d_n)
        object.__setattr__(self, "a_n", a_n)
        object.__setattr__(self, "b_n", b_n)
        object.__setattr__(self, "lo", 1.0 - a_n)
        object.__setattr__(self, "hi", 1.0 - b_n)


@dataclass(frozen=True)
class RootCount:
    count: int
    method: str = "descartes_isolation"
    certified: bool = True
    squarefree: bool = True


# ---------------------------------------------------------------------------
# Pascal-matrix Taylor shift


_pascal_cache: dict[int, np.ndarray] = {}


def _pascal(nmax: int) -> np.ndarray | None:
    """Matrix P with P[j, k] = C(j, k); shift-by-one is w @ P[:L, :L].

    Bucketed by powers of two to bound the cache; None above the safe
    degree (binomial sums would overflow float64).
    """
    if nmax + 1 > _MATVEC_MAX:
        return None
    b = 1
    while b < nmax + 1:
        b *= 2
    b = min(b, _MATVEC_MAX)
    m = _pascal_cache.get(b)
    if m is None:
        m = np.zeros((b, b))
        m[0, 0] = 1.0
        for j in range(1, b):
            m[j, 0] = 1.0
            m[j, 1:j + 1] = m[j - 1, 1:j + 1] + m[j - 1, :j]
        _pascal_cache[b] = m
    return m


def _shift1(w: np.ndarray, err: np.ndarray, tau: float = 0.0):
    """Coefficients of w(t+1) plus a sound error envelope.

    Input is renormalized to max ~ 2^-24 first so the binomial-weighted
    sums cannot overflow; all outputs (including the tail bound tau)
    carry the same positive scale, which is irrelevant for sign work.
    """
    L = w.shape[0]
    m = float(np.max(np.abs(w) + err)) if L else 0.0
    if m > 0.0:
        s = math.ldexp(1.0, -24 - math.frexp(m)[1])
        w = w * s
        err = err * s
        tau *= s
    pas = _pascal(L - 1)
    if pas is not None:
        mv = pas[:L, :L]
        w2 = w @ mv
        err2 = (err + (L + 4) * U_EPS * np.abs(w)) @ mv
        err2 *= 1.0 + 1e-12
        return w2, err2, tau
    w2 = np.ascontiguousarray(w)
    err2 = np.ascontiguousarray(err)
    kernels.taylor_shift1(w2, err2)
    return w2, err2, tau


def _condition(w, err, tau):
    """Renormalize to max ~ 1 and truncate certified-negligible top."""
    m = float(np.max(np.abs(w) + err)) if w.shape[0] else 0.0
    if m > 0.0 and not (0.5 <= m <= 2.0):
        s = math.ldexp(1.0, -math.frexp(m)[1])
        w = w * s
        err = err * s
        tau *= s
    L = w.shape[0]
    tot = np.abs(w) + err
    while L > 1:
        v = tot[L - 1]
        if v != 0.0 and math.frexp(v)[1] + (L - 1) > _DROP_EXP:
            break
        tau += v
        L -= 1
    return w[:L], err[:L], tau


# ---------------------------------------------------------------------------
# One-side isolation over the open unit interval


@dataclass
class _Isolator:
    """One simple root in the open dyadic interval (lo, hi).

    ``s0`` is the certified sign of the side polynomial adjacent to the
    root on the ``inward`` side: inward=+1 means s0 holds on (lo, root),
    inward=-1 means s0 holds on (root, hi).
    """

    lo: Fraction
    hi: Fraction
    s0: int
    inward: int


class _UnitIsolation:
    """All roots of one side polynomial inside the open interval (0, 1)."""

    def __init__(self, w0: np.ndarray, ints: list[int], rel_err: float = 0.0):
        self.ints = ints
        self.isolators: list[_Isolator] = []
        self.points: set[Fraction] = set()
        self.exact_calls = 0
        self._dints: list[list[int]] = [ints]
        self._run(w0, rel_err)

    # -- exact helpers

    def _sign_at(self, g: Fraction) -> int:
        return exactpoly.eval_sign_rational(self.ints, g.numerator, g.denominator)

    def _exact_test(self, a: int, depth: int):
        self.exact_calls += 1
        return exactpoly.node_descartes_test(self.ints, a, depth)

    def _endpoint_multiplicity(self, g: Fraction) -> int:
        """Exact multiplicity of the root of the side polynomial at g."""
        m = 1
        while True:
            while len(self._dints) <= m:
                self._dints.append(exactpoly.derivative(self._dints[-1]))
            d = self._dints[m]
            if not d or exactpoly.eval_sign_rational(d, g.numerator, g.denominator):
                return m
            m += 1

    # -- frame geometry: orient=+1 maps local t to x = (a + t) 2^-depth,
    #    orient=-1 to x = 1 - (a + t) 2^-depth.

    @staticmethod
    def _A(a: int, depth: int, orient: int) -> int:
        return a if orient > 0 else (1 << depth) - a - 1

    @staticmethod
    def _global_frac(a: int, depth: int, orient: int, off: int) -> Fraction:
        num = 2 * a + off
        if orient < 0:
            num = (1 << (depth + 1)) - num
        return Fraction(num, 1 << (depth + 1))

    def _point_sign_local(self, w, err, tau, a, depth, orient, off) -> int:
        """Certified sign of the node poly at local t = off/2, off in {0,1,2}.

        Exact fallback records the point as a root when the sign is 0.
        """
        v, e = kernels.horner_filtered(w, err, 0.5 * off)
        if abs(v) > e + tau:
            return 1 if v > 0 else -1
        g = self._global_frac(a, depth, orient, off)
        s = self._sign_at(g)
        if s == 0 and 0 < g < 1:
            self.points.add(g)
        return s

    # -- main loop

    def _run(self, p: np.ndarray, rel_err: float):
        n = p.shape[0] - 1
        if n <= 0:
            return
        err0 = np.abs(p) * rel_err
        half = Fraction(1, 2)
        if self._sign_at(half) == 0:
            self.points.add(half)
        # split (0,1) at 1/2; the right half runs in reversed orientation
        # (x = 1 - t/2) so descent toward x=1 keeps coefficients tapering
        left_w = p.copy()
        left_e = err0.copy()
        kernels.scale_half(left_w, left_e)
        wr, er, _ = _shift1(p, err0)
        sgn = np.where(np.arange(wr.shape[0]) % 2 == 0, 1.0, -1.0)
        wr, er = wr * sgn, er.copy()
        kernels.scale_half(wr, er)
        stack = [(left_w, left_e, 0.0, 0, 1, 1), (wr, er, 0.0, 0, 1, -1)]
        while stack:
            w, err, tau, a, depth, orient = stack.pop()
            if depth > _DEPTH_CAP:
                raise _DepthExceeded
            w, err, tau = _condition(w, err, tau)
            if w.shape[0] == 1:
                if abs(w[0]) > err[0] + tau:
                    continue
                v, _, _ = self._exact_test(self._A(a, depth, orient), depth)
                if v == 0:
                    continue
                raise _DepthExceeded
            stripped = self._strip_left(w, err, tau, a, depth, orient)
            if stripped is None:
                continue
            w, err, tau = stripped
            T, Te, ttau = _shift1(np.ascontiguousarray(w[::-1]),
                                  np.ascontiguousarray(err[::-1]), tau)
            Te = Te + ttau
            vc, amb = kernels.variations_certified(T, Te)
            if amb == 0:
                v = vc
            elif vc >= 2:
                v = 2
            else:
                A = self._A(a, depth, orient)
                v, q0z, q1z = self._exact_test(A, depth)
                unit = Fraction(1, 1 << depth)
                for flag, gg in ((q0z, A * unit), (q1z, (A + 1) * unit)):
                    if flag and 0 < gg < 1:
                        self.points.add(gg)
            if v == 0:
                continue
            if v == 1:
                self._record(w, err, tau, a, depth, orient)
                continue
            self._point_sign_local(w, err, tau, a, depth, orient, 1)
            lw = w.copy()
            le = err.copy()
            kernels.scale_half(lw, le)
            rw, re, rtau = _shift1(lw, le, tau)
            stack.append((lw, le, tau, 2 * a, depth + 1, orient))
            stack.append((rw, re, rtau, 2 * a + 1, depth + 1, orient))

    def _strip_left(self, w, err, tau, a, depth, orient):
        """Resolve a potential root at the node's local-t=0 endpoint.

        Returns updated (w, err, tau), or None when nothing of interest
        can remain in the open node interval.
        """
        if abs(w[0]) > err[0] + tau:
            return w, err, tau
        g = self._global_frac(a, depth, orient, 0)
        s = self._sign_at(g)
        if s != 0:
            return w, err, tau
        if 0 < g < 1:
            self.points.add(g)
        m = self._endpoint_multiplicity(g)
        if m >= w.shape[0] - 1:
            return None
        return w[m:], err[m:], tau

    def _record(self, w, err, tau, a, depth, orient):
        lo = self._global_frac(a, depth, orient, 0)
        hi = self._global_frac(a, depth, orient, 2)
        if orient < 0:
            lo, hi = hi, lo
        s0 = self._point_sign_local(w, err, tau, a, depth, orient, 0)
        if s0 == 0:
            # t=0 endpoint is itself a root (already recorded); the V=1
            # root is interior, and the true local poly is t^m * h with
            # h(0) != 0: its sign is the first nonzero derivative's
            g0 = self._global_frac(a, depth, orient, 0)
            m = self._endpoint_multiplicity(g0)
            d = self._dints[m]
            s0 = exactpoly.eval_sign_rational(d, g0.numerator, g0.denominator)
            if orient < 0:
                s0 = s0 if m % 2 == 0 else -s0
        self.isolators.append(_Isolator(lo, hi, s0, orient))


# ---------------------------------------------------------------------------
# Whole-line counting context: four unit-interval sides


_SIDES = ("p+", "p-", "r+", "r-")


class CountContext:
    """Caches isolations of P and its reciprocal on (0,1) and (-1,0).

    Side "p+" isolates P(t), "p-" isolates P(-t), "r+"/"r-" the same for
    the coefficient-reversed polynomial; t always ranges over (0,1).  A
    root of the reversed polynomial at t corresponds to a root of P at
    1/t (|root| > 1), so every real root of P is covered by the four
    sides plus the points {-1, 0, 1}.
    """

    def __init__(self, coeffs):
        c = np.asarray(coeffs, dtype=np.float64)
        if c.ndim != 1 or c.shape[0] == 0 or not np.any(c):
            raise ZeroPolynomialError("zero polynomial")
        if not np.all(np.isfinite(c)):
            raise ValueError("non-finite coefficients")
        nz = np.nonzero(c)[0]
        self.mult_at_zero = int(nz[0])
        self.degree = int(nz[-1])
        self.base = c[self.mult_at_zero : self.degree + 1].copy()
        self._base_ints = None
        self._sides: dict[str, _UnitIsolation] = {}
        self._sqfree: bool | None = None
        self._end_signs: dict[float, int] | None = None

    # -- exact data

    @property
    def base_ints(self) -> list[int]:
        if self._base_ints is None:
            self._base_ints = exactpoly.dyadic_ints(self.base)
        return self._base_ints

    def endpoint_root(self, x: float) -> bool:
        """Exact root test at x in {-1, 0, 1} for the original polynomial."""
        if x == 0.0:
            return self.mult_at_zero > 0
        if self._end_signs is None:
            p = self.base_ints
            self._end_signs = {
                1.0: exactpoly.eval_sign_rational(p, 1, 1),
                -1.0: exactpoly.eval_sign_rational(p, -1, 1),
            }
        return self._end_signs[x] == 0

    def side_floats(self, side: str) -> np.ndarray:
        w = self.base[::-1].copy() if side[0] == "r" else self.base.copy()
        if side[1] == "-":
            w = w * np.where(np.arange(w.shape[0]) % 2 == 0, 1.0, -1.0)
        return w

    def side_ints(self, side: str) -> list[int]:
        p = self.base_ints
        q = p[::-1] if side[0] == "r" else list(p)
        if side[1] == "-":
            q = [v if j % 2 == 0 else -v for j, v in enumerate(q)]
        return q

    def isolation(self, side: str) -> _UnitIsolation:
        iso = self._sides.get(side)
        if iso is None:
            w = self.side_floats(side)
            ints = self.side_ints(side)
            try:
                iso = _UnitIsolation(w, ints)
            except _DepthExceeded:
                iso = self._isolate_squarefree(ints)
            self._sides[side] = iso
        return iso

    def _isolate_squarefree(self, ints: list[int]) -> _UnitIsolation:
        sq, was = exactpoly.squarefree_part(ints)
        if was:
            raise RuntimeError("isolation depth cap hit on a squarefree input")
        self._sqfree = False
        w = np.array([float(x) for x in sq])
        return _UnitIsolation(w, sq, rel_err=U_EPS)

    @property
    def squarefree(self) -> bool:
        if self._sqfree is None:
            flag = exactpoly.squarefree_flag(self.base, kernels)
            if flag is None:
                g = exactpoly.poly_gcd(
                    self.base_ints, exactpoly.derivative(self.base_ints)
                )
                flag = len(g) <= 1
            self._sqfree = bool(flag)
        return self._sqfree

    # -- counting in side coordinates

    def _side_count(self, side: str, lo: Fraction | None, hi: Fraction | None,
                    closed_lo: bool, closed_hi: bool) -> int:
        """Roots of the side polynomial with t in the given subinterval
        of (0,1); lo/hi None means the corresponding unit endpoint
        (always open: 0 and 1 are handled as whole-line special points).
        """
        iso = self.isolation(side)
        a = lo if lo is not None else Fraction(0)
        b = hi if hi is not None else Fraction(1)
        if a >= b and not (a == b and closed_lo and closed_hi):
            return 0
        count = 0
        for g in iso.points:
            if (a < g < b) or (g == a and closed_lo and lo is not None) or (
                g == b and closed_hi and hi is not None
            ):
                count += 1
        for it in iso.isolators:
            if it.hi <= a or it.lo >= b:
                continue  # the root is strictly inside (it.lo, it.hi)
            pa = 1 if it.lo >= a else self._root_vs(side, it, a)
            pb = -1 if it.hi <= b else self._root_vs(side, it, b)
            ok_lo = pa > 0 or (pa == 0 and closed_lo and lo is not None)
            ok_hi = pb < 0 or (pb == 0 and closed_hi and hi is not None)
            if ok_lo and ok_hi:
                count += 1
        return count

    def _root_vs(self, side: str, it: _Isolator, beta: Fraction) -> int:
        """Sign of (root - beta) for the isolator's root; beta in (lo,hi)."""
        s = self._filtered_sign(side, beta)
        if s == 0:
            return 0
        if it.inward > 0:
            return 1 if s == it.s0 else -1
        return -1 if s == it.s0 else 1

    def _filtered_sign(self, side: str, beta: Fraction) -> int:
        x = float(beta)
        if Fraction(x) == beta:
            w = self.side_floats(side)
            v, e = kernels.horner_filtered(w, np.zeros_like(w), x)
            if abs(v) > e:
                return 1 if v > 0 else -1
        return exactpoly.eval_sign_rational(
            self.side_ints(side), beta.numerator, beta.denominator
        )

    def count_unit(self, side: str) -> int:
        iso = self.isolation(side)
        return len(iso.isolators) + len(iso.points)

    def count_real_line(self) -> int:
        c = sum(self.count_unit(s) for s in _SIDES)
        c += int(self.endpoint_root(0.0))
        c += int(self.endpoint_root(1.0))
        c += int(self.endpoint_root(-1.0))
        return c


# ---------------------------------------------------------------------------
# Public operations


def _interval_side_pieces(iv: RealInterval):
    """Decompose an interval into side-local pieces plus special points.

    Yields ("point", x) for x in {-1, 0, 1} contained in iv, and
    (side, lo, hi, closed_lo, closed_hi) pieces with Fraction endpoints
    in [0, 1] (None meaning the open unit endpoint).
    """
    lo, hi = iv.lo, iv.hi
    pieces = []
    for x in (-1.0, 0.0, 1.0):
        if (lo < x < hi) or (x == lo and iv.closed_lo) or (x == hi and iv.closed_hi):
            pieces.append(("point", x))

    def clip(side, a, b, ca, cb):
        # a, b Fractions or None within the open unit interval
        if a is not None and b is not None and a > b:
            return
        pieces.append((side, a, b, ca, cb))

    flo = Fraction(lo) if math.isfinite(lo) else None
    fhi = Fraction(hi) if math.isfinite(hi) else None

    # piece in (0, 1): t = x
    a = None if flo is None or flo <= 0 else (flo if flo < 1 else None)
    b = None if fhi is None or fhi >= 1 else (fhi if fhi > 0 else None)
    lo_in = flo is not None and 0 < flo < 1
    hi_in = fhi is not None and 0 < fhi < 1
    if not (fhi is not None and fhi <= 0) and not (flo is not None and flo >= 1):
        clip("p+", a if lo_in else None, b if hi_in else None,
             iv.closed_lo if lo_in else False, iv.closed_hi if hi_in else False)

    # piece in (-1, 0): t = -x, interval (max(lo,-1), min(hi,0)) maps to
    # t in (-min(hi,0)... ) with closure flags swapped
    if not (flo is not None and flo >= 0) and not (fhi is not None and fhi <= -1):
        a2 = fhi if (fhi is not None and -1 < fhi < 0) else None
        b2 = flo if (flo is not None and -1 < flo < 0) else None
        clip("p-", -a2 if a2 is not None else None,
             -b2 if b2 is not None else None,
             iv.closed_hi if a2 is not None else False,
             iv.closed_lo if b2 is not None else False)

    # piece in (1, inf): rev roots t = 1/x in (0, 1)
    if not (fhi is not None and fhi <= 1):
        a3 = fhi if (fhi is not None and fhi > 1) else None      # x upper
        b3 = flo if (flo is not None and flo > 1) else None      # x lower
        clip("r+", 1 / a3 if a3 is not None else None,
             1 / b3 if b3 is not None else None,
             iv.closed_hi if a3 is not None else False,
             iv.closed_lo if b3 is not None else False)

    # piece in (-inf, -1): rev- roots t = -1/x in (0, 1)
    if not (flo is not None and flo >= -1):
        a4 = flo if (flo is not None and flo < -1) else None     # x lower
        b4 = fhi if (fhi is not None and fhi < -1) else None     # x upper
        clip("r-", -1 / a4 if a4 is not None else None,
             -1 / b4 if b4 is not None else None,
             iv.closed_lo if a4 is not None else False,
             iv.closed_hi if b4 is not None else False)
    return pieces


def _coeffs_of(poly) -> np.ndarray:
    if hasattr(poly, "coeffs"):
        poly = poly.coeffs
    return np.asarray(poly, dtype=np.float64)


def count_roots(poly, interval: RealInterval | None = None,
                method: str = "descartes_isolation",
                ctx: CountContext | None = None) -> RootCount:
    """Exact number of distinct real roots of ``poly`` in ``interval``.

    ``poly`` is a coefficient sequence (lowest degree first) of exact
    float64/dyadic values, or a SampledPolynomial.  Default interval is
    all of R.  ``method`` is "descartes_isolation" (default) or
    "sturm_exact" (independent oracle, much slower at high degree).
    """
    if interval is None:
        interval = RealInterval.real_line()
    if method == "sturm_exact":
        return _sturm_count(_coeffs_of(poly), interval)
    if method != "descartes_isolation":
        raise ValueError(f"unknown method {method!r}")
    if ctx is None:
        ctx = CountContext(_coeffs_of(poly))
    total = 0
    for piece in _interval_side_pieces(interval):
        if piece[0] == "point":
            total += int(ctx.endpoint_root(piece[1]))
        else:
            side, a, b, ca, cb = piece
            total += ctx._side_count(side, a, b, ca, cb)
    return RootCount(total, "descartes_isolation", True, ctx.squarefree)


def count_regions(poly, region: RegionSpec,
                  ctx: CountContext | None = None) -> dict[str, RootCount]:
    """Exact root counts for the four bands, their union, the rest of the
    line, and all of R.

    Band counts use the half-open convention [1-a_n, 1-b_n); reciprocal
    bands are counted as roots of the coefficient-reversed polynomial in
    the mirrored inner band, which is an exact set identity.
    """
    if ctx is None:
        ctx = CountContext(_coeffs_of(poly))
    lo = Fraction(region.lo)
    hi = Fraction(region.hi)
    sq = ctx.squarefree
    out: dict[str, RootCount] = {}
    band = {}
    for name, side in (("In", "p+"), ("-In", "p-"),
                       ("In_inv", "r+"), ("-In_inv", "r-")):
        band[name] = ctx._side_count(side, lo, hi, True, False)
        out[name] = RootCount(band[name], "descartes_isolation", True, sq)
    core = sum(band.values())
    total = ctx.count_real_line()
    out["core"] = RootCount(core, "descartes_isolation", True, sq)
    out["rest"] = RootCount(total - core, "descartes_isolation", True, sq)
    out["R"] = RootCount(total, "descartes_isolation", True, sq)
    return out


def cauchy_bound(coeffs) -> float:
    """1 + max|a_j| / |a_lead|: all real roots lie in [-B, B]."""
    c = np.asarray(coeffs, dtype=np.float64)
    nz = np.nonzero(c)[0]
    if nz.shape[0] == 0:
        raise ZeroPolynomialError("zero polynomial")
    lead = abs(c[nz[-1]])
    return 1.0 + float(np.max(np.abs(c[: nz[-1] + 1]))) / lead


def _sturm_count(coeffs: np.ndarray, iv: RealInterval) -> RootCount:
    """Independent exact oracle: Sturm chain of the squarefree part."""
    if not np.any(coeffs):
        raise ZeroPolynomialError("zero polynomial")
    ints = exactpoly.strip(exactpoly.dyadic_ints(coeffs))
    mult0 = 0
    while ints and ints[0] == 0:
        ints = ints[1:]
        mult0 += 1
    g, was_sq = exactpoly.squarefree_part(ints)
    chain = exactpoly.sturm_chain(g)
    lo, hi = iv.lo, iv.hi
    va = exactpoly.sturm_variations_at(chain, lo if math.isfinite(lo) else -math.inf)
    vb = exactpoly.sturm_variations_at(chain, hi if math.isfinite(hi) else math.inf)
    n = va - vb  # roots of g in (lo, hi]
    if math.isfinite(hi):
        hz = exactpoly.eval_sign_at(g, hi) == 0
        if hz and not iv.closed_hi:
            n -= 1
    if math.isfinite(lo) and iv.closed_lo:
        if exactpoly.eval_sign_at(g, lo) == 0:
            n += 1
    zero_in = (iv.lo < 0 < iv.hi) or (iv.lo == 0 and iv.closed_lo) or (
        iv.hi == 0 and iv.closed_hi
    )
    if mult0 and zero_in and exactpoly.eval_sign_at(g, 0.0) != 0:
        n += 1
    return RootCount(n, "sturm_exact", True, was_sq and mult0 <= 1)
