"""The renormalization operator on truncated germs.

For a label of period p, renormalization is the affinely rescaled p-fold
iterate: R(f) = lambda f^p(z / lambda) with lambda = (f^p)''(0)/2.  The
iterate is built by global truncated composition; validity is policed by the
restrictive-interval construction on the real line and by the tail
diagnostic of the final rescaled output.  The sign of lambda is part of the
result (it is negative for doubling).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Tuple

import numpy as np

from . import _kernels
from .combinatorics import CopyLabel, Word  # noqa: F401  (re-exported; spec houses Word here)
from .dd import Scalar
from .errors import NotRenormalizable, KneadingMismatch, OrbitEscape
from .series import (PowerGerm, compose, normalize, _check_tail,
                     DEFAULT_TAIL_TOL)


@dataclass(frozen=True)
class RestrictiveInterval:
    """Central interval J containing 0 with f^p(J) inside J and the
    endpoints mapped to the boundary."""

    lo: Scalar
    hi: Scalar

    def __contains__(self, x) -> bool:
        x = Scalar(x)
        return self.lo <= x <= self.hi

    def halfwidth(self) -> Scalar:
        return (self.hi - self.lo).scale_pow2(-1)


@dataclass(frozen=True)
class Itinerary:
    signs: Tuple[int, ...]
    order: Tuple[int, ...]   # ranks of (0, f(0), ..., f^{p-1}(0)) on the real line
    degenerate: bool


def _real_orbit(f: PowerGerm, steps: int):
    """Orbit of 0 under the germ on the real line; raises OrbitEscape."""
    h, l = f.arrays()
    vals = []
    x = Scalar(0.0)
    for k in range(steps):
        x = Scalar(*_kernels.ser_eval(h, l, x.hi, x.lo))
        if abs(x) > f.radius:
            raise OrbitEscape(
                f"critical orbit left the trust disk at step {k + 1}: "
                f"|x| = {float(abs(x)):.4g} > {float(f.radius):.4g}")
        vals.append(x)
    return vals


def itinerary(f: PowerGerm, p: int) -> Itinerary:
    """Signs of f^k(0), k = 1..p-1, and the linear order of the points
    0, f(0), ..., f^{p-1}(0) on the real line."""
    if not f.normalized:
        raise ValueError("itinerary requires a normalized germ")
    orbit = _real_orbit(f, p - 1)
    signs = []
    degenerate = False
    for x in orbit:
        if not x:
            signs.append(0)
            degenerate = True
        elif abs(x) < Scalar(1e-28):
            signs.append(0)
            degenerate = True
        else:
            signs.append(1 if x > 0 else -1)
    points = [Scalar(0.0)] + orbit
    ranks = sorted(range(p), key=lambda i: points[i])
    order = tuple(int(np.argwhere(np.array(ranks) == i)[0][0]) for i in range(p))
    return Itinerary(signs=tuple(signs), order=order, degenerate=degenerate)


def _fixed_point_candidates(f: PowerGerm, p: int, scan: int = 512):
    """Positive |q| values with f^p(q) = q or f^p(-q) = -q, sorted by size."""
    h, l = f.arrays()
    # outermost fixed point of f on the positive axis bounds the scan
    r_max = float(f.radius) * 0.999
    xs = np.linspace(1e-9, r_max, scan)
    zs = np.zeros(scan)
    cands = []
    for side in (1.0, -1.0):
        sh, sl = _kernels.ser_iter_scan(h, l, side * xs, zs, p)
        g = sh - side * xs  # f^p(x) - x, float-level sign scan
        for j in range(scan - 1):
            if g[j] == 0.0:
                cands.append(abs(side * xs[j]))
            elif (g[j] < 0.0) != (g[j + 1] < 0.0):
                a, b = side * xs[j], side * xs[j + 1]
                root = _bisect_fixed(h, l, a, b, p)
                if root is not None:
                    cands.append(abs(root))
    cands.sort()
    # drop near-duplicates from the two sides
    out = []
    for q in cands:
        if not out or q - out[-1] > 1e-12 * max(1.0, q):
            out.append(q)
    return out


def _bisect_fixed(h, l, a: float, b: float, p: int, iters: int = 90):
    ah, al = Scalar(a), Scalar(b)
    fa = Scalar(*_kernels.ser_iter_val(h, l, ah.hi, ah.lo, p)) - ah
    for _ in range(iters):
        mid = (ah + al).scale_pow2(-1)
        fm = Scalar(*_kernels.ser_iter_val(h, l, mid.hi, mid.lo, p)) - mid
        if (fm < 0) == (fa < 0):
            ah, fa = mid, fm
        else:
            al = mid
        if abs(al - ah) < Scalar(1e-28):
            break
    return float((ah + al).scale_pow2(-1))


def restrictive_interval(f: PowerGerm, p: int, tol: float = 1e-10,
                         samples: int = 256) -> RestrictiveInterval:
    """Smallest symmetric interval J = [-q, q] around 0 whose endpoints land
    on the boundary under f^p, containing f^p(0), with f^p(J) inside J and
    the cycle J, f(J), ..., f^{p-1}(J) having pairwise disjoint interiors
    (all at the sampled resolution)."""
    if not f.normalized:
        raise ValueError("restrictive_interval requires a normalized germ")
    h, l = f.arrays()
    vh, vl = _kernels.ser_iter_val(h, l, 0.0, 0.0, p)
    v = Scalar(vh, vl)
    if not v.is_finite() or abs(v) > f.radius:
        raise NotRenormalizable(
            f"critical value escaped under the {p}-fold iterate")
    slack = Scalar(tol)
    for q in _fixed_point_candidates(f, p, scan=max(samples, 256)):
        if q < 1e-9:
            continue
        qq = Scalar(q)
        if abs(v) > qq * (1 + 1e-12) + slack:
            continue  # does not contain the critical value
        # endpoints must land on the boundary
        ok = True
        for side in (1.0, -1.0):
            eh, el = _kernels.ser_iter_val(h, l, side * q, 0.0, p)
            e = Scalar(eh, el)
            if not (abs(e - qq) < slack or abs(e + qq) < slack):
                ok = False
                break
        if not ok:
            continue
        # sampled invariance f^p(J) in J
        xs = np.linspace(-q, q, samples)
        zs = np.zeros(samples)
        sh, sl = _kernels.ser_iter_scan(h, l, xs, zs, p)
        if np.max(np.abs(sh)) > q * (1.0 + 1e-9) + tol:
            continue
        if not _cycle_disjoint(h, l, q, p, samples):
            continue
        return RestrictiveInterval(lo=Scalar(-q), hi=Scalar(q))
    raise NotRenormalizable(
        f"no restrictive interval of period {p} brackets the critical point")


def _cycle_disjoint(h, l, q: float, p: int, samples: int, touch: float = 1e-6) -> bool:
    """Interiors of J, f(J), ..., f^{p-1}(J) pairwise disjoint (sampled)."""
    if p == 1:
        return True
    xs = np.linspace(-q, q, samples)
    zs = np.zeros(samples)
    intervals = [(-q, q)]
    cur_h, cur_l = xs, zs
    for _ in range(1, p):
        cur_h, cur_l = _kernels.ser_iter_scan(h, l, cur_h, cur_l, 1)
        intervals.append((float(np.min(cur_h)), float(np.max(cur_h))))
    eps = touch * max(q, 1.0)
    ordered = sorted(intervals)
    for (alo, ahi), (blo, bhi) in zip(ordered, ordered[1:]):
        if ahi > blo + eps:
            return False
    return True


def renormalize(f: PowerGerm, label: CopyLabel, tail_tol: float = DEFAULT_TAIL_TOL,
                quad_tol: float = 1e-8, check: bool = True):
    """R(f) for the given copy label: returns (germ, lambda, J).

    `check=False` is raw-operator mode for finite-difference derivative
    probes around an already-validated point: it skips the
    restrictive-interval, kneading and tail policing (a probe displaced off
    the fixed point breaks the cancellations that keep the top coefficients
    small, so the tail check would reject legitimate probes); the returned J
    is then the trivial interval at the origin.
    """
    p = label.period
    if check:
        J = restrictive_interval(f, p)
        it = itinerary(f, p)
        if it.signs != label.signs:
            raise KneadingMismatch(
                f"orbit signature {it.signs} != label signature {label.signs}")
    else:
        J = RestrictiveInterval(lo=Scalar(0.0), hi=Scalar(0.0))
    h = f
    for _ in range(p - 1):
        h = compose(f, h, tail_tol=None)
    g, lam = normalize(h, quad_tol=quad_tol)
    if check:
        _check_tail(g, tail_tol)
    return g, lam, J
