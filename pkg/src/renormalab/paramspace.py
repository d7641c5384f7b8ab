"""Quadratic-family parameter tools.

Superattracting centers are located by bisection in the signed kneading
order (monotone in c on [-2, 1/4]) against star-product sign targets, then
polished by Newton on c -> f_c^p(0).  Window roots come from the saddle-node
tangency system, window tips from the condition that the critical value of
the p-iterate hits the restrictive-interval boundary.  The straightened
renormalization sigma is realized by kneading matching of the renormalized
germ's critical orbit.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import List, Optional, Sequence, Tuple, Union

import numpy as np

from . import _kernels
from .combinatorics import (CopyLabel, SignTarget, Word, center_target,
                            compare_to_target, compare_signs, label_of,
                            tip_target)
from .dd import Scalar
from .errors import (BracketNotFound, KneadingTieAtDepthK, NotAdmissible,
                     NotRenormalizable, PrecisionExhausted,
                     TangencySolveFailed)
from .renorm import restrictive_interval, renormalize
from .series import quadratic_germ

PARAM_LO = Scalar(-2.0)
PARAM_HI = Scalar(0.25)
MAX_TOTAL_PERIOD = 2**14


# -- kneading utilities -------------------------------------------------------


def orbit_signs(c: Scalar, depth: int) -> np.ndarray:
    """Signs of f_c^k(0), k = 1..depth (int8 array)."""
    c = Scalar(c)
    return _kernels.quad_orbit_signs(c.hi, c.lo, depth)


def kneading_compare(c1, c2, depth: int = 60) -> int:
    """Signed-order comparison of the kneading sequences of two parameters."""
    return compare_signs(orbit_signs(Scalar(c1), depth),
                         orbit_signs(Scalar(c2), depth))


def _bisect_to_target(target: SignTarget, depth: int,
                      lo: Scalar = PARAM_LO, hi: Scalar = PARAM_HI,
                      iters: int = 120, width: float = 1e-26) -> Tuple[Scalar, Scalar]:
    """Shrink [lo, hi] around {c : K(c) matches target to depth}."""
    c_lo, c_hi = Scalar(lo), Scalar(hi)
    if compare_to_target(orbit_signs(c_lo, depth), target, depth) > 0 or \
       compare_to_target(orbit_signs(c_hi, depth), target, depth) < 0:
        raise BracketNotFound("target kneading not bracketed by the initial interval")
    for _ in range(iters):
        mid = (c_lo + c_hi).scale_pow2(-1)
        cmp = compare_to_target(orbit_signs(mid, depth), target, depth)
        if cmp < 0:
            c_lo = mid
        elif cmp > 0:
            c_hi = mid
        else:
            # matched through `depth`: shrink symmetrically around the match
            return mid, mid
        if c_hi - c_lo < Scalar(width):
            break
    return c_lo, c_hi


def _bisect_edge(target: SignTarget, depth: int, want_less: bool,
                 lo: Scalar, hi: Scalar, iters: int = 130) -> Scalar:
    """Boundary of {c : K(c) < target} (want_less) or {c : K(c) > target}."""
    c_lo, c_hi = Scalar(lo), Scalar(hi)
    for _ in range(iters):
        mid = (c_lo + c_hi).scale_pow2(-1)
        cmp = compare_to_target(orbit_signs(mid, depth), target, depth)
        if want_less:
            if cmp < 0:
                c_lo = mid
            else:
                c_hi = mid
        else:
            if cmp > 0:
                c_hi = mid
            else:
                c_lo = mid
        if c_hi - c_lo < Scalar(1e-30):
            break
    return (c_lo + c_hi).scale_pow2(-1)


# -- centers -------------------------------------------------------------------


def center_of_period(word: Union[Word, Sequence], depth_pad: int = 8) -> Scalar:
    """The real superattracting parameter whose combinatorics is `word`."""
    word = word if isinstance(word, Word) else Word(word)
    p = word.period
    if p > MAX_TOTAL_PERIOD:
        raise PrecisionExhausted(f"total period {p} exceeds budget {MAX_TOTAL_PERIOD}")
    target = center_target(word)
    depth = p + depth_pad
    lo, hi = _bisect_to_target(target, depth)
    c = (lo + hi).scale_pow2(-1)
    # Newton polish on f_c^p(0)
    for _ in range(8):
        vh, vl, uh, ul = _kernels.quad_orbit_val_dc(c.hi, c.lo, p)
        v = Scalar(vh, vl)
        u = Scalar(uh, ul)
        if not u:
            break
        c = c - v / u
        if abs(v) < Scalar(1e-30):
            break
    vh, vl, _, _ = _kernels.quad_orbit_val_dc(c.hi, c.lo, p)
    if not (abs(Scalar(vh, vl)) < Scalar(1e-25)):
        raise BracketNotFound(
            f"center polish failed for word of period {p}: residual {vh:.3e}")
    got = tuple(int(s) for s in orbit_signs(c, p - 1))
    want = target.prefix(p - 1)
    if got != want:
        raise NotAdmissible(
            f"no real parameter realizes the requested combinatorics (period {p})")
    return c


# -- cascades --------------------------------------------------------------------


def aitken_limit(xs: Sequence[Scalar]) -> Optional[Scalar]:
    """Iterated Aitken delta-squared extrapolation (None if < 3 terms)."""
    seq = [Scalar(x) for x in xs]
    if len(seq) < 3:
        return None
    while len(seq) >= 3:
        nxt = []
        for x0, x1, x2 in zip(seq, seq[1:], seq[2:]):
            den = x2 - x1 - (x1 - x0)
            num = x2 - x1
            if abs(den) < Scalar(1e-30) * max(abs(x2), Scalar(1e-30)):
                return seq[-1]
            nxt.append(x2 - num * num / den)
        seq = nxt
    return seq[-1]


@dataclass(frozen=True)
class CascadeRow:
    n: int
    c: Scalar
    gap: Scalar                      # c_{n-1} - c_n (c_0 = 0)
    ratio: Optional[Scalar]          # gap_n / gap_{n+1}


@dataclass(frozen=True)
class CascadeTable:
    label: CopyLabel
    rows: List[CascadeRow]
    delta_extrapolated: Optional[Scalar]
    c_limit: Optional[Scalar]

    def ratios(self) -> List[Scalar]:
        return [r.ratio for r in self.rows if r.ratio is not None]

    def centers(self) -> List[Scalar]:
        return [r.c for r in self.rows]

    def csv_rows(self):
        out = [("n", "c_n", "gap", "ratio")]
        for r in self.rows:
            out.append((str(r.n), r.c.to_decimal(), r.gap.to_decimal(),
                        "" if r.ratio is None else r.ratio.to_decimal()))
        return out


def tuned_cascade(letter, n_max: int) -> CascadeTable:
    """Centers of the n-fold tuned copies of `letter` with scaling ratios
    and Aitken extrapolations."""
    letter = label_of(letter)
    if n_max < 1:
        raise ValueError("n_max must be >= 1")
    if n_max * np.log2(letter.period) > 14 + 1e-9:
        raise PrecisionExhausted(
            f"n_max = {n_max} at period {letter.period} exceeds the precision budget")
    centers = []
    for n in range(1, n_max + 1):
        centers.append(center_of_period(Word([letter] * n)))
    prev = Scalar(0.0)
    gaps = []
    for c in centers:
        gaps.append(prev - c)
        prev = c
    for g in gaps[1:]:
        if abs(g) < Scalar(1e-26):
            raise PrecisionExhausted("consecutive cascade gaps below 1e-26")
    monotone = all(centers[i + 1] < centers[i] for i in range(len(centers) - 1)) or \
        all(centers[i + 1] > centers[i] for i in range(len(centers) - 1))
    if not monotone:
        raise BracketNotFound("cascade centers are not monotone")
    ratios: List[Optional[Scalar]] = []
    for n in range(len(gaps)):
        if n + 1 < len(gaps) and gaps[n + 1]:
            ratios.append(gaps[n] / gaps[n + 1])
        else:
            ratios.append(None)
    rows = [CascadeRow(n=i + 1, c=centers[i], gap=gaps[i], ratio=ratios[i])
            for i in range(len(centers))]
    ratio_list = [r for r in ratios if r is not None]
    return CascadeTable(label=letter, rows=rows,
                        delta_extrapolated=aitken_limit(ratio_list),
                        c_limit=aitken_limit(centers))


# -- windows ----------------------------------------------------------------------


@dataclass(frozen=True)
class RealWindow:
    """Real trace data of a copy: root (cusp side), tip, and the working
    window [tip, center] with the cusp-side segment (center, root] removed."""

    root: Scalar
    tip: Scalar
    center: Scalar

    @property
    def lo(self) -> Scalar:
        return self.tip

    @property
    def hi(self) -> Scalar:
        return self.center

    def as_interval(self) -> Tuple[Scalar, Scalar]:
        return (self.tip, self.center)


@dataclass(frozen=True)
class CopyDescriptor:
    period: int
    kneading: Tuple[int, ...]
    center: Scalar
    window: Tuple[Scalar, Scalar]
    primitive: bool

    def to_json(self) -> dict:
        return {
            "period": self.period,
            "signature": list(self.kneading),
            "center": self.center.to_decimal(),
            "window": [self.window[0].to_decimal(), self.window[1].to_decimal()],
            "primitive": self.primitive,
        }


def _tangency_root(letter: CopyLabel, center: Scalar) -> Scalar:
    """Saddle-node parameter adjacent to the center: continuation in the
    cycle multiplier from the superattracting cycle (multiplier 0 at the
    center) up to multiplier 1, each rung a 2x2 Newton solve on
    (f^p(x) - x, (f^p)'(x) - m)."""
    p = letter.period
    c, x = Scalar(center), Scalar(0.0)
    for m in (0.2, 0.5, 0.8, 0.95, 0.99, 0.999, 1.0):
        c, x = _solve_multiplier(c, x, p, Scalar(m))
    xp, A, _, _, _ = _orbit_jet(c, x, p)
    if not (abs(xp - x) < Scalar(1e-22) and abs(A - 1) < Scalar(1e-22)):
        raise TangencySolveFailed(
            f"tangency system residual too large for period {p}")
    return c


def _solve_multiplier(c: Scalar, x: Scalar, p: int, m: Scalar):
    """Newton in (c, x) for f^p(x) = x with cycle multiplier m."""
    for _ in range(60):
        xp, A, B, Cv, D = _orbit_jet(c, x, p)
        g1 = xp - x
        g2 = A - m
        det = (A - 1) * D - B * Cv
        if not det:
            raise TangencySolveFailed("degenerate Jacobian in multiplier solve")
        dx = (g1 * D - g2 * B) / det
        dc = ((A - 1) * g2 - Cv * g1) / det
        x = x - dx
        c = c - dc
        if abs(g1) < Scalar(1e-27) and abs(g2) < Scalar(1e-27):
            return c, x
    raise TangencySolveFailed(
        f"multiplier continuation stalled at m = {float(m):.4g} (period {p})")


def _orbit_jet(c: Scalar, x0: Scalar, p: int):
    """(f^p(x0), d/dx, d/dc, d2/dxdx-of-derivative track):
    returns x_p, A = d x_p/d x0, B = d x_p/d c, C = d A/d x0, D = d A/d c."""
    x = Scalar(x0)
    A = Scalar(1.0)
    B = Scalar(0.0)
    Cv = Scalar(0.0)
    D = Scalar(0.0)
    for _ in range(p):
        two_x = x.scale_pow2(1)
        Cv = (A * A + x * Cv).scale_pow2(1)
        D = (A * B + x * D).scale_pow2(1)
        A = two_x * A
        B = two_x * B + 1
        x = x * x + c
    return x, A, B, Cv, D


def real_window(letter) -> RealWindow:
    """Root, tip and working window of a copy's real trace."""
    letter = label_of(letter)
    center = center_of_period(Word([letter]))
    if letter.period == 2:
        root = Scalar(-0.75)  # satellite doubling copy: period-doubling of the fixed point
    else:
        root = _tangency_root(letter, center)
    tip = _solve_tip(letter, center)
    if not (tip < center < root):
        raise TangencySolveFailed(
            f"window endpoints out of order for period {letter.period}")
    return RealWindow(root=root, tip=tip, center=center)


def _solve_tip(letter: CopyLabel, center: Scalar) -> Scalar:
    """Parameter where f_c^p(0) hits the restrictive-interval boundary (the
    renormalized map becomes full)."""
    p = letter.period

    def overshoot(c: Scalar) -> bool:
        f = quadratic_germ(c, 8)
        try:
            J = restrictive_interval(f, p)
        except NotRenormalizable:
            return True
        v = Scalar(*_kernels.quad_orbit_val(c.hi, c.lo, p))
        return abs(v) > J.hi * (1 - 1e-12)

    hi = Scalar(center)      # inside: not full
    step = Scalar(1e-3)
    lo = None
    c_try = hi
    for _ in range(200):
        c_try = c_try - step
        if c_try < PARAM_LO:
            c_try = PARAM_LO
        if overshoot(c_try):
            lo = c_try
            break
        hi = c_try
        step = step * 2
    if lo is None:
        raise BracketNotFound(f"tip bracket not found for period {p}")
    for _ in range(110):
        mid = (lo + hi).scale_pow2(-1)
        if overshoot(mid):
            lo = mid
        else:
            hi = mid
        if hi - lo < Scalar(1e-26):
            break
    return (lo + hi).scale_pow2(-1)


def copy_descriptor(letter) -> CopyDescriptor:
    letter = label_of(letter)
    w = real_window(letter)
    return CopyDescriptor(period=letter.period, kneading=letter.signs,
                          center=w.center, window=(w.lo, w.hi),
                          primitive=letter.period != 2)


def window_of_word(word: Union[Word, Sequence]) -> Tuple[Scalar, Scalar]:
    """[tip, center] of the iterated-tuning copy of a word (the level-n
    window of the hierarchical construction)."""
    word = word if isinstance(word, Word) else Word(word)
    center = center_of_period(word)
    tip = tuned_tip(word)
    lo, hi = (tip, center) if tip < center else (center, tip)
    return lo, hi


def tuned_tip(word: Union[Word, Sequence], tail_depth: int = 80) -> Scalar:
    """Parameter with kneading = (word-star-chain applied to the kneading of
    c = -2): the tuned image of the Ulam-Neumann endpoint."""
    word = word if isinstance(word, Word) else Word(word)
    p = word.period
    if p > MAX_TOTAL_PERIOD:
        raise PrecisionExhausted(f"total period {p} exceeds budget {MAX_TOTAL_PERIOD}")
    target = tip_target(word)
    depth = min(3 * p + tail_depth, 3 * MAX_TOTAL_PERIOD)
    lo, hi = _bisect_to_target(target, depth, width=1e-28)
    return (lo + hi).scale_pow2(-1)


# -- straightened renormalization ---------------------------------------------------


def sigma_real(c, letter, depth_k: int = 40, n_trunc: int = 30,
               tie_eps: float = 1e-8, tie_tol: float = 1e-6) -> Scalar:
    """The c' in [-2, 1/4] whose kneading matches, to depth_k, that of the
    renormalization of P_c with the given letter.

    Orbit values of the truncated renormalized germ that fall within tie_eps
    of the critical point are treated as exact critical returns (the
    truncation cannot represent a superattracting orbit exactly); such a
    symbol pins the matching parameter to a superattracting point.  If the
    depth-k prefix leaves an ambiguity interval wider than tie_tol the match
    is reported as a tie (deepen the comparison to resolve it).
    """
    letter = label_of(letter)
    c = Scalar(c)
    g, _, _ = renormalize(quadratic_germ(c, n_trunc), letter)
    h, l = g.arrays()
    x = Scalar(0.0)
    head = []
    for _ in range(depth_k):
        x = Scalar(*_kernels.ser_eval(h, l, x.hi, x.lo))
        if abs(x) > g.radius:
            raise NotRenormalizable("renormalized critical orbit escaped the disk")
        if abs(x) < Scalar(tie_eps):
            head.append(0)
        else:
            head.append(1 if x > 0 else -1)
    target = SignTarget(head=tuple(head), cycle=())
    # the set of parameters matching a finite prefix is an interval (a point
    # when the prefix contains a critical symbol): locate both of its edges

    def cmp_at(cc: Scalar) -> int:
        return compare_to_target(orbit_signs(cc, depth_k), target, depth_k)

    lo, hi = PARAM_LO, PARAM_HI
    if cmp_at(lo) > 0 or cmp_at(hi) < 0:
        raise BracketNotFound("renormalized kneading outside the real family")
    left = _bisect_edge(target, depth_k, want_less=True, lo=lo, hi=hi)
    right = _bisect_edge(target, depth_k, want_less=False, lo=lo, hi=hi)
    if right - left > Scalar(tie_tol):
        raise KneadingTieAtDepthK(
            f"kneading match ambiguous to width {float(right - left):.2e} at "
            f"depth {depth_k}; increase depth")
    return (left + right).scale_pow2(-1)


# -- Misiurewicz-approach cascade ---------------------------------------------------


@dataclass(frozen=True)
class MisiurewiczRow:
    n: int
    c: Scalar
    scaled: Scalar                  # |c_n + 2| * 4^n
    ratio: Optional[Scalar]         # |c_n + 2| / |c_{n-1} + 2|


def misiurewicz_cascade(n_max: int) -> List[MisiurewiczRow]:
    """Superattracting parameters approaching -2 whose orbits shadow the
    repelling fixed point: f_c^n(0) = 0 with f_c^k(0) > 0 for k = 2..n-1.
    |c_n + 2| decays like 4^{-n} (4 = multiplier of the fixed point of P_{-2})."""
    if n_max > 20:
        raise PrecisionExhausted("misiurewicz cascade limited to n_max <= 20")
    if n_max < 4:
        raise ValueError("n_max must be >= 4")
    rows: List[MisiurewiczRow] = []
    r_prev = None
    for n in range(4, n_max + 1):
        if r_prev is None:
            c = _misiurewicz_first(4)
        else:
            c = _misiurewicz_next(n, r_prev)
        r = abs(c + 2)
        ratio = None if r_prev is None else r / r_prev
        rows.append(MisiurewiczRow(n=n, c=c, scaled=r * Scalar(4) ** n, ratio=ratio))
        r_prev = r
    return rows


def _check_misiurewicz_signs(c: Scalar, n: int) -> bool:
    signs = orbit_signs(c, n - 1)
    return all(int(s) == 1 for s in signs[1:n - 1])


def _misiurewicz_first(n: int) -> Scalar:
    grid = np.linspace(-1.999999999, -1.75, 10_000)
    vals = np.array([_kernels.quad_orbit_val(g, 0.0, n)[0] for g in grid])
    for j in range(len(grid) - 1):
        if (vals[j] < 0) != (vals[j + 1] < 0):
            c = _polish_orbit_root(Scalar(0.5 * (grid[j] + grid[j + 1])), n)
            if _check_misiurewicz_signs(c, n):
                return c
    raise BracketNotFound("no admissible period-4 parameter near -2")


def _misiurewicz_next(n: int, r_prev: Scalar) -> Scalar:
    for widen in (1.0, 2.0, 4.0):
        lo = Scalar(-2) + r_prev * Scalar(0.25 / (1.0 + 0.6 * widen))
        hi = Scalar(-2) + r_prev * Scalar(0.25 * (1.0 + 0.6 * widen))
        vlo = Scalar(*_kernels.quad_orbit_val(lo.hi, lo.lo, n))
        vhi = Scalar(*_kernels.quad_orbit_val(hi.hi, hi.lo, n))
        if (vlo < 0) != (vhi < 0):
            for _ in range(80):
                mid = (lo + hi).scale_pow2(-1)
                vm = Scalar(*_kernels.quad_orbit_val(mid.hi, mid.lo, n))
                if (vm < 0) == (vlo < 0):
                    lo, vlo = mid, vm
                else:
                    hi = mid
            c = _polish_orbit_root((lo + hi).scale_pow2(-1), n)
            if _check_misiurewicz_signs(c, n):
                return c
    raise BracketNotFound(f"misiurewicz bracket lost at n = {n}")


def _polish_orbit_root(c: Scalar, n: int) -> Scalar:
    for _ in range(8):
        vh, vl, uh, ul = _kernels.quad_orbit_val_dc(c.hi, c.lo, n)
        v, u = Scalar(vh, vl), Scalar(uh, ul)
        if not u:
            break
        c = c - v / u
        if abs(v) < Scalar(1e-30):
            break
    return c


# -- membership ----------------------------------------------------------------------


def escape_time(c, max_iter: int, r_esc: float = 2.0) -> Optional[int]:
    """Smallest k <= max_iter with |P_c^k(0)| > r_esc, or None (member)."""
    if max_iter < 1:
        raise ValueError("max_iter must be >= 1")
    if r_esc < 2.0:
        raise ValueError("escape radius must be >= 2")
    if isinstance(c, tuple):
        re, im = Scalar(c[0]), Scalar(c[1])
    elif isinstance(c, complex):
        re, im = Scalar(c.real), Scalar(c.imag)
    else:
        re, im = Scalar(c), Scalar(0.0)
    resc_sq = float(Scalar(r_esc) * Scalar(r_esc))
    k = _kernels.escape_steps_dd(re.hi, re.lo, im.hi, im.lo, int(max_iter), resc_sq)
    return None if k == 0 else int(k)
