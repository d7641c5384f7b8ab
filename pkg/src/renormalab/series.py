"""Truncated analytic germs and their arithmetic.

A :class:`PowerGerm` is a polynomial jet a_0 + a_1 z + ... + a_N z^N (N >= 4)
together with a reference disk radius used for norms and validity policing.
All operations are pure; germs are immutable.

Truncation policy: composition drops every degree above the output
truncation, and the degree-k output coefficients are computed identically at
any truncation >= k, so composing at higher order and truncating afterwards
is bit-for-bit the same as composing at the lower order.  Validity on the
reference disk is policed by the tail diagnostic |a_N| r^N, which is
reported at the full reference radius but thresholded on the quarter-radius
circle: the top coefficient of a healthy converged iterate sits at the
truncation-feedback level (~1e-11 at N = 30), which is harmless where the
germ is actually evaluated yet would trip any useful tolerance at the full
radius.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Sequence, Tuple, Union

import numpy as np

from . import _kernels, dd
from .dd import Scalar
from .errors import DegenerateQuadraticTerm, DomainExceeded, TailBlowup

DEFAULT_RADIUS = 2.5
DEFAULT_TAIL_TOL = 1e-8
ODD_FLUSH = 1e-24

ComplexPair = Tuple[Scalar, Scalar]


class PowerGerm:
    """Truncated Taylor coefficients of an analytic germ at 0."""

    __slots__ = ("coeffs", "radius", "parity", "_h", "_l")

    def __init__(self, coeffs: Sequence, radius=DEFAULT_RADIUS, parity: str = "general"):
        cs = tuple(Scalar(c) for c in coeffs)
        if len(cs) < 5:
            raise ValueError("truncation must be at least 4")
        if parity not in ("general", "even"):
            raise ValueError(f"bad parity flag: {parity!r}")
        for k, c in enumerate(cs):
            if not c.is_finite():
                raise ValueError(f"non-finite coefficient at degree {k}")
            if parity == "even" and k % 2 == 1 and c:
                raise ValueError(f"even germ with nonzero odd coefficient a_{k}")
        r = Scalar(radius)
        if not (r.is_finite() and r > 0):
            raise ValueError("radius must be positive and finite")
        object.__setattr__(self, "coeffs", cs)
        object.__setattr__(self, "radius", r)
        object.__setattr__(self, "parity", parity)
        h = np.array([c.hi for c in cs])
        l = np.array([c.lo for c in cs])
        object.__setattr__(self, "_h", h)
        object.__setattr__(self, "_l", l)

    def __setattr__(self, name, value):
        raise AttributeError("PowerGerm is immutable")

    # -- basic queries -------------------------------------------------------

    @property
    def truncation(self) -> int:
        return len(self.coeffs) - 1

    @property
    def normalized(self) -> bool:
        return not self.coeffs[1] and self.coeffs[2] == 1

    def a(self, k: int) -> Scalar:
        return self.coeffs[k]

    @property
    def tail_diagnostic(self) -> Scalar:
        return self.tail_at(self.radius)

    def tail_at(self, r) -> Scalar:
        n = self.truncation
        return abs(self.coeffs[n]) * (Scalar(r) ** n)

    def arrays(self):
        return self._h, self._l

    def __eq__(self, other):
        if not isinstance(other, PowerGerm):
            return NotImplemented
        return (self.coeffs == other.coeffs and self.radius == other.radius
                and self.parity == other.parity)

    def __hash__(self):
        return hash((self.coeffs, self.radius, self.parity))

    def __repr__(self):
        n = self.truncation
        return (f"PowerGerm(N={n}, a0={float(self.coeffs[0]):.6g}, "
                f"parity={self.parity}, radius={float(self.radius):.3g})")

    # -- serialization ---------------------------------------------------------

    def to_json(self) -> dict:
        return {
            "schema_version": 1,
            "parity": self.parity,
            "radius": self.radius.to_decimal(),
            "coeffs": [c.to_decimal() for c in self.coeffs],
        }

    @classmethod
    def from_json(cls, doc: dict) -> "PowerGerm":
        if doc.get("schema_version") != 1:
            raise ValueError(f"unsupported germ schema: {doc.get('schema_version')!r}")
        return cls([Scalar.from_decimal(c) for c in doc["coeffs"]],
                   radius=Scalar.from_decimal(doc["radius"]),
                   parity=doc["parity"])

    def quantized(self) -> "PowerGerm":
        """Snap every coefficient and the radius onto the 34-digit grid."""
        return PowerGerm([c.quantized() for c in self.coeffs],
                         radius=self.radius.quantized(), parity=self.parity)

    def with_coeff(self, k: int, value) -> "PowerGerm":
        cs = list(self.coeffs)
        cs[k] = Scalar(value)
        parity = self.parity
        if parity == "even" and k % 2 == 1 and cs[k]:
            parity = "general"
        return PowerGerm(cs, radius=self.radius, parity=parity)


def quadratic_germ(c, n: int = 30, radius=DEFAULT_RADIUS) -> PowerGerm:
    """Truncated representative of z -> c + z^2."""
    coeffs = [Scalar(0.0)] * (n + 1)
    coeffs[0] = Scalar(c)
    coeffs[2] = Scalar(1.0)
    return PowerGerm(coeffs, radius=radius, parity="even")


def identity_germ(n: int = 30, radius=DEFAULT_RADIUS) -> PowerGerm:
    coeffs = [Scalar(0.0)] * (n + 1)
    coeffs[1] = Scalar(1.0)
    return PowerGerm(coeffs, radius=radius)


# -- evaluation -----------------------------------------------------------------

def evaluate(f: PowerGerm, z: Union[Scalar, float, int, ComplexPair]):
    """Horner evaluation; z is a Scalar or an (re, im) pair of Scalars."""
    h, l = f.arrays()
    if isinstance(z, tuple):
        re, im = Scalar(z[0]), Scalar(z[1])
        if re * re + im * im > f.radius * f.radius:
            raise DomainExceeded(
                f"|z| > germ radius {float(f.radius):.6g}")
        rh, rl, ih, il = _kernels.ser_eval_complex(h, l, re.hi, re.lo, im.hi, im.lo)
        return Scalar(rh, rl), Scalar(ih, il)
    x = Scalar(z)
    if abs(x) > f.radius:
        raise DomainExceeded(f"|z| = {float(abs(x)):.6g} > germ radius "
                             f"{float(f.radius):.6g}")
    return Scalar(*_kernels.ser_eval(h, l, x.hi, x.lo))


# -- composition ------------------------------------------------------------------

def compose(f: PowerGerm, g: PowerGerm, tail_tol: float = DEFAULT_TAIL_TOL) -> PowerGerm:
    """Taylor coefficients of f(g(z)) truncated at min(N_f, N_g).

    The result inherits g's reference radius; pass tail_tol=None to defer
    validity policing to the caller (renormalization checks its final,
    rescaled output instead of the raw iterate).
    """
    n = min(f.truncation, g.truncation)
    fh, fl = f.arrays()
    gh, gl = g.arrays()
    hh, hl = _kernels.ser_compose(fh[:n + 1], fl[:n + 1], gh[:n + 1], gl[:n + 1])
    parity = "even" if g.parity == "even" else "general"
    out = _build_germ(hh, hl, g.radius, parity)
    if tail_tol is not None:
        _check_tail(out, tail_tol)
    return out


def _check_tail(f: PowerGerm, tol: float):
    t = f.tail_at(f.radius.scale_pow2(-2))
    if not (t < Scalar(tol)):
        raise TailBlowup(
            f"tail diagnostic {float(t):.3e} at r = radius/4 exceeds {tol:.1e} "
            f"(N = {f.truncation})")


def _build_germ(hh, hl, radius, parity) -> PowerGerm:
    cs = [Scalar(float(hh[k]), float(hl[k])) for k in range(len(hh))]
    return PowerGerm(cs, radius=radius, parity=parity)


# -- affine rescaling ------------------------------------------------------------

def affine_rescale(f: PowerGerm, a) -> PowerGerm:
    """a f(z/a): the coefficient transform b_k = a^(1-k) a_k (radius scaled
    by |a| and clamped to the original reference radius)."""
    a = Scalar(a)
    if not a:
        raise ValueError("rescale factor must be nonzero")
    inv = dd.ONE / a
    cs = [a * f.coeffs[0], f.coeffs[1]]
    pw = dd.ONE
    for k in range(2, f.truncation + 1):
        pw = pw * inv
        cs.append(f.coeffs[k] * pw)
    new_r = abs(a) * f.radius
    if new_r > f.radius:
        new_r = f.radius
    return PowerGerm(cs, radius=new_r, parity=f.parity)


def normalize(f: PowerGerm, quad_tol: float = 1e-8):
    """Rescale to a_1 = 0, a_2 = 1 exactly; returns (germ, lambda) with
    lambda = f''(0)/2 = a_2."""
    if abs(f.coeffs[1]) > Scalar(1e-20):
        raise ValueError("normalize requires a vanishing linear term")
    lam = f.coeffs[2]
    if abs(lam) < Scalar(quad_tol):
        raise DegenerateQuadraticTerm(
            f"|a_2| = {float(abs(lam)):.3e} below tolerance {quad_tol:.1e}")
    if lam == 1 and not f.coeffs[1]:
        return f, Scalar(1.0)
    inv = dd.ONE / lam
    cs = [lam * f.coeffs[0], Scalar(0.0), Scalar(1.0)]
    pw = inv
    for k in range(3, f.truncation + 1):
        pw = pw * inv
        cs.append(f.coeffs[k] * pw)
    if f.parity == "even":
        for k in range(1, len(cs), 2):
            if abs(cs[k]) < Scalar(ODD_FLUSH):
                cs[k] = Scalar(0.0)
    new_r = abs(lam) * f.radius
    if new_r > f.radius:
        new_r = f.radius
    return PowerGerm(cs, radius=new_r, parity=f.parity), lam


# -- sup norms -------------------------------------------------------------------

@dataclass(frozen=True)
class NormReport:
    sampled_sup: Scalar
    coeff_bound: Scalar
    radius: Scalar
    samples: int


@lru_cache(maxsize=8)
def _unit_circle(samples: int):
    step = dd.TWO_PI / samples
    ch = np.empty(samples)
    cl = np.empty(samples)
    sh = np.empty(samples)
    sl = np.empty(samples)
    for j in range(samples):
        s, c = dd.sincos(step * j)
        ch[j], cl[j] = c.hi, c.lo
        sh[j], sl[j] = s.hi, s.lo
    return ch, cl, sh, sl


def sup_norm(f: PowerGerm, r, samples: int = 256) -> NormReport:
    """Sampled sup of |f| on the circle |z| = r, plus the certified
    coefficient-sum upper bound sum |a_k| r^k."""
    r = Scalar(r)
    if not (r > 0 and r <= f.radius):
        raise ValueError(f"norm radius {float(r):.6g} outside (0, "
                         f"{float(f.radius):.6g}]")
    ch, cl, sh, sl = _unit_circle(samples)
    zrh = np.empty(samples)
    zrl = np.empty(samples)
    zih = np.empty(samples)
    zil = np.empty(samples)
    for j in range(samples):
        zr = r * Scalar(float(ch[j]), float(cl[j]))
        zi = r * Scalar(float(sh[j]), float(sl[j]))
        zrh[j], zrl[j] = zr.hi, zr.lo
        zih[j], zil[j] = zi.hi, zi.lo
    h, l = f.arrays()
    mh, ml = _kernels.ser_eval_circle_maxsq(h, l, zrh, zrl, zih, zil)
    sampled = dd.sqrt(Scalar(mh, ml))
    bound = Scalar(0.0)
    pw = dd.ONE
    for k in range(f.truncation + 1):
        bound = bound + abs(f.coeffs[k]) * pw
        pw = pw * r
    if sampled > bound:  # guards rounding fuzz; mathematically sup <= bound
        sampled = bound
    return NormReport(sampled_sup=sampled, coeff_bound=bound, radius=r,
                      samples=samples)


def germ_distance(f: PowerGerm, g: PowerGerm, r=None, samples: int = 256) -> Scalar:
    """Sampled sup-distance of two germs on |z| = r (default: half the
    smaller reference radius)."""
    n = min(f.truncation, g.truncation)
    cs = [f.coeffs[k] - g.coeffs[k] for k in range(n + 1)]
    for k in range(n + 1, f.truncation + 1):
        cs.append(f.coeffs[k])
    for k in range(n + 1, g.truncation + 1):
        cs.append(-g.coeffs[k])
    while len(cs) < 5:
        cs.append(Scalar(0.0))
    rr = min(f.radius, g.radius)
    diff = PowerGerm(cs, radius=rr)
    if r is None:
        r = rr.scale_pow2(-1)
    return sup_norm(diff, r, samples=samples).sampled_sup
