"""Newton solvers for fixed points and periodic orbits of the
renormalization operator, with cascade-based seeding.

The unknown vector of a germ is its even coefficients excluding a_2 (pinned
to 1 by the normalization inside the operator): u = (a_0, a_4, a_6, ..., a_N).
Jacobians are central finite differences with step 1e-8, safe at
double-double precision.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import List, Optional, Sequence

from . import _linalg
from .combinatorics import CopyLabel, Word, label_of
from .dd import Scalar
from .errors import DegenerateJacobian, NewtonDiverged, ShiftInconsistent
from .paramspace import center_of_period
from .renorm import renormalize
from .series import PowerGerm, germ_distance, quadratic_germ, DEFAULT_RADIUS

FD_STEP = 1e-8
MAX_NEWTON_STEPS = 50


def pack(f: PowerGerm) -> List[Scalar]:
    """Even coefficients except a_2: (a_0, a_4, a_6, ..., a_N)."""
    return [f.coeffs[0]] + [f.coeffs[k] for k in range(4, f.truncation + 1, 2)]


def unpack(u: Sequence[Scalar], n: int, radius=DEFAULT_RADIUS) -> PowerGerm:
    coeffs = [Scalar(0.0)] * (n + 1)
    coeffs[0] = Scalar(u[0])
    coeffs[2] = Scalar(1.0)
    for i, k in enumerate(range(4, n + 1, 2)):
        coeffs[k] = Scalar(u[i + 1])
    return PowerGerm(coeffs, radius=radius, parity="even")


def n_unknowns(n: int) -> int:
    return 1 + (n - 4) // 2 + 1 if n >= 4 else 1


def apply_word(f: PowerGerm, word: Word, check: bool = False):
    """The word's renormalization operator (letters applied left to right);
    returns (germ, lambda of the last step)."""
    lam = Scalar(1.0)
    for letter in word:
        f, lam, _ = renormalize(f, letter, check=check)
    return f, lam


def coeff_map(u: Sequence[Scalar], word: Word, n: int, radius) -> List[Scalar]:
    g, _ = apply_word(unpack(u, n, radius), word, check=False)
    return pack(g)


def fd_jacobian(u: Sequence[Scalar], word: Word, n: int, radius,
                step: float = FD_STEP) -> _linalg.Mat:
    """Central-difference Jacobian of the coefficient map u -> pack(R(germ(u)))."""
    m = len(u)
    cols = []
    h = Scalar(step)
    inv2h = Scalar(1.0) / h.scale_pow2(1)
    for j in range(m):
        up = list(u)
        um = list(u)
        up[j] = up[j] + h
        um[j] = um[j] - h
        fp = coeff_map(up, word, n, radius)
        fm = coeff_map(um, word, n, radius)
        cols.append([(fp[i] - fm[i]) * inv2h for i in range(m)])
    return [[cols[j][i] for j in range(m)] for i in range(m)]


@dataclass(frozen=True)
class FixedPointResult:
    germ: PowerGerm
    lam: Scalar
    residual: Scalar
    iterations: int
    truncation: int
    word: Word

    def to_json(self) -> dict:
        return {
            "word": self.word.to_json(),
            "truncation": self.truncation,
            "lambda": self.lam.to_decimal(),
            "residual": self.residual.to_decimal(),
            "iterations": self.iterations,
            "germ": self.germ.to_json(),
        }


@dataclass(frozen=True)
class CycleResult:
    germs: List[PowerGerm]
    word: Word
    residuals: List[Scalar]
    shift_consistency: Scalar
    iterations: int

    def to_json(self) -> dict:
        return {
            "word": self.word.to_json(),
            "shift_consistency": self.shift_consistency.to_decimal(),
            "residuals": [r.to_decimal() for r in self.residuals],
            "iterations": self.iterations,
            "germs": [g.to_json() for g in self.germs],
        }


def auto_seed_depth(word: Word, cap: int = 4) -> int:
    """Deepest cascade seeding depth whose tuned center stays within the
    total-period budget (2^14)."""
    import math
    p = word.period
    d = int((math.log(16384) / math.log(p) - 2) // 2)
    if d < 0:
        raise ValueError(f"word period {p} leaves no room for cascade seeding")
    return min(cap, d)


def seed_from_cascade(word, depth: int, n: int = 30,
                      radius=DEFAULT_RADIUS) -> PowerGerm:
    """Approximate fixed point: the truncated quadratic at the
    (2 depth + 2)-fold tuned center, renormalized depth times through the
    word (leaving it depth+2 tuning levels deep, so the residual contracts
    like the (depth+2)-nd cascade gap)."""
    word = word if isinstance(word, Word) else Word([word] if isinstance(word, (CopyLabel, int)) else word)
    if depth < 0:
        raise ValueError("depth must be >= 0")
    c = center_of_period(Word(list(word) * (2 * depth + 2)))
    f = quadratic_germ(c, n, radius=radius)
    for _ in range(depth):
        f, _ = apply_word(f, word, check=True)
    return f


def _sup_residual(f: PowerGerm, word: Word, samples: int = 512) -> Scalar:
    g, _ = apply_word(f, word, check=False)
    return germ_distance(g, f, r=f.radius.scale_pow2(-1), samples=samples)


def solve_fixed_point(word, n: int, seed: Optional[PowerGerm] = None,
                      tol: float = 1e-10, seed_depth: Optional[int] = None,
                      radius=DEFAULT_RADIUS, cond_limit: float = 1e14) -> FixedPointResult:
    """Newton solve of R_word(f) = f over even coefficients."""
    word = word if isinstance(word, Word) else Word([word] if isinstance(word, (CopyLabel, int)) else word)
    if seed is None:
        if seed_depth is None:
            seed_depth = auto_seed_depth(word)
        seed = seed_from_cascade(word, seed_depth, n=n, radius=radius)
    if seed.truncation != n:
        seed = _retruncate(seed, n)
    if not seed.normalized or seed.parity != "even":
        raise ValueError("seed must be an even normalized germ")
    if not (_sup_residual(seed, word, samples=128) < Scalar(0.1)):
        raise NewtonDiverged("seed residual >= 0.1")
    u = pack(seed)
    m = len(u)
    gval = [a - b for a, b in zip(coeff_map(u, word, n, radius), u)]
    gnorm = _linalg.inf_norm_vec(gval)
    increases = 0
    iterations = 0
    for _ in range(MAX_NEWTON_STEPS):
        if gnorm < Scalar(1e-14):
            break
        iterations += 1
        jac = fd_jacobian(u, word, n, radius)
        for i in range(m):
            jac[i][i] = jac[i][i] - 1
        cond = _linalg.condition_estimate(jac)
        if cond > Scalar(cond_limit):
            raise DegenerateJacobian(
                f"condition estimate {float(cond):.3e} beyond {cond_limit:.1e}")
        step = _linalg.lu_solve_balanced(jac, gval)
        scale = Scalar(1.0)
        for _ in range(6):
            u_try = [u[i] - scale * step[i] for i in range(m)]
            g_try = [a - b for a, b in zip(coeff_map(u_try, word, n, radius), u_try)]
            gn_try = _linalg.inf_norm_vec(g_try)
            if gn_try < gnorm or scale < Scalar(0.04):
                break
            scale = scale.scale_pow2(-1)
        if gn_try >= gnorm:
            increases += 1
            if increases >= 3:
                raise NewtonDiverged("residual increased on 3 consecutive steps")
        else:
            increases = 0
        u, gval, gnorm = u_try, g_try, gn_try
    else:
        raise NewtonDiverged(f"no convergence in {MAX_NEWTON_STEPS} steps")
    germ = unpack(u, n, radius)
    out, lam = apply_word(germ, word, check=True)
    residual = germ_distance(out, germ, r=germ.radius.scale_pow2(-1), samples=512)
    if not (residual < Scalar(tol)):
        raise NewtonDiverged(
            f"converged coefficients but sup residual {float(residual):.3e} >= {tol:.1e}")
    return FixedPointResult(germ=germ, lam=lam, residual=residual,
                            iterations=iterations, truncation=n, word=word)


def _retruncate(f: PowerGerm, n: int) -> PowerGerm:
    cs = list(f.coeffs[:n + 1])
    while len(cs) < n + 1:
        cs.append(Scalar(0.0))
    return PowerGerm(cs, radius=f.radius, parity=f.parity)


def solve_periodic(word, n: int, seeds: Optional[List[PowerGerm]] = None,
                   tol: float = 1e-10, seed_depth: Optional[int] = None,
                   radius=DEFAULT_RADIUS, cond_limit: float = 1e14) -> CycleResult:
    """Multi-shooting Newton for a cycle: R_{w_i}(g_i) = g_{i+1 mod k}."""
    word = word if isinstance(word, Word) else Word(word)
    k = len(word)
    if k < 2:
        raise ValueError("solve_periodic needs a word of length >= 2")
    if seeds is None:
        if seed_depth is None:
            seed_depth = auto_seed_depth(word)
        g0 = seed_from_cascade(word, seed_depth, n=n, radius=radius)
        seeds = [g0]
        for i in range(k - 1):
            g, _, _ = renormalize(seeds[-1], word[i], check=True)
            seeds.append(g)
    seeds = [_retruncate(s, n) if s.truncation != n else s for s in seeds]
    m = len(pack(seeds[0]))
    u = []
    for s in seeds:
        u.extend(pack(s))

    def big_g(uu):
        out = [None] * (k * m)
        for i in range(k):
            ui = uu[i * m:(i + 1) * m]
            fi = coeff_map(ui, Word([word[i]]), n, radius)
            nxt = uu[((i + 1) % k) * m:(((i + 1) % k) + 1) * m]
            for r in range(m):
                out[i * m + r] = fi[r] - nxt[r]
        return out

    gval = big_g(u)
    gnorm = _linalg.inf_norm_vec(gval)
    increases = 0
    iterations = 0
    zero = Scalar(0.0)
    for _ in range(MAX_NEWTON_STEPS):
        if gnorm < Scalar(1e-14):
            break
        iterations += 1
        jac = [[zero] * (k * m) for _ in range(k * m)]
        for i in range(k):
            ji = fd_jacobian(u[i * m:(i + 1) * m], Word([word[i]]), n, radius)
            for r in range(m):
                for s_ in range(m):
                    jac[i * m + r][i * m + s_] = ji[r][s_]
                jac[i * m + r][((i + 1) % k) * m + r] = Scalar(-1.0)
        cond = _linalg.condition_estimate(jac)
        if cond > Scalar(cond_limit):
            raise DegenerateJacobian(
                f"cycle Jacobian condition {float(cond):.3e} beyond {cond_limit:.1e}")
        step = _linalg.lu_solve_balanced(jac, gval)
        scale = Scalar(1.0)
        for _ in range(6):
            u_try = [u[i] - scale * step[i] for i in range(k * m)]
            g_try = big_g(u_try)
            gn_try = _linalg.inf_norm_vec(g_try)
            if gn_try < gnorm or scale < Scalar(0.04):
                break
            scale = scale.scale_pow2(-1)
        if gn_try >= gnorm:
            increases += 1
            if increases >= 3:
                raise NewtonDiverged("cycle residual increased on 3 consecutive steps")
        else:
            increases = 0
        u, gval, gnorm = u_try, g_try, gn_try
    else:
        raise NewtonDiverged(f"cycle: no convergence in {MAX_NEWTON_STEPS} steps")
    germs = [unpack(u[i * m:(i + 1) * m], n, radius) for i in range(k)]
    residuals = []
    for i in range(k):
        out, _, _ = renormalize(germs[i], word[i], check=True)
        residuals.append(germ_distance(out, germs[(i + 1) % k],
                                       r=germs[i].radius.scale_pow2(-1), samples=512))
    shift = max(residuals)
    if not (shift < Scalar(max(tol, 1e-8))):
        raise ShiftInconsistent(
            f"cycle closure {float(shift):.3e} fails the 1e-8 post-check")
    return CycleResult(germs=germs, word=word, residuals=residuals,
                       shift_consistency=shift, iterations=iterations)
