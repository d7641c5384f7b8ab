"""Spectra of the linearized renormalization operator.

The Jacobian of the even-coefficient map is differentiated by central
differences at a converged solution, reduced to Hessenberg form and solved
by complex shifted QR in Scalar arithmetic; a power iteration provides an
independent value of the top eigenvalue (the two must agree to 1e-8).
Finite truncations produce spurious boundary eigenvalues, so hyperbolicity
is read off the drift-filtered spectrum: an eigenvalue counts only if it
moves by less than 1e-3 between truncations N-8, N and N+8.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import List, Optional, Sequence, Tuple

from . import _linalg
from .combinatorics import Word, label_of
from .dd import Scalar
from .errors import NumericError
from .solver import (FixedPointResult, CycleResult, apply_word, coeff_map,
                     fd_jacobian, pack, solve_fixed_point)
from .series import PowerGerm, germ_distance

DRIFT_TOL = 1e-3
UNSTABLE_MARGIN = 1e-6
POWER_QR_AGREEMENT = 1e-8


def jacobian(word, at: PowerGerm, n: Optional[int] = None) -> _linalg.Mat:
    """Differential of the word's operator in the even-coefficient unknowns
    at a converged fixed point (`at` must satisfy R_word(at) ~ at)."""
    word = word if isinstance(word, Word) else Word([word] if not isinstance(word, (list, tuple)) else word)
    n = at.truncation if n is None else n
    if n != at.truncation:
        raise ValueError("truncation mismatch between germ and request")
    out, _ = apply_word(at, word, check=False)
    resid = germ_distance(out, at, r=at.radius.scale_pow2(-1), samples=128)
    if not (resid < Scalar(1e-6)):
        raise ValueError(
            f"jacobian requested away from a fixed point (residual "
            f"{float(resid):.3e}); solve first")
    return fd_jacobian(pack(at), word, n, at.radius)


@dataclass(frozen=True)
class SpectrumReport:
    eigenvalues: List[Tuple[Scalar, Scalar]]   # sorted by decreasing modulus
    lambda_star: Optional[Scalar]
    unstable_count: int
    unstable_vector: Optional[List[Scalar]]
    drift: Optional[Scalar]
    converged: List[bool]
    truncation: int

    def moduli(self) -> List[Scalar]:
        return [_linalg._cabs(z) for z in self.eigenvalues]

    def csv_rows(self):
        out = [("re", "im", "modulus", "converged")]
        for z, flag in zip(self.eigenvalues, self.converged):
            out.append((z[0].to_decimal(), z[1].to_decimal(),
                        _linalg._cabs(z).to_decimal(), "1" if flag else "0"))
        return out

    def to_json(self) -> dict:
        return {
            "truncation": self.truncation,
            "lambda_star": None if self.lambda_star is None else self.lambda_star.to_decimal(),
            "unstable_count": self.unstable_count,
            "drift": None if self.drift is None else self.drift.to_decimal(),
            "eigenvalues": [
                {"re": z[0].to_decimal(), "im": z[1].to_decimal(),
                 "converged": flag}
                for z, flag in zip(self.eigenvalues, self.converged)
            ],
        }


def eigen_analysis(jac: _linalg.Mat, truncation: int = 0) -> SpectrumReport:
    """Raw eigendecomposition of one Jacobian (no drift filtering): every
    eigenvalue is taken at face value."""
    eig = _linalg.eigenvalues(jac)
    moduli = [_linalg._cabs(z) for z in eig]
    unstable = [i for i, m in enumerate(moduli) if m > Scalar(1 + UNSTABLE_MARGIN)]
    lam = None
    vec = None
    if len(unstable) == 1:
        i = unstable[0]
        if not eig[i][1]:
            lam = eig[i][0]
        else:
            lam = moduli[i]
        _, vec = _linalg.power_iteration(jac)
    return SpectrumReport(eigenvalues=eig, lambda_star=lam,
                          unstable_count=len(unstable), unstable_vector=vec,
                          drift=None, converged=[True] * len(eig),
                          truncation=truncation)


def _match_drift(base: List[Tuple[Scalar, Scalar]],
                 other: List[Tuple[Scalar, Scalar]]) -> List[Scalar]:
    """Distance from each base eigenvalue to its nearest unclaimed partner
    in `other` (greedy from the largest modulus down)."""
    taken = [False] * len(other)
    dists: List[Scalar] = []
    for z in base:
        best = None
        best_j = -1
        for j, w in enumerate(other):
            if taken[j]:
                continue
            d = _linalg._cabs((z[0] - w[0], z[1] - w[1]))
            if best is None or d < best:
                best, best_j = d, j
        if best_j >= 0:
            taken[best_j] = True
            dists.append(best)
        else:
            dists.append(Scalar(float("inf")))
    return dists


def spectrum_report(word, n: int, solutions: Optional[dict] = None,
                    drift_tol: float = DRIFT_TOL, step: int = 8) -> SpectrumReport:
    """Drift-filtered spectrum of the word's operator at its fixed point:
    solves at truncations n-step, n, n+step, matches eigenvalues across the
    three, and reports only drift-converged ones as trustworthy.

    `solutions` may carry precomputed FixedPointResults keyed by truncation.
    """
    word = word if isinstance(word, Word) else Word([word] if not isinstance(word, (list, tuple)) else word)
    solutions = dict(solutions or {})
    reports = {}
    for nn in (n - step, n, n + step):
        if nn not in solutions:
            solutions[nn] = solve_fixed_point(word, nn)
        reports[nn] = eigen_analysis(jacobian(word, solutions[nn].germ), truncation=nn)
    base = reports[n]
    d_lo = _match_drift(base.eigenvalues, reports[n - step].eigenvalues)
    d_hi = _match_drift(base.eigenvalues, reports[n + step].eigenvalues)
    converged = [bool(dl < Scalar(drift_tol) and dh < Scalar(drift_tol))
                 for dl, dh in zip(d_lo, d_hi)]
    moduli = base.moduli()
    unstable = [i for i, (m, ok) in enumerate(zip(moduli, converged))
                if ok and m > Scalar(1 + UNSTABLE_MARGIN)]
    lam = None
    vec = None
    drift = None
    if len(unstable) == 1:
        i = unstable[0]
        lam = base.eigenvalues[i][0] if not base.eigenvalues[i][1] else moduli[i]
        drift = max(d_lo[i], d_hi[i])
        lam_power, vec = _linalg.power_iteration(jacobian(word, solutions[n].germ))
        if not (abs(lam_power - lam) < Scalar(POWER_QR_AGREEMENT)):
            raise NumericError(
                f"QR/power-iteration disagreement on the top eigenvalue: "
                f"{float(lam):.12g} vs {float(lam_power):.12g}")
    return SpectrumReport(eigenvalues=base.eigenvalues, lambda_star=lam,
                          unstable_count=len(unstable), unstable_vector=vec,
                          drift=drift, converged=converged, truncation=n)


def cocycle_expansion(cycle: CycleResult) -> Scalar:
    """Geometric mean of the transverse expansion around a cycle: the
    dominant eigenvalue modulus of the Jacobian of the composed word at the
    cycle's base germ, to the power 1/k."""
    k = len(cycle.word)
    jac = fd_jacobian(pack(cycle.germs[0]), cycle.word,
                      cycle.germs[0].truncation, cycle.germs[0].radius)
    lam, _ = _linalg.power_iteration(jac)
    mod = abs(lam)
    root = _nth_root(mod, k)
    if not (root > 1):
        raise NumericError(
            f"cocycle expansion {float(root):.6g} is not > 1")
    return root


def _nth_root(x: Scalar, k: int) -> Scalar:
    if k == 1:
        return x
    import math

    from . import dd
    y = Scalar(math.exp(math.log(float(x)) / k))
    for _ in range(3):  # Newton for y^k = x
        yk1 = y ** (k - 1)
        y = y - (y * yk1 - x) / (Scalar(k) * yk1)
    return y
