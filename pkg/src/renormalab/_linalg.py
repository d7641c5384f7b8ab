"""Dense linear algebra in Scalar (double-double) arithmetic.

Sizes here are tiny (truncated-coefficient Jacobians, <= ~40x40), so plain
Python loops over Scalar suffice.  Provides LU solves with partial pivoting,
a condition estimate, Householder Hessenberg reduction, a complex
shifted-QR eigensolver, and power iteration.
"""

from __future__ import annotations

from typing import List, Sequence, Tuple

from . import dd
from .dd import Scalar
from .errors import DegenerateJacobian, QRNoConvergence

Vec = List[Scalar]
Mat = List[List[Scalar]]

_ZERO = Scalar(0.0)
_ONE = Scalar(1.0)


def mat_vec(a: Mat, x: Sequence[Scalar]) -> Vec:
    return [sum((a[i][j] * x[j] for j in range(len(x))), _ZERO)
            for i in range(len(a))]


def inf_norm_vec(x: Sequence[Scalar]) -> Scalar:
    m = _ZERO
    for v in x:
        av = abs(v)
        if av > m:
            m = av
    return m


def inf_norm_mat(a: Mat) -> Scalar:
    m = _ZERO
    for row in a:
        s = sum((abs(v) for v in row), _ZERO)
        if s > m:
            m = s
    return m


def lu_factor(a: Mat):
    """Doolittle LU with partial pivoting; returns (LU, perm)."""
    n = len(a)
    lu = [row[:] for row in a]
    perm = list(range(n))
    for k in range(n):
        piv, pval = k, abs(lu[k][k])
        for i in range(k + 1, n):
            v = abs(lu[i][k])
            if v > pval:
                piv, pval = i, v
        if not pval:
            raise DegenerateJacobian("singular matrix in LU factorization")
        if piv != k:
            lu[k], lu[piv] = lu[piv], lu[k]
            perm[k], perm[piv] = perm[piv], perm[k]
        inv = _ONE / lu[k][k]
        for i in range(k + 1, n):
            m = lu[i][k] * inv
            lu[i][k] = m
            if m:
                for j in range(k + 1, n):
                    lu[i][j] = lu[i][j] - m * lu[k][j]
    return lu, perm


def lu_solve_factored(lu: Mat, perm: List[int], b: Sequence[Scalar]) -> Vec:
    n = len(lu)
    x = [b[p] for p in perm]
    for i in range(1, n):
        s = x[i]
        for j in range(i):
            if lu[i][j]:
                s = s - lu[i][j] * x[j]
        x[i] = s
    for i in range(n - 1, -1, -1):
        s = x[i]
        for j in range(i + 1, n):
            if lu[i][j]:
                s = s - lu[i][j] * x[j]
        x[i] = s / lu[i][i]
    return x


def lu_solve(a: Mat, b: Sequence[Scalar]) -> Vec:
    lu, perm = lu_factor(a)
    return lu_solve_factored(lu, perm, b)


def balance(a: Mat):
    """Similarity scaling D^-1 A D with powers of 2 so row/column norms
    match (exact in floating point; eigenvalues unchanged).  Returns
    (balanced matrix, D diagonal as exponents of 2)."""
    import math

    n = len(a)
    m = [row[:] for row in a]
    expo = [0] * n
    for _ in range(8):
        changed = False
        for i in range(n):
            r = sum((abs(m[i][j]) for j in range(n) if j != i), _ZERO)
            c = sum((abs(m[j][i]) for j in range(n) if j != i), _ZERO)
            if not r or not c:
                continue
            k = int(round(0.5 * (math.log2(float(c)) - math.log2(float(r)))))
            if k == 0:
                continue
            changed = True
            expo[i] += k
            for j in range(n):
                if j != i:
                    m[i][j] = m[i][j].scale_pow2(k)
                    m[j][i] = m[j][i].scale_pow2(-k)
        if not changed:
            break
    return m, expo


def lu_solve_balanced(a: Mat, b: Sequence[Scalar]) -> Vec:
    """Solve A x = b through the balanced similarity (better pivoting on
    badly row-scaled Jacobians)."""
    m, expo = balance(a)
    bb = [b[i].scale_pow2(expo[i]) for i in range(len(b))]
    y = lu_solve(m, bb)
    return [y[i].scale_pow2(-expo[i]) for i in range(len(y))]


def condition_estimate(a: Mat, balanced: bool = True) -> Scalar:
    """||A||_inf * ||A^-1||_inf via the explicit inverse (fine at these
    sizes); computed after similarity balancing by default."""
    if balanced:
        a, _ = balance(a)
    n = len(a)
    lu, perm = lu_factor(a)
    rows = [[_ZERO] * n for _ in range(n)]
    for j in range(n):
        e = [_ZERO] * n
        e[j] = _ONE
        col = lu_solve_factored(lu, perm, e)
        for i in range(n):
            rows[i][j] = col[i]
    return inf_norm_mat(a) * inf_norm_mat(rows)


# -- complex helpers (pairs of Scalars) ------------------------------------------

C = Tuple[Scalar, Scalar]


def _cadd(a: C, b: C) -> C:
    return (a[0] + b[0], a[1] + b[1])


def _csub(a: C, b: C) -> C:
    return (a[0] - b[0], a[1] - b[1])


def _cmul(a: C, b: C) -> C:
    return (a[0] * b[0] - a[1] * b[1], a[0] * b[1] + a[1] * b[0])


def _cdiv(a: C, b: C) -> C:
    d = b[0] * b[0] + b[1] * b[1]
    return ((a[0] * b[0] + a[1] * b[1]) / d, (a[1] * b[0] - a[0] * b[1]) / d)


def _cabs(a: C) -> Scalar:
    return dd.sqrt(a[0] * a[0] + a[1] * a[1])


def _conj(a: C) -> C:
    return (a[0], -a[1])


def _csqrt(a: C) -> C:
    r = _cabs(a)
    if not r:
        return (_ZERO, _ZERO)
    if a[0] >= 0:
        u = dd.sqrt((r + a[0]).scale_pow2(-1))
        v = a[1] / u.scale_pow2(1)
        return (u, v)
    v = dd.sqrt((r - a[0]).scale_pow2(-1))
    if a[1] < 0:
        v = -v
    u = a[1] / v.scale_pow2(1)
    return (u, v)


# -- Hessenberg + shifted QR --------------------------------------------------------


def hessenberg(a: Mat) -> Mat:
    """Householder reduction of a real matrix to upper Hessenberg form."""
    n = len(a)
    h = [row[:] for row in a]
    for k in range(n - 2):
        # build the reflector annihilating h[k+2:, k]
        norm2 = _ZERO
        for i in range(k + 1, n):
            norm2 = norm2 + h[i][k] * h[i][k]
        if not norm2:
            continue
        alpha = dd.sqrt(norm2)
        if h[k + 1][k] > 0:
            alpha = -alpha
        v = [_ZERO] * n
        v[k + 1] = h[k + 1][k] - alpha
        for i in range(k + 2, n):
            v[i] = h[i][k]
        vnorm2 = sum((v[i] * v[i] for i in range(k + 1, n)), _ZERO)
        if not vnorm2:
            continue
        # H <- P H P with P = I - 2 v v^T / (v^T v)
        for j in range(n):
            s = sum((v[i] * h[i][j] for i in range(k + 1, n)), _ZERO)
            s = (s / vnorm2).scale_pow2(1)
            for i in range(k + 1, n):
                h[i][j] = h[i][j] - s * v[i]
        for i in range(n):
            s = sum((h[i][j] * v[j] for j in range(k + 1, n)), _ZERO)
            s = (s / vnorm2).scale_pow2(1)
            for j in range(k + 1, n):
                h[i][j] = h[i][j] - s * v[j]
        for i in range(k + 2, n):
            h[i][k] = _ZERO
    return h


def eigenvalues(a: Mat, sweep_factor: int = 100) -> List[C]:
    """All eigenvalues of a real matrix by complex single-shift QR with
    Wilkinson shifts on the balanced Hessenberg form."""
    n = len(a)
    if n == 0:
        return []
    if n == 1:
        return [(a[0][0], _ZERO)]
    a, _ = balance(a)
    hr = hessenberg(a)
    h: List[List[C]] = [[(hr[i][j], _ZERO) for j in range(n)] for i in range(n)]
    eig: List[C] = []
    budget = sweep_factor * n
    m = n
    sweeps = 0
    tiny = Scalar(1e-40)
    while m > 0:
        if m == 1:
            eig.append(h[0][0])
            m = 0
            break
        # deflate converged subdiagonals
        deflated = False
        for k in range(m - 1, 0, -1):
            scale = abs(h[k - 1][k - 1][0]) + abs(h[k][k][0])
            if _cabs(h[k][k - 1]) <= Scalar(1e-30) * Scalar(max(float(scale), 1.0)) + tiny:
                if k == m - 1:
                    eig.append(h[m - 1][m - 1])
                    m -= 1
                    deflated = True
                break
        if deflated:
            continue
        if sweeps >= budget:
            raise QRNoConvergence(
                f"QR did not converge after {budget} sweeps (n = {n})")
        sweeps += 1
        # Wilkinson shift from the trailing 2x2 block
        A_ = h[m - 2][m - 2]
        B_ = h[m - 2][m - 1]
        Cc = h[m - 1][m - 2]
        D_ = h[m - 1][m - 1]
        tr = _cadd(A_, D_)
        det = _csub(_cmul(A_, D_), _cmul(B_, Cc))
        half_tr = (tr[0].scale_pow2(-1), tr[1].scale_pow2(-1))
        disc = _csqrt(_csub(_cmul(half_tr, half_tr), det))
        r1 = _cadd(half_tr, disc)
        r2 = _csub(half_tr, disc)
        mu = r1 if _cabs(_csub(r1, D_)) < _cabs(_csub(r2, D_)) else r2
        # QR step on the active m x m block via Givens rotations
        rot: List[Tuple[C, C]] = []
        for i in range(m):
            h[i][i] = _csub(h[i][i], mu)
        for k in range(m - 1):
            x = h[k][k]
            y = h[k + 1][k]
            r = dd.sqrt(x[0] * x[0] + x[1] * x[1] + y[0] * y[0] + y[1] * y[1])
            if not r:
                rot.append(((_ONE, _ZERO), (_ZERO, _ZERO)))
                continue
            cs = (x[0] / r, x[1] / r)
            sn = (y[0] / r, y[1] / r)
            rot.append((cs, sn))
            for j in range(k, m):
                hk = h[k][j]
                hk1 = h[k + 1][j]
                h[k][j] = _cadd(_cmul(_conj(cs), hk), _cmul(_conj(sn), hk1))
                h[k + 1][j] = _csub(_cmul(cs, hk1), _cmul(sn, hk))
        for k in range(m - 1):
            cs, sn = rot[k]
            for i in range(min(k + 2, m - 1) + 1):
                hik = h[i][k]
                hik1 = h[i][k + 1]
                h[i][k] = _cadd(_cmul(hik, cs), _cmul(hik1, sn))
                h[i][k + 1] = _csub(_cmul(hik1, _conj(cs)), _cmul(hik, _conj(sn)))
        for i in range(m):
            h[i][i] = _cadd(h[i][i], mu)
    eig.sort(key=lambda z: (-float(_cabs(z)), -float(z[0]), -float(abs(z[1]))))
    return eig


def power_iteration(a: Mat, iters: int = 300, tol: float = 1e-30):
    """Dominant eigenvalue/vector of a real matrix (Rayleigh quotient on the
    balanced similarity; the vector is mapped back to original coordinates)."""
    n = len(a)
    m, expo = balance(a)
    v = [_ONE for _ in range(n)]
    lam_prev = _ZERO
    lam = _ZERO
    for _ in range(iters):
        w = mat_vec(m, v)
        nrm = inf_norm_vec(w)
        if not nrm:
            raise DegenerateJacobian("power iteration hit the zero vector")
        v = [x / nrm for x in w]
        w2 = mat_vec(m, v)
        num = sum((w2[i] * v[i] for i in range(n)), _ZERO)
        den = sum((v[i] * v[i] for i in range(n)), _ZERO)
        lam = num / den
        if abs(lam - lam_prev) < Scalar(tol) * max(abs(lam), _ONE):
            break
        lam_prev = lam
    return lam, [v[i].scale_pow2(-expo[i]) for i in range(n)]
