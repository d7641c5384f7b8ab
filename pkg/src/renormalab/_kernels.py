"""Numba-compiled double-double kernels.

Every hot loop in the package lands here: truncated-series arithmetic,
critical-orbit iteration for the quadratic/logistic/sine families, and
escape-time grids.  Numbers are carried as (hi, lo) float64 pairs with the
classical error-free transforms (Knuth two-sum, Dekker split product).  No
fastmath anywhere: the compensated arithmetic depends on strict IEEE
ordering, and determinism is a package-level contract.

Scalar-level wrappers live in :mod:`renormalab.dd`; agreement between the two
implementations is pinned by tests.
"""

import numpy as np
from numba import njit

_JIT = dict(cache=True, error_model="numpy")

_SPLITTER = 134217729.0  # 2**27 + 1


# --- error-free transforms ---------------------------------------------------

@njit(inline="always", **_JIT)
def _two_sum(a, b):
    s = a + b
    bb = s - a
    return s, (a - (s - bb)) + (b - bb)


@njit(inline="always", **_JIT)
def _quick_two_sum(a, b):
    # requires |a| >= |b| (or a == 0)
    s = a + b
    return s, b - (s - a)


@njit(inline="always", **_JIT)
def _two_prod(a, b):
    p = a * b
    ca = _SPLITTER * a
    ahi = ca - (ca - a)
    alo = a - ahi
    cb = _SPLITTER * b
    bhi = cb - (cb - b)
    blo = b - bhi
    return p, ((ahi * bhi - p) + ahi * blo + alo * bhi) + alo * blo


# --- double-double primitives -------------------------------------------------

@njit(inline="always", **_JIT)
def dd_add(ah, al, bh, bl):
    sh, se = _two_sum(ah, bh)
    th, te = _two_sum(al, bl)
    se += th
    sh, se = _quick_two_sum(sh, se)
    se += te
    return _quick_two_sum(sh, se)


@njit(inline="always", **_JIT)
def dd_neg(ah, al):
    return -ah, -al


@njit(inline="always", **_JIT)
def dd_sub(ah, al, bh, bl):
    return dd_add(ah, al, -bh, -bl)


@njit(inline="always", **_JIT)
def dd_mul(ah, al, bh, bl):
    ph, pe = _two_prod(ah, bh)
    pe += ah * bl + al * bh
    return _quick_two_sum(ph, pe)


@njit(inline="always", **_JIT)
def dd_sqr(ah, al):
    ph, pe = _two_prod(ah, ah)
    pe += 2.0 * ah * al
    return _quick_two_sum(ph, pe)


@njit(inline="always", **_JIT)
def dd_add_f(ah, al, b):
    sh, se = _two_sum(ah, b)
    se += al
    return _quick_two_sum(sh, se)


@njit(inline="always", **_JIT)
def dd_mul_f(ah, al, b):
    ph, pe = _two_prod(ah, b)
    pe += al * b
    return _quick_two_sum(ph, pe)


@njit(inline="always", **_JIT)
def dd_div(ah, al, bh, bl):
    q1 = ah / bh
    th, tl = dd_mul_f(bh, bl, q1)
    rh, rl = dd_add(ah, al, -th, -tl)
    q2 = rh / bh
    th, tl = dd_mul_f(bh, bl, q2)
    rh, rl = dd_add(rh, rl, -th, -tl)
    q3 = rh / bh
    sh, sl = _quick_two_sum(q1, q2)
    return dd_add_f(sh, sl, q3)


@njit(inline="always", **_JIT)
def dd_lt(ah, al, bh, bl):
    return ah < bh or (ah == bh and al < bl)


@njit(inline="always", **_JIT)
def dd_abs(ah, al):
    if ah < 0.0 or (ah == 0.0 and al < 0.0):
        return -ah, -al
    return ah, al


# --- transcendentals ----------------------------------------------------------

_PI_HI = 3.141592653589793
_PI_LO = 1.2246467991473532e-16
_TWO_PI_HI = 6.283185307179586
_TWO_PI_LO = 2.4492935982947064e-16
_PI_2_HI = 1.5707963267948966
_PI_2_LO = 6.123233995736766e-17
_LN2_HI = 0.6931471805599453
_LN2_LO = 2.3190468138462996e-17

_SIN_COEF = np.array([  # (-1)^k/(2k+1)!, k = 1..16
    (-0.16666666666666666, -9.25185853854297e-18),
    (0.008333333333333333, 1.1564823173178714e-19),
    (-0.0001984126984126984, -1.7209558293420705e-22),
    (2.7557319223985893e-06, -1.858393274046472e-22),
    (-2.505210838544172e-08, 1.448814070935912e-24),
    (1.6059043836821613e-10, 1.2585294588752098e-26),
    (-7.647163731819816e-13, -7.03872877733453e-30),
    (2.8114572543455206e-15, 1.6508842730861433e-31),
    (-8.22063524662433e-18, -2.2141894119604265e-34),
    (1.9572941063391263e-20, -1.3643503830087908e-36),
    (-3.868170170630684e-23, 8.843177655482344e-40),
    (6.446950284384474e-26, -1.9330404233703465e-42),
    (-9.183689863795546e-29, -1.4303150396787322e-45),
    (1.1309962886447716e-31, 1.0498015412959506e-47),
    (-1.216125041553518e-34, -5.586290567888806e-51),
    (1.151633562077195e-37, -6.09957445788454e-54),
])

_COS_COEF = np.array([  # (-1)^k/(2k)!, k = 1..16
    (-0.5, 0.0),
    (0.041666666666666664, 2.3129646346357427e-18),
    (-0.001388888888888889, 5.300543954373577e-20),
    (2.48015873015873e-05, 2.1511947866775882e-23),
    (-2.755731922398589e-07, -2.3767714622250297e-23),
    (2.08767569878681e-09, -1.20734505911326e-25),
    (-1.1470745597729725e-11, -2.0655512752830745e-28),
    (4.779477332387385e-14, 4.399205485834081e-31),
    (-1.5619206968586225e-16, -1.1910679660273754e-32),
    (4.110317623312165e-19, 1.4412973378659527e-36),
    (-8.896791392450574e-22, 7.911402614872376e-38),
    (1.6117375710961184e-24, -3.6846573564509766e-41),
    (-2.4795962632247976e-27, 1.2953730964765229e-43),
    (3.279889237069838e-30, 1.5117542744029879e-46),
    (-3.7699876288159054e-33, -2.5870347832750324e-49),
    (3.8003907548547434e-36, 1.7457158024652518e-52),
])

_EXP_COEF = np.array([  # 1/k!, k = 2..13
    (0.5, 0.0),
    (0.16666666666666666, 9.25185853854297e-18),
    (0.041666666666666664, 2.3129646346357427e-18),
    (0.008333333333333333, 1.1564823173178714e-19),
    (0.001388888888888889, -5.300543954373577e-20),
    (0.0001984126984126984, 1.7209558293420705e-22),
    (2.48015873015873e-05, 2.1511947866775882e-23),
    (2.7557319223985893e-06, -1.858393274046472e-22),
    (2.755731922398589e-07, 2.3767714622250297e-23),
    (2.505210838544172e-08, -1.448814070935912e-24),
    (2.08767569878681e-09, -1.20734505911326e-25),
    (1.6059043836821613e-10, 1.2585294588752098e-26),
])


@njit(**_JIT)
def _sin_taylor(rh, rl):
    # |r| <= pi/4
    x2h, x2l = dd_sqr(rh, rl)
    ah, al = _SIN_COEF[15, 0], _SIN_COEF[15, 1]
    for k in range(14, -1, -1):
        ah, al = dd_mul(ah, al, x2h, x2l)
        ah, al = dd_add(ah, al, _SIN_COEF[k, 0], _SIN_COEF[k, 1])
    ah, al = dd_mul(ah, al, x2h, x2l)
    ah, al = dd_add_f(ah, al, 1.0)
    return dd_mul(ah, al, rh, rl)


@njit(**_JIT)
def _cos_taylor(rh, rl):
    x2h, x2l = dd_sqr(rh, rl)
    ah, al = _COS_COEF[15, 0], _COS_COEF[15, 1]
    for k in range(14, -1, -1):
        ah, al = dd_mul(ah, al, x2h, x2l)
        ah, al = dd_add(ah, al, _COS_COEF[k, 0], _COS_COEF[k, 1])
    ah, al = dd_mul(ah, al, x2h, x2l)
    return dd_add_f(ah, al, 1.0)


@njit(**_JIT)
def dd_sincos(ah, al):
    """sin and cos for |a| <= a few hundred; reduction mod pi/2."""
    # remove whole turns first to keep k * (pi/2) products exact-ish
    n2pi = np.rint(ah / _TWO_PI_HI)
    th, tl = dd_mul_f(_TWO_PI_HI, _TWO_PI_LO, n2pi)
    xh, xl = dd_add(ah, al, -th, -tl)
    k = np.rint(xh / _PI_2_HI)
    th, tl = dd_mul_f(_PI_2_HI, _PI_2_LO, k)
    rh, rl = dd_add(xh, xl, -th, -tl)
    j = int(k) % 4
    if j < 0:
        j += 4
    sh, sl = _sin_taylor(rh, rl)
    ch, cl = _cos_taylor(rh, rl)
    if j == 0:
        return sh, sl, ch, cl
    elif j == 1:
        return ch, cl, -sh, -sl
    elif j == 2:
        return -sh, -sl, -ch, -cl
    else:
        return -ch, -cl, sh, sl


@njit(**_JIT)
def dd_sin(ah, al):
    sh, sl, ch, cl = dd_sincos(ah, al)
    return sh, sl


@njit(**_JIT)
def dd_cos(ah, al):
    sh, sl, ch, cl = dd_sincos(ah, al)
    return ch, cl


@njit(**_JIT)
def dd_exp(ah, al):
    if ah > 709.0:
        return np.inf, 0.0
    if ah < -709.0:
        return 0.0, 0.0
    m = np.rint(ah / _LN2_HI)
    th, tl = dd_mul_f(_LN2_HI, _LN2_LO, m)
    rh, rl = dd_add(ah, al, -th, -tl)
    # scale down by 512, series for expm1, then square up 9 times
    rh *= 0.001953125
    rl *= 0.001953125
    ph, pl = dd_sqr(rh, rl)
    uh, ul = dd_mul_f(ph, pl, 0.5)
    sh, sl = dd_add(rh, rl, uh, ul)
    th, tl = dd_mul(ph, pl, rh, rl)
    for k in range(1, 12):
        uh, ul = dd_mul(th, tl, _EXP_COEF[k, 0], _EXP_COEF[k, 1])
        sh, sl = dd_add(sh, sl, uh, ul)
        th, tl = dd_mul(th, tl, rh, rl)
    for _ in range(9):
        # s <- 2s + s^2
        qh, ql = dd_sqr(sh, sl)
        sh, sl = dd_add(2.0 * sh, 2.0 * sl, qh, ql)
    sh, sl = dd_add_f(sh, sl, 1.0)
    scale = 2.0 ** m
    return sh * scale, sl * scale


@njit(**_JIT)
def dd_log(ah, al):
    if ah <= 0.0:
        return np.nan, np.nan
    yh = np.log(ah)
    yl = 0.0
    for _ in range(2):
        eh, el = dd_exp(-yh, -yl)
        th, tl = dd_mul(ah, al, eh, el)
        th, tl = dd_add_f(th, tl, -1.0)
        yh, yl = dd_add(yh, yl, th, tl)
    return yh, yl


# --- truncated series ---------------------------------------------------------
#
# A series of truncation N is a pair of float64 arrays (h, l) of length N+1,
# h[k] + l[k] being the degree-k coefficient.  All loops scan coefficients in
# fixed ascending order so results are bit-reproducible and low-degree output
# coefficients do not depend on the truncation (compose commutes with
# truncation exactly).

@njit(**_JIT)
def ser_mul(ah, al, bh, bl):
    n = ah.shape[0]
    ch = np.zeros(n)
    cl = np.zeros(n)
    for k in range(n):
        sh = 0.0
        sl = 0.0
        for i in range(k + 1):
            if (ah[i] != 0.0 or al[i] != 0.0) and (bh[k - i] != 0.0 or bl[k - i] != 0.0):
                ph, pl = dd_mul(ah[i], al[i], bh[k - i], bl[k - i])
                sh, sl = dd_add(sh, sl, ph, pl)
        ch[k] = sh
        cl[k] = sl
    return ch, cl


@njit(**_JIT)
def ser_compose(fh, fl, gh, gl):
    """Coefficients of f(g(z)), truncated at len(fh)-1, by Horner-in-series."""
    n = fh.shape[0]
    hh = np.zeros(n)
    hl = np.zeros(n)
    hh[0] = fh[n - 1]
    hl[0] = fl[n - 1]
    for k in range(n - 2, -1, -1):
        hh, hl = ser_mul(hh, hl, gh, gl)
        hh[0], hl[0] = dd_add(hh[0], hl[0], fh[k], fl[k])
    return hh, hl


@njit(**_JIT)
def ser_eval(fh, fl, xh, xl):
    n = fh.shape[0]
    ah = fh[n - 1]
    al = fl[n - 1]
    for k in range(n - 2, -1, -1):
        ah, al = dd_mul(ah, al, xh, xl)
        ah, al = dd_add(ah, al, fh[k], fl[k])
    return ah, al


@njit(**_JIT)
def ser_eval_complex(fh, fl, xrh, xrl, xih, xil):
    n = fh.shape[0]
    arh = fh[n - 1]
    arl = fl[n - 1]
    aih = 0.0
    ail = 0.0
    for k in range(n - 2, -1, -1):
        t1h, t1l = dd_mul(arh, arl, xrh, xrl)
        t2h, t2l = dd_mul(aih, ail, xih, xil)
        t3h, t3l = dd_mul(arh, arl, xih, xil)
        t4h, t4l = dd_mul(aih, ail, xrh, xrl)
        arh, arl = dd_add(t1h, t1l, -t2h, -t2l)
        aih, ail = dd_add(t3h, t3l, t4h, t4l)
        arh, arl = dd_add(arh, arl, fh[k], fl[k])
    return arh, arl, aih, ail


@njit(**_JIT)
def ser_eval_circle_maxsq(fh, fl, zrh, zrl, zih, zil):
    """max over sample points of |f(z_j)|^2, in dd."""
    m = zrh.shape[0]
    bh = -1.0
    bl = 0.0
    for j in range(m):
        rh, rl, ih, il = ser_eval_complex(fh, fl, zrh[j], zrl[j], zih[j], zil[j])
        m1h, m1l = dd_sqr(rh, rl)
        m2h, m2l = dd_sqr(ih, il)
        mh, ml = dd_add(m1h, m1l, m2h, m2l)
        if dd_lt(bh, bl, mh, ml):
            bh, bl = mh, ml
    return bh, bl


@njit(**_JIT)
def ser_iter_val(fh, fl, xh, xl, steps):
    """Iterate the polynomial germ: f^steps(x)."""
    for _ in range(steps):
        xh, xl = ser_eval(fh, fl, xh, xl)
    return xh, xl


@njit(**_JIT)
def ser_iter_scan(fh, fl, xsh, xsl, steps):
    m = xsh.shape[0]
    oh = np.empty(m)
    ol = np.empty(m)
    for j in range(m):
        vh, vl = ser_iter_val(fh, fl, xsh[j], xsl[j], steps)
        oh[j] = vh
        ol[j] = vl
    return oh, ol


@njit(**_JIT)
def ser_orbit_signs(fh, fl, depth, rho):
    """Signs of f^k(0), k = 1..depth; returns (signs, escape_step).

    escape_step = 0 if the orbit stayed inside |x| <= rho, else the first k
    with |f^k(0)| > rho (signs beyond it are left at 0).
    """
    signs = np.zeros(depth, dtype=np.int8)
    xh = 0.0
    xl = 0.0
    for k in range(depth):
        xh, xl = ser_eval(fh, fl, xh, xl)
        if xh > 0.0:
            signs[k] = 1
        elif xh < 0.0:
            signs[k] = -1
        elif xl > 0.0:
            signs[k] = 1
        elif xl < 0.0:
            signs[k] = -1
        if np.abs(xh) > rho:
            return signs, k + 1
    return signs, 0


# --- quadratic family x -> x^2 + c ---------------------------------------------

@njit(**_JIT)
def quad_orbit_val(ch, cl, n):
    """f_c^n(0) where f_c(x) = x^2 + c."""
    xh = 0.0
    xl = 0.0
    for _ in range(n):
        xh, xl = dd_sqr(xh, xl)
        xh, xl = dd_add(xh, xl, ch, cl)
    return xh, xl


@njit(**_JIT)
def quad_orbit_val_dc(ch, cl, n):
    """f_c^n(0) and its c-derivative (u' = 2 x u + 1)."""
    xh = 0.0
    xl = 0.0
    uh = 0.0
    ul = 0.0
    for _ in range(n):
        th, tl = dd_mul(xh, xl, uh, ul)
        uh, ul = dd_add_f(2.0 * th, 2.0 * tl, 1.0)
        xh, xl = dd_sqr(xh, xl)
        xh, xl = dd_add(xh, xl, ch, cl)
    return xh, xl, uh, ul


@njit(**_JIT)
def quad_orbit_points(ch, cl, n):
    """Orbit values f_c^k(0), k = 1..n."""
    oh = np.empty(n)
    ol = np.empty(n)
    xh = 0.0
    xl = 0.0
    for k in range(n):
        xh, xl = dd_sqr(xh, xl)
        xh, xl = dd_add(xh, xl, ch, cl)
        oh[k] = xh
        ol[k] = xl
    return oh, ol


@njit(**_JIT)
def quad_orbit_signs(ch, cl, depth):
    """Signs of f_c^k(0), k = 1..depth, for c in [-2, 1/4].

    Once |x| > 2 the tail is provably all-positive (x > 2 is invariant and
    x < -2 maps above 2), so iteration stops there.
    """
    signs = np.zeros(depth, dtype=np.int8)
    xh = 0.0
    xl = 0.0
    for k in range(depth):
        xh, xl = dd_sqr(xh, xl)
        xh, xl = dd_add(xh, xl, ch, cl)
        if xh > 0.0:
            signs[k] = 1
        elif xh < 0.0:
            signs[k] = -1
        elif xl > 0.0:
            signs[k] = 1
        elif xl < 0.0:
            signs[k] = -1
        if np.abs(xh) > 2.0:
            for j in range(k + 1, depth):
                signs[j] = 1
            return signs
    return signs


@njit(**_JIT)
def quad_cycle_multiplier_sign(ch, cl, p):
    """Sign of prod_{k=1}^{p-1} f'(f^k(0)) = orientation of the p-iterate
    rescaling at a superattracting parameter."""
    oh, ol = quad_orbit_points(ch, cl, p - 1)
    s = 1
    for k in range(p - 1):
        if oh[k] < 0.0 or (oh[k] == 0.0 and ol[k] < 0.0):
            s = -s
    return s


# --- logistic family x -> mu x (1 - x), critical point 1/2 ---------------------

@njit(**_JIT)
def logistic_orbit_val_dmu(mh, ml, n):
    xh, xl = 0.5, 0.0
    uh, ul = 0.0, 0.0
    for _ in range(n):
        # u' = x(1-x) + mu (1-2x) u ; x' = mu x (1-x)
        omxh, omxl = dd_add(1.0, 0.0, -xh, -xl)
        gh, gl = dd_mul(xh, xl, omxh, omxl)          # x(1-x)
        t1h, t1l = dd_add(1.0, 0.0, -2.0 * xh, -2.0 * xl)
        t1h, t1l = dd_mul(t1h, t1l, uh, ul)
        t1h, t1l = dd_mul(t1h, t1l, mh, ml)
        uh, ul = dd_add(gh, gl, t1h, t1l)
        xh, xl = dd_mul(mh, ml, gh, gl)
    return xh, xl, uh, ul


@njit(**_JIT)
def logistic_orbit_signs(mh, ml, depth):
    """Signs of x_k - 1/2 along the critical orbit; negative-invariant escape."""
    signs = np.zeros(depth, dtype=np.int8)
    xh, xl = 0.5, 0.0
    for k in range(depth):
        omxh, omxl = dd_add(1.0, 0.0, -xh, -xl)
        gh, gl = dd_mul(xh, xl, omxh, omxl)
        xh, xl = dd_mul(mh, ml, gh, gl)
        dh, dl = dd_add_f(xh, xl, -0.5)
        if dh > 0.0:
            signs[k] = 1
        elif dh < 0.0:
            signs[k] = -1
        elif dl > 0.0:
            signs[k] = 1
        elif dl < 0.0:
            signs[k] = -1
        if xh < 0.0:
            for j in range(k + 1, depth):
                signs[j] = -1
            return signs
    return signs


# --- sine family x -> mu sin(pi x), critical point 1/2 --------------------------

@njit(**_JIT)
def sine_orbit_val_dmu(mh, ml, n):
    xh, xl = 0.5, 0.0
    uh, ul = 0.0, 0.0
    for _ in range(n):
        th, tl = dd_mul(xh, xl, _PI_HI, _PI_LO)
        sh, sl, chh, chl = dd_sincos(th, tl)
        # u' = sin(pi x) + mu pi cos(pi x) u
        t1h, t1l = dd_mul(mh, ml, _PI_HI, _PI_LO)
        t1h, t1l = dd_mul(t1h, t1l, chh, chl)
        t1h, t1l = dd_mul(t1h, t1l, uh, ul)
        uh, ul = dd_add(sh, sl, t1h, t1l)
        xh, xl = dd_mul(mh, ml, sh, sl)
    return xh, xl, uh, ul


@njit(**_JIT)
def sine_orbit_signs(mh, ml, depth):
    signs = np.zeros(depth, dtype=np.int8)
    xh, xl = 0.5, 0.0
    for k in range(depth):
        th, tl = dd_mul(xh, xl, _PI_HI, _PI_LO)
        sh, sl = dd_sin(th, tl)
        xh, xl = dd_mul(mh, ml, sh, sl)
        dh, dl = dd_add_f(xh, xl, -0.5)
        if dh > 0.0:
            signs[k] = 1
        elif dh < 0.0:
            signs[k] = -1
        elif dl > 0.0:
            signs[k] = 1
        elif dl < 0.0:
            signs[k] = -1
        if xh < 0.0:
            for j in range(k + 1, depth):
                signs[j] = -1
            return signs
    return signs


# --- escape-time sampling -------------------------------------------------------

@njit(**_JIT)
def escape_steps_dd(crh, crl, cih, cil, max_iter, resc_sq):
    """Smallest k <= max_iter with |z_k|^2 > resc_sq (z_0 = 0), else 0."""
    zrh, zrl = 0.0, 0.0
    zih, zil = 0.0, 0.0
    for k in range(max_iter):
        r2h, r2l = dd_sqr(zrh, zrl)
        i2h, i2l = dd_sqr(zih, zil)
        crossh, crossl = dd_mul(zrh, zrl, zih, zil)
        zrh, zrl = dd_add(r2h, r2l, -i2h, -i2l)
        zrh, zrl = dd_add(zrh, zrl, crh, crl)
        zih, zil = dd_add(2.0 * crossh, 2.0 * crossl, cih, cil)
        n1h, n1l = dd_sqr(zrh, zrl)
        n2h, n2l = dd_sqr(zih, zil)
        nh, nl = dd_add(n1h, n1l, n2h, n2l)
        if nh > resc_sq:
            return k + 1
    return 0


@njit(**_JIT)
def escape_grid_f64(cre, cim, max_iter, resc_sq):
    """Escape steps for the pixel lattice cim x cre (row-major, int32, 0 = member)."""
    ny = cim.shape[0]
    nx = cre.shape[0]
    out = np.zeros((ny, nx), dtype=np.int32)
    for i in range(ny):
        ci = cim[i]
        for j in range(nx):
            cr = cre[j]
            zr = 0.0
            zi = 0.0
            steps = 0
            for k in range(max_iter):
                zr2 = zr * zr
                zi2 = zi * zi
                if zr2 + zi2 > resc_sq:
                    steps = k  # k >= 1 here since z_0 = 0
                    break
                zi = 2.0 * zr * zi + ci
                zr = zr2 - zi2 + cr
            else:
                nrm = zr * zr + zi * zi
                steps = max_iter if nrm > resc_sq else 0
            out[i, j] = steps
    return out


@njit(**_JIT)
def escape_grid_dd(creh, crel, cimh, ciml, max_iter, resc_sq):
    ny = cimh.shape[0]
    nx = creh.shape[0]
    out = np.zeros((ny, nx), dtype=np.int32)
    for i in range(ny):
        for j in range(nx):
            out[i, j] = escape_steps_dd(creh[j], crel[j], cimh[i], ciml[i],
                                        max_iter, resc_sq)
    return out


def warmup():
    """Force-compile the kernels used in hot paths (call once per process)."""
    one = np.zeros(5)
    oneh = one.copy()
    oneh[1] = 1.0
    ser_mul(oneh, one, oneh, one)
    ser_compose(oneh, one, oneh, one)
    ser_eval(oneh, one, 0.5, 0.0)
    ser_eval_complex(oneh, one, 0.5, 0.0, 0.5, 0.0)
    ser_eval_circle_maxsq(oneh, one, np.array([1.0]), np.array([0.0]),
                          np.array([0.0]), np.array([0.0]))
    ser_iter_val(oneh, one, 0.1, 0.0, 3)
    ser_iter_scan(oneh, one, np.array([0.1]), np.array([0.0]), 3)
    ser_orbit_signs(oneh, one, 4, 4.0)
    quad_orbit_val(-1.0, 0.0, 4)
    quad_orbit_val_dc(-1.0, 0.0, 4)
    quad_orbit_points(-1.0, 0.0, 4)
    quad_orbit_signs(-1.0, 0.0, 8)
    quad_cycle_multiplier_sign(-1.0, 0.0, 2)
    logistic_orbit_val_dmu(3.2, 0.0, 4)
    logistic_orbit_signs(3.2, 0.0, 8)
    sine_orbit_val_dmu(0.7, 0.0, 4)
    sine_orbit_signs(0.7, 0.0, 8)
    dd_sincos(1.0, 0.0)
    dd_exp(1.0, 0.0)
    dd_log(2.0, 0.0)
    escape_steps_dd(0.0, 0.0, 0.0, 0.0, 4, 4.0)
    escape_grid_f64(np.array([0.0]), np.array([0.0]), 4, 4.0)
    escape_grid_dd(np.array([0.0]), np.array([0.0]),
                   np.array([0.0]), np.array([0.0]), 4, 4.0)
