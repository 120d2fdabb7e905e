# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled geometry kernels and circumcenter inner loops.

Operation-for-operation mirror of ``horoball._kernels`` (see that module
for the encoding conventions). Both backends must stay bit-identical:
same IEEE evaluation order, same libm calls, no fast-math. The circum-
center drivers release the GIL so experiment rows can run in parallel
threads.
"""

import numpy as np

from libc.math cimport M_PI, atan2, cos, fabs, sin, sqrt

COMPILED = True

cdef double HALF_PI = M_PI / 2.0


# ---------------------------------------------------------------------------
# Euclidean space
# ---------------------------------------------------------------------------

cdef double _eucl_dist_mv(const double[::1] p, const double[::1] q) noexcept nogil:
    cdef double acc = 0.0
    cdef double d
    cdef Py_ssize_t i
    for i in range(p.shape[0]):
        d = p[i] - q[i]
        acc += d * d
    return sqrt(acc)


def eucl_dist(p, q):
    cdef double acc = 0.0
    cdef double d
    cdef Py_ssize_t i, n = len(p)
    for i in range(n):
        d = <double> p[i] - <double> q[i]
        acc += d * d
    return sqrt(acc)


def eucl_ray(p, q, double u):
    # point at arc length u >= 0 from p through q; caller guarantees p != q
    cdef double d = eucl_dist(p, q)
    cdef double c = u / d
    cdef Py_ssize_t i, n = len(p)
    return tuple([<double> p[i] + c * (<double> q[i] - <double> p[i]) for i in range(n)])


# ---------------------------------------------------------------------------
# Spider
# ---------------------------------------------------------------------------

cdef inline double _spider_dist(long leg_p, double t_p, long leg_q, double t_q) noexcept nogil:
    if leg_p == leg_q:
        return fabs(t_p - t_q)
    return t_p + t_q


cdef inline long _spider_exit_leg(long incoming) noexcept nogil:
    return 1 if incoming == 0 else 0


cdef void _spider_ray(long leg_p, double t_p, long leg_q, double t_q, double u,
                      long *leg_out, double *t_out) noexcept nogil:
    cdef double w
    if leg_p == leg_q:
        if t_q > t_p:
            leg_out[0] = leg_p
            t_out[0] = t_p + u
            return
        w = t_p - u
        if w > 0.0:
            leg_out[0] = leg_p
            t_out[0] = w
            return
        if w == 0.0:
            leg_out[0] = 0
            t_out[0] = 0.0
            return
        leg_out[0] = _spider_exit_leg(leg_p)
        t_out[0] = -w
        return
    if u < t_p:
        leg_out[0] = leg_p
        t_out[0] = t_p - u
        return
    if u == t_p:
        leg_out[0] = 0
        t_out[0] = 0.0
        return
    leg_out[0] = leg_q
    t_out[0] = u - t_p


def spider_dist(long leg_p, double t_p, long leg_q, double t_q):
    return _spider_dist(leg_p, t_p, leg_q, t_q)


def spider_exit_leg(long incoming):
    return _spider_exit_leg(incoming)


def spider_ray(long leg_p, double t_p, long leg_q, double t_q, double u):
    cdef long leg
    cdef double t
    _spider_ray(leg_p, t_p, leg_q, t_q, u, &leg, &t)
    return leg, t


# ---------------------------------------------------------------------------
# Orthant cycle
# ---------------------------------------------------------------------------

cdef void _orth_polar(long q, double s, double t, double *r_out, double *phi_out) noexcept nogil:
    r_out[0] = sqrt(s * s + t * t)
    phi_out[0] = q * HALF_PI + atan2(t, s)


cdef void _orth_canonical(long k, long q, double s, double t,
                          long *q_out, double *s_out, double *t_out) noexcept nogil:
    if s == 0.0 and t == 0.0:
        q_out[0] = 0
        s_out[0] = 0.0
        t_out[0] = 0.0
        return
    if t == 0.0 and q > 0:
        q_out[0] = q - 1
        s_out[0] = 0.0
        t_out[0] = s
        return
    if s == 0.0 and q == k - 1:
        q_out[0] = 0
        s_out[0] = t
        t_out[0] = 0.0
        return
    q_out[0] = q
    s_out[0] = s
    t_out[0] = t


cdef void _orth_fold(long k, double r, double phi,
                     long *q_out, double *s_out, double *t_out) noexcept nogil:
    cdef double total, a, s, t
    cdef long q
    if r == 0.0:
        q_out[0] = 0
        s_out[0] = 0.0
        t_out[0] = 0.0
        return
    total = k * HALF_PI
    if phi < 0.0:
        phi += total
    elif phi >= total:
        phi -= total
    q = <long> (phi / HALF_PI)
    if q >= k:
        q = 0
        phi = 0.0
    a = phi - q * HALF_PI
    s = r * cos(a)
    t = r * sin(a)
    _orth_canonical(k, q, s, t, q_out, s_out, t_out)


cdef inline double _orth_chord(double r1, double r2, double theta) noexcept nogil:
    cdef double h = sin(0.5 * theta)
    cdef double dr = r1 - r2
    return sqrt(dr * dr + 4.0 * r1 * r2 * h * h)


cdef double _orth_dist_polar(long k, double r1, double phi1, double r2, double phi2) noexcept nogil:
    cdef double delta = phi1 - phi2
    cdef double total, other, theta
    if delta < 0.0:
        delta = -delta
    total = k * HALF_PI
    other = total - delta
    theta = delta if delta <= other else other
    if theta < M_PI:
        return _orth_chord(r1, r2, theta)
    return r1 + r2


cdef void _orth_ray_polar(long k, double r1, double phi1, double r2, double phi2, double u,
                          double *r_out, double *phi_out) noexcept nogil:
    cdef double total = k * HALF_PI
    cdef double out, delta, theta, direction, d, ex, ey, zx, zy, r, psi, phi
    if r1 == 0.0:
        r_out[0] = u
        phi_out[0] = phi2
        return
    if r2 == 0.0:
        if u <= r1:
            r_out[0] = r1 - u
            phi_out[0] = phi1
            return
        out = phi1 + M_PI
        if out >= total:
            out -= total
        r_out[0] = u - r1
        phi_out[0] = out
        return
    delta = phi2 - phi1
    if delta < 0.0:
        delta += total
    if delta <= total - delta:
        theta = delta
        direction = 1.0
    else:
        theta = total - delta
        direction = -1.0
    if theta >= M_PI:
        if u <= r1:
            r_out[0] = r1 - u
            phi_out[0] = phi1
            return
        r_out[0] = u - r1
        phi_out[0] = phi2
        return
    if theta == 0.0:
        if r2 > r1:
            r_out[0] = r1 + u
            phi_out[0] = phi1
            return
        if u <= r1:
            r_out[0] = r1 - u
            phi_out[0] = phi1
            return
        out = phi1 + M_PI
        if out >= total:
            out -= total
        r_out[0] = u - r1
        phi_out[0] = out
        return
    d = _orth_chord(r1, r2, theta)
    ex = (r2 * cos(theta) - r1) / d
    ey = r2 * sin(theta) / d
    zx = r1 + u * ex
    zy = u * ey
    r = sqrt(zx * zx + zy * zy)
    psi = atan2(zy, zx)
    phi = phi1 + direction * psi
    if phi < 0.0:
        phi += total
    elif phi >= total:
        phi -= total
    r_out[0] = r
    phi_out[0] = phi


def orth_polar(long q, double s, double t):
    cdef double r, phi
    _orth_polar(q, s, t, &r, &phi)
    return r, phi


def orth_canonical(long k, long q, double s, double t):
    cdef long qq
    cdef double ss, tt
    _orth_canonical(k, q, s, t, &qq, &ss, &tt)
    return qq, ss, tt


def orth_fold(long k, double r, double phi):
    cdef long qq
    cdef double ss, tt
    _orth_fold(k, r, phi, &qq, &ss, &tt)
    return qq, ss, tt


def orth_chord(double r1, double r2, double theta):
    return _orth_chord(r1, r2, theta)


def orth_dist_polar(long k, double r1, double phi1, double r2, double phi2):
    return _orth_dist_polar(k, r1, phi1, r2, phi2)


def orth_dist(long k, long q1, double s1, double t1, long q2, double s2, double t2):
    cdef double r1, phi1, r2, phi2
    _orth_polar(q1, s1, t1, &r1, &phi1)
    _orth_polar(q2, s2, t2, &r2, &phi2)
    return _orth_dist_polar(k, r1, phi1, r2, phi2)


def orth_ray_polar(long k, double r1, double phi1, double r2, double phi2, double u):
    cdef double r, phi
    _orth_ray_polar(k, r1, phi1, r2, phi2, u, &r, &phi)
    return r, phi


def orth_ray(long k, long q1, double s1, double t1, long q2, double s2, double t2, double u):
    cdef double r1, phi1, r2, phi2, r, phi
    cdef long qq
    cdef double ss, tt
    _orth_polar(q1, s1, t1, &r1, &phi1)
    _orth_polar(q2, s2, t2, &r2, &phi2)
    _orth_ray_polar(k, r1, phi1, r2, phi2, u, &r, &phi)
    _orth_fold(k, r, phi, &qq, &ss, &tt)
    return qq, ss, tt


# ---------------------------------------------------------------------------
# Circumcenter inner loops (contract documented in horoball._kernels)
# ---------------------------------------------------------------------------

def run_circ_euclidean(points, long n, hist_vals=None, hist_pts=None):
    cdef double[:, ::1] pts = np.ascontiguousarray(points, dtype=np.float64)
    cdef Py_ssize_t k = pts.shape[0]
    cdef Py_ssize_t dim = pts.shape[1]
    cdef double[::1] x = np.array(pts[0], dtype=np.float64)
    cdef double[::1] x_best = np.array(pts[0], dtype=np.float64)
    cdef bint record = hist_vals is not None
    cdef double[::1] hv = hist_vals if record else np.empty(1, dtype=np.float64)
    cdef double[:, ::1] hp = hist_pts if record else np.empty((1, 1), dtype=np.float64)
    cdef long dist_calls = 0, comb_calls = 0
    cdef double rho = 0.0, eps, f_best, value_sum = 0.0, max_drift = 0.0
    cdef double d, gamma, c
    cdef Py_ssize_t j, i, it, ahat
    with nogil:
        for j in range(1, k):
            d = _eucl_dist_mv(x, pts[j])
            dist_calls += 1
            if d > rho:
                rho = d
    if rho == 0.0:
        return tuple([float(pts[0, i]) for i in range(dim)]), 0.0, 0.0, dist_calls, 0, 0.0, 0, 0.0
    eps = 2.0 * rho / sqrt(<double> n)
    f_best = rho
    with nogil:
        for it in range(n):
            gamma = 0.0
            ahat = 0
            for j in range(k):
                d = _eucl_dist_mv(x, pts[j])
                dist_calls += 1
                if j == 0 and d > max_drift:
                    max_drift = d
                if d > gamma:
                    gamma = d
                    ahat = j
            if record:
                hv[it] = gamma
                for i in range(dim):
                    hp[it, i] = x[i]
            value_sum += gamma
            if gamma < f_best:
                f_best = gamma
                for i in range(dim):
                    x_best[i] = x[i]
            c = eps / gamma
            for i in range(dim):
                x[i] = x[i] + c * (pts[ahat, i] - x[i])
            comb_calls += 1
    return (
        tuple([float(x_best[i]) for i in range(dim)]),
        f_best,
        value_sum,
        dist_calls,
        comb_calls,
        max_drift,
        n,
        rho,
    )


def run_circ_spider(legs, offs, long n, hist_vals=None, hist_pts=None):
    cdef long[::1] lg = np.ascontiguousarray(legs, dtype=np.int64)
    cdef double[::1] tf = np.ascontiguousarray(offs, dtype=np.float64)
    cdef Py_ssize_t k = lg.shape[0]
    cdef long xl = lg[0]
    cdef double xt = tf[0]
    cdef bint record = hist_vals is not None
    cdef double[::1] hv = hist_vals if record else np.empty(1, dtype=np.float64)
    cdef double[:, ::1] hp = hist_pts if record else np.empty((1, 2), dtype=np.float64)
    cdef long dist_calls = 0, comb_calls = 0
    cdef double rho = 0.0, eps, f_best, value_sum = 0.0, max_drift = 0.0
    cdef double d, gamma
    cdef long best_l
    cdef double best_t
    cdef Py_ssize_t j, it, ahat
    with nogil:
        for j in range(1, k):
            d = _spider_dist(xl, xt, lg[j], tf[j])
            dist_calls += 1
            if d > rho:
                rho = d
    if rho == 0.0:
        return (int(xl), float(xt)), 0.0, 0.0, dist_calls, 0, 0.0, 0, 0.0
    eps = 2.0 * rho / sqrt(<double> n)
    f_best = rho
    best_l = xl
    best_t = xt
    with nogil:
        for it in range(n):
            gamma = 0.0
            ahat = 0
            for j in range(k):
                d = _spider_dist(xl, xt, lg[j], tf[j])
                dist_calls += 1
                if j == 0 and d > max_drift:
                    max_drift = d
                if d > gamma:
                    gamma = d
                    ahat = j
            if record:
                hv[it] = gamma
                hp[it, 0] = <double> xl
                hp[it, 1] = xt
            value_sum += gamma
            if gamma < f_best:
                f_best = gamma
                best_l = xl
                best_t = xt
            _spider_ray(xl, xt, lg[ahat], tf[ahat], eps, &xl, &xt)
            comb_calls += 1
    return (
        (int(best_l), float(best_t)),
        f_best,
        value_sum,
        dist_calls,
        comb_calls,
        max_drift,
        n,
        rho,
    )


def run_circ_orthant(long k_quad, quads, ss, ts, long n, hist_vals=None, hist_pts=None):
    cdef long[::1] qq = np.ascontiguousarray(quads, dtype=np.int64)
    cdef double[::1] sv = np.ascontiguousarray(ss, dtype=np.float64)
    cdef double[::1] tv = np.ascontiguousarray(ts, dtype=np.float64)
    cdef Py_ssize_t k = qq.shape[0]
    cdef double[::1] rs = np.empty(k, dtype=np.float64)
    cdef double[::1] phis = np.empty(k, dtype=np.float64)
    cdef Py_ssize_t j, it, ahat
    cdef double r_tmp, phi_tmp
    for j in range(k):
        _orth_polar(qq[j], sv[j], tv[j], &r_tmp, &phi_tmp)
        rs[j] = r_tmp
        phis[j] = phi_tmp
    cdef double xr = rs[0]
    cdef double xphi = phis[0]
    cdef bint record = hist_vals is not None
    cdef double[::1] hv = hist_vals if record else np.empty(1, dtype=np.float64)
    cdef double[:, ::1] hp = hist_pts if record else np.empty((1, 3), dtype=np.float64)
    cdef long dist_calls = 0, comb_calls = 0
    cdef double rho = 0.0, eps, f_best, value_sum = 0.0, max_drift = 0.0
    cdef double d, gamma
    cdef long best_q, hq
    cdef double best_s, best_t, hs, ht
    with nogil:
        for j in range(1, k):
            d = _orth_dist_polar(k_quad, xr, xphi, rs[j], phis[j])
            dist_calls += 1
            if d > rho:
                rho = d
    if rho == 0.0:
        return (int(qq[0]), float(sv[0]), float(tv[0])), 0.0, 0.0, dist_calls, 0, 0.0, 0, 0.0
    eps = 2.0 * rho / sqrt(<double> n)
    f_best = rho
    best_q = qq[0]
    best_s = sv[0]
    best_t = tv[0]
    with nogil:
        for it in range(n):
            gamma = 0.0
            ahat = 0
            for j in range(k):
                d = _orth_dist_polar(k_quad, xr, xphi, rs[j], phis[j])
                dist_calls += 1
                if j == 0 and d > max_drift:
                    max_drift = d
                if d > gamma:
                    gamma = d
                    ahat = j
            if record:
                hv[it] = gamma
                _orth_fold(k_quad, xr, xphi, &hq, &hs, &ht)
                hp[it, 0] = <double> hq
                hp[it, 1] = hs
                hp[it, 2] = ht
            value_sum += gamma
            if gamma < f_best:
                f_best = gamma
                _orth_fold(k_quad, xr, xphi, &best_q, &best_s, &best_t)
            _orth_ray_polar(k_quad, xr, xphi, rs[ahat], phis[ahat], eps, &xr, &xphi)
            comb_calls += 1
    return (
        (int(best_q), float(best_s), float(best_t)),
        f_best,
        value_sum,
        dist_calls,
        comb_calls,
        max_drift,
        n,
        rho,
    )
