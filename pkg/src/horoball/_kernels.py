"""Pure-Python geometry kernels and the circumcenter inner loop.

This is the fallback backend. ``horoball._speedups`` (Cython) mirrors every
function here operation-for-operation so both backends produce bit-identical
results; keep the floating-point evaluation order of the two files in sync.

Raw encodings (no validation; canonical forms in, canonical forms out):
  euclidean     sequence of floats
  spider        (leg, offset)
  orthant       (quadrant, s, t); internally held in polar form
                (radius, angle), angle measured from edge 0 in [0, k*pi/2)
"""

from __future__ import annotations

import math

COMPILED = False

HALF_PI = math.pi / 2.0


# ---------------------------------------------------------------------------
# Euclidean space
# ---------------------------------------------------------------------------

def eucl_dist(p, q):
    acc = 0.0
    for i in range(len(p)):
        d = p[i] - q[i]
        acc += d * d
    return math.sqrt(acc)


def eucl_ray(p, q, u):
    # point at arc length u >= 0 from p through q; caller guarantees p != q
    d = eucl_dist(p, q)
    c = u / d
    return tuple(p[i] + c * (q[i] - p[i]) for i in range(len(p)))


# ---------------------------------------------------------------------------
# Spider (half-lines glued at a common apex)
# ---------------------------------------------------------------------------

def spider_dist(leg_p, t_p, leg_q, t_q):
    if leg_p == leg_q:
        return abs(t_p - t_q)
    return t_p + t_q


def spider_exit_leg(incoming):
    # apex policy: continue into the lowest-indexed leg other than the
    # incoming one
    return 1 if incoming == 0 else 0


def spider_ray(leg_p, t_p, leg_q, t_q, u):
    # arc length u >= 0 along the extended geodesic from p through q
    if leg_p == leg_q:
        if t_q > t_p:
            return leg_p, t_p + u          # outward, never meets the apex
        w = t_p - u                        # inward, possibly past the apex
        if w > 0.0:
            return leg_p, w
        if w == 0.0:
            return 0, 0.0
        return spider_exit_leg(leg_p), -w
    if u < t_p:
        return leg_p, t_p - u
    if u == t_p:
        return 0, 0.0
    return leg_q, u - t_p


# ---------------------------------------------------------------------------
# Orthant cycle (k Euclidean quadrants glued edge-to-edge in a cycle)
# ---------------------------------------------------------------------------

def orth_polar(q, s, t):
    r = math.sqrt(s * s + t * t)
    return r, q * HALF_PI + math.atan2(t, s)


def orth_canonical(k, q, s, t):
    # shared-edge points belong to the smallest valid quadrant index
    if s == 0.0 and t == 0.0:
        return 0, 0.0, 0.0
    if t == 0.0 and q > 0:
        return q - 1, 0.0, s
    if s == 0.0 and q == k - 1:
        return 0, t, 0.0
    return q, s, t


def orth_fold(k, r, phi):
    # polar -> canonical (quadrant, s, t)
    if r == 0.0:
        return 0, 0.0, 0.0
    total = k * HALF_PI
    if phi < 0.0:
        phi += total
    elif phi >= total:
        phi -= total
    q = int(phi / HALF_PI)
    if q >= k:
        q = 0
        phi = 0.0
    a = phi - q * HALF_PI
    s = r * math.cos(a)
    t = r * math.sin(a)
    return orth_canonical(k, q, s, t)


def orth_chord(r1, r2, theta):
    # planar law of cosines in the form robust near theta = 0
    h = math.sin(0.5 * theta)
    dr = r1 - r2
    return math.sqrt(dr * dr + 4.0 * r1 * r2 * h * h)


def orth_dist_polar(k, r1, phi1, r2, phi2):
    delta = phi1 - phi2
    if delta < 0.0:
        delta = -delta
    total = k * HALF_PI
    other = total - delta
    theta = delta if delta <= other else other
    if theta < math.pi:
        return orth_chord(r1, r2, theta)
    return r1 + r2


def orth_dist(k, q1, s1, t1, q2, s2, t2):
    r1, phi1 = orth_polar(q1, s1, t1)
    r2, phi2 = orth_polar(q2, s2, t2)
    return orth_dist_polar(k, r1, phi1, r2, phi2)


def orth_ray_polar(k, r1, phi1, r2, phi2, u):
    # arc length u >= 0 along the extended geodesic through two distinct
    # points given in polar form; result in polar form
    total = k * HALF_PI
    if r1 == 0.0:
        return u, phi2                      # radial ray out of the apex
    if r2 == 0.0:
        if u <= r1:
            return r1 - u, phi1
        out = phi1 + math.pi                # apex policy: 180 degrees on the
        if out >= total:                    # increasing-index side
            out -= total
        return u - r1, out
    delta = phi2 - phi1
    if delta < 0.0:
        delta += total
    if delta <= total - delta:
        theta = delta
        direction = 1.0
    else:
        theta = total - delta
        direction = -1.0
    if theta >= math.pi:                    # via the apex (includes exact pi)
        if u <= r1:
            return r1 - u, phi1
        return u - r1, phi2
    if theta == 0.0:                        # radially aligned
        if r2 > r1:
            return r1 + u, phi1
        if u <= r1:
            return r1 - u, phi1
        out = phi1 + math.pi
        if out >= total:
            out -= total
        return u - r1, out
    # develop both points into one plane: p at angle 0, q at angle theta;
    # the developed forward ray never meets the origin for theta in (0, pi)
    d = orth_chord(r1, r2, theta)
    ex = (r2 * math.cos(theta) - r1) / d
    ey = r2 * math.sin(theta) / d
    zx = r1 + u * ex
    zy = u * ey
    r = math.sqrt(zx * zx + zy * zy)
    psi = math.atan2(zy, zx)
    phi = phi1 + direction * psi
    if phi < 0.0:
        phi += total
    elif phi >= total:
        phi -= total
    return r, phi


def orth_ray(k, q1, s1, t1, q2, s2, t2, u):
    r1, phi1 = orth_polar(q1, s1, t1)
    r2, phi2 = orth_polar(q2, s2, t2)
    r, phi = orth_ray_polar(k, r1, phi1, r2, phi2, u)
    return orth_fold(k, r, phi)


# ---------------------------------------------------------------------------
# Circumcenter inner loop (one driver per space)
#
# Contract shared by the three drivers:
#   * the first input point is the initial center;
#   * returns (best_point, best_value, value_sum, dist_calls, comb_calls,
#     max_drift, iterations, init_radius) where max_drift is the largest
#     observed distance from an iterate back to the initial point and
#     init_radius is the radius of the initial enclosing ball;
#   * if all input points coincide (init_radius == 0) the driver returns
#     immediately with zero iterations;
#   * hist_vals (float64[n]) and hist_pts (float64[n, w]) are optional
#     preallocated buffers filled with the pre-step iterate of every
#     iteration.
# ---------------------------------------------------------------------------

def run_circ_euclidean(points, n, hist_vals=None, hist_pts=None):
    k = len(points)
    dim = len(points[0])
    pts = [tuple(float(c) for c in row) for row in points]
    x = list(pts[0])
    dist_calls = 0
    rho = 0.0
    for j in range(1, k):
        d = eucl_dist(x, pts[j])
        dist_calls += 1
        if d > rho:
            rho = d
    if rho == 0.0:
        return pts[0], 0.0, 0.0, dist_calls, 0, 0.0, 0, 0.0
    eps = 2.0 * rho / math.sqrt(n)
    f_best = rho
    x_best = pts[0]
    comb_calls = 0
    value_sum = 0.0
    max_drift = 0.0
    for it in range(n):
        gamma = 0.0
        ahat = 0
        for j in range(k):
            d = eucl_dist(x, pts[j])
            dist_calls += 1
            if j == 0 and d > max_drift:
                max_drift = d
            if d > gamma:
                gamma = d
                ahat = j
        if hist_vals is not None:
            hist_vals[it] = gamma
            for i in range(dim):
                hist_pts[it, i] = x[i]
        value_sum += gamma
        if gamma < f_best:
            f_best = gamma
            x_best = tuple(x)
        c = eps / gamma
        a = pts[ahat]
        for i in range(dim):
            x[i] = x[i] + c * (a[i] - x[i])
        comb_calls += 1
    return x_best, f_best, value_sum, dist_calls, comb_calls, max_drift, n, rho


def run_circ_spider(legs, offs, n, hist_vals=None, hist_pts=None):
    k = len(legs)
    legs = [int(v) for v in legs]
    offs = [float(v) for v in offs]
    xl = legs[0]
    xt = offs[0]
    dist_calls = 0
    rho = 0.0
    for j in range(1, k):
        d = spider_dist(xl, xt, legs[j], offs[j])
        dist_calls += 1
        if d > rho:
            rho = d
    if rho == 0.0:
        return (xl, xt), 0.0, 0.0, dist_calls, 0, 0.0, 0, 0.0
    eps = 2.0 * rho / math.sqrt(n)
    f_best = rho
    best = (xl, xt)
    comb_calls = 0
    value_sum = 0.0
    max_drift = 0.0
    for it in range(n):
        gamma = 0.0
        ahat = 0
        for j in range(k):
            d = spider_dist(xl, xt, legs[j], offs[j])
            dist_calls += 1
            if j == 0 and d > max_drift:
                max_drift = d
            if d > gamma:
                gamma = d
                ahat = j
        if hist_vals is not None:
            hist_vals[it] = gamma
            hist_pts[it, 0] = float(xl)
            hist_pts[it, 1] = xt
        value_sum += gamma
        if gamma < f_best:
            f_best = gamma
            best = (xl, xt)
        xl, xt = spider_ray(xl, xt, legs[ahat], offs[ahat], eps)
        comb_calls += 1
    return best, f_best, value_sum, dist_calls, comb_calls, max_drift, n, rho


def run_circ_orthant(k_quad, quads, ss, ts, n, hist_vals=None, hist_pts=None):
    k = len(quads)
    rs = [0.0] * k
    phis = [0.0] * k
    for j in range(k):
        rs[j], phis[j] = orth_polar(int(quads[j]), float(ss[j]), float(ts[j]))
    xr = rs[0]
    xphi = phis[0]
    dist_calls = 0
    rho = 0.0
    for j in range(1, k):
        d = orth_dist_polar(k_quad, xr, xphi, rs[j], phis[j])
        dist_calls += 1
        if d > rho:
            rho = d
    start = (int(quads[0]), float(ss[0]), float(ts[0]))
    if rho == 0.0:
        return start, 0.0, 0.0, dist_calls, 0, 0.0, 0, 0.0
    eps = 2.0 * rho / math.sqrt(n)
    f_best = rho
    best = start
    comb_calls = 0
    value_sum = 0.0
    max_drift = 0.0
    for it in range(n):
        gamma = 0.0
        ahat = 0
        for j in range(k):
            d = orth_dist_polar(k_quad, xr, xphi, rs[j], phis[j])
            dist_calls += 1
            if j == 0 and d > max_drift:
                max_drift = d
            if d > gamma:
                gamma = d
                ahat = j
        if hist_vals is not None:
            hist_vals[it] = gamma
            hq, hs, ht = orth_fold(k_quad, xr, xphi)
            hist_pts[it, 0] = float(hq)
            hist_pts[it, 1] = hs
            hist_pts[it, 2] = ht
        value_sum += gamma
        if gamma < f_best:
            f_best = gamma
            best = orth_fold(k_quad, xr, xphi)
        xr, xphi = orth_ray_polar(k_quad, xr, xphi, rs[ahat], phis[ahat], eps)
        comb_calls += 1
    return best, f_best, value_sum, dist_calls, comb_calls, max_drift, n, rho
