# cython: boundscheck=False, wraparound=False, cdivision=True, initializedcheck=False
"""Compiled measurement kernels; same interface as ``_pykernels``."""
from libc.math cimport cos, sin, sqrt, log2, M_PI, INFINITY

cdef double TWO_PI = 2.0 * M_PI
cdef double P_MIN = 1e-14


cdef inline void _reduce(double w00, double w11, double w01r, double w01i,
                         const double[::1] rr, const double[::1] ri,
                         int r0, int c0, double* re, double* im) noexcept nogil:
    cdef int a = 4 * r0 + c0
    cdef int b = a + 1
    cdef int c = a + 4
    cdef int d = c + 1
    re[0] = (w00 * rr[a] + w11 * rr[d]
             + w01r * rr[b] - w01i * ri[b]
             + w01r * rr[c] + w01i * ri[c])
    im[0] = (w00 * ri[a] + w11 * ri[d]
             + w01r * ri[b] + w01i * rr[b]
             + w01r * ri[c] - w01i * rr[c])


cdef double _outcome(double w00, double w11, double w01r, double w01i,
                     const double[::1] rr, const double[::1] ri) noexcept nogil:
    cdef double m00, m11, m01r, m01i, dummy
    _reduce(w00, w11, w01r, w01i, rr, ri, 0, 0, &m00, &dummy)
    _reduce(w00, w11, w01r, w01i, rr, ri, 2, 2, &m11, &dummy)
    _reduce(w00, w11, w01r, w01i, rr, ri, 0, 2, &m01r, &m01i)
    cdef double pj = m00 + m11
    if pj < P_MIN:
        return 0.0
    cdef double off2 = m01r * m01r + m01i * m01i
    cdef double diff = m00 - m11
    cdef double lmax = 0.5 * (pj + sqrt(diff * diff + 4.0 * off2))
    cdef double lmin = (m00 * m11 - off2) / lmax
    cdef double h = 0.0
    if lmax > 0.0:
        h -= lmax * log2(lmax / pj)
    if lmin > 0.0:
        h -= lmin * log2(lmin / pj)
    return h


cdef double _cond(const double[::1] rr, const double[::1] ri,
                  double theta, double phi) noexcept nogil:
    cdef double c = cos(0.5 * theta)
    cdef double s = sin(0.5 * theta)
    cdef double cs = c * s
    cdef double er = cs * cos(phi)
    cdef double ei = cs * sin(phi)
    return (_outcome(c * c, s * s, er, ei, rr, ri)
            + _outcome(s * s, c * c, -er, -ei, rr, ri))


def conditional_entropy(const double[::1] rr, const double[::1] ri,
                        double theta, double phi):
    return _cond(rr, ri, theta, phi)


def grid_search(const double[::1] rr, const double[::1] ri, int n_theta, int n_phi):
    cdef double best = INFINITY
    cdef double bt = 0.0, bp = 0.0, t, p, v
    cdef int i, j
    with nogil:
        for i in range(n_theta):
            t = M_PI * i / (n_theta - 1)
            for j in range(n_phi):
                p = TWO_PI * j / n_phi
                v = _cond(rr, ri, t, p)
                if v < best:
                    best = v
                    bt = t
                    bp = p
    return best, bt, bp


def refine(const double[::1] rr, const double[::1] ri, double theta, double phi,
           double step, double tol, long max_evals):
    cdef double best = _cond(rr, ri, theta, phi)
    cdef long evals = 1
    cdef bint moved
    cdef int k
    cdef double t, p, v
    cdef double dt[4]
    cdef double dp[4]
    while step >= tol:
        dt[0] = step; dt[1] = -step; dt[2] = 0.0; dt[3] = 0.0
        dp[0] = 0.0; dp[1] = 0.0; dp[2] = step; dp[3] = -step
        moved = False
        for k in range(4):
            t = theta + dt[k]
            if t < 0.0:
                t = 0.0
            elif t > M_PI:
                t = M_PI
            p = phi + dp[k]
            if p < 0.0:
                p += TWO_PI
            elif p >= TWO_PI:
                p -= TWO_PI
            v = _cond(rr, ri, t, p)
            evals += 1
            if v < best:
                best = v
                theta = t
                phi = p
                moved = True
                break
            if evals >= max_evals:
                return best, theta, phi, evals, False
        if not moved:
            step *= 0.5
    return best, theta, phi, evals, True
