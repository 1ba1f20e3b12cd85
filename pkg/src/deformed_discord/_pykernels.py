"""Pure-Python measurement kernels (fallback for ``_ckernels``).

The 4x4 density matrix is passed as two flat row-major sequences of 16
floats (real and imaginary parts).  Measurement on qubit B uses the
projectors onto ``|b> = cos(t/2)|+> + e^{i f} sin(t/2)|->`` and its
orthogonal complement.
"""
from math import cos, log2, pi, sin, sqrt

TWO_PI = 2.0 * pi
P_MIN = 1e-14


def _reduce(w00, w11, w01r, w01i, rr, ri, r0, c0):
    # sum_{jl} w_jl rho[r0+j, c0+l] with w10 = conj(w01)
    a = 4 * r0 + c0
    b = a + 1
    c = a + 4
    d = c + 1
    re = (w00 * rr[a] + w11 * rr[d]
          + w01r * rr[b] - w01i * ri[b]
          + w01r * rr[c] + w01i * ri[c])
    im = (w00 * ri[a] + w11 * ri[d]
          + w01r * ri[b] + w01i * rr[b]
          + w01r * ri[c] - w01i * rr[c])
    return re, im


def _outcome(w00, w11, w01r, w01i, rr, ri):
    m00 = _reduce(w00, w11, w01r, w01i, rr, ri, 0, 0)[0]
    m11 = _reduce(w00, w11, w01r, w01i, rr, ri, 2, 2)[0]
    m01r, m01i = _reduce(w00, w11, w01r, w01i, rr, ri, 0, 2)
    pj = m00 + m11
    if pj < P_MIN:
        return 0.0
    off2 = m01r * m01r + m01i * m01i
    diff = m00 - m11
    lmax = 0.5 * (pj + sqrt(diff * diff + 4.0 * off2))
    lmin = (m00 * m11 - off2) / lmax
    h = 0.0
    if lmax > 0.0:
        h -= lmax * log2(lmax / pj)
    if lmin > 0.0:
        h -= lmin * log2(lmin / pj)
    return h


def conditional_entropy(rr, ri, theta, phi):
    c = cos(0.5 * theta)
    s = sin(0.5 * theta)
    cs = c * s
    er = cs * cos(phi)
    ei = cs * sin(phi)
    return (_outcome(c * c, s * s, er, ei, rr, ri)
            + _outcome(s * s, c * c, -er, -ei, rr, ri))


def grid_search(rr, ri, n_theta, n_phi):
    best = float("inf")
    bt = bp = 0.0
    for i in range(n_theta):
        t = pi * i / (n_theta - 1)
        for j in range(n_phi):
            p = TWO_PI * j / n_phi
            v = conditional_entropy(rr, ri, t, p)
            if v < best:
                best, bt, bp = v, t, p
    return best, bt, bp


def refine(rr, ri, theta, phi, step, tol, max_evals):
    best = conditional_entropy(rr, ri, theta, phi)
    evals = 1
    while step >= tol:
        moved = False
        for dt, dp in ((step, 0.0), (-step, 0.0), (0.0, step), (0.0, -step)):
            t = min(max(theta + dt, 0.0), pi)
            p = phi + dp
            if p < 0.0:
                p += TWO_PI
            elif p >= TWO_PI:
                p -= TWO_PI
            v = conditional_entropy(rr, ri, t, p)
            evals += 1
            if v < best:
                best, theta, phi = v, t, p
                moved = True
                break
            if evals >= max_evals:
                return best, theta, phi, evals, False
        if not moved:
            step *= 0.5
    return best, theta, phi, evals, True
