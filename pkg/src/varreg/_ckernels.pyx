# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled batch integrators for the two hot integrands.

Both kernels integrate over the straight segment [0, z0] with the adaptive
G10/K21 scheme described in ``varreg._gk``: a depth-first stack of panels in
the unit parameter s, each accepted on its own error test.  The pure-Python
twin lives in ``varreg._pykernels`` and follows the same acceptance rule.
"""
import numpy as np
cimport numpy as cnp

from varreg._gk import NODES, WK, WG, ROUNDOFF_FACTOR, EPS, MIN_WIDTH

from libc.math cimport sqrt

cdef enum:
    STACK = 256

cdef double _nodes[21]
cdef double _wk[21]
cdef double _wg[21]
for _i in range(21):
    _nodes[_i] = NODES[_i]
    _wk[_i] = WK[_i]
    _wg[_i] = WG[_i]
cdef double _roundoff = ROUNDOFF_FACTOR * EPS
cdef double _min_width = MIN_WIDTH


cdef inline double cabs(double complex z) noexcept nogil:
    # plain modulus; hypot's overflow guard is not needed at these magnitudes
    return sqrt(z.real * z.real + z.imag * z.imag)


cdef inline double complex _cdiv(double complex p, double complex q) noexcept nogil:
    cdef double d = q.real * q.real + q.imag * q.imag
    return p * q.conjugate() / d


cdef inline double complex _extremal(double complex a, double complex lam,
                                     double complex lamc, double complex zeta) noexcept nogil:
    cdef double complex num = (lam - 1.0) + (1.0 - lamc) * a * zeta
    cdef double complex den = (1.0 - zeta) * (1.0 + (lamc * a - lam) * zeta - a * zeta * zeta)
    return _cdiv(num, den)


cdef inline double complex _member(const double complex* zeros, int nz,
                                   double complex rot, double complex lam,
                                   double complex lamc, double complex zeta) noexcept nogil:
    cdef double complex psi = rot * zeta
    cdef double complex d
    cdef int k
    for k in range(nz):
        psi = _cdiv(psi * (zeta - zeros[k]), 1.0 - zeros[k].conjugate() * zeta)
    d = _cdiv(psi + lam, 1.0 + lamc * psi)
    return _cdiv(d - 1.0, (1.0 - d * zeta) * (1.0 - zeta))


cdef int _adapt(int kind, double complex a, const double complex* zeros, int nz,
                double complex lam, double complex z0, double tol, int max_panels,
                double complex* out_val, double* out_err, int* out_panels) noexcept nogil:
    cdef double s0s[STACK]
    cdef double s1s[STACK]
    cdef int top = 0
    cdef int panels = 0
    cdef double s0, s1, h, c, absk, err
    cdef double complex fk, kr, gr, fval, lamc = lam.conjugate()
    cdef double complex total = 0
    cdef double errsum = 0
    cdef int j
    s0s[0] = 0.0
    s1s[0] = 1.0
    top = 1
    while top > 0:
        top -= 1
        s0 = s0s[top]
        s1 = s1s[top]
        h = 0.5 * (s1 - s0)
        c = 0.5 * (s1 + s0)
        kr = 0
        gr = 0
        absk = 0
        for j in range(21):
            if kind == 0:
                fval = _extremal(a, lam, lamc, (c + h * _nodes[j]) * z0)
            else:
                fval = _member(zeros, nz, a, lam, lamc, (c + h * _nodes[j]) * z0)
            kr = kr + _wk[j] * fval
            gr = gr + _wg[j] * fval
            absk = absk + _wk[j] * cabs(fval)
        kr = kr * h * z0
        gr = gr * h * z0
        absk = absk * h * cabs(z0)
        err = cabs(kr - gr)
        panels += 1
        if err <= tol * (s1 - s0) or err <= _roundoff * absk:
            total = total + kr
            errsum = errsum + err
        elif (s1 - s0) < _min_width or panels >= max_panels or top + 2 > STACK:
            out_val[0] = total + kr
            out_err[0] = errsum + err
            out_panels[0] = panels
            return 1
        else:
            # right half first so the left half is processed next
            s0s[top] = c
            s1s[top] = s1
            s0s[top + 1] = s0
            s1s[top + 1] = c
            top += 2
    out_val[0] = total
    out_err[0] = errsum
    out_panels[0] = panels
    return 0


def extremal_batch(a, double complex lam, double complex z0, double tol, int max_panels):
    """Integrate the extremal integrand over [0, z0] for every entry of ``a``.

    Returns ``(values, errors, panels, status)``; ``status`` is nonzero where
    the panel budget ran out.
    """
    cdef cnp.ndarray[cnp.complex128_t, ndim=1] av = np.ascontiguousarray(a, dtype=np.complex128).ravel()
    cdef Py_ssize_t n = av.shape[0]
    cdef cnp.ndarray[cnp.complex128_t, ndim=1] vals = np.empty(n, dtype=np.complex128)
    cdef cnp.ndarray[cnp.float64_t, ndim=1] errs = np.empty(n)
    cdef cnp.ndarray[cnp.int32_t, ndim=1] panels = np.empty(n, dtype=np.int32)
    cdef cnp.ndarray[cnp.int32_t, ndim=1] status = np.empty(n, dtype=np.int32)
    cdef Py_ssize_t i
    cdef double complex v
    cdef double e
    cdef int p
    with nogil:
        for i in range(n):
            status[i] = _adapt(0, av[i], NULL, 0, lam, z0, tol, max_panels, &v, &e, &p)
            vals[i] = v
            errs[i] = e
            panels[i] = p
    return vals, errs, panels, status


def member_batch(zeros, counts, rotations, double complex lam, double complex z0,
                 double tol, int max_panels):
    """Integrate the member integrand for a batch of Schwarz generators.

    ``zeros`` is an ``(m, k)`` complex array padded beyond ``counts[i]``;
    ``rotations`` holds the leading coefficient ``scale * exp(i phi)``.
    """
    cdef cnp.ndarray[cnp.complex128_t, ndim=2] zv = np.ascontiguousarray(zeros, dtype=np.complex128)
    cdef cnp.ndarray[cnp.int32_t, ndim=1] cv = np.ascontiguousarray(counts, dtype=np.int32)
    cdef cnp.ndarray[cnp.complex128_t, ndim=1] rv = np.ascontiguousarray(rotations, dtype=np.complex128)
    cdef Py_ssize_t n = rv.shape[0]
    cdef cnp.ndarray[cnp.complex128_t, ndim=1] vals = np.empty(n, dtype=np.complex128)
    cdef cnp.ndarray[cnp.float64_t, ndim=1] errs = np.empty(n)
    cdef cnp.ndarray[cnp.int32_t, ndim=1] panels = np.empty(n, dtype=np.int32)
    cdef cnp.ndarray[cnp.int32_t, ndim=1] status = np.empty(n, dtype=np.int32)
    cdef Py_ssize_t i
    cdef double complex v
    cdef double e
    cdef int p
    if zv.shape[0] != n or cv.shape[0] != n:
        raise ValueError("zeros, counts and rotations must agree in length")
    with nogil:
        for i in range(n):
            status[i] = _adapt(1, rv[i], &zv[i, 0] if zv.shape[1] > 0 else NULL,
                               cv[i], lam, z0, tol, max_panels, &v, &e, &p)
            vals[i] = v
            errs[i] = e
            panels[i] = p
    return vals, errs, panels, status
