# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled cell march; same order of operations as the numpy fallback."""

from libc.math cimport cos, cosh, exp, fabs, sin, sinh


cdef inline void _half(bint liouville, double* x, double* out, double s) noexcept nogil:
    cdef double C10 = cosh(2 * x[1]), S10 = sinh(2 * x[1])
    cdef double C11 = cosh(2 * x[3]), S11 = sinh(2 * x[3])
    cdef double c01 = cos(2 * x[2]), s01 = sin(2 * x[2])
    cdef double e, C00, S00
    if liouville:
        e = s * exp(2 * x[0])
        out[0] = e * (C10 * C11 * c01 - S10 * S11 * s01)
        out[1] = e * (S10 * C11 * c01 - C10 * S11 * s01)
        out[2] = e * (S10 * S11 * c01 + C10 * C11 * s01)
        out[3] = e * (C10 * S11 * c01 + S10 * C11 * s01)
    else:
        C00 = 2 * s * cosh(2 * x[0])
        S00 = 2 * s * sinh(2 * x[0])
        out[0] = S00 * C10 * C11 * c01 - C00 * S10 * S11 * s01
        out[1] = C00 * S10 * C11 * c01 - S00 * C10 * S11 * s01
        out[2] = S00 * S10 * S11 * c01 + C00 * C10 * C11 * s01
        out[3] = C00 * C10 * S11 * c01 + S00 * S10 * C11 * s01


cdef inline void _rhs(int model, double* x, double* out, int nf, double sign) noexcept nogil:
    cdef int k
    cdef double e
    if model == 0:
        for k in range(nf):
            out[k] = 0.0
    elif model == 1:
        out[0] = sign * exp(2 * x[0])
    elif model == 2:
        out[0] = sign * (2 * sinh(2 * x[0]))
    elif model == 3:
        e = exp(2 * x[0])
        out[0] = sign * (e * cosh(2 * x[1]))
        out[1] = sign * (e * sinh(2 * x[1]))
    elif model == 4:
        out[0] = sign * (2 * sinh(2 * x[0]) * cosh(2 * x[1]))
        out[1] = sign * (2 * cosh(2 * x[0]) * sinh(2 * x[1]))
    else:
        _half(model == 5, x, out, 1.0)
        _half(model == 5, x + 4, out + 4, -1.0)
        for k in range(8):
            out[k] = sign * out[k]


def march(double[:, :, ::1] u, int model, double h, double sign, double guard):
    """Fill u[:, 1:, 1:] from its first row and column; returns (status, i, j)."""
    cdef Py_ssize_t nf = u.shape[0], nz = u.shape[1], nzb = u.shape[2]
    cdef Py_ssize_t d, i, j, k, lo, hi
    cdef double h2 = h * h
    cdef double a[8]
    cdef double side[8]
    cdef double base[8]
    cdef double x[8]
    cdef double f[8]
    cdef double pred
    if nf > 8:
        raise ValueError("at most eight fields")
    with nogil:
        for d in range(nz + nzb - 3):
            lo = d - (nzb - 2) if d > nzb - 2 else 0
            hi = d if d < nz - 2 else nz - 2
            for i in range(lo, hi + 1):
                j = d - i
                for k in range(nf):
                    a[k] = u[k, i, j]
                    side[k] = u[k, i + 1, j] + u[k, i, j + 1]
                    base[k] = side[k] - a[k]
                    x[k] = (a[k] + side[k]) / 3.0
                _rhs(model, x, f, <int>nf, sign)
                for k in range(nf):
                    pred = base[k] + h2 * f[k]
                    x[k] = ((a[k] + pred) + side[k]) * 0.25
                _rhs(model, x, f, <int>nf, sign)
                for k in range(nf):
                    x[k] = base[k] + h2 * f[k]
                    if not (fabs(x[k]) <= guard):
                        with gil:
                            return 1, i + 1, j + 1
                for k in range(nf):
                    u[k, i + 1, j + 1] = x[k]
    return 0, -1, -1
