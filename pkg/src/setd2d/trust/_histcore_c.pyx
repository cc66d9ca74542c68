# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled trust-history kernel; see _histcore_py.py for the reference."""
from libc.math cimport log, sqrt, fabs


cdef inline double _decay(Py_ssize_t l, Py_ssize_t sh, double t, double t_i,
                          double mu, double nu) nogil:
    cdef double dt = fabs(t - t_i)
    cdef double lg
    if dt > 0.0:
        lg = log(dt)
        if lg > 1.0:
            return mu * (<double>l / <double>sh) + nu / lg
    return mu * (<double>l / <double>sh) + nu


def decay_weight(Py_ssize_t l, Py_ssize_t sh, double t, double t_i,
                 double mu, double nu):
    return _decay(l, sh, t, t_i, mu, nu)


def windowed_opinion(const double[:] sf, const double[:] somega,
                     const double[:] ts, double t, double mu, double nu,
                     Py_ssize_t window):
    cdef Py_ssize_t sh = sf.shape[0]
    cdef Py_ssize_t start = sh - window if window < sh else 0
    cdef Py_ssize_t k
    cdef double w, num = 0.0, den = 0.0
    for k in range(start, sh):
        w = somega[k] * _decay(k + 1, sh, t, ts[k], mu, nu)
        num += sf[k] * w
        den += w
    return num / den


def opinion_stats(const double[:] sf, const double[:] somega,
                  const double[:] ts, double t, double mu, double nu,
                  Py_ssize_t l_lon, Py_ssize_t l_rec):
    cdef Py_ssize_t sh = sf.shape[0]
    cdef double full_n = 0.0, full_d = 0.0
    cdef double lon_n = 0.0, lon_d = 0.0
    cdef double rec_n = 0.0, rec_d = 0.0
    cdef Py_ssize_t lon_start = sh - l_lon if l_lon < sh else 0
    cdef Py_ssize_t rec_start = sh - l_rec if l_rec < sh else 0
    cdef Py_ssize_t k
    cdef double w, x
    for k in range(sh):
        w = somega[k] * _decay(k + 1, sh, t, ts[k], mu, nu)
        x = sf[k] * w
        full_n += x
        full_d += w
        if k >= lon_start:
            lon_n += x
            lon_d += w
        if k >= rec_start:
            rec_n += x
            rec_d += w
    return full_n / full_d, lon_n / lon_d, rec_n / rec_d


def sort_integrity(const double[:] sf, const double[:] somega,
                   const double[:] ts, double t, double mu, double nu,
                   double scb):
    cdef Py_ssize_t sh = sf.shape[0]
    cdef Py_ssize_t k
    cdef double w, d, acc = 0.0
    for k in range(sh):
        w = somega[k] * _decay(k + 1, sh, t, ts[k], mu, nu)
        d = sf[k] * w - scb
        acc += d * d
    return sqrt(acc / sh)
