# cython: language_level=3
"""Compiled versions of the kernels in ``_pykernels``.

Arithmetic runs on unsigned 64-bit words while the operands are small enough
for the result to fit; otherwise it falls through to Python integers, so the
results are bit-identical to the reference implementation for every input.
"""
from math import isqrt

from libc.math cimport sqrt

ctypedef unsigned long long u64

cdef u64 SMALL = 1ULL << 30
cdef u64 SMALL_Z = 1ULL << 52


cdef inline u64 _pair64(u64 a, u64 b):
    cdef u64 s = a + b
    return s * (s + 1) // 2 + b


cdef inline void _unpair64(u64 z, u64 *a, u64 *b):
    cdef u64 w = <u64>((sqrt(8.0 * <double>z + 1.0) - 1.0) / 2.0)
    while w * (w + 1) // 2 > z:
        w -= 1
    while (w + 1) * (w + 2) // 2 <= z:
        w += 1
    b[0] = z - w * (w + 1) // 2
    a[0] = w - b[0]


def pair(a, b):
    if 0 <= a < SMALL and 0 <= b < SMALL:
        return _pair64(a, b)
    s = a + b
    return s * (s + 1) // 2 + b


def unpair(z):
    cdef u64 a, b
    if 0 <= z < SMALL_Z:
        _unpair64(z, &a, &b)
        return a, b
    w = (isqrt(8 * z + 1) - 1) // 2
    bb = z - w * (w + 1) // 2
    return w - bb, bb


def encode(u):
    cdef Py_ssize_t n = len(u), k
    cdef u64 c64, x64
    if n == 0:
        return 1
    c = u[0]
    k = 1
    while k < n:
        x = u[k]
        if c < SMALL and 0 <= x < SMALL:
            c64 = c
            x64 = x
            c = _pair64(c64, x64)
        else:
            s = c + x
            c = s * (s + 1) // 2 + x
        k += 1
    s = n - 1 + c
    return 2 + s * (s + 1) // 2 + c


def decode(s):
    cdef Py_ssize_t m, k
    if s == 1:
        return ()
    mm, c = unpair(s - 2)
    m = mm
    out = [0] * (m + 1)
    k = m
    while k > 0:
        c, out[k] = unpair(c)
        k -= 1
    out[0] = c
    return tuple(out)


def is_prefix(u, v):
    cdef Py_ssize_t n = len(u), i
    if n > len(v):
        return False
    for i in range(n):
        if u[i] != v[i]:
            return False
    return True


def incompatible(u, v):
    cdef Py_ssize_t n = min(len(u), len(v)), i
    for i in range(n):
        if u[i] != v[i]:
            return True
    return False


def kb_leq(u, v):
    cdef Py_ssize_t lu = len(u), lv = len(v), i
    cdef Py_ssize_t n = lu if lu < lv else lv
    for i in range(n):
        a = u[i]
        b = v[i]
        if a != b:
            return a < b
    return lv <= lu
