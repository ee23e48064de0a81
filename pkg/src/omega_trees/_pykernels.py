"""Pure-Python reference kernels.

These are the inner loops everything else is built on: the Cantor pairing,
the sequence-code fold, and the prefix / Kleene-Brouwer comparisons.  The
Cython module ``_ckernels`` exports the same names with the same semantics.
"""
from math import isqrt


def pair(a, b):
    s = a + b
    return s * (s + 1) // 2 + b


def unpair(z):
    w = (isqrt(8 * z + 1) - 1) // 2
    b = z - w * (w + 1) // 2
    return w - b, b


def encode(u):
    n = len(u)
    if n == 0:
        return 1
    c = u[0]
    for k in range(1, n):
        s = c + u[k]
        c = s * (s + 1) // 2 + u[k]
    s = n - 1 + c
    return 2 + s * (s + 1) // 2 + c


def decode(s):
    """Inverse of :func:`encode`; ``s`` must be >= 1 (checked by the caller)."""
    if s == 1:
        return ()
    m, c = unpair(s - 2)
    out = [0] * (m + 1)
    for k in range(m, 0, -1):
        c, out[k] = unpair(c)
    out[0] = c
    return tuple(out)


def is_prefix(u, v):
    """``u`` is an initial segment (not necessarily proper) of ``v``."""
    n = len(u)
    if n > len(v):
        return False
    for i in range(n):
        if u[i] != v[i]:
            return False
    return True


def incompatible(u, v):
    for i in range(min(len(u), len(v))):
        if u[i] != v[i]:
            return True
    return False


def kb_leq(u, v):
    for i in range(min(len(u), len(v))):
        a = u[i]
        b = v[i]
        if a != b:
            return a < b
    return len(v) <= len(u)
