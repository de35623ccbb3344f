# cython: language_level=3, cdivision=True
"""Compiled arithmetic kernels.

Drop-in twin of ``heisaut._kernels`` (see there for the conventions).
Results are exact for arbitrary-precision inputs: each kernel takes a C
fast path only when every operand is small enough that all
intermediates provably fit in 64 bits, and otherwise falls back to
Python-object arithmetic.  Division only ever hits n*(n-1)/2, which is
non-negative and even, so C truncation is exact.
"""

from cpython.long cimport PyLong_AsLongLongAndOverflow

# |operand| bounds for the fast paths.  MUL: worst term a1*b2 < 2**60.
# POW/APPLY: worst terms are triple products like (n*(n-1)/2)*a*b and
# C(a,2)*m11*m21, all < 2**60; six-term sums stay below 2**63.
DEF MUL_BOUND = 1073741824       # 2**30
DEF POW_BOUND = 32768            # 2**15


cdef inline bint _grab(object o, long long bound, long long *out) except -1:
    cdef int overflow = 0
    cdef long long v
    if type(o) is not int:
        return False
    v = PyLong_AsLongLongAndOverflow(o, &overflow)
    if overflow:
        return False
    if v <= -bound or v >= bound:
        return False
    out[0] = v
    return True


def heis_mul(object a1, object b1, object c1, object a2, object b2, object c2):
    cdef long long x1, y1, z1, x2, y2, z2
    if (_grab(a1, MUL_BOUND, &x1) and _grab(b1, MUL_BOUND, &y1)
            and _grab(c1, MUL_BOUND, &z1) and _grab(a2, MUL_BOUND, &x2)
            and _grab(b2, MUL_BOUND, &y2) and _grab(c2, MUL_BOUND, &z2)):
        return x1 + x2, y1 + y2, z1 + z2 + x1 * y2
    return a1 + a2, b1 + b2, c1 + c2 + a1 * b2


def heis_inv(object a, object b, object c):
    cdef long long x, y, z
    if _grab(a, MUL_BOUND, &x) and _grab(b, MUL_BOUND, &y) and _grab(c, MUL_BOUND, &z):
        return -x, -y, x * y - z
    return -a, -b, a * b - c


def heis_pow(object a, object b, object c, object n):
    cdef long long x, y, z, m
    if (_grab(a, POW_BOUND, &x) and _grab(b, POW_BOUND, &y)
            and _grab(c, POW_BOUND, &z) and _grab(n, POW_BOUND, &m)):
        return m * x, m * y, m * z + (m * (m - 1) / 2) * x * y
    return n * a, n * b, n * c + (n * (n - 1) // 2) * a * b


def mat_mul(object x11, object x12, object x21, object x22,
            object y11, object y12, object y21, object y22):
    cdef long long a, b, c, d, e, f, g, h
    if (_grab(x11, MUL_BOUND, &a) and _grab(x12, MUL_BOUND, &b)
            and _grab(x21, MUL_BOUND, &c) and _grab(x22, MUL_BOUND, &d)
            and _grab(y11, MUL_BOUND, &e) and _grab(y12, MUL_BOUND, &f)
            and _grab(y21, MUL_BOUND, &g) and _grab(y22, MUL_BOUND, &h)):
        return a * e + b * g, a * f + b * h, c * e + d * g, c * f + d * h
    return (
        x11 * y11 + x12 * y21,
        x11 * y12 + x12 * y22,
        x21 * y11 + x22 * y21,
        x21 * y12 + x22 * y22,
    )


def aut_apply(object m11, object m12, object m21, object m22,
              object r, object u, object a, object b, object c):
    cdef long long e11, e12, e21, e22, cr, cu, x, y, z, det, ca, cb
    if (_grab(m11, POW_BOUND, &e11) and _grab(m12, POW_BOUND, &e12)
            and _grab(m21, POW_BOUND, &e21) and _grab(m22, POW_BOUND, &e22)
            and _grab(r, POW_BOUND, &cr) and _grab(u, POW_BOUND, &cu)
            and _grab(a, POW_BOUND, &x) and _grab(b, POW_BOUND, &y)
            and _grab(c, POW_BOUND, &z)):
        det = e11 * e22 - e12 * e21
        ca = x * (x - 1) / 2
        cb = y * (y - 1) / 2
        return (
            x * e11 + y * e12,
            x * e21 + y * e22,
            det * z + x * cr + y * cu + ca * e11 * e21 + cb * e12 * e22 + x * y * e12 * e21,
        )
    det_o = m11 * m22 - m12 * m21
    ca_o = a * (a - 1) // 2
    cb_o = b * (b - 1) // 2
    return (
        a * m11 + b * m12,
        a * m21 + b * m22,
        det_o * c + a * r + b * u + ca_o * m11 * m21 + cb_o * m12 * m22 + a * b * m12 * m21,
    )


def aut_compose(object n11, object n12, object n21, object n22, object r2, object u2,
                object m11, object m12, object m21, object m22, object r1, object u1):
    p11, p12, p21, p22 = mat_mul(n11, n12, n21, n22, m11, m12, m21, m22)
    r = aut_apply(n11, n12, n21, n22, r2, u2, m11, m21, r1)[2]
    u = aut_apply(n11, n12, n21, n22, r2, u2, m12, m22, u1)[2]
    return p11, p12, p21, p22, r, u
