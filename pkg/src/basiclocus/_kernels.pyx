# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled versions of the kernels in ``_kernels_py``; same signatures."""


cdef enum:
    MAXD = 16


cdef inline void _load(tuple t, long *out, Py_ssize_t n):
    cdef Py_ssize_t i
    for i in range(n):
        out[i] = <long>t[i]


cdef inline void _matvec(int d, long *m, long *v, long *out):
    cdef int i, j
    cdef long s
    for i in range(d):
        s = 0
        for j in range(d):
            s += m[i * d + j] * v[j]
        out[i] = s


cdef inline bint _negative(long b, long m):
    return m < 0 or (m == 0 and b < 0)


def matmul(int d, tuple a, tuple b):
    cdef long ca[MAXD * MAXD]
    cdef long cb[MAXD * MAXD]
    cdef long s
    cdef int i, j, k
    _load(a, ca, d * d)
    _load(b, cb, d * d)
    out = [0] * (d * d)
    for i in range(d):
        for j in range(d):
            s = 0
            for k in range(d):
                s += ca[i * d + k] * cb[k * d + j]
            out[i * d + j] = s
    return tuple(out)


def matvec(int d, tuple m, tuple v):
    cdef long cm[MAXD * MAXD]
    cdef long cv[MAXD]
    cdef long co[MAXD]
    cdef int i
    _load(m, cm, d * d)
    _load(v, cv, d)
    _matvec(d, cm, cv, co)
    return tuple([co[i] for i in range(d)])


def affine_mul(int d, tuple lam1, tuple m1, tuple lam2, tuple m2):
    cdef long ca[MAXD * MAXD]
    cdef long cb[MAXD * MAXD]
    cdef long l2[MAXD]
    cdef long s
    cdef int i, j, k
    _load(m1, ca, d * d)
    _load(m2, cb, d * d)
    _load(lam2, l2, d)
    lam = [0] * d
    for i in range(d):
        s = <long>lam1[i]
        for j in range(d):
            s += ca[i * d + j] * l2[j]
        lam[i] = s
    out = [0] * (d * d)
    for i in range(d):
        for j in range(d):
            s = 0
            for k in range(d):
                s += ca[i * d + k] * cb[k * d + j]
            out[i * d + j] = s
    return tuple(lam), tuple(out)


def im_length(int d, tuple lam, tuple mat, tuple roots, tuple rho):
    cdef long cm[MAXD * MAXD]
    cdef long cl[MAXD]
    cdef long cr[MAXD]
    cdef long urho[MAXD]
    cdef long ca[MAXD]
    cdef long m, s, total = 0
    cdef int j
    _load(mat, cm, d * d)
    _load(lam, cl, d)
    _load(rho, cr, d)
    _matvec(d, cm, cr, urho)
    for alpha in roots:
        _load(<tuple>alpha, ca, d)
        m = 0
        s = 0
        for j in range(d):
            m += ca[j] * cl[j]
            s += ca[j] * urho[j]
        if s <= 0:
            m -= 1
        total += m if m >= 0 else -m
    return total


def is_left_descent(int d, tuple lam, tuple mat, tuple fn, long k, tuple rho):
    cdef long cm[MAXD * MAXD]
    cdef long cr[MAXD]
    cdef long urho[MAXD]
    cdef long m = k, b = 0
    cdef int j
    _load(mat, cm, d * d)
    _load(rho, cr, d)
    _matvec(d, cm, cr, urho)
    for j in range(d):
        m += <long>fn[j] * <long>lam[j]
        b += <long>fn[j] * urho[j]
    return _negative(b, m)


cdef bint _right_descent(int d, long *cl, long *cminv, long *cf, long k, long *cr):
    cdef long beta, m = k, b = 0
    cdef int i, j
    for j in range(d):
        beta = 0
        for i in range(d):
            beta += cf[i] * cminv[i * d + j]
        m -= beta * cl[j]
        b += beta * cr[j]
    return _negative(b, m)


def is_right_descent(int d, tuple lam, tuple minv, tuple fn, long k, tuple rho):
    cdef long cm[MAXD * MAXD]
    cdef long cl[MAXD]
    cdef long cr[MAXD]
    cdef long cf[MAXD]
    _load(minv, cm, d * d)
    _load(lam, cl, d)
    _load(rho, cr, d)
    _load(fn, cf, d)
    return _right_descent(d, cl, cm, cf, k, cr)


def first_left_descent(int d, tuple lam, tuple mat, tuple fns, tuple ks, tuple rho):
    cdef long cm[MAXD * MAXD]
    cdef long cl[MAXD]
    cdef long cr[MAXD]
    cdef long urho[MAXD]
    cdef long cf[MAXD]
    cdef long m, b
    cdef int i, j, nf = len(fns)
    _load(mat, cm, d * d)
    _load(lam, cl, d)
    _load(rho, cr, d)
    _matvec(d, cm, cr, urho)
    for i in range(nf):
        _load(<tuple>fns[i], cf, d)
        m = <long>ks[i]
        b = 0
        for j in range(d):
            m += cf[j] * cl[j]
            b += cf[j] * urho[j]
        if _negative(b, m):
            return i
    return -1


def left_descents(int d, tuple lam, tuple mat, tuple fns, tuple ks, tuple rho):
    cdef long cm[MAXD * MAXD]
    cdef long cl[MAXD]
    cdef long cr[MAXD]
    cdef long urho[MAXD]
    cdef long cf[MAXD]
    cdef long m, b
    cdef int i, j, nf = len(fns)
    _load(mat, cm, d * d)
    _load(lam, cl, d)
    _load(rho, cr, d)
    _matvec(d, cm, cr, urho)
    out = []
    for i in range(nf):
        _load(<tuple>fns[i], cf, d)
        m = <long>ks[i]
        b = 0
        for j in range(d):
            m += cf[j] * cl[j]
            b += cf[j] * urho[j]
        if _negative(b, m):
            out.append(i)
    return tuple(out)


def right_descents(int d, tuple lam, tuple minv, tuple fns, tuple ks, tuple rho):
    cdef long cm[MAXD * MAXD]
    cdef long cl[MAXD]
    cdef long cr[MAXD]
    cdef long cf[MAXD]
    cdef int i, nf = len(fns)
    _load(minv, cm, d * d)
    _load(lam, cl, d)
    _load(rho, cr, d)
    out = []
    for i in range(nf):
        _load(<tuple>fns[i], cf, d)
        if _right_descent(d, cl, cm, cf, <long>ks[i], cr):
            out.append(i)
    return tuple(out)
