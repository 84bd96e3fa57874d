"""Pure-Python versions of the inner loops.

Every function here has a twin with the same signature in ``_kernels.pyx``.
Elements of the extended affine Weyl group are passed around as a
translation vector ``lam`` (tuple of ints, length ``d``) and a finite part
given as a flattened row-major ``d x d`` integer matrix acting on the
coweight lattice.  Affine functionals are pairs ``(fn, k)`` meaning
``x -> <fn, x> + k``.
"""


def matmul(d, a, b):
    out = [0] * (d * d)
    for i in range(d):
        row = i * d
        for k in range(d):
            aik = a[row + k]
            if aik:
                col = k * d
                for j in range(d):
                    out[row + j] += aik * b[col + j]
    return tuple(out)


def matvec(d, m, v):
    out = [0] * d
    for i in range(d):
        row = i * d
        s = 0
        for j in range(d):
            s += m[row + j] * v[j]
        out[i] = s
    return tuple(out)


def affine_mul(d, lam1, m1, lam2, m2):
    """(t^lam1 m1)(t^lam2 m2) = t^(lam1 + m1 lam2) m1 m2."""
    mv = matvec(d, m1, lam2)
    lam = tuple(lam1[i] + mv[i] for i in range(d))
    return lam, matmul(d, m1, m2)


def im_length(d, lam, mat, roots, rho):
    """Iwahori-Matsumoto length of t^lam u.

    ``roots`` are the positive roots as functionals; ``rho`` is any regular
    dominant vector, used to read off the sign of u^{-1}(alpha).
    """
    urho = matvec(d, mat, rho)
    total = 0
    for alpha in roots:
        m = 0
        s = 0
        for j in range(d):
            m += alpha[j] * lam[j]
            s += alpha[j] * urho[j]
        if s > 0:
            total += m if m >= 0 else -m
        else:
            m -= 1
            total += m if m >= 0 else -m
    return total


def _negative(beta_rho, m):
    return m < 0 or (m == 0 and beta_rho < 0)


def is_left_descent(d, lam, mat, fn, k, rho):
    # w^{-1} . a = a o w = (fn M) + (fn(lam) + k)
    m = k
    for j in range(d):
        m += fn[j] * lam[j]
    urho = matvec(d, mat, rho)
    b = 0
    for j in range(d):
        b += fn[j] * urho[j]
    return _negative(b, m)


def is_right_descent(d, lam, minv, fn, k, rho):
    # w . a = a o w^{-1} = beta + (k - beta(lam)), beta = fn M^{-1}
    beta = [0] * d
    for j in range(d):
        s = 0
        for i in range(d):
            s += fn[i] * minv[i * d + j]
        beta[j] = s
    m = k
    b = 0
    for j in range(d):
        m -= beta[j] * lam[j]
        b += beta[j] * rho[j]
    return _negative(b, m)


def first_left_descent(d, lam, mat, fns, ks, rho):
    """Smallest index i with s_i w < w, or -1."""
    urho = matvec(d, mat, rho)
    for i in range(len(fns)):
        fn = fns[i]
        m = ks[i]
        b = 0
        for j in range(d):
            m += fn[j] * lam[j]
            b += fn[j] * urho[j]
        if _negative(b, m):
            return i
    return -1


def left_descents(d, lam, mat, fns, ks, rho):
    urho = matvec(d, mat, rho)
    out = []
    for i in range(len(fns)):
        fn = fns[i]
        m = ks[i]
        b = 0
        for j in range(d):
            m += fn[j] * lam[j]
            b += fn[j] * urho[j]
        if _negative(b, m):
            out.append(i)
    return tuple(out)


def right_descents(d, lam, minv, fns, ks, rho):
    out = []
    for i in range(len(fns)):
        if is_right_descent(d, lam, minv, fns[i], ks[i], rho):
            out.append(i)
    return tuple(out)
