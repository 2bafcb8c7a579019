# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=False
"""Fixed-width versions of the kernels in ``_kernels_py``.

Callers (see ``kernels.py``) guarantee that every intermediate fits in a
signed 64-bit integer; the semantics otherwise match the Python versions.
"""

from libc.stdlib cimport malloc, free


cdef inline long long _floordiv(long long a, long long b):
    cdef long long q = a // b
    return q


cdef inline long long _ceildiv(long long a, long long b):
    return -((-a) // b)


def scan_box(normals, offsets, lo, hi, bint strict, Py_ssize_t limit):
    cdef Py_ssize_t d = len(lo)
    cdef Py_ssize_t F = len(normals)
    cdef Py_ssize_t last = d - 1
    cdef Py_ssize_t f, j
    cdef long long c, B, ub, lb, xlo, xhi, v, span
    cdef long long *A = <long long *> malloc(F * d * sizeof(long long))
    cdef long long *cut = <long long *> malloc(F * sizeof(long long))
    cdef long long *partial = <long long *> malloc(F * sizeof(long long))
    cdef long long *x = <long long *> malloc(d * sizeof(long long))
    cdef long long *L = <long long *> malloc(d * sizeof(long long))
    cdef long long *Hh = <long long *> malloc(d * sizeof(long long))
    cdef list out = []
    try:
        for f in range(F):
            row = normals[f]
            for j in range(d):
                A[f * d + j] = row[j]
            cut[f] = offsets[f] - (1 if strict else 0)
        for j in range(d):
            L[j] = lo[j]
            Hh[j] = hi[j]
            x[j] = lo[j]
        for f in range(F):
            partial[f] = 0
            for j in range(last):
                partial[f] += A[f * d + j] * x[j]
        while True:
            xlo = L[last]
            xhi = Hh[last]
            for f in range(F):
                c = A[f * d + last]
                B = cut[f] - partial[f]
                if c > 0:
                    ub = _floordiv(B, c)
                    if ub < xhi:
                        xhi = ub
                elif c < 0:
                    lb = _ceildiv(B, c)
                    if lb > xlo:
                        xlo = lb
                elif B < 0:
                    xhi = xlo - 1
                    break
                if xlo > xhi:
                    break
            v = xlo
            while v <= xhi:
                pt = [x[j] for j in range(last)]
                pt.append(v)
                out.append(tuple(pt))
                if len(out) >= limit:
                    return out
                v += 1
            j = last - 1
            while j >= 0:
                if x[j] < Hh[j]:
                    x[j] += 1
                    for f in range(F):
                        partial[f] += A[f * d + j]
                    break
                span = x[j] - L[j]
                x[j] = L[j]
                for f in range(F):
                    partial[f] -= A[f * d + j] * span
                j -= 1
            if j < 0:
                return out
    finally:
        free(A)
        free(cut)
        free(partial)
        free(x)
        free(L)
        free(Hh)


def group_elements(gens, orders, long long modulus):
    # requires orders[k] * gens[k] == 0 (mod modulus) for every k
    cdef Py_ssize_t k = len(gens)
    if k == 0:
        return [()]
    cdef Py_ssize_t n = len(gens[0])
    cdef Py_ssize_t total = 1
    cdef Py_ssize_t i, j, idx, gi
    for o in orders:
        total *= o
    cdef long long *G = <long long *> malloc(k * n * sizeof(long long))
    cdef long long *O = <long long *> malloc(k * sizeof(long long))
    cdef long long *cnt = <long long *> malloc(k * sizeof(long long))
    cdef long long *cur = <long long *> malloc(n * sizeof(long long))
    cdef list out = []
    try:
        for gi in range(k):
            O[gi] = orders[gi]
            cnt[gi] = 0
            g = gens[gi]
            for j in range(n):
                G[gi * n + j] = g[j]
        for j in range(n):
            cur[j] = 0
        for idx in range(total):
            out.append(tuple([cur[j] for j in range(n)]))
            # increment mixed-radix counter, last generator fastest
            gi = k - 1
            while gi >= 0:
                cnt[gi] += 1
                if cnt[gi] < O[gi]:
                    for j in range(n):
                        cur[j] = (cur[j] + G[gi * n + j]) % modulus
                    break
                # one more step closes the cycle back to zero
                cnt[gi] = 0
                for j in range(n):
                    cur[j] = (cur[j] + G[gi * n + j]) % modulus
                gi -= 1
        return out
    finally:
        free(G)
        free(O)
        free(cnt)
        free(cur)


def barycentric_interior(elements, long long modulus, long long r, Py_ssize_t limit):
    cdef list out = []
    cdef Py_ssize_t n, i, pos
    cdef long long total, zeros, free_, tail
    cdef long long *base
    cdef long long *comp
    for lam in elements:
        n = len(lam)
        total = 0
        zeros = 0
        for v in lam:
            total += v
            if v == 0:
                zeros += 1
        if total % modulus:
            continue
        free_ = r - total // modulus - zeros
        if free_ < 0:
            continue
        base = <long long *> malloc(n * sizeof(long long))
        comp = <long long *> malloc(n * sizeof(long long))
        try:
            for i in range(n):
                base[i] = lam[i] if lam[i] != 0 else modulus
                comp[i] = 0
            # compositions of free_ into n parts, first part largest first
            comp[0] = free_
            while True:
                out.append(tuple([base[i] + modulus * comp[i] for i in range(n)]))
                if len(out) >= limit:
                    return out
                # next composition in the same order as the Python generator
                if n == 1:
                    break
                pos = n - 2
                while pos >= 0 and comp[pos] == 0:
                    pos -= 1
                if pos < 0:
                    break
                comp[pos] -= 1
                tail = comp[n - 1]
                comp[n - 1] = 0
                comp[pos + 1] = comp[pos + 1] + 1 + tail if pos + 1 != n - 1 else 1 + tail
        finally:
            free(base)
            free(comp)
    return out
