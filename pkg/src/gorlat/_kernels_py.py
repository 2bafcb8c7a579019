"""Pure-Python implementations of the enumeration kernels.

These are the reference versions; ``_speedups.pyx`` mirrors them with
fixed-width integers. Both take and return plain Python ints.
"""


def _ceil_div(a, b):
    return -((-a) // b)


def scan_box(normals, offsets, lo, hi, strict, limit):
    """Lattice points ``x`` in the box ``[lo, hi]`` with ``<a_f, x> <= b_f``.

    With ``strict`` the inequalities are strict. Points are produced in
    lexicographic order; at most ``limit`` are returned. The last coordinate
    is solved for directly, so the work is proportional to the box size
    divided by its last side.
    """
    d = len(lo)
    F = len(normals)
    last = d - 1
    slack = 1 if strict else 0
    cut = [b - slack for b in offsets]
    last_coef = [a[last] for a in normals]
    out = []
    x = list(lo[:last])
    partial = [0] * F
    for f in range(F):
        a = normals[f]
        partial[f] = sum(a[j] * x[j] for j in range(last))
    while True:
        xlo, xhi = lo[last], hi[last]
        for f in range(F):
            c = last_coef[f]
            B = cut[f] - partial[f]
            if c > 0:
                ub = B // c
                if ub < xhi:
                    xhi = ub
            elif c < 0:
                lb = _ceil_div(B, c)
                if lb > xlo:
                    xlo = lb
            elif B < 0:
                xhi = xlo - 1
                break
            if xlo > xhi:
                break
        for v in range(xlo, xhi + 1):
            out.append(tuple(x) + (v,))
            if len(out) >= limit:
                return out
        # odometer over the leading coordinates
        j = last - 1
        while j >= 0:
            if x[j] < hi[j]:
                x[j] += 1
                for f in range(F):
                    partial[f] += normals[f][j]
                break
            span = x[j] - lo[j]
            x[j] = lo[j]
            for f in range(F):
                partial[f] -= normals[f][j] * span
            j -= 1
        if j < 0:
            return out


def group_elements(gens, orders, modulus):
    """All combinations ``sum c_k gens[k]`` (mod ``modulus``), ``0 <= c_k < orders[k]``.

    Mixed-radix order with the last generator varying fastest.
    """
    n = len(gens[0]) if gens else 0
    out = [tuple([0] * n)] if gens else [()]
    for g, o in zip(gens, orders):
        nxt = []
        for e in out:
            cur = list(e)
            for _ in range(o):
                nxt.append(tuple(cur))
                cur = [(a + b) % modulus for a, b in zip(cur, g)]
        out = nxt
    return out


def _compositions(total, parts):
    if parts == 1:
        yield (total,)
        return
    for first in range(total, -1, -1):
        for rest in _compositions(total - first, parts - 1):
            yield (first,) + rest


def barycentric_interior(elements, modulus, r, limit):
    """Barycentric numerators of interior lattice points of ``r`` times a simplex.

    ``elements`` lists every member of the simplex's group as numerators
    over ``modulus`` in ``[0, modulus)``. A point with barycentric
    coordinates ``beta`` is a lattice point iff ``beta mod 1`` is a group
    element; it is interior iff every ``beta_i > 0``. Returns at most
    ``limit`` vectors ``modulus * beta``.
    """
    out = []
    for lam in elements:
        total = sum(lam)
        if total % modulus:
            continue
        zeros = [i for i, v in enumerate(lam) if v == 0]
        free = r - total // modulus - len(zeros)
        if free < 0:
            continue
        base = list(lam)
        for i in zeros:
            base[i] = modulus
        for comp in _compositions(free, len(lam)):
            out.append(tuple(b + modulus * k for b, k in zip(base, comp)))
            if len(out) >= limit:
                return out
    return out
