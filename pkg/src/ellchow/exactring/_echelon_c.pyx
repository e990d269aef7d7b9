# cython: language_level=3, boundscheck=False, wraparound=False
"""Integer row-echelon kernel (compiled twin of ``_echelon_py``).

Same flat-row representation and the same five entry points; coefficients
stay arbitrary-precision Python integers, the compiled code removes the
interpreter dispatch from the merge loops.
"""


def xgcd(a, b):
    """Extended gcd: returns ``(g, x, y)`` with ``g = a*x + b*y`` and ``g > 0``
    (for ``a``, ``b`` not both zero)."""
    old_r, r = a, b
    old_s, s = 1, 0
    old_t, t = 0, 1
    while r:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_s, s = s, old_s - q * s
        old_t, t = t, old_t - q * t
    if old_r < 0:
        return -old_r, -old_s, -old_t
    return old_r, old_s, old_t


def row_scale(list row, s):
    """``s * row`` as a fresh flat row (``s`` must be nonzero)."""
    cdef list out = list(row)
    cdef Py_ssize_t i
    for i in range(1, len(out), 2):
        out[i] = out[i] * s
    return out


def row_combine(list a, sa, list b, sb):
    """``sa*a + sb*b`` as a fresh flat row (zero entries dropped)."""
    cdef list out = []
    cdef Py_ssize_t i = 0, j = 0
    cdef Py_ssize_t la = len(a), lb = len(b)
    cdef object ca, cb, v
    while i < la and j < lb:
        ca = a[i]
        cb = b[j]
        if ca == cb:
            v = sa * a[i + 1] + sb * b[j + 1]
            if v:
                out.append(ca)
                out.append(v)
            i += 2
            j += 2
        elif ca < cb:
            v = sa * a[i + 1]
            if v:
                out.append(ca)
                out.append(v)
            i += 2
        else:
            v = sb * b[j + 1]
            if v:
                out.append(cb)
                out.append(v)
            j += 2
    while i < la:
        v = sa * a[i + 1]
        if v:
            out.append(a[i])
            out.append(v)
        i += 2
    while j < lb:
        v = sb * b[j + 1]
        if v:
            out.append(b[j])
            out.append(v)
        j += 2
    return out


def insert_row(list rows, dict pivots, list row):
    """Add ``row`` to the staircase basis, preserving its invariants."""
    cdef list p, new_pivot
    cdef object col, c, a, g, x, y, j
    while row:
        col = row[0]
        c = row[1]
        j = pivots.get(col)
        if j is None:
            if c < 0:
                row = row_scale(row, -1)
            pivots[col] = len(rows)
            rows.append(row)
            return
        p = rows[j]
        a = p[1]
        if c % a == 0:
            row = row_combine(row, 1, p, -(c // a))
        else:
            g, x, y = xgcd(a, c)
            new_pivot = row_combine(p, x, row, y)
            row = row_combine(row, a // g, p, -(c // g))
            rows[j] = new_pivot


def reduce_row(list rows, dict pivots, list row):
    """Canonical residue of ``row`` modulo the staircase basis."""
    cdef list cur = list(row)
    cdef list p
    cdef Py_ssize_t i = 0
    cdef object col, c, a, q, j
    while i < len(cur):
        col = cur[i]
        j = pivots.get(col)
        if j is not None:
            c = cur[i + 1]
            p = rows[j]
            a = p[1]
            q = c // a
            if q:
                cur = cur[:i] + row_combine(cur[i:], 1, p, -q)
                continue
        i += 2
    return cur
