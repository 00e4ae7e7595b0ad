# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled kernels; same API and semantics as ``_purepy``."""


def merge(tuple a, tuple b):
    return _merge(a, b)


cdef tuple _merge(tuple a, tuple b):
    cdef Py_ssize_t la = len(a), lb = len(b), x = 0, y = 0
    cdef long ia, sa, ea, ib, sb, eb, e
    cdef tuple ta, tb
    if la == 0:
        return b
    if lb == 0:
        return a
    cdef list out = []
    while x < la and y < lb:
        ta = <tuple>a[x]
        tb = <tuple>b[y]
        ia = ta[0]; sa = ta[1]
        ib = tb[0]; sb = tb[1]
        if ia == ib and sa == sb:
            ea = ta[2]; eb = tb[2]
            e = ea + eb
            if e != 0:
                out.append((ia, sa, e))
            x += 1
            y += 1
        elif ia < ib or (ia == ib and sa < sb):
            out.append(ta)
            x += 1
        else:
            out.append(tb)
            y += 1
    while x < la:
        out.append(a[x])
        x += 1
    while y < lb:
        out.append(b[y])
        y += 1
    return tuple(out)


def shifted(tuple template, long shift, long sign):
    return _shifted(template, shift, sign)


cdef tuple _shifted(tuple template, long shift, long sign):
    cdef list out = []
    cdef tuple t
    for t in template:
        out.append((t[0], <long>t[1] + shift, sign * <long>t[2]))
    return tuple(out)


def signatures(tuple items, int n):
    return _signatures(items, n)


cdef list _signatures(tuple items, int n):
    cdef list out = [(0, 0, None, None)] * n
    cdef Py_ssize_t k = 0, start, last_best, total_items = len(items)
    cdef long color, run, best, eps
    cdef tuple t
    cdef object n_f, n_e
    while k < total_items:
        t = <tuple>items[k]
        color = t[0]
        run = 0
        best = 0
        n_f = None
        last_best = -1
        start = k
        while k < total_items:
            t = <tuple>items[k]
            if <long>t[0] != color:
                break
            run += <long>t[2]
            if run > best:
                best = run
                n_f = t[1]
                last_best = k
            elif run == best:
                last_best = k
            k += 1
        eps = best - run
        n_e = None
        if eps > 0:
            if last_best >= 0:
                n_e = <long>(<tuple>items[last_best + 1])[1] - 1
            else:
                n_e = <long>(<tuple>items[start])[1] - 1
        out[color - 1] = (best, eps, n_f, n_e)
    return out


def epsilons_vanish(tuple items):
    cdef Py_ssize_t k = 0, j, idx, total_items = len(items)
    cdef long color, suffix
    while k < total_items:
        color = (<tuple>items[k])[0]
        j = k
        while j < total_items and <long>(<tuple>items[j])[0] == color:
            j += 1
        suffix = 0
        idx = j - 1
        while idx >= k:
            suffix += <long>(<tuple>items[idx])[2]
            if suffix < 0:
                return False
            idx -= 1
        k = j
    return True


def neighbors(tuple items, int n, tuple templates):
    cdef list out = []
    cdef Py_ssize_t color = 0
    cdef tuple sig
    cdef object down, up
    for sig in _signatures(items, n):
        down = None
        up = None
        if <long>sig[0] != 0:
            down = _merge(items, _shifted(<tuple>templates[color], <long>sig[2], -1))
        if <long>sig[1] != 0:
            up = _merge(items, _shifted(<tuple>templates[color], <long>sig[3], 1))
        out.append((down, up))
        color += 1
    return out
