"""Pure-Python kernels. ``_speedups.pyx`` mirrors this module exactly.

A monomial is carried as a tuple of ``(index, shift, exponent)`` triples
sorted by ``(index, shift)`` with no zero exponents.
"""


def merge(a, b):
    """Exponent-wise sum of two canonical item tuples."""
    if not a:
        return b
    if not b:
        return a
    out = []
    la, lb = len(a), len(b)
    x = y = 0
    while x < la and y < lb:
        ia, sa, ea = a[x]
        ib, sb, eb = b[y]
        if ia == ib and sa == sb:
            e = ea + eb
            if e:
                out.append((ia, sa, e))
            x += 1
            y += 1
        elif (ia, sa) < (ib, sb):
            out.append(a[x])
            x += 1
        else:
            out.append(b[y])
            y += 1
    if x < la:
        out.extend(a[x:])
    if y < lb:
        out.extend(b[y:])
    return tuple(out)


def shifted(template, shift, sign):
    """Items of ``template`` with every shift moved by ``shift`` and exponents scaled by ``sign``."""
    return tuple((i, s + shift, sign * e) for i, s, e in template)


def signatures(items, n):
    """Per color 1..n, the tuple ``(phi, eps, n_f, n_e)``.

    ``n_f`` is None when phi is 0, ``n_e`` is None when eps is 0.
    """
    out = [(0, 0, None, None)] * n
    k = 0
    total_items = len(items)
    while k < total_items:
        color = items[k][0]
        run = 0
        best = 0
        n_f = None
        # index of the last prefix position attaining ``best``; -1 is the empty prefix
        last_best = -1
        start = k
        while k < total_items and items[k][0] == color:
            run += items[k][2]
            if run > best:
                best = run
                n_f = items[k][1]
                last_best = k
            elif run == best:
                last_best = k
            k += 1
        eps = best - run
        n_e = None
        if eps > 0:
            # total < best, so a support point follows the last maximum
            n_e = items[last_best + 1 if last_best >= 0 else start][1] - 1
        out[color - 1] = (best, eps, n_f, n_e)
    return out


def epsilons_vanish(items):
    """True iff eps_i is 0 for every color, i.e. no raising operator applies."""
    k = 0
    total_items = len(items)
    while k < total_items:
        color = items[k][0]
        suffix = 0
        j = k
        while j < total_items and items[j][0] == color:
            j += 1
        # scan suffix sums from the top shift down
        for idx in range(j - 1, k - 1, -1):
            suffix += items[idx][2]
            if suffix < 0:
                return False
        k = j
    return True


def neighbors(items, n, templates):
    """All arrows out of one monomial: ``[(f_i items or None, e_i items or None)]`` for i = 1..n.

    ``templates[i - 1]`` holds the items of A_i(0).
    """
    out = []
    for color, (phi, eps, n_f, n_e) in enumerate(signatures(items, n)):
        down = merge(items, shifted(templates[color], n_f, -1)) if phi else None
        up = merge(items, shifted(templates[color], n_e, 1)) if eps else None
        out.append((down, up))
    return out
