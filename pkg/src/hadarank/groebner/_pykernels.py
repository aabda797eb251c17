"""Pure-Python reference kernels; ``_ckernels.pyx`` mirrors these signatures."""

from heapq import heapify, heappop, heappush

IMPLEMENTATION = "python"


def monomial_divides(a, b):
    """True when monomial ``a`` divides ``b``."""
    for x, y in zip(a, b):
        if x > y:
            return False
    return True


def monomial_lcm(a, b):
    return tuple([x if x > y else y for x, y in zip(a, b)])


def normal_form(f, basis, heapkey, budget):
    """Full reduction of the term dict ``f`` by ``basis``.

    ``basis`` is a list of ``(leading_monomial, terms)`` with monic leading
    terms.  ``budget`` is charged one step per reduction.
    """
    if not basis or not f:
        return dict(f)
    p = dict(f)
    heap = [(heapkey(m), m) for m in p]
    heapify(heap)
    rem = {}
    steps = 0
    while heap:
        m = heappop(heap)[1]
        c = p.pop(m, None)
        if c is None:
            continue
        for lm, g in basis:
            if monomial_divides(lm, m):
                shift = tuple([x - y for x, y in zip(m, lm)])
                for gm, gc in g.items():
                    if gm == lm:
                        continue
                    nm = tuple([x + y for x, y in zip(gm, shift)])
                    v = p.get(nm)
                    if v is None:
                        p[nm] = -c * gc
                        heappush(heap, (heapkey(nm), nm))
                    else:
                        v = v - c * gc
                        if v:
                            p[nm] = v
                        else:
                            del p[nm]
                steps += 1
                if steps >= 256:
                    budget.spend(steps)
                    steps = 0
                break
        else:
            rem[m] = c
    budget.spend(steps)
    return rem


def spoly(f, lmf, g, lmg):
    """S-polynomial of two monic term dicts."""
    lcm = monomial_lcm(lmf, lmg)
    sf = tuple([x - y for x, y in zip(lcm, lmf)])
    sg = tuple([x - y for x, y in zip(lcm, lmg)])
    out = {}
    for m, c in f.items():
        if m != lmf:
            out[tuple([x + y for x, y in zip(m, sf)])] = c
    for m, c in g.items():
        if m == lmg:
            continue
        nm = tuple([x + y for x, y in zip(m, sg)])
        v = out.get(nm)
        if v is None:
            out[nm] = -c
        else:
            v = v - c
            if v:
                out[nm] = v
            else:
                del out[nm]
    return out


def integer_rank(rows):
    """Rank of an integer matrix by fraction-free (Bareiss) elimination."""
    a = [list(r) for r in rows]
    nrows = len(a)
    if not nrows:
        return 0
    ncols = len(a[0])
    rank = 0
    prev = 1
    for c in range(ncols):
        piv = None
        for r in range(rank, nrows):
            if a[r][c] != 0:
                piv = r
                break
        if piv is None:
            continue
        a[rank], a[piv] = a[piv], a[rank]
        pr = a[rank]
        pv = pr[c]
        for r in range(rank + 1, nrows):
            row = a[r]
            f = row[c]
            for k in range(c + 1, ncols):
                row[k] = (pv * row[k] - f * pr[k]) // prev
            row[c] = 0
        prev = pv
        rank += 1
        if rank == nrows:
            break
    return rank
