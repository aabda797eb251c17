"""Buchberger's algorithm on raw term dicts.

Pairs are selected by the normal strategy (smallest lcm of leading monomials,
ties broken by pair indices) and pruned with the Gebauer-Moeller criteria.
"""

from __future__ import annotations

from heapq import heappop, heappush

from ..exactalg.rational import ONE
from . import kernels
from .budget import Budget


def monic(terms: dict, sortkey):
    lm = max(terms, key=sortkey)
    lc = terms[lm]
    if lc == 1:
        return lm, terms
    inv = ONE / lc
    return lm, {m: c * inv for m, c in terms.items()}


def _update(lms, pairs, heap, lmh, sortkey):
    """Add the basis element with leading monomial ``lmh`` (index ``len(lms)``)."""
    divides = kernels.monomial_divides
    lcm = kernels.monomial_lcm
    k = len(lms)
    # criterion B on existing pairs
    for pair in list(pairs):
        i, j = pair
        L = pairs[pair]
        if divides(lmh, L) and lcm(lms[i], lmh) != L and lcm(lms[j], lmh) != L:
            del pairs[pair]
    classes: dict[tuple, list[int]] = {}
    for i, lm in enumerate(lms):
        classes.setdefault(lcm(lm, lmh), []).append(i)
    kept: list[tuple] = []
    for L in sorted(classes, key=sortkey):
        if any(divides(K, L) for K in kept):
            continue
        kept.append(L)
        members = classes[L]
        if any(all(a == 0 or b == 0 for a, b in zip(lms[i], lmh)) for i in members):
            continue  # coprime leading monomials: the whole class reduces to zero
        i = min(members)
        pairs[(i, k)] = L
        heappush(heap, (sortkey(L), k, i))
    lms.append(lmh)


def buchberger(polys, order, budget: Budget) -> list[tuple[tuple, dict]]:
    """Reduced Groebner basis of the term dicts ``polys``.

    Returns ``[(leading_monomial, monic_terms), ...]`` sorted by decreasing
    leading monomial.  ``[(0..0, {0..0: 1})]`` signals the unit ideal.
    """
    sortkey, heapkey = order.sortkey, order.heapkey
    budget.start()
    polys = [p for p in polys if p]
    if not polys:
        return []
    nvars = len(next(iter(polys[0])))
    one = (0,) * nvars
    unit = [(one, {one: ONE})]

    basis: list[tuple[tuple, dict]] = []
    lms: list[tuple] = []
    pairs: dict[tuple[int, int], tuple] = {}
    heap: list = []

    def add(h):
        lm, h = monic(h, sortkey)
        if not any(lm):
            return True
        _update(lms, pairs, heap, lm, sortkey)
        basis.append((lm, h))
        return False

    for f in sorted(polys, key=lambda p: sortkey(max(p, key=sortkey))):
        h = kernels.normal_form(f, basis, heapkey, budget)
        if h and add(h):
            return unit
    while heap:
        _, j, i = heappop(heap)
        if (i, j) not in pairs:
            continue
        del pairs[(i, j)]
        budget.spend(1)
        s = kernels.spoly(basis[i][1], basis[i][0], basis[j][1], basis[j][0])
        h = kernels.normal_form(s, basis, heapkey, budget)
        if h and add(h):
            return unit
    return reduce_basis(basis, order, budget)


def reduce_basis(basis, order, budget):
    """Minimalize and inter-reduce a Groebner basis."""
    sortkey, heapkey = order.sortkey, order.heapkey
    divides = kernels.monomial_divides
    minimal: list[tuple[tuple, dict]] = []
    for lm, g in sorted(basis, key=lambda e: sortkey(e[0])):
        if not any(divides(m, lm) for m, _ in minimal):
            minimal.append((lm, g))
    out = []
    for lm, g in minimal:
        tail = {m: c for m, c in g.items() if m != lm}
        red = kernels.normal_form(tail, minimal, heapkey, budget)
        red[lm] = ONE
        out.append((lm, red))
    out.sort(key=lambda e: sortkey(e[0]), reverse=True)
    return out
