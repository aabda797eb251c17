"""Groebner bases of :class:`Ideal` objects and the operations built on them."""

from __future__ import annotations

from collections import OrderedDict
from itertools import combinations
from typing import Iterable

from ..errors import EmptyVariety, RingMismatch
from ..exactalg.ideal import Ideal
from ..exactalg.polynomial import Polynomial, Ring
from . import cache, kernels
from .budget import as_budget
from .engine import buchberger as _buchberger
from .orders import GREVLEX, MonomialOrder, block

_MEMO: "OrderedDict[tuple, GroebnerBasis]" = OrderedDict()
_MEMO_SIZE = 1024


class GroebnerBasis:
    """Reduced, monic Groebner basis of an ideal for a fixed order."""

    def __init__(self, ring: Ring, order: MonomialOrder, rows, ideal: Ideal | None = None, steps: int = 0):
        self.ring = ring
        self.steps = steps
        self.order = order
        self.rows = rows
        self.ideal = ideal
        self.basis = tuple(Polynomial._raw(ring, g) for _, g in rows)

    def is_unit(self) -> bool:
        return len(self.rows) == 1 and not any(self.rows[0][0])

    def is_zero(self) -> bool:
        return not self.rows

    def leading_monomials(self) -> list[tuple]:
        return [lm for lm, _ in self.rows]

    def normal_form(self, f: Polynomial, budget=None) -> Polynomial:
        if f.ring != self.ring:
            raise RingMismatch(f"{f.ring} vs {self.ring}")
        rem = kernels.normal_form(f.raw(), self.rows, self.order.heapkey, as_budget(budget))
        return Polynomial._raw(self.ring, rem)

    def contains(self, f: Polynomial) -> bool:
        return self.normal_form(f).is_zero()

    def as_ideal(self, projective: bool | None = None) -> Ideal:
        return Ideal.of(self.ring, self.basis, projective)

    def __eq__(self, other):
        if not isinstance(other, GroebnerBasis):
            return NotImplemented
        return self.ring == other.ring and self.order == other.order and self.basis == other.basis

    def __hash__(self):
        return hash((self.ring, self.order, self.basis))

    def __iter__(self):
        return iter(self.basis)

    def __len__(self):
        return len(self.basis)

    def __repr__(self):
        return f"GroebnerBasis[{self.order.name}]({', '.join(str(g) for g in self.basis) or '0'})"


def groebner_basis(ideal: Ideal, order: MonomialOrder = GREVLEX, budget=None) -> GroebnerBasis:
    """Reduced Groebner basis (memoized in-process, optionally on disk).

    Reused results credit their original step count to ``budget.total`` so
    reported totals do not depend on what was cached.
    """
    budget = as_budget(budget)
    memo_key = (ideal.ring, order, ideal.key())
    hit = _MEMO.get(memo_key)
    if hit is not None:
        _MEMO.move_to_end(memo_key)
        budget.credit(hit.steps)
        return hit
    stored = cache.load(ideal, order)
    if stored is None:
        rows = _buchberger([g.raw() for g in ideal.generators], order, budget)
        steps = budget.spent
        cache.store(ideal, order, rows, steps)
    else:
        rows, steps = stored
        budget.credit(steps)
    gb = GroebnerBasis(ideal.ring, order, rows, ideal, steps)
    _MEMO[memo_key] = gb
    if len(_MEMO) > _MEMO_SIZE:
        _MEMO.popitem(last=False)
    return gb


buchberger = groebner_basis


def clear_memo():
    _MEMO.clear()


def normal_form(f: Polynomial, G: GroebnerBasis) -> Polynomial:
    return G.normal_form(f)


def is_unit_ideal(ideal: Ideal, budget=None) -> bool:
    return groebner_basis(ideal, GREVLEX, budget).is_unit()


def ideals_equal(I: Ideal, J: Ideal, budget=None) -> bool:
    """Equality of ideals as equality of reduced grevlex bases."""
    if I.ring != J.ring:
        return False
    return groebner_basis(I, GREVLEX, budget).basis == groebner_basis(J, GREVLEX, budget).basis


def _fresh_name(ring: Ring, base: str) -> str:
    name = base
    while name in ring.names:
        name = "_" + name
    return name


def radical_membership(f: Polynomial, ideal: Ideal, budget=None) -> bool:
    """``f`` vanishes on V(ideal): 1 lies in ideal + (1 - y f) with a fresh y."""
    if f.ring != ideal.ring:
        raise RingMismatch("polynomial and ideal live in different rings")
    if f.is_zero():
        return True
    gb = groebner_basis(ideal, GREVLEX, budget)
    if gb.contains(f):
        return True
    ring = ideal.ring
    ext = ring.extend([_fresh_name(ring, "y")])
    pos = list(range(ring.nvars))
    y = ext.gen(ring.nvars)
    gens = [g.embed(ext, pos) for g in ideal.generators]
    gens.append(ext.one() - y * f.embed(ext, pos))
    return is_unit_ideal(Ideal(ext, gens, projective=False), budget)


def eliminate(ideal: Ideal, drop_vars: Iterable[int], budget=None) -> Ideal:
    """Generators of the elimination ideal, living in the ring of kept variables.

    The kept ring preserves the names and relative order of the surviving
    variables; the returned generators form its reduced grevlex basis.
    """
    ring = ideal.ring
    drop = sorted(set(drop_vars))
    if any(i < 0 or i >= ring.nvars for i in drop):
        raise IndexError("variable index out of range")
    keep = [i for i in range(ring.nvars) if i not in set(drop)]
    if not keep:
        raise ValueError("cannot eliminate every variable")
    kept_ring = Ring(tuple(ring.names[i] for i in keep))
    if not drop:
        gb = groebner_basis(ideal, GREVLEX, budget)
        return Ideal.of(kept_ring, gb.basis, ideal.projective)
    perm = drop + keep  # new position -> old index
    new_ring = Ring(tuple(ring.names[i] for i in perm))
    where = {old: new for new, old in enumerate(perm)}
    gens = [g.embed(new_ring, [where[i] for i in range(ring.nvars)]) for g in ideal.generators]
    gb = groebner_basis(Ideal(new_ring, gens, ideal.projective), block(len(drop)), budget)
    k = len(drop)
    survivors = []
    for lm, g in gb.rows:
        if any(lm[:k]):
            continue
        survivors.append(Polynomial._raw(kept_ring, {m[k:]: c for m, c in g.items()}))
    out = Ideal.of(kept_ring, survivors, ideal.projective)
    # the block order restricts to grevlex on the kept block, so this is reduced already
    return Ideal.of(kept_ring, groebner_basis(out, GREVLEX, budget).basis, ideal.projective)


def intersect_ideals(I: Ideal, J: Ideal, budget=None) -> Ideal:
    """I ∩ J as the elimination of t from t*I + (1 - t)*J."""
    if I.ring != J.ring:
        raise RingMismatch("ideals live in different rings")
    ring = I.ring
    ext = Ring((_fresh_name(ring, "t"),) + ring.names)
    pos = list(range(1, ring.nvars + 1))
    t = ext.gen(0)
    gens = [t * g.embed(ext, pos) for g in I.generators]
    gens += [(ext.one() - t) * g.embed(ext, pos) for g in J.generators]
    if not gens:
        return Ideal.zero(ring)
    elim = eliminate(Ideal(ext, gens, projective=False), [0], budget)
    return Ideal.of(ring, [Polynomial._raw(ring, dict(g.raw())) for g in elim.generators], I.projective and J.projective)


def _min_hitting_set(supports: list[frozenset], n: int) -> int:
    supports = [s for s in supports]
    if not supports:
        return 0
    for k in range(1, n + 1):
        for cand in combinations(range(n), k):
            cs = set(cand)
            if all(s & cs for s in supports):
                return k
    return n


def krull_dimension(ideal: Ideal, budget=None) -> int:
    """Dimension of V(ideal) in affine space (the affine cone for homogeneous ideals).

    Computed from the leading-monomial ideal: the largest variable set
    containing the support of no leading monomial.  Returns -1 for the unit ideal.
    """
    gb = groebner_basis(ideal, GREVLEX, budget)
    if gb.is_unit():
        return -1
    n = ideal.ring.nvars
    supports = [frozenset(i for i, e in enumerate(lm) if e) for lm in gb.leading_monomials()]
    return n - _min_hitting_set(supports, n)


def projective_dimension(ideal: Ideal, budget=None) -> int:
    """Dimension of the projective variety cut out by a homogeneous ideal."""
    d = krull_dimension(ideal, budget)
    if d <= 0:
        raise EmptyVariety("the ideal defines the empty projective variety")
    return d - 1


def standard_monomials(gb: GroebnerBasis) -> list[tuple]:
    """Monomials outside the leading-term ideal (zero-dimensional ideals only)."""
    n = gb.ring.nvars
    lms = gb.leading_monomials()
    bounds = []
    for i in range(n):
        pure = [lm[i] for lm in lms if lm[i] and not any(lm[j] for j in range(n) if j != i)]
        if not pure:
            raise ValueError("ideal is not zero-dimensional")
        bounds.append(min(pure))
    divides = kernels.monomial_divides
    out = []

    def rec(prefix):
        i = len(prefix)
        if i == n:
            m = tuple(prefix)
            if not any(divides(lm, m) for lm in lms):
                out.append(m)
            return
        for e in range(bounds[i]):
            rec(prefix + [e])

    rec([])
    out.sort(key=gb.order.sortkey)
    return out
