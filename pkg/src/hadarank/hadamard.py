"""Hadamard products and powers of varieties, rank loci, diagonal translation.

Everything is computed on affine cones: the product of two cones is cut out
by eliminating x and y from ``I_X(x) + I_Y(y) + (z_i - x_i*y_i)``.
"""

from __future__ import annotations

import threading
from pathlib import Path

from .errors import BudgetExceeded, ZeroCoordinate
from .exactalg.ideal import Ideal
from .exactalg.parse import format_ideal
from .exactalg.points import ProjPoint, ones
from .exactalg.polynomial import Polynomial, Ring
from .exactalg.rational import ONE
from .groebner import GREVLEX, eliminate, groebner_basis, intersect_ideals, projective_dimension


def canonical(ideal: Ideal, budget=None) -> Ideal:
    """The ideal re-generated by its reduced grevlex basis."""
    gb = groebner_basis(ideal, GREVLEX, budget)
    return Ideal.of(ideal.ring, gb.basis, ideal.projective)


def variety_product(I_X: Ideal, I_Y: Ideal, budget=None) -> Ideal:
    """Ideal of the Hadamard product of V(I_X) and V(I_Y) in the same P^N."""
    if I_X.ring != I_Y.ring:
        raise ValueError("both ideals must live in the same ring")
    ring = I_X.ring
    n = ring.nvars
    big = Ring(tuple(f"_x{i}" for i in range(n)) + tuple(f"_y{i}" for i in range(n)) + ring.names)
    xs = list(range(n))
    ys = list(range(n, 2 * n))
    gens = [g.embed(big, xs) for g in I_X.generators]
    gens += [g.embed(big, ys) for g in I_Y.generators]
    for i in range(n):
        gens.append(big.gen(2 * n + i) - big.gen(i) * big.gen(n + i))
    elim = eliminate(Ideal(big, gens, projective=False), xs + ys, budget)
    return Ideal.of(ring, [Polynomial._raw(ring, dict(g.raw())) for g in elim.generators], True)


class PowerCache:
    """Hadamard powers of one base variety, with their projective dimensions.

    Writes are serialized by a lock; reads of existing entries need none.
    """

    def __init__(self, base: Ideal):
        self.base = canonical(base)
        self._powers: dict[int, Ideal] = {1: self.base}
        self._dims: dict[int, int] = {}
        self._lock = threading.Lock()

    def __contains__(self, m: int) -> bool:
        return m in self._powers

    def get(self, m: int) -> Ideal | None:
        return self._powers.get(m)

    def put(self, m: int, ideal: Ideal) -> None:
        with self._lock:
            self._powers.setdefault(m, ideal)

    def cached_powers(self) -> list[int]:
        return sorted(self._powers)

    def dimension(self, m: int, budget=None) -> int:
        if m not in self._dims:
            d = projective_dimension(variety_power(self.base, m, self, budget), budget)
            with self._lock:
                self._dims[m] = d
        return self._dims[m]


_CACHES: dict[tuple, PowerCache] = {}


def power_cache(I_X: Ideal) -> PowerCache:
    key = (I_X.ring, I_X.key())
    if key not in _CACHES:
        _CACHES[key] = PowerCache(I_X)
    return _CACHES[key]


def variety_power(I_X: Ideal, m: int, cache: PowerCache | None = None, budget=None) -> Ideal:
    """Ideal of the m-th Hadamard power, m >= 1."""
    if m < 1:
        raise ValueError("powers are defined for m >= 1")
    cache = cache or power_cache(I_X)
    hit = cache.get(m)
    if hit is not None:
        return hit
    try:
        half = m // 2
        if half >= 1 and half in cache:
            sq = variety_product(cache.get(half), cache.get(half), budget)
            result = sq if m % 2 == 0 else variety_product(cache.base, sq, budget)
        else:
            k = max(j for j in cache.cached_powers() if j < m)
            result = cache.get(k)
            for j in range(k + 1, m + 1):
                result = variety_product(cache.base, result, budget)
                cache.put(j, result)
    except BudgetExceeded as exc:
        raise BudgetExceeded(f"budget exceeded while computing power {m}: {exc}", spent=exc.spent) from exc
    cache.put(m, result)
    return cache.get(m)


def contains_ones(I_X: Ideal) -> bool:
    return I_X.vanishes_at(ones(I_X.N))


def rank_locus(I_X: Ideal, m: int, cache: PowerCache | None = None, budget=None) -> Ideal:
    """Ideal of the union of the first m Hadamard powers."""
    if m < 1:
        raise ValueError("m must be positive")
    if contains_ones(I_X):
        return variety_power(I_X, m, cache, budget)
    acc = variety_power(I_X, 1, cache, budget)
    for j in range(2, m + 1):
        acc = intersect_ideals(acc, variety_power(I_X, j, cache, budget), budget)
    return canonical(acc, budget)


def power_membership(p: ProjPoint, I_X: Ideal, m: int, cache: PowerCache | None = None, budget=None) -> bool:
    """Whether p lies in the (Zariski-closed) m-th power.

    This is closure membership: a True answer certifies border rank <= m,
    not the existence of an actual m-fold decomposition.
    """
    if len(p) != I_X.ring.nvars:
        raise ValueError("point and ideal live in different projective spaces")
    return variety_power(I_X, m, cache, budget).vanishes_at(p)


def translate_ideal(I_X: Ideal, q: ProjPoint) -> Ideal:
    """Ideal of q * V(I_X): substitute x_i -> x_i / q_i and clear denominators."""
    if any(c == 0 for c in q.coords):
        raise ZeroCoordinate(f"{q} has a zero coordinate")
    inv = [ONE / c for c in q.coords]
    gens = []
    for g in I_X.generators:
        terms = {}
        for mono, c in g.raw().items():
            v = c
            for i, e in enumerate(mono):
                if e:
                    v = v * inv[i] ** e
            terms[mono] = v
        gens.append(Polynomial(I_X.ring, terms).integer_primitive())
    return Ideal(I_X.ring, gens, I_X.projective)


def export_power(path, I_X: Ideal, m: int, cache: PowerCache | None = None) -> None:
    ideal = variety_power(I_X, m, cache)
    Path(path).write_text(format_ideal(ideal, [f"power {m} of {I_X.key()}"]))
