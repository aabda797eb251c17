"""Conciseness, strong conciseness, binomial containment and witness points."""

from __future__ import annotations

import random
from dataclasses import dataclass
from itertools import combinations_with_replacement
from math import comb

from .errors import BudgetExceeded, EmptyVariety, WitnessNotFound
from .exactalg.ideal import Ideal
from .exactalg.points import ProjPoint
from .exactalg.polynomial import Polynomial
from .groebner import GREVLEX, groebner_basis, projective_dimension, radical_membership

MAX_MONOMIALS = 50_000


@dataclass(frozen=True)
class ConcisenessReport:
    concise: tuple[bool, ...]
    strongly_concise: tuple[bool, ...]

    @property
    def is_concise(self) -> bool:
        return all(self.concise)

    @property
    def is_strongly_concise(self) -> bool:
        return all(self.strongly_concise)

    @property
    def failing(self) -> list[int]:
        return [i for i, ok in enumerate(self.strongly_concise) if not ok]

    def to_json(self) -> dict:
        return {
            "concise": list(self.concise),
            "strongly_concise": list(self.strongly_concise),
            "overall_concise": self.is_concise,
            "overall_strongly_concise": self.is_strongly_concise,
            "failing_indices": self.failing,
        }


def _x(ideal: Ideal, i: int) -> Polynomial:
    return ideal.ring.gen(i)


def concise_at(ideal: Ideal, i: int, budget=None) -> bool:
    """V(ideal) is not inside the coordinate hyperplane x_i = 0."""
    return not radical_membership(_x(ideal, i), ideal, budget)


def is_concise(ideal: Ideal, budget=None) -> list[bool]:
    return [concise_at(ideal, i, budget) for i in range(ideal.ring.nvars)]


def _slice_test(ideal: Ideal, i: int, budget=None) -> bool:
    ring = ideal.ring
    others = ring.one()
    for j in range(ring.nvars):
        if j != i:
            others = others * ring.gen(j)
    return not radical_membership(others, ideal + _x(ideal, i), budget)


def strongly_concise_at(ideal: Ideal, i: int, budget=None) -> bool:
    """V(ideal) ∩ {x_i = 0} is not covered by the other coordinate hyperplanes.

    Reported together with conciseness at i, so a True here always implies
    conciseness at i.
    """
    return concise_at(ideal, i, budget) and _slice_test(ideal, i, budget)


def is_strongly_concise(ideal: Ideal, budget=None) -> ConcisenessReport:
    concise = tuple(is_concise(ideal, budget))
    strong = tuple(c and _slice_test(ideal, i, budget) for i, c in enumerate(concise))
    return ConcisenessReport(concise, strong)


# -- binomials --------------------------------------------------------------

@dataclass(frozen=True)
class BinomialHit:
    """A monomial (``kind='monomial'``) or binomial (``kind='binomial'``) in the ideal."""

    polynomial: Polynomial
    kind: str
    degree: int

    def to_json(self) -> dict:
        return {"kind": self.kind, "polynomial": str(self.polynomial), "degree": self.degree}


def _monomials_of_degree(n: int, d: int):
    for combo in combinations_with_replacement(range(n), d):
        e = [0] * n
        for i in combo:
            e[i] += 1
        yield tuple(e)


def binomial_search(ideal: Ideal, degree_bound: int, budget=None, max_monomials: int = MAX_MONOMIALS):
    """First monomial or binomial of degree <= ``degree_bound`` lying in the ideal.

    Degree by degree, normal forms of all monomials are grouped up to scaling;
    two monomials with proportional normal forms give a binomial in the
    ideal, a monomial with zero normal form is itself in the ideal.
    """
    if degree_bound < 1:
        raise ValueError("degree bound must be at least 1")
    ring = ideal.ring
    n = ring.nvars
    gb = groebner_basis(ideal, GREVLEX, budget)
    for d in range(1, degree_bound + 1):
        if comb(n + d - 1, d) > max_monomials:
            raise BudgetExceeded(f"{comb(n + d - 1, d)} monomials of degree {d} exceed the guard {max_monomials}")
        monos = sorted(_monomials_of_degree(n, d), key=GREVLEX.sortkey, reverse=True)
        seen: dict[frozenset, tuple[tuple, object]] = {}
        for m in monos:
            nf = gb.normal_form(ring.monomial(m))
            if nf.is_zero():
                return BinomialHit(ring.monomial(m), "monomial", d)
            lead = max(nf.raw(), key=GREVLEX.sortkey)
            lc = nf.raw()[lead]
            key = frozenset((k, v / lc) for k, v in nf.raw().items())
            if key in seen:
                m0, lc0 = seen[key]
                # NF(x^m0) = lc0*K and NF(x^m) = lc*K
                poly = ring.monomial(m0, lc) - ring.monomial(m, lc0)
                return BinomialHit(poly.integer_primitive(), "binomial", d)
            seen[key] = (m, lc)
    return None


def default_degree_bound(ideal: Ideal) -> int:
    return max(1, 2 * max((g.degree() for g in ideal.generators), default=0))


@dataclass(frozen=True)
class FinitenessVerdict:
    """``GenericFinite``, ``GenericInfinite`` or ``Unknown`` plus the evidence."""

    verdict: str
    reason: str
    index: int | None = None
    binomial: BinomialHit | None = None
    degree_bound: int | None = None

    def to_json(self) -> dict:
        out = {"verdict": self.verdict, "reason": self.reason, "degree_bound": self.degree_bound}
        if self.index is not None:
            out["index"] = self.index
        if self.binomial is not None:
            out["binomial"] = self.binomial.to_json()
        return out


def generic_rank_finiteness(ideal: Ideal, degree_bound: int | None = None, accept_bound: bool = False,
                            budget=None) -> FinitenessVerdict:
    """Decide whether the generic Hadamard rank is finite.

    The input is assumed prime.  Without an effective degree bound for
    binomial containment a negative search alone yields ``Unknown`` unless
    ``accept_bound`` is set or strong conciseness settles the question.
    """
    D = default_degree_bound(ideal) if degree_bound is None else degree_bound
    for i, ok in enumerate(is_concise(ideal, budget)):
        if not ok:
            return FinitenessVerdict("GenericInfinite", "NotConcise", index=i, degree_bound=D)
    hit = binomial_search(ideal, D, budget)
    if hit is not None:
        return FinitenessVerdict("GenericInfinite", "BinomialFound", binomial=hit, degree_bound=D)
    if is_strongly_concise(ideal, budget).is_strongly_concise:
        return FinitenessVerdict("GenericFinite", "StronglyConcise", degree_bound=D)
    if accept_bound:
        return FinitenessVerdict("GenericFinite", "BinomialSearchExhausted", degree_bound=D)
    return FinitenessVerdict("Unknown", "DegreeBoundReached", degree_bound=D)


# -- witnesses ---------------------------------------------------------------

def _witness_key(p: ProjPoint):
    ints = p.integer_coords()
    return (max(abs(v) for v in ints), ints)


def _random_linear_form(ring, rng, bound):
    while True:
        coeffs = [rng.randint(-bound, bound) for _ in range(ring.nvars)]
        if any(coeffs):
            return sum((ring.gen(i) * c for i, c in enumerate(coeffs) if c), ring.zero())


def strong_conciseness_witness(ideal: Ideal, i: int, rng=None, retries: int = 6, budget=None,
                               height: int = 10) -> ProjPoint:
    """A point of V(ideal) with x_i = 0 and every other coordinate nonzero.

    V(ideal + (x_i)) is cut down to finitely many points by random rational
    hyperplanes and solved exactly.  Rational witnesses are preferred: among
    them the one of least height is returned.
    """
    from .rankengine.solve import solve_projective

    if not strongly_concise_at(ideal, i, budget):
        raise WitnessNotFound(f"not strongly concise at coordinate {i}: no witness exists")
    rng = rng if isinstance(rng, random.Random) else random.Random(rng)
    fiber = ideal + _x(ideal, i)
    try:
        d = projective_dimension(fiber, budget)
    except EmptyVariety as exc:  # pragma: no cover - excluded by the test above
        raise WitnessNotFound(str(exc)) from exc
    ring = ideal.ring
    fallback = None
    for attempt in range(retries):
        slices = [_random_linear_form(ring, rng, height) for _ in range(d)]
        cut = Ideal.of(ring, list(fiber.generators) + slices, projective=True)
        try:
            sols = solve_projective(cut, budget, seed=attempt)
        except Exception:  # degenerate slice (positive-dimensional cut): reslice
            continue
        good = [
            s.point for s in sols
            if s.coords[i] == 0 and all(s.coords[j] != 0 for j in range(ring.nvars) if j != i)
        ]
        rational = [p for p in good if p.is_rational()]
        if rational:
            return min(rational, key=_witness_key)
        if good and fallback is None:
            fallback = good[0]
        if d == 0:
            break
    if fallback is not None:
        return fallback
    raise WitnessNotFound(f"no witness found at coordinate {i} after {retries} slicings")
