"""Hadamard rank and border rank of explicit points.

A decomposition p = q_1 * ... * q_m is searched for by splitting over zero
patterns: every zero coordinate of p is assigned to one factor that is forced
to vanish there.  Each pattern gives a polynomial system whose unit-ideal
Groebner basis certifies that no decomposition of that shape exists.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field

from ..conciseness import _slice_test, strong_conciseness_witness, strongly_concise_at
from ..errors import (
    BudgetExceeded,
    IncompatibleExtension,
    IrrationalWitnessesOnly,
    NotStronglyConcise,
    NotZeroDimensional,
    WitnessNotFound,
)
from ..exactalg.algebraic import AlgNum
from ..exactalg.ideal import Ideal
from ..exactalg.parse import parse_polynomial
from ..exactalg.points import ProjPoint, hadamard_product
from ..exactalg.polynomial import Ring
from ..exactalg.rational import ONE, ZERO, rat
from ..groebner import GREVLEX, groebner_basis, krull_dimension
from ..groebner.budget import Budget, as_budget
from ..hadamard import power_membership
from .solve import solve_affine

VERDICTS = ("RankEquals", "RankAtMost", "RankGreaterThan", "BorderRank", "ProvablyInfinite", "Unknown")


@dataclass(frozen=True)
class ZeroPattern:
    """Forced-zero coordinate sets, one per factor."""

    zeros: tuple[frozenset, ...]

    @property
    def m(self) -> int:
        return len(self.zeros)

    def to_json(self) -> list[list[int]]:
        return [sorted(z) for z in self.zeros]

    @classmethod
    def from_json(cls, data) -> "ZeroPattern":
        return cls(tuple(frozenset(z) for z in data))


def _set_partitions(items: list, max_blocks: int):
    """Set partitions of ``items`` into at most ``max_blocks`` blocks."""
    if not items:
        yield []
        return
    first, rest = items[0], items[1:]
    for part in _set_partitions(rest, max_blocks):
        for k in range(len(part)):
            yield part[:k] + [[first] + part[k]] + part[k + 1:]
        if len(part) < max_blocks:
            yield [[first]] + part


def zero_patterns(p: ProjPoint, m: int) -> list[ZeroPattern]:
    """Zero patterns of m factors for p, one per orbit under permuting factors.

    Ordered by the number of factors carrying forced zeros, so the most
    concentrated patterns come first.
    """
    zs = sorted(p.zero_set())
    out = []
    for part in _set_partitions(zs, m):
        blocks = sorted((frozenset(b) for b in part), key=lambda b: sorted(b))
        blocks += [frozenset()] * (m - len(blocks))
        out.append(ZeroPattern(tuple(blocks)))
    out = sorted(set(out), key=lambda pat: (sum(1 for z in pat.zeros if z), [sorted(z) for z in pat.zeros]))
    return out


def _pivot(p: ProjPoint) -> int:
    return next(i for i, c in enumerate(p.coords) if c != 0)


def _common_field(p: ProjPoint):
    fields = {c.field for c in p.coords if isinstance(c, AlgNum) and not c.is_rational()}
    if len(fields) > 1:
        raise IncompatibleExtension("point coordinates live in different algebraic extensions")
    return next(iter(fields), None)


@dataclass(frozen=True)
class PatternSystem:
    """The polynomial system of one zero pattern.

    Every factor is scaled so its coordinate ``pivot`` equals 1; this is legal
    because p_pivot != 0 forces that coordinate to be nonzero on every factor.
    """

    pattern: ZeroPattern
    pivot: int
    ideal: Ideal
    slots: tuple  # slots[k][i]: None (forced zero), "one" or a variable index
    theta: int | None = None


def build_system(p: ProjPoint, I_X: Ideal, pattern: ZeroPattern) -> PatternSystem:
    n = I_X.ring.nvars
    if len(p) != n:
        raise ValueError("point and ideal live in different projective spaces")
    j = _pivot(p)
    field_ = _common_field(p)
    names: list[str] = []
    slots = []
    for k, zk in enumerate(pattern.zeros):
        if j in zk:
            raise ValueError("a factor cannot vanish at the pivot coordinate")
        row = []
        for i in range(n):
            if i in zk:
                row.append(None)
            elif i == j:
                row.append("one")
            else:
                row.append(len(names))
                names.append(f"q{k}_{i}")
        slots.append(tuple(row))
    theta = None
    if field_ is not None:
        theta = len(names)
        names.append("theta")
    ring = Ring(tuple(names))
    gens = []

    def image(slot):
        if slot is None:
            return ring.zero()
        if slot == "one":
            return ring.one()
        return ring.gen(slot)

    for row in slots:
        images = [image(s) for s in row]
        for g in I_X.generators:
            h = g.compose(images, ring)
            if not h.is_zero():
                gens.append(h)
    pj = p.coords[j]

    def scalar(c):
        v = c / pj
        if isinstance(v, AlgNum) and not v.is_rational():
            t = ring.gen(theta)
            return sum((t ** e * a for e, a in enumerate(v.residue) if a), ring.zero())
        return ring.const(v.as_rational() if isinstance(v, AlgNum) else v)

    for i in range(n):
        if i == j or p.coords[i] == 0:
            continue
        prod = ring.one()
        for row in slots:
            prod = prod * image(row[i])
        gens.append(prod - scalar(p.coords[i]))
    if theta is not None:
        t = ring.gen(theta)
        gens.append(sum((t ** e * a for e, a in enumerate(field_.minpoly) if a), ring.zero()))
    return PatternSystem(pattern, j, Ideal.of(ring, gens, projective=False), tuple(slots), theta)


@dataclass
class PatternResult:
    system: PatternSystem
    status: str  # "infeasible", "feasible" or "unknown"

    def to_json(self) -> dict:
        return {
            "pattern": self.system.pattern.to_json(),
            "pivot": self.system.pivot,
            "status": self.status,
            "system": [str(g) for g in self.system.ideal.generators],
        }


@dataclass
class DecompositionResult:
    """``exists`` is True, False, or None when a pattern ran out of budget."""

    exists: bool | None
    m: int
    patterns: list[PatternResult]

    @property
    def feasible(self) -> list[PatternResult]:
        return [r for r in self.patterns if r.status == "feasible"]

    @property
    def infeasible(self) -> list[PatternResult]:
        return [r for r in self.patterns if r.status == "infeasible"]


def decomposition_exists(p: ProjPoint, I_X: Ideal, m: int, budget=None, stop_early: bool = True) -> DecompositionResult:
    """Exact test for p = q_1 * ... * q_m with every q_k on V(I_X)."""
    if m < 1:
        raise ValueError("m must be positive")
    budget = as_budget(budget)
    results = []
    unknown = False
    for pattern in zero_patterns(p, m):
        system = build_system(p, I_X, pattern)
        try:
            unit = groebner_basis(system.ideal, GREVLEX, budget).is_unit()
        except BudgetExceeded:
            results.append(PatternResult(system, "unknown"))
            unknown = True
            continue
        results.append(PatternResult(system, "infeasible" if unit else "feasible"))
        if not unit and stop_early:
            return DecompositionResult(True, m, results)
    if any(r.status == "feasible" for r in results):
        return DecompositionResult(True, m, results)
    return DecompositionResult(None if unknown else False, m, results)


# -- witnesses ---------------------------------------------------------------

def _factors_from_solution(system: PatternSystem, values) -> list[ProjPoint]:
    out = []
    for row in system.slots:
        coords = []
        for s in row:
            if s is None:
                coords.append(ZERO)
            elif s == "one":
                coords.append(ONE)
            else:
                coords.append(values[s])
        out.append(ProjPoint(coords))
    return out


def verify_decomposition(p: ProjPoint, I_X: Ideal, factors) -> bool:
    """Each factor lies on V(I_X) and their coordinate-wise product is p."""
    if not factors:
        return False
    try:
        if not all(I_X.vanishes_at(q) for q in factors):
            return False
        return hadamard_product(list(factors)) == p
    except (ArithmeticError, ValueError):
        return False


def _witness_key(factors):
    heights = [q.height() for q in factors]
    return (max(heights), sum(heights), sorted((q.integer_coords() for q in factors), reverse=True))


def _order_factors(factors):
    if all(q.is_rational() for q in factors):
        return sorted(factors, key=lambda q: q.integer_coords(), reverse=True)
    return list(factors)


def _slices(ring: Ring, nvars: int, d: int, rng: random.Random, attempt: int, height: int):
    """Affine slices: coordinate slices with small values first, then random hyperplanes."""
    if attempt < 12:
        chosen = rng.sample(range(nvars), d) if d <= nvars else list(range(nvars))
        vals = [rng.choice((1, -1, 2, -2, 3, -3)) for _ in chosen]
        return [ring.gen(v) - ring.const(rat(c)) for v, c in zip(chosen, vals)]
    out = []
    for _ in range(d):
        coeffs = [rng.randint(-height, height) for _ in range(nvars)]
        if not any(coeffs):
            coeffs[0] = 1
        form = sum((ring.gen(i) * c for i, c in enumerate(coeffs) if c), ring.zero())
        out.append(form - ring.const(rng.randint(-height, height)))
    return out


def witness_from_system(p: ProjPoint, I_X: Ideal, system: PatternSystem, seed: int = 0,
                        attempts: int = 24, budget=None, height: int = 10) -> list[ProjPoint]:
    """Exact factors from a feasible pattern system, verified before returning."""
    if system.theta is not None:
        raise WitnessNotFound("witness extraction needs a point with rational coordinates")
    budget = as_budget(budget)
    ideal = system.ideal
    ring = ideal.ring
    d = krull_dimension(ideal, budget)
    if d < 0:
        raise WitnessNotFound("the pattern system has no solutions")
    rng = random.Random(seed)
    fallback = None
    for attempt in range(attempts if d > 0 else 1):
        cut = ideal
        if d > 0:
            cut = Ideal.of(ring, list(ideal.generators) + _slices(ring, ring.nvars, d, rng, attempt, height), False)
        try:
            sols = solve_affine(cut, budget, seed=seed + attempt)
        except NotZeroDimensional:
            continue
        cands = []
        for s in sols:
            factors = _factors_from_solution(system, s.coords)
            if verify_decomposition(p, I_X, factors):
                cands.append(factors)
        rational = [f for f in cands if all(q.is_rational() for q in f)]
        if rational:
            return _order_factors(min(rational, key=_witness_key))
        if cands and fallback is None:
            fallback = cands[0]
    if fallback is not None:
        return fallback
    raise WitnessNotFound(f"no slice met the solution set after {attempts} attempts")


def decomposition_witness(p: ProjPoint, I_X: Ideal, m: int, seed: int = 0, budget=None) -> list[ProjPoint]:
    """m exact points of V(I_X) whose Hadamard product is p."""
    budget = as_budget(budget)
    res = decomposition_exists(p, I_X, m, budget, stop_early=False)
    if not res.exists:
        raise WitnessNotFound(f"no decomposition with {m} factors exists" if res.exists is False
                              else "existence undecided within the budget")
    best = None
    for r in res.feasible:
        try:
            factors = witness_from_system(p, I_X, r.system, seed, budget=budget)
        except WitnessNotFound:
            continue
        if all(q.is_rational() for q in factors):
            if best is None or not all(q.is_rational() for q in best) or _witness_key(factors) < _witness_key(best):
                best = factors
        elif best is None:
            best = factors
    if best is None:
        raise WitnessNotFound("every feasible pattern evaded the random slices; retry with another seed")
    return best


# -- certificates ------------------------------------------------------------

def _coord_json(c):
    if isinstance(c, AlgNum) and not c.is_rational():
        return c.to_json()
    v = c.as_rational() if isinstance(c, AlgNum) else c
    return str(v)


def point_json(q: ProjPoint) -> list:
    if q.is_rational():
        return [str(v) for v in q.integer_coords()]
    return [_coord_json(c) for c in q.coords]


def _ideal_json(I: Ideal) -> dict:
    return {"ring": I.N, "generators": [str(g) for g in I.generators]}


@dataclass
class RankCertificate:
    point: ProjPoint
    verdict: str
    m: int | None
    ideal: Ideal
    witnesses: list = field(default_factory=list)
    infeasible: list = field(default_factory=list)  # list of (m, PatternResult)
    feasible_pattern: PatternResult | None = None
    obstruction_index: int | None = None
    seed: int = 0
    budget_spent: int = 0

    def to_json(self) -> dict:
        out = {
            "point": point_json(self.point),
            "verdict": self.verdict,
            "m": self.m,
            "witnesses": [point_json(q) for q in self.witnesses],
            "infeasible_patterns": [dict(r.to_json(), m=m) for m, r in self.infeasible],
            "seed": self.seed,
            "budget_spent": self.budget_spent,
            "ideal": _ideal_json(self.ideal),
        }
        if self.feasible_pattern is not None:
            out["feasible_pattern"] = dict(self.feasible_pattern.to_json(), m=self.m)
        if self.obstruction_index is not None:
            out["obstruction_index"] = self.obstruction_index
        return out

    def __str__(self):
        return f"{self.verdict}({self.m})" if self.m is not None else self.verdict


def hadamard_rank(p: ProjPoint, I_X: Ideal, max_m: int, seed: int = 0, budget=None,
                  check_obstruction: bool = True) -> RankCertificate:
    """Least m <= max_m admitting an exact decomposition, with evidence.

    With ``check_obstruction`` a point with exactly one zero coordinate i is
    declared of infinite rank when V(I_X) meets H_i only inside other
    coordinate hyperplanes: any factor vanishing at i would kill another
    coordinate of p.
    """
    if max_m < 1:
        raise ValueError("max_m must be at least 1")
    budget = budget if isinstance(budget, Budget) else Budget(budget)
    zs = p.zero_set()
    if check_obstruction and len(zs) == 1 and len(p) > 1:
        (i,) = zs
        if not _slice_test(I_X, i, budget):
            return RankCertificate(p, "ProvablyInfinite", None, I_X, obstruction_index=i,
                                   seed=seed, budget_spent=budget.total)
    infeasible = []
    for m in range(1, max_m + 1):
        res = decomposition_exists(p, I_X, m, budget)
        infeasible += [(m, r) for r in res.infeasible]
        if res.exists is None:
            return RankCertificate(p, "Unknown", m, I_X, infeasible=infeasible, seed=seed, budget_spent=budget.total)
        if res.exists:
            feas = res.feasible[0]
            try:
                witnesses = witness_from_system(p, I_X, feas.system, seed, budget=budget)
            except WitnessNotFound:
                witnesses = []
            return RankCertificate(p, "RankEquals", m, I_X, witnesses, infeasible, feas,
                                   seed=seed, budget_spent=budget.total)
    return RankCertificate(p, "RankGreaterThan", max_m, I_X, infeasible=infeasible, seed=seed,
                           budget_spent=budget.total)


def border_rank(p: ProjPoint, I_X: Ideal, max_m: int, budget=None) -> RankCertificate:
    """Least m <= max_m with p in the closed m-th Hadamard power."""
    if max_m < 1:
        raise ValueError("max_m must be at least 1")
    budget = budget if isinstance(budget, Budget) else Budget(budget)
    for m in range(1, max_m + 1):
        try:
            inside = power_membership(p, I_X, m, budget=budget)
        except BudgetExceeded:
            return RankCertificate(p, "Unknown", m, I_X, budget_spent=budget.total)
        if inside:
            return RankCertificate(p, "BorderRank", m, I_X, budget_spent=budget.total)
    return RankCertificate(p, "RankGreaterThan", max_m, I_X, budget_spent=budget.total)


# -- zero coordinate reduction ----------------------------------------------

@dataclass
class Reduction:
    """p = p_prime * q with q the product of one witness per zero coordinate."""

    point: ProjPoint
    p_prime: ProjPoint
    witnesses: list
    q: ProjPoint | None

    def to_json(self) -> dict:
        return {
            "point": point_json(self.point),
            "p_prime": point_json(self.p_prime),
            "witnesses": [point_json(w) for w in self.witnesses],
            "q": point_json(self.q) if self.q is not None else None,
            "zero_count": self.point.zero_count(),
        }


def zero_pattern_reduce(p: ProjPoint, I_X: Ideal, seed: int = 0, budget=None) -> Reduction:
    """Trade the zero coordinates of p for strong-conciseness witnesses.

    Hrk(p) <= Hrk(p_prime) + z(p), and p_prime has no zero coordinate.
    """
    zs = sorted(p.zero_set())
    if not zs:
        return Reduction(p, p, [], None)
    rng = random.Random(seed)
    witnesses = []
    for i in zs:
        if not strongly_concise_at(I_X, i, budget):
            raise NotStronglyConcise(f"strong conciseness fails at coordinate {i}")
        w = strong_conciseness_witness(I_X, i, rng, budget=budget)
        if not w.is_rational():
            raise IrrationalWitnessesOnly(f"only irrational witnesses were found at coordinate {i}")
        witnesses.append(w)
    q = hadamard_product(witnesses)
    coords = [pc / qc if qc != 0 else ONE for pc, qc in zip(p.coords, q.coords)]
    return Reduction(p, ProjPoint(coords), witnesses, q)


def compose_reduction(red: Reduction, factors_prime) -> list[ProjPoint]:
    """A decomposition of the original point from one of p_prime."""
    return list(factors_prime) + list(red.witnesses)


# -- replay ------------------------------------------------------------------

def _point_from_json(data) -> ProjPoint:
    return ProjPoint(AlgNum.from_json(c) if isinstance(c, dict) else rat(c) for c in data)


def ideal_from_json(data) -> Ideal:
    ring = Ring.projective(int(data["ring"]))
    return Ideal.of(ring, [parse_polynomial(s, ring) for s in data["generators"]], True)


def verify_certificate(cert: dict, budget=None) -> bool:
    """Replay a certificate from its JSON form, recomputing all evidence."""
    I_X = ideal_from_json(cert["ideal"])
    p = _point_from_json(cert["point"])
    verdict, m = cert["verdict"], cert.get("m")
    for entry in cert.get("infeasible_patterns", []):
        system = build_system(p, I_X, ZeroPattern.from_json(entry["pattern"]))
        if not groebner_basis(system.ideal, GREVLEX, budget).is_unit():
            return False
    if verdict == "RankEquals":
        if cert["witnesses"]:
            if len(cert["witnesses"]) != m:
                return False
            if not verify_decomposition(p, I_X, [_point_from_json(w) for w in cert["witnesses"]]):
                return False
        else:
            fp = cert.get("feasible_pattern")
            if fp is None:
                return False
            system = build_system(p, I_X, ZeroPattern.from_json(fp["pattern"]))
            if groebner_basis(system.ideal, GREVLEX, budget).is_unit():
                return False
        # every pattern below m must be covered
        for k in range(1, m):
            covered = {tuple(map(tuple, e["pattern"])) for e in cert["infeasible_patterns"] if e["m"] == k}
            needed = {tuple(map(tuple, pat.to_json())) for pat in zero_patterns(p, k)}
            if not needed <= covered:
                return False
        return True
    if verdict == "RankGreaterThan" and cert.get("infeasible_patterns"):
        for k in range(1, m + 1):
            covered = {tuple(map(tuple, e["pattern"])) for e in cert["infeasible_patterns"] if e["m"] == k}
            if not {tuple(map(tuple, pat.to_json())) for pat in zero_patterns(p, k)} <= covered:
                return False
        return True
    if verdict == "BorderRank":
        if not power_membership(p, I_X, m, budget=budget):
            return False
        return all(not power_membership(p, I_X, k, budget=budget) for k in range(1, m))
    if verdict == "ProvablyInfinite":
        i = cert["obstruction_index"]
        others = [k for k in range(len(p)) if k != i]
        return p.coords[i] == 0 and all(p.coords[k] != 0 for k in others) and not _slice_test(I_X, i, budget)
    if verdict == "RankGreaterThan":
        return all(not power_membership(p, I_X, k, budget=budget) for k in range(1, m + 1))
    return False
