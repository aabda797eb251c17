"""Exact solutions of zero-dimensional polynomial systems.

The quotient ring Q[x]/I is finite dimensional.  A random linear form t that
separates the points is found; then every coordinate is a polynomial in t
modulo the minimal polynomial of t, which puts each solution in one primitive
extension Q(theta).  Multiplicities come from the characteristic polynomial
of multiplication by t on Q[x]/I.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

from ..errors import NotZeroDimensional
from ..exactalg import univariate as up
from ..exactalg.algebraic import AlgNum, NumberField
from ..exactalg.ideal import Ideal
from ..exactalg.points import ProjPoint
from ..exactalg.polynomial import Polynomial
from ..exactalg.rational import ONE, ZERO, Rat, is_rational
from ..groebner import GREVLEX, groebner_basis, krull_dimension, standard_monomials


@dataclass(frozen=True)
class Solution:
    coords: tuple
    multiplicity: int = 1

    @property
    def is_rational(self) -> bool:
        return all(is_rational(c) for c in self.coords)

    @property
    def point(self) -> ProjPoint:
        return ProjPoint(self.coords)


class _Span:
    """Incremental echelon form over Q remembering how rows combine the inputs."""

    def __init__(self):
        self.rows: list[tuple[tuple, dict, dict]] = []

    def reduce(self, vec: dict, combo: dict):
        cur = dict(vec)
        cc = dict(combo)
        for pivot, rv, rc in self.rows:
            c = cur.get(pivot)
            if not c:
                continue
            f = c / rv[pivot]
            for m, v in rv.items():
                nv = cur.get(m, ZERO) - f * v
                if nv:
                    cur[m] = nv
                else:
                    cur.pop(m, None)
            for j, v in rc.items():
                nv = cc.get(j, ZERO) - f * v
                if nv:
                    cc[j] = nv
                else:
                    cc.pop(j, None)
        return cur, cc

    def add(self, vec: dict, index: int):
        """Insert input ``index``; returns a dependency combo when it is redundant."""
        cur, cc = self.reduce(vec, {index: ONE})
        if not cur:
            return cc
        pivot = max(cur)
        self.rows.append((pivot, cur, cc))
        return None

    def express(self, vec: dict) -> dict:
        """Coefficients a_j with vec = sum a_j * input_j (vec must lie in the span)."""
        cur, cc = self.reduce(vec, {})
        if cur:
            raise ValueError("vector outside the span")
        return {j: -v for j, v in cc.items()}


def _minimal_polynomial(gb, t: Polynomial, limit: int):
    """Minimal polynomial of t in Q[x]/I and the Krylov span used to find it."""
    span = _Span()
    power = gb.normal_form(t.ring.one())
    for k in range(limit + 1):
        dep = span.add(power.raw(), k)
        if dep is not None:
            coeffs = [dep.get(j, ZERO) for j in range(k + 1)]
            return up.monic(up.trim(coeffs)), span
        power = gb.normal_form(power * t)
    raise AssertionError("Krylov sequence did not terminate")


def _charpoly(matrix: list[list]) -> up.UPoly:
    """Characteristic polynomial det(T*Id - A) by Faddeev-LeVerrier over Q."""
    n = len(matrix)
    if n == 0:
        return (ONE,)
    A = [[Rat(x) for x in row] for row in matrix]
    coeffs = [ZERO] * (n + 1)
    coeffs[n] = ONE
    M = [[ZERO] * n for _ in range(n)]
    for k in range(1, n + 1):
        # M <- A*M + c_{n-k+1} * I
        AM = [[sum((A[i][l] * M[l][j] for l in range(n) if M[l][j]), ZERO) for j in range(n)] for i in range(n)]
        c_prev = coeffs[n - k + 1]
        for i in range(n):
            AM[i][i] += c_prev
        M = AM
        AM2 = [[sum((A[i][l] * M[l][j] for l in range(n) if M[l][j]), ZERO) for j in range(n)] for i in range(n)]
        tr = sum((AM2[i][i] for i in range(n)), ZERO)
        coeffs[n - k] = -tr / k
    return up.trim(coeffs)


def _multiplication_matrix(gb, t: Polynomial, basis: list[tuple]) -> list[list]:
    index = {m: i for i, m in enumerate(basis)}
    n = len(basis)
    cols = []
    for b in basis:
        nf = gb.normal_form(t * Polynomial._raw(t.ring, {b: ONE}))
        col = [ZERO] * n
        for m, c in nf.raw().items():
            col[index[m]] = c
        cols.append(col)
    return [[cols[j][i] for j in range(n)] for i in range(n)]


def _factor_multiplicity(charpoly: up.UPoly, f: up.UPoly) -> int:
    k = 0
    while True:
        q, r = up.divmod_(charpoly, f)
        if r:
            return k
        charpoly = q
        k += 1


def radical_zero_dim(ideal: Ideal, budget=None) -> Ideal:
    """Radical of a zero-dimensional ideal: add square-free parts of the eliminants."""
    gb = groebner_basis(ideal, GREVLEX, budget)
    ring = ideal.ring
    dim = len(standard_monomials(gb))
    extra = []
    for i in range(ring.nvars):
        mp, _ = _minimal_polynomial(gb, ring.gen(i), dim)
        sf = up.squarefree(mp)
        if len(sf) < len(mp):
            extra.append(sum((ring.gen(i) ** k * c for k, c in enumerate(sf) if c), ring.zero()))
    if not extra:
        return ideal
    return Ideal.of(ring, list(ideal.generators) + extra, projective=False)


def solve_affine(ideal: Ideal, budget=None, seed: int = 0, attempts: int = 30) -> list[Solution]:
    """All complex solutions of a zero-dimensional system, exactly."""
    ring = ideal.ring
    gb = groebner_basis(Ideal.of(ring, ideal.generators, projective=False), GREVLEX, budget)
    if gb.is_unit():
        return []
    if krull_dimension(gb.as_ideal(False), budget) != 0:
        raise NotZeroDimensional("the system has positive-dimensional solution components")
    basis_full = standard_monomials(gb)
    rad = radical_zero_dim(gb.as_ideal(False), budget)
    gb_rad = groebner_basis(rad, GREVLEX, budget)
    npoints = len(standard_monomials(gb_rad))
    n = ring.nvars
    rng = random.Random(seed)
    for attempt in range(attempts):
        if attempt < n:
            coeffs = [0] * n
            coeffs[n - 1 - attempt] = 1
        else:
            bound = 2 + attempt
            coeffs = [rng.randint(-bound, bound) for _ in range(n)]
        t = sum((ring.gen(i) * c for i, c in enumerate(coeffs) if c), ring.zero())
        if t.is_zero():
            continue
        h, span = _minimal_polynomial(gb_rad, t, npoints)
        if len(h) - 1 != npoints:
            continue  # t does not separate the points
        shape = [span.express(gb_rad.normal_form(ring.gen(i)).raw()) for i in range(n)]
        shape = [up.trim([g.get(k, ZERO) for k in range(npoints)]) for g in shape]
        charpoly = _charpoly(_multiplication_matrix(gb, t, basis_full))
        return _assemble(h, shape, charpoly)
    raise NotZeroDimensional("no separating linear form found")  # pragma: no cover


def _assemble(h, shape, charpoly) -> list[Solution]:
    rational: list[Solution] = []
    algebraic: list[Solution] = []
    for f, _ in up.factor(h):
        mult = _factor_multiplicity(charpoly, f)
        if len(f) == 2:
            theta = -f[0]
            rational.append(Solution(tuple(up.evaluate(g, theta) for g in shape), mult))
            continue
        residues = [up.rem(g, f) for g in shape]
        for field in NumberField.conjugates(f):
            coords = tuple(
                r[0] if len(r) == 1 else (ZERO if not r else AlgNum(field, r)) for r in residues
            )
            algebraic.append(Solution(coords, mult))
    rational.sort(key=lambda s: s.coords)
    return rational + algebraic


def solve_projective(ideal: Ideal, budget=None, seed: int = 0) -> list[Solution]:
    """Points of a homogeneous ideal with finitely many projective zeros.

    Chart j (x_j = 1) contributes the solutions whose first nonzero
    coordinate is x_j, so each projective point appears once with its local
    multiplicity.
    """
    ring = ideal.ring
    out = []
    for j in range(ring.nvars):
        chart = Ideal.of(ring, list(ideal.generators) + [ring.gen(j) - ONE], projective=False)
        for sol in solve_affine(chart, budget, seed):
            if all(sol.coords[k] == 0 for k in range(j)):
                out.append(sol)
    return out


def solve_zero_dimensional(ideal: Ideal, budget=None, seed: int = 0) -> list[Solution]:
    """Projective solutions for homogeneous ideals, affine ones otherwise."""
    if ideal.projective and ideal.generators and all(g.is_homogeneous() for g in ideal.generators):
        return solve_projective(ideal, budget, seed)
    return solve_affine(ideal, budget, seed)
