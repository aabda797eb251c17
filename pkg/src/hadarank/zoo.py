"""Named varieties, witness constructions and parametrized families.

Each :class:`ZooEntry` carries an ideal and/or a parametrization together
with facts that can be re-checked by the library itself.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import combinations, combinations_with_replacement
from math import comb, factorial
from pathlib import Path
from typing import Callable

from .exactalg.ideal import Ideal
from .exactalg.parse import format_ideal
from .exactalg.points import ProjPoint
from .exactalg.polynomial import Polynomial, Ring
from .exactalg.rational import ONE, ZERO, rat
from .groebner import eliminate
from .numdim import DeltaCheck, Parametrization, check_avoids_delta, format_param

PROVENANCE = ("PAPER", "TRIVIAL", "DERIVED")


@dataclass(frozen=True)
class Fact:
    description: str
    check: Callable[["ZooEntry"], bool]
    provenance: str

    def __post_init__(self):
        if self.provenance not in PROVENANCE:
            raise ValueError(f"unknown provenance {self.provenance!r}")


@dataclass
class ZooEntry:
    name: str
    ideal: Ideal | None = None
    param: Parametrization | None = None
    facts: list[Fact] = field(default_factory=list)
    extra: dict = field(default_factory=dict)

    def __post_init__(self):
        if self.ideal is None and self.param is None:
            raise ValueError("a zoo entry needs an ideal or a parametrization")

    @property
    def N(self) -> int:
        return self.ideal.N if self.ideal is not None else self.param.N

    def verify(self) -> list[tuple[str, bool]]:
        """Re-check every expected fact."""
        return [(f.description, bool(f.check(self))) for f in self.facts]

    def emit(self, directory) -> list[Path]:
        directory = Path(directory)
        directory.mkdir(parents=True, exist_ok=True)
        written = []
        if self.ideal is not None:
            path = directory / f"{self.name}.ideal"
            path.write_text(format_ideal(self.ideal, [self.name]))
            written.append(path)
        if self.param is not None:
            path = directory / f"{self.name}.param"
            path.write_text(format_param(self.param, [self.name]))
            written.append(path)
        return written


def _ideal(N: int, texts) -> Ideal:
    return Ideal.parse(Ring.projective(N), list(texts))


def _points(*texts) -> list[ProjPoint]:
    return [ProjPoint.parse(t) for t in texts]


# -- binomial hypersurfaces --------------------------------------------------

def _check_binomial_args(d, N, c):
    if d < 1 or N < 2:
        raise ValueError("need d >= 1 and N >= 2")
    if rat(c) == 0:
        raise ValueError("c must be nonzero")


def closed_power(d: int, N: int, c, m: int) -> Ideal:
    """The m-th Hadamard power of the binomial hypersurface, in closed form."""
    _check_binomial_args(d, N, c)
    if m < 1:
        raise ValueError("closed_power is defined for m >= 1")
    ring = Ring.projective(N)
    x0, x1, xN = ring.gen(0), ring.gen(1), ring.gen(N)
    return Ideal(ring, [x1 ** d - x0 ** (d - 1) * xN * rat(c) ** m])


def binomial_param(d: int, N: int, c) -> Parametrization:
    """x_j = c*t0^(d-1)*t_j for j < N and x_N = t1^d."""
    _check_binomial_args(d, N, c)
    ring = Ring.params(N)
    t = ring.gens()
    lead = t[0] ** (d - 1) * rat(c)
    return Parametrization(ring, tuple([lead * t[j] for j in range(N)] + [t[1] ** d]))


def binomial_hypersurface(d: int, N: int, c) -> ZooEntry:
    from .conciseness import binomial_search, is_strongly_concise

    ideal = closed_power(d, N, c, 1)
    return ZooEntry(
        f"X_{d}_{N}_{rat(c)}".replace("/", "over"),
        ideal,
        binomial_param(d, N, c),
        [
            Fact("contains a binomial", lambda e: binomial_search(e.ideal, d) is not None, "PAPER"),
            Fact("not strongly concise", lambda e: not is_strongly_concise(e.ideal).is_strongly_concise, "PAPER"),
        ],
    )


# -- conics -------------------------------------------------------------------

def conic_param(F: Polynomial, base: ProjPoint, direction_zero: int = 0) -> Parametrization:
    """Rational parametrization of a smooth conic by lines through a rational point.

    The point of the line through ``base`` in direction v is
    F(v)*base - 2*B(base, v)*v, with v running over the coordinate line
    {x_direction_zero = 0}, which must not contain ``base``.
    """
    if base.coords[direction_zero] == 0:
        raise ValueError("the direction line passes through the base point")
    ring = Ring.params(2)
    s, t = ring.gens()
    others = [i for i in range(3) if i != direction_zero]
    v = [ring.zero()] * 3
    v[others[0]], v[others[1]] = s, t
    p0 = [ring.const(c) for c in base.coords]
    Fv = F.compose(v, ring)
    Fp = F.compose(p0, ring)
    Fsum = F.compose([a + b for a, b in zip(p0, v)], ring)
    two_b = Fsum - Fp - Fv
    return Parametrization(ring, tuple(Fv * a - two_b * b for a, b in zip(p0, v)))


def conic_Q() -> ZooEntry:
    from .conciseness import is_strongly_concise

    ideal = _ideal(2, ["x0*x1 + x0*x2 + x1*x2"])
    param = Parametrization.from_strings(2, ["t0*t1 + t1^2", "t0^2 + t0*t1", "-t0*t1"])
    return ZooEntry(
        "Q",
        ideal,
        param,
        [
            Fact("not strongly concise at any coordinate",
                 lambda e: not any(is_strongly_concise(e.ideal).strongly_concise), "PAPER"),
            Fact("generic rank 2", lambda e: _generic_rank(e) == 2, "PAPER"),
        ],
    )


def conic_C() -> ZooEntry:
    from .conciseness import is_strongly_concise

    ideal = _ideal(2, ["x0*(x1 + x2) + (x1 - x2)^2"])
    param = Parametrization.from_strings(2, ["-2*t0^2", "t1^2 + t0*t1", "t1^2 - t0*t1"])
    return ZooEntry(
        "C",
        ideal,
        param,
        [
            Fact("strongly concise", lambda e: is_strongly_concise(e.ideal).is_strongly_concise, "PAPER"),
            Fact("contains (1:0:0)", lambda e: e.ideal.vanishes_at(ProjPoint.parse("1:0:0")), "PAPER"),
            Fact("rank of (0:1:1) is 1", lambda e: _rank(e, "0:1:1") == 1, "PAPER"),
            Fact("rank of (0:2:3) is 2", lambda e: _rank(e, "0:2:3") == 2, "PAPER"),
            Fact("rank of (0:1:-1) is 3", lambda e: _rank(e, "0:1:-1") == 3, "PAPER"),
            Fact("generic rank 2", lambda e: _generic_rank(e) == 2, "PAPER"),
        ],
    )


C_SHARP = "-3*x0^2 - 2*x1^2 + 4*x2^2 + 5*x0*x1 - 11*x0*x2 + 2*x1*x2"


def _sym_det(F: Polynomial) -> object:
    """Determinant of the symmetric matrix of a ternary quadratic form."""
    M = [[ZERO] * 3 for _ in range(3)]
    for mono, c in F.raw().items():
        idx = [i for i, e in enumerate(mono) for _ in range(e)]
        i, j = idx
        if i == j:
            M[i][i] = c
        else:
            M[i][j] = M[j][i] = c / 2
    return (M[0][0] * (M[1][1] * M[2][2] - M[1][2] * M[2][1])
            - M[0][1] * (M[1][0] * M[2][2] - M[1][2] * M[2][0])
            + M[0][2] * (M[1][0] * M[2][1] - M[1][1] * M[2][0]))


def conic_C_sharp() -> ZooEntry:
    """A smooth conic through (1:1:0), (1:0:3), (0:2:1) avoiding every coordinate point.

    Each coordinate line meets it in two rational points with exactly one
    zero coordinate, so every witness needed for (1:0:0) is rational.
    """
    ideal = _ideal(2, [C_SHARP])
    F = ideal.generators[0]
    param = conic_param(F, ProjPoint.parse("1:1:0"), direction_zero=0)
    return ZooEntry(
        "C_sharp",
        ideal,
        param,
        [
            Fact("coordinate point values are -3, -2, 4",
                 lambda e: [e.ideal.generators[0].evaluate(p.coords) for p in _points("1:0:0", "0:1:0", "0:0:1")]
                 == [-3, -2, 4], "DERIVED"),
            Fact("passes through (1:1:0), (1:0:3), (0:2:1)",
                 lambda e: all(e.ideal.vanishes_at(p) for p in _points("1:1:0", "1:0:3", "0:2:1")), "DERIVED"),
            Fact("smooth: symmetric matrix determinant 35", lambda e: _sym_det(e.ideal.generators[0]) == 35, "DERIVED"),
            Fact("rank of (1:0:0) is 2", lambda e: _rank(e, "1:0:0") == 2, "DERIVED"),
        ],
    )


def _rank(e: ZooEntry, point: str) -> int | None:
    from .rankengine.rank import hadamard_rank

    cert = hadamard_rank(ProjPoint.parse(point), e.ideal, 4)
    return cert.m if cert.verdict == "RankEquals" else None


def _generic_rank(e: ZooEntry) -> int | None:
    from .numdim import generic_rank_estimate

    return generic_rank_estimate(e.param, e.N + 1, rng=0)


# -- Grassmannians ------------------------------------------------------------

def _det(M):
    n = len(M)
    if n == 1:
        return M[0][0]
    total = 0
    for j in range(n):
        if M[0][j] == 0 if not isinstance(M[0][j], Polynomial) else M[0][j].is_zero():
            continue
        minor = [row[:j] + row[j + 1:] for row in M[1:]]
        term = M[0][j] * _det(minor)
        total = term + total if j % 2 == 0 else -term + total
    return total


def plucker(matrix) -> list:
    """Maximal minors of a k x n matrix, column subsets in lexicographic order."""
    k, n = len(matrix), len(matrix[0])
    return [_det([[row[c] for c in cols] for row in matrix]) for cols in combinations(range(n), k)]


def plucker_labels(k: int, n: int) -> list[str]:
    return ["".join(str(c) for c in cols) for cols in combinations(range(n), k)]


def grassmannian_param(k: int, n: int) -> Parametrization:
    """All maximal minors of a generic k x n matrix with entries t0 .. t(kn-1)."""
    if not 1 <= k < n:
        raise ValueError("need 1 <= k < n")
    ring = Ring.params(k * n)
    M = [[ring.gen(r * n + c) for c in range(n)] for r in range(k)]
    return Parametrization(ring, tuple(plucker(M)))


@lru_cache(maxsize=None)
def grassmannian_ideal(k: int, n: int, budget=None) -> Ideal:
    """Plücker ideal by eliminating the chart [Id | A] scaled by a parameter."""
    if not 1 <= k < n:
        raise ValueError("need 1 <= k < n")
    N = comb(n, k) - 1
    nparams = k * (n - k) + 1
    names = tuple(f"a{i}" for i in range(nparams - 1)) + ("lam",) + Ring.projective(N).names
    big = Ring(names)
    M = []
    for r in range(k):
        row = [big.one() if c == r else big.zero() for c in range(k)]
        row += [big.gen(r * (n - k) + c) for c in range(n - k)]
        M.append(row)
    lam = big.gen(nparams - 1)
    gens = [big.gen(nparams + i) - lam * minor for i, minor in enumerate(plucker(M))]
    elim = eliminate(Ideal(big, gens, projective=False), range(nparams), budget)
    ring = Ring.projective(N)
    return Ideal.of(ring, [Polynomial._raw(ring, dict(g.raw())) for g in elim.generators], True)


def grassmannian(k: int, n: int) -> ZooEntry:
    from .conciseness import is_strongly_concise

    facts = [Fact(f"dimension {k * (n - k)}", lambda e: _jac_dim(e) == k * (n - k), "DERIVED")]
    if (k, n) == (2, 4):
        facts.append(Fact("ideal is the Plücker quadric x0*x5 - x1*x4 + x2*x3",
                          lambda e: list(e.ideal.generators) == [_ideal(5, ["x0*x5 - x1*x4 + x2*x3"]).generators[0]],
                          "DERIVED"))
        facts.append(Fact("strongly concise", lambda e: is_strongly_concise(e.ideal).is_strongly_concise, "PAPER"))
    return ZooEntry(f"G_{k}_{n}", grassmannian_ideal(k, n), grassmannian_param(k, n), facts,
                    {"labels": plucker_labels(k, n)})


def _jac_dim(e: ZooEntry) -> int:
    from .numdim import jacobian_dimension

    return jacobian_dimension(e.param, 0)


def one_zero_minor_matrix(k: int, n: int, rng=None, retries: int = 100, bound: int = 5):
    """A k x n integer matrix with exactly one vanishing maximal minor, the first.

    The first k columns are drawn inside the hyperplane {y_(k-1) = 0} of Q^k;
    every later column is drawn off the hyperplanes spanned by k-1 of the
    earlier columns.  Returns the matrix and its Plücker point.
    """
    if not 1 <= k < n:
        raise ValueError("need 1 <= k < n")
    rng = rng if isinstance(rng, random.Random) else random.Random(rng)

    def draw(in_h: bool):
        v = [rng.choice([x for x in range(-bound, bound + 1) if x]) for _ in range(k)]
        if in_h:
            v[k - 1] = 0
        return v

    for _ in range(retries):
        cols = [draw(True) for _ in range(k)]
        ok = True
        for j in range(k, n):
            for _ in range(retries):
                v = draw(False)
                if all(_det([[c[r] for c in list(sub) + [v]] for r in range(k)]) != 0
                       for sub in combinations(cols, k - 1)):
                    cols.append(v)
                    break
            else:
                ok = False
                break
        if not ok:
            continue
        matrix = [[cols[c][r] for c in range(n)] for r in range(k)]
        minors = plucker(matrix)
        if minors[0] == 0 and all(m != 0 for m in minors[1:]):
            return matrix, ProjPoint(minors)
    raise RuntimeError(f"no matrix with exactly one zero minor after {retries} draws")


# -- tangential, Chow and reducible forms --------------------------------------

def exponents(d: int, n: int) -> list[tuple]:
    """Exponent vectors of degree d in n+1 variables, x0^d first (descending lex)."""
    out = []
    for combo in combinations_with_replacement(range(n + 1), d):
        e = [0] * (n + 1)
        for i in combo:
            e[i] += 1
        out.append(tuple(e))
    return sorted(out, reverse=True)


def multinomial(d: int, alpha) -> int:
    out = factorial(d)
    for a in alpha:
        out //= factorial(a)
    return out


def _power_product(a, alpha):
    out = ONE
    for ai, e in zip(a, alpha):
        if e:
            out = ai ** e * out
    return out


def tangential_vector(d: int, alpha, a) -> list:
    """(v_{alpha,a})_k = multinomial(d-1; alpha - e_k) * a^(alpha - e_k), or 0 if alpha_k = 0."""
    out = []
    for k, ak in enumerate(alpha):
        if ak == 0:
            out.append(ZERO)
            continue
        beta = list(alpha)
        beta[k] -= 1
        out.append(_power_product(a, beta) * multinomial(d - 1, beta))
    return out


def tangential_coefficients(d: int, n: int, a, b) -> list:
    """Coefficients of L^(d-1)*M, L = sum a_i x_i and M = sum b_i x_i, in :func:`exponents` order.

    Works over any ring whose elements support + and *.
    """
    if len(a) != n + 1 or len(b) != n + 1:
        raise ValueError("a and b need n+1 entries")
    if d < 1:
        raise ValueError("d must be positive")
    out = []
    for alpha in exponents(d, n):
        v = tangential_vector(d, alpha, a)
        acc = ZERO
        for bk, vk in zip(b, v):
            if isinstance(vk, Polynomial) or vk != 0:
                acc = vk * bk + acc
        out.append(acc)
    return out


def tangential_param(d: int, n: int) -> Parametrization:
    ring = Ring.params(2 * (n + 1))
    t = ring.gens()
    a, b = t[: n + 1], t[n + 1:]
    coeffs = tangential_coefficients(d, n, a, b)
    return Parametrization(ring, tuple(c if isinstance(c, Polynomial) else ring.const(c) for c in coeffs))


def tangential_witness(d: int, n: int, alpha, rng=None, retries: int = 200, bound: int = 6):
    """Rational (a, b) with c_alpha = 0 and every other coefficient nonzero."""
    alpha = tuple(alpha)
    if sum(alpha) != d or len(alpha) != n + 1:
        raise ValueError("alpha must have degree d and n+1 entries")
    rng = rng if isinstance(rng, random.Random) else random.Random(rng)
    nz = [x for x in range(-bound, bound + 1) if x]
    for _ in range(retries):
        a = [rat(rng.choice(nz)) for _ in range(n + 1)]
        v = tangential_vector(d, alpha, a)
        pivots = [k for k, vk in enumerate(v) if vk != 0]
        if not pivots:
            continue
        b = [rat(rng.randint(-bound, bound)) for _ in range(n + 1)]
        k = rng.choice(pivots)
        dot = sum((bi * vi for bi, vi in zip(b, v)), ZERO)
        b[k] -= dot / v[k]
        coeffs = tangential_coefficients(d, n, a, b)
        idx = exponents(d, n).index(alpha)
        if coeffs[idx] == 0 and all(c != 0 for i, c in enumerate(coeffs) if i != idx):
            return a, b
    raise RuntimeError(f"no tangential witness for {alpha} after {retries} draws")


def _generic_form(ring: Ring, d: int, n: int, offset: int) -> dict:
    return {alpha: ring.gen(offset + i) for i, alpha in enumerate(exponents(d, n))}


def _mul_forms(f: dict, g: dict) -> dict:
    out: dict = {}
    for a, ca in f.items():
        for b, cb in g.items():
            key = tuple(x + y for x, y in zip(a, b))
            out[key] = out[key] + ca * cb if key in out else ca * cb
    return out


def reducible_param(degrees, n: int) -> Parametrization:
    """Coefficients of F_1 * ... * F_k with F_i generic of degree degrees[i]."""
    degrees = list(degrees)
    if not degrees or any(d < 1 for d in degrees):
        raise ValueError("degrees must be positive")
    sizes = [comb(d + n, n) for d in degrees]
    ring = Ring.params(sum(sizes))
    offset = 0
    prod = None
    for d, size in zip(degrees, sizes):
        form = _generic_form(ring, d, n, offset)
        prod = form if prod is None else _mul_forms(prod, form)
        offset += size
    D = sum(degrees)
    return Parametrization(ring, tuple(prod.get(alpha, ring.zero()) for alpha in exponents(D, n)))


def chow_param(d: int, n: int) -> Parametrization:
    """Products of d generic linear forms in n+1 variables."""
    return reducible_param([1] * d, n)


def secant_param(P: Parametrization, r: int) -> Parametrization:
    """Coordinate-wise sum of r independent copies of P."""
    if r < 1:
        raise ValueError("r must be positive")
    k = P.k
    ring = Ring.params(r * k)
    maps = []
    for f in P.maps:
        total = ring.zero()
        for b in range(r):
            total = total + f.compose([ring.gen(b * k + i) for i in range(k)], ring)
        maps.append(total)
    return Parametrization(ring, tuple(maps))


# -- curves ---------------------------------------------------------------------

def monomial_curve(N: int) -> Parametrization:
    """(s^N : s^(N-1) t : ... : t^N)."""
    ring = Ring.params(2)
    s, t = ring.gens()
    return Parametrization(ring, tuple(s ** (N - i) * t ** i for i in range(N + 1)))


def random_binary_forms(N: int, degree: int, rng, height: int) -> Parametrization:
    ring = Ring.params(2)
    maps = []
    for _ in range(N + 1):
        terms = {(degree - j, j): rat(rng.randint(-height, height)) for j in range(degree + 1)}
        maps.append(Polynomial(ring, terms))
    return Parametrization(ring, tuple(maps))


def random_curve(N: int, degree: int, rng=None, height: int = 100, retries: int = 50) -> ZooEntry:
    """A random rational curve of the given degree missing every point with two zero coordinates."""
    if degree < N:
        raise ValueError("degree must be at least N")
    rng = rng if isinstance(rng, random.Random) else random.Random(rng)
    for _ in range(retries):
        try:
            P = random_binary_forms(N, degree, rng, height)
        except ValueError:
            continue
        if any(f.is_zero() or not f.is_homogeneous() for f in P.maps):
            continue
        cert: DeltaCheck = check_avoids_delta(P)
        if cert.avoids:
            return ZooEntry(
                f"curve_{N}_{degree}",
                None,
                P,
                [Fact("avoids the points with two zero coordinates", lambda e: check_avoids_delta(e.param).avoids,
                      "DERIVED")],
                {"certificate": cert},
            )
    raise RuntimeError(f"no curve avoiding the strata after {retries} draws")


# -- registry ---------------------------------------------------------------------

REGISTRY: dict[str, Callable[[], ZooEntry]] = {
    "Q": conic_Q,
    "C": conic_C,
    "C_sharp": conic_C_sharp,
    "X_2_2_2": lambda: binomial_hypersurface(2, 2, 2),
    "X_3_3_1": lambda: binomial_hypersurface(3, 3, 1),
    "G_2_4": lambda: grassmannian(2, 4),
    "G_1_3": lambda: grassmannian(1, 3),
    "tau_2_1": lambda: ZooEntry("tau_2_1", None, tangential_param(2, 1)),
    "tau_3_1": lambda: ZooEntry("tau_3_1", None, tangential_param(3, 1)),
    "chow_2_1": lambda: ZooEntry("chow_2_1", None, chow_param(2, 1)),
    "twisted_cubic": lambda: ZooEntry("twisted_cubic", None, monomial_curve(3)),
}


def names() -> list[str]:
    return sorted(REGISTRY)


def get(name: str) -> ZooEntry:
    try:
        return REGISTRY[name]()
    except KeyError:
        raise KeyError(f"unknown zoo entry {name!r}; known: {', '.join(names())}") from None
