"""Dimensions of Hadamard powers from parametrizations.

The dimension of the closure of the image of a polynomial map equals the
rank of its Jacobian at a generic point.  Ranks are computed exactly (over
the integers) at random integer parameter values, so a trial can only
undershoot, never overshoot; the reported value is the maximum over trials.
"""

from __future__ import annotations

import random
import re
from dataclasses import dataclass
from itertools import combinations
from math import lcm
from pathlib import Path

from .errors import AllSamplesDegenerate, NotACurveParam, ParseError
from .exactalg import univariate as up
from .exactalg.parse import _content_lines, parse_polynomial
from .exactalg.points import ProjPoint
from .exactalg.polynomial import Polynomial, Ring
from .exactalg.rational import ZERO, rat
from .groebner import kernels

DEFAULT_TRIALS = 3
DEFAULT_HEIGHT = 100


@dataclass(frozen=True)
class Parametrization:
    """Coordinate maps ``maps[i]`` in the parameters of ``ring``.

    ``scaled`` records that the last parameter already multiplies every
    coordinate, so the image is a cone.
    """

    ring: Ring
    maps: tuple[Polynomial, ...]
    scaled: bool = False

    def __post_init__(self):
        if all(f.is_zero() for f in self.maps):
            raise ValueError("every coordinate map is zero")
        if any(f.ring != self.ring for f in self.maps):
            raise ValueError("coordinate maps must live in the parameter ring")

    @classmethod
    def from_strings(cls, k: int, texts, scaled: bool = False) -> "Parametrization":
        ring = Ring.params(k)
        return cls(ring, tuple(parse_polynomial(t, ring) for t in texts), scaled)

    @property
    def k(self) -> int:
        return self.ring.nvars

    @property
    def N(self) -> int:
        return len(self.maps) - 1

    def evaluate(self, values) -> list:
        return [f.evaluate(values) for f in self.maps]

    def is_homogeneous_curve(self) -> bool:
        degs = {f.degree() for f in self.maps if not f.is_zero()}
        return self.k == 2 and len(degs) == 1 and all(f.is_homogeneous() for f in self.maps)


def format_param(P: Parametrization, comments=()) -> str:
    out = [f"# {c}" for c in comments]
    out.append(f"params {P.k}")
    out.extend(str(f) for f in P.maps)
    return "\n".join(out) + "\n"


def parse_param_text(text: str) -> Parametrization:
    lines = list(_content_lines(text))
    if not lines:
        raise ParseError("missing 'params k' header")
    lineno, header = lines[0]
    m = re.fullmatch(r"params\s+(\d+)", header)
    if not m:
        raise ParseError(f"line {lineno}: expected 'params k', got {header!r}")
    ring = Ring.params(int(m.group(1)))
    maps = []
    for lineno, line in lines[1:]:
        try:
            maps.append(parse_polynomial(line, ring))
        except ParseError as exc:
            raise ParseError(f"line {lineno}: {exc}") from exc
    if len(maps) < 2:
        raise ParseError("a parametrization needs at least two coordinate maps")
    return Parametrization(ring, tuple(maps))


def read_param(path) -> Parametrization:
    return parse_param_text(Path(path).read_text())


def write_param(path, P: Parametrization, comments=()) -> None:
    Path(path).write_text(format_param(P, comments))


def power_param(P: Parametrization, m: int) -> Parametrization:
    """m independent parameter blocks multiplied coordinate-wise, times a scalar.

    The result has m*k + 1 parameters, the last one being the scaling.
    """
    if m < 1:
        raise ValueError("m must be positive")
    k = P.k
    ring = Ring.params(m * k + 1)
    lam = ring.gen(m * k)
    blocks = [[ring.gen(b * k + i) for i in range(k)] for b in range(m)]
    maps = []
    for f in P.maps:
        prod = lam
        for images in blocks:
            prod = prod * f.compose(images, ring)
        maps.append(prod)
    return Parametrization(ring, tuple(maps), scaled=True)


def _cone(P: Parametrization) -> Parametrization:
    if P.scaled:
        return P
    ring = Ring.params(P.k + 1)
    lam = ring.gen(P.k)
    return Parametrization(ring, tuple(lam * f.embed(ring, list(range(P.k))) for f in P.maps), True)


class _Jacobian:
    """Partial derivatives of a parametrization, cleared to integer rows."""

    def __init__(self, P: Parametrization):
        self.P = P
        self.partials = [[f.diff(l) for l in range(P.k)] for f in P.maps]

    def integer_rows(self, values) -> list[list[int]]:
        rows = []
        for row in self.partials:
            vals = [g.evaluate(values) for g in row]
            den = 1
            for v in vals:
                den = lcm(den, int(v.denominator))
            rows.append([int(v * den) for v in vals])
        return rows


def _random_params(k: int, rng: random.Random, height: int) -> list:
    return [rat(rng.randint(-height, height)) for _ in range(k)]


@dataclass(frozen=True)
class DimReport:
    m: int
    dimension: int
    trials: int
    seed: int
    ranks: tuple[int, ...]
    method: str = "exact-jacobian-at-rational-point"

    def to_json(self) -> dict:
        return {"m": self.m, "dim": self.dimension, "trials": self.trials, "seed": self.seed,
                "ranks": list(self.ranks), "method": self.method}


def jacobian_ranks(P: Parametrization, rng, trials: int = DEFAULT_TRIALS, height: int = DEFAULT_HEIGHT) -> list[int]:
    """Exact Jacobian ranks of the cone map at ``trials`` random points.

    Points where the map vanishes identically are skipped (and not counted).
    """
    if trials < 1:
        raise ValueError("trials must be at least 1")
    rng = rng if isinstance(rng, random.Random) else random.Random(rng)
    cone = _cone(P)
    jac = _Jacobian(cone)
    ranks = []
    for _ in range(trials):
        vals = _random_params(cone.k, rng, height)
        if all(v == 0 for v in cone.evaluate(vals)):
            continue
        ranks.append(kernels.integer_rank(jac.integer_rows(vals)))
    if not ranks:
        raise AllSamplesDegenerate(f"all {trials} trials hit the zero locus; enlarge the height bound")
    return ranks


def jacobian_dimension(P: Parametrization, rng=0, trials: int = DEFAULT_TRIALS, height: int = DEFAULT_HEIGHT) -> int:
    """Projective dimension of the closure of the image of P."""
    return max(jacobian_ranks(P, rng, trials, height)) - 1


def dim_report(P: Parametrization, m: int, seed: int = 0, trials: int = DEFAULT_TRIALS,
               height: int = DEFAULT_HEIGHT) -> DimReport:
    ranks = jacobian_ranks(power_param(P, m), random.Random(seed), trials, height)
    return DimReport(m, max(ranks) - 1, trials, seed, tuple(ranks))


def generic_rank_estimate(P: Parametrization, max_m: int, rng=0, trials: int = DEFAULT_TRIALS,
                          height: int = DEFAULT_HEIGHT) -> int | None:
    """Least m <= max_m whose Hadamard power fills P^N, or None if not reached."""
    if max_m < 1:
        raise ValueError("max_m must be at least 1")
    rng = rng if isinstance(rng, random.Random) else random.Random(rng)
    for m in range(1, max_m + 1):
        if jacobian_dimension(power_param(P, m), rng, trials, height) == P.N:
            return m
    return None


def sample_point(P: Parametrization, rng=0, height: int = DEFAULT_HEIGHT, retries: int = 20) -> ProjPoint:
    """An exact rational point in the image of P."""
    rng = rng if isinstance(rng, random.Random) else random.Random(rng)
    for _ in range(retries):
        vals = P.evaluate(_random_params(P.k, rng, height))
        if any(v != 0 for v in vals):
            return ProjPoint(vals)
    raise AllSamplesDegenerate(f"{retries} samples all mapped to zero")


# -- avoiding the coordinate strata ------------------------------------------

def _binary_form(f: Polynomial, d: int) -> tuple:
    """Coefficients of f(1, t), lowest degree first, padded to formal degree d."""
    coeffs = [ZERO] * (d + 1)
    for (a, b), c in f.raw().items():
        coeffs[b] = c
    return tuple(coeffs)


def _curve_forms(P: Parametrization) -> tuple[list[tuple], int]:
    if P.k == 1:
        d = max(f.degree() for f in P.maps)
        ring2 = Ring.params(2)
        s, t = ring2.gen(0), ring2.gen(1)
        maps = []
        for f in P.maps:
            out = ring2.zero()
            for (e,), c in f.raw().items():
                out = out + s ** (d - e) * t ** e * c
            maps.append(out)
        P = Parametrization(ring2, tuple(maps))
    if not P.is_homogeneous_curve():
        raise NotACurveParam("expected binary forms of one common degree in (t0, t1)")
    d = max(f.degree() for f in P.maps)
    return [_binary_form(f, d) for f in P.maps], d


@dataclass(frozen=True)
class DeltaCheck:
    """Outcome of the stratum test, with the exact evidence used."""

    avoids: bool
    k: int
    resultants: tuple = ()
    offending: tuple | None = None

    def __bool__(self):
        return self.avoids

    def to_json(self) -> dict:
        return {
            "avoids": self.avoids,
            "k": self.k,
            "resultants": [[list(pair), str(r)] for pair, r in self.resultants],
            "offending": list(self.offending) if self.offending is not None else None,
        }


def _common_root(forms: list[tuple], d: int) -> bool:
    """Whether binary forms of formal degree d share a root on P^1."""
    if all(f[d] == 0 for f in forms):
        return True  # common root at (0:1), or all forms zero
    nonzero = [up.trim(f) for f in forms if up.trim(f)]
    g = nonzero[0]
    for f in nonzero[1:]:
        g = up.gcd(g, f)
    return up.deg(g) > 0


def check_avoids_delta(P: Parametrization, k: int | None = None) -> DeltaCheck:
    """Whether the curve misses every point with at most k+1 nonzero coordinates.

    The default k = N-2 asks that no parameter value, infinity included,
    kills two coordinates at once; this is decided by the pairwise
    resultants of the coordinate forms.
    """
    forms, d = _curve_forms(P)
    N = len(forms) - 1
    k = N - 2 if k is None else k
    need = N - k  # number of coordinates that must vanish together
    if need <= 0:
        return DeltaCheck(False, k)
    if need == 2:
        res = []
        for i, j in combinations(range(N + 1), 2):
            r = up.sylvester_resultant(forms[i], forms[j], d, d)
            res.append(((i, j), r))
            if r == 0:
                return DeltaCheck(False, k, tuple(res), (i, j))
        return DeltaCheck(True, k, tuple(res))
    for subset in combinations(range(N + 1), need):
        if _common_root([forms[i] for i in subset], d):
            return DeltaCheck(False, k, offending=subset)
    return DeltaCheck(True, k)
