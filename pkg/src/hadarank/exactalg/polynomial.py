"""Sparse multivariate polynomials with rational coefficients."""

from __future__ import annotations

from dataclasses import dataclass
from types import MappingProxyType
from typing import Iterable, Mapping, Sequence

from ..errors import RingMismatch
from .rational import ONE, ZERO, Rat, is_rational, rat, rat_str

# Exponents live in Python ints; this cap keeps runaway degrees loud.
MAX_EXPONENT = 2**31 - 1


@dataclass(frozen=True)
class Ring:
    """Polynomial ring over Q in named variables."""

    names: tuple[str, ...]

    def __post_init__(self):
        if len(set(self.names)) != len(self.names):
            raise ValueError(f"duplicate variable names in {self.names}")

    @classmethod
    def projective(cls, N: int, prefix: str = "x") -> "Ring":
        """Coordinate ring of P^N: variables ``x0 .. xN``."""
        return cls(tuple(f"{prefix}{i}" for i in range(N + 1)))

    @classmethod
    def params(cls, k: int, prefix: str = "t") -> "Ring":
        return cls(tuple(f"{prefix}{i}" for i in range(k)))

    @property
    def nvars(self) -> int:
        return len(self.names)

    def index(self, name: str) -> int:
        return self.names.index(name)

    def gen(self, i: int) -> "Polynomial":
        e = [0] * self.nvars
        e[i] = 1
        return Polynomial(self, {tuple(e): ONE})

    def gens(self) -> list["Polynomial"]:
        return [self.gen(i) for i in range(self.nvars)]

    def const(self, c) -> "Polynomial":
        return Polynomial(self, {(0,) * self.nvars: c})

    def zero(self) -> "Polynomial":
        return Polynomial(self, {})

    def one(self) -> "Polynomial":
        return self.const(1)

    def monomial(self, exps, coeff=1) -> "Polynomial":
        return Polynomial(self, {tuple(exps): coeff})

    def extend(self, names: Iterable[str]) -> "Ring":
        return Ring(self.names + tuple(names))

    def __str__(self):
        return f"Q[{', '.join(self.names)}]"


def _check_monomial(m, n):
    if len(m) != n:
        raise RingMismatch(f"monomial {m} has {len(m)} exponents, ring has {n}")
    for e in m:
        if e < 0 or e > MAX_EXPONENT:
            raise OverflowError(f"exponent {e} out of range")


def monomial_str(m, names) -> str:
    parts = []
    for e, name in zip(m, names):
        if e == 1:
            parts.append(name)
        elif e > 1:
            parts.append(f"{name}^{e}")
    return "*".join(parts)


def grevlex_key(m):
    return (sum(m), tuple(-e for e in reversed(m)))


class Polynomial:
    """Immutable sparse polynomial: a map from exponent tuples to nonzero rationals."""

    __slots__ = ("ring", "_terms", "_hash")

    def __init__(self, ring: Ring, terms: Mapping | None = None):
        self.ring = ring
        clean = {}
        n = ring.nvars
        if terms:
            for m, c in terms.items():
                m = tuple(int(e) for e in m)
                _check_monomial(m, n)
                c = rat(c)
                if c:
                    clean[m] = clean.get(m, ZERO) + c
                    if not clean[m]:
                        del clean[m]
        self._terms = clean
        self._hash = None

    @classmethod
    def _raw(cls, ring: Ring, terms: dict) -> "Polynomial":
        """Wrap a trusted dict (no zeros, correct lengths, Rat coefficients) without copying."""
        p = object.__new__(cls)
        p.ring = ring
        p._terms = terms
        p._hash = None
        return p

    # -- inspection -------------------------------------------------------
    @property
    def terms(self) -> Mapping:
        return MappingProxyType(self._terms)

    def raw(self) -> dict:
        """Internal term dict. Callers must not mutate it."""
        return self._terms

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self):
        return bool(self._terms)

    def __len__(self):
        return len(self._terms)

    def is_constant(self) -> bool:
        return not self._terms or (len(self._terms) == 1 and not any(next(iter(self._terms))))

    def constant_value(self):
        return self._terms.get((0,) * self.ring.nvars, ZERO)

    def degree(self) -> int:
        """Total degree; -1 for the zero polynomial."""
        return max((sum(m) for m in self._terms), default=-1)

    def degree_in(self, i: int) -> int:
        return max((m[i] for m in self._terms), default=-1)

    def is_homogeneous(self) -> bool:
        return len({sum(m) for m in self._terms}) <= 1

    def variables(self) -> set[int]:
        used = set()
        for m in self._terms:
            used.update(i for i, e in enumerate(m) if e)
        return used

    def monomials(self) -> list[tuple]:
        return sorted(self._terms, key=grevlex_key, reverse=True)

    def coefficient(self, m) -> Rat:
        return self._terms.get(tuple(m), ZERO)

    # -- arithmetic -------------------------------------------------------
    def _coerce(self, other) -> "Polynomial":
        if isinstance(other, Polynomial):
            if other.ring != self.ring:
                raise RingMismatch(f"{self.ring} vs {other.ring}")
            return other
        if is_rational(other):
            return self.ring.const(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out = dict(self._terms)
        for m, c in other._terms.items():
            v = out.get(m, ZERO) + c
            if v:
                out[m] = v
            else:
                out.pop(m, None)
        return Polynomial._raw(self.ring, out)

    __radd__ = __add__

    def __neg__(self):
        return Polynomial._raw(self.ring, {m: -c for m, c in self._terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other + (-self)

    def scale(self, c) -> "Polynomial":
        c = rat(c)
        if not c:
            return self.ring.zero()
        return Polynomial._raw(self.ring, {m: c * v for m, v in self._terms.items()})

    def __mul__(self, other):
        if is_rational(other):
            return self.scale(other)
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out: dict = {}
        for m1, c1 in self._terms.items():
            for m2, c2 in other._terms.items():
                m = tuple(a + b for a, b in zip(m1, m2))
                v = out.get(m, ZERO) + c1 * c2
                if v:
                    out[m] = v
                else:
                    out.pop(m, None)
        return Polynomial._raw(self.ring, out)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if not isinstance(k, int) or k < 0:
            raise ValueError("exponent must be a non-negative integer")
        result = self.ring.one()
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def mul_monomial(self, m, c=ONE) -> "Polynomial":
        return Polynomial._raw(
            self.ring, {tuple(a + b for a, b in zip(k, m)): c * v for k, v in self._terms.items()}
        )

    # -- comparison -------------------------------------------------------
    def __eq__(self, other):
        if isinstance(other, Polynomial):
            return self.ring == other.ring and self._terms == other._terms
        if is_rational(other):
            return self == self.ring.const(other)
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.ring, frozenset(self._terms.items())))
        return self._hash

    # -- evaluation and substitution --------------------------------------
    def evaluate(self, values: Sequence):
        """Exact value at a coordinate vector (rationals or algebraic numbers)."""
        if len(values) != self.ring.nvars:
            raise RingMismatch(f"point has {len(values)} coordinates, ring has {self.ring.nvars}")
        total = ZERO
        powers: dict = {}
        for m, c in self._terms.items():
            term = c
            for i, e in enumerate(m):
                if e:
                    key = (i, e)
                    if key not in powers:
                        powers[key] = values[i] ** e
                    term = term * powers[key]
            total = total + term
        return total

    def __call__(self, *values):
        if len(values) == 1 and isinstance(values[0], (list, tuple)):
            values = values[0]
        return self.evaluate(values)

    def compose(self, images: Sequence["Polynomial"], ring: Ring | None = None) -> "Polynomial":
        """Substitute ``x_i -> images[i]``; images live in a common ring."""
        if len(images) != self.ring.nvars:
            raise RingMismatch("need one image per variable")
        target = ring or images[0].ring
        result = target.zero()
        cache: dict = {}
        for m, c in self._terms.items():
            term = target.const(c)
            for i, e in enumerate(m):
                if e:
                    if (i, e) not in cache:
                        cache[(i, e)] = images[i] ** e
                    term = term * cache[(i, e)]
            result = result + term
        return result

    def embed(self, ring: Ring, positions: Sequence[int]) -> "Polynomial":
        """Move into ``ring`` sending variable i to variable ``positions[i]``."""
        n = ring.nvars
        out = {}
        for m, c in self._terms.items():
            e = [0] * n
            for i, k in enumerate(m):
                if k:
                    e[positions[i]] += k
            out[tuple(e)] = c
        return Polynomial._raw(ring, out)

    def restrict(self, ring: Ring, positions: Sequence[int]) -> "Polynomial":
        """Inverse of :meth:`embed` for polynomials only involving ``positions``."""
        out = {}
        for m, c in self._terms.items():
            if any(m[i] for i in range(len(m)) if i not in set(positions)):
                raise ValueError("polynomial involves dropped variables")
            out[tuple(m[k] for k in positions)] = c
        return Polynomial._raw(ring, out)

    def diff(self, i: int) -> "Polynomial":
        out = {}
        for m, c in self._terms.items():
            if m[i]:
                e = list(m)
                e[i] -= 1
                out[tuple(e)] = c * m[i]
        return Polynomial._raw(self.ring, out)

    def homogeneous_components(self) -> dict[int, "Polynomial"]:
        comps: dict[int, dict] = {}
        for m, c in self._terms.items():
            comps.setdefault(sum(m), {})[m] = c
        return {d: Polynomial._raw(self.ring, t) for d, t in comps.items()}

    def content_normalized(self) -> "Polynomial":
        """Scale so the grevlex-leading coefficient is 1."""
        if not self._terms:
            return self
        lead = self._terms[max(self._terms, key=grevlex_key)]
        return self.scale(ONE / lead)

    def integer_primitive(self) -> "Polynomial":
        """Scale to coprime integer coefficients with positive leading coefficient."""
        from math import gcd, lcm

        if not self._terms:
            return self
        den = 1
        for c in self._terms.values():
            den = lcm(den, int(c.denominator))
        nums = [int(c * den) for c in self._terms.values()]
        g = 0
        for v in nums:
            g = gcd(g, v)
        lead = self._terms[max(self._terms, key=grevlex_key)]
        sign = 1 if lead > 0 else -1
        return self.scale(Rat(den * sign, g))

    # -- printing ---------------------------------------------------------
    def __str__(self):
        if not self._terms:
            return "0"
        out = []
        for m in self.monomials():
            c = self._terms[m]
            neg = c < 0
            a = -c if neg else c
            mono = monomial_str(m, self.ring.names)
            if not mono:
                body = rat_str(a)
            elif a == 1:
                body = mono
            else:
                body = f"{rat_str(a)}*{mono}"
            if not out:
                out.append(f"-{body}" if neg else body)
            else:
                out.append(f"- {body}" if neg else f"+ {body}")
        return " ".join(out)

    def __repr__(self):
        return f"Polynomial({self})"


def poly_from_terms(ring: Ring, pairs: Iterable[tuple[Sequence[int], object]]) -> Polynomial:
    return Polynomial(ring, {tuple(m): c for m, c in pairs})
