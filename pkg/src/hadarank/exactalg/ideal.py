"""Ideals given by generator lists."""

from __future__ import annotations

import hashlib
from typing import Iterable, Sequence

from ..errors import NotHomogeneous, RingMismatch, ZeroGenerator
from .polynomial import Polynomial, Ring


class Ideal:
    """Generators of an ideal in a polynomial ring.

    ``projective=True`` asserts every generator is homogeneous; the zero
    polynomial is refused as a generator (the zero ideal has no generators).
    """

    __slots__ = ("ring", "generators", "projective")

    def __init__(self, ring: Ring, generators: Iterable[Polynomial] = (), projective: bool = True):
        gens = tuple(generators)
        for g in gens:
            if g.ring != ring:
                raise RingMismatch(f"generator {g} is not in {ring}")
            if g.is_zero():
                raise ZeroGenerator("the zero polynomial is not accepted as a generator")
            if projective and not g.is_homogeneous():
                raise NotHomogeneous(f"generator {g} is not homogeneous")
        self.ring = ring
        self.generators = gens
        self.projective = projective

    @classmethod
    def of(cls, ring: Ring, polys: Iterable[Polynomial], projective: bool | None = None) -> "Ideal":
        """Build from any polynomials, silently dropping zeros."""
        polys = [p for p in polys if not p.is_zero()]
        if projective is None:
            projective = all(p.is_homogeneous() for p in polys)
        return cls(ring, polys, projective)

    @classmethod
    def parse(cls, ring: Ring, texts: Sequence[str], projective: bool | None = None) -> "Ideal":
        from .parse import parse_polynomial

        polys = [parse_polynomial(t, ring) for t in texts]
        if projective is None:
            projective = all(p.is_homogeneous() for p in polys)
        return cls(ring, polys, projective)

    @classmethod
    def zero(cls, ring: Ring) -> "Ideal":
        return cls(ring, ())

    @property
    def N(self) -> int:
        return self.ring.nvars - 1

    def is_zero(self) -> bool:
        return not self.generators

    def __add__(self, other) -> "Ideal":
        if isinstance(other, Polynomial):
            other_gens = (other,)
            other_proj = other.is_homogeneous()
        else:
            if other.ring != self.ring:
                raise RingMismatch("ideals live in different rings")
            other_gens = other.generators
            other_proj = other.projective
        return Ideal.of(self.ring, self.generators + other_gens, self.projective and other_proj)

    def key(self) -> str:
        """Stable content hash (order-insensitive in the generators)."""
        body = "|".join(self.ring.names) + "::" + ";".join(sorted(str(g) for g in self.generators))
        return hashlib.sha256(body.encode()).hexdigest()[:16]

    def vanishes_at(self, point) -> bool:
        coords = getattr(point, "coords", point)
        return all(g.evaluate(coords) == 0 for g in self.generators)

    def __iter__(self):
        return iter(self.generators)

    def __len__(self):
        return len(self.generators)

    def __repr__(self):
        gens = ", ".join(str(g) for g in self.generators) or "0"
        return f"Ideal({gens})"
