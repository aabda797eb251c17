"""Projective points and the coordinate-wise product."""

from __future__ import annotations

from typing import Iterable, Sequence

from ..errors import AllZeroProduct, ParseError, ZeroCoordinate
from .rational import ONE, is_rational, rat, rat_str


def _coerce(c):
    if is_rational(c) or isinstance(c, str):
        return rat(c)
    return c  # algebraic number


class ProjPoint:
    """Point of P^N with exact coordinates, compared up to scaling."""

    __slots__ = ("coords", "_norm")

    def __init__(self, coords: Iterable):
        coords = tuple(_coerce(c) for c in coords)
        if not coords:
            raise ValueError("a projective point needs at least one coordinate")
        if all(c == 0 for c in coords):
            raise ValueError("all coordinates are zero")
        self.coords = coords
        self._norm = None

    @classmethod
    def parse(cls, text: str) -> "ProjPoint":
        """Parse ``"0:1:-1"`` (parentheses optional)."""
        body = text.strip().strip("()")
        try:
            return cls(rat(part) for part in body.split(":"))
        except (ValueError, ZeroDivisionError) as exc:
            raise ParseError(f"bad point {text!r}: {exc}") from exc

    @property
    def N(self) -> int:
        return len(self.coords) - 1

    def __len__(self):
        return len(self.coords)

    def __getitem__(self, i):
        return self.coords[i]

    def __iter__(self):
        return iter(self.coords)

    def normalized(self) -> tuple:
        """Coordinates scaled so the first nonzero one equals 1."""
        if self._norm is None:
            lead = next(c for c in self.coords if c != 0)
            inv = ONE / lead
            self._norm = tuple(c * inv for c in self.coords)
        return self._norm

    def zero_set(self) -> frozenset[int]:
        return frozenset(i for i, c in enumerate(self.coords) if c == 0)

    def zero_count(self) -> int:
        return len(self.zero_set())

    def is_rational(self) -> bool:
        return all(is_rational(c) for c in self.coords)

    def integer_coords(self) -> tuple[int, ...]:
        """Primitive integer representative (rational points only)."""
        from math import gcd, lcm

        den = 1
        for c in self.coords:
            den = lcm(den, int(c.denominator))
        ints = [int(c * den) for c in self.coords]
        g = 0
        for v in ints:
            g = gcd(g, v)
        ints = [v // g for v in ints]
        lead = next(v for v in ints if v)
        if lead < 0:
            ints = [-v for v in ints]
        return tuple(ints)

    def height(self) -> int:
        return max(abs(v) for v in self.integer_coords())

    def __eq__(self, other):
        if not isinstance(other, ProjPoint):
            return NotImplemented
        if len(self) != len(other):
            return False
        return self.normalized() == other.normalized()

    def __hash__(self):
        if self.is_rational():
            return hash(self.normalized())
        return hash(self.zero_set())

    def to_strings(self) -> list[str]:
        if self.is_rational():
            return [rat_str(c) for c in self.integer_coords()]
        return [str(c) for c in self.coords]

    def __str__(self):
        return "(" + ":".join(self.to_strings()) + ")"

    def __repr__(self):
        return f"ProjPoint{self}"


def ones(N: int) -> ProjPoint:
    """The identity (1:...:1) of the Hadamard product."""
    return ProjPoint([1] * (N + 1))


def hadamard_point(p: ProjPoint, q: ProjPoint) -> ProjPoint:
    if len(p) != len(q):
        raise ValueError("points live in different projective spaces")
    prod = [a * b for a, b in zip(p.coords, q.coords)]
    if all(c == 0 for c in prod):
        raise AllZeroProduct(f"{p} * {q} has no nonzero coordinate")
    return ProjPoint(prod)


def hadamard_product(points: Sequence[ProjPoint]) -> ProjPoint:
    """Coordinate-wise product of several points."""
    if not points:
        raise ValueError("empty product")
    acc = points[0]
    for q in points[1:]:
        acc = hadamard_point(acc, q)
    return acc


def hadamard_inverse(p: ProjPoint) -> ProjPoint:
    if any(c == 0 for c in p.coords):
        raise ZeroCoordinate(f"{p} has a zero coordinate")
    return ProjPoint(ONE / c for c in p.coords)


def hadamard_power(p: ProjPoint, m: int) -> ProjPoint:
    if m < 0:
        return hadamard_power(hadamard_inverse(p), -m)
    if m == 0:
        return ones(p.N)
    return ProjPoint(c ** m for c in p.coords)
