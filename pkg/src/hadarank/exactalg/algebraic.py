"""Algebraic numbers in a single primitive extension Q(theta).

A :class:`NumberField` pins one complex root ``theta`` of an irreducible monic
polynomial by a rational isolating rectangle; an :class:`AlgNum` is a residue
polynomial evaluated at ``theta``.  Zero testing is symbolic (the residue is
reduced modulo the minimal polynomial, so zero means the empty residue).
"""

from __future__ import annotations

from ..errors import IncompatibleExtension
from . import univariate as up
from .rational import ONE, ZERO, Rat, is_rational, rat, rat_str


class NumberField:
    __slots__ = ("minpoly", "box", "_approx")

    def __init__(self, minpoly, box, check: bool = True):
        self.minpoly = up.monic(up.trim(minpoly))
        self.box = tuple(rat(x) for x in box)
        self._approx = {}
        if check:
            if len(self.minpoly) < 2:
                raise ValueError("minimal polynomial must have positive degree")
            if up.count_roots_in_box(self.minpoly, self.box) != 1:
                raise ValueError("box does not isolate exactly one root")

    @property
    def degree(self) -> int:
        return len(self.minpoly) - 1

    @classmethod
    def conjugates(cls, minpoly) -> list["NumberField"]:
        """One field per complex root of an irreducible ``minpoly``."""
        minpoly = up.monic(up.trim(minpoly))
        return [cls(minpoly, box, check=False) for box in up.isolating_boxes(minpoly)]

    def __eq__(self, other):
        return isinstance(other, NumberField) and self.minpoly == other.minpoly and self.box == other.box

    def __hash__(self):
        return hash((self.minpoly, self.box))

    def theta(self) -> "AlgNum":
        return AlgNum(self, (ZERO, ONE))

    def approx(self, dps: int = 50):
        """Numerical value of theta, refined to ``dps`` digits with mpmath."""
        if dps in self._approx:
            return self._approx[dps]
        import mpmath

        with mpmath.workdps(dps + 20):
            coeffs = [mpmath.mpf(int(c.numerator)) / int(c.denominator) for c in reversed(self.minpoly)]
            roots = mpmath.polyroots(coeffs, maxsteps=400, extraprec=4 * dps + 100)
            re_lo, re_hi, im_lo, im_hi = (mpmath.mpf(int(x.numerator)) / int(x.denominator) for x in self.box)

            def dist(z):
                z = mpmath.mpc(z)
                dx = max(re_lo - z.real, 0, z.real - re_hi)
                dy = max(im_lo - z.imag, 0, z.imag - im_hi)
                return dx + dy

            root = min(roots, key=dist)
        self._approx[dps] = root
        return root

    def __repr__(self):
        return f"NumberField({up.to_str(self.minpoly)}, box={[rat_str(x) for x in self.box]})"


class AlgNum:
    """Element ``residue(theta)`` of a :class:`NumberField`."""

    __slots__ = ("field", "residue")

    def __init__(self, field: NumberField, residue):
        self.field = field
        res = up.trim(residue)
        if len(res) >= len(field.minpoly):
            res = up.rem(res, field.minpoly)
        self.residue = res

    # -- coercion ---------------------------------------------------------
    def _other(self, other):
        if isinstance(other, AlgNum):
            if other.field != self.field:
                raise IncompatibleExtension(f"{self.field!r} vs {other.field!r}")
            return other.residue
        if is_rational(other):
            return up.trim([other])
        return None

    def is_zero(self) -> bool:
        return not self.residue

    def is_rational(self) -> bool:
        return len(self.residue) <= 1

    def as_rational(self) -> Rat:
        if not self.is_rational():
            raise ValueError("not a rational number")
        return self.residue[0] if self.residue else ZERO

    # -- arithmetic -------------------------------------------------------
    def __add__(self, other):
        o = self._other(other)
        if o is None:
            return NotImplemented
        return AlgNum(self.field, up.add(self.residue, o))

    __radd__ = __add__

    def __neg__(self):
        return AlgNum(self.field, up.neg(self.residue))

    def __sub__(self, other):
        o = self._other(other)
        if o is None:
            return NotImplemented
        return AlgNum(self.field, up.sub(self.residue, o))

    def __rsub__(self, other):
        o = self._other(other)
        if o is None:
            return NotImplemented
        return AlgNum(self.field, up.sub(o, self.residue))

    def __mul__(self, other):
        o = self._other(other)
        if o is None:
            return NotImplemented
        return AlgNum(self.field, up.rem(up.mul(self.residue, o), self.field.minpoly))

    __rmul__ = __mul__

    def inverse(self) -> "AlgNum":
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero algebraic number")
        g, s, _ = up.xgcd(self.residue, self.field.minpoly)
        # minpoly irreducible, so the gcd is 1
        return AlgNum(self.field, s)

    def __truediv__(self, other):
        o = self._other(other)
        if o is None:
            return NotImplemented
        return self * AlgNum(self.field, o).inverse()

    def __rtruediv__(self, other):
        o = self._other(other)
        if o is None:
            return NotImplemented
        return AlgNum(self.field, o) * self.inverse()

    def __pow__(self, k: int):
        if k < 0:
            return self.inverse() ** (-k)
        return AlgNum(self.field, up.power_mod(self.residue, k, self.field.minpoly))

    # -- comparison -------------------------------------------------------
    def __eq__(self, other):
        if isinstance(other, AlgNum):
            if other.field != self.field:
                if self.is_rational() and other.is_rational():
                    return self.as_rational() == other.as_rational()
                raise IncompatibleExtension("cannot compare numbers from different extensions")
            return self.residue == other.residue
        if is_rational(other):
            return self.residue == up.trim([other])
        return NotImplemented

    def __ne__(self, other):
        eq = self.__eq__(other)
        return eq if eq is NotImplemented else not eq

    def __hash__(self):
        if self.is_rational():
            return hash(self.as_rational())
        return hash((self.field, self.residue))

    def __bool__(self):
        return not self.is_zero()

    # -- numerics ---------------------------------------------------------
    def approx(self, dps: int = 50):
        import mpmath

        theta = self.field.approx(dps)
        with mpmath.workdps(dps + 20):
            acc = mpmath.mpc(0)
            for c in reversed(self.residue):
                acc = acc * theta + mpmath.mpf(int(c.numerator)) / int(c.denominator)
        return acc

    def to_json(self) -> dict:
        return {
            "minpoly": up.to_str(self.field.minpoly, "t"),
            "box": [rat_str(x) for x in self.field.box],
            "residue": up.to_str(self.residue, "t"),
        }

    @classmethod
    def from_json(cls, data: dict) -> "AlgNum":
        """Inverse of :meth:`to_json`; the isolating box is re-checked."""
        field = NumberField(_parse_univariate(data["minpoly"]), data["box"])
        return cls(field, _parse_univariate(data["residue"]))

    def __str__(self):
        return f"[{up.to_str(self.residue, 't')} | t: {up.to_str(self.field.minpoly, 't')} in {[rat_str(x) for x in self.field.box]}]"

    __repr__ = __str__


def _parse_univariate(text: str) -> up.UPoly:
    from .parse import parse_polynomial
    from .polynomial import Ring

    f = parse_polynomial(text, Ring(("t",)))
    coeffs = [ZERO] * (f.degree() + 1 if not f.is_zero() else 0)
    for (e,), c in f.raw().items():
        coeffs[e] = c
    return up.trim(coeffs)
