"""Dense univariate polynomials over Q as coefficient tuples, lowest degree first.

Only what the algebraic-number layer and the solver need: Euclidean
arithmetic, square-free parts, resultants.  Factorization over Q and complex
root isolation are delegated to sympy.
"""

from __future__ import annotations

from typing import Sequence

from .rational import ONE, ZERO, Rat, rat, rat_str

UPoly = tuple


def trim(a: Sequence) -> UPoly:
    a = [rat(c) for c in a]
    while a and a[-1] == 0:
        a.pop()
    return tuple(a)


def deg(a: UPoly) -> int:
    return len(a) - 1


def add(a: UPoly, b: UPoly) -> UPoly:
    n = max(len(a), len(b))
    return trim([(a[i] if i < len(a) else ZERO) + (b[i] if i < len(b) else ZERO) for i in range(n)])


def neg(a: UPoly) -> UPoly:
    return tuple(-c for c in a)


def sub(a: UPoly, b: UPoly) -> UPoly:
    return add(a, neg(b))


def scale(a: UPoly, c) -> UPoly:
    return trim([c * x for x in a])


def mul(a: UPoly, b: UPoly) -> UPoly:
    if not a or not b:
        return ()
    out = [ZERO] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return trim(out)


def divmod_(a: UPoly, b: UPoly) -> tuple[UPoly, UPoly]:
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    r = list(a)
    q = [ZERO] * max(len(a) - len(b) + 1, 0)
    inv = ONE / b[-1]
    db = len(b) - 1
    for k in range(len(r) - 1, db - 1, -1):
        c = r[k] * inv
        if c:
            q[k - db] = c
            for j in range(db + 1):
                r[k - db + j] -= c * b[j]
    return trim(q), trim(r[:db])


def rem(a: UPoly, b: UPoly) -> UPoly:
    return divmod_(a, b)[1]


def monic(a: UPoly) -> UPoly:
    if not a:
        return a
    return scale(a, ONE / a[-1])


def gcd(a: UPoly, b: UPoly) -> UPoly:
    while b:
        a, b = b, rem(a, b)
    return monic(a)


def xgcd(a: UPoly, b: UPoly) -> tuple[UPoly, UPoly, UPoly]:
    """Return (g, s, t) with s*a + t*b = g monic."""
    r0, r1 = a, b
    s0, s1 = (ONE,), ()
    t0, t1 = (), (ONE,)
    while r1:
        q, r = divmod_(r0, r1)
        r0, r1 = r1, r
        s0, s1 = s1, sub(s0, mul(q, s1))
        t0, t1 = t1, sub(t0, mul(q, t1))
    if not r0:
        return (), s0, t0
    inv = ONE / r0[-1]
    return scale(r0, inv), scale(s0, inv), scale(t0, inv)


def deriv(a: UPoly) -> UPoly:
    return trim([a[i] * i for i in range(1, len(a))])


def squarefree(a: UPoly) -> UPoly:
    """Monic square-free part (characteristic zero)."""
    if len(a) <= 1:
        return monic(a)
    g = gcd(a, deriv(a))
    return monic(divmod_(a, g)[0])


def evaluate(a: UPoly, x):
    acc = ZERO
    for c in reversed(a):
        acc = acc * x + c
    return acc


def power_mod(a: UPoly, k: int, m: UPoly) -> UPoly:
    result = (ONE,)
    base = rem(a, m)
    while k:
        if k & 1:
            result = rem(mul(result, base), m)
        k >>= 1
        if k:
            base = rem(mul(base, base), m)
    return result


def determinant(rows: list[list]) -> Rat:
    """Exact determinant by Gaussian elimination over Q."""
    a = [[rat(x) for x in row] for row in rows]
    n = len(a)
    det = ONE
    for c in range(n):
        piv = next((r for r in range(c, n) if a[r][c] != 0), None)
        if piv is None:
            return ZERO
        if piv != c:
            a[c], a[piv] = a[piv], a[c]
            det = -det
        det *= a[c][c]
        inv = ONE / a[c][c]
        for r in range(c + 1, n):
            f = a[r][c] * inv
            if f:
                for k in range(c, n):
                    a[r][k] -= f * a[c][k]
    return det


def sylvester_resultant(f: Sequence, g: Sequence, df: int | None = None, dg: int | None = None) -> Rat:
    """Resultant of f, g taken with formal degrees ``df``, ``dg``.

    With formal degrees this is the resultant of the binary forms obtained by
    homogenizing, so a common root at infinity also makes it vanish.
    """
    f = [rat(c) for c in f]
    g = [rat(c) for c in g]
    df = len(f) - 1 if df is None else df
    dg = len(g) - 1 if dg is None else dg
    f = f + [ZERO] * (df + 1 - len(f))
    g = g + [ZERO] * (dg + 1 - len(g))
    n = df + dg
    if n == 0:
        return ONE
    rows = []
    for i in range(dg):
        row = [ZERO] * n
        for j, c in enumerate(reversed(f)):
            row[i + j] = c
        rows.append(row)
    for i in range(df):
        row = [ZERO] * n
        for j, c in enumerate(reversed(g)):
            row[i + j] = c
        rows.append(row)
    return determinant(rows)


def to_str(a: UPoly, var: str = "t") -> str:
    if not a:
        return "0"
    parts = []
    for i in range(len(a) - 1, -1, -1):
        c = a[i]
        if not c:
            continue
        mono = "" if i == 0 else (var if i == 1 else f"{var}^{i}")
        mag = -c if c < 0 else c
        body = rat_str(mag) if not mono else (mono if mag == 1 else f"{rat_str(mag)}*{mono}")
        sign = "-" if c < 0 else "+"
        parts.append((sign, body))
    first_sign, first = parts[0]
    out = ("-" if first_sign == "-" else "") + first
    for sign, body in parts[1:]:
        out += f" {sign} {body}"
    return out


# -- sympy-backed pieces ---------------------------------------------------

def _to_sympy(a: UPoly):
    import sympy

    t = sympy.Symbol("t")
    coeffs = [sympy.Rational(int(c.numerator), int(c.denominator)) for c in reversed(a)]
    return sympy.Poly(coeffs, t, domain="QQ")


def _from_sympy_rational(x) -> Rat:
    import sympy

    x = sympy.Rational(x)
    return Rat(int(x.p), int(x.q))


def factor(a: UPoly) -> list[tuple[UPoly, int]]:
    """Monic irreducible factors over Q with multiplicities, deterministic order."""
    if len(a) <= 1:
        return []
    _, facs = _to_sympy(a).factor_list()
    out = []
    for f, k in facs:
        coeffs = [_from_sympy_rational(c) for c in reversed(f.all_coeffs())]
        out.append((monic(trim(coeffs)), k))
    out.sort(key=lambda fk: (len(fk[0]), tuple(fk[0])))
    return out


def isolating_boxes(a: UPoly) -> list[tuple[Rat, Rat, Rat, Rat]]:
    """Rational rectangles (re_lo, re_hi, im_lo, im_hi), one per distinct complex root."""
    import sympy

    P = _to_sympy(squarefree(a))
    real, cplx = P.intervals(all=True)
    boxes = []
    for (lo, hi), _ in real:
        lo, hi = _from_sympy_rational(lo), _from_sympy_rational(hi)
        boxes.append((lo, hi, ZERO, ZERO))
    for (z1, z2), _ in cplx:
        re1, im1 = sympy.re(z1), sympy.im(z1)
        re2, im2 = sympy.re(z2), sympy.im(z2)
        boxes.append(
            (_from_sympy_rational(re1), _from_sympy_rational(re2), _from_sympy_rational(im1), _from_sympy_rational(im2))
        )
    boxes.sort(key=lambda b: (b[2] + b[3], b[0] + b[1]))
    return boxes


def count_roots_in_box(a: UPoly, box) -> int:
    """Exact number of distinct roots of ``a`` in the closed rectangle ``box``."""
    import sympy

    P = _to_sympy(squarefree(a))
    re_lo, re_hi, im_lo, im_hi = (sympy.Rational(int(x.numerator), int(x.denominator)) for x in box)
    if im_lo == 0 and im_hi == 0:
        return P.count_roots(re_lo, re_hi)
    return P.count_roots(re_lo + sympy.I * im_lo, re_hi + sympy.I * im_hi)


def rational_roots(a: UPoly) -> list[Rat]:
    return sorted(-f[0] for f, _ in factor(a) if len(f) == 2)
