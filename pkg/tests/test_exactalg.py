import math
from fractions import Fraction

import mpmath
import pytest
from hypothesis import given
from hypothesis import strategies as st

from hadarank.errors import AllZeroProduct, NotHomogeneous, ParseError, ZeroCoordinate, ZeroGenerator
from hadarank.exactalg import (
    AlgNum,
    Ideal,
    NumberField,
    Polynomial,
    ProjPoint,
    Ring,
    evaluate,
    format_ideal,
    hadamard_inverse,
    hadamard_point,
    hadamard_product,
    ones,
    parse_ideal_text,
    parse_polynomial,
    rat,
    rat_str,
)
from hadarank.exactalg import univariate as up

from conftest import C_TEXT, Q_TEXT, X_TEXT

R2 = Ring.projective(2)


# -- rationals ----------------------------------------------------------------

@given(st.integers(-10**6, 10**6), st.integers(1, 10**6))
def test_rationals_reduced(a, b):
    q = rat(a) / rat(b)
    assert q.denominator >= 1
    assert math.gcd(abs(int(q.numerator)), int(q.denominator)) == 1
    assert Fraction(int(q.numerator), int(q.denominator)) == Fraction(a, b)


def test_rationals_reduced_bulk():
    import random

    r = random.Random(7)
    for _ in range(10_000):
        a, b = r.randint(-10**9, 10**9), r.randint(1, 10**9)
        q = rat(a) / rat(b)
        assert math.gcd(abs(int(q.numerator)), int(q.denominator)) == 1


def test_rat_refuses_floats():
    with pytest.raises(TypeError):
        rat(0.5)


@given(st.fractions())
def test_rat_str_round_trip(x):
    assert rat(rat_str(rat(x))) == rat(x)


# -- polynomials ----------------------------------------------------------------

monomials = st.tuples(*[st.integers(0, 3)] * 3)
coeffs = st.builds(Fraction, st.integers(-49, 49), st.integers(1, 20))
polys = st.dictionaries(monomials, coeffs, max_size=5).map(lambda d: Polynomial(R2, {m: rat(c) for m, c in d.items()}))


@given(polys, polys, polys)
def test_polynomial_ring_axioms(f, g, h):
    assert (f + g) * h == f * h + g * h
    assert f * g == g * f
    assert (f * g) * h == f * (g * h)
    assert f - f == R2.zero()


@given(polys)
def test_no_stored_zero_coefficients(f):
    assert all(c != 0 for c in f.raw().values())
    assert all(len(m) == 3 for m in f.raw())


@given(polys)
def test_parse_round_trip(f):
    assert parse_polynomial(str(f), R2) == f


def test_parse_examples():
    q = parse_polynomial(Q_TEXT, R2)
    assert q.degree() == 2 and len(q.raw()) == 3
    x = parse_polynomial(X_TEXT, R2)
    assert x.coefficient((1, 0, 1)) == -2
    assert parse_polynomial("0", R2).is_zero()
    with pytest.raises(ZeroGenerator):
        Ideal(R2, [parse_polynomial("0", R2)])
    assert parse_polynomial("(x0 + 1/2*x1)^2", R2) == parse_polynomial("x0^2 + x0*x1 + 1/4*x1^2", R2)


def test_parse_errors():
    with pytest.raises(ParseError):
        parse_polynomial("x0 +* x1", R2)
    with pytest.raises(ParseError):
        parse_polynomial("x7", R2)
    with pytest.raises(NotHomogeneous):
        Ideal.parse(R2, ["x0^2 + x1"], projective=True)


def test_ideal_file_round_trip():
    I = Ideal.parse(R2, [C_TEXT, Q_TEXT])
    J = parse_ideal_text(format_ideal(I, ["two conics"]))
    assert J.generators == I.generators and J.ring == I.ring
    with pytest.raises(ParseError):
        parse_ideal_text("x0\n")


def test_evaluate_examples():
    f = parse_polynomial(C_TEXT, R2)
    assert evaluate(f, ProjPoint.parse("-1:6:3")) == 0
    assert evaluate(f, ProjPoint.parse("9:1:-2")) == 0


@given(polys, st.integers(-5, 5).filter(lambda x: x != 0))
def test_homogeneous_scaling(f, lam):
    for d, g in f.homogeneous_components().items():
        assert g.evaluate([lam] * 3) == rat(lam) ** d * g.evaluate([1, 1, 1])


# -- points -------------------------------------------------------------------------

def test_hadamard_point_examples():
    prod = hadamard_product([ProjPoint.parse(s) for s in ("0:1:1", "-1:6:3", "9:1:-2")])
    assert prod == ProjPoint.parse("0:1:-1")
    p = ProjPoint.parse("3:-2:5")
    assert hadamard_point(p, ones(2)) == p
    with pytest.raises(AllZeroProduct):
        hadamard_point(ProjPoint.parse("1:0"), ProjPoint.parse("0:1"))


def test_hadamard_inverse_examples():
    p = ProjPoint.parse("1:2:4")
    assert hadamard_inverse(p) == ProjPoint.parse("1:1/2:1/4")
    assert hadamard_point(p, hadamard_inverse(p)) == ones(2)
    assert hadamard_inverse(ones(3)) == ones(3)
    with pytest.raises(ZeroCoordinate):
        hadamard_inverse(ProjPoint.parse("0:1:1"))


nonzero = st.builds(Fraction, st.integers(1, 40), st.integers(1, 30)).flatmap(lambda x: st.sampled_from([x, -x]))
points = st.lists(nonzero, min_size=3, max_size=3).map(lambda cs: ProjPoint([rat(c) for c in cs]))


@given(points, points, points)
def test_hadamard_point_assoc_comm(p, q, r):
    assert hadamard_point(p, q) == hadamard_point(q, p)
    assert hadamard_point(hadamard_point(p, q), r) == hadamard_point(p, hadamard_point(q, r))


@given(points, st.integers(-9, 9).filter(lambda x: x != 0))
def test_points_equal_up_to_scaling(p, lam):
    assert ProjPoint([c * lam for c in p.coords]) == p
    assert hash(ProjPoint([c * lam for c in p.coords])) == hash(p)


def test_point_parse_and_zero_count():
    p = ProjPoint.parse("(0:5:0:1/2)")
    assert p.zero_count() == 2 and p.zero_set() == frozenset({0, 2})
    with pytest.raises(ValueError):
        ProjPoint.parse("0:0")
    with pytest.raises(ParseError):
        ProjPoint.parse("1:x")


# -- algebraic numbers ----------------------------------------------------------------

def test_sqrt2_field():
    K = NumberField.conjugates([-2, 0, 1])
    assert len(K) == 2
    t = K[0].theta()
    assert (t * t - 2).is_zero()
    assert (t.inverse() * t - 1).is_zero()


def test_complex_roots_isolated():
    fields = NumberField.conjugates([1, 0, 1])
    values = sorted(complex(F.approx(30)).imag for F in fields)
    assert values == pytest.approx([-1.0, 1.0])


def test_box_must_isolate():
    with pytest.raises(ValueError):
        NumberField([-2, 0, 1], (-10, 10, -1, 1))


def test_algnum_json_round_trip():
    F = NumberField.conjugates([-3, 0, 1])[1]
    a = AlgNum(F, (rat(1), rat(2)))
    b = AlgNum.from_json(a.to_json())
    assert (a - b).is_zero()


residues = st.lists(st.integers(-6, 6), min_size=1, max_size=3)
minpolys = st.sampled_from([[-2, 0, 1], [1, 0, 1], [-2, 0, 0, 1], [1, 1, 1], [-5, 1, 0, 1]])


@given(minpolys, residues, residues, st.integers(0, 2))
def test_algnum_is_zero_matches_high_precision(mp, r1, r2, which):
    fields = NumberField.conjugates(mp)
    F = fields[which % len(fields)]
    a, b = AlgNum(F, [rat(x) for x in r1]), AlgNum(F, [rat(x) for x in r2])
    z = a * b - b * a + a - a * 1
    expr = a * b - AlgNum(F, up.mul([rat(x) for x in r1], [rat(x) for x in r2]))
    with mpmath.workdps(200):
        for value in (z, expr, a):
            numeric = value.approx(200)
            assert value.is_zero() == (abs(numeric) < mpmath.mpf(10) ** -150)
