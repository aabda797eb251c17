import random
import pytest
import sympy

from hadarank.exactalg import ProjPoint, rat
from hadarank.exactalg.parse import read_ideal
from hadarank.numdim import jacobian_dimension, read_param, sample_point
from hadarank.zoo import (
    PROVENANCE,
    REGISTRY,
    Fact,
    ZooEntry,
    chow_param,
    closed_power,
    exponents,
    get,
    grassmannian,
    grassmannian_ideal,
    names,
    one_zero_minor_matrix,
    plucker,
    reducible_param,
    secant_param,
    tangential_coefficients,
    tangential_param,
    tangential_witness,
)


@pytest.mark.parametrize("name", sorted(REGISTRY))
def test_entries_verify(name):
    e = get(name)
    assert e.ideal is not None or e.param is not None
    assert all(f.provenance in PROVENANCE for f in e.facts)
    assert all(ok for _, ok in e.verify())


def test_entry_needs_content():
    with pytest.raises(ValueError):
        ZooEntry("empty")
    with pytest.raises(ValueError):
        Fact("x", lambda e: True, "FOLKLORE")


def test_emit_round_trip(tmp_path):
    for name in ("C", "G_2_4"):
        e = get(name)
        paths = e.emit(tmp_path)
        assert {p.suffix for p in paths} == {".ideal", ".param"}
        assert read_ideal(tmp_path / f"{name}.ideal").generators == e.ideal.generators
        assert read_param(tmp_path / f"{name}.param").maps == e.param.maps
    assert names() == sorted(REGISTRY)


def test_closed_power_and_validation():
    assert str(closed_power(3, 3, 1, 2).generators[0]) in ("x1^3 - x0^2*x3", "-x0^2*x3 + x1^3")
    with pytest.raises(ValueError):
        closed_power(2, 2, 0, 1)


def test_grassmannian_quadric():
    I = grassmannian_ideal(2, 4)
    assert len(I.generators) == 1
    e = grassmannian(2, 4)
    rng = random.Random(8)
    for _ in range(4):
        p = sample_point(e.param, rng, 9)
        z = p.coords
        assert z[0] * z[5] - z[1] * z[4] + z[2] * z[3] == 0


@pytest.mark.parametrize("k,n", [(1, 3), (2, 3), (2, 4), (2, 5)])
def test_one_zero_minor(k, n):
    for seed in range(10):
        matrix, p = one_zero_minor_matrix(k, n, seed)
        minors = plucker(matrix)
        assert sum(1 for m in minors if m == 0) == 1
        assert p == ProjPoint(minors)


def _brute_expansion(d, n, a, b):
    xs = sympy.symbols(f"x0:{n + 1}")
    L = sum(sympy.Rational(int(ai.numerator), int(ai.denominator)) * x for ai, x in zip(a, xs))
    M = sum(sympy.Rational(int(bi.numerator), int(bi.denominator)) * x for bi, x in zip(b, xs))
    poly = sympy.Poly(sympy.expand(L ** (d - 1) * M), *xs)
    return [rat(str(poly.coeff_monomial(tuple(alpha)))) for alpha in exponents(d, n)]


@pytest.mark.parametrize("d,n", [(2, 1), (3, 1), (3, 2), (4, 2)])
def test_tangential_formula(d, n):
    rng = random.Random(d * 10 + n)
    for _ in range(100):
        a = [rat(rng.randint(-7, 7)) for _ in range(n + 1)]
        b = [rat(rng.randint(-7, 7)) for _ in range(n + 1)]
        assert tangential_coefficients(d, n, a, b) == _brute_expansion(d, n, a, b)


@pytest.mark.parametrize("d,n", [(3, 1), (3, 2), (2, 1), (4, 2)])
def test_tangential_witnesses(d, n):
    for alpha in exponents(d, n):
        a, b = tangential_witness(d, n, alpha, 0)
        coeffs = tangential_coefficients(d, n, a, b)
        idx = exponents(d, n).index(alpha)
        assert coeffs[idx] == 0 and all(c != 0 for i, c in enumerate(coeffs) if i != idx)


def test_tangential_sample_matches_expansion():
    P = tangential_param(3, 1)
    vals = [rat(2), rat(-1), rat(3), rat(5)]
    assert P.evaluate(vals) == _brute_expansion(3, 1, vals[:2], vals[2:])


def test_family_dimensions():
    assert jacobian_dimension(tangential_param(2, 1)) == 2
    assert jacobian_dimension(secant_param(tangential_param(3, 1), 2)) == 3
    assert jacobian_dimension(reducible_param([1, 2], 2)) == 7
    assert jacobian_dimension(chow_param(2, 1)) == 2


def test_exponents_order():
    assert exponents(2, 1) == [(2, 0), (1, 1), (0, 2)]
    assert len(exponents(3, 2)) == 10 and len(set(exponents(3, 2))) == 10
    assert all(sum(e) == 3 for e in exponents(3, 2))
