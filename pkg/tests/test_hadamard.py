import random

import pytest

from hadarank.errors import AllZeroProduct, ZeroCoordinate
from hadarank.exactalg import ProjPoint, Ring, hadamard_inverse, hadamard_point, hadamard_power
from hadarank.groebner import ideals_equal, projective_dimension
from hadarank.hadamard import (
    PowerCache,
    export_power,
    power_membership,
    rank_locus,
    translate_ideal,
    variety_power,
    variety_product,
)
from hadarank.exactalg.parse import read_ideal
from hadarank.numdim import sample_point
from hadarank.zoo import binomial_hypersurface, closed_power, conic_C, conic_C_sharp, conic_Q

from conftest import plane_ideal

R2 = Ring.projective(2)


def test_binomial_product(I_X):
    assert ideals_equal(variety_product(I_X, I_X), plane_ideal("x1^2 - 4*x0*x2"))


def test_square_of_Q_fills_plane(I_Q):
    assert variety_product(I_Q, I_Q).is_zero()


def test_product_with_ones_point(I_C):
    ones_ideal = plane_ideal("x0 - x1", "x1 - x2")
    assert ideals_equal(variety_product(I_C, ones_ideal), I_C)


def test_power_closed_form(I_X):
    for m in (1, 2, 3):
        assert ideals_equal(variety_power(I_X, m), closed_power(2, 2, 2, m))
        assert ideals_equal(variety_power(I_X, m), plane_ideal(f"x1^2 - {2 ** m}*x0*x2"))


def test_power_of_C(I_C):
    assert ideals_equal(variety_power(I_C, 1), I_C)
    assert variety_power(I_C, 2).is_zero()


def test_power_cache_consistent(I_X):
    cache = PowerCache(I_X)
    fresh = PowerCache(I_X)
    for m in (1, 2, 3, 4):
        assert ideals_equal(variety_power(I_X, m, cache), variety_power(I_X, m, fresh))
    dims = [cache.dimension(m) for m in (1, 2, 3, 4)]
    assert dims == sorted(dims)


@pytest.mark.parametrize("entry", [conic_C, conic_Q, conic_C_sharp, lambda: binomial_hypersurface(2, 2, 2)])
def test_dimension_monotone(entry):
    I = entry().ideal
    dims = [projective_dimension(variety_power(I, m)) for m in (1, 2, 3)]
    assert dims == sorted(dims)


def test_rank_locus(I_Q, I_X, I_C):
    assert rank_locus(I_Q, 2).is_zero()
    assert ideals_equal(rank_locus(I_C, 1), I_C)
    expected = plane_ideal("(x1^2 - 2*x0*x2)*(x1^2 - 4*x0*x2)")
    assert ideals_equal(rank_locus(I_X, 2), expected)


def test_power_membership(I_C, I_X):
    assert power_membership(ProjPoint.parse("0:1:-1"), I_C, 2)
    assert not power_membership(ProjPoint.parse("0:1:-1"), I_C, 1)
    for m in (1, 2, 3):
        p = ProjPoint.parse(f"1:1:1/{2 ** m}")
        assert power_membership(p, I_X, m)
        assert not any(power_membership(p, I_X, r) for r in range(1, m))
    assert power_membership(ProjPoint.parse("0:1:1"), I_C, 1)


def test_membership_monotone_when_ones_on_variety():
    I = plane_ideal("x0^2 - x1*x2")
    assert I.vanishes_at(ProjPoint.parse("1:1:1"))
    rng = random.Random(0)
    for _ in range(6):
        p = ProjPoint([rng.randint(-4, 4) or 1 for _ in range(3)])
        for m in (1, 2):
            if power_membership(p, I, m):
                assert power_membership(p, I, m + 1)


@pytest.mark.parametrize("pair", [(conic_C, conic_C_sharp), (conic_C_sharp, lambda: binomial_hypersurface(2, 2, 2))])
def test_sampled_products_satisfy_product_ideal(pair):
    X, Y = pair[0](), pair[1]()
    prod = variety_product(X.ideal, Y.ideal)
    rng = random.Random(11)
    for _ in range(5):
        p, q = sample_point(X.param, rng, 20), sample_point(Y.param, rng, 20)
        try:
            r = hadamard_point(p, q)
        except AllZeroProduct:
            continue
        assert prod.vanishes_at(r)


def test_translate_identities(I_C):
    q = ProjPoint.parse("1:2:3")
    assert ideals_equal(translate_ideal(I_C, ProjPoint.parse("1:1:1")), I_C)
    assert ideals_equal(translate_ideal(translate_ideal(I_C, q), hadamard_inverse(q)), I_C)
    with pytest.raises(ZeroCoordinate):
        translate_ideal(I_C, ProjPoint.parse("0:1:1"))


@pytest.mark.parametrize("entry", [conic_C, conic_Q, conic_C_sharp, lambda: binomial_hypersurface(2, 2, 2)])
def test_translate_and_power_commute(entry):
    I = entry().ideal
    q = ProjPoint.parse("1:2:3")
    lhs = translate_ideal(variety_power(I, 2), hadamard_power(q, 2))
    rhs = variety_power(translate_ideal(I, q), 2)
    assert ideals_equal(lhs, rhs)


def test_translated_points(I_C):
    q = ProjPoint.parse("2:-1:5")
    T = translate_ideal(I_C, q)
    for s in ("0:1:1", "-1:6:3", "9:1:-2"):
        assert T.vanishes_at(hadamard_point(q, ProjPoint.parse(s)))


def test_export_power(tmp_path, I_X):
    path = tmp_path / "sq.ideal"
    export_power(path, I_X, 2)
    text = path.read_text()
    assert text.startswith("# power 2 of ")
    assert ideals_equal(read_ideal(path), plane_ideal("x1^2 - 4*x0*x2"))


def test_powers_need_positive_m(I_C):
    with pytest.raises(ValueError):
        variety_power(I_C, 0)
