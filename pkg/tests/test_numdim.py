import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from hadarank.errors import NotACurveParam, ParseError
from hadarank.exactalg import ProjPoint
from hadarank.groebner import kernels, projective_dimension
from hadarank.hadamard import variety_power
from hadarank.numdim import (
    Parametrization,
    check_avoids_delta,
    dim_report,
    format_param,
    generic_rank_estimate,
    jacobian_dimension,
    jacobian_ranks,
    parse_param_text,
    power_param,
    read_param,
    sample_point,
    write_param,
)
from hadarank.zoo import (
    REGISTRY,
    binomial_hypersurface,
    conic_C,
    conic_Q,
    get,
    grassmannian,
    monomial_curve,
    random_curve,
    tangential_param,
)


def test_param_file_round_trip(tmp_path):
    P = conic_C().param
    path = tmp_path / "c.param"
    write_param(path, P, ["conic C"])
    Q = read_param(path)
    assert Q.maps == P.maps and Q.k == P.k
    assert parse_param_text(format_param(P)).maps == P.maps
    with pytest.raises(ParseError):
        parse_param_text("t0\nt1\n")
    with pytest.raises(ParseError):
        parse_param_text("params 1\nt0\n")


def test_zero_map_rejected():
    with pytest.raises(ValueError):
        Parametrization.from_strings(1, ["0", "0"])


def test_power_param_shape():
    P = conic_C().param
    assert power_param(P, 1).k == P.k + 1
    P2 = power_param(P, 2)
    assert P2.k == 2 * P.k + 1 and P2.scaled
    assert jacobian_ranks(P2, 0) == [3, 3, 3]


def test_power_param_satisfies_closed_form():
    e = binomial_hypersurface(2, 2, 2)
    P3 = power_param(e.param, 3)
    rng = random.Random(2)
    for _ in range(5):
        x0, x1, x2 = P3.evaluate([rng.randint(-9, 9) for _ in range(P3.k)])
        assert x1 * x1 - 8 * x0 * x2 == 0


def test_dimension_examples():
    assert jacobian_dimension(grassmannian(2, 4).param) == 4
    assert jacobian_dimension(tangential_param(2, 1)) == 2
    assert generic_rank_estimate(conic_C().param, 4) == 2
    assert generic_rank_estimate(conic_Q().param, 4) == 2
    assert generic_rank_estimate(binomial_hypersurface(2, 2, 2).param, 4) is None


def test_grassmannian_rank_by_hand():
    # minors of a 2x4 matrix are invariant under SL2 acting on rows, so the
    # Jacobian at a full-rank matrix has rank 8 - 3 = 5 (the cone over G(2,4))
    P = grassmannian(2, 4).param
    rows = [[int(g.evaluate([1, 0, 2, 3, 0, 1, 5, 7])) for g in (f.diff(l) for l in range(P.k))] for f in P.maps]
    assert kernels.integer_rank(rows) == 5
    assert jacobian_dimension(P, 3) == 4


def test_report_reproducible():
    P = conic_C().param
    a, b = dim_report(P, 2, seed=9), dim_report(P, 2, seed=9)
    assert a == b and a.to_json()["dim"] == 2 and a.to_json()["m"] == 2


@given(st.integers(0, 10**6))
def test_ranks_never_exceed_dimension(seed):
    P = conic_C().param
    assert all(r <= 3 for r in jacobian_ranks(power_param(P, 2), seed, trials=2))
    assert all(r <= 2 for r in jacobian_ranks(P, seed, trials=2))


@pytest.mark.parametrize("name", sorted(REGISTRY))
def test_dimension_monotone(name):
    P = get(name).param
    dims = []
    for m in range(1, 5):
        dims.append(jacobian_dimension(power_param(P, m), 0))
        if dims[-1] == P.N:
            break
    assert dims == sorted(dims)
    assert all(d <= P.N for d in dims)


@pytest.mark.parametrize("entry", [conic_C, conic_Q, lambda: binomial_hypersurface(2, 2, 2)])
@pytest.mark.parametrize("m", [1, 2])
def test_exact_and_jacobian_dimensions_agree(entry, m):
    e = entry()
    assert projective_dimension(variety_power(e.ideal, m)) == jacobian_dimension(power_param(e.param, m), 0)


def test_grassmannian_power_dimensions_agree():
    e = grassmannian(2, 4)
    assert projective_dimension(e.ideal) == jacobian_dimension(e.param)


@pytest.mark.parametrize("name", sorted(n for n in REGISTRY if get(n).ideal is not None and get(n).param is not None))
def test_samples_satisfy_ideal(name):
    e = get(name)
    rng = random.Random(4)
    for _ in range(5):
        assert e.ideal.vanishes_at(sample_point(e.param, rng, 20))


def test_check_delta_examples():
    assert not check_avoids_delta(monomial_curve(3))
    bad = check_avoids_delta(conic_C().param)
    assert not bad.avoids and bad.offending is not None
    curve = random_curve(3, 3, 0)
    cert = check_avoids_delta(curve.param)
    assert cert.avoids and all(r != 0 for _, r in cert.resultants) and len(cert.resultants) == 6
    with pytest.raises(NotACurveParam):
        check_avoids_delta(grassmannian(2, 4).param)


def test_check_delta_larger_strata():
    P = monomial_curve(3)
    assert not check_avoids_delta(P, k=0)
    assert check_avoids_delta(random_curve(3, 3, 1).param, k=0)


def test_curve_growth():
    rng = random.Random(2024)
    for _ in range(20):
        P = random_curve(3, 3, rng).param
        assert [jacobian_dimension(power_param(P, m), rng) for m in (1, 2, 3)] == [1, 2, 3]
        assert generic_rank_estimate(P, 4, rng) == 3


def test_sample_point_is_on_image():
    P = conic_C().param
    p = sample_point(P, 1)
    assert isinstance(p, ProjPoint) and conic_C().ideal.vanishes_at(p)
