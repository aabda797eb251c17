import json
import random

import pytest

from hadarank.errors import NotStronglyConcise, NotZeroDimensional
from hadarank.exactalg import AlgNum, Ideal, ProjPoint, Ring, hadamard_product
from hadarank.groebner import GREVLEX, groebner_basis
from hadarank.numdim import sample_point
from hadarank.rankengine.rank import (
    ZeroPattern,
    border_rank,
    build_system,
    compose_reduction,
    decomposition_exists,
    decomposition_witness,
    hadamard_rank,
    verify_certificate,
    verify_decomposition,
    zero_pattern_reduce,
    zero_patterns,
)
from hadarank.rankengine.solve import solve_affine, solve_projective
from hadarank.zoo import conic_C_sharp

P = ProjPoint.parse


# -- solver -----------------------------------------------------------------------

def test_solve_sqrt2():
    ring = Ring(("x", "y"))
    I = Ideal.parse(ring, ["x^2 - 2", "y - x"], projective=False)
    sols = solve_affine(I)
    assert len(sols) == 2
    for s in sols:
        x, y = s.coords
        assert isinstance(x, AlgNum) and (x * x - 2).is_zero() and (x - y).is_zero()
    assert sorted(float(s.coords[0].approx(30).real) for s in sols) == pytest.approx([-2 ** 0.5, 2 ** 0.5])


def test_solve_complex_pair():
    ring = Ring(("x", "y"))
    sols = solve_affine(Ideal.parse(ring, ["x^2 + 1", "y - 1"], projective=False))
    assert len(sols) == 2
    imag = sorted(complex(s.coords[0].approx(30)).imag for s in sols)
    assert imag == pytest.approx([-1, 1])
    assert all(s.coords[1] == 1 for s in sols)


def test_tangency_multiplicity(I_C):
    sols = solve_projective(I_C + I_C.ring.gen(0))
    assert [(s.point, s.multiplicity) for s in sols] == [(P("0:1:1"), 2)]


def test_positive_dimensional_rejected():
    ring = Ring(("x", "y"))
    with pytest.raises(NotZeroDimensional):
        solve_affine(Ideal.parse(ring, ["x*y"], projective=False))


def test_unit_system_has_no_solutions():
    ring = Ring(("x",))
    assert solve_affine(Ideal.parse(ring, ["x", "x - 1"], projective=False)) == []


# -- zero patterns ------------------------------------------------------------------

@pytest.mark.parametrize("text,m", [("0:1:-1", 2), ("0:0:1", 2), ("0:0:1:1", 3), ("1:2:3", 2)])
def test_zero_pattern_invariants(text, m):
    p = P(text)
    pats = zero_patterns(p, m)
    assert pats
    for pat in pats:
        assert len(pat.zeros) == m
        assert frozenset().union(*pat.zeros) == p.zero_set()
        assert all(len(z) < len(p) for z in pat.zeros)
        assert ZeroPattern.from_json(pat.to_json()) == pat


# -- decompositions -------------------------------------------------------------------

def test_decomposition_examples(I_C):
    res = decomposition_exists(P("0:1:-1"), I_C, 2, stop_early=False)
    assert res.exists is False
    for r in res.patterns:
        assert groebner_basis(r.system.ideal, GREVLEX).is_unit()
    assert decomposition_exists(P("0:1:-1"), I_C, 3).exists
    assert decomposition_exists(P("0:1:1"), I_C, 1).exists


def test_witness_examples(I_C, I_C_sharp):
    assert sorted(decomposition_witness(P("0:2:3"), I_C, 2), key=str) == sorted([P("0:1:1"), P("-1:10:15")], key=str)
    assert set(decomposition_witness(P("1:0:0"), I_C_sharp, 2)) == {P("1:1:0"), P("1:0:3")}
    triple = decomposition_witness(P("0:1:-1"), I_C, 3)
    assert len(triple) == 3 and verify_decomposition(P("0:1:-1"), I_C, triple)


def test_rank_examples(I_C, I_Q, I_X):
    assert str(hadamard_rank(P("0:1:1"), I_C, 4)) == "RankEquals(1)"
    cert = hadamard_rank(P("0:1:-1"), I_C, 4)
    assert str(cert) == "RankEquals(3)" and verify_decomposition(P("0:1:-1"), I_C, cert.witnesses)
    assert {m for m, _ in cert.infeasible} == {1, 2}
    assert hadamard_rank(P("1:1:0"), I_Q, 4).verdict == "ProvablyInfinite"
    assert str(hadamard_rank(P("1:1:0"), I_Q, 4, check_obstruction=False)) == "RankGreaterThan(4)"
    assert str(hadamard_rank(P("2:-3:0"), I_Q, 2)) == "ProvablyInfinite"
    assert str(hadamard_rank(P("1:1:1/8"), I_X, 4)) == "RankEquals(3)"


def test_border_rank_examples(I_C, I_X):
    assert str(border_rank(P("0:1:-1"), I_C, 4)) == "BorderRank(2)"
    assert str(border_rank(P("0:1:1"), I_C, 4)) == "BorderRank(1)"
    assert str(border_rank(P("1:1:1/8"), I_X, 4)) == "BorderRank(3)"


def test_algebraic_witnesses_replay(I_C):
    cert = hadamard_rank(P("1:5:7"), I_C, 3)
    assert cert.m == 2
    data = json.loads(json.dumps(cert.to_json()))
    assert verify_certificate(data)


def test_tampered_certificates_rejected(I_C):
    data = hadamard_rank(P("0:2:3"), I_C, 3).to_json()
    bad = json.loads(json.dumps(data))
    bad["witnesses"][0] = ["1", "1", "1"]
    assert not verify_certificate(bad)
    bad = json.loads(json.dumps(data))
    bad["m"] = 1
    bad["witnesses"] = bad["witnesses"][:1]
    assert not verify_certificate(bad)


INVENTORY = [
    ("C", ["0:1:1", "0:2:3", "0:1:-1", "1:0:0", "2:1:1", "1:5:7"]),
    ("C_sharp", ["1:0:0", "0:2:1", "1:2:3", "0:1:1"]),
    ("X_2_2_2", ["1:1:1/2", "1:1:1/4", "1:1:1/8", "1:2:3"]),
]


@pytest.mark.parametrize("name,points", INVENTORY)
def test_border_at_most_rank_and_replay(name, points):
    from hadarank.zoo import get

    I = get(name).ideal
    for text in points:
        p = P(text)
        cert = hadamard_rank(p, I, 4)
        br = border_rank(p, I, 4)
        if cert.verdict == "RankEquals" and br.verdict == "BorderRank":
            assert br.m <= cert.m
        assert verify_certificate(json.loads(json.dumps(cert.to_json())))


def test_C_sharp_rank_equals_border_rank_on_square():
    e = conic_C_sharp()
    rng = random.Random(5)
    checked = 0
    while checked < 4:
        p = hadamard_product([sample_point(e.param, rng, 6), sample_point(e.param, rng, 6)])
        if e.ideal.vanishes_at(p):
            continue
        cert = hadamard_rank(p, e.ideal, 3)
        assert str(cert) == "RankEquals(2)" and str(border_rank(p, e.ideal, 3)) == "BorderRank(2)"
        checked += 1


@pytest.mark.parametrize("text", ["1:0:0", "0:1:0", "0:0:1", "1:1:0", "3:-1:2", "0:5:-2"])
def test_C_sharp_rank_at_most_N(text, I_C_sharp):
    cert = hadamard_rank(P(text), I_C_sharp, 2)
    assert cert.verdict == "RankEquals" and cert.m <= 2


@pytest.mark.parametrize("text", ["0:5:7", "0:1:-1", "0:0:1", "1:0:-4"])
def test_zero_reduction_bound(text, I_C):
    p = P(text)
    red = zero_pattern_reduce(p, I_C)
    assert all(c != 0 for c in red.p_prime.coords)
    assert hadamard_product([red.p_prime, red.q]) == p
    sub = hadamard_rank(red.p_prime, I_C, 4)
    factors = compose_reduction(red, sub.witnesses)
    assert verify_decomposition(p, I_C, factors)
    generic = 2
    total = hadamard_rank(p, I_C, 5)
    assert total.m <= len(factors) <= 2 * generic + p.zero_count()


def test_zero_reduction_examples(I_C, I_Q):
    red = zero_pattern_reduce(P("0:5:7"), I_C)
    assert (red.q, red.p_prime) == (P("0:1:1"), P("1:5:7"))
    red = zero_pattern_reduce(P("2:3:4"), I_C)
    assert red.p_prime == P("2:3:4") and red.q is None
    with pytest.raises(NotStronglyConcise):
        zero_pattern_reduce(P("1:1:0"), I_Q)


def test_systems_vanish_at_witnesses(I_C):
    p = P("0:2:3")
    for pat in zero_patterns(p, 2):
        system = build_system(p, I_C, pat)
        assert system.ideal.ring.nvars >= 2
