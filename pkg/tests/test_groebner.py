import random

import pytest
import sympy
from hypothesis import given, settings
from hypothesis import strategies as st

from hadarank.errors import BudgetExceeded, EmptyVariety
from hadarank.exactalg import Ideal, Polynomial, ProjPoint, Ring, rat
from hadarank.groebner import (
    GREVLEX,
    LEX,
    Budget,
    block,
    eliminate,
    groebner_basis,
    ideals_equal,
    intersect_ideals,
    is_unit_ideal,
    kernels,
    projective_dimension,
    radical_membership,
)
from hadarank.groebner.ops import clear_memo
from hadarank.numdim import sample_point
from hadarank.zoo import conic_C, grassmannian

from conftest import C_TEXT, Q_TEXT, X_TEXT, plane_ideal

R2 = Ring.projective(2)
A3 = Ring(("x", "y", "z"))


def _sympy_basis(ideal, order):
    gens = sympy.symbols(" ".join(ideal.ring.names))
    exprs = [sympy.sympify(str(g).replace("^", "**")) for g in ideal.generators]
    G = sympy.groebner(exprs, *gens, order=order, domain=sympy.QQ)
    return {sympy.expand(p.as_expr() / p.LC(order=order)) for p in G.polys}


def _our_basis(ideal, order):
    return {sympy.expand(sympy.sympify(str(g).replace("^", "**"))) for g in groebner_basis(ideal, order)}


small_terms = st.dictionaries(
    st.tuples(st.integers(0, 2), st.integers(0, 2), st.integers(0, 2)),
    st.integers(-4, 4).filter(lambda c: c != 0),
    min_size=1,
    max_size=3,
)
small_ideals = st.lists(small_terms, min_size=1, max_size=3).map(
    lambda gs: Ideal.of(A3, [Polynomial(A3, {m: rat(c) for m, c in g.items()}) for g in gs], projective=False)
)


@settings(max_examples=30)
@given(small_ideals, st.sampled_from([("grevlex", GREVLEX), ("lex", LEX)]))
def test_matches_sympy(ideal, order):
    name, ours = order
    assert _our_basis(ideal, ours) == _sympy_basis(ideal, name)


@given(small_ideals)
def test_generators_reduce_to_zero(ideal):
    gb = groebner_basis(ideal)
    assert all(gb.normal_form(g).is_zero() for g in ideal.generators)


@given(small_ideals, small_terms)
def test_normal_form_idempotent(ideal, f):
    gb = groebner_basis(ideal)
    f = Polynomial(A3, {m: rat(c) for m, c in f.items()})
    r = gb.normal_form(f)
    assert gb.normal_form(r) == r


@pytest.mark.skipif("cython" not in kernels.available(), reason="compiled kernels not built")
@given(small_ideals)
def test_kernels_agree(ideal):
    out = {}
    try:
        for impl in ("python", "cython"):
            kernels.set_implementation(impl)
            clear_memo()
            out[impl] = groebner_basis(ideal, GREVLEX).basis
    finally:
        kernels.set_implementation(kernels.available()[-1])
        clear_memo()
    assert out["python"] == out["cython"]


def test_integer_rank_kernels():
    rows = [[1, 2, 3], [2, 4, 6], [0, 1, 1], [1, 3, 4]]
    for impl in kernels.available():
        kernels.set_implementation(impl)
        assert kernels.integer_rank(rows) == 2
    kernels.set_implementation(kernels.available()[-1])


def test_examples():
    I = plane_ideal(X_TEXT)
    assert groebner_basis(I).basis == I.generators
    unit = Ideal.of(A3, [A3.gen(0), A3.one() - A3.gen(0)], projective=False)
    assert groebner_basis(unit).is_unit() and is_unit_ideal(unit)
    gb = groebner_basis(I)
    assert gb.normal_form(R2.one()) == R2.one()


def test_deterministic_across_runs(I_C):
    a = groebner_basis(Ideal.parse(R2, [C_TEXT, "x0^2 - x1*x2"])).basis
    clear_memo()
    b = groebner_basis(Ideal.parse(R2, [C_TEXT, "x0^2 - x1*x2"])).basis
    assert a == b


def test_budget_is_enforced():
    clear_memo()
    I = Ideal.parse(Ring.projective(3), ["x0^3 - x1*x2*x3", "x1^3 - x0*x2^2", "x2^3 - x0^2*x3 + x1^3"])
    with pytest.raises(BudgetExceeded):
        groebner_basis(I, GREVLEX, Budget(3))
    clear_memo()


def test_radical_membership_examples():
    x0, x1, x2 = R2.gens()
    assert radical_membership(x1 * x2, plane_ideal(Q_TEXT, "x0"))
    assert not radical_membership(x1 * x2, plane_ideal(C_TEXT, "x0"))
    assert radical_membership(x0, plane_ideal("x0^2"))
    assert not radical_membership(x0, plane_ideal(Q_TEXT))


def test_eliminate_examples():
    x, y, z = A3.gens()
    I = Ideal.of(A3, [z - x * y, x - A3.one()], projective=False)
    assert eliminate(I, [0, 1]).is_zero()
    B2 = Ring(("x", "y"))
    x, y = B2.gens()
    J = Ideal.of(B2, [x * x + y * y, x - y], projective=False)
    out = eliminate(J, [0])
    assert [str(g) for g in out.generators] == ["y^2"]


def test_elimination_sound_on_grassmannian_samples():
    e = grassmannian(2, 4)
    rng = random.Random(3)
    for _ in range(5):
        p = sample_point(e.param, rng, height=5)
        assert e.ideal.vanishes_at(p)


def test_intersect_examples():
    x0, x1, x2 = R2.gens()
    out = intersect_ideals(plane_ideal("x0"), plane_ideal("x1"))
    assert ideals_equal(out, plane_ideal("x0*x1"))
    I = plane_ideal(C_TEXT)
    assert ideals_equal(intersect_ideals(I, I), I)
    out = intersect_ideals(plane_ideal("x0", "x1"), plane_ideal("x0", "x2"))
    assert ideals_equal(out, plane_ideal("x0", "x1*x2"))


def test_intersection_vanishes_on_both():
    C = conic_C()
    I, J = C.ideal, plane_ideal(X_TEXT)
    K = intersect_ideals(I, J)
    rng = random.Random(1)
    for _ in range(3):
        p = sample_point(C.param, rng, height=9)
        assert K.vanishes_at(p)
    for t in range(1, 4):
        assert K.vanishes_at(ProjPoint([2, 2 * t, t * t]))


def test_projective_dimension():
    assert projective_dimension(plane_ideal(X_TEXT)) == 1
    assert projective_dimension(Ideal.zero(R2)) == 2
    with pytest.raises(EmptyVariety):
        projective_dimension(plane_ideal("x0", "x1", "x2"))


@given(small_terms.filter(lambda t: len({sum(m) for m in t}) == 1 and max(sum(m) for m in t) > 0))
def test_hypersurface_dimension(terms):
    f = Polynomial(R2, {m: rat(c) for m, c in terms.items()})
    assert projective_dimension(Ideal(R2, [f])) == 1


def test_block_order_eliminates():
    order = block(1)
    assert order.sortkey((1, 0, 0)) > order.sortkey((0, 5, 5))
