"""The thirteen reproduction checks, shared by ``hadarank reproduce`` and the test suite.

Every check returns a :class:`CheckResult`; a check passes only if its exact
condition holds and it finishes inside its time limit.
"""

from __future__ import annotations

import random
import time
from dataclasses import dataclass, field
from typing import Callable

from . import zoo
from .conciseness import is_strongly_concise
from .exactalg.ideal import Ideal
from .exactalg.points import ProjPoint
from .exactalg.polynomial import Ring
from .exactalg.rational import rat
from .groebner import GREVLEX, groebner_basis, ideals_equal, kernels, projective_dimension
from .groebner.ops import clear_memo
from .hadamard import power_membership, variety_power, variety_product
from .numdim import check_avoids_delta, generic_rank_estimate, jacobian_dimension, power_param
from .rankengine.rank import (
    border_rank,
    compose_reduction,
    decomposition_witness,
    hadamard_rank,
    verify_certificate,
    verify_decomposition,
    zero_pattern_reduce,
)

P = ProjPoint.parse


@dataclass
class CheckResult:
    number: int
    title: str
    passed: bool
    seconds: float
    limit: float
    details: list[str] = field(default_factory=list)

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        return f"[{status}] {self.number:2d}. {self.title} ({self.seconds:.2f}s / {self.limit:g}s)"

    def to_json(self) -> dict:
        return {"number": self.number, "title": self.title, "passed": self.passed,
                "seconds": round(self.seconds, 3), "limit": self.limit, "details": self.details}


class _Log:
    def __init__(self):
        self.lines: list[str] = []
        self.ok = True

    def check(self, cond: bool, what: str) -> bool:
        self.lines.append(("ok   " if cond else "FAIL ") + what)
        self.ok = self.ok and bool(cond)
        return bool(cond)


# certificates emitted by earlier checks, replayed by check 13
_EMITTED: list[dict] = []


def _rank_cert(p, I, max_m, log: _Log, **kw):
    cert = hadamard_rank(p, I, max_m, **kw)
    _EMITTED.append(cert.to_json())
    return cert


def check_1(log: _Log):
    Q = zoo.conic_Q()
    sq = variety_product(Q.ideal, Q.ideal)
    log.check(sq.is_zero(), f"Q*Q ideal is zero (got {len(sq.generators)} generators)")
    g = generic_rank_estimate(Q.param, 3, rng=0)
    log.check(g == 2, f"generic rank estimate of Q = {g}")


def check_2(log: _Log):
    expected = {"Q": False, "C": True, "X_2_2_2": False, "G_2_4": True}
    for name, want in expected.items():
        report = is_strongly_concise(zoo.get(name).ideal)
        log.check(report.is_strongly_concise == want, f"{name}: strongly concise = {report.is_strongly_concise}")
    q = is_strongly_concise(zoo.conic_Q().ideal)
    log.check(not any(q.strongly_concise), "Q fails at every coordinate")


def check_3(log: _Log):
    X = zoo.binomial_hypersurface(2, 2, 2).ideal
    for m in (1, 2, 3):
        got = variety_power(X, m)
        want = zoo.closed_power(2, 2, 2, m)
        log.check(ideals_equal(got, want), f"power {m}: {', '.join(map(str, got.generators))} vs {want.generators[0]}")


def check_4(log: _Log):
    X = zoo.binomial_hypersurface(2, 2, 2).ideal
    for m in range(1, 5):
        p = ProjPoint([1, 1, rat(1) / 2 ** m])
        br = border_rank(p, X, 4)
        hr = _rank_cert(p, X, 4, log)
        log.check(br.verdict == "BorderRank" and br.m == m, f"border rank of {p} = {br}")
        log.check(hr.verdict == "RankEquals" and hr.m == m, f"rank of {p} = {hr}")
        log.check(verify_decomposition(p, X, hr.witnesses), f"witness of {p} verified")
        log.check(all(not power_membership(p, X, r) for r in range(1, m)), f"{p} outside every power below {m}")


def check_5(log: _Log):
    C = zoo.conic_C().ideal
    c1 = _rank_cert(P("0:1:1"), C, 4, log)
    log.check(str(c1) == "RankEquals(1)", f"rank (0:1:1) = {c1}")
    c2 = _rank_cert(P("0:2:3"), C, 4, log)
    ok2 = str(c2) == "RankEquals(2)" and verify_decomposition(P("0:2:3"), C, c2.witnesses)
    log.check(ok2, f"rank (0:2:3) = {c2} with witnesses {', '.join(map(str, c2.witnesses))}")
    w = decomposition_witness(P("0:2:3"), C, 2)
    log.check(set(w) == {P("0:1:1"), P("-1:10:15")}, f"(0:2:3) = {' * '.join(map(str, w))}")
    c3 = _rank_cert(P("0:1:-1"), C, 4, log)
    log.check(str(c3) == "RankEquals(3)", f"rank (0:1:-1) = {c3}")
    m2 = [r for m, r in c3.infeasible if m == 2]
    log.check(bool(m2) and all(groebner_basis(r.system.ideal, GREVLEX).is_unit() for r in m2),
              f"{len(m2)} unit-ideal certificate(s) at m = 2")
    log.check(len(c3.witnesses) == 3 and verify_decomposition(P("0:1:-1"), C, c3.witnesses),
              f"triple {' * '.join(map(str, c3.witnesses))} verified")
    b = border_rank(P("0:1:-1"), C, 4)
    log.check(str(b) == "BorderRank(2)", f"border rank (0:1:-1) = {b}")


def check_6(log: _Log):
    Q = zoo.conic_Q().ideal
    cert = _rank_cert(P("1:1:0"), Q, 4, log)
    log.check(cert.verdict == "ProvablyInfinite", f"(1:1:0) on Q: {cert}")


def check_7(log: _Log):
    for seed in range(10):
        matrix, point = zoo.one_zero_minor_matrix(2, 4, seed)
        minors = zoo.plucker(matrix)
        log.check(sum(1 for v in minors if v == 0) == 1, f"seed {seed}: minors {minors}")


def _brute_tangential(d, n, a, b):
    ring = Ring.projective(n)
    L = sum((ring.gen(i) * a[i] for i in range(n + 1)), ring.zero())
    M = sum((ring.gen(i) * b[i] for i in range(n + 1)), ring.zero())
    F = L ** (d - 1) * M
    return [F.coefficient(alpha) for alpha in zoo.exponents(d, n)]


def check_8(log: _Log):
    rng = random.Random(8)
    for d, n in ((2, 1), (3, 1), (3, 2), (4, 2)):
        agree = 0
        for _ in range(100):
            a = [rat(rng.randint(-9, 9)) for _ in range(n + 1)]
            b = [rat(rng.randint(-9, 9)) for _ in range(n + 1)]
            agree += zoo.tangential_coefficients(d, n, a, b) == _brute_tangential(d, n, a, b)
        log.check(agree == 100, f"(d, n) = ({d}, {n}): formula = expansion on {agree}/100 draws")
    for d, n in ((3, 1), (3, 2)):
        for alpha in zoo.exponents(d, n):
            a, b = zoo.tangential_witness(d, n, alpha, rng)
            coeffs = zoo.tangential_coefficients(d, n, a, b)
            zeros = [zoo.exponents(d, n)[i] for i, c in enumerate(coeffs) if c == 0]
            log.check(zeros == [alpha], f"witness for {alpha} at ({d}, {n}) zero only at {zeros}")


def check_9(log: _Log):
    for seed in range(20):
        curve = zoo.random_curve(3, 3, seed)
        cert = check_avoids_delta(curve.param)
        dims = [jacobian_dimension(power_param(curve.param, m), seed) for m in (1, 2, 3)]
        g = generic_rank_estimate(curve.param, 4, seed)
        log.check(cert.avoids and dims == [1, 2, 3] and g == 3,
                  f"curve seed {seed}: avoids={cert.avoids} dims={dims} generic rank={g}")


def check_10(log: _Log):
    Cs = zoo.conic_C_sharp().ideal
    p = P("1:0:0")
    cert = _rank_cert(p, Cs, 4, log)
    log.check(str(cert) == "RankEquals(2)", f"rank (1:0:0) on C_sharp = {cert}")
    log.check(any(m == 1 for m, _ in cert.infeasible), "m = 1 infeasibility certificate present")
    log.check(set(cert.witnesses) == {P("1:1:0"), P("1:0:3")}
              and verify_decomposition(p, Cs, cert.witnesses), f"witness {' * '.join(map(str, cert.witnesses))}")
    b = border_rank(p, Cs, 4)
    log.check(str(b) == "BorderRank(2)", f"border rank (1:0:0) = {b}")


def check_11(log: _Log):
    C = zoo.conic_C()
    p = P("0:5:7")
    red = zero_pattern_reduce(p, C.ideal)
    log.check(red.p_prime == P("1:5:7") and red.witnesses == [P("0:1:1")],
              f"p' = {red.p_prime}, q = {', '.join(map(str, red.witnesses))}")
    cert_prime = _rank_cert(red.p_prime, C.ideal, 4, log)
    composed = compose_reduction(red, cert_prime.witnesses)
    log.check(verify_decomposition(p, C.ideal, composed), f"composed decomposition of {p} with {len(composed)} factors")
    generic = generic_rank_estimate(C.param, 3, 0)
    bound = 2 * generic + p.zero_count()
    log.check(len(composed) <= bound, f"composed length {len(composed)} <= 2*{generic} + {p.zero_count()} = {bound}")
    direct = _rank_cert(p, C.ideal, 4, log)
    log.check(direct.verdict == "RankEquals" and direct.m <= 3, f"rank of {p} found directly: {direct}")


def check_12(log: _Log):
    for name in ("C", "Q", "X_2_2_2"):
        e = zoo.get(name)
        for m in (1, 2):
            exact = projective_dimension(variety_power(e.ideal, m))
            numeric = jacobian_dimension(power_param(e.param, m), 0)
            log.check(exact == numeric, f"{name} power {m}: ideal dimension {exact}, Jacobian dimension {numeric}")


def check_13(log: _Log):
    if not _EMITTED:  # run standalone: produce some certificates first
        check_5(_Log())
        check_10(_Log())
    replayed = [verify_certificate(c) for c in _EMITTED]
    log.check(all(replayed), f"{sum(replayed)}/{len(replayed)} certificates replay")
    inventory = [
        ("C", ["0:1:1", "0:2:3", "0:1:-1", "1:2:3", "1:0:0"]),
        ("C_sharp", ["1:0:0", "1:1:1", "0:1:1"]),
        ("X_2_2_2", ["1:1:1/2", "1:1:1/4", "1:1:1"]),
    ]
    for name, pts in inventory:
        I = zoo.get(name).ideal
        for text in pts:
            hr = hadamard_rank(P(text), I, 4)
            br = border_rank(P(text), I, 4)
            if hr.verdict == "RankEquals" and br.verdict == "BorderRank":
                log.check(br.m <= hr.m, f"{name} {text}: border {br.m} <= rank {hr.m}")
    for name in ("C", "Q", "X_2_2_2", "G_2_4", "tau_3_1", "chow_2_1"):
        P_ = zoo.get(name).param
        dims = []
        for m in range(1, 4):
            dims.append(jacobian_dimension(power_param(P_, m), m))
            if dims[-1] == P_.N:
                break
        log.check(all(a <= b for a, b in zip(dims, dims[1:])), f"{name}: dimensions {dims} non-decreasing")
    # determinism: fresh recomputation with each kernel gives identical bases
    ideal = variety_product(zoo.conic_C().ideal, zoo.conic_C_sharp().ideal)
    big = Ideal.parse(Ring.projective(3), ["x0*x1 - x2*x3 + x1^2", "x0^2 - x1*x2 + x3^2 - x0*x3"])
    for target in (big, ideal if not ideal.is_zero() else big):
        bases = []
        saved = kernels.IMPLEMENTATION
        for impl in kernels.available():
            kernels.set_implementation(impl)
            for _ in range(2):
                clear_memo()
                bases.append(groebner_basis(target, GREVLEX).basis)
        kernels.set_implementation(saved)
        log.check(all(b == bases[0] for b in bases), f"{len(bases)} recomputations agree ({', '.join(kernels.available())})")


CHECKS: list[tuple[int, str, float, Callable[[_Log], None]]] = [
    (1, "Hadamard square of Q fills the plane; generic rank 2", 5, check_1),
    (2, "strong conciseness verdicts for Q, C, X_{2,2,2}, G(2,4)", 10, check_2),
    (3, "binomial powers match the closed form for m = 1, 2, 3", 5, check_3),
    (4, "exact ranks on X_{2,2,2}: border rank = rank = m", 10, check_4),
    (5, "conic C rank table", 60, check_5),
    (6, "infinite-rank obstruction on Q at (1:1:0)", 5, check_6),
    (7, "Grassmannian one-zero-minor witnesses", 1, check_7),
    (8, "tangential coefficient formula and witnesses", 10, check_8),
    (9, "curve dimension growth 1, 2, 3", 30, check_9),
    (10, "sharpness on C_sharp at (1:0:0)", 30, check_10),
    (11, "zero-pattern reduction of (0:5:7) on C", 30, check_11),
    (12, "exact and Jacobian dimensions agree", 60, check_12),
    (13, "certificate replay, border <= rank, monotonicity, determinism", 120, check_13),
]


def _cold_start() -> None:
    """Drop in-process caches so each check is timed from scratch."""
    from . import hadamard, zoo
    from .groebner.ops import clear_memo

    clear_memo()
    hadamard._CACHES.clear()
    zoo.grassmannian_ideal.cache_clear()


def run_check(number: int) -> CheckResult:
    num, title, limit, fn = next(c for c in CHECKS if c[0] == number)
    _cold_start()
    log = _Log()
    start = time.perf_counter()
    try:
        fn(log)
    except Exception as exc:  # a crash is a failure of that criterion
        log.check(False, f"raised {type(exc).__name__}: {exc}")
    elapsed = time.perf_counter() - start
    return CheckResult(num, title, log.ok and elapsed <= limit, elapsed, limit, log.lines)


def run_all(numbers=None) -> list[CheckResult]:
    numbers = numbers or [c[0] for c in CHECKS]
    return [run_check(n) for n in numbers]
