"""Compare the compiled and pure-Python kernels on representative workloads.

Usage: python benchmarks/bench_kernels.py [--repeat N]
"""

import argparse
import random
import time

from hadarank.exactalg import Ideal, Ring
from hadarank.groebner import GREVLEX, groebner_basis, kernels
from hadarank.groebner.ops import clear_memo
from hadarank.hadamard import variety_product
from hadarank.numdim import jacobian_ranks, power_param
from hadarank.zoo import conic_C, grassmannian, random_curve


def _gb_cyclic():
    ring = Ring.projective(3)
    I = Ideal.parse(ring, [
        "x0 + x1 + x2 + x3",
        "x0*x1 + x1*x2 + x2*x3 + x3*x0",
        "x0*x1*x2 + x1*x2*x3 + x2*x3*x0 + x3*x0*x1",
        "x0*x1*x2*x3 - x0^4",
    ])
    groebner_basis(I, GREVLEX)


def _product_C():
    I = conic_C().ideal
    variety_product(I, I)


def _grassmannian():
    from hadarank.zoo import grassmannian_ideal

    grassmannian_ideal.cache_clear()
    grassmannian(2, 4)


def _jacobian():
    P = random_curve(3, 3, 0).param
    jacobian_ranks(power_param(P, 3), random.Random(1), trials=20)


WORKLOADS = [
    ("groebner basis, cyclic-4 style", _gb_cyclic),
    ("Hadamard square of C", _product_C),
    ("Grassmannian G(2,4) by elimination", _grassmannian),
    ("Jacobian ranks, cubic curve cubed", _jacobian),
]


def time_workload(fn, impl: str, repeat: int) -> float:
    kernels.set_implementation(impl)
    best = float("inf")
    for _ in range(repeat):
        clear_memo()
        start = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - start)
    return best


def main(argv=None):
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--repeat", type=int, default=3)
    args = parser.parse_args(argv)
    impls = kernels.available()
    print(f"{'workload':40s}" + "".join(f"{name:>12s}" for name in impls) + ("     speedup" if len(impls) > 1 else ""))
    for title, fn in WORKLOADS:
        times = [time_workload(fn, impl, args.repeat) for impl in impls]
        row = f"{title:40s}" + "".join(f"{t * 1000:10.1f}ms" for t in times)
        if len(times) > 1:
            row += f"{times[0] / times[1]:11.2f}x"
        print(row)
    if "cython" not in impls:
        print("compiled kernels are not built; only the Python fallback was timed")


if __name__ == "__main__":
    main()
