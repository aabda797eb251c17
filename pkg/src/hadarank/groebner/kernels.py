"""Kernel selection: the compiled extension when importable, else pure Python.

Set ``HADARANK_PURE_PYTHON=1`` to force the fallback, or call
:func:`set_implementation` at runtime (the benchmark does this).
"""

import os

from . import _pykernels

try:
    from . import _ckernels
except ImportError:  # extension not built
    _ckernels = None

_FUNCS = ("monomial_divides", "monomial_lcm", "normal_form", "spoly", "integer_rank")


def available() -> list[str]:
    return ["python"] + (["cython"] if _ckernels is not None else [])


def set_implementation(name: str) -> None:
    if name == "cython":
        if _ckernels is None:
            raise ImportError("compiled kernels are not built")
        mod = _ckernels
    elif name == "python":
        mod = _pykernels
    else:
        raise ValueError(f"unknown kernel implementation {name!r}")
    g = globals()
    for fn in _FUNCS:
        g[fn] = getattr(mod, fn)
    g["IMPLEMENTATION"] = mod.IMPLEMENTATION


IMPLEMENTATION = "python"
set_implementation("python" if os.environ.get("HADARANK_PURE_PYTHON") or _ckernels is None else "cython")
