"""Backend selection for the subset kernels.

The compiled extension is used when it imports and the job fits it (prime
field, at most 64 vertices).  Set ``TIGHTTRI_PURE_PYTHON=1`` to force the
Python backend everywhere, e.g. to benchmark or cross-check the two.
"""

from __future__ import annotations

import os

from . import _kernels_py
from ._kernels_py import subsets_by_size  # noqa: F401  (re-export)

try:
    from . import _kernels as _compiled
except ImportError:  # pragma: no cover - depends on the build
    _compiled = None

if os.environ.get("TIGHTTRI_PURE_PYTHON", "").strip() not in ("", "0"):
    _compiled = None

COMPILED_AVAILABLE = _compiled is not None
BACKEND = _compiled.BACKEND if _compiled is not None else _kernels_py.BACKEND

MAX_COMPILED_VERTICES = 64


def _module(p: int, n_vertices: int, backend: str | None):
    if backend == "python":
        return _kernels_py
    usable = _compiled is not None and p != 0 and p < 2**31 and n_vertices <= MAX_COMPILED_VERTICES
    if backend == "cython":
        if not usable:
            raise RuntimeError("compiled kernel unavailable for this input")
        return _compiled
    return _compiled if usable else _kernels_py


def chain_kernel(masks, bnd, p: int, n_vertices: int, backend: str | None = None):
    """Build a ``ChainKernel`` over GF(p) (or Q for ``p == 0``)."""
    return _module(p, n_vertices, backend).ChainKernel(masks, bnd, p)


def b0_size_sums(adjacency, n: int, backend: str | None = None) -> list[int]:
    return _module(2, n, backend).b0_size_sums(list(adjacency), n)


def rank_mod_p(rows, p: int, backend: str | None = None) -> int:
    mod = _module(p, 0, backend)
    if mod is _kernels_py:
        from .linalg import rank_mod_p as _rank

        return _rank(rows, p)
    return mod.rank_mod_p([list(r) for r in rows], p)
