"""Backend selection for the hot kernels.

The compiled extension is used when it imports; ``GREEDYSCS_BACKEND=python``
forces the pure-Python fallback. Callers reach the kernels through this
module's attributes, so :func:`use_backend` switches every caller at once.
"""
import contextlib
import os

from . import _pykernels

# int64 accumulator bound for the compiled DP
_I64_SAFE = 1 << 62


def available_backends():
    out = {"python": _pykernels}
    try:
        from . import _kernels
        out["cython"] = _kernels
    except ImportError:
        pass
    return out


def _activate(name):
    global BACKEND, _impl, overlap_len, overlap_matrix
    _impl = available_backends()[name]
    BACKEND = name
    overlap_len = _impl.overlap_len
    overlap_matrix = _impl.overlap_matrix


def max_overlap_path(weights):
    """Best Hamiltonian path over ``weights``; see ``_pykernels.max_overlap_path``."""
    n = len(weights)
    if _impl is not _pykernels and n:
        top = max(max(row) for row in weights)
        if top * n >= _I64_SAFE:
            return _pykernels.max_overlap_path(weights)
    return _impl.max_overlap_path(weights)


@contextlib.contextmanager
def use_backend(name):
    """Temporarily route every kernel call to backend ``name``."""
    previous = BACKEND
    _activate(name)
    try:
        yield
    finally:
        _activate(previous)


_wanted = os.environ.get("GREEDYSCS_BACKEND", "").lower()
if _wanted == "python" or "cython" not in available_backends():
    _activate("python")
else:
    _activate("cython")
