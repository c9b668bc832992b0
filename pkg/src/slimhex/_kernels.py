"""Hot-loop kernels, dispatched to the compiled extension when it imports.

``BACKEND`` names the active implementation ("cython" or "python");
:func:`use_backend` switches it, which tests and the benchmark use to run
both routes on identical inputs.
"""

from . import _pykernels

try:
    from . import _ckernels
except ImportError:  # extension not built
    _ckernels = None

_IMPLS = {"python": _pykernels}
if _ckernels is not None:
    _IMPLS["cython"] = _ckernels

BACKEND = "cython" if _ckernels is not None else "python"
UNREACHABLE = int(_pykernels.UNREACHABLE)


def available_backends():
    return sorted(_IMPLS)


def use_backend(name):
    global BACKEND
    if name not in _IMPLS:
        raise ValueError(f"backend {name!r} not available; have {available_backends()}")
    BACKEND = name


def rref(rows, ncols):
    return _IMPLS[BACKEND].rref(rows, ncols)


def rank(rows, ncols):
    return _IMPLS[BACKEND].rank(rows, ncols)


def distances(n, indptr, indices):
    return _IMPLS[BACKEND].distances(n, indptr, indices)
