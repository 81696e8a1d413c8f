"""Backend selection for the hot kernels.

The compiled ``_ckernels`` module is used when it was built; otherwise (or when
``DISCPF_PURE_PYTHON`` is set to a non-empty value) the pure-Python kernels are
used. Both expose: det, pfaffian, dpf, matmul, assoc_defect.
"""
import os

from . import _pykernels

if os.environ.get("DISCPF_PURE_PYTHON"):
    _impl = _pykernels
else:
    try:
        from . import _ckernels as _impl
    except ImportError:  # extension not built
        _impl = _pykernels

BACKEND = _impl.BACKEND
det = _impl.det
pfaffian = _impl.pfaffian
dpf = _impl.dpf
matmul = _impl.matmul
assoc_defect = _impl.assoc_defect


def available_backends():
    """Map backend name to kernel module for every backend importable here."""
    found = {"python": _pykernels}
    try:
        from . import _ckernels
    except ImportError:
        pass
    else:
        found["cython"] = _ckernels
    return found
