"""Select the assignment kernels: compiled when available, pure Python otherwise.

Set ``BARCODE_STRATA_PURE=1`` to force the pure-Python kernels.
"""
import os

if os.environ.get("BARCODE_STRATA_PURE"):
    from . import _pykernels as kernels
else:
    try:
        from . import _ckernels as kernels
    except ImportError:
        from . import _pykernels as kernels

BACKEND = kernels.NAME
