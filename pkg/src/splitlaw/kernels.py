"""Hot F_p polynomial kernels, compiled when available.

``BACKEND`` is ``"cython"`` when the extension imported, else ``"python"``.
Set ``SPLITLAW_PURE_PYTHON=1`` to force the fallback.
"""

import os

from . import _pykernels

try:
    if os.environ.get("SPLITLAW_PURE_PYTHON"):
        raise ImportError("pure Python requested")
    from . import _kernels as _ck
except ImportError:
    _ck = None

BACKEND = "cython" if _ck is not None else "python"
WORD_LIMIT = 1 << 32


def powx_mod(f, e, p):
    """X^e mod (f, p) for monic ``f`` given as reduced coefficients."""
    if _ck is not None and p < WORD_LIMIT and len(f) <= 65:
        return _ck.powx_mod(f, e, p)
    return _pykernels.powx_mod(f, e, p)


def mulmod(a, b, f, p):
    if _ck is not None and p < WORD_LIMIT and len(f) <= 65:
        return _ck.mulmod(a, b, f, p)
    return _pykernels.mulmod(a, b, f, p)
