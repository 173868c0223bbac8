"""Backend selection for the hot enumeration kernels.

The compiled extension runs the box and shell scans in int64; the pure
twins use unbounded integers.  Per call the dispatcher certifies that every
intermediate the int64 kernel can form stays below 2^62 and silently falls
back to the pure code otherwise, so results are exact on either path.

Set CONELAB_KERNELS=pure in the environment (or call use("pure")) to force
the fallback; use("auto") restores the default.
"""

from __future__ import annotations

import os

from . import _kernels_py

try:
    from . import _kernels as _compiled
except ImportError:  # extension not built
    _compiled = None

_MODES = ("auto", "pure", "compiled")
_mode = os.environ.get("CONELAB_KERNELS", "auto")
if _mode not in _MODES:
    _mode = "auto"


def available_backends() -> tuple[str, ...]:
    return ("pure", "compiled") if _compiled is not None else ("pure",)


def use(mode: str) -> None:
    """Force a backend: "pure", "compiled", or "auto"."""
    global _mode
    if mode not in _MODES:
        raise ValueError("mode must be one of %s" % (_MODES,))
    if mode == "compiled" and _compiled is None:
        raise ValueError("compiled kernels are not available")
    _mode = mode


def active_mode() -> str:
    return _mode


def _int64_safe(gram, d, bound) -> bool:
    # Worst-case discriminant in the leaf solve: B^2 + 4|A|(|C| + |d|)
    # with |A| <= S, |B| <= 2*S*bound, |C| <= S*bound^2 for S = sum |g_ij|.
    if len(gram) > 64:
        return False
    S = sum(abs(e) for row in gram for e in row)
    return 8 * (S * bound) ** 2 + 4 * S * abs(d) < 2 ** 62


def _backend(gram, d, bound):
    if _mode == "pure" or _compiled is None:
        return _kernels_py
    if _mode == "compiled":
        return _compiled
    return _compiled if _int64_safe(gram, d, bound) else _kernels_py


def vectors_with_square_box(gram, d, bound):
    """All primitive v != 0 with quad(v) == d and sup-norm <= bound."""
    return _backend(gram, d, bound).vectors_with_square_box(gram, d, bound)


def isotropic_in_shell(gram, r):
    """Primitive isotropic vectors of sup-norm exactly r, in lex order."""
    return _backend(gram, 0, r).isotropic_in_shell(gram, r)
