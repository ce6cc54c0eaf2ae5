"""Kernel selection: compiled extension if built, else the numpy fallback.

``BACKEND`` reports which implementation is live ("cython" or "python").
Set the environment variable WFACT_KERNEL=python to force the fallback (or
=cython to insist on the extension, raising if it is missing).  Both
implementations are interface- and value-identical; ``wfact.benchmark``
times them against each other.
"""

from __future__ import annotations

import os

from . import _core_py

_choice = os.environ.get("WFACT_KERNEL", "").strip().lower()

if _choice == "python":
    _impl = _core_py
    BACKEND = "python"
else:
    try:
        from . import _core as _impl  # type: ignore[attr-defined]

        BACKEND = "cython"
    except ImportError:
        if _choice == "cython":
            raise ImportError(
                "WFACT_KERNEL=cython requested but the compiled extension "
                "is not available; reinstall with Cython and a C compiler"
            ) from None
        _impl = _core_py
        BACKEND = "python"

build_mult_table = _impl.build_mult_table
subgroup_closure = _impl.subgroup_closure

__all__ = ["build_mult_table", "subgroup_closure", "BACKEND"]
