"""Kernel backend selection.

The compiled extension is used when it was built; setting ``INDECOMP_PURE=1``
forces the pure-Python implementation.
"""

from __future__ import annotations

import os

if os.environ.get("INDECOMP_PURE", "") not in ("", "0"):
    from ._pykernels import (
        canonical_labeling,
        indecomposable_table,
        is_indecomposable,
        pair_closure,
        popcount,
        strongly_critical_mask,
    )

    BACKEND = "python"
else:
    try:
        from ._ckernels import (
            canonical_labeling,
            indecomposable_table,
            is_indecomposable,
            pair_closure,
            popcount,
            strongly_critical_mask,
        )

        BACKEND = "cython"
    except ImportError:
        from ._pykernels import (
            canonical_labeling,
            indecomposable_table,
            is_indecomposable,
            pair_closure,
            popcount,
            strongly_critical_mask,
        )

        BACKEND = "python"

__all__ = [
    "BACKEND",
    "canonical_labeling",
    "indecomposable_table",
    "is_indecomposable",
    "pair_closure",
    "popcount",
    "strongly_critical_mask",
]
