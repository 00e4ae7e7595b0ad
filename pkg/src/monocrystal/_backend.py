"""Kernel selection: the compiled extension when importable, else pure Python.

Set ``MONOCRYSTAL_PURE_PYTHON=1`` to force the fallback.
"""
import os

if os.environ.get("MONOCRYSTAL_PURE_PYTHON", "") not in ("", "0"):
    from . import _purepy as kernels
else:
    try:
        from . import _speedups as kernels
    except ImportError:
        from . import _purepy as kernels

BACKEND = "compiled" if kernels.__name__.endswith("_speedups") else "python"

merge = kernels.merge
shifted = kernels.shifted
signatures = kernels.signatures
epsilons_vanish = kernels.epsilons_vanish
neighbors = kernels.neighbors
