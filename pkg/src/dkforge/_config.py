"""Runtime switches read from the environment.

``DKFORGE_BACKEND``   ``numba`` (default when importable) or ``numpy``.
``DKFORGE_MAX_RANK``  cap on level/degree ranks of randomly generated instances.
"""

import os

try:
    import numba  # noqa: F401

    HAVE_NUMBA = True
except ImportError:  # pragma: no cover
    HAVE_NUMBA = False


def backend() -> str:
    name = os.getenv("DKFORGE_BACKEND", "numba" if HAVE_NUMBA else "numpy").lower()
    if name not in ("numba", "numpy"):
        raise ValueError(f"DKFORGE_BACKEND must be 'numba' or 'numpy', got {name!r}")
    if name == "numba" and not HAVE_NUMBA:
        return "numpy"
    return name


def max_rank(default: int = 16) -> int:
    return int(os.getenv("DKFORGE_MAX_RANK", default))
