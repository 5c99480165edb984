"""Exact Dold–Kan correspondence for truncated chain complexes and simplicial abelian groups.

Submodules:

``linalg``      exact integer matrices, Smith normal form, kernels
``chain``       chain complexes, maps, homology, homotopies
``simplicial``  truncated simplicial abelian groups
``doldkan``     N, Γ, unit and counit, shuffle and Alexander–Whitney maps
``algebra``     DGAs, simplicial rings, and the functors between them
``modules``     DG and simplicial modules, relative tensor products, scalar change
``enriched``    categories enriched in chain complexes and their modules
``serialize``   canonical JSON
``suites``      seeded verification suites
"""

from ._config import backend, max_rank

__version__ = "0.1.0"

__all__ = ["backend", "max_rank", "__version__"]
