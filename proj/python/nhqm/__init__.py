"""Non-Hermitian model toolkit.

2x2 PT-symmetric matrix dynamics (eigenpairs, time evolution, the
time-dependent metric transform, defective-case dynamics) and the spatially
confined -D^2 + i mu x spectral problem (Galerkin assembly, classified
spectra, shooting verification, tail asymptotics).
"""

try:
    from nhqm._core import *  # noqa: F401,F403
except ImportError:  # in-build layout: _core.so next to the package dir
    from _core import *  # noqa: F401,F403

__version__ = "1.0.0"
