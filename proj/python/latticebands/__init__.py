"""Spectra of discrete 2D periodic Schrodinger operators via Floquet-Bloch fibers."""

try:
    from ._latticebands import *  # noqa: F401,F403  (wheel layout)
except ImportError:  # in-tree build: extension sits next to the package on sys.path
    from _latticebands import *  # noqa: F401,F403
