"""Finite T0-space toolkit: posets, order complexes, homology, collapses."""

try:
    from ._finspace import *  # noqa: F401,F403
    from ._finspace import __doc__  # noqa: F401
except ImportError:  # running against an in-tree build directory
    from _finspace import *  # noqa: F401,F403
