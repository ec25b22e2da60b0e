"""Boundary fixed-time / ISS stabilization toolkit for 1-D parabolic equations.

Thin Python layer over the C++ core: backstepping kernels and Volterra
transforms, zeta-based and prescribed-time gain schedules, the split
closed-loop simulator, and the FTS/ISS analysis helpers.
"""

from ._core import *  # noqa: F401,F403
from ._core import __doc__ as _core_doc  # noqa: F401

__all__ = [name for name in dir() if not name.startswith("_")]
