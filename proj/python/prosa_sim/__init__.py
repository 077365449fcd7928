"""Social-inspired P2P overlay simulator: Python surface over the C++ core."""

from prosa_sim._core import *  # noqa: F401,F403
from prosa_sim._core import __doc__  # noqa: F401

__version__ = "0.1.0"
