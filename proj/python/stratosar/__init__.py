"""Joint sweep-trajectory and power planning for a solar-powered
stratospheric SAR platform.

Everything public lives in the compiled extension; this package simply
re-exports it.
"""

from ._core import *  # noqa: F401,F403
from ._core import __version__  # noqa: F401
