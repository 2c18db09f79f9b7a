"""Universal curve families on punctured spheres and low-genus surfaces."""

from ._pantsatlas import *  # noqa: F401,F403
from ._pantsatlas import __version__  # noqa: F401
