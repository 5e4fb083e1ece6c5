"""Johnson-type signed graphs: constructions, exact solvers and audits."""

from ._jchroma import *  # noqa: F401,F403
from ._jchroma import __doc__  # noqa: F401

__version__ = "0.1.0"
