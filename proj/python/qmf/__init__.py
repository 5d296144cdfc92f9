"""Quasi-modular, almost holomorphic and vector-valued modular forms for SL2(Z)."""

from ._core import *  # noqa: F401,F403
from ._core import __version__  # noqa: F401
