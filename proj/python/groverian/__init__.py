"""Generalized Groverian entanglement measure of pure multi-qubit states."""

from ._groverian import *  # noqa: F401,F403
from ._groverian import __doc__  # noqa: F401
