"""Exact workbench for k-uniform set systems with bounded matching number."""

from sunflower._core import *  # noqa: F401,F403
from sunflower._core import __doc__  # noqa: F401
