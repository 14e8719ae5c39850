"""Kostant game and Weyl group workbench."""

from ._kostant import *  # noqa: F401,F403
from ._kostant import KostantError, Diagram, Board, Dfa

__all__ = [name for name in dir() if not name.startswith("_")]
