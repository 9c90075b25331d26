"""Exact verification workbench for sign matrices, chessboard families and point configurations."""

__version__ = "1.0.0"
