"""Console entry point."""

from .io_cli import main

__all__ = ["main"]
