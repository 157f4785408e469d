"""Module level init for the command-line interface."""
from handsoff.cli.main import build_parser, main

__all__ = ["build_parser", "main"]
