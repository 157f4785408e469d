"""Main module level init."""
__all__ = [
    "analysis",
    "cli",
    "core",
    "lp",
    "matfun",
    "oracle",
    "solver",
    "transcription",
    "utils",
]

__version__ = "0.1.0"
