"""Module level init for the LP transcription."""
from handsoff.transcription.transcribed_problem import (
    TranscribedProblem,
    transcribe,
)

__all__ = ["TranscribedProblem", "transcribe"]
