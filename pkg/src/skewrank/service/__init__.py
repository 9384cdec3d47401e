"""HTTP service over the analysis jobs."""
from .models import (
    AnalyzeRequest,
    CodeSpec,
    GeneratorSpec,
    GridEntry,
    ShortenRequest,
    SweepRequest,
    TowerSpec,
)

__all__ = [
    "AnalyzeRequest",
    "CodeSpec",
    "GeneratorSpec",
    "GridEntry",
    "ShortenRequest",
    "SweepRequest",
    "TowerSpec",
]
