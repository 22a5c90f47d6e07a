"""Package initialization for ZodiacLab."""

__version__ = "1.0.0"
