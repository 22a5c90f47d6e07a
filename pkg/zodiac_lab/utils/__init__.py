"""Package initialization for ZodiacLab utilities."""
