"""Tetrahedral curve computations driven by the weight vector alone."""
