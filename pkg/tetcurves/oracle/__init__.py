"""Brute-force monomial ideal engine in the variables a, b, c, d."""
