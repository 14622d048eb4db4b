"""Exact positivity certificates for combinatorial triangles."""
