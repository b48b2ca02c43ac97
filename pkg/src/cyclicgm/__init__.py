"""Gauss-Manin connections on eigenspaces of cyclic covers of the line."""
