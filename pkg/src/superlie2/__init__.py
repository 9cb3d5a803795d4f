"""Exact computations with Lie superalgebras in characteristic 2."""
