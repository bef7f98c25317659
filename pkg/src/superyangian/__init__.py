"""Exact computations in the super Yangian Y(gl_{m|n})."""
