"""Crossing and intersecting families of geometric graphs."""
