"""Homomorphism calculus, variety reflections and directed colimits."""
