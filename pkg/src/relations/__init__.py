"""Equivalence relations, the closure operator and fundamental relations."""
