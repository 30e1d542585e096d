"""Staged validation of structure and diagram files."""
