"""Readers and writers for structure, identity and diagram files."""
