"""Fixture factories for multialgebras."""
