"""Finite multialgebras, homomorphisms and factor multialgebras."""
