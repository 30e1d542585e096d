"""Fundamental relations of finite multialgebras."""
