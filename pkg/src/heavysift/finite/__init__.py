"""Exact finite systems: ψ, heavy sets, windows and tower peeling."""
