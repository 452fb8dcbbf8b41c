"""Heaviness of the multiples sequence x, 2x, 3x, ... and continued fractions."""
