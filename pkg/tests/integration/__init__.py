"""Integration tests for heavysift."""
