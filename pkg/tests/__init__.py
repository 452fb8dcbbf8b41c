"""Tests for heavysift."""
