"""Unit tests for heavysift components."""
