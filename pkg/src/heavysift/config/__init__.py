"""Configuration management for heavysift."""
