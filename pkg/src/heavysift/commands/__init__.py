"""Subcommand implementations for the heavysift CLI."""
