"""Report formatters: JSON, CSV and TOON."""
