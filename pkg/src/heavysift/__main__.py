"""Entry point for running heavysift as a module: python -m heavysift."""

from heavysift.cli import app

if __name__ == '__main__':
    app()
