"""Entry point for python -m ringcode."""

from ringcode.cli import app

if __name__ == "__main__":
    app()
