"""ringcode - Coding theory over finite rings: weights, balls, bounds and search."""

__version__ = "0.4.0"
__codename__ = "Overweight"
