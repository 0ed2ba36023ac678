"""Triangle presentations on projective-plane and opposition links."""

__version__ = "0.1.0"
