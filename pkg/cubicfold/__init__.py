"""Entry point for cubicfold"""

__version__ = "0.1.0"
