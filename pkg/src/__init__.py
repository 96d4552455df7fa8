"""
curvebounds
Intersection bounds for pairs of curves in P^4, with the audits behind them
"""

__version__ = "1.0.0"
