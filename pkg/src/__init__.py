"""
Stieltjes constants toolkit
Integral oracle, saddle-point asymptotics and the published reference tables.
"""

__version__ = "1.0.0"
