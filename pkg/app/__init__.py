"""
Quantum Grassmannian toolkit
"""

__version__ = "1.0.0"
