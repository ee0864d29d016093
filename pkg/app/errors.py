"""
Domain errors for the quantum Grassmannian toolkit
"""

from typing import Optional


class QGrassError(ValueError):
    """Base error for all toolkit failures"""


class InvalidBoxError(QGrassError):
    """Box parameters violate 1 <= d < n"""


class OutsideBoxError(QGrassError):
    """Partition or index tuple does not belong to the given box"""


class PieriRangeError(QGrassError):
    """Pieri generator index outside 1..d"""


class DegenerateInputError(QGrassError):
    """Evaluation method needs pairwise distinct entries"""


class NotInVarietyError(QGrassError):
    """Point does not lie on V_{d,n}"""

    def __init__(self, message: str, residual: float):
        super().__init__(message)
        self.residual = residual


class VanishingMinorError(QGrassError):
    """Interval minor in a factorization denominator vanishes"""


class ComplexInputError(QGrassError):
    """Real-valued point expected"""


class PrecisionError(QGrassError):
    """Rounded numeric value is too far from an integer"""

    def __init__(self, message: str, residual: float, hint: Optional[str] = None):
        super().__init__(message)
        self.residual = residual
        self.hint = hint or "retry with --precision extended:<bits>"
