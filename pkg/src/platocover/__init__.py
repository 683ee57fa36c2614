"""Census of elementary abelian regular branched coverings of the Platonic maps."""

from .errors import EvenPrimeUnsupported, ModularCaseUnsupported

__all__ = [
    "EvenPrimeUnsupported",
    "ModularCaseUnsupported",
]

__version__ = "0.1.0"
