"""Errors shared across the package."""


class ModularCaseUnsupported(ValueError):
    """The characteristic divides the rotation group order.

    Homology then fails to be semisimple and the submodule lattice is not
    classified by this pipeline.
    """


class EvenPrimeUnsupported(ModularCaseUnsupported):
    """p = 2 always divides the rotation group order."""
