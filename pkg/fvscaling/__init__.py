"""
fvscaling

Finite volume solver for scalar hyperbolic balance laws in one space dimension.
Solves problems either with the conventional one-step scheme (pointwise source)
or through a sequence of auxiliary problems with a frozen space-time source,
rescaled until the scaling coefficient settles to a fixed point.
"""

__version__ = "0.1.0"
__author__ = 'fvscaling developers'
__credits__ = 'fvscaling contributors'
