"""heavysift - Heavy points of measure-preserving systems.

heavysift computes and verifies heaviness: points and sequences whose Birkhoff
partial sums never fall below the space average. It covers exact finite
systems, rational circle and torus maps, the Morse shift and the multiples
sequence x, 2x, 3x, ... together with its continued-fraction characterization.
"""

__version__ = '0.1.0'

__all__ = ['__version__']
