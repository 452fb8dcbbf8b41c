"""Concrete dynamical systems: circle maps, torus skew products and the Morse shift."""

from heavysift.systems.base import DynamicalSystem
from heavysift.systems.circle import IntervalUnion
from heavysift.systems.circle import RotationSystem
from heavysift.systems.circle import TimesMSystem
from heavysift.systems.circle import rotation_system
from heavysift.systems.circle import times_m_system
from heavysift.systems.morse import MorseShiftSystem
from heavysift.systems.morse import morse_prefix
from heavysift.systems.morse import morse_shift_system
from heavysift.systems.torus import SkewProductSystem
from heavysift.systems.torus import coeffs_to_point
from heavysift.systems.torus import point_to_sequence
from heavysift.systems.torus import skew_product_system
