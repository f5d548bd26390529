"""Classify, construct and verify d-cubes with vertices in Z^n."""

from .classify import DimensionPair, MembershipVerdict, SetDescriptor, descriptor_for, is_member
from .construct import (
    CubeWitness,
    base_witness,
    construct_witness,
    expand_cube,
    quaternion_basis,
    verify_witness,
)
from .exact import factorize, int_sqrt
from .squares import (
    decompose_four_squares,
    decompose_n_squares,
    decompose_three_squares,
    decompose_two_squares,
    is_in_I2,
    is_in_I3,
)

__version__ = "0.1.0"
