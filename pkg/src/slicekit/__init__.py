"""Exact combinatorics of generalized slices and convolution diagrams in affine Grassmannians."""

from .characters import EquivariantCharacter, QPolynomial, attracting_dimension, render
from .convolution import (ConvolutionDatum, covering_charts, fixed_points, gl2_tangent_character,
                          poincare_closed_form, poincare_polynomial, tangent_character)
from .kernels import BACKEND
from .reps import (is_minuscule, minuscule_fundamental_coweights, weight_multiplicity,
                   weights_of, weyl_dimension)
from .rootdatum import RootDatum, build_root_datum
from .slices import SliceDatum, slice_dimension

__version__ = "0.1.0"
