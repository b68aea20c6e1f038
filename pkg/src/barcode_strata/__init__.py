"""Coxeter-complex coordinates, strata and modified distances for barcodes with n bars."""
from ._backend import BACKEND
from .barcode import (
    Barcode, CoxeterCoordinates, RegionDescriptor, analyze, coxeter_coordinates,
    double_coset, from_coxeter_coordinates, is_strict, load, parabolics, parse,
    region, same_region, sigma, tau_b, tau_d,
)
from .coordinates import ConeCoordinates, decompose, direction, face_of, project, reconstruct
from .coxeter import (
    Coset, CoxeterComplex, Face, MarkedDoubleCoset, ParabolicSubgroup,
    canonical_coset_rep, canonical_double_coset_rep, chamber_graph, enumerate_complex,
    parabolic_elements,
)
from .errors import (
    BarcodeFormatError, DegenerateError, EnumerationCapError, NonStrictError,
    SizeMismatchError, StrataError,
)
from .metrics import (
    MatchingResult, brute_force, distance, distance_matrix, modified_bottleneck,
    modified_wasserstein, quotient_distance,
)
from .permutations import Permutation, act_on_vector, compose, descents, inverse, inversions
from .strata import (
    OrbitPair, bottom, compare, contains, dc_member, enumerate_q, p_leq, phi, psi, q_leq,
    realize, stratum_of, top,
)

__version__ = "0.1.0"
