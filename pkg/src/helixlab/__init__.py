"""Exact K_0 calculus for exceptional collections on Fano threefolds with rk K_0 = 4."""

from .chern import (ChernCharacter, FanoPreset, canonical_twist, from_coordinates, hrr_euler,
                    line_bundle, line_bundle_obstruction, to_coordinates, twist, validate_preset)
from .errors import (AmbientMismatch, BadPosition, CapExceeded, DimensionMismatch, HelixlabError,
                     NoSolution, NotInLattice, NotSODBasis, ParseError, ZeroRank, ZeroVector)
from .formats import load_preset, preset_names
from .k3 import (MukaiVector, bogomolov_restriction_report, discriminant, is_spherical_class,
                 mukai_pair, restrict_to_k3, slope)
from .lattice import (GramForm, SODVerdict, canonical_vector, canonicalize, check_sod_basis,
                      euler_pair, height, is_exceptional, unit_vector)
from .mutation import (Move, SerreOperator, apply_word, format_word, helix_shift, mutate,
                       parse_word, serre_operator)
from .orbit import (OrbitReport, SearchCaps, TransitivityReport, enumerate_exceptional,
                    enumerate_sod_bases, orbit_bfs, transitivity_report)

__version__ = "0.1.0"
