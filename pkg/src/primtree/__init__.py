"""Primitive disk complexes, primitive trees and tree involutions for
genus-2 Heegaard splittings of lens spaces."""

from .automorphism import FixedVertex, SwappedEdge, brute_force_fixed, check_automorphism, fixed_point
from .generator import GenConfig, generate, validate_structure
from .involution import CertificateV, CertificateW, Contradiction, analyze, resolve_white_vertex, swap_admissible
from .lens import LensSpace, StructureCase, are_homeomorphic, classify, normalize
from .ptree import PrimitiveTree, build_primitive_tree, validate_ptree
from .simplicial import LabeledComplex, Vertex, corridor, dual_tree, is_bridge, validate
from .symmetric import symmetric_instance
from .surgery import (IntersectionPattern, Loop, innermost_loop, outermost_arc_avoiding, reduce_step,
                      reduce_to_disjoint)

__version__ = "0.1.0"
