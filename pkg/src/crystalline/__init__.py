"""Exact arithmetic and center computations for crystalline graded rings."""

from .catalog import CATALOG, catalog_spec
from .center import center_abelian, center_nonabelian, center_oracle, cross_check
from .cocycle import Cocycle, CocycleTable, CocycleValidationError, Twist, validate_cocycle
from .fileformat import load_spec, parse_spec
from .graded import CrystallineRing, GradedElement
from .groups import GROUP_CATALOG, GroupTable
from .lattice import Lattice
from .rings import FracScalar, RingAut, RingElement, RingSpec

__all__ = [
    "CATALOG", "catalog_spec", "center_abelian", "center_nonabelian", "center_oracle", "cross_check",
    "Cocycle", "CocycleTable", "CocycleValidationError", "Twist", "validate_cocycle",
    "load_spec", "parse_spec", "CrystallineRing", "GradedElement", "GROUP_CATALOG", "GroupTable",
    "Lattice", "FracScalar", "RingAut", "RingElement", "RingSpec",
]
