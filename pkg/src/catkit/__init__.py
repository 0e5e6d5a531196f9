"""Executable free-logic category theory on finite models.

Finite one-sorted categories, functors and natural transformations,
universal constructions up to elementary topoi, symmetric monoidal
closed structure, and an IMLL proof compiler evaluated in concrete
SMCC models.
"""
from .category import (FiniteCategory, check_category, hom_set, identities, opposite_category,
                       product_category)
from .errors import (CatkitError, ConstructionError, EnvironmentMappingError, InputError,
                     ModelCompletenessError, ParseError, ProofError, ResourceError, StructuralError)
from .functor import (FunctorMap, NatTransMap, check_functor, check_nat_iso, check_nat_trans,
                      compose_functors, extend_components, identity_functor, invert_nat_iso)
from .kernel import Carrier, directed_eq, existing_identity, kleene_eq, quantify_existing
from .kernels import BACKEND
from .report import StructureReport, Violation

__version__ = "0.1.0"

__all__ = [
    "BACKEND", "Carrier", "kleene_eq", "directed_eq", "existing_identity", "quantify_existing",
    "FiniteCategory", "check_category", "identities", "hom_set", "opposite_category",
    "product_category", "FunctorMap", "NatTransMap", "check_functor", "compose_functors",
    "identity_functor", "check_nat_trans", "extend_components", "check_nat_iso", "invert_nat_iso",
    "StructureReport", "Violation", "CatkitError", "InputError", "ResourceError", "StructuralError",
    "ConstructionError", "EnvironmentMappingError", "ModelCompletenessError", "ParseError",
    "ProofError",
]
