"""Scott-closed set lattices of finite posets: sobriety, irreducibility,
C-compactness, reconstruction and exhaustive verification."""

from .elements import ElementClassification, classify, hypothesis_check, quasicontinuity_report, way_below_fin
from .enumeration import enumerate_posets
from .errors import (
    CycleDetected,
    FormatError,
    NotAFamily,
    NotALattice,
    NotAPartialOrder,
    NotClosed,
    NotDirected,
    NotReconstructible,
    NotScottClosed,
    NotT0,
    ScottError,
    SizeLimit,
    UnknownLabel,
    UnknownSuite,
)
from .harness import VerificationReport, verify
from .isomorphism import canonical_form, is_isomorphic, poset_isomorphism
from .lattice import (
    AbstractLattice,
    as_abstract,
    c_compact_elements,
    irreducibility_report,
    reconstruct_poset,
    scott_closed_lattice,
)
from .poset import FinitePoset, add_top, antichain, chain, from_cover_relation, property_mM_report
from .sobrification import hull_kernel_sobrification, is_irreducible_closed, sobriety_report
from .topology import FiniteSpace, classify_space, from_closed_family, scott_space, specialization_order

__version__ = "0.1.0"

__all__ = [
    "AbstractLattice",
    "CycleDetected",
    "ElementClassification",
    "FinitePoset",
    "FiniteSpace",
    "FormatError",
    "NotAFamily",
    "NotALattice",
    "NotAPartialOrder",
    "NotClosed",
    "NotDirected",
    "NotReconstructible",
    "NotScottClosed",
    "NotT0",
    "ScottError",
    "SizeLimit",
    "UnknownLabel",
    "UnknownSuite",
    "VerificationReport",
    "add_top",
    "antichain",
    "as_abstract",
    "c_compact_elements",
    "canonical_form",
    "chain",
    "classify",
    "classify_space",
    "enumerate_posets",
    "from_closed_family",
    "from_cover_relation",
    "hull_kernel_sobrification",
    "hypothesis_check",
    "irreducibility_report",
    "is_irreducible_closed",
    "is_isomorphic",
    "poset_isomorphism",
    "property_mM_report",
    "quasicontinuity_report",
    "reconstruct_poset",
    "scott_closed_lattice",
    "scott_space",
    "sobriety_report",
    "specialization_order",
    "verify",
    "way_below_fin",
]
