"""Modular data, fusion rings, and A-D-E classified modular invariants.

The objects are the SU(2) level k WZW models and the c < 1 Virasoro minimal
models: their S and T matrices, fusion rings, the complete lists of modular
invariant partition functions with their A-D-E labels, and the classification
data of the associated local extensions (global indices, sector counts,
subfactor subnets).
"""

from .ade import (A, D, DynkinDiagram, E, SectorCounts, diagrams_with_coxeter,
                  is_type_I, label_invariant, minimal_invariant, su2_invariant)
from .classification import (ClassificationEntry, classify_minimal,
                             classify_minimal_type_II, classify_su2,
                             extension_index, mu_of_extension, sector_counts,
                             simple_current_locality, subnet_count)
from .errors import (ClassificationError, ConditioningError, IntegralityError,
                     LabelingError, UndecidedError)
from .fusion import (FusionCoefficients, check_ring_axioms, minimal_fusion,
                     mu_index, mu_minimal_closed_form, perron_frobenius_qdim,
                     qdim, qdims, verlinde)
from .invariants import (CheckResult, CommutantBasis, ModularInvariant,
                         brute_force_invariants, commutant_basis,
                         enumerate_invariants, invariant_from_json,
                         invariant_to_json, is_modular_invariant)
from .kernels import HAVE_COMPILED
from .modular_data import (ModularDatum, canonical_label, central_charge,
                           datum_to_json, minimal_data, minimal_labels,
                           statistical_phase, su2_data, weight)
from .tables import TABLE_IDS, emit_table, table_data
from .verify import run_suite

__version__ = "0.1.0"

__all__ = [
    "A", "D", "E", "DynkinDiagram", "SectorCounts", "diagrams_with_coxeter",
    "is_type_I", "label_invariant", "minimal_invariant", "su2_invariant",
    "ClassificationEntry", "classify_minimal", "classify_minimal_type_II",
    "classify_su2", "extension_index", "mu_of_extension", "sector_counts",
    "simple_current_locality", "subnet_count",
    "ClassificationError", "ConditioningError", "IntegralityError",
    "LabelingError", "UndecidedError",
    "FusionCoefficients", "check_ring_axioms", "minimal_fusion", "mu_index",
    "mu_minimal_closed_form", "perron_frobenius_qdim", "qdim", "qdims",
    "verlinde",
    "CheckResult", "CommutantBasis", "ModularInvariant",
    "brute_force_invariants", "commutant_basis", "enumerate_invariants",
    "invariant_from_json", "invariant_to_json", "is_modular_invariant",
    "HAVE_COMPILED",
    "ModularDatum", "canonical_label", "central_charge", "datum_to_json",
    "minimal_data", "minimal_labels", "statistical_phase", "su2_data",
    "weight",
    "TABLE_IDS", "emit_table", "table_data",
    "run_suite",
    "__version__",
]
