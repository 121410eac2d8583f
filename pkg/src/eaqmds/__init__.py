"""Constacyclic codes over F_q2, defining-set decompositions, and
entanglement-assisted quantum MDS parameter catalogs, all in exact
integer arithmetic."""

from .catalog import (CatalogRow, RunConfig, generate_catalog, rows_for_combo,
                      serialize_csv, serialize_json)
from .codes import (CoefficientDescentError, ConstacyclicCode,
                    DistanceBudgetExceeded, InconsistentRootSystemError,
                    bch_delta, build_code, build_tower, classical_mds_verdict,
                    exact_distance_small, is_classical_mds)
from .cosets import (CodeSpec, CyclotomicCoset, DefiningSet, all_cosets, coset,
                     decompose, dual_containing, forms_skew_pair,
                     is_skew_symmetric, make_spec, omega_set, skew_partner,
                     t_minus_q)
from .eaq import (EaqParams, EbitOracleMismatch, check_singleton, derive_eaq,
                  ebits_combinatorial, ebits_rank_oracle, singleton_equality)
from .families import (FamilyError, FamilyId, FamilyInstance, VerificationError,
                       enumerate_family, family_defining_set, family_instances,
                       instance_params, k_range, predicted_tss, tss_threshold)
from .fields import (Embedding, Field, FieldElement, Matrix, Poly, conj, extend,
                     make_field, primitive_element)
from .verify import VerifyReport, run_verification

__version__ = "0.1.0"

__all__ = [
    "CatalogRow", "RunConfig", "generate_catalog", "rows_for_combo",
    "serialize_csv", "serialize_json",
    "CoefficientDescentError", "ConstacyclicCode", "DistanceBudgetExceeded",
    "InconsistentRootSystemError", "bch_delta", "build_code", "build_tower",
    "classical_mds_verdict", "exact_distance_small", "is_classical_mds",
    "CodeSpec", "CyclotomicCoset", "DefiningSet", "all_cosets", "coset",
    "decompose", "dual_containing", "forms_skew_pair", "is_skew_symmetric",
    "make_spec", "omega_set", "skew_partner", "t_minus_q",
    "EaqParams", "EbitOracleMismatch", "check_singleton", "derive_eaq",
    "ebits_combinatorial", "ebits_rank_oracle", "singleton_equality",
    "FamilyError", "FamilyId", "FamilyInstance", "VerificationError",
    "enumerate_family", "family_defining_set", "family_instances",
    "instance_params", "k_range", "predicted_tss", "tss_threshold",
    "Embedding", "Field", "FieldElement", "Matrix", "Poly", "conj", "extend",
    "make_field", "primitive_element",
    "VerifyReport", "run_verification",
    "__version__",
]
