"""Semigroup-graded algebras over prime fields, with two independent
simplicity deciders: structural criteria (corner centers, ring centers,
invariant ideals of partial actions) and brute-force ideal enumeration.
Everything is exact arithmetic; every criterion run can be cross-checked
against enumeration on the same instance.
"""

from .algebras import (
    Algebra, Ideal, Subalgebra, center, corner, find_idempotents, first_idempotent,
    ideal_closure, induced_algebra, is_field, is_simple, validate_algebra,
)
from .catalog import build_catalog, catalog_names
from .corpus import generate_corpus
from .criterion import (
    HypothesisReport, Verdict, check_hypotheses, corner_verdict_for_all_f, cross_validate,
    decide_center_criterion, decide_corner_criterion, minimal_support_central,
    quotient_chain_graded_simple,
)
from .errors import (
    BudgetExceededError, FalsificationError, GradlabError, HypothesesUnmetError,
    ValidationError,
)
from .fflinalg import FieldSpec, Subspace
from .gradings import (
    GradedAlgebra, coarsen_by_quotient, grading_group, is_graded_ideal, is_graded_simple,
    subalgebra_on_subset, validate_grading,
)
from .groups import (
    CentralSeries, GroupTable, center as group_center, cyclic, dihedral, direct_product,
    is_hypercentral, klein_four, quaternion8, quotient, symmetric3, upper_central_series,
    validate_group,
)
from .instances import InstanceDocument, canonical_json, instance_from_object, parse_instances
from .partial import (
    PartialAction, build_pskew, check_skew_equivalence, check_skew_simplicity, delta_embed,
    g_invariant_closure, is_g_simple, restrict_global_action, validate_partial_action,
)
from .semigroups import (
    GroupoidTable, SemigroupTable, groupoid_to_semigroup, is_cancellative_at,
    is_inverse_semigroup, nonzero_eGe_as_group, validate_groupoid, validate_semigroup,
)

__version__ = "0.1.0"

__all__ = [name for name in dir() if not name.startswith("_")]
