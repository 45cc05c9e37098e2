"""Exact computations with Lie-central derivations of small Leibniz algebras."""

from .algebra import (
    Algebra,
    abelian,
    ann_ideal,
    bracket,
    build_algebra,
    direct_sum,
    lie_bracket,
    liezation,
    quotient_algebra,
)
from .catalog import FIXTURE_NAMES, all_fixtures, fixture, parse_algebra, serialize
from .errors import (
    Char2Field,
    DimensionMismatch,
    FieldMismatch,
    IndexOutOfRange,
    LeibError,
    LeibnizViolation,
    NotAnIdeal,
    NotClosed,
    NotInvariant,
    ParseError,
    ShapeMismatch,
    SpecTooLarge,
    TargetNotAbelian,
    UnknownFixture,
)
from .fields import GF, QQ, Field
from .inner import almost_inner_suite, der_c, der_cz, prop516_suite
from .isoclinism import IsoclinismWitness, isoclinism_invariants, stem_dim_audit, verify_isoclinism
from .lattice import classical_centers, gamma2, ideal_closure, lie_center, lie_centralizer, lie_commutator_ideal
from .maps import centroid_lie, der_abs, der_lie, der_z, id_lie, id_star, k_intersection
from .series import lie_nilpotency_class, lower_lie_series, min_generators, upper_lie_series
from .subspace import Subspace, span

__version__ = "0.1.0"
