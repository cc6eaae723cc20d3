"""Finite multisemigroups: axioms, Green's relations, constructions, Hecke
multigroups, quotients, representations, nilpotency and census tools."""

from .core import (
    MultiOp, Verdict, bits, members, popcount, subset_product, is_associative, require_associative,
    find_identity, adjoin_identity, find_zero, adjoin_zero, strip_zero, idempotent_report,
    is_hypergroup, is_multigroup, is_involution, is_quasi_semigroup, classify,
    generated_submultisemigroup, power,
)
from .errors import (
    MultiOpError, InputError, DimensionError, AxiomError, PreconditionError, ModeError,
    CompatibilityError, NotFoundError, ResourceError, InternalError,
)
from .green import (
    GreenData, green_data, principal_ideal, is_simple, quarks, classify_simplicity,
    incidence_matrix, green_commutation, egg_boxes,
)
from .fixtures import fixture, FIXTURE_NAMES
from .io import TableDocument, parse_document, load_multiop, dumps_multiop

__version__ = "0.1.0"
