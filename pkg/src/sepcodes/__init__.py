"""Separable, strongly separable and frameproof codes: verification, construction, bounds."""

from .bounds import BoundReport, bound_22, bound_2sc_length_n, bound_33, bound_report, bound_sc_upper, bound_small_n
from .capset import CapSet, capset_exact, capset_greedy, collinear, is_cap
from .code import (
    Code,
    CodeError,
    DescendantSet,
    a_sets,
    code_parse,
    code_serialize,
    coordinate_set,
    descendant,
    descendant_members,
    hamming_distance,
)
from .configs import ForbiddenConfigWitness, find_forbidden_config
from .constructions import admissible, build_ssc, difference_matrix, dm_validate, generate, restrict
from .estimators import CoalitionTracer, CodeVerifier, verify
from .field import FieldSpec, field_create, field_of_order, primitive_element, sixth_root_of_unity, vector_view
from .search import SearchResult, isomorph_canonical, search_optimal
from .tracing import TraceResult, trace
from .verifiers import (
    ResourceCapExceeded,
    VerificationReport,
    is_fpc,
    is_fpc2_fast,
    is_sc,
    is_sc3_fast,
    is_ssc,
    is_ssc3_fast,
    witness_reproduces,
)

__version__ = "0.1.0"
