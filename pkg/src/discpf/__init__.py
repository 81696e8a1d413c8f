"""Exact discriminants and discriminant pfaffians of rings of finite rank over Z."""
from .constructions import (
    direct_product,
    group_ring,
    hurwitz_quaternions,
    matrix_ring,
    monogenic_ring,
    quadratic_ring,
    random_ring,
    sqrt_ring,
)
from .exact_linalg import IntMatrix, adjugate, det, inverse_unimodular, pfaffian, trace, unimodular_completion
from .kernels import BACKEND
from .ring_core import (
    FramedRing,
    MultiplicationTable,
    change_basis,
    discriminant,
    gram_matrix,
    lambda_rep,
    make_unital,
    pad_with_Z,
    trace_pairing,
    validate,
)
from .stickelberger import (
    Certificate,
    TracelikeView,
    discriminant_pfaffian,
    dpf_congruence_check,
    is_tracelike,
    stickelberger_check,
    verify_certificate,
)

__version__ = "0.1.0"
