"""Tracelike matrices, the discriminant pfaffian, and congruence certificates.

Pipeline for a ring: rebase to a unital basis, pad with copies of Z until the
rank is a multiple of 4, take the Gram matrix B, subtract multiples of the first
row to get a symmetric C with even diagonal, split C = U + U^T and take
pf(U - U^T). Then det(B) = disc and

    disc = det(B) == det(C) == pf(U - U^T)^2 == dpf(B)^2   (mod 4).

Every step is re-checked and any failure raises :class:`InvariantViolation`.
"""
from __future__ import annotations

import json
from dataclasses import dataclass, field

from . import kernels
from .errors import (
    CornerNotRank,
    DimensionMismatch,
    FormatError,
    InvariantViolation,
    NotSquare,
    NotSymmetric,
    NotUnimodular,
    OddDiagonal,
    ParityViolation,
    RankNotMultipleOf4,
)
from .exact_linalg import IntMatrix, adjugate, det, pfaffian, trace
from .ring_core import (
    FramedRing,
    change_basis,
    decode_int,
    decode_matrix,
    encode_int,
    encode_matrix,
    gram_matrix,
    make_unital,
    pad_with_Z,
)

FORMAT_VERSION = 1


@dataclass(frozen=True)
class TracelikeView:
    """A tracelike matrix B with witnesses c_i, b_ii = b_1i^2 + 2 c_i (i >= 2)."""

    B: IntMatrix
    c: tuple[int, ...]

    @property
    def n(self) -> int:
        return self.B.n_rows


def is_tracelike(B: IntMatrix) -> TracelikeView:
    """Return the tracelike view of ``B`` or raise naming the first violated condition."""
    if not B.is_square():
        raise NotSquare("tracelike matrices are square")
    if not B.is_symmetric():
        raise NotSymmetric("tracelike matrices are symmetric")
    n = B.n_rows
    if n == 0 or B[0, 0] != n:
        raise CornerNotRank(f"b_11 = {B[0, 0] if n else None}, expected {n}")
    c = []
    for i in range(1, n):
        diff = B[i, i] - B[0, i] ** 2
        if diff % 2:
            raise ParityViolation(i + 1)
        c.append(diff // 2)
    return TracelikeView(B, tuple(c))


def symmetrize(T: TracelikeView) -> IntMatrix:
    """Symmetric matrix C with even diagonal and det(C) == det(B) (mod 4); needs 4 | n."""
    n = T.n
    if n % 4:
        raise RankNotMultipleOf4(f"n = {n}")
    b = T.B.rows
    first = b[0]
    rows = [list(first)]
    for i in range(1, n):
        row = [first[i]]
        for j in range(1, n):
            row.append(2 * T.c[i - 1] if i == j else b[i][j] - first[i] * first[j])
        rows.append(row)
    return IntMatrix(rows, n)


def split_even_diagonal(C: IntMatrix) -> IntMatrix:
    """Upper-triangular U with C = U + U^T (diagonal of U is half that of C)."""
    if not C.is_symmetric():
        raise NotSymmetric("C must be symmetric")
    n = C.n_rows
    rows = [[0] * n for _ in range(n)]
    for i in range(n):
        if C[i, i] % 2:
            raise OddDiagonal(f"C[{i}][{i}] = {C[i, i]}")
        rows[i][i] = C[i, i] // 2
        for j in range(i + 1, n):
            rows[i][j] = C[i, j]
    return IntMatrix(rows, n)


def discriminant_pfaffian(B: IntMatrix) -> int:
    """Sum over involutions of {2..n}: fixed points k contribute b_1k, 2-cycles {i<j} contribute b_ij."""
    if not B.is_square():
        raise NotSquare("dpf needs a square matrix")
    return kernels.dpf(B.rows)


def dpf_term_count(n: int) -> int:
    """Number of monomials in dpf of an n x n matrix: involutions on n - 1 letters."""
    if n < 1:
        raise ValueError("n must be positive")
    prev, cur = 1, 1  # I(0), I(1)
    for m in range(2, n):
        prev, cur = cur, cur + (m - 1) * prev
    return cur


def det_mod4_expansion(M: IntMatrix, Q: IntMatrix) -> int:
    """(det M + 2 Tr(adj(M) Q)) mod 4, which equals det(M + 2Q) mod 4."""
    if not M.is_square() or M.shape != Q.shape:
        raise DimensionMismatch(f"need square matrices of equal size, got {M.shape} and {Q.shape}")
    return (det(M) + 2 * trace(adjugate(M) @ Q)) % 4


def pad_tracelike(B: IntMatrix) -> IntMatrix:
    """Tracelike matrix one size larger with the same det and dpf.

    Adds 1 to b_11 and borders with last row/column (1, 0, ..., 0, 1).
    """
    n = B.n_rows
    rows = [list(r) + [0] for r in B.rows]
    rows[0][0] += 1
    rows[0][n] = 1
    rows.append([1] + [0] * (n - 1) + [1])
    return IntMatrix(rows, n + 1)


# -- certificates ------------------------------------------------------------

@dataclass(frozen=True)
class Certificate:
    source: str
    B: IntMatrix
    unital_Q: IntMatrix | None
    pad_count: int
    C: IntMatrix
    U: IntMatrix
    pf_value: int
    dpf_value: int
    disc_value: int
    residue: int
    format_version: int = field(default=FORMAT_VERSION)

    @property
    def kind(self) -> str:
        return self.source.split(":", 1)[0]

    def to_json(self) -> dict:
        return {
            "format_version": self.format_version,
            "source": self.source,
            "B": encode_matrix(self.B),
            "unital_Q": None if self.unital_Q is None else encode_matrix(self.unital_Q),
            "pad_count": self.pad_count,
            "C": encode_matrix(self.C),
            "U": encode_matrix(self.U),
            "pf_value": encode_int(self.pf_value),
            "dpf_value": encode_int(self.dpf_value),
            "disc_value": encode_int(self.disc_value),
            "residue": self.residue,
        }

    @classmethod
    def from_json(cls, obj) -> Certificate:
        if not isinstance(obj, dict):
            raise FormatError("certificate must be a JSON object")
        missing = {
            "format_version", "source", "B", "unital_Q", "pad_count", "C", "U",
            "pf_value", "dpf_value", "disc_value", "residue",
        } - obj.keys()
        if missing:
            raise FormatError(f"certificate is missing {sorted(missing)}")
        if obj["format_version"] != FORMAT_VERSION:
            raise FormatError(f"unsupported format_version {obj['format_version']!r}")
        if not isinstance(obj["source"], str):
            raise FormatError("source must be a string")
        q = obj["unital_Q"]
        return cls(
            source=obj["source"],
            B=decode_matrix(obj["B"]),
            unital_Q=None if q is None else decode_matrix(q),
            pad_count=decode_int(obj["pad_count"]),
            C=decode_matrix(obj["C"]),
            U=decode_matrix(obj["U"]),
            pf_value=decode_int(obj["pf_value"]),
            dpf_value=decode_int(obj["dpf_value"]),
            disc_value=decode_int(obj["disc_value"]),
            residue=decode_int(obj["residue"]),
        )

    def dumps(self) -> str:
        return json.dumps(self.to_json(), indent=1) + "\n"

    @classmethod
    def loads(cls, text: str) -> Certificate:
        return cls.from_json(json.loads(text))


def _invariant_failure(cert: Certificate) -> str | None:
    """First violated certificate invariant, or None."""
    disc = cert.disc_value
    if cert.residue != disc % 4:
        return "residue mismatch"
    if cert.residue not in (0, 1):
        return f"residue {cert.residue} not in {{0, 1}}"
    C, U = cert.C, cert.U
    if not U.is_square() or C.shape != U.shape:
        return "C/U shape mismatch"
    if C != U + U.T:
        return "C != U + U^T"
    if any(U[i, j] for i in range(U.n_rows) for j in range(i)):
        return "U is not upper triangular"
    if any(C[i, i] % 2 for i in range(C.n_rows)):
        return "C has odd diagonal"
    if C.n_rows % 4:
        return "padded size not a multiple of 4"
    if (cert.pf_value ** 2 - disc) % 4:
        return "pf^2 != disc (mod 4)"
    if (det(C) - disc) % 4:
        return "det(C) != disc (mod 4)"
    if (cert.dpf_value ** 2 - disc) % 4:
        return "dpf^2 != disc (mod 4)"
    return None


def _build(source: str, B: IntMatrix, unital_Q, pad_count: int, padded_B: IntMatrix) -> Certificate:
    C = symmetrize(is_tracelike(padded_B))
    U = split_even_diagonal(C)
    cert = Certificate(
        source=source,
        B=B,
        unital_Q=unital_Q,
        pad_count=pad_count,
        C=C,
        U=U,
        pf_value=pfaffian(U - U.T),
        dpf_value=discriminant_pfaffian(B),
        disc_value=det(B),
        residue=det(B) % 4,
    )
    problem = _invariant_failure(cert)
    if problem:
        raise InvariantViolation(f"{source}: {problem}")
    return cert


def stickelberger_check(ring: FramedRing, name: str | None = None) -> Certificate:
    """Certificate that disc(ring) is 0 or 1 mod 4.

    ``B`` in the certificate is the Gram matrix of the unital, Z-padded framing.
    """
    unital, q = make_unital(ring)
    pad = -ring.rank % 4
    padded = pad_with_Z(unital, pad)
    if not padded.unital:
        raise InvariantViolation("padding lost unitality")
    B = gram_matrix(padded)
    return _build("ring" if name is None else f"ring:{name}", B, q, pad, B)


def dpf_congruence_check(T: TracelikeView, name: str | None = None) -> Certificate:
    """Certificate that det(B) == dpf(B)^2 (mod 4) for a tracelike B of any size.

    When 4 does not divide n the matrix is bordered (see :func:`pad_tracelike`)
    until it does; det and dpf are unchanged by the bordering.
    """
    padded = T.B
    pad = -T.n % 4
    for _ in range(pad):
        padded = pad_tracelike(padded)
    return _build("matrix" if name is None else f"matrix:{name}", T.B, None, pad, padded)


@dataclass(frozen=True)
class Verification:
    ok: bool
    reason: str = ""

    def __bool__(self) -> bool:
        return self.ok


def verify_certificate(cert: Certificate, source) -> Verification:
    """Replay ``cert`` against a FramedRing or an IntMatrix.

    Uses only the recorded transition data; never trusts the recorded values.
    """
    try:
        return _verify(cert, source)
    except (InvariantViolation, DimensionMismatch, NotUnimodular, ValueError) as exc:
        return Verification(False, f"replay failed: {exc}")


def _verify(cert: Certificate, source) -> Verification:
    if cert.pad_count < 0:
        return Verification(False, "negative pad_count")
    if isinstance(source, FramedRing):
        if cert.kind != "ring":
            return Verification(False, "source mismatch: certificate is not for a ring")
        q = cert.unital_Q
        if q is None:
            return Verification(False, "missing unital_Q")
        if q.shape != (source.rank, source.rank) or det(q) not in (1, -1):
            return Verification(False, "unital_Q is not unimodular of the right size")
        padded = pad_with_Z(change_basis(source, q), cert.pad_count)
        B = gram_matrix(padded)
        if B != cert.B:
            return Verification(False, "gram mismatch")
        if not padded.unital:
            return Verification(False, "unital_Q does not give a unital basis")
        padded_B = B
    elif isinstance(source, IntMatrix):
        if cert.kind != "matrix":
            return Verification(False, "source mismatch: certificate is not for a matrix")
        if cert.unital_Q is not None:
            return Verification(False, "matrix certificate carries a unital_Q")
        if source != cert.B:
            return Verification(False, "B mismatch")
        padded_B = source
        for _ in range(cert.pad_count):
            padded_B = pad_tracelike(padded_B)
    else:
        return Verification(False, f"unsupported source type {type(source).__name__}")

    if padded_B.n_rows % 4:
        return Verification(False, "padded size not a multiple of 4")
    try:
        view = is_tracelike(padded_B)
    except (NotSymmetric, CornerNotRank, ParityViolation) as exc:
        return Verification(False, f"not tracelike: {exc}")
    C = symmetrize(view)
    if C != cert.C:
        return Verification(False, "C mismatch")
    U = split_even_diagonal(C)
    if U != cert.U:
        return Verification(False, "U mismatch")
    if pfaffian(U - U.T) != cert.pf_value:
        return Verification(False, "pf mismatch")
    if discriminant_pfaffian(cert.B) != cert.dpf_value:
        return Verification(False, "dpf mismatch")
    if det(cert.B) != cert.disc_value:
        return Verification(False, "disc mismatch")
    problem = _invariant_failure(cert)
    if problem:
        return Verification(False, problem)
    return Verification(True, "ok")
