"""Parity-check matrices of the graph codes and their rank reports.

For a family member (n, m) on the graph with vertex set GF(q)^2:

    H   coset matrix: H[x][y] = 1 iff x XOR y is a connection vector.
        Equals adjacency + identity, and is the parity-check matrix of the
        storage code (the code is its kernel).
    W   entrywise complement of H (H plus the all-one matrix over GF(2)),
        whose rank differs from rank(H) by at most 1.
    D   the same indicator after the row/column relabelling
        (x1, x2) -> (x1, x2 + x1^n):  D[x][y] = 1 iff
        (x1+y1)^n + (x2 + x1^n) + (y2 + y1^n) != 0.  D is built by direct
        evaluation, never by permuting W, so the rank equality between the
        two is a testable fact rather than a construction artifact.

Matrices are built in row blocks with vectorised table lookups and packed
straight into BitMatrix words; m <= 7 keeps them inside the bit budget.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .bitmatrix import BitMatrix
from .carryfree import count_nm, nm_growth_bound_holds
from .errors import ParameterError
from .field import GF2m
from .graphs import CayleyGraph, FamilyParams, connection_set, exponent_r_plus

_BLOCK_ROWS = 1024  # keeps the per-block xor table small even at m = 7


def _pack_block_rows(block: np.ndarray, out: BitMatrix, row0: int) -> None:
    packed = np.packbits(block, axis=1, bitorder="little")
    buf = np.zeros((block.shape[0], out.words.shape[1] * 8), dtype=np.uint8)
    buf[:, : packed.shape[1]] = packed
    out.words[row0 : row0 + block.shape[0]] = np.ascontiguousarray(buf).view("<u8")


def coset_matrix(params: FamilyParams, field: GF2m) -> BitMatrix:
    """The q^2 x q^2 coset matrix H of the connection set."""
    conn = connection_set(params, field)
    n_vert = 1 << (2 * field.m)
    indicator = np.zeros(n_vert, dtype=bool)
    indicator[list(conn.vectors)] = True
    ids = np.arange(n_vert, dtype=np.int32)
    out = BitMatrix(n_vert, n_vert)
    for r0 in range(0, n_vert, _BLOCK_ROWS):
        chunk = ids[r0 : r0 + _BLOCK_ROWS]
        block = indicator[np.bitwise_xor.outer(chunk, ids)]
        _pack_block_rows(block, out, r0)
    return out


def w_matrix(h: BitMatrix) -> BitMatrix:
    """H plus the all-one matrix, i.e. the entrywise complement."""
    if h.rows != h.cols:
        raise ParameterError("expected a square matrix")
    return h.complement()


def d_matrix(params: FamilyParams, field: GF2m) -> BitMatrix:
    """The relabelled indicator matrix D, by direct evaluation for any odd n."""
    if field.m != params.m:
        raise ParameterError(f"field degree {field.m} does not match m={params.m}")
    q = field.q
    n_vert = q * q
    ids = np.arange(n_vert, dtype=np.int32)
    x1 = ids >> field.m
    x2 = ids & (q - 1)
    powers = field.pow_vec(np.arange(q, dtype=np.int64), params.n).astype(np.int32)
    shift = (x2 ^ powers[x1]).astype(np.int32)  # x2 + x1^n per vertex
    out = BitMatrix(n_vert, n_vert)
    for r0 in range(0, n_vert, _BLOCK_ROWS):
        sl = slice(r0, min(r0 + _BLOCK_ROWS, n_vert))
        cross = powers[np.bitwise_xor.outer(x1[sl], x1)]  # (x1+y1)^n
        block = (cross ^ shift[sl][:, None] ^ shift[None, :]) != 0
        _pack_block_rows(block, out, r0)
    return out


@dataclass(frozen=True)
class CodeReport:
    """Ranks, dimension and exact rate of one family member.

    The counting bound N_m applies when n = 2^r + 1 for some r >= 1; for
    other odd n the two bound fields are None.  The growth-bound check in
    Z[sqrt(2)] exists for r = 1 only.
    """

    params: FamilyParams
    size: int
    rank_h: int
    rank_w: int
    rank_d: int
    dimension: int
    rate: Fraction
    r: int | None
    n_m: int | None
    sandwich_ok: bool
    substitution_ok: bool
    nm_ok: bool | None
    closed_form_ok: bool | None

    def to_json_dict(self) -> dict:
        return {
            "n": self.params.n,
            "m": self.params.m,
            "size": self.size,
            "rank_H": self.rank_h,
            "rank_W": self.rank_w,
            "rank_D": self.rank_d,
            "dimension": self.dimension,
            "rate_num": self.rate.numerator,
            "rate_den": self.rate.denominator,
            "N_m": self.n_m,
            "bounds": {
                "sandwich_ok": self.sandwich_ok,
                "substitution_ok": self.substitution_ok,
                "nm_ok": self.nm_ok,
                "closed_form_ok": self.closed_form_ok,
            },
        }


def code_report(params: FamilyParams, field: GF2m | None = None) -> CodeReport:
    """Assemble ranks of H, W, D plus the exact bound comparisons."""
    if field is None:
        field = GF2m(params.m)
    h = coset_matrix(params, field)
    rank_h = h.rank()
    rank_w = w_matrix(h).rank()
    rank_d = d_matrix(params, field).rank()
    size = h.rows
    dimension = size - rank_h
    r = exponent_r_plus(params.n)
    n_m = count_nm(params.m, r) if r is not None else None
    return CodeReport(
        params=params,
        size=size,
        rank_h=rank_h,
        rank_w=rank_w,
        rank_d=rank_d,
        dimension=dimension,
        rate=Fraction(dimension, size),
        r=r,
        n_m=n_m,
        sandwich_ok=abs(rank_h - rank_w) <= 1,
        substitution_ok=rank_w == rank_d,
        nm_ok=(rank_d <= n_m) if n_m is not None else None,
        closed_form_ok=nm_growth_bound_holds(params.m, n_m) if r == 1 else None,
    )


def sample_codewords(h: BitMatrix, count: int, seed: int) -> list[int]:
    """Deterministic pseudo-random GF(2) combinations of the kernel basis."""
    if count < 1:
        raise ParameterError("count must be positive")
    basis = h.kernel_basis()
    rng = random.Random(seed)
    out = []
    for _ in range(count):
        word = 0
        if basis:
            mask = rng.getrandbits(len(basis))
            for i, b in enumerate(basis):
                if (mask >> i) & 1:
                    word ^= b
        out.append(word)
    return out


def verify_repair(graph: CayleyGraph, codeword: int) -> bool:
    """Check the storage property straight against the graph.

    Every coordinate must equal the XOR of its neighbours' coordinates.
    This goes through the adjacency rows, not through H, so it is an
    independent check on kernel vectors of the coset matrix.
    """
    n_vert = graph.num_vertices
    if codeword < 0 or codeword >> n_vert:
        raise ParameterError(f"codeword does not fit {n_vert} coordinates")
    for v in range(n_vert):
        if (codeword >> v) & 1 != (codeword & graph.adjacency[v]).bit_count() & 1:
            return False
    return True
