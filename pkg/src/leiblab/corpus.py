"""Small Leibniz algebras over prime fields, and brute-force oracles.

The oracles here (``leibniz_valid_batch``, ``oracle_der_lie``) are written
with numpy and a separate mod-p elimination so that they share no code with
the exact solver they are used to check.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from typing import Iterator

import numpy as np

from .algebra import Algebra
from .errors import SpecTooLarge
from .fields import Field
from .maps import MapSpace
from .subspace import Subspace

EXHAUSTIVE_LIMIT = 10 ** 7


@dataclass(frozen=True)
class CorpusSpec:
    dim: int
    field: Field
    mode: str = "random"  # "exhaustive" | "random"
    count: int = 100
    seed: int = 0

    def __post_init__(self):
        if not self.field.is_finite:
            raise ValueError("corpus generation needs a prime field")
        if self.mode not in ("exhaustive", "random"):
            raise ValueError(f"unknown mode {self.mode!r}")
        if self.dim < 1:
            raise ValueError("dimension must be positive")
        if self.mode == "exhaustive" and self.field.p ** (self.dim ** 3) > EXHAUSTIVE_LIMIT:
            raise SpecTooLarge(
                f"exhaustive enumeration of {self.field.p}^{self.dim ** 3} tensors exceeds {EXHAUSTIVE_LIMIT}"
            )


def _tensor(flat, n):
    return tuple(tuple(tuple(flat[(i * n + j) * n + k] for k in range(n)) for j in range(n)) for i in range(n))


def _try_build(flat, n, F):
    from .algebra import _leibniz_witness

    c = _tensor(flat, n)
    if _leibniz_witness(n, F, c) is not None:
        return None
    return Algebra(n, F, c)


def _random_invertible(rng: random.Random, n: int, p: int):
    while True:
        P = [[rng.randrange(p) for _ in range(n)] for _ in range(n)]
        inv = _inverse_mod(P, p)
        if inv is not None:
            return P, inv


def _inverse_mod(P, p):
    n = len(P)
    M = [list(row) + [int(i == j) for j in range(n)] for i, row in enumerate(P)]
    for col in range(n):
        piv = next((r for r in range(col, n) if M[r][col] % p), None)
        if piv is None:
            return None
        M[col], M[piv] = M[piv], M[col]
        inv = pow(M[col][col], -1, p)
        M[col] = [v * inv % p for v in M[col]]
        for r in range(n):
            if r != col and M[r][col]:
                f = M[r][col]
                M[r] = [(a - f * b) % p for a, b in zip(M[r], M[col])]
    return [row[n:] for row in M]


def change_basis(flat, n, p, P, Pinv):
    """Structure constants in the basis ``f_a = sum_i P[i][a] e_i``."""
    c = np.array(flat, dtype=np.int64).reshape(n, n, n)
    P_ = np.array(P, dtype=np.int64)
    Pi = np.array(Pinv, dtype=np.int64)
    out = np.einsum("ia,jb,ijk,mk->abm", P_, P_, c, Pi) % p
    return [int(v) for v in out.reshape(-1)]


def generate(spec: CorpusSpec, stats: dict | None = None) -> Iterator[Algebra]:
    """Yield valid algebras for ``spec``; identical specs give identical streams.

    Random mode draws sparse tensors (a few random nonzero entries), keeps
    those passing the identity, then applies a random change of basis so the
    results are not confined to sparse coordinates. ``stats`` (if given)
    receives ``proposals`` and ``accepted`` counts.
    """
    n, F, p = spec.dim, spec.field, spec.field.p
    stats = stats if stats is not None else {}
    stats.update(proposals=0, accepted=0)
    if spec.mode == "exhaustive":
        for flat in itertools.product(range(p), repeat=n ** 3):
            stats["proposals"] += 1
            A = _try_build(flat, n, F)
            if A is not None:
                stats["accepted"] += 1
                yield A
        return
    rng = random.Random(spec.seed)
    size = n ** 3
    made = 0
    while made < spec.count:
        stats["proposals"] += 1
        k = rng.randint(0, 2 * n)
        flat = [0] * size
        for pos in rng.sample(range(size), min(k, size)):
            flat[pos] = rng.randrange(1, p)
        if _try_build(flat, n, F) is None:
            continue
        P, Pinv = _random_invertible(rng, n, p)
        A = _try_build(change_basis(flat, n, p, P, Pinv), n, F)
        assert A is not None, "change of basis broke the Leibniz identity"
        stats["accepted"] += 1
        made += 1
        yield A


# -- independent oracles ---------------------------------------------------------

def leibniz_valid_batch(C: np.ndarray, p: int) -> np.ndarray:
    """Vectorised identity check for a stack of tensors ``C[b, i, j, k]``."""
    C = C.astype(np.int64) % p
    lhs = np.einsum("bjkm,bimt->bijkt", C, C)
    rhs = np.einsum("bijm,bmkt->bijkt", C, C) - np.einsum("bikm,bmjt->bijkt", C, C)
    return np.all((lhs - rhs) % p == 0, axis=(1, 2, 3, 4))


def count_valid_tensors(n: int, p: int, chunk: int = 1 << 16) -> int:
    """Number of Leibniz tensors over GF(p) in dimension n, by enumeration."""
    total = p ** (n ** 3)
    if total > EXHAUSTIVE_LIMIT:
        raise SpecTooLarge(f"{total} tensors")
    count = 0
    weights = p ** np.arange(n ** 3 - 1, -1, -1, dtype=np.int64)
    for start in range(0, total, chunk):
        idx = np.arange(start, min(total, start + chunk), dtype=np.int64)
        digits = (idx[:, None] // weights[None, :]) % p
        count += int(leibniz_valid_batch(digits.reshape(-1, n, n, n), p).sum())
    return count


def rref_mod_p(M: np.ndarray, p: int) -> np.ndarray:
    """Reduced row-echelon form over GF(p), zero rows dropped."""
    M = np.array(M, dtype=np.int64) % p
    rows, cols = M.shape
    r = 0
    for c in range(cols):
        if r == rows:
            break
        nz = np.nonzero(M[r:, c])[0]
        if nz.size == 0:
            continue
        piv = r + nz[0]
        M[[r, piv]] = M[[piv, r]]
        M[r] = M[r] * pow(int(M[r, c]), -1, p) % p
        f = M[:, c].copy()
        f[r] = 0
        M = (M - np.outer(f, M[r])) % p
        r += 1
    return M[:r]


def _lie_residual(D: np.ndarray, S: np.ndarray, p: int) -> np.ndarray:
    """``d(s(a,b)) - s(da, b) - s(a, db)`` for each matrix ``D[z]``, indexed ``[z, a, b, i]``."""
    # S[a, b, k]; D[z, i, j] with d(e_j) = sum_i D[i, j] e_i
    lhs = np.einsum("abk,zik->zabi", S, D)
    r1 = np.einsum("zma,mbi->zabi", D, S)
    r2 = np.einsum("zmb,ami->zabi", D, S)
    return (lhs - r1 - r2) % p


def _lie_identity_ok(D: np.ndarray, S: np.ndarray, p: int) -> np.ndarray:
    return ~_lie_residual(D, S, p).reshape(len(D), -1).any(axis=1)


def oracle_der_lie(A: Algebra, chunk: int = 1 << 16) -> MapSpace:
    """All matrices satisfying the Lie-derivation identity, by enumeration.

    Also checks that the number of solutions is ``p ** dim`` (a subspace).
    """
    F, n = A.field, A.n
    p = F.p
    if not p:
        raise ValueError("enumeration needs a finite field")
    total = p ** (n * n)
    if total > EXHAUSTIVE_LIMIT:
        raise SpecTooLarge(f"{p}^{n * n} matrices exceeds {EXHAUSTIVE_LIMIT}")
    c = np.array(A.c, dtype=np.int64)
    S = (c + c.transpose(1, 0, 2)) % p
    # the identity is linear in d: evaluate its residual on unit matrices once,
    # then test every matrix in a chunk with one product (exact in float64)
    units = np.eye(n * n, dtype=np.int64).reshape(-1, n, n)
    K = _lie_residual(units, S, p).reshape(n * n, -1).astype(np.float64)
    weights = p ** np.arange(n * n - 1, -1, -1, dtype=np.int64)
    found = []
    for start in range(0, total, chunk):
        idx = np.arange(start, min(total, start + chunk), dtype=np.int64)
        flat = (idx[:, None] // weights[None, :]) % p
        res = np.rint(flat.astype(np.float64) @ K).astype(np.int64) % p
        found.append(flat[~res.any(axis=1)])
    sols = np.concatenate(found) if found else np.zeros((0, n * n), dtype=np.int64)
    basis = rref_mod_p(sols, p) if len(sols) else np.zeros((0, n * n), dtype=np.int64)
    if len(sols) != p ** len(basis):
        raise AssertionError(f"{len(sols)} solutions do not form a subspace of dimension {len(basis)}")
    rows = tuple(tuple(int(v) for v in r) for r in basis)
    return MapSpace(A, Subspace(n * n, F, rows), "oracle_der_lie")


def oracle_der_lie_sampled(A: Algebra, space: MapSpace, samples: int = 2000, seed: int = 0) -> int:
    """Membership agreement on random matrices; returns the number of mismatches."""
    F, n = A.field, A.n
    p = F.p
    rng = np.random.default_rng(seed)
    c = np.array(A.c, dtype=np.int64)
    S = (c + c.transpose(1, 0, 2)) % p
    basis = np.array([d.flat() for d in space.basis], dtype=np.int64).reshape(-1, n * n)
    rand = rng.integers(0, p, size=(samples, n * n))
    if len(basis):
        inside = rng.integers(0, p, size=(samples, len(basis))) @ basis % p
        rand = np.concatenate([rand, inside])
    ok = _lie_identity_ok(rand.reshape(-1, n, n), S, p)
    mism = 0
    for flat, good in zip(rand, ok):
        member = tuple(int(v) for v in flat) in space.space
        mism += member != bool(good)
    return mism
