"""Exact linear algebra over prime fields F_q.

Matrices are plain numpy integer arrays with entries reduced mod q; the
modulus travels alongside as an explicit argument.  Subspaces of F_q^t are
canonicalized by their reduced row-echelon basis, so two equal subspaces are
structurally equal and hashable.

All arithmetic is exact: field operations use Python integer inverses
(q prime) and combinatorial counts use arbitrary-precision integers.
"""

from __future__ import annotations

import itertools
from functools import lru_cache

import numpy as np

from . import budget
from .errors import DimensionMismatchError


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


def check_prime(q: int) -> int:
    if not is_prime(q):
        raise ValueError(f"field modulus must be prime, got {q}")
    return q


def as_matrix(entries, q: int) -> np.ndarray:
    """Coerce to a 2-d int64 array with entries reduced mod q."""
    M = np.asarray(entries, dtype=np.int64)
    if M.ndim != 2:
        raise DimensionMismatchError(f"expected a 2-d matrix, got ndim={M.ndim}")
    return M % q


def mat_mul(A: np.ndarray, B: np.ndarray, q: int) -> np.ndarray:
    return (A @ B) % q


def rref(M, q: int):
    """Reduced row-echelon form over F_q.

    Returns ``(R, rank, pivots)`` where R is the unique RREF of M, rank is
    the number of nonzero rows and pivots lists the pivot column indices.
    """
    R = as_matrix(M, q).copy()
    n_rows, n_cols = R.shape
    pivots: list[int] = []
    r = 0
    for c in range(n_cols):
        if r == n_rows:
            break
        pivot_row = -1
        for i in range(r, n_rows):
            if R[i, c] != 0:
                pivot_row = i
                break
        if pivot_row == -1:
            continue
        if pivot_row != r:
            R[[r, pivot_row]] = R[[pivot_row, r]]
        inv = pow(int(R[r, c]), q - 2, q) if q > 2 else 1
        if inv != 1:
            R[r] = (R[r] * inv) % q
        for i in range(n_rows):
            if i != r and R[i, c] != 0:
                R[i] = (R[i] - R[i, c] * R[r]) % q
        pivots.append(c)
        r += 1
    return R, len(pivots), pivots


def matrix_rank(M, q: int) -> int:
    return rref(M, q)[1]


def inverse(M, q: int) -> np.ndarray:
    """Inverse of a square matrix over F_q; raises on singular input."""
    M = as_matrix(M, q)
    n = M.shape[0]
    if M.shape[1] != n:
        raise DimensionMismatchError("inverse needs a square matrix")
    aug = np.concatenate([M, np.eye(n, dtype=np.int64)], axis=1)
    R, rank, _ = rref(aug, q)
    if rank < n or not np.array_equal(R[:, :n], np.eye(n, dtype=np.int64)):
        raise ValueError("matrix is singular over F_q")
    return R[:, n:]


class Subspace:
    """A canonical subspace of F_q^t.

    The basis is stored in reduced row-echelon form with no zero rows, so
    equality and hashing are structural.  Instances are immutable.
    """

    __slots__ = ("q", "ambient", "basis")

    def __init__(self, q: int, ambient: int, basis: np.ndarray):
        # Trusted constructor: basis must already be canonical (RREF, no
        # zero rows).  Use from_rows() for arbitrary spanning sets.
        object.__setattr__(self, "q", q)
        object.__setattr__(self, "ambient", ambient)
        b = np.ascontiguousarray(basis, dtype=np.int64)
        b.setflags(write=False)
        object.__setattr__(self, "basis", b)

    def __setattr__(self, name, value):
        raise AttributeError("Subspace is immutable")

    @classmethod
    def from_rows(cls, rows, q: int, ambient: int | None = None) -> "Subspace":
        M = np.asarray(rows, dtype=np.int64)
        if M.ndim == 1:
            M = M.reshape(1, -1)
        if M.size == 0:
            if ambient is None:
                raise DimensionMismatchError("ambient required for an empty spanning set")
            return cls.zero(q, ambient)
        if ambient is None:
            ambient = M.shape[1]
        elif ambient != M.shape[1]:
            raise DimensionMismatchError(f"rows have length {M.shape[1]}, ambient is {ambient}")
        R, rank, _ = rref(M, q)
        return cls(q, ambient, R[:rank])

    @classmethod
    def zero(cls, q: int, ambient: int) -> "Subspace":
        return cls(q, ambient, np.zeros((0, ambient), dtype=np.int64))

    @classmethod
    def full(cls, q: int, ambient: int) -> "Subspace":
        return cls(q, ambient, np.eye(ambient, dtype=np.int64))

    @property
    def dim(self) -> int:
        return self.basis.shape[0]

    def sort_key(self):
        return (self.dim, self.basis.tobytes())

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Subspace)
            and self.q == other.q
            and self.ambient == other.ambient
            and self.basis.shape == other.basis.shape
            and np.array_equal(self.basis, other.basis)
        )

    def __hash__(self) -> int:
        return hash((self.q, self.ambient, self.basis.tobytes()))

    def __repr__(self) -> str:
        rows = [list(map(int, row)) for row in self.basis]
        return f"Subspace(q={self.q}, ambient={self.ambient}, basis={rows})"


def _check_compatible(S: Subspace, T: Subspace) -> None:
    if S.q != T.q or S.ambient != T.ambient:
        raise DimensionMismatchError(
            f"subspaces live in different spaces: F_{S.q}^{S.ambient} vs F_{T.q}^{T.ambient}"
        )


def reduce_against(v: np.ndarray, S: Subspace) -> np.ndarray:
    """Reduce a row vector modulo the (RREF) basis of S."""
    w = v % S.q
    basis = S.basis
    for r in range(basis.shape[0]):
        c = int(np.argmax(basis[r] != 0)) if basis[r].any() else -1
        if c >= 0 and w[c] != 0:
            w = (w - w[c] * basis[r]) % S.q
    return w


def contains(S: Subspace, T: Subspace) -> bool:
    """True iff T is a subspace of S."""
    _check_compatible(S, T)
    if T.dim > S.dim:
        return False
    for row in T.basis:
        if reduce_against(row, S).any():
            return False
    return True


def subspace_sum(S: Subspace, T: Subspace) -> Subspace:
    _check_compatible(S, T)
    stacked = np.concatenate([S.basis, T.basis], axis=0)
    return Subspace.from_rows(stacked, S.q, S.ambient)


def row_kernel(M, q: int) -> Subspace:
    """Kernel of the row action v -> v M, as a subspace of F_q^rows(M)."""
    M = as_matrix(M, q)
    n_rows = M.shape[0]
    R, rank, pivots = rref(M.T, q)
    # Solve x M = 0  <=>  M^T x^T = 0: free variables give a kernel basis.
    free = [c for c in range(n_rows) if c not in pivots]
    rows = []
    for f in free:
        v = np.zeros(n_rows, dtype=np.int64)
        v[f] = 1
        for r, p in enumerate(pivots):
            v[p] = (-R[r, f]) % q
        rows.append(v)
    if not rows:
        return Subspace.zero(q, n_rows)
    return Subspace.from_rows(np.array(rows, dtype=np.int64), q, n_rows)


def intersect(S: Subspace, T: Subspace) -> Subspace:
    _check_compatible(S, T)
    if S.dim == 0 or T.dim == 0:
        return Subspace.zero(S.q, S.ambient)
    stacked = np.concatenate([S.basis, T.basis], axis=0)
    ker = row_kernel(stacked, S.q)
    if ker.dim == 0:
        return Subspace.zero(S.q, S.ambient)
    coeffs = ker.basis[:, : S.dim]
    rows = mat_mul(coeffs, S.basis, S.q)
    return Subspace.from_rows(rows, S.q, S.ambient)


def orthogonal(S: Subspace) -> Subspace:
    """Orthogonal complement under the standard dot product on F_q^t."""
    if S.dim == 0:
        return Subspace.full(S.q, S.ambient)
    return row_kernel(S.basis.T, S.q)


def gaussian_binomial(t: int, i: int, q: int) -> int:
    """Number of i-dimensional subspaces of F_q^t, exactly."""
    if i < 0 or i > t:
        return 0
    num = 1
    den = 1
    for j in range(i):
        num *= q ** (t - j) - 1
        den *= q ** (j + 1) - 1
    return num // den


def cauchy_identities_check(t: int, q: int) -> bool:
    """Check the two exact q-binomial sum identities for the given t, q.

    Alternating:  sum_{i=0}^{t-1} (-1)^i q^binom(i,2) C(t,i)_q = (-1)^(t-1) q^binom(t,2)
    Plain:        sum_{i=0}^{t}   q^binom(i,2) C(t,i)_q = prod_{i=0}^{t-1} (1 + q^i)
    """
    if t < 1:
        raise ValueError("t must be at least 1")

    def binom2(i: int) -> int:
        return i * (i - 1) // 2

    alternating = sum(
        (-1) ** i * q ** binom2(i) * gaussian_binomial(t, i, q) for i in range(t)
    )
    if alternating != (-1) ** (t - 1) * q ** binom2(t):
        return False
    plain = sum(q ** binom2(i) * gaussian_binomial(t, i, q) for i in range(t + 1))
    product = 1
    for i in range(t):
        product *= 1 + q**i
    return plain == product


def count_subspaces_containing(X: Subspace, i: int) -> int:
    """Number of i-dimensional subspaces of the ambient space containing X."""
    p = X.dim
    t = X.ambient
    if not p <= i <= t:
        raise DimensionMismatchError(f"need dim(X)={p} <= i={i} <= ambient={t}")
    return gaussian_binomial(t - p, i - p, X.q)


@lru_cache(maxsize=None)
def enumerate_subspaces(q: int, t: int, d: int) -> tuple[Subspace, ...]:
    """All d-dimensional subspaces of F_q^t, canonical and sorted."""
    if not 0 <= d <= t:
        raise DimensionMismatchError(f"need 0 <= d={d} <= t={t}")
    count = gaussian_binomial(t, d, q)
    budget.check_subspaces(count)
    budget.check_vectors(q**t * count)
    if d == 0:
        return (Subspace.zero(q, t),)
    out = []
    for pivots in itertools.combinations(range(t), d):
        pivot_set = set(pivots)
        free_positions = [
            (r, c)
            for r in range(d)
            for c in range(pivots[r] + 1, t)
            if c not in pivot_set
        ]
        base = np.zeros((d, t), dtype=np.int64)
        for r, c in enumerate(pivots):
            base[r, c] = 1
        for values in itertools.product(range(q), repeat=len(free_positions)):
            M = base.copy()
            for (r, c), v in zip(free_positions, values):
                M[r, c] = v
            out.append(Subspace(q, t, M))
    out.sort(key=Subspace.sort_key)
    assert len(out) == count
    return tuple(out)


@lru_cache(maxsize=None)
def subspaces_up_to_dim(q: int, t: int, max_dim: int) -> tuple[Subspace, ...]:
    """All subspaces of F_q^t of dimension <= max_dim, sorted canonically."""
    out: list[Subspace] = []
    for d in range(min(max_dim, t) + 1):
        out.extend(enumerate_subspaces(q, t, d))
    return tuple(out)
