"""Dense linear algebra over a prime field F_p.

Matrices are plain numpy int64 arrays with entries already reduced mod p.
Every function takes the prime explicitly. Subspaces of F_p^d are stored as
d x k matrices whose columns form a basis; :func:`canonical_basis` brings
such a matrix into a unique form so subspaces can be compared and hashed.
"""

from itertools import combinations, product
from typing import List, Optional, Sequence, Tuple

import numpy as np

from .errors import CapExceeded

SUBSPACE_CAP = 2 ** 12


def matrix(rows, p: int) -> np.ndarray:
    """Build a reduced int64 matrix from nested lists."""
    m = np.array(rows, dtype=np.int64)
    if m.ndim == 1:
        m = m.reshape(1, -1) if m.size else m.reshape(0, 0)
    return m % p


def zeros(r: int, c: int) -> np.ndarray:
    return np.zeros((r, c), dtype=np.int64)


def identity(n: int) -> np.ndarray:
    return np.eye(n, dtype=np.int64)


def mul(a: np.ndarray, b: np.ndarray, p: int) -> np.ndarray:
    return (a @ b) % p


def rref(m: np.ndarray, p: int) -> Tuple[np.ndarray, List[int]]:
    """Reduced row echelon form and the list of pivot columns."""
    a = np.array(m, dtype=np.int64) % p
    rows, cols = a.shape
    pivots = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        nz = np.nonzero(a[r:, c])[0]
        if nz.size == 0:
            continue
        k = r + nz[0]
        if k != r:
            a[[r, k]] = a[[k, r]]
        a[r] = (a[r] * pow(int(a[r, c]), p - 2, p)) % p
        col = a[:, c].copy()
        col[r] = 0
        hit = np.nonzero(col)[0]
        if hit.size:
            a[hit] = (a[hit] - np.outer(col[hit], a[r])) % p
        pivots.append(c)
        r += 1
    return a, pivots


def rank(m: np.ndarray, p: int) -> int:
    if m.size == 0:
        return 0
    return len(rref(m, p)[1])


def kernel_basis(m: np.ndarray, p: int) -> List[np.ndarray]:
    """Basis vectors of the null space {x : m x = 0}."""
    cols = m.shape[1]
    r, pivots = rref(m, p)
    free = [c for c in range(cols) if c not in set(pivots)]
    basis = []
    for f in free:
        v = np.zeros(cols, dtype=np.int64)
        v[f] = 1
        for i, pc in enumerate(pivots):
            v[pc] = (-r[i, f]) % p
        basis.append(v)
    return basis


def kernel_matrix(m: np.ndarray, p: int) -> np.ndarray:
    """Kernel basis stacked as columns."""
    ker = kernel_basis(m, p)
    if not ker:
        return zeros(m.shape[1], 0)
    return np.stack(ker, axis=1)


def canonical_basis(m: np.ndarray, p: int) -> np.ndarray:
    """Canonical column basis of the column space of ``m``."""
    if m.shape[1] == 0:
        return zeros(m.shape[0], 0)
    r, pivots = rref(m.T, p)
    return np.ascontiguousarray(r[: len(pivots)].T)


def image_basis(m: np.ndarray, p: int) -> np.ndarray:
    return canonical_basis(m, p)


def subspace_key(basis: np.ndarray, p: int) -> Tuple[int, bytes]:
    c = canonical_basis(basis, p)
    return c.shape[0], c.T.tobytes()


def subspace_sum(bases: Sequence[np.ndarray], p: int) -> np.ndarray:
    return canonical_basis(np.hstack(list(bases)), p)


def subspace_eq(a: np.ndarray, b: np.ndarray, p: int) -> bool:
    return subspace_key(a, p) == subspace_key(b, p)


def contains(space: np.ndarray, vectors: np.ndarray, p: int) -> bool:
    """Whether every column of ``vectors`` lies in the column space of ``space``."""
    if vectors.shape[1] == 0:
        return True
    return rank(np.hstack([space, vectors]), p) == rank(space, p)


def solve(m: np.ndarray, b: np.ndarray, p: int) -> Optional[np.ndarray]:
    """One solution x of m x = b, or None if the system is inconsistent."""
    b = np.asarray(b, dtype=np.int64).reshape(-1) % p
    rows, cols = m.shape
    aug = np.hstack([m % p, b.reshape(-1, 1)])
    r, pivots = rref(aug, p)
    if pivots and pivots[-1] == cols:
        return None
    x = np.zeros(cols, dtype=np.int64)
    for i, pc in enumerate(pivots):
        x[pc] = r[i, cols]
    return x


def solve_matrix(m: np.ndarray, b: np.ndarray, p: int) -> Optional[np.ndarray]:
    """Solve m X = B column by column."""
    out = zeros(m.shape[1], b.shape[1])
    for j in range(b.shape[1]):
        x = solve(m, b[:, j], p)
        if x is None:
            return None
        out[:, j] = x
    return out


def invert(m: np.ndarray, p: int) -> np.ndarray:
    n = m.shape[0]
    if m.shape != (n, n):
        raise ValueError("only square matrices are invertible")
    r, pivots = rref(np.hstack([m % p, identity(n)]), p)
    if pivots[:n] != list(range(n)):
        raise ValueError("matrix is singular")
    return np.ascontiguousarray(r[:, n:])


def is_invertible(m: np.ndarray, p: int) -> bool:
    return m.shape[0] == m.shape[1] and rank(m, p) == m.shape[0]


def complete_basis(basis: np.ndarray, p: int) -> np.ndarray:
    """Standard basis columns that extend ``basis`` to the whole space."""
    d = basis.shape[0]
    _, pivots = rref(basis.T, p) if basis.shape[1] else (None, [])
    chosen = [c for c in range(d) if c not in set(pivots)]
    return identity(d)[:, chosen]


def left_inverse(basis: np.ndarray, p: int) -> np.ndarray:
    """Matrix L with L @ basis = I for a full column rank ``basis``."""
    full = np.hstack([basis, complete_basis(basis, p)])
    return invert(full, p)[: basis.shape[1]]


def enumerate_subspaces(d: int, p: int, cap: int = SUBSPACE_CAP) -> List[np.ndarray]:
    """All subspaces of F_p^d as canonical column bases.

    Ordered by dimension, then pivot pattern, then free entries.
    """
    if p ** d > cap:
        raise CapExceeded(f"{p}^{d} exceeds subspace cap {cap}")
    out = []
    for k in range(d + 1):
        for pivots in combinations(range(d), k):
            # free slots: row i may be nonzero in non-pivot columns after its pivot
            slots = [(i, c) for i, pc in enumerate(pivots) for c in range(pc + 1, d) if c not in pivots]
            for values in product(range(p), repeat=len(slots)):
                rows = zeros(k, d)
                for i, pc in enumerate(pivots):
                    rows[i, pc] = 1
                for (i, c), v in zip(slots, values):
                    rows[i, c] = v
                out.append(np.ascontiguousarray(rows.T))
    return out


def all_vectors(coeff_count: int, p: int):
    """Every coefficient vector in F_p^n, zero first."""
    for values in product(range(p), repeat=coeff_count):
        yield np.array(values, dtype=np.int64)
