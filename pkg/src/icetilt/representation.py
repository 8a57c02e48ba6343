"""Representations of a bound quiver and the linear algebra of their morphisms.

A representation stores one dimension per vertex and, for every arrow
``a: i -> j``, a matrix of shape ``(dims[j], dims[i])``. A morphism
``f: M -> N`` is a tuple of per-vertex matrices ``f[v]`` of shape
``(N.dims[v], M.dims[v])``.
"""

from typing import List, Sequence, Tuple

import numpy as np

from . import ffla

Morphism = Tuple[np.ndarray, ...]


class Representation:
    __slots__ = ("algebra", "dims", "maps")

    def __init__(self, algebra, dims: Sequence[int], maps: Sequence[np.ndarray]):
        self.algebra = algebra
        self.dims = tuple(int(d) for d in dims)
        quiver = algebra.quiver
        if len(self.dims) != quiver.n or len(maps) != len(quiver.arrows):
            raise ValueError("representation does not match the quiver")
        fixed = []
        for arrow, m in zip(quiver.arrows, maps):
            m = np.asarray(m, dtype=np.int64).reshape(self.dims[arrow.target], self.dims[arrow.source])
            fixed.append(m % algebra.p)
        self.maps = tuple(fixed)

    @property
    def p(self) -> int:
        return self.algebra.p

    @property
    def dim_vector(self) -> Tuple[int, ...]:
        return self.dims

    @property
    def total_dim(self) -> int:
        return sum(self.dims)

    def is_zero(self) -> bool:
        return self.total_dim == 0

    def path_map(self, path: Sequence[int], start: int) -> np.ndarray:
        """Matrix of a path (arrow indices, first arrow first) starting at ``start``."""
        out = ffla.identity(self.dims[start])
        for a in path:
            out = ffla.mul(self.maps[a], out, self.p)
        return out

    def relations_hold(self) -> bool:
        for rel in self.algebra.relations:
            src, tgt = rel.source, rel.target
            total = ffla.zeros(self.dims[tgt], self.dims[src])
            for coeff, path in rel.terms:
                total = (total + coeff * self.path_map(path, src)) % self.p
            if total.any():
                return False
        return True

    def to_dict(self) -> dict:
        q = self.algebra.quiver
        return {
            "dims": {q.vertices[v]: d for v, d in enumerate(self.dims)},
            "maps": {a.name: m.tolist() for a, m in zip(q.arrows, self.maps)},
        }

    @classmethod
    def from_dict(cls, algebra, data: dict) -> "Representation":
        q = algebra.quiver
        try:
            dims = [int(data["dims"][v]) for v in q.vertices]
            maps = []
            for a in q.arrows:
                rows = data["maps"].get(a.name)
                shape = (dims[a.target], dims[a.source])
                m = np.zeros(shape, dtype=np.int64) if rows is None or 0 in shape else np.array(rows, dtype=np.int64)
                maps.append(m.reshape(shape))
        except (KeyError, TypeError, ValueError) as exc:
            raise ValueError(f"malformed representation: {exc}") from exc
        return cls(algebra, dims, maps)

    def __repr__(self):
        return f"Representation(dims={self.dims})"


def zero_morphism(m: Representation, n: Representation) -> Morphism:
    return tuple(ffla.zeros(n.dims[v], m.dims[v]) for v in range(len(m.dims)))


def identity_morphism(m: Representation) -> Morphism:
    return tuple(ffla.identity(d) for d in m.dims)


def compose(g: Morphism, f: Morphism, p: int) -> Morphism:
    """g after f."""
    return tuple(ffla.mul(gv, fv, p) for gv, fv in zip(g, f))


def add_morphisms(f: Morphism, g: Morphism, p: int) -> Morphism:
    return tuple((a + b) % p for a, b in zip(f, g))


def scale_morphism(c: int, f: Morphism, p: int) -> Morphism:
    return tuple((c * a) % p for a in f)


def linear_combination(coeffs, basis: Sequence[Morphism], zero: Morphism, p: int) -> Morphism:
    out = [z.copy() for z in zero]
    for c, f in zip(coeffs, basis):
        if c:
            for v in range(len(out)):
                out[v] = (out[v] + int(c) * f[v]) % p
    return tuple(out)


def flatten(f: Morphism) -> np.ndarray:
    parts = [fv.reshape(-1) for fv in f]
    return np.concatenate(parts) if parts else np.zeros(0, dtype=np.int64)


def is_zero_morphism(f: Morphism) -> bool:
    return not any(fv.any() for fv in f)


def is_morphism(f: Morphism, m: Representation, n: Representation) -> bool:
    p = m.p
    for arrow, ma, na in zip(m.algebra.quiver.arrows, m.maps, n.maps):
        lhs = ffla.mul(f[arrow.target], ma, p)
        rhs = ffla.mul(na, f[arrow.source], p)
        if not np.array_equal(lhs, rhs):
            return False
    return True


def hom_basis(m: Representation, n: Representation) -> List[Morphism]:
    """Basis of Hom(m, n) from the intertwiner equations f_j M_a = N_a f_i."""
    p = m.p
    nv = len(m.dims)
    offsets = [0]
    for v in range(nv):
        offsets.append(offsets[-1] + n.dims[v] * m.dims[v])
    unknowns = offsets[-1]
    if unknowns == 0:
        return []
    blocks = []
    for arrow, ma, na in zip(m.algebra.quiver.arrows, m.maps, n.maps):
        i, j = arrow.source, arrow.target
        rows = n.dims[j] * m.dims[i]
        if rows == 0:
            continue
        eq = ffla.zeros(rows, unknowns)
        # vec_row(f_j M_a) = (I kron M_a^T) vec_row(f_j)
        eq[:, offsets[j]:offsets[j + 1]] += np.kron(ffla.identity(n.dims[j]), ma.T)
        eq[:, offsets[i]:offsets[i + 1]] -= np.kron(na, ffla.identity(m.dims[i]))
        blocks.append(eq % p)
    if blocks:
        ker = ffla.kernel_basis(np.vstack(blocks), p)
    else:
        ker = [row for row in ffla.identity(unknowns)]
    out = []
    for vec in ker:
        out.append(tuple(vec[offsets[v]:offsets[v + 1]].reshape(n.dims[v], m.dims[v]) for v in range(nv)))
    return out


def hom_dim(m: Representation, n: Representation) -> int:
    return len(hom_basis(m, n))


def submodule(m: Representation, bases: Sequence[np.ndarray]) -> Tuple[Representation, Morphism]:
    """Restrict ``m`` to arrow-stable subspaces given by column bases."""
    p = m.p
    bases = [ffla.canonical_basis(b, p) for b in bases]
    lefts = [ffla.left_inverse(b, p) for b in bases]
    maps = []
    for arrow, ma in zip(m.algebra.quiver.arrows, m.maps):
        maps.append(ffla.mul(lefts[arrow.target], ffla.mul(ma, bases[arrow.source], p), p))
    sub = Representation(m.algebra, [b.shape[1] for b in bases], maps)
    return sub, tuple(bases)


def quotient(m: Representation, bases: Sequence[np.ndarray]) -> Tuple[Representation, Morphism]:
    """Quotient of ``m`` by arrow-stable subspaces, on complement coordinates."""
    p = m.p
    comps, projs = [], []
    for b in bases:
        b = ffla.canonical_basis(b, p)
        comp = ffla.complete_basis(b, p)
        full_inv = ffla.invert(np.hstack([b, comp]), p)
        comps.append(comp)
        projs.append(np.ascontiguousarray(full_inv[b.shape[1]:]))
    maps = []
    for arrow, ma in zip(m.algebra.quiver.arrows, m.maps):
        maps.append(ffla.mul(projs[arrow.target], ffla.mul(ma, comps[arrow.source], p), p))
    quo = Representation(m.algebra, [c.shape[1] for c in comps], maps)
    return quo, tuple(projs)


def kernel(f: Morphism, source: Representation) -> Tuple[Representation, Morphism]:
    return submodule(source, [ffla.kernel_matrix(fv, source.p) for fv in f])


def image_bases(f: Morphism, p: int) -> List[np.ndarray]:
    return [ffla.canonical_basis(fv, p) for fv in f]


def image(f: Morphism, target: Representation) -> Tuple[Representation, Morphism]:
    return submodule(target, image_bases(f, target.p))


def cokernel(f: Morphism, target: Representation) -> Tuple[Representation, Morphism]:
    return quotient(target, image_bases(f, target.p))


def is_injective(f: Morphism, p: int) -> bool:
    return all(ffla.rank(fv, p) == fv.shape[1] for fv in f)


def is_surjective(f: Morphism, target: Representation) -> bool:
    return all(ffla.rank(fv, target.p) == fv.shape[0] for fv in f)


def is_isomorphism(f: Morphism, p: int) -> bool:
    return all(fv.shape[0] == fv.shape[1] and ffla.rank(fv, p) == fv.shape[0] for fv in f)


def direct_sum(mods: Sequence[Representation], algebra=None):
    """Direct sum with inclusions and projections into/out of each summand."""
    if not mods:
        if algebra is None:
            raise ValueError("empty direct sum needs the algebra")
        zero = Representation(algebra, [0] * algebra.quiver.n, [ffla.zeros(0, 0)] * len(algebra.quiver.arrows))
        return zero, [], []
    algebra = mods[0].algebra
    nv = algebra.quiver.n
    dims = [sum(m.dims[v] for m in mods) for v in range(nv)]
    maps = []
    for k, arrow in enumerate(algebra.quiver.arrows):
        block = ffla.zeros(dims[arrow.target], dims[arrow.source])
        r = c = 0
        for m in mods:
            mk = m.maps[k]
            block[r:r + mk.shape[0], c:c + mk.shape[1]] = mk
            r += mk.shape[0]
            c += mk.shape[1]
        maps.append(block)
    total = Representation(algebra, dims, maps)
    incls, projs = [], []
    offs = [0] * nv
    for m in mods:
        inc, pro = [], []
        for v in range(nv):
            e = ffla.zeros(dims[v], m.dims[v])
            e[offs[v]:offs[v] + m.dims[v], :] = ffla.identity(m.dims[v])
            inc.append(e)
            pro.append(np.ascontiguousarray(e.T))
            offs[v] += m.dims[v]
        incls.append(tuple(inc))
        projs.append(tuple(pro))
    return total, incls, projs


def radical_bases(m: Representation) -> List[np.ndarray]:
    """rad M at each vertex: the span of all arrow images landing there."""
    return radical_of(m, [ffla.identity(d) for d in m.dims])


def radical_of(m: Representation, bases: Sequence[np.ndarray]) -> List[np.ndarray]:
    """Radical of the submodule spanned by ``bases``: sum of arrow images of it."""
    p = m.p
    parts = [[ffla.zeros(d, 0)] for d in m.dims]
    for arrow, ma in zip(m.algebra.quiver.arrows, m.maps):
        parts[arrow.target].append(ffla.mul(ma, bases[arrow.source], p))
    return [ffla.canonical_basis(np.hstack(ps), p) for ps in parts]


def loewy_layers(m: Representation) -> List[Tuple[int, ...]]:
    """Dimension vectors of the radical layers, top first."""
    layers = []
    current = [ffla.identity(d) for d in m.dims]
    while any(b.shape[1] for b in current):
        below = radical_of(m, current)
        layers.append(tuple(c.shape[1] - b.shape[1] for c, b in zip(current, below)))
        if all(c.shape[1] == b.shape[1] for c, b in zip(current, below)):
            break
        current = below
    return layers


def top_complement(m: Representation) -> List[np.ndarray]:
    """Column bases at each vertex of a complement to the radical."""
    rad = radical_bases(m)
    return [ffla.complete_basis(r, m.p) for r in rad]
