"""The module-category engine.

Everything here works on :class:`Representation` objects of one bound quiver
algebra. The central product is :class:`IndecTable`: the indecomposable
modules (up to isomorphism, within a per-vertex dimension bound) together with
Hom and Ext dimensions, the decomposed submodule/quotient pairs of every
indecomposable and the decomposed middle terms of extensions between them.

A module expression (``ModuleExpr``) is a sorted tuple of table indices with
repetition, so ``(0, 2, 2)`` means ``I_0 + I_2 + I_2``.
"""

import json
import warnings
from collections import Counter
from itertools import product
from typing import Dict, Iterable, List, Optional, Sequence, Set, Tuple

import numpy as np

from . import ffla
from .errors import CapExceeded, IncompleteBound, IncompleteTable, UnknownSummand
from .representation import (
    Morphism, Representation, compose, direct_sum, flatten, hom_basis, identity_morphism,
    is_injective, is_isomorphism, kernel, linear_combination, loewy_layers, quotient,
    submodule, zero_morphism,
)

ModuleExpr = Tuple[int, ...]

ISO_CAP = 2 ** 20
SUBMODULE_CAP = 2 ** 16
BRUTE_CAP = 2 ** 22

__all__ = [
    "IndecTable", "build_table", "decompose", "enumerate_submodules", "ext1_dim",
    "ext_middle_terms", "hom_basis", "is_isomorphic", "kernel", "minimal_left_approximation",
    "trace", "load_override",
]


# isomorphism and indecomposability

def _hom_against_simples(m: Representation) -> Tuple[int, ...]:
    alg = m.algebra
    return tuple(len(hom_basis(m, alg.simple(v))) for v in range(alg.quiver.n))


def is_isomorphic(m: Representation, n: Representation, cap: int = ISO_CAP) -> bool:
    """Exhaustive search for an invertible element of Hom(m, n)."""
    if m.dims != n.dims:
        return False
    if m.total_dim == 0:
        return True
    if _hom_against_simples(m) != _hom_against_simples(n):
        return False
    basis = hom_basis(m, n)
    p = m.p
    if p ** len(basis) > cap:
        raise CapExceeded(f"Hom space of size {p}^{len(basis)} exceeds iso cap {cap}")
    for f in basis:
        if is_isomorphism(f, p):
            return True
    zero = zero_morphism(m, n)
    for coeffs in ffla.all_vectors(len(basis), p):
        if np.count_nonzero(coeffs) < 2:
            continue
        if is_isomorphism(linear_combination(coeffs, basis, zero, p), p):
            return True
    return False


def _local_iso(m: Representation, n: Representation) -> bool:
    """Isomorphism test for modules known to have local endomorphism rings.

    Non-units of a local ring form an ideal, so some g f is a unit for
    f, g ranging over Hom bases exactly when m and n are isomorphic.
    """
    if m.dims != n.dims:
        return False
    p = m.p
    fs = hom_basis(m, n)
    if not fs:
        return False
    gs = hom_basis(n, m)
    return any(is_isomorphism(compose(g, f, p), p) for f in fs for g in gs)


def split_off(m: Representation, ind: Representation) -> Optional[Representation]:
    """If the indecomposable ``ind`` is a summand of ``m``, return a complement."""
    if any(a > b for a, b in zip(ind.dims, m.dims)):
        return None
    p = m.p
    outs = hom_basis(m, ind)
    if not outs:
        return None
    ins = hom_basis(ind, m)
    for s in ins:
        for q in outs:
            e = compose(q, s, p)
            if is_isomorphism(e, p):
                inv = tuple(ffla.invert(ev, p) for ev in e)
                retraction = compose(inv, q, p)
                return kernel(retraction, m)[0]
    return None


def is_indecomposable_exhaustive(m: Representation, cap: int = ISO_CAP) -> bool:
    """No idempotent endomorphism other than 0 and 1, by enumerating End(m)."""
    if m.total_dim == 0:
        return False
    p = m.p
    basis = hom_basis(m, m)
    if p ** len(basis) > cap:
        raise CapExceeded(f"End space of size {p}^{len(basis)} exceeds cap {cap}")
    zero = zero_morphism(m, m)
    ident = identity_morphism(m)
    for coeffs in ffla.all_vectors(len(basis), p):
        e = linear_combination(coeffs, basis, zero, p)
        if all(not ev.any() for ev in e) or all(np.array_equal(a, b) for a, b in zip(e, ident)):
            continue
        if all(np.array_equal(ffla.mul(ev, ev, p), ev) for ev in e):
            return False
    return True


def is_division_ring(m: Representation, cap: int = ISO_CAP) -> bool:
    """Every nonzero endomorphism is invertible (m is a brick)."""
    p = m.p
    basis = hom_basis(m, m)
    if p ** len(basis) > cap:
        raise CapExceeded(f"End space of size {p}^{len(basis)} exceeds cap {cap}")
    zero = zero_morphism(m, m)
    for coeffs in ffla.all_vectors(len(basis), p):
        if not coeffs.any():
            continue
        if not is_isomorphism(linear_combination(coeffs, basis, zero, p), p):
            return False
    return True


# submodules

def enumerate_submodules(m: Representation, cap: int = SUBMODULE_CAP):
    """All submodules as (bases, submodule, quotient) triples."""
    p = m.p
    per_vertex = [ffla.enumerate_subspaces(d, p) for d in m.dims]
    size = 1
    for opts in per_vertex:
        size *= len(opts)
    if size > cap:
        raise CapExceeded(f"{size} subspace tuples exceed submodule cap {cap}")
    arrows = m.algebra.quiver.arrows
    n = len(m.dims)
    checks = [[] for _ in range(n)]  # arrows whose later endpoint is v
    for k, a in enumerate(arrows):
        checks[max(a.source, a.target)].append(k)
    out = []
    chosen = [None] * n

    def stable(k):
        a = arrows[k]
        img = ffla.mul(m.maps[k], chosen[a.source], p)
        return ffla.contains(chosen[a.target], img, p)

    def walk(v):
        if v == n:
            bases = list(chosen)
            out.append((bases, submodule(m, bases)[0], quotient(m, bases)[0]))
            return
        for basis in per_vertex[v]:
            chosen[v] = basis
            if all(stable(k) for k in checks[v]):
                walk(v + 1)
        chosen[v] = None

    walk(0)
    return out


# projective presentations and extensions

class Presentation:
    """0 -> syzygy -> cover -> module -> 0 from the projective cover."""

    def __init__(self, module: Representation):
        self.module = module
        self.cover, self.pi = module.algebra.projective_cover(module)
        self.syzygy, self.iota = kernel(self.pi, self.cover)


def ext_class_basis(pres: Presentation, target: Representation) -> List[Morphism]:
    """Maps syzygy -> target whose classes form a basis of Ext^1(module, target).

    The classes are the cokernel of restriction Hom(cover, target) -> Hom(syzygy, target).
    """
    p = target.p
    hs = hom_basis(pres.syzygy, target)
    if not hs:
        return []
    restricted = [flatten(compose(phi, pres.iota, p)) for phi in hom_basis(pres.cover, target)]
    span = np.array(restricted, dtype=np.int64).reshape(-1, len(flatten(hs[0]))).T
    current = ffla.rank(span, p) if span.size else 0
    chosen = []
    for h in hs:
        trial = np.hstack([span, flatten(h).reshape(-1, 1)])
        r = ffla.rank(trial, p)
        if r > current:
            span, current = trial, r
            chosen.append(h)
    return chosen


def ext1_dim(n: Representation, l: Representation) -> int:
    """dim Ext^1(n, l)."""
    return len(ext_class_basis(Presentation(n), l))


def _stack_rows(blocks: Sequence[np.ndarray], rows: int) -> np.ndarray:
    return np.vstack(blocks) if blocks else ffla.zeros(0, rows)


def pushout_middle(l: Representation, parts: Sequence[Tuple[Presentation, Morphism]]) -> Representation:
    """Middle term of the extension of sum(parts' modules) by ``l``.

    Each part is a presentation with a map phi: syzygy -> l; the middle term
    is (l + cover) / {(phi(x), -iota(x))}.
    """
    p = l.p
    covers = [pres.cover for pres, _ in parts]
    total, _, _ = direct_sum([l] + covers)
    nv = len(l.dims)
    bases = []
    for v in range(nv):
        cols = []
        row_off = l.dims[v]
        cover_rows = sum(c.dims[v] for c in covers)
        for (pres, phi), cov in zip(parts, covers):
            k = pres.syzygy.dims[v]
            if k == 0:
                row_off += cov.dims[v]
                continue
            block = ffla.zeros(l.dims[v] + cover_rows, k)
            block[: l.dims[v], :] = phi[v]
            block[row_off:row_off + cov.dims[v], :] = (-pres.iota[v]) % p
            cols.append(block)
            row_off += cov.dims[v]
        bases.append(np.hstack(cols) if cols else ffla.zeros(total.dims[v], 0))
    return quotient(total, bases)[0]


def _projective_points(dim: int, p: int):
    """Zero plus one representative of every line of F_p^dim."""
    yield np.zeros(dim, dtype=np.int64)
    for vec in ffla.all_vectors(dim, p):
        nz = np.nonzero(vec)[0]
        if nz.size and vec[nz[0]] == 1:
            yield vec


# naming

def loewy_name(m: Representation) -> str:
    names = m.algebra.quiver.vertices
    sep = "" if all(len(v) == 1 for v in names) else ","
    words = []
    for layer in loewy_layers(m):
        words.append(sep.join(names[v] for v, d in enumerate(layer) for _ in range(d)))
    return "/".join(words) if words else "0"


# the table

class IndecTable:
    """Indecomposables with Hom/Ext data and decomposed sub/quotient/extension tables."""

    def __init__(self, algebra, modules: Sequence[Representation], complete: bool = True,
                 dim_bound: Optional[int] = None):
        self.algebra = algebra
        self.p = algebra.p
        self.complete = complete
        self.dim_bound = dim_bound
        raw_names = [loewy_name(m) for m in modules]
        order = sorted(range(len(modules)),
                       key=lambda k: (modules[k].total_dim, tuple(-d for d in modules[k].dims), raw_names[k]))
        self.indecs: List[Representation] = [modules[k] for k in order]
        names = [raw_names[k] for k in order]
        counts = Counter(names)
        seen = Counter()
        for k, name in enumerate(names):
            if counts[name] > 1:
                seen[name] += 1
                names[k] = f"{name}#{seen[name]}"
        self.names: List[str] = names
        self.dim_vectors = [m.dims for m in self.indecs]
        self._decomp_cache: Dict[tuple, ModuleExpr] = {}
        self._fill_tables()

    @classmethod
    def from_modules(cls, algebra, modules, complete=True, dim_bound=None):
        return cls(algebra, modules, complete, dim_bound)

    @property
    def n(self) -> int:
        return len(self.indecs)

    def index(self, name: str) -> int:
        return self.names.index(name)

    def expr_name(self, expr: Iterable[int]) -> str:
        expr = tuple(sorted(expr))
        if not expr:
            return "0"
        return "⊕".join(self.names[k] for k in expr)

    def expr_from_names(self, text: str) -> ModuleExpr:
        if text in ("0", ""):
            return ()
        return tuple(sorted(self.index(part) for part in text.split("⊕")))

    def mask(self, expr: Iterable[int]) -> int:
        out = 0
        for k in expr:
            out |= 1 << k
        return out

    def module_of(self, expr: Iterable[int]) -> Representation:
        return direct_sum([self.indecs[k] for k in sorted(expr)], self.algebra)[0]

    def _fill_tables(self):
        n = self.n
        self.hom = [[hom_basis(a, b) for b in self.indecs] for a in self.indecs]
        self.hom_dim = np.array([[len(self.hom[i][j]) for j in range(n)] for i in range(n)], dtype=np.int64).reshape(n, n)
        self.presentations = [Presentation(m) for m in self.indecs]
        self.ext_basis = [[ext_class_basis(self.presentations[i], self.indecs[j]) for j in range(n)] for i in range(n)]
        self.ext_dim = np.array([[len(self.ext_basis[i][j]) for j in range(n)] for i in range(n)], dtype=np.int64).reshape(n, n)
        self.sub_quot: List[Set[Tuple[ModuleExpr, ModuleExpr]]] = []
        for m in self.indecs:
            pairs = set()
            for _, sub, quo in enumerate_submodules(m):
                pairs.add((decompose(self, sub), decompose(self, quo)))
            self.sub_quot.append(pairs)
        self.ext_mid: Dict[Tuple[int, int], Set[ModuleExpr]] = {}
        for i in range(n):
            for j in range(n):
                self.ext_mid[i, j] = self._middle_terms(i, j)
        self.quot_mask = [self._union_mask(q for _, q in self.sub_quot[i]) for i in range(n)]
        self.sub_mask = [self._union_mask(s for s, _ in self.sub_quot[i]) for i in range(n)]
        self.ext_mask = {key: self._union_mask(mids) for key, mids in self.ext_mid.items()}

    def _union_mask(self, exprs) -> int:
        out = 0
        for e in exprs:
            out |= self.mask(e)
        return out

    def _middle_terms(self, i: int, j: int) -> Set[ModuleExpr]:
        """Middle terms of 0 -> I_j -> M -> I_i -> 0, one per line of Ext classes."""
        basis = self.ext_basis[i][j]
        pres = self.presentations[i]
        target = self.indecs[j]
        zero = zero_morphism(pres.syzygy, target)
        out = set()
        for coeffs in _projective_points(len(basis), self.p):
            phi = linear_combination(coeffs, basis, zero, self.p)
            out.add(decompose(self, pushout_middle(target, [(pres, phi)])))
        return out

    def override_dict(self) -> dict:
        return {"modules": [m.to_dict() for m in self.indecs]}


def _rep_key(m: Representation) -> tuple:
    return (m.dims, tuple(x.tobytes() for x in m.maps))


def decompose(table: IndecTable, m: Representation) -> ModuleExpr:
    """Split off table indecomposables one at a time until nothing is left."""
    key = _rep_key(m)
    cached = table._decomp_cache.get(key)
    if cached is not None:
        return cached
    rest = m
    found = []
    for k in sorted(range(table.n), key=lambda k: -table.indecs[k].total_dim):
        ind = table.indecs[k]
        while rest.total_dim >= ind.total_dim:
            comp = split_off(rest, ind)
            if comp is None:
                break
            found.append(k)
            rest = comp
    if rest.total_dim:
        raise UnknownSummand(f"summand with dimension vector {rest.dims} is not in the table")
    result = tuple(sorted(found))
    table._decomp_cache[key] = result
    return result


def ext_middle_terms(table: IndecTable, l: Representation, n: Representation) -> Set[ModuleExpr]:
    """All middle terms M of sequences 0 -> l -> M -> n -> 0, decomposed."""
    pres = Presentation(n)
    basis = ext_class_basis(pres, l)
    zero = zero_morphism(pres.syzygy, l)
    out = set()
    for coeffs in _projective_points(len(basis), l.p):
        phi = linear_combination(coeffs, basis, zero, l.p)
        out.add(decompose(table, pushout_middle(l, [(pres, phi)])))
    return out


def _exprs_with_dims(table: IndecTable, target: Tuple[int, ...]):
    """All module expressions whose dimension vector equals ``target``."""
    n = table.n

    def walk(k, remaining, acc):
        if not any(remaining):
            yield tuple(acc)
            return
        if k == n:
            return
        dv = table.dim_vectors[k]
        count = 0
        rem = list(remaining)
        while True:
            yield from walk(k + 1, tuple(rem), acc + [k] * count)
            rem = [a - b for a, b in zip(rem, dv)]
            if any(x < 0 for x in rem):
                break
            count += 1

    yield from walk(0, tuple(target), [])


def middle_terms_by_injection(table: IndecTable, j: int, i: int, cap: int = ISO_CAP) -> Set[ModuleExpr]:
    """Definition-level oracle: candidates M admitting I_j >-> M with cokernel I_i."""
    sub, quo = table.indecs[j], table.indecs[i]
    target = tuple(a + b for a, b in zip(sub.dims, quo.dims))
    p = table.p
    out = set()
    for expr in _exprs_with_dims(table, target):
        cand = table.module_of(expr)
        basis = hom_basis(sub, cand)
        if p ** len(basis) > cap:
            raise CapExceeded("Hom space too large for the injection oracle")
        zero = zero_morphism(sub, cand)
        for coeffs in ffla.all_vectors(len(basis), p):
            f = linear_combination(coeffs, basis, zero, p)
            if is_injective(f, p) and sub.total_dim:
                coker = quotient(cand, [ffla.canonical_basis(fv, p) for fv in f])[0]
                if _local_iso(coker, quo):
                    out.add(tuple(sorted(expr)))
                    break
    return out


# traces and approximations

def trace(table: IndecTable, u: Iterable[int], m: Representation):
    """Sum of the images of all maps from the indecomposables ``u`` into ``m``."""
    p = m.p
    parts = [[ffla.zeros(d, 0)] for d in m.dims]
    for k in set(u):
        for f in hom_basis(table.indecs[k], m):
            for v, fv in enumerate(f):
                parts[v].append(fv)
    bases = [ffla.canonical_basis(np.hstack(ps), p) for ps in parts]
    return submodule(m, bases)[0], bases


def _is_left_approximation(table, x, comps, targets) -> bool:
    p = table.p
    for t in targets:
        want = hom_basis(x, table.indecs[t])
        if not want:
            continue
        vecs = []
        for k, phi in comps:
            for b in table.hom[k][t]:
                vecs.append(flatten(compose(b, phi, p)))
        if not vecs or ffla.rank(np.array(vecs), p) < len(want):
            return False
    return True


def minimal_left_approximation(table: IndecTable, x: Representation, u: Iterable[int], reverse: bool = False):
    """Minimal left add(u)-approximation of ``x``.

    Starts from the universal map x -> sum_k I_k^{dim Hom(x, I_k)} and drops
    summands greedily in lexicographic (index, copy) order, or the reverse.
    Returns (target expression, morphism, target module).
    """
    targets = sorted(set(u))
    comps = []
    for k in targets:
        for phi in hom_basis(x, table.indecs[k]):
            comps.append((k, phi))
    order = list(range(len(comps)))
    if reverse:
        order.reverse()
    keep = set(order)
    for pos in order:
        trial = [comps[c] for c in sorted(keep - {pos})]
        if _is_left_approximation(table, x, trial, targets):
            keep.discard(pos)
    kept = [comps[c] for c in sorted(keep)]
    rep = direct_sum([table.indecs[k] for k, _ in kept], table.algebra)[0]
    f = tuple(_stack_rows([phi[v] for _, phi in kept], x.dims[v]) for v in range(len(x.dims)))
    return tuple(k for k, _ in kept), f, rep


# enumeration of indecomposables

def default_dim_bound(algebra) -> int:
    return max(max(algebra.projective(v).dims) for v in range(algebra.quiver.n)) + 1


class _Generator:
    """Indecomposables as middle terms of extensions of known modules by simples.

    Every indecomposable M of dimension at least 2 has a simple submodule S and
    M/S is a direct sum of smaller indecomposables, so walking total dimension
    upward and taking middle terms of Ext^1(M/S, S) reaches everything.
    Summands of M/S must have nonzero Ext to S and a summand with multiplicity
    r must carry r independent classes, otherwise the middle term splits.
    """

    def __init__(self, algebra, bound: int):
        self.alg = algebra
        self.p = algebra.p
        self.bound = bound
        self.nv = algebra.quiver.n
        self.found: List[Representation] = []
        self.pres: List[Presentation] = []
        self.ext_reps: Dict[Tuple[int, int], List[Morphism]] = {}

    def add(self, m):
        self.found.append(m)
        self.pres.append(Presentation(m))

    def classes(self, k, v):
        key = (k, v)
        if key not in self.ext_reps:
            self.ext_reps[key] = ext_class_basis(self.pres[k], self.alg.simple(v))
        return self.ext_reps[key]

    def multisets(self, v, fits):
        """Multisets (as Counters) of found modules with nonzero Ext to S(v)."""
        cands = [k for k in range(len(self.found)) if self.classes(k, v)]

        def walk(pos, dims, acc):
            if pos == len(cands):
                if acc:
                    yield dict(acc), dims
                return
            k = cands[pos]
            dv = self.found[k].dims
            limit = len(self.classes(k, v))
            cur = dims
            for r in range(limit + 1):
                if r:
                    cur = tuple(a + b for a, b in zip(cur, dv))
                    if not fits(cur):
                        break
                    acc[k] = r
                yield from walk(pos + 1, cur, acc)
            acc.pop(k, None)

        yield from walk(0, (0,) * self.nv, {})

    def middle_terms(self, v, counts):
        s = self.alg.simple(v)
        choices = []
        for k, r in counts.items():
            reps = self.classes(k, v)
            spaces = [b for b in ffla.enumerate_subspaces(len(reps), self.p) if b.shape[1] == r]
            choices.append([(k, space) for space in spaces])
        for combo in product(*choices):
            parts = []
            for k, space in combo:
                reps = self.classes(k, v)
                zero = zero_morphism(self.pres[k].syzygy, s)
                for col in range(space.shape[1]):
                    parts.append((self.pres[k], linear_combination(space[:, col], reps, zero, self.p)))
            yield pushout_middle(s, parts)

    def is_new_indecomposable(self, m, fresh):
        for ind in self.found:
            if ind.total_dim < m.total_dim and split_off(m, ind) is not None:
                return False
        return not any(_local_iso(m, other) for other in fresh)

    def run(self):
        within = lambda dims: all(d <= self.bound for d in dims)
        for v in range(self.nv):
            self.add(self.alg.simple(v))
        for total in range(2, self.bound * self.nv + 1):
            fresh = []
            for v in range(self.nv):
                e_v = tuple(int(w == v) for w in range(self.nv))

                def fits(dims, e_v=e_v):
                    return within(tuple(a + b for a, b in zip(dims, e_v)))

                for counts, dims in self.multisets(v, fits):
                    if sum(dims) != total - 1:
                        continue
                    for m in self.middle_terms(v, counts):
                        if self.is_new_indecomposable(m, fresh):
                            fresh.append(m)
            for m in fresh:
                self.add(m)
        return self.found

    def frontier_exceeded(self) -> bool:
        """Whether some indecomposable sits just outside the bound."""
        within = lambda dims: all(d <= self.bound for d in dims)
        for v in range(self.nv):
            for counts, dims in self.multisets(v, within):
                grown = list(dims)
                grown[v] += 1
                if within(grown):
                    continue
                for m in self.middle_terms(v, counts):
                    if not any(split_off(m, ind) is not None for ind in self.found if ind.total_dim < m.total_dim):
                        return True
        return False


def enumerate_indecomposables(algebra, dim_bound: Optional[int] = None) -> Tuple[List[Representation], bool]:
    """Indecomposables with every vertex dimension at most ``dim_bound``.

    Returns the modules and whether the bound looked sufficient. An
    :class:`IncompleteBound` warning is issued when an indecomposable exists
    just beyond the bound.
    """
    bound = default_dim_bound(algebra) if dim_bound is None else int(dim_bound)
    if bound < 1:
        raise ValueError("dimension bound must be at least 1")
    gen = _Generator(algebra, bound)
    modules = gen.run()
    complete = not gen.frontier_exceeded()
    if not complete:
        warnings.warn(IncompleteBound(f"indecomposables exceed the per-vertex bound {bound}; raise --dim-bound"))
    return modules, complete


def build_table(algebra, dim_bound: Optional[int] = None) -> IndecTable:
    modules, complete = enumerate_indecomposables(algebra, dim_bound)
    bound = default_dim_bound(algebra) if dim_bound is None else dim_bound
    try:
        return IndecTable(algebra, modules, complete=complete, dim_bound=bound)
    except UnknownSummand as exc:
        if complete:
            raise
        raise IncompleteTable(f"dimension bound {bound} is too small: {exc}") from exc


def enumerate_indecomposables_bruteforce(algebra, dim_bound: int, cap: int = BRUTE_CAP) -> List[Representation]:
    """Definition-level enumeration over all matrix tuples (tiny inputs only)."""
    p = algebra.p
    q = algebra.quiver
    found: List[Representation] = []
    for dims in product(range(dim_bound + 1), repeat=q.n):
        if not any(dims):
            continue
        shapes = [(dims[a.target], dims[a.source]) for a in q.arrows]
        entries = sum(r * c for r, c in shapes)
        if p ** entries > cap:
            raise CapExceeded(f"{p}^{entries} matrix tuples exceed brute-force cap {cap}")
        for values in product(range(p), repeat=entries):
            maps, pos = [], 0
            for r, c in shapes:
                maps.append(np.array(values[pos:pos + r * c], dtype=np.int64).reshape(r, c))
                pos += r * c
            m = Representation(algebra, dims, maps)
            if not m.relations_hold() or not is_indecomposable_exhaustive(m):
                continue
            if not any(is_isomorphic(m, other) for other in found if other.dims == dims):
                found.append(m)
    return found


def load_override(algebra, text: str) -> IndecTable:
    """Build a table from a user-supplied list of indecomposables."""
    data = json.loads(text)
    modules = [Representation.from_dict(algebra, item) for item in data["modules"]]
    for k, m in enumerate(modules):
        if not m.relations_hold():
            raise ValueError(f"module {k} violates a relation")
        if not is_indecomposable_exhaustive(m):
            raise ValueError(f"module {k} is decomposable")
        for other in modules[:k]:
            if is_isomorphic(m, other):
                raise ValueError(f"module {k} repeats an earlier module")
    return IndecTable(algebra, modules, complete=True)
