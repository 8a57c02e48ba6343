"""Hearts of torsion-class intervals and the ICE-closed subcategories they produce.

An interval is a pair ``(lower, upper)`` of torsion-class bitsets with
``lower`` contained in ``upper``. Its heart is ``upper`` intersected with the
right perpendicular of ``lower``. ICE-closed subcategories (closed under
images, cokernels and extensions) are enumerated as hearts of the intervals
``[U, T]`` with ``T`` inside ``U+``; the closure definition itself is only used
as a bounded cross-check (:func:`is_ice_direct`).
"""

from itertools import combinations, product
from typing import Dict, Iterator, List, Optional, Tuple

import numpy as np

from . import ffla
from .errors import (
    BijectionViolation, CriteriaDisagree, MultipleBricks, NoBrick, NotEnoughProjectives,
)
from .lattice import HasseDiagram, SubcatLattice, canonical_order, hasse, subset
from .modcat import ModuleExpr, decompose, is_division_ring, trace
from .representation import (
    Morphism, Representation, cokernel, direct_sum, image, is_surjective, kernel, linear_combination,
    quotient, zero_morphism,
)

Interval = Tuple[int, int]

DEFAULT_MAX_MULT = 2


def _stack(comps: List[Morphism], x: Representation) -> Morphism:
    out = []
    for v, d in enumerate(x.dims):
        blocks = [phi[v] for phi in comps]
        out.append(np.vstack(blocks) if blocks else ffla.zeros(0, d))
    return tuple(out)


def maps_from(lat: SubcatLattice, x: int, targets: int, max_mult: int = DEFAULT_MAX_MULT
              ) -> Iterator[Tuple[Morphism, Representation]]:
    """Maps from the indecomposable ``x`` into sums of at most ``max_mult`` copies of each target.

    A map into ``I_j`` repeated c times is a c-tuple in Hom(x, I_j); up to
    automorphisms of the target only the span of the tuple matters, plus zero
    components that merely add ``I_j`` to the cokernel. So each target
    contributes one subspace of dimension at most ``max_mult``.
    """
    table = lat.table
    p = table.p
    src = table.indecs[x]
    choices = []
    for j in lat.members(targets):
        basis = table.hom[x][j]
        if not basis:
            continue
        zero = zero_morphism(src, table.indecs[j])
        spaces = [s for s in ffla.enumerate_subspaces(len(basis), p) if s.shape[1] <= max_mult]
        choices.append([[(j, linear_combination(col, basis, zero, p)) for col in s.T] for s in spaces])
    for pick in product(*choices):
        comps = [c for part in pick for c in part]
        tgt = direct_sum([table.indecs[j] for j, _ in comps], table.algebra)[0]
        yield _stack([phi for _, phi in comps], src), tgt


def _inside(lat: SubcatLattice, m: Representation, s: int) -> bool:
    return subset(lat.table.mask(decompose(lat.table, m)), s)


def is_ice_direct(lat: SubcatLattice, s: int, max_mult: int = DEFAULT_MAX_MULT) -> bool:
    """Bounded check of closure under images, cokernels and extensions.

    Extension closure is exact. Image and cokernel closure is tested on every
    map from an indecomposable of ``s`` into a sum of at most ``max_mult``
    copies of each member; maps out of sums reduce to these by taking
    cokernels one summand at a time. A failure is definitive.
    """
    if max_mult < 1:
        raise ValueError("max_mult must be at least 1")
    key = ("ice", s, max_mult)
    if key in lat.cache:
        return lat.cache[key]
    ok = lat.is_extension_closed(s)
    if ok:
        ok = all(_inside(lat, image(f, t)[0], s) and _inside(lat, cokernel(f, t)[0], s)
                 for x in lat.members(s) for f, t in maps_from(lat, x, s, max_mult))
    lat.cache[key] = ok
    return ok


def is_wide(lat: SubcatLattice, s: int, max_mult: int = DEFAULT_MAX_MULT) -> bool:
    """Closure under kernels, cokernels and extensions, with the same bounded maps."""
    key = ("wide", s, max_mult)
    if key in lat.cache:
        return lat.cache[key]
    table = lat.table
    ok = lat.is_extension_closed(s)
    if ok:
        ok = all(_inside(lat, kernel(f, table.indecs[x])[0], s) and _inside(lat, cokernel(f, t)[0], s)
                 for x in lat.members(s) for f, t in maps_from(lat, x, s, max_mult))
    lat.cache[key] = ok
    return ok


def wide_of_torsionfree(lat: SubcatLattice, f: int, max_mult: int = DEFAULT_MAX_MULT) -> int:
    """Members X of the torsion-free class ``f`` all of whose maps into ``f`` have cokernel in ``f``."""
    key = ("wide_of_torf", f, max_mult)
    if key not in lat.cache:
        out = 0
        for x in lat.members(f):
            if all(_inside(lat, cokernel(phi, t)[0], f) for phi, t in maps_from(lat, x, f, max_mult)):
                out |= 1 << x
        lat.cache[key] = out
    return lat.cache[key]


def is_serre(lat: SubcatLattice, s: int) -> bool:
    return lat.is_sub_closed(s) and lat.is_quotient_closed(s) and lat.is_extension_closed(s)


class IceCore:
    """Interval data of one torsion-class lattice, with caches for hearts and labels."""

    def __init__(self, lat: SubcatLattice, max_mult: int = DEFAULT_MAX_MULT):
        self.lat = lat
        self.table = lat.table
        self.max_mult = max_mult
        self._hearts: Dict[Interval, int] = {}
        self._labels: Dict[Tuple[int, int], int] = {}
        self._bricks: Optional[int] = None
        self._ice: Optional[List[int]] = None
        self._pairs = None

    # hearts and brick labels

    def heart(self, lower: int, upper: int) -> int:
        key = (lower, upper)
        if key not in self._hearts:
            self._hearts[key] = self.lat.heart(lower, upper)
        return self._hearts[key]

    def bricks(self) -> int:
        if self._bricks is None:
            self._bricks = self.lat._mask_where(lambda k: is_division_ring(self.table.indecs[k]))
        return self._bricks

    def brick_label(self, upper: int, lower: int) -> int:
        """The brick in the heart of a covering pair ``lower < upper``."""
        key = (upper, lower)
        if key in self._labels:
            return self._labels[key]
        h = self.heart(lower, upper)
        found = self.lat.members(h & self.bricks())
        if not found:
            raise NoBrick(f"no brick in the heart {self.lat.names_of(h)}")
        if len(found) > 1:
            raise MultipleBricks(f"several bricks {self.lat.names_of(h & self.bricks())} in one heart")
        label = found[0]
        if self.lat.filt_closure(1 << label) != h:
            raise MultipleBricks(f"heart {self.lat.names_of(h)} is not filtered by {self.table.names[label]}")
        self._labels[key] = label
        return label

    def labeled_tors_hasse(self) -> HasseDiagram:
        h = self.lat.tors_hasse()
        arrows = [(i, j, self.brick_label(h.nodes[i], h.nodes[j])) for i, j, _ in h.arrows]
        return HasseDiagram(list(h.nodes), arrows)

    def heart_via_labels(self, path: List[Tuple[int, int]]) -> int:
        """Filt-closure of the labels along a downward path of tors Hasse arrows."""
        if not path:
            return 0
        nodes = self.lat.tors_hasse().nodes
        for (_, b), (c, _) in zip(path, path[1:]):
            if b != c:
                raise ValueError("arrows do not form a path")
        labels = 0
        for i, j in path:
            labels |= 1 << self.brick_label(nodes[i], nodes[j])
        out = self.lat.filt_closure(labels)
        expected = self.heart(nodes[path[-1][1]], nodes[path[0][0]])
        if out != expected:
            raise AssertionError(f"label path gives {out}, heart is {expected}")
        return out

    # ICE intervals

    def is_interval(self, lower: int, upper: int) -> bool:
        lat = self.lat
        return subset(lower, upper) and lat.is_torsion_class(lower) and lat.is_torsion_class(upper)

    def is_ice_interval(self, lower: int, upper: int) -> bool:
        return subset(lower, upper) and subset(upper, self.lat.u_plus(lower))

    def ice_intervals(self) -> List[Interval]:
        tors = self.lat.enumerate_tors()
        return [(u, t) for u in tors for t in tors if self.is_ice_interval(u, t)]

    def all_intervals(self) -> List[Interval]:
        tors = self.lat.enumerate_tors()
        return [(u, t) for u in tors for t in tors if subset(u, t)]

    def enumerate_ice(self) -> List[int]:
        if self._ice is None:
            hearts = self.lat.map(lambda iv: self.heart(*iv), self.ice_intervals())
            self._ice = canonical_order(hearts)
        return self._ice

    def is_ice_direct(self, s: int, max_mult: Optional[int] = None) -> bool:
        return is_ice_direct(self.lat, s, max_mult or self.max_mult)

    # wide subcategories

    def is_wide(self, s: int) -> bool:
        return is_wide(self.lat, s, self.max_mult)

    def wide_of_torsionfree(self, f: int) -> int:
        return wide_of_torsionfree(self.lat, f, self.max_mult)

    def wide_of_tors(self, u: int) -> int:
        w = self.heart(u, self.lat.u_plus(u))
        if not self.is_wide(w):
            raise AssertionError(f"{self.lat.names_of(w)} should be wide")
        return w

    def kernel_closure(self, c: int) -> int:
        """Filt-closure of the kernels of maps between objects of ``c``."""
        table = self.table
        found = c
        for x in self.lat.members(c):
            for f, _ in maps_from(self.lat, x, c, self.max_mult):
                found |= table.mask(decompose(table, kernel(f, table.indecs[x])[0]))
        return self.lat.filt_closure(found)

    def smallest_wide_containing(self, c: int) -> int:
        w = self.wide_of_torsionfree(self.lat.torf_closure(c))
        other = self.kernel_closure(c)
        if w != other:
            raise AssertionError(f"two formulas disagree: {self.lat.names_of(w)} vs {self.lat.names_of(other)}")
        return w

    # Ext-projectives and progenerators

    def ext_projectives(self, s: int) -> int:
        ext = self.table.ext_dim
        ms = self.lat.members(s)
        return self.lat._mask_where(lambda k: k in ms and all(ext[k, y] == 0 for y in ms))

    def progenerator(self, s: int) -> ModuleExpr:
        return tuple(self.lat.members(self.ext_projectives(s)))

    def verify_enough_projectives(self, s: int) -> bool:
        """Each member of ``s`` is a quotient of a progenerator sum with kernel in ``s``."""
        table = self.table
        gens = self.progenerator(s)
        for c in self.lat.members(s):
            target = table.indecs[c]
            comps, srcs = [], []
            for g in gens:
                for phi in table.hom[g][c]:
                    comps.append(phi)
                    srcs.append(table.indecs[g])
            cover = direct_sum(srcs, table.algebra)[0]
            f = tuple(np.hstack([phi[v] for phi in comps]) if comps else ffla.zeros(target.dims[v], 0)
                      for v in range(len(target.dims)))
            if not is_surjective(f, target) or not _inside(self.lat, kernel(f, cover)[0], s):
                raise NotEnoughProjectives(f"{table.names[c]} is not covered by {table.expr_name(gens)}")
        return True

    def wide_tau_tilting_of_interval(self, lower: int, upper: int) -> ModuleExpr:
        """Summands of P(upper) modulo their trace of P(lower)."""
        table = self.table
        gens_lower = self.progenerator(lower)
        found = set()
        for k in self.progenerator(upper):
            mod = table.indecs[k]
            _, bases = trace(table, gens_lower, mod)
            found.update(decompose(table, quotient(mod, bases)[0]))
        out = tuple(sorted(found))
        expected = self.progenerator(self.heart(lower, upper))
        if out != expected:
            raise AssertionError(f"{table.expr_name(out)} differs from {table.expr_name(expected)}")
        return out

    def count_formula_check(self, lower: int, upper: int) -> bool:
        outside = [k for k in self.progenerator(upper) if not lower >> k & 1]
        return len(self.progenerator(self.heart(lower, upper))) == len(outside)

    # sincere intervals and wide tau-tilting modules

    def _covers_of(self, u: int) -> List[int]:
        return self.lat.tors_predecessors(u)

    def sincere_by_count(self, lower: int, upper: int) -> bool:
        outside = [k for k in self.progenerator(upper) if not lower >> k & 1]
        return len(outside) == len(self._covers_of(lower))

    def sincere_by_joins(self, lower: int, upper: int) -> bool:
        covers = self._covers_of(lower)
        for r in range(len(covers)):
            for xs in combinations(covers, r):
                if subset(upper, self.lat.join([lower, *xs])):
                    return False
        return True

    def sincere_by_atoms(self, lower: int, upper: int) -> bool:
        lat = self.lat
        w = self.wide_of_tors(lower)
        h = self.heart(lower, upper)
        atoms = [lat.tors_closure(1 << s, w) for s in lat.members(lat.simples_of_wide(w))]
        for r in range(len(atoms)):
            for xs in combinations(atoms, r):
                if subset(h, lat.join(xs, w)):
                    return False
        return True

    def is_sincere(self, lower: int, upper: int) -> bool:
        a = self.sincere_by_count(lower, upper)
        b = self.sincere_by_joins(lower, upper)
        c = self.sincere_by_atoms(lower, upper)
        if not a == b == c:
            names = self.lat.names_of
            raise CriteriaDisagree(f"[{names(lower)}, {names(upper)}]: count={a} joins={b} atoms={c}")
        return a

    def sincere_intervals(self) -> List[Interval]:
        ivs = self.ice_intervals()
        flags = self.lat.map(lambda iv: self.is_sincere(*iv), ivs)
        return [iv for iv, ok in zip(ivs, flags) if ok]

    def enumerate_wttilt(self) -> List[Tuple[int, ModuleExpr]]:
        """Pairs (wide subcategory, module), one per ICE-closed subcategory, in ICE order."""
        if self._pairs is not None:
            return self._pairs
        ice = self.enumerate_ice()
        by_heart = {}
        for u, t in self.sincere_intervals():
            h = self.heart(u, t)
            if h in by_heart:
                raise BijectionViolation(f"two sincere intervals share the heart {self.lat.names_of(h)}")
            by_heart[h] = (self.wide_of_tors(u), self.wide_tau_tilting_of_interval(u, t))
        if set(by_heart) != set(ice):
            raise BijectionViolation("sincere intervals do not match ICE-closed subcategories")
        pairs = [by_heart[c] for c in ice]
        modules = [m for _, m in pairs]
        if len(set(modules)) != len(modules):
            raise BijectionViolation("two sincere intervals give the same module")
        for c, m in zip(ice, modules):
            if self.progenerator(c) != m:
                raise BijectionViolation(f"module {self.table.expr_name(m)} is not the progenerator of its heart")
        every = {self.wide_tau_tilting_of_interval(u, t) for u, t in self.ice_intervals()}
        if every != set(modules):
            raise BijectionViolation("ICE intervals produce modules outside the sincere ones")
        self._pairs = pairs
        return pairs

    def ice_hasse(self) -> HasseDiagram:
        ice = self.enumerate_ice()
        h = hasse(ice)
        h.tags = [self.progenerator(c) for c in ice]
        return h

    def serre_check(self) -> bool:
        """Pairs with Serre wide part are exactly the progenerators of torsion classes."""
        serre = {m for w, m in self.enumerate_wttilt() if is_serre(self.lat, w)}
        return serre == {self.progenerator(t) for t in self.lat.enumerate_tors()}

    def realize_as_heart(self, c: int) -> Tuple[int, int]:
        """Torsion-free classes (G, F) with G inside F whose heart F ∩ ⊥G is ``c``."""
        lat = self.lat
        f = lat.torf_closure(c)
        g = f & lat.perp_right(c)
        if f & lat.perp_left(g) != c:
            raise AssertionError(f"{lat.names_of(c)} is not the heart of [{lat.names_of(g)}, {lat.names_of(f)}]")
        return g, f

    # ICE poset operations

    def ice_join(self, family: List[int]) -> int:
        union = 0
        for c in family:
            union |= c
        above = [c for c in self.enumerate_ice() if subset(union, c)]
        least = [c for c in above if all(subset(c, d) for d in above)]
        if len(least) != 1:
            raise AssertionError("ICE join is not unique")
        return least[0]

    def ice_meet(self, family: List[int]) -> int:
        inter = self.lat.meet(family)
        below = [c for c in self.enumerate_ice() if subset(c, inter)]
        greatest = [c for c in below if all(subset(d, c) for d in below)]
        if len(greatest) != 1:
            raise AssertionError("ICE meet is not unique")
        return greatest[0]
