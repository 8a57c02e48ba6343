"""Subcategories as bitsets over an :class:`IndecTable`.

A subcategory is an ``int`` whose bit ``k`` is set when the k-th
indecomposable belongs to it; it stands for the additive closure of those
indecomposables. Relative operations take a wide subcategory ``ambient``
(also a bitset) and read "quotient" as "quotient by a submodule lying in the
ambient".
"""

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import Iterable, List, Optional, Sequence, Tuple

from .errors import NotWide, TooManyIndecs

SCAN_LIMIT = 16
CLOSURE_LIMIT = 24


def popcount(mask: int) -> int:
    return bin(mask).count("1")


def canonical_order(masks: Iterable[int]) -> List[int]:
    return sorted(set(masks), key=lambda s: (popcount(s), s))


def subset(a: int, b: int) -> bool:
    return a & b == a


@dataclass
class HasseDiagram:
    """Nodes with cover arrows ``(i, j, label)``: node i covers node j."""

    nodes: list
    arrows: List[Tuple[int, int, Optional[int]]] = field(default_factory=list)
    tags: Optional[list] = None

    def successors(self, i: int) -> List[int]:
        return [b for a, b, _ in self.arrows if a == i]

    def predecessors(self, j: int) -> List[int]:
        return [a for a, b, _ in self.arrows if b == j]

    def out_degree(self, i: int) -> int:
        return len(self.successors(i))

    def index(self, node) -> int:
        return self.nodes.index(node)

    def label(self, i: int, j: int) -> Optional[int]:
        for a, b, lab in self.arrows:
            if (a, b) == (i, j):
                return lab
        raise KeyError((i, j))


def hasse(nodes: Sequence[int], leq=subset) -> HasseDiagram:
    """Covering relation of ``nodes`` under ``leq`` (inclusion by default)."""
    nodes = list(nodes)
    n = len(nodes)
    below = [{j for j in range(n) if j != i and leq(nodes[j], nodes[i])} for i in range(n)]
    arrows = []
    for i in range(n):
        for j in sorted(below[i]):
            if not any(j in below[k] for k in below[i]):
                arrows.append((i, j, None))
    return HasseDiagram(nodes, arrows)


class SubcatLattice:
    """Closure operators and torsion-class lattices for one table."""

    def __init__(self, table, jobs: int = 1):
        self.table = table
        self.n = table.n
        self.full = (1 << self.n) - 1
        self.jobs = max(1, int(jobs))
        self._tors = None
        self._torf = None
        self._tors_hasse = None
        self._torf_hasse = None
        self.cache: dict = {}
        self._hom_out = [self._mask_where(lambda j, i=i: table.hom_dim[i, j] > 0) for i in range(self.n)]
        self._hom_in = [self._mask_where(lambda j, i=i: table.hom_dim[j, i] > 0) for i in range(self.n)]

    def map(self, fn, items) -> list:
        """``[fn(x) for x in items]``, spread over ``jobs`` threads; order is kept."""
        items = list(items)
        if self.jobs == 1 or len(items) < 2:
            return [fn(x) for x in items]
        with ThreadPoolExecutor(self.jobs) as pool:
            return list(pool.map(fn, items))

    def _mask_where(self, pred) -> int:
        out = 0
        for j in range(self.n):
            if pred(j):
                out |= 1 << j
        return out

    def members(self, mask: int) -> List[int]:
        return [k for k in range(self.n) if mask >> k & 1]

    def mask_of(self, names: Iterable[str]) -> int:
        return self.table.mask(self.table.index(name) for name in names)

    def names_of(self, mask: int) -> List[str]:
        return [self.table.names[k] for k in self.members(mask)]

    # closure predicates

    def _quot_ok(self, k: int, s: int, ambient: Optional[int]) -> bool:
        t = self.table
        if ambient is None:
            return subset(t.quot_mask[k], s)
        return all(subset(t.mask(q), s) for sub, q in t.sub_quot[k] if subset(t.mask(sub), ambient))

    def _sub_ok(self, k: int, s: int, ambient: Optional[int]) -> bool:
        t = self.table
        if ambient is None:
            return subset(t.sub_mask[k], s)
        return all(subset(t.mask(sub), s) for sub, q in t.sub_quot[k] if subset(t.mask(q), ambient))

    def is_quotient_closed(self, s: int, ambient: Optional[int] = None) -> bool:
        return all(self._quot_ok(k, s, ambient) for k in self.members(s))

    def is_sub_closed(self, s: int, ambient: Optional[int] = None) -> bool:
        return all(self._sub_ok(k, s, ambient) for k in self.members(s))

    def is_extension_closed(self, s: int) -> bool:
        ext = self.table.ext_mask
        ms = self.members(s)
        return all(subset(ext[i, j], s) for i in ms for j in ms)

    def is_torsion_class(self, s: int, ambient: Optional[int] = None) -> bool:
        if ambient is not None and not subset(s, ambient):
            return False
        return self.is_quotient_closed(s, ambient) and self.is_extension_closed(s)

    def is_torsionfree_class(self, s: int, ambient: Optional[int] = None) -> bool:
        if ambient is not None and not subset(s, ambient):
            return False
        return self.is_sub_closed(s, ambient) and self.is_extension_closed(s)

    def _closure(self, s: int, step) -> int:
        while True:
            grown = s
            for k in self.members(s):
                grown |= step(k, s)
            ms = self.members(grown)
            for i in ms:
                for j in ms:
                    grown |= self.table.ext_mask[i, j]
            if grown == s:
                return s
            s = grown

    def tors_closure(self, s: int, ambient: Optional[int] = None) -> int:
        t = self.table
        if ambient is None:
            return self._closure(s, lambda k, cur: t.quot_mask[k])

        def step(k, cur):
            out = 0
            for sub, q in t.sub_quot[k]:
                if subset(t.mask(sub), ambient):
                    out |= t.mask(q)
            return out

        return self._closure(s, step)

    def torf_closure(self, s: int, ambient: Optional[int] = None) -> int:
        t = self.table
        if ambient is None:
            return self._closure(s, lambda k, cur: t.sub_mask[k])

        def step(k, cur):
            out = 0
            for sub, q in t.sub_quot[k]:
                if subset(t.mask(q), ambient):
                    out |= t.mask(sub)
            return out

        return self._closure(s, step)

    def filt_closure(self, s: int) -> int:
        """Smallest extension-closed set containing ``s``."""
        return self._closure(s, lambda k, cur: 0)

    # enumeration

    def _check_size(self, n: int):
        if n > CLOSURE_LIMIT:
            raise TooManyIndecs(f"{n} indecomposables exceed the limit of {CLOSURE_LIMIT}")

    def _scan(self, pred) -> List[int]:
        total = 1 << self.n
        if self.jobs == 1:
            return [s for s in range(total) if pred(s)]
        chunk = -(-total // self.jobs)
        ranges = [range(a, min(a + chunk, total)) for a in range(0, total, chunk)]
        with ThreadPoolExecutor(self.jobs) as pool:
            parts = pool.map(lambda r: [s for s in r if pred(s)], ranges)
        return [s for part in parts for s in part]

    def _by_closure(self, close, pred) -> List[int]:
        found = {close(0)}
        frontier = list(found)
        while frontier:
            nxt = []
            for c in frontier:
                for k in range(self.n):
                    if not c >> k & 1:
                        d = close(c | 1 << k)
                        if d not in found:
                            found.add(d)
                            nxt.append(d)
            frontier = nxt
        bad = [s for s in found if not pred(s)]
        if bad:
            raise AssertionError(f"closure produced non-classes {bad}")
        return canonical_order(found)

    def enumerate_tors_by_closure(self) -> List[int]:
        return self._by_closure(self.tors_closure, self.is_torsion_class)

    def enumerate_tors(self) -> List[int]:
        if self._tors is None:
            self._check_size(self.n)
            if self.n <= SCAN_LIMIT:
                self._tors = canonical_order(self._scan(self.is_torsion_class))
            else:
                self._tors = self.enumerate_tors_by_closure()
        return self._tors

    def enumerate_torf(self) -> List[int]:
        if self._torf is None:
            self._check_size(self.n)
            if self.n <= SCAN_LIMIT:
                self._torf = canonical_order(self._scan(self.is_torsionfree_class))
            else:
                self._torf = self._by_closure(self.torf_closure, self.is_torsionfree_class)
            if len(self._torf) != len(self.enumerate_tors()):
                raise AssertionError("torsion and torsion-free classes differ in number")
        return self._torf

    # perpendicular categories

    def perp_right(self, s: int) -> int:
        """Indecomposables receiving no nonzero map from ``s``."""
        out = 0
        for k in self.members(s):
            out |= self._hom_out[k]
        return self.full & ~out

    def perp_left(self, s: int) -> int:
        """Indecomposables with no nonzero map into ``s``."""
        out = 0
        for k in self.members(s):
            out |= self._hom_in[k]
        return self.full & ~out

    def heart(self, lower: int, upper: int) -> int:
        return upper & self.perp_right(lower)

    # lattice structure

    def join(self, classes: Iterable[int], ambient: Optional[int] = None) -> int:
        union = 0
        for c in classes:
            union |= c
        return self.tors_closure(union, ambient)

    def torf_join(self, classes: Iterable[int]) -> int:
        union = 0
        for c in classes:
            union |= c
        return self.torf_closure(union)

    def meet(self, classes: Iterable[int]) -> int:
        out = self.full
        for c in classes:
            out &= c
        return out

    def tors_hasse(self) -> HasseDiagram:
        if self._tors_hasse is None:
            self._tors_hasse = hasse(self.enumerate_tors())
        return self._tors_hasse

    def torf_hasse(self) -> HasseDiagram:
        if self._torf_hasse is None:
            self._torf_hasse = hasse(self.enumerate_torf())
        return self._torf_hasse

    def tors_predecessors(self, u: int) -> List[int]:
        h = self.tors_hasse()
        return [h.nodes[i] for i in h.predecessors(h.index(u))]

    def u_plus(self, u: int) -> int:
        """Join of ``u`` with every torsion class covering it."""
        return self.join([u] + self.tors_predecessors(u))

    def f_minus(self, f: int) -> int:
        """Intersection of ``f`` with every torsion-free class it covers."""
        h = self.torf_hasse()
        return self.meet([f] + [h.nodes[j] for j in h.successors(h.index(f))])

    def f_minus_via_wide(self, f: int) -> int:
        from .ice import wide_of_torsionfree

        return f & self.perp_right(wide_of_torsionfree(self, f))

    # relative to a wide subcategory

    def _require_wide(self, w: int):
        from .ice import is_wide

        if not is_wide(self, w):
            raise NotWide(f"{self.names_of(w)} is not a wide subcategory")

    def tors_in(self, w: int) -> List[int]:
        """Torsion classes of the abelian category ``w``."""
        self._require_wide(w)
        members = self.members(w)
        found = []
        for bits in range(1 << len(members)):
            s = 0
            for pos, k in enumerate(members):
                if bits >> pos & 1:
                    s |= 1 << k
            if self.is_torsion_class(s, w):
                found.append(s)
        return canonical_order(found)

    def simples_of_wide(self, w: int) -> int:
        """Indecomposables of ``w`` with no proper nonzero submodule in ``w``."""
        self._require_wide(w)
        t = self.table
        out = 0
        for k in self.members(w):
            proper = any(sub and q and subset(t.mask(sub), w) for sub, q in t.sub_quot[k])
            if not proper:
                out |= 1 << k
        return out
