"""Rigid modules over hereditary algebras and their mutations.

A rigid module is stored as a basic module expression (sorted tuple of
distinct table indices) with no self-extensions. Rigid modules are ordered by
inclusion of the ICE-closed subcategories they generate, found by looking up
the subcategory whose Ext-progenerator is the module.
"""

from itertools import combinations
from typing import Dict, List, Optional, Tuple

from .errors import NotASummand, NotHereditary, RigidRequiresHereditary, TheoremViolation
from .ice import IceCore, maps_from
from .lattice import HasseDiagram, canonical_order, hasse
from .modcat import ModuleExpr, decompose, minimal_left_approximation, trace
from .representation import cokernel, is_injective, is_surjective

CLOSURE_ROUNDS = 8


def is_hereditary(algebra) -> bool:
    return algebra.is_hereditary()


def is_rigid(core: IceCore, expr: ModuleExpr) -> bool:
    ext = core.table.ext_dim
    return all(ext[i, j] == 0 for i in expr for j in expr)


def enumerate_rigid(core: IceCore) -> List[ModuleExpr]:
    """All basic rigid modules, smallest first."""
    n = core.table.n
    found = []
    for size in range(n + 1):
        for expr in combinations(range(n), size):
            if is_rigid(core, expr):
                found.append(expr)
    return found


def _require_hereditary(core: IceCore, error=NotHereditary):
    if not is_hereditary(core.table.algebra):
        raise error("mutation of rigid modules needs a hereditary algebra")


class Mutations:
    """Mutation and the rigid-module Hasse quiver for one hereditary algebra."""

    def __init__(self, core: IceCore):
        _require_hereditary(core, RigidRequiresHereditary)
        self.core = core
        self.table = core.table
        self.lat = core.lat
        self._by_progenerator: Optional[Dict[ModuleExpr, int]] = None
        self.performed: List[Tuple[ModuleExpr, int, ModuleExpr]] = []

    def ccok(self, expr: ModuleExpr) -> int:
        """The ICE-closed subcategory whose Ext-progenerator is ``expr``."""
        if self._by_progenerator is None:
            self._by_progenerator = {self.core.progenerator(c): c for c in self.core.enumerate_ice()}
        key = tuple(sorted(set(expr)))
        if key not in self._by_progenerator:
            raise TheoremViolation(f"{self.table.expr_name(key)} is not the progenerator of an ICE-closed subcategory")
        return self._by_progenerator[key]

    def ccok_by_closure(self, expr: ModuleExpr, rounds: int = CLOSURE_ROUNDS) -> int:
        """Bounded cokernel closure of add ``expr``, used to cross-check :meth:`ccok`."""
        table = self.table
        found = self.lat.mask_of(table.names[k] for k in expr)
        for _ in range(rounds):
            grown = found
            for x in self.lat.members(found):
                for f, t in maps_from(self.lat, x, found, self.core.max_mult):
                    grown |= table.mask(decompose(table, cokernel(f, t)[0]))
            if grown == found:
                return found
            found = grown
        return found

    def in_fac(self, x: int, u: ModuleExpr) -> bool:
        """Whether the indecomposable ``x`` is a quotient of a sum of copies of ``u``."""
        mod = self.table.indecs[x]
        return trace(self.table, u, mod)[0].dims == mod.dims

    def in_sub(self, x: int, u: ModuleExpr) -> bool:
        """Whether the indecomposable ``x`` embeds into a sum of copies of ``u``."""
        if not u:
            return False
        _, f, _ = minimal_left_approximation(self.table, self.table.indecs[x], u)
        return is_injective(f, self.table.p)

    def mutate(self, expr: ModuleExpr, x: int) -> ModuleExpr:
        """Replace the summand ``x`` by the cokernel of its minimal left approximation by the rest."""
        expr = tuple(sorted(set(expr)))
        if x not in expr:
            raise NotASummand(f"{self.table.names[x]} is not a summand of {self.table.expr_name(expr)}")
        table = self.table
        rest = tuple(k for k in expr if k != x)
        mod = table.indecs[x]
        target, f, rep = minimal_left_approximation(table, mod, rest)
        other, _, _ = minimal_left_approximation(table, mod, rest, reverse=True)
        if sorted(target) != sorted(other):
            raise TheoremViolation("minimal approximation depends on the elimination order")
        if not (is_surjective(f, rep) or is_injective(f, table.p)):
            raise TheoremViolation("minimal approximation is neither surjective nor injective")
        coker = decompose(table, cokernel(f, rep)[0])
        result = tuple(sorted(set(coker) | set(rest)))
        if self.in_fac(x, rest) and result != rest:
            raise TheoremViolation("summand lies in Fac of the rest but mutation kept something new")
        if not is_rigid(self.core, result):
            raise TheoremViolation(f"mutation produced non-rigid {table.expr_name(result)}")
        self.performed.append((expr, x, result))
        return result

    def rigid_hasse(self) -> HasseDiagram:
        """Rigid modules ordered by their ICE-closed subcategories; arrows checked against mutation."""
        rigid = enumerate_rigid(self.core)
        masks = [self.ccok(t) for t in rigid]
        if len(set(masks)) != len(masks) or set(masks) != set(self.core.enumerate_ice()):
            raise TheoremViolation("rigid modules are not in bijection with ICE-closed subcategories")
        order = canonical_order(masks)
        nodes = [rigid[masks.index(c)] for c in order]
        diagram = hasse(order)
        diagram.tags = nodes
        self.verify_arrow_theorem(diagram)
        return diagram

    def verify_arrow_theorem(self, diagram: HasseDiagram) -> Dict[str, int]:
        """Hasse arrows out of each T are exactly its |T| mutations."""
        nodes = diagram.tags
        pos = {t: k for k, t in enumerate(nodes)}
        from_mutation = set()
        for t in nodes:
            images = [self.mutate(t, x) for x in t]
            if len(set(images)) != len(t):
                raise TheoremViolation(f"mutations of {self.table.expr_name(t)} are not distinct")
            for u in images:
                from_mutation.add((pos[t], pos[u]))
        arrows = {(i, j) for i, j, _ in diagram.arrows}
        if arrows != from_mutation:
            raise TheoremViolation("Hasse arrows differ from mutations")
        for k, t in enumerate(nodes):
            if diagram.out_degree(k) != len(t):
                raise TheoremViolation(f"{self.table.expr_name(t)} has {diagram.out_degree(k)} arrows out")
        return {"nodes": len(nodes), "arrows": len(arrows)}

    def fac_sub_is_add(self, expr: ModuleExpr) -> bool:
        fac = {k for k in range(self.table.n) if self.in_fac(k, expr)}
        sub = {k for k in range(self.table.n) if self.in_sub(k, expr)}
        return fac & sub == set(expr)


def question_check(core: IceCore) -> List[Tuple[ModuleExpr, int, bool]]:
    """For every wide tau-tilting module M: (M, arrows out of M in the ICE Hasse quiver, holds)."""
    h = core.ice_hasse()
    return [(m, h.out_degree(k), h.out_degree(k) == len(m)) for k, m in enumerate(h.tags)]
