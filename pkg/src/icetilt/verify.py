"""Expected results for the bundled fixtures and a runner that checks them.

Vertices of the expected diagrams are written as the Ext-progenerator of the
subcategory (summand names joined by "+"), so a diagram is a set of
``(upper, lower)`` or ``(upper, lower, label)`` tuples.
"""

from dataclasses import dataclass
from typing import Any, Dict, List, Optional

from .algebra import load_fixture
from .ice import IceCore
from .lattice import SubcatLattice
from .modcat import build_table
from .mutation import Mutations, enumerate_rigid, question_check


def _arrows(text: str, labeled: bool = False) -> frozenset:
    out = []
    for line in text.strip().splitlines():
        parts = line.split()
        if labeled:
            upper, lower, label = parts
            out.append((_node(upper), _node(lower), label))
        else:
            upper, lower = parts
            out.append((_node(upper), _node(lower)))
    return frozenset(out)


def _node(text: str) -> frozenset:
    return frozenset() if text == "0" else frozenset(text.split("+"))


EXPECTED: Dict[str, Dict[str, Any]] = {
    "a2": {
        "indecs": 3,
        "tors": 5,
        "ice": 6,
        "tors_arrows": _arrows("""
            1+2/1 2+2/1 1
            1+2/1 1 2
            2+2/1 2 2/1
            2 0 2
            1 0 1
        """, labeled=True),
        "ice_arrows": _arrows("""
            1+2/1 1
            1+2/1 2+2/1
            2+2/1 2
            2+2/1 2/1
            2 0
            1 0
            2/1 0
        """),
        "red": {_node("2/1")},
        "rigid": 6,
    },
    "a3": {
        "indecs": 6,
        "tors": 14,
        "ice": 22,
        "ice_arrows": _arrows("""
            1+2/1+3/2/1 1+2/1
            1+2/1+3/2/1 2+2/1+3/2/1
            1+2/1+3/2/1 1+3+3/2/1
            1+2/1 2+2/1
            1+2/1 1
            2+2/1+3/2/1 2+2/1
            2+2/1+3/2/1 2/1+3/2/1
            2+2/1+3/2/1 2+3/2+3/2/1
            1+3+3/2/1 3+3/2+3/2/1
            1+3+3/2/1 1+3/2/1
            1+3+3/2/1 1+3
            2+2/1 2
            2+2/1 2/1
            2/1+3/2/1 2/1
            2/1+3/2/1 3+3/2/1
            2+3/2+3/2/1 2+3/2/1
            2+3/2+3/2/1 2+3/2
            2+3/2+3/2/1 3+3/2+3/2/1
            2+3/2/1 2
            2+3/2/1 3/2/1
            2+3/2 3+3/2
            2+3/2 2
            3+3/2+3/2/1 3+3/2/1
            3+3/2+3/2/1 3+3/2
            3+3/2+3/2/1 3/2+3/2/1
            1+3/2/1 3/2+3/2/1
            1+3/2/1 1
            1+3 1
            1+3 3
            3+3/2/1 3/2/1
            3+3/2/1 3
            3+3/2 3
            3+3/2 3/2
            3/2+3/2/1 3/2/1
            3/2+3/2/1 3/2
            1 0
            2 0
            2/1 0
            3 0
            3/2/1 0
            3/2 0
        """),
        "red": {_node(t) for t in ["2/1+3/2/1", "2/1", "2+3/2/1", "1+3/2/1", "3+3/2/1",
                                    "3/2+3/2/1", "3/2/1", "3/2"]},
        "rigid": 22,
    },
    "nak": {
        "indecs": 5,
        "tors": 12,
        "ice": 16,
        "tors_arrows": _arrows("""
            1+2/1+3/2 2+2/1+3/2 1
            1+2/1+3/2 1+3/2+3 2
            1+2/1+3/2 1+2/1 3
            2+2/1+3/2 2+3/2 2/1
            2+2/1+3/2 2+2/1 3
            1+3/2+3 3/2+3 1
            1+3/2+3 1+3 3/2
            1+2/1 2+2/1 1
            1+2/1 1 2
            2+3/2 3/2+3 2
            2+3/2 2 3
            2+2/1 2 2/1
            3/2+3 3 3/2
            1+3 1 3
            1+3 3 1
            2 0 2
            3 0 3
            1 0 1
        """, labeled=True),
        "ice_arrows": _arrows("""
            1+2/1+3/2 2+2/1+3/2
            1+2/1+3/2 1+3/2+3
            1+2/1+3/2 1+2/1
            2+2/1+3/2 2+3/2
            2+2/1+3/2 2+2/1
            1+3/2+3 3/2+3
            1+3/2+3 1+3
            1+2/1 2+2/1
            1+2/1 1
            2+3/2 3/2+3
            2+3/2 2
            2+2/1 2
            3/2+3 3
            1+3 1
            1+3 3
            2 0
            3 0
            1 0
            1+3/2+3 1+3/2
            1+3/2 1
            1+3/2 3/2
            3/2+3 3/2
            3/2 0
            2+2/1+3/2 2/1+3
            2/1+3 2/1
            2/1+3 3
            2+2/1 2/1
            2/1 0
        """),
        "red": {_node(t) for t in ["1+3/2", "3/2", "2/1+3", "2/1"]},
    },
    "nonnak": {
        "indecs": 7,
        "tors": 12,
        "ice": 16,
        "tors_arrows": _arrows("""
            1/2+2/3+3/3 1/2+1+3/3 2
            1/2+2/3+3/3 1/2+2/3+2 3
            1/2+2/3+3/3 2/3+3/3 1
            1/2+1+3/3 1/2+1 3
            1/2+1+3/3 1+3/3 1/2
            1/2+2/3+2 1/2+2 2/3
            1/2+2/3+2 2/3+2 1
            2/3+3/3 2/3+2 3
            2/3+3/3 3/3 2
            1/2+2 1/2+1 2
            1/2+2 2 1
            1+3/3 1 3
            1+3/3 3/3 1
            2/3+2 2 2/3
            1/2+1 1 1/2
            1 0 1
            2 0 2
            3/3 0 3
        """, labeled=True),
        "ice_arrows": _arrows("""
            1/2+2/3+3/3 1/2+1+3/3
            1/2+2/3+3/3 1/2+2/3+2
            1/2+2/3+3/3 2/3+3/3
            1/2+1+3/3 1/2+1
            1/2+1+3/3 1+3/3
            1/2+2/3+2 1/2+2
            1/2+2/3+2 2/3+2
            2/3+3/3 2/3+2
            2/3+3/3 3/3
            1/2+2 1/2+1
            1/2+2 2
            1+3/3 1
            1+3/3 3/3
            2/3+2 2
            1/2+1 1
            1 0
            2 0
            3/3 0
            1/2+1+3/3 1/2+3/3
            1/2+3/3 1/2
            1/2+1 1/2
            1/2 0
            1/2+3/3 3/3
            1/2+2/3+2 1+2/3
            1+2/3 1
            1+2/3 2/3
            2/3+2 2/3
            2/3 0
        """),
        "red": {_node(t) for t in ["1/2+3/3", "1+2/3", "1/2", "2/3"]},
    },
}


@dataclass
class Check:
    name: str
    passed: bool
    expected: Any = None
    actual: Any = None


class FixtureRun:
    """Everything computed for one fixture, with names for comparison."""

    def __init__(self, name: str, field: Optional[int] = None, jobs: int = 1, algebra=None):
        self.name = name
        self.algebra = algebra if algebra is not None else load_fixture(name, field=field)
        self.table = build_table(self.algebra)
        self.lat = SubcatLattice(self.table, jobs=jobs)
        self.core = IceCore(self.lat)

    def node(self, c: int) -> frozenset:
        return frozenset(self.table.names[k] for k in self.core.progenerator(c))

    def tors_arrows(self) -> frozenset:
        h = self.core.labeled_tors_hasse()
        return frozenset((self.node(h.nodes[i]), self.node(h.nodes[j]), self.table.names[lab])
                         for i, j, lab in h.arrows)

    def ice_arrows(self) -> frozenset:
        h = self.core.ice_hasse()
        return frozenset((self.node(h.nodes[i]), self.node(h.nodes[j])) for i, j, _ in h.arrows)

    def red_nodes(self) -> set:
        return {self.node(c) for c in self.core.enumerate_ice() if not self.lat.is_torsion_class(c)}

    def tors_by_progenerator(self, text: str) -> int:
        target = _node(text)
        for t in self.lat.enumerate_tors():
            if self.node(t) == target:
                return t
        raise KeyError(text)

    def subcat(self, *names: str) -> int:
        return self.lat.mask_of(names)


def _show(x):
    if isinstance(x, (set, frozenset)):
        return sorted(_show(e) for e in x)
    if isinstance(x, tuple):
        return tuple(_show(e) for e in x)
    return x


def _compare(checks: List[Check], name: str, expected, actual):
    ok = expected == actual
    if ok or not isinstance(expected, (set, frozenset)):
        checks.append(Check(name, ok, _show(expected), _show(actual)))
    else:
        checks.append(Check(name, ok, _show(expected - actual), _show(actual - expected)))


def _a2_examples(run: FixtureRun, checks: List[Check]):
    t = {"0": 0}
    for key, gen in [("T1", "1"), ("T2", "2"), ("T3", "2+2/1"), ("T4", "1+2/1")]:
        t[key] = run.tors_by_progenerator(gen)
    core, s = run.core, run.subcat
    _compare(checks, "heart [0,T2] = add 2", s("2"), core.heart(t["0"], t["T2"]))
    _compare(checks, "heart [T1,T4] = add 2", s("2"), core.heart(t["T1"], t["T4"]))
    table = {
        frozenset(): {(x, x) for x in ["0", "T1", "T2", "T3", "T4"]},
        frozenset(["1"]): {("0", "T1"), ("T3", "T4")},
        frozenset(["2"]): {("0", "T2"), ("T1", "T4")},
        frozenset(["2", "2/1"]): {("0", "T3")},
        frozenset(["1", "2", "2/1"]): {("0", "T4")},
        frozenset(["2/1"]): {("T2", "T3")},
    }
    back = {v: k for k, v in t.items()}
    rows = {}
    for lo, up in core.ice_intervals():
        heart = frozenset(run.lat.names_of(core.heart(lo, up)))
        rows.setdefault(heart, set()).add((back[lo], back[up]))
    _compare(checks, "ICE-interval table", table, rows)


def _nak_examples(run: FixtureRun, checks: List[Check]):
    core, lat, s = run.core, run.lat, run.subcat
    u = run.tors_by_progenerator("3/2+3")
    t = run.tors_by_progenerator("2+2/1+3/2")
    _compare(checks, "u_plus(Fac(3/2+3)) = mod", lat.full, lat.u_plus(u))
    _compare(checks, "heart [Fac(3/2+3), Fac(2+2/1+3/2)]", s("2", "2/1"), core.heart(u, t))
    _compare(checks, "T/tr_U(T) = 2+2/1", "2⊕2/1", run.table.expr_name(core.wide_tau_tilting_of_interval(u, t)))
    _compare(checks, "[U,T] sincere", True, core.is_sincere(u, t))
    _compare(checks, "[0, Fac(2+2/1)] not sincere", False, core.is_sincere(0, run.tors_by_progenerator("2+2/1")))
    fac3 = lat.tors_closure(s("3"))
    fac232 = lat.tors_closure(s("2", "3/2"))
    _compare(checks, "[Fac 3, Fac(2+3/2)] not ICE interval", False, core.is_ice_interval(fac3, fac232))
    _compare(checks, "{2, 3/2} not ICE-closed", False, core.is_ice_direct(s("2", "3/2")))


def _mutation_examples(run: FixtureRun, checks: List[Check]):
    mu = Mutations(run.core)
    idx = run.table.index
    pair = (idx("2"), idx("2/1"))
    _compare(checks, "mu_2(2+2/1) = 2/1", (idx("2/1"),), mu.mutate(pair, idx("2")))
    _compare(checks, "mu_2/1(2+2/1) = 2", (idx("2"),), mu.mutate(pair, idx("2/1")))
    diagram = mu.rigid_hasse()
    expected = EXPECTED[run.name]
    _compare(checks, "rigid modules", expected["rigid"], len(enumerate_rigid(run.core)))
    arrows = frozenset((frozenset(run.table.names[k] for k in diagram.tags[i]),
                        frozenset(run.table.names[k] for k in diagram.tags[j])) for i, j, _ in diagram.arrows)
    _compare(checks, "rigid Hasse arrows", expected["ice_arrows"], arrows)
    degrees = all(diagram.out_degree(k) == len(t) for k, t in enumerate(diagram.tags))
    _compare(checks, "out-degree equals number of summands", True, degrees)


def _guarded(checks: List[Check], section: str, fn, *args):
    """Run one block of checks; an exception fails the block instead of aborting the run."""
    try:
        fn(*args)
    except Exception as exc:  # noqa: BLE001 - reported, not swallowed
        checks.append(Check(section, False, "no error", f"{type(exc).__name__}: {exc}"))


def _core_checks(run: FixtureRun, checks: List[Check]):
    expected = EXPECTED[run.name]
    _compare(checks, "indecomposables", expected["indecs"], run.table.n)
    _compare(checks, "torsion classes", expected["tors"], len(run.lat.enumerate_tors()))
    if "tors_arrows" in expected:
        _compare(checks, "labeled tors Hasse arrows", expected["tors_arrows"], run.tors_arrows())
    _compare(checks, "ICE-closed subcategories", expected["ice"], len(run.core.enumerate_ice()))
    _compare(checks, "ICE Hasse arrows", expected["ice_arrows"], run.ice_arrows())
    _compare(checks, "ICE-closed but not torsion", expected["red"], run.red_nodes())
    _compare(checks, "out-degree equals |M| in ICE Hasse", True, all(ok for *_, ok in question_check(run.core)))


def verify_fixture(name: str, field: Optional[int] = None, jobs: int = 1, run: Optional[FixtureRun] = None
                   ) -> List[Check]:
    checks: List[Check] = []
    if run is None:
        try:
            run = FixtureRun(name, field=field, jobs=jobs)
        except Exception as exc:  # noqa: BLE001
            return [Check("build tables", False, "no error", f"{type(exc).__name__}: {exc}")]
    _guarded(checks, "fixture results", _core_checks, run, checks)
    if name == "a2":
        _guarded(checks, "interval examples", _a2_examples, run, checks)
    if name == "nak":
        _guarded(checks, "interval examples", _nak_examples, run, checks)
    if name in ("a2", "a3"):
        _guarded(checks, "mutation examples", _mutation_examples, run, checks)
    return checks
