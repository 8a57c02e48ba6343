"""Bound quiver algebras kQ/I over a prime field, read from JSON definitions.

Paths are tuples of arrow indices read first arrow first. A path
``(a1, ..., ak)`` acts on a representation as ``M_ak ... M_a1``. The
indecomposable projective ``P(v)`` has as basis the surviving path classes
that start at ``v``, so with a single arrow 2 -> 1 the projective at 2 is the
module with top 2 and socle 1.
"""

import json
from dataclasses import dataclass
from importlib import resources
from typing import Dict, List, Optional, Sequence, Tuple

import numpy as np

from . import ffla
from .errors import NonAdmissible, NonComposablePath, NotFiniteDimensional, SchemaError
from .representation import Representation, direct_sum, top_complement

PATH_LENGTH_BOUND = 12
FIXTURES = ("a2", "a3", "nak", "nonnak")


@dataclass(frozen=True)
class Arrow:
    name: str
    source: int
    target: int


@dataclass(frozen=True)
class Quiver:
    vertices: Tuple[str, ...]
    arrows: Tuple[Arrow, ...]

    @property
    def n(self) -> int:
        return len(self.vertices)

    def vertex_index(self, name: str) -> int:
        try:
            return self.vertices.index(str(name))
        except ValueError:
            raise SchemaError(f"unknown vertex {name!r}") from None

    def arrows_from(self, v: int) -> List[int]:
        return [k for k, a in enumerate(self.arrows) if a.source == v]


@dataclass(frozen=True)
class Relation:
    terms: Tuple[Tuple[int, Tuple[int, ...]], ...]
    source: int
    target: int


def is_acyclic(quiver: Quiver) -> bool:
    indeg = [0] * quiver.n
    for a in quiver.arrows:
        indeg[a.target] += 1
    ready = [v for v in range(quiver.n) if indeg[v] == 0]
    seen = 0
    while ready:
        v = ready.pop()
        seen += 1
        for k in quiver.arrows_from(v):
            t = quiver.arrows[k].target
            indeg[t] -= 1
            if indeg[t] == 0:
                ready.append(t)
    return seen == quiver.n


def _is_prime(p: int) -> bool:
    return p >= 2 and all(p % d for d in range(2, int(p ** 0.5) + 1))


class BoundAlgebra:
    """A finite-dimensional quotient kQ/I with its path basis and projectives."""

    def __init__(self, quiver: Quiver, relations: Sequence[Relation], p: int,
                 path_bound: int = PATH_LENGTH_BOUND, source: Optional[dict] = None):
        self.quiver = quiver
        self.relations = tuple(relations)
        self.p = p
        self.path_bound = path_bound
        self.source = source
        self._build_path_basis()
        self._projectives = [self._make_projective(v) for v in range(quiver.n)]

    # path basis

    def _paths_by_length(self, max_len):
        q = self.quiver
        levels = [[(v, ()) for v in range(q.n)]]
        for _ in range(max_len):
            nxt = []
            for start, path in levels[-1]:
                end = q.arrows[path[-1]].target if path else start
                for k in q.arrows_from(end):
                    nxt.append((start, path + (k,)))
            levels.append(nxt)
        return levels

    def _end(self, start, path):
        return self.quiver.arrows[path[-1]].target if path else start

    def _ideal_rows(self, coords, max_len):
        """Truncations of u*r*w spanning the ideal modulo paths longer than max_len."""
        levels = self._paths_by_length(max_len)
        into = {}  # paths ending at a vertex, by length
        out_of = {}
        for length, level in enumerate(levels):
            for start, path in level:
                into.setdefault(self._end(start, path), []).append((start, path))
                out_of.setdefault(start, []).append(path)
        rows = {}
        for rel in self.relations:
            shortest = min(len(path) for _, path in rel.terms)
            for u_start, u in into.get(rel.source, []):
                for w in out_of.get(rel.target, []):
                    if len(u) + len(w) + shortest > max_len:
                        continue
                    key = (u_start, self._end(rel.target, w))
                    index = coords[key]
                    vec = np.zeros(len(index), dtype=np.int64)
                    for coeff, path in rel.terms:
                        full = u + path + w
                        if len(full) <= max_len:
                            vec[index[full]] = (vec[index[full]] + coeff) % self.p
                    if vec.any():
                        rows.setdefault(key, []).append(vec)
        return rows

    def _coordinates(self, max_len):
        levels = self._paths_by_length(max_len)
        paths = {}
        for level in levels:
            for start, path in level:
                paths.setdefault((start, self._end(start, path)), []).append(path)
        coords = {}
        ordered = {}
        for key, plist in paths.items():
            # longer paths first so that they are the ones eliminated
            plist = sorted(plist, key=lambda t: (-len(t), t))
            ordered[key] = plist
            coords[key] = {path: i for i, path in enumerate(plist)}
        return ordered, coords

    def _build_path_basis(self):
        n = self.quiver.n
        for length in range(1, self.path_bound + 1):
            ordered, coords = self._coordinates(length)
            rows = self._ideal_rows(coords, length)
            saturated = True
            for key, plist in ordered.items():
                top = [path for path in plist if len(path) == length]
                if not top:
                    continue
                gens = np.array(rows.get(key, []), dtype=np.int64).reshape(-1, len(plist))
                probe = ffla.zeros(len(plist), len(top))
                for j, path in enumerate(top):
                    probe[coords[key][path], j] = 1
                if not ffla.contains(gens.T, probe, self.p):
                    saturated = False
                    break
            if saturated:
                break
        else:
            raise NotFiniteDimensional(f"paths do not vanish up to length {self.path_bound}")
        self.max_path_length = length - 1
        ordered, coords = self._coordinates(self.max_path_length)
        rows = self._ideal_rows(coords, self.max_path_length)
        self._coords = coords
        self._reducers = {}
        self.path_basis: Dict[Tuple[int, int], List[Tuple[int, ...]]] = {}
        for key, plist in ordered.items():
            gens = np.array(rows.get(key, []), dtype=np.int64).reshape(-1, len(plist))
            r, pivots = ffla.rref(gens, self.p)
            r = r[: len(pivots)]
            free = [i for i in range(len(plist)) if i not in set(pivots)]
            self._reducers[key] = (r, pivots, free)
            self.path_basis[key] = [plist[i] for i in free]
        for s in range(n):
            for t in range(n):
                self.path_basis.setdefault((s, t), [])

    def reduce_path(self, start: int, path: Tuple[int, ...]) -> np.ndarray:
        """Coordinates of a path class in the path basis from start to its end."""
        key = (start, self._end(start, path))
        free_count = len(self.path_basis[key])
        if len(path) > self.max_path_length:
            return np.zeros(free_count, dtype=np.int64)
        r, pivots, free = self._reducers[key]
        vec = np.zeros(len(self._coords[key]), dtype=np.int64)
        vec[self._coords[key][path]] = 1
        for i, pc in enumerate(pivots):
            if vec[pc]:
                vec = (vec - vec[pc] * r[i]) % self.p
        return vec[free]

    @property
    def dim(self) -> int:
        return sum(len(b) for b in self.path_basis.values())

    # modules

    def _make_projective(self, v: int) -> Representation:
        q = self.quiver
        dims = [len(self.path_basis[(v, w)]) for w in range(q.n)]
        maps = []
        for k, arrow in enumerate(q.arrows):
            m = ffla.zeros(dims[arrow.target], dims[arrow.source])
            for j, path in enumerate(self.path_basis[(v, arrow.source)]):
                m[:, j] = self.reduce_path(v, path + (k,))
            maps.append(m)
        return Representation(self, dims, maps)

    def projective(self, v: int) -> Representation:
        return self._projectives[v]

    def projective_of(self, name: str) -> Representation:
        return self.projective(self.quiver.vertex_index(name))

    def simple(self, v: int) -> Representation:
        q = self.quiver
        dims = [int(w == v) for w in range(q.n)]
        maps = [ffla.zeros(dims[a.target], dims[a.source]) for a in q.arrows]
        return Representation(self, dims, maps)

    def simple_of(self, name: str) -> Representation:
        return self.simple(self.quiver.vertex_index(name))

    def zero_module(self) -> Representation:
        return direct_sum([], self)[0]

    def generator_map(self, v: int, m: Representation, element: np.ndarray):
        """The morphism P(v) -> m sending the trivial path at v to ``element``."""
        out = []
        for w in range(self.quiver.n):
            basis = self.path_basis[(v, w)]
            col = ffla.zeros(m.dims[w], len(basis))
            for j, path in enumerate(basis):
                col[:, j] = ffla.mul(m.path_map(path, v), element.reshape(-1, 1), self.p).reshape(-1)
            out.append(col)
        return tuple(out)

    def projective_cover(self, m: Representation):
        """Projective cover P0 -> m with superfluous kernel."""
        tops = top_complement(m)
        pieces, gens = [], []
        for v, basis in enumerate(tops):
            for j in range(basis.shape[1]):
                pieces.append(self.projective(v))
                gens.append(self.generator_map(v, m, basis[:, j]))
        cover, _, projs = direct_sum(pieces, self)
        pi = tuple(ffla.zeros(m.dims[w], cover.dims[w]) for w in range(self.quiver.n))
        for g, pr in zip(gens, projs):
            pi = tuple((a + ffla.mul(gw, pw, self.p)) % self.p for a, gw, pw in zip(pi, g, pr))
        return cover, pi

    def is_hereditary(self) -> bool:
        return not self.relations and is_acyclic(self.quiver)

    def to_dict(self) -> dict:
        if self.source is not None:
            data = dict(self.source)
            data["field"] = self.p
            return data
        q = self.quiver
        return {
            "field": self.p,
            "vertices": list(q.vertices),
            "arrows": [{"name": a.name, "from": q.vertices[a.source], "to": q.vertices[a.target]} for a in q.arrows],
            "relations": [
                [{"coeff": c, "path": [q.arrows[k].name for k in path]} for c, path in rel.terms]
                for rel in self.relations
            ],
        }


def parse_algebra(content, field: Optional[int] = None, path_bound: int = PATH_LENGTH_BOUND) -> BoundAlgebra:
    """Validate a JSON definition (text or already-decoded dict)."""
    if isinstance(content, (str, bytes)):
        try:
            data = json.loads(content)
        except json.JSONDecodeError as exc:
            raise SchemaError(f"invalid JSON: {exc}") from exc
    else:
        data = content
    if not isinstance(data, dict):
        raise SchemaError("algebra definition must be a JSON object")
    for key in ("vertices", "arrows"):
        if key not in data:
            raise SchemaError(f"missing key {key!r}")
    p = field if field is not None else data.get("field", 2)
    if not isinstance(p, int) or not _is_prime(p) or p > 251:
        raise SchemaError(f"field must be a prime <= 251, got {p!r}")
    vertices = data["vertices"]
    if not isinstance(vertices, list) or not vertices:
        raise SchemaError("vertices must be a nonempty list")
    vertices = tuple(str(v) for v in vertices)
    if len(set(vertices)) != len(vertices):
        raise SchemaError("vertex ids must be unique")
    arrows = []
    names = set()
    for raw in data["arrows"]:
        try:
            name, src, tgt = str(raw["name"]), str(raw["from"]), str(raw["to"])
        except (KeyError, TypeError):
            raise SchemaError(f"malformed arrow {raw!r}") from None
        if name in names:
            raise SchemaError(f"duplicate arrow name {name!r}")
        names.add(name)
        if src not in vertices or tgt not in vertices:
            raise SchemaError(f"arrow {name!r} uses an unknown vertex")
        arrows.append(Arrow(name, vertices.index(src), vertices.index(tgt)))
    quiver = Quiver(vertices, tuple(arrows))
    by_name = {a.name: k for k, a in enumerate(arrows)}
    relations = []
    for raw in data.get("relations", []):
        relations.extend(_parse_relation(raw, quiver, by_name, p))
    return BoundAlgebra(quiver, relations, p, path_bound, source=data)


def _parse_relation(raw, quiver, by_name, p) -> List[Relation]:
    if not isinstance(raw, list):
        raise SchemaError("a relation must be a list of terms")
    terms = []
    ends = set()
    for term in raw:
        try:
            coeff = int(term.get("coeff", 1)) % p
            names = list(term["path"])
        except (KeyError, TypeError, AttributeError, ValueError):
            raise SchemaError(f"malformed relation term {term!r}") from None
        path = []
        for name in names:
            if name not in by_name:
                raise SchemaError(f"unknown arrow {name!r} in relation")
            path.append(by_name[name])
        for a, b in zip(path, path[1:]):
            if quiver.arrows[a].target != quiver.arrows[b].source:
                raise NonComposablePath(f"path {names} is not composable")
        if len(path) < 2:
            raise NonAdmissible(f"relation term {names} has length < 2")
        ends.add((quiver.arrows[path[0]].source, quiver.arrows[path[-1]].target))
        if coeff:
            terms.append((coeff, tuple(path)))
    if len(ends) > 1:
        raise NonComposablePath("relation terms are not parallel")
    if not terms:
        return []
    src, tgt = ends.pop()
    return [Relation(tuple(terms), src, tgt)]


def fixture_text(name: str) -> str:
    return resources.files("icetilt").joinpath("fixtures", f"{name}.json").read_text()


def load_fixture(name: str, field: Optional[int] = None) -> BoundAlgebra:
    if name not in FIXTURES:
        raise SchemaError(f"unknown fixture {name!r}")
    return parse_algebra(fixture_text(name), field=field)


def load_algebra(path: str, field: Optional[int] = None) -> BoundAlgebra:
    try:
        with open(path) as fh:
            text = fh.read()
    except OSError as exc:
        raise SchemaError(f"cannot read {path}: {exc.strerror}") from exc
    return parse_algebra(text, field=field)
