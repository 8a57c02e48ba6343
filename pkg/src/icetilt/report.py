"""Analysis reports (versioned JSON) and DOT rendering of Hasse diagrams."""

import json
import time
from typing import Dict, List, Optional

from .errors import RigidRequiresHereditary
from .ice import IceCore
from .lattice import HasseDiagram, SubcatLattice
from .modcat import build_table
from .mutation import Mutations, question_check

SCHEMA_VERSION = "icetilt.report/1"

_names = {"type": "array", "items": {"type": "string"}}
_diagram = {
    "type": "object",
    "required": ["nodes", "arrows"],
    "properties": {
        "nodes": {"type": "array", "items": _names},
        "tags": {"type": "array", "items": _names},
        "arrows": {"type": "array", "items": {"type": "array", "minItems": 3, "maxItems": 3}},
    },
}

REPORT_SCHEMA = {
    "type": "object",
    "required": ["schema", "config", "algebra", "indecs", "tors", "torf", "tors_hasse", "ice", "wttilt",
                 "ice_hasse", "rigid_hasse", "question", "timing"],
    "properties": {
        "schema": {"const": SCHEMA_VERSION},
        "config": {"type": "object", "required": ["field", "dim_bound", "max_mult", "jobs"]},
        "algebra": {"type": "object", "required": ["vertices", "arrows", "relations", "dimension", "hereditary"]},
        "indecs": {"type": "array", "items": {
            "type": "object", "required": ["name", "dims"],
            "properties": {"name": {"type": "string"}, "dims": {"type": "array", "items": {"type": "integer"}}},
        }},
        "tors": {"type": "array", "items": _names},
        "torf": {"type": "array", "items": _names},
        "tors_hasse": _diagram,
        "ice": {"type": "array", "items": {
            "type": "object", "required": ["subcategory", "progenerator", "torsion_class"],
        }},
        "wttilt": {"type": "array", "items": {"type": "object", "required": ["wide", "module"]}},
        "ice_hasse": _diagram,
        "rigid_hasse": {"anyOf": [{"type": "null"}, _diagram]},
        "question": {"type": "array", "items": {
            "type": "object", "required": ["module", "out_degree", "holds"],
        }},
        "timing": {"type": "object"},
    },
}


class ReportError(ValueError):
    pass


def _diagram_dict(h: HasseDiagram, name_node, name_label=None, name_tag=None) -> dict:
    out = {
        "nodes": [name_node(x) for x in h.nodes],
        "arrows": [[i, j, name_label(lab) if name_label and lab is not None else None] for i, j, lab in h.arrows],
    }
    if h.tags is not None and name_tag is not None:
        out["tags"] = [name_tag(t) for t in h.tags]
    return out


def _pipeline(algebra, dim_bound, max_mult, jobs):
    table = build_table(algebra, dim_bound)
    lat = SubcatLattice(table, jobs=jobs)
    return table, lat, IceCore(lat, max_mult=max_mult)


def _labeled_tors(core: IceCore) -> HasseDiagram:
    h = core.labeled_tors_hasse()
    h.tags = [core.progenerator(t) for t in h.nodes]
    return h


def hasse_diagram(algebra, what: str, dim_bound: Optional[int] = None, max_mult: int = 2, jobs: int = 1) -> dict:
    """One serialized diagram: ``tors`` (brick-labeled), ``ice`` or ``rigid``."""
    if what == "rigid":
        # refuse before doing any work on a non-hereditary algebra
        if not algebra.is_hereditary():
            raise RigidRequiresHereditary("the rigid-module quiver needs a hereditary algebra")
    table, lat, core = _pipeline(algebra, dim_bound, max_mult, jobs)
    names = lat.names_of

    def expr_names(expr) -> List[str]:
        return [table.names[k] for k in expr]

    if what == "tors":
        return _diagram_dict(_labeled_tors(core), names, lambda k: table.names[k], expr_names)
    if what == "ice":
        return _diagram_dict(core.ice_hasse(), names, name_tag=expr_names)
    if what == "rigid":
        return _diagram_dict(Mutations(core).rigid_hasse(), names, name_tag=expr_names)
    raise ValueError(f"unknown diagram {what!r}")


def analyze(algebra, dim_bound: Optional[int] = None, max_mult: int = 2, jobs: int = 1,
            source: Optional[str] = None) -> dict:
    """Run the whole pipeline and return the report as plain data."""
    start = time.perf_counter()
    table, lat, core = _pipeline(algebra, dim_bound, max_mult, jobs)

    def names(mask: int) -> List[str]:
        return lat.names_of(mask)

    def expr_names(expr) -> List[str]:
        return [table.names[k] for k in expr]

    ice = core.enumerate_ice()
    pairs = core.enumerate_wttilt()
    tors_hasse = _labeled_tors(core)
    rigid = None
    if algebra.is_hereditary():
        rigid = _diagram_dict(Mutations(core).rigid_hasse(), names, name_tag=expr_names)
    report = {
        "schema": SCHEMA_VERSION,
        "config": {"field": algebra.p, "dim_bound": table.dim_bound, "max_mult": max_mult, "jobs": jobs,
                   "source": source},
        "algebra": {
            "vertices": list(algebra.quiver.vertices),
            "arrows": [a.name for a in algebra.quiver.arrows],
            "relations": len(algebra.relations),
            "dimension": algebra.dim,
            "hereditary": algebra.is_hereditary(),
        },
        "complete": table.complete,
        "indecs": [{"name": n, "dims": list(d)} for n, d in zip(table.names, table.dim_vectors)],
        "tors": [names(t) for t in lat.enumerate_tors()],
        "torf": [names(f) for f in lat.enumerate_torf()],
        "tors_hasse": _diagram_dict(tors_hasse, names, lambda k: table.names[k], expr_names),
        "ice": [{"subcategory": names(c), "progenerator": expr_names(core.progenerator(c)),
                 "torsion_class": lat.is_torsion_class(c)} for c in ice],
        "wttilt": [{"wide": names(w), "module": expr_names(m)} for w, m in pairs],
        "ice_hasse": _diagram_dict(core.ice_hasse(), names, name_tag=expr_names),
        "rigid_hasse": rigid,
        "question": [{"module": expr_names(m), "out_degree": d, "holds": ok} for m, d, ok in question_check(core)],
    }
    report["timing"] = {"seconds": round(time.perf_counter() - start, 3)}
    return report


def serialize(report: dict) -> str:
    return json.dumps(report, indent=2, sort_keys=True, ensure_ascii=False) + "\n"


def parse(text: str) -> dict:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ReportError(f"invalid report JSON: {exc}") from exc
    if not isinstance(data, dict) or data.get("schema") != SCHEMA_VERSION:
        raise ReportError(f"expected schema {SCHEMA_VERSION!r}")
    missing = [k for k in REPORT_SCHEMA["required"] if k not in data]
    if missing:
        raise ReportError(f"report lacks {missing}")
    return data


def _dot_id(text: str) -> str:
    return '"' + text.replace("\\", "\\\\").replace('"', '\\"') + '"'


def _node_label(names: List[str]) -> str:
    return "⊕".join(names) if names else "0"


def to_dot(diagram: Dict, title: str = "hasse") -> str:
    """Deterministic DOT text for a serialized diagram.

    Nodes are labeled by their tag (the progenerator) when present, otherwise
    by the member list of the subcategory.
    """
    labels = diagram.get("tags") or diagram["nodes"]
    lines = [f"digraph {_dot_id(title)} {{", "  rankdir=TB;"]
    for k, names in enumerate(labels):
        lines.append(f"  n{k} [label={_dot_id(_node_label(names))}];")
    for i, j, label in sorted(diagram["arrows"], key=lambda a: (a[0], a[1])):
        attr = f" [label={_dot_id(label)}]" if label is not None else ""
        lines.append(f"  n{i} -> n{j}{attr};")
    lines.append("}")
    return "\n".join(lines) + "\n"
