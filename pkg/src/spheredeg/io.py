"""File formats: JSON for graphs, complexes, filtrations and disk maps; DOT; CSV.

All writers are byte-deterministic (sorted keys, fixed separators, trailing
newline) and :func:`write_atomic` replaces files via temp + rename.
"""
from __future__ import annotations

import csv
import io
import json
import os
import tempfile
from typing import Any

from .errors import SchemaError
from .graph import Edge, GenusGraph, Vertex


def dumps(obj: Any) -> str:
    return json.dumps(obj, sort_keys=True, separators=(",", ":")) + "\n"


def write_atomic(path: str, text: str) -> None:
    d = os.path.dirname(os.path.abspath(path))
    fd, tmp = tempfile.mkstemp(dir=d, prefix=".tmp-", suffix=os.path.basename(path))
    try:
        with os.fdopen(fd, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


def load_json(path: str) -> Any:
    try:
        with open(path, encoding="utf-8") as fh:
            return json.load(fh)
    except json.JSONDecodeError as exc:
        raise SchemaError(f"malformed JSON: {exc.msg}", f"{path}:{exc.lineno}:{exc.colno}") from exc


def _expect(cond, msg, loc):
    if not cond:
        raise SchemaError(msg, loc)


def _is_int(x):
    return isinstance(x, int) and not isinstance(x, bool)


# --- graphs -----------------------------------------------------------------

def graph_to_dict(g: GenusGraph) -> dict:
    return {
        "vertices": [{"id": v.id, "genus": v.genus, "basepoint": v.basepoint} for v in g.vertices],
        "edges": [{"id": e.id, "ends": list(e.ends)} for e in g.edges],
    }


def graph_from_dict(doc: Any, loc: str = "") -> GenusGraph:
    _expect(isinstance(doc, dict), "graph must be an object", loc)
    _expect(set(doc) <= {"vertices", "edges"} and "vertices" in doc,
            "graph needs 'vertices' (and optionally 'edges')", loc)
    vs = []
    _expect(isinstance(doc["vertices"], list), "'vertices' must be a list", f"{loc}/vertices")
    for i, v in enumerate(doc["vertices"]):
        here = f"{loc}/vertices/{i}"
        _expect(isinstance(v, dict), "vertex must be an object", here)
        _expect(_is_int(v.get("id")), "vertex 'id' must be an integer", here)
        genus = v.get("genus", 0)
        _expect(_is_int(genus), "vertex 'genus' must be an integer", here)
        bp = v.get("basepoint", False)
        _expect(isinstance(bp, bool), "vertex 'basepoint' must be a boolean", here)
        vs.append(Vertex(v["id"], genus, bp))
    es = []
    edges = doc.get("edges", [])
    _expect(isinstance(edges, list), "'edges' must be a list", f"{loc}/edges")
    for i, e in enumerate(edges):
        here = f"{loc}/edges/{i}"
        _expect(isinstance(e, dict), "edge must be an object", here)
        _expect(_is_int(e.get("id")), "edge 'id' must be an integer", here)
        ends = e.get("ends")
        _expect(isinstance(ends, list) and len(ends) == 2 and all(map(_is_int, ends)),
                "edge 'ends' must be a pair of integers", here)
        es.append(Edge(e["id"], (ends[0], ends[1])))
    return GenusGraph(tuple(vs), tuple(es))


def graph_to_dot(g: GenusGraph, name: str = "G") -> str:
    lines = [f"graph {name} {{"]
    for v in g.vertices:
        shape = "doublecircle" if v.basepoint else "circle"
        lines.append(f'  v{v.id} [shape={shape}, label="g={v.genus}"];')
    for e in g.edges:
        lines.append(f'  v{e.ends[0]} -- v{e.ends[1]} [label="e{e.id}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"


def census_to_dict(n: int, d: int, graphs) -> dict:
    return {
        "graphs": [graph_to_dict(g) for g in graphs],
        "summary": {"n": n, "d": d, "count": len(graphs)},
    }


def census_csv(rows) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["n", "d", "dim", "degree", "count"])
    w.writerows(rows)
    return buf.getvalue()


# --- complexes, filtrations, disk maps ---------------------------------------

def _label(x, loc):
    _expect(isinstance(x, (str, int)) and not isinstance(x, bool),
            "vertex labels must be strings or integers", loc)
    return x


def _sorted_face(face):
    from .simplicial import label_key

    return sorted(face, key=label_key)


def complex_to_dict(K) -> dict:
    return {"facets": [_sorted_face(f) for f in K.sorted_facets()]}


def complex_from_dict(doc: Any, loc: str = "", allow_empty: bool = False):
    from .simplicial import SimplicialComplex, build_complex

    _expect(isinstance(doc, dict) and isinstance(doc.get("facets"), list),
            "complex must be an object with a 'facets' list", loc)
    facets = []
    for i, f in enumerate(doc["facets"]):
        here = f"{loc}/facets/{i}"
        _expect(isinstance(f, list) and f, "facet must be a nonempty list", here)
        facets.append([_label(x, f"{here}/{j}") for j, x in enumerate(f)])
    if not facets and allow_empty:
        return SimplicialComplex.empty()
    _expect(facets, "complex has no facets", loc)
    return build_complex(facets)


def homology_to_dict(profile) -> dict:
    return {"dims": [{"i": i, "rank": r, "torsion": list(t)} for i, (r, t) in enumerate(profile.groups)]}


def filtration_to_dict(F) -> dict:
    out = complex_to_dict(F.complex)
    out["deg"] = [[_sorted_face(face), F.deg[face]] for face in F.sorted_faces()]
    return out


def filtration_from_dict(doc: Any, loc: str = ""):
    from .filtration import DegreeFilteredComplex

    K = complex_from_dict(doc, loc)
    _expect(isinstance(doc.get("deg"), list), "filtration needs a 'deg' list", loc)
    deg = {}
    for i, item in enumerate(doc["deg"]):
        here = f"{loc}/deg/{i}"
        _expect(isinstance(item, list) and len(item) == 2 and isinstance(item[0], list)
                and _is_int(item[1]), "deg entries are [face, integer]", here)
        face = frozenset(_label(x, here) for x in item[0])
        _expect(face in K, "face not in complex", here)
        deg[face] = item[1]
    missing = [f for f in K.faces() if f not in deg]
    _expect(not missing, f"{len(missing)} faces lack a degree", f"{loc}/deg")
    return DegreeFilteredComplex(K, deg)


def diskmap_to_dict(f) -> dict:
    from .simplicial import label_key

    return {
        "disk": complex_to_dict(f.disk),
        "boundary": complex_to_dict(f.boundary),
        "map": [[v, f.vertex_map[v]] for v in sorted(f.vertex_map, key=label_key)],
    }


def diskmap_from_dict(doc: Any, target, loc: str = ""):
    from .surgery import DiskMap

    _expect(isinstance(doc, dict) and {"disk", "boundary", "map"} <= set(doc),
            "disk map needs 'disk', 'boundary' and 'map'", loc)
    disk = complex_from_dict(doc["disk"], f"{loc}/disk")
    boundary = complex_from_dict(doc["boundary"], f"{loc}/boundary", allow_empty=True)
    _expect(isinstance(doc["map"], list), "'map' must be a list of [disk vertex, target vertex]", f"{loc}/map")
    vmap = {}
    for i, item in enumerate(doc["map"]):
        here = f"{loc}/map/{i}"
        _expect(isinstance(item, list) and len(item) == 2, "map entries are pairs", here)
        vmap[_label(item[0], here)] = _label(item[1], here)
    return DiskMap(disk, boundary, target, vmap)


def trace_to_list(trace) -> list:
    return [
        {"step": s.step, "measure": list(s.measure), "omega": _sorted_face(s.omega), "image": _sorted_face(s.image)}
        for s in trace
    ]
