"""Instance and witness files.

One JSON document per instance.  Vertices are 0-based everywhere; box
indices are 1-based in files (the library is 0-based internally); host
vertices in homomorphism lists are plain 0-based vertex ids, not boxes.

A DIMACS-like edge list (`p edge n m` header, `e u v [mult]` lines,
1-based vertices) is accepted for bare graphs.
"""

from __future__ import annotations

import json
from typing import Dict, Tuple

from .errors import FormatError
from .model import Allocation, LAInstance
from .multigraph import Digraph, MultiGraph
from .reductions import ASLDHInstance, BLDHInstance, MMWCInstance, Partition


def _require(doc: dict, key: str):
    if key not in doc:
        raise FormatError(f"missing field {key!r}")
    return doc[key]


def _edges_from_doc(entries) -> list:
    out = []
    for entry in entries:
        if len(entry) == 2:
            u, v = entry
            out.append((int(u), int(v), 1))
        elif len(entry) == 3:
            u, v, m = entry
            out.append((int(u), int(v), int(m)))
        else:
            raise FormatError(f"bad edge entry {entry!r}")
    return out


def _graph_from_doc(doc: dict) -> MultiGraph:
    n = int(_require(doc, "n"))
    try:
        return MultiGraph.from_edge_list(n, _edges_from_doc(_require(doc, "edges")))
    except ValueError as exc:
        raise FormatError(str(exc)) from exc


def _graph_to_doc(g: MultiGraph) -> dict:
    return {
        "n": g.n,
        "edges": [[u, v, m] for (u, v), m in sorted(g.edges.items())],
    }


def _lists_from_doc(doc, n: int, limit: int, one_based: bool) -> Tuple:
    shift = 1 if one_based else 0
    lists = []
    for v in range(n):
        key = str(v)
        if key not in doc:
            raise FormatError(f"lists missing vertex {v}")
        lam = frozenset(int(x) - shift for x in doc[key])
        for x in lam:
            if not (0 <= x < limit):
                raise FormatError(f"list of vertex {v} mentions {x + shift}, out of range")
        lists.append(lam)
    return tuple(lists)


def _lists_to_doc(lists, one_based: bool) -> Dict[str, list]:
    shift = 1 if one_based else 0
    return {str(v): sorted(x + shift for x in lam) for v, lam in enumerate(lists)}


def parse_la(doc: dict) -> LAInstance:
    g = _graph_from_doc(doc)
    r = int(_require(doc, "r"))
    lists = _lists_from_doc(_require(doc, "lists"), g.n, r, one_based=True)
    alpha = {}
    for entry in _require(doc, "alpha"):
        if len(entry) != 3:
            raise FormatError(f"bad alpha entry {entry!r}")
        i, j, val = (int(x) for x in entry)
        alpha[(i - 1, j - 1)] = alpha.get((i - 1, j - 1), 0) + val
    try:
        return LAInstance(g, r, lists, alpha)
    except ValueError as exc:
        raise FormatError(str(exc)) from exc


def la_to_doc(inst: LAInstance) -> dict:
    doc = _graph_to_doc(inst.g)
    doc["r"] = inst.r
    doc["lists"] = _lists_to_doc(inst.lists, one_based=True)
    doc["alpha"] = [[i + 1, j + 1, v] for (i, j), v in sorted(inst.alpha.items())]
    return doc


def parse_minmax(doc: dict) -> MMWCInstance:
    g = _graph_from_doc(doc)
    try:
        return MMWCInstance(
            g, int(_require(doc, "ell")), tuple(int(t) for t in _require(doc, "terminals"))
        )
    except ValueError as exc:
        raise FormatError(str(exc)) from exc


def minmax_to_doc(inst: MMWCInstance) -> dict:
    doc = _graph_to_doc(inst.g)
    doc["ell"] = inst.ell
    doc["terminals"] = list(inst.terminals)
    return doc


def _host_from_doc(doc: dict) -> Digraph:
    h = int(_require(doc, "vertices"))
    arcs = {}
    for entry in _require(doc, "arcs"):
        if len(entry) != 2:
            raise FormatError(f"bad host arc {entry!r}")
        x, y = int(entry[0]), int(entry[1])
        if x == y:
            raise FormatError("host arcs must be non-loops; use the loops field")
        arcs[(x, y)] = 1
    for x in doc.get("loops", []):
        arcs[(int(x), int(x))] = 1
    try:
        return Digraph(h, arcs, loops_allowed=True)
    except ValueError as exc:
        raise FormatError(str(exc)) from exc


def _host_to_doc(host: Digraph) -> dict:
    return {
        "vertices": host.n,
        "arcs": [[x, y] for (x, y) in host.nonloop_arcs()],
        "loops": host.loops(),
    }


def _guest_from_doc(doc: dict, n: int) -> Digraph:
    arcs = {}
    for entry in _edges_from_doc(_require(doc, "guest_arcs")):
        u, v, mult = entry
        if u == v:
            raise FormatError("guest digraphs are loopless")
        arcs[(u, v)] = arcs.get((u, v), 0) + mult
    try:
        return Digraph(n, arcs, loops_allowed=False)
    except ValueError as exc:
        raise FormatError(str(exc)) from exc


def parse_bldh(doc: dict) -> BLDHInstance:
    host = _host_from_doc(_require(doc, "host"))
    lists_doc = _require(doc, "lists")
    n = len(lists_doc)
    lists = _lists_from_doc(lists_doc, n, host.n, one_based=False)
    guest = _guest_from_doc(doc, n)
    try:
        return BLDHInstance(guest, host, lists, int(_require(doc, "ell")))
    except ValueError as exc:
        raise FormatError(str(exc)) from exc


def parse_asldh(doc: dict) -> ASLDHInstance:
    host = _host_from_doc(_require(doc, "host"))
    lists_doc = _require(doc, "lists")
    n = len(lists_doc)
    lists = _lists_from_doc(lists_doc, n, host.n, one_based=False)
    guest = _guest_from_doc(doc, n)
    alpha = {}
    for entry in _require(doc, "alpha_arcs"):
        if len(entry) != 3:
            raise FormatError(f"bad alpha_arcs entry {entry!r}")
        x, y, val = (int(t) for t in entry)
        alpha[(x, y)] = alpha.get((x, y), 0) + val
    try:
        return ASLDHInstance(guest, host, lists, alpha)
    except ValueError as exc:
        raise FormatError(str(exc)) from exc


def bldh_to_doc(inst: BLDHInstance) -> dict:
    return {
        "guest_arcs": [[u, v, m] for (u, v), m in sorted(inst.guest.arcs.items())],
        "host": _host_to_doc(inst.host),
        "lists": _lists_to_doc(inst.lists, one_based=False),
        "ell": inst.ell,
    }


def asldh_to_doc(inst: ASLDHInstance) -> dict:
    return {
        "guest_arcs": [[u, v, m] for (u, v), m in sorted(inst.guest.arcs.items())],
        "host": _host_to_doc(inst.host),
        "lists": _lists_to_doc(inst.lists, one_based=False),
        "alpha_arcs": [[x, y, v] for (x, y), v in sorted(inst.alpha.items())],
    }


# --- witnesses --------------------------------------------------------------


def allocation_to_doc(alloc: Allocation) -> dict:
    return {"assignment": {str(v): box + 1 for v, box in enumerate(alloc.boxes)}}


def parse_allocation(doc: dict, n: int) -> Allocation:
    body = _require(doc, "assignment")
    boxes = []
    for v in range(n):
        key = str(v)
        if key not in body:
            raise FormatError(f"assignment missing vertex {v}")
        boxes.append(int(body[key]) - 1)
    return Allocation(tuple(boxes))


def partition_to_doc(part: Partition) -> dict:
    return {"parts": {str(v): p + 1 for v, p in enumerate(part.parts)}}


def chi_to_doc(chi) -> dict:
    return {"chi": {str(v): int(x) for v, x in enumerate(chi)}}


# --- DIMACS -----------------------------------------------------------------


def parse_dimacs(text: str) -> MultiGraph:
    n = None
    entries = []
    for line_no, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("c"):
            continue
        fields = line.split()
        if fields[0] == "p":
            if len(fields) < 4 or fields[1] != "edge":
                raise FormatError(f"line {line_no}: bad problem line")
            n = int(fields[2])
        elif fields[0] == "e":
            if n is None:
                raise FormatError(f"line {line_no}: edge before problem line")
            if len(fields) not in (3, 4):
                raise FormatError(f"line {line_no}: bad edge line")
            u, v = int(fields[1]) - 1, int(fields[2]) - 1
            mult = int(fields[3]) if len(fields) == 4 else 1
            entries.append((u, v, mult))
        else:
            raise FormatError(f"line {line_no}: unknown record {fields[0]!r}")
    if n is None:
        raise FormatError("no problem line")
    try:
        return MultiGraph.from_edge_list(n, entries)
    except ValueError as exc:
        raise FormatError(str(exc)) from exc


def dimacs_text(g: MultiGraph) -> str:
    lines = [f"p edge {g.n} {len(g.edges)}"]
    for (u, v), mult in sorted(g.edges.items()):
        lines.append(f"e {u + 1} {v + 1} {mult}")
    return "\n".join(lines) + "\n"


def dumps_canonical(doc: dict) -> str:
    return json.dumps(doc, sort_keys=True, separators=(",", ":")) + "\n"
