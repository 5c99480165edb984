"""Canonical JSON for complexes, simplicial groups, rings, modules and graphs.

The payload type is read off its keys:

==========================  ====================================
keys                        type
==========================  ====================================
ranks, diffs                ChainComplex (+ relations: presented)
ranks, diffs, mult, unit    DGAlgebra
ranks, faces, degens        SimplicialAbGroup
... + mult, unit            SimplicialRing
... + act, ring             DGModule / SimplicialModule
source, target, components  ChainMap / SimplicialMap
objects, entries            IGraph (+ comp, units: ICategory)
==========================  ====================================

Matrices are lists of rows; shapes come from the ranks, so empty matrices
are unambiguous.  Canonical text has sorted keys and no spaces.
"""

from __future__ import annotations

import hashlib
import json
from typing import Any, Optional

import numpy as np

from . import algebra as al
from . import enriched as en
from . import linalg as la
from . import modules as md
from .chain import ChainComplex, ChainMap, PresentedComplex
from .simplicial import SimplicialAbGroup, SimplicialMap


class SchemaError(ValueError):
    """A payload does not have the shape of any known type."""


def canonical(obj: Any) -> str:
    return json.dumps(obj, sort_keys=True, separators=(",", ":"), ensure_ascii=False)


def canonicalize(text: str) -> str:
    return canonical(json.loads(text))


def content_hash(payload: dict) -> str:
    return hashlib.sha256(canonical(payload).encode()).hexdigest()


def _m(M: np.ndarray) -> list:
    return [[int(x) for x in row] for row in M.tolist()] if M.shape[0] else []


def _v(M: np.ndarray) -> list:
    return [int(x) for x in np.asarray(M).reshape(-1).tolist()]


def _key(*ints) -> str:
    return ",".join(str(i) for i in ints)


def _unkey(s: str) -> tuple:
    try:
        return tuple(int(x) for x in s.split(","))
    except ValueError as exc:
        raise SchemaError(f"bad degree key {s!r}") from exc


def _need(d: dict, *keys):
    missing = [k for k in keys if k not in d]
    if missing:
        raise SchemaError(f"missing field(s) {missing}")


# ------------------------------------------------------------ to payload


def to_payload(obj) -> dict:
    if isinstance(obj, al.DGAlgebra):
        out = to_payload(obj.complex)
        out["mult"] = {_key(p, q): _m(m) for (p, q), m in sorted(obj.mult.items())}
        out["unit"] = _v(obj.unit)
        return out
    if isinstance(obj, al.SimplicialRing):
        out = to_payload(obj.group)
        out["mult"] = [_m(m) for m in obj.mult]
        out["unit"] = [_v(u) for u in obj.unit]
        return out
    if isinstance(obj, md.DGModule):
        out = to_payload(obj.complex)
        out["act"] = {_key(p, q): _m(m) for (p, q), m in sorted(obj.act.items())}
        out["ring"] = content_hash(to_payload(obj.ring))
        return out
    if isinstance(obj, md.SimplicialModule):
        out = to_payload(obj.group)
        out["act"] = [_m(m) for m in obj.act]
        out["ring"] = content_hash(to_payload(obj.ring))
        return out
    if isinstance(obj, PresentedComplex):
        out = {"ranks": list(obj.ranks), "diffs": [_m(d) for d in obj.diffs], "truncation": obj.T}
        out["relations"] = [_m(K) for K in obj.relations]
        return out
    if isinstance(obj, ChainComplex):
        return {"ranks": list(obj.ranks), "diffs": [_m(d) for d in obj.diffs], "truncation": obj.T}
    if isinstance(obj, SimplicialAbGroup):
        return {
            "ranks": list(obj.ranks),
            "faces": [[_m(m) for m in level] for level in obj.faces],
            "degens": [[_m(m) for m in level] for level in obj.degens],
            "truncation": obj.T,
        }
    if isinstance(obj, (ChainMap, SimplicialMap)):
        return {
            "source": to_payload(obj.source),
            "target": to_payload(obj.target),
            "components": [_m(m) for m in obj.components],
        }
    if isinstance(obj, en.ICategory):
        out = to_payload(obj.graph)
        out["comp"] = {
            _key(*idx): {_key(p, q): _m(m) for (p, q), m in sorted(parts.items())}
            for idx, parts in obj.comp.items()
        }
        out["units"] = {str(i): _v(u) for i, u in obj.units.items()}
        return out
    if isinstance(obj, en.IGraph):
        return {
            "objects": list(obj.objects),
            "entries": {_key(i, j): to_payload(C) for (i, j), C in obj.entries.items()},
        }
    raise TypeError(f"cannot serialize {type(obj).__name__}")


def dumps(obj) -> str:
    return canonical(to_payload(obj))


# ---------------------------------------------------------- from payload


def _complex(d: dict) -> ChainComplex:
    _need(d, "ranks", "diffs")
    ranks = d["ranks"]
    if "truncation" in d and d["truncation"] != len(ranks) - 1:
        raise SchemaError(f"truncation {d['truncation']} does not match {len(ranks)} ranks")
    diffs = [la.imat(m, ranks[n - 1], ranks[n]) for n, m in enumerate(d["diffs"], start=1)]
    if "relations" in d:
        rels = [la.imat(K, ranks[n], None) if K else la.zeros(ranks[n], 0) for n, K in enumerate(d["relations"])]
        return PresentedComplex(ranks, diffs, rels)
    return ChainComplex(ranks, diffs)


def _simplicial(d: dict) -> SimplicialAbGroup:
    _need(d, "ranks", "faces", "degens")
    ranks = d["ranks"]
    if "truncation" in d and d["truncation"] != len(ranks) - 1:
        raise SchemaError(f"truncation {d['truncation']} does not match {len(ranks)} ranks")
    faces = [[la.imat(m, ranks[n - 1], ranks[n]) for m in level] if n else [] for n, level in enumerate(d["faces"])]
    degens = [[la.imat(m, ranks[n + 1], ranks[n]) for m in level] for n, level in enumerate(d["degens"])]
    return SimplicialAbGroup(ranks, faces, degens)


def kind(d: dict) -> str:
    if not isinstance(d, dict):
        raise SchemaError("payload must be a JSON object")
    if "objects" in d and "entries" in d:
        return "category" if "comp" in d else "graph"
    if "source" in d and "target" in d and "components" in d:
        return "simplicial-map" if "faces" in d["source"] else "chain-map"
    if "ranks" in d and "faces" in d:
        if "act" in d:
            return "simplicial-module"
        return "simplicial-ring" if "mult" in d else "simplicial"
    if "ranks" in d and "diffs" in d:
        if "act" in d:
            return "dg-module"
        return "dga" if "mult" in d else "complex"
    raise SchemaError(f"unrecognized payload with keys {sorted(d)}")


def from_payload(d: dict, rings: Optional[dict] = None):
    """Build and validate the object; ``rings`` maps content hashes to ring objects."""
    k = kind(d)
    if k == "complex":
        return _complex(d)
    if k == "simplicial":
        return _simplicial(d)
    if k == "dga":
        C = _complex(d)
        mult = {_unkey(s): m for s, m in d["mult"].items()}
        return al.DGAlgebra(C, mult, [[x] for x in d["unit"]] if C.rank(0) else la.zeros(0, 1))
    if k == "simplicial-ring":
        A = _simplicial(d)
        return al.SimplicialRing(A, d["mult"], [[[x] for x in u] for u in d["unit"]])
    if k in ("dg-module", "simplicial-module"):
        _need(d, "ring")
        if not rings or d["ring"] not in rings:
            raise SchemaError(f"module refers to ring {d['ring'][:12]}... which was not supplied")
        R = rings[d["ring"]]
        if k == "dg-module":
            return md.DGModule(R, _complex(d), {_unkey(s): m for s, m in d["act"].items()})
        return md.SimplicialModule(R, _simplicial(d), d["act"])
    if k in ("chain-map", "simplicial-map"):
        src, tgt = from_payload(d["source"]), from_payload(d["target"])
        cls = ChainMap if k == "chain-map" else SimplicialMap
        return cls(src, tgt, d["components"])
    if k in ("graph", "category"):
        objects = d["objects"]
        names = {str(o): o for o in objects}

        def obj(s):
            if s not in names:
                raise SchemaError(f"unknown object {s!r}")
            return names[s]

        entries = {}
        for s, C in d["entries"].items():
            parts = s.split(",")
            if len(parts) != 2:
                raise SchemaError(f"bad entry key {s!r}")
            entries[(obj(parts[0]), obj(parts[1]))] = _complex(C)
        G = en.IGraph(objects, entries)
        if k == "graph":
            return G
        comp = {}
        for s, parts in d["comp"].items():
            idx = tuple(obj(x) for x in s.split(","))
            if len(idx) != 3:
                raise SchemaError(f"bad composition key {s!r}")
            comp[idx] = {_unkey(pq): m for pq, m in parts.items()}
        units = {obj(s): [[x] for x in u] for s, u in d["units"].items()}
        return en.ICategory(G, comp, units)
    raise SchemaError(k)  # pragma: no cover


def loads(text: str, rings: Optional[dict] = None):
    try:
        d = json.loads(text)
    except json.JSONDecodeError as exc:
        raise SchemaError(f"not JSON: {exc}") from exc
    return from_payload(d, rings)
