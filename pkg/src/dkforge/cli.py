"""Command line entry point.

    dkforge <verb> [--in FILE ...] [--out FILE] [--truncation N] [--seed N] [--suite NAME]

Exit codes: 0 success, 1 a check failed, 2 bad usage or invalid input.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Optional

from . import algebra as al
from . import chain as ch
from . import doldkan as dk
from . import enriched as en
from . import serialize as io
from . import suites
from .simplicial import SimplicialAbGroup, tensor as simplicial_tensor

VERBS = (
    "normalize", "gamma", "shuffle", "aw", "homology", "gamma-ring",
    "normalize-ring", "tensor", "graph-tensor", "check",
)
ARITY = {"shuffle": 2, "aw": 2, "tensor": 2, "graph-tensor": 2}


class UsageError(Exception):
    pass


class Workspace:
    """Objects loaded from ``--in`` files, in order; rings are also indexed by content hash."""

    def __init__(self):
        self.objects: list = []
        self.rings: dict = {}

    def load(self, path: str):
        try:
            with open(path, encoding="utf-8") as fh:
                text = fh.read()
        except OSError as exc:
            raise UsageError(f"cannot read {path}: {exc.strerror}") from exc
        obj = io.loads(text, self.rings)
        if isinstance(obj, (al.DGAlgebra, al.SimplicialRing)):
            self.rings[io.content_hash(io.to_payload(obj))] = obj
        self.objects.append(obj)
        return obj


def _truncate(obj, T: Optional[int]):
    if T is None:
        return obj
    if T < 0 or T > obj.T:
        raise UsageError(f"--truncation {T} exceeds the stored truncation {obj.T}")
    return obj.truncate(T)


def _expect(obj, types, verb: str):
    if not isinstance(obj, types):
        raise UsageError(f"{verb} does not accept a {type(obj).__name__}")
    return obj


def compute(verb: str, objs: list, T: Optional[int]):
    """Run a computational verb; returns an object to serialize or a list of text lines."""
    need = ARITY.get(verb, 1)
    if len(objs) != need:
        raise UsageError(f"{verb} takes {need} --in file(s), got {len(objs)}")
    if verb == "graph-tensor":
        G, H = (_expect(o, en.IGraph, verb) for o in objs)
        out = en.graph_tensor(G, H)
        if T is not None:
            out = en.IGraph(out.objects, {k: _truncate(C, T) for k, C in out.entries.items()})
        return out
    if verb in ("gamma-ring", "normalize-ring"):
        R = objs[0]
        if verb == "gamma-ring":
            R = _expect(R, al.DGAlgebra, verb)
            return al.gamma_ring(R.truncate(T) if T is not None else R)
        A = _expect(R, al.SimplicialRing, verb)
        if T is not None:
            A = al.SimplicialRing(_truncate(A.group, T), A.mult[: T + 1], A.unit[: T + 1])
        return al.normalize_ring(A)
    objs = [_truncate(o, T) for o in objs]
    if verb == "normalize":
        return dk.normalize(_expect(objs[0], SimplicialAbGroup, verb)).complex
    if verb == "gamma":
        return dk.gamma(_expect(objs[0], ch.ChainComplex, verb)).group
    if verb in ("shuffle", "aw"):
        A, B = (_expect(o, SimplicialAbGroup, verb) for o in objs)
        return dk.normalized_shuffle(A, B) if verb == "shuffle" else dk.normalized_aw(A, B)
    if verb == "homology":
        X = objs[0]
        if isinstance(X, SimplicialAbGroup):
            X = dk.normalize(X).complex
        return ch.homology(_expect(X, ch.ChainComplex, verb)).lines()
    if verb == "tensor":
        A, B = objs
        if isinstance(A, SimplicialAbGroup) and isinstance(B, SimplicialAbGroup):
            return simplicial_tensor(A, B)
        if isinstance(A, ch.ChainComplex) and isinstance(B, ch.ChainComplex):
            return ch.tensor(A, B)
        raise UsageError("tensor needs two chain complexes or two simplicial groups")
    raise UsageError(f"unknown verb {verb!r}")  # pragma: no cover


def _emit(text: str, out: Optional[str]) -> None:
    if out:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="dkforge", description="Exact Dold–Kan computations and verification suites.")
    p.add_argument("verb", choices=VERBS)
    p.add_argument("--in", dest="inputs", action="append", default=[], metavar="FILE")
    p.add_argument("--out", metavar="FILE")
    p.add_argument("--truncation", type=int, metavar="N")
    p.add_argument("--seed", type=int, default=0, metavar="N")
    p.add_argument("--suite", metavar="NAME")
    p.add_argument("--cases", type=int, default=50, metavar="N", help="random cases per property (check only)")
    return p


def main(argv: Optional[list] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        if args.verb == "check":
            if args.suite not in suites.SUITES:
                raise UsageError(f"unknown suite {args.suite!r}; choose from {', '.join(sorted(suites.SUITES))}")
            T = 4 if args.truncation is None else args.truncation
            if T < 1:
                raise UsageError("--truncation must be at least 1")
            report = suites.run_suite(args.suite, seed=args.seed, T=T, cases=args.cases)
            _emit(json.dumps(report, indent=1, ensure_ascii=False, default=int) + "\n", args.out)
            return 0 if report["passed"] else 1
        ws = Workspace()
        objs = [ws.load(path) for path in args.inputs]
        result = compute(args.verb, objs, args.truncation)
        if isinstance(result, list):
            _emit("\n".join(result) + "\n", args.out)
        else:
            _emit(io.dumps(result) + "\n", args.out)
        return 0
    except (UsageError, io.SchemaError, ch.ValidationError) as exc:
        print(f"dkforge: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
