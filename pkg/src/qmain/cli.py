"""Command-line front end: batch analysis, atlas emission, verification runs.

Exit codes: 0 success, 1 usage or I/O problem, 2 theorem violation or oracle
failure.  Machine output is JSON lines on stdout; graphs travel as graph6.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from importlib import resources
from typing import Iterator, Optional

from . import families
from .criterion import UNIQUE, solve_ab
from .enumeration import enumerate_tricyclic, verify_characterization
from .families import FamilyBuildError
from .graph_core import (
    Graph,
    Graph6Error,
    GraphError,
    base,
    cyclomatic_number,
    graph6_decode,
    graph6_encode,
    is_connected,
    is_regular,
)
from .spectral import JacobiConvergenceError, exact_main_count, q_spectrum
from .structure import classify_base, two_main_checklist

_G6_HEADER = ">>graph6<<"


class _Parser(argparse.ArgumentParser):
    """argparse exits with status 2 on usage errors; this tool reserves 2 for
    theorem/oracle violations, so usage problems are downgraded to 1."""

    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(1, f"{self.prog}: error: {message}\n")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(
        prog="qmain",
        description="Decide and verify 'exactly two signless-Laplacian main "
        "eigenvalues' for small graphs.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("analyze", help="full per-graph records from graph6 lines")
    p.add_argument("file", nargs="?", help="input path (default: stdin)")
    p.add_argument("--pretty", action="store_true", help="indented JSON output")

    p = sub.add_parser("enumerate", help="tricyclic graphs of one order")
    p.add_argument("--n", type=int, required=True, help="vertex count")
    p.add_argument(
        "--verify",
        action="store_true",
        help="cross-check criterion, exact count and catalog on every order <= n",
    )
    p.add_argument("--jobs", type=int, default=1, help="parallel shards")
    p.add_argument("--force", action="store_true", help="override the order guard")
    p.add_argument("--emit-positives", metavar="PATH", help="write positive graph6 lines")

    p = sub.add_parser("family", help="catalog builders G1..G42")
    p.add_argument("--list", action="store_true", dest="list_table", help="print the catalog table")
    p.add_argument("--id", dest="family_id", help="catalog identifier, e.g. G3")
    p.add_argument("--params", help="comma-separated K=V builder parameters")
    p.add_argument("--emit", action="store_true", help="print graph6 line(s)")
    p.add_argument("--max-n", type=int, dest="max_n", help="emit all instances up to this order")

    p = sub.add_parser("spectrum", help="eigenvalue groups with main flags")
    p.add_argument("file", nargs="?", help="input path (default: stdin)")
    p.add_argument("--exact-only", action="store_true", help="skip the float eigensolve")

    return parser


# ---------------------------------------------------------------------------
# shared plumbing
# ---------------------------------------------------------------------------


def analysis_schema() -> dict:
    """The JSON schema every `analyze` record conforms to."""
    text = resources.files("qmain").joinpath("analysis_schema.json").read_text("utf-8")
    return json.loads(text)


def _input_lines(path: Optional[str]) -> Iterator[str]:
    if path is None:
        yield from sys.stdin
    else:
        with open(path, "r", encoding="utf-8") as fh:
            yield from fh


def _strip_line(line: str) -> str:
    text = line.strip()
    if text.startswith(_G6_HEADER):
        text = text[len(_G6_HEADER) :]
    return text


def _frac_json(x: Optional[Fraction]):
    if x is None:
        return None
    return int(x) if x.denominator == 1 else str(x)


def _group_json(rep) -> list[dict]:
    return [
        {"value": grp.value, "multiplicity": grp.multiplicity, "main": grp.is_main}
        for grp in rep.groups
    ]


# ---------------------------------------------------------------------------
# analyze
# ---------------------------------------------------------------------------


def _analysis_record(text: str) -> dict:
    try:
        g = graph6_decode(text)
    except Graph6Error as exc:
        return {"graph6": text, "error": {"message": str(exc), "offset": exc.offset}}
    except GraphError as exc:
        return {"graph6": text, "error": {"message": str(exc), "offset": None}}

    sol = solve_ab(g)
    connected = is_connected(g)
    record: dict = {
        "graph6": text,
        "n": g.n,
        "m": g.m,
        "connected": connected,
        "cyclomatic": cyclomatic_number(g) if connected else None,
        "regular": is_regular(g),
        "ab": {
            "kind": sol.kind,
            "a": _frac_json(sol.a),
            "b": _frac_json(sol.b),
            "integral": sol.integral,
            "degree": sol.degree,
        },
        "main_count": exact_main_count(g),
        "spectrum": None,
        "base_shape": None,
        "base_slots": None,
        "family": None,
        "family_params": None,
        "checklist": None,
    }
    try:
        record["spectrum"] = _group_json(q_spectrum(g))
    except JacobiConvergenceError:
        pass

    if connected and record["cyclomatic"] == 3:
        core, _ = base(g)
        try:
            shape = classify_base(core)
            record["base_shape"] = shape.shape_id
            record["base_slots"] = shape.slot_dict
        except GraphError:
            pass
        if g.n <= 64:
            match = families.match_family(g)
            if match is not None:
                record["family"] = match.id
                record["family_params"] = dict(match.param_dict)
        if sol.kind == UNIQUE:
            a = int(sol.a) if sol.integral else sol.a
            b = int(sol.b) if sol.integral else sol.b
            record["checklist"] = two_main_checklist(g, a, b)
    return record


def cmd_analyze(args) -> int:
    try:
        for line in _input_lines(args.file):
            text = _strip_line(line)
            if not text:
                continue
            record = _analysis_record(text)
            print(json.dumps(record, indent=2 if args.pretty else None))
    except OSError as exc:
        print(f"qmain analyze: {exc}", file=sys.stderr)
        return 1
    return 0


# ---------------------------------------------------------------------------
# enumerate
# ---------------------------------------------------------------------------


def cmd_enumerate(args) -> int:
    try:
        if args.verify:
            reports = verify_characterization(args.n, jobs=args.jobs, force=args.force)
        else:
            graphs = list(enumerate_tricyclic(args.n, jobs=args.jobs, force=args.force))
    except GraphError as exc:
        print(f"qmain enumerate: {exc}", file=sys.stderr)
        return 1

    if not args.verify:
        positives = []
        for g in graphs:
            print(graph6_encode(g))
            if args.emit_positives and solve_ab(g).kind == UNIQUE:
                positives.append(graph6_encode(g))
        if args.emit_positives:
            _write_lines(args.emit_positives, positives)
        return 0

    report = reports[-1]
    print(json.dumps(report.as_dict(), indent=2))
    if args.emit_positives:
        _write_lines(args.emit_positives, report.positives)
    bad = [r for r in reports if not r.ok]
    for r in bad:
        for g6 in (
            *r.equivalence_failures,
            *r.completeness_failures,
            *r.structure_failures,
        ):
            print(f"counterexample n={r.n}: {g6}", file=sys.stderr)
    return 2 if bad else 0


def _write_lines(path: str, lines) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        for line in lines:
            fh.write(line + "\n")


# ---------------------------------------------------------------------------
# family
# ---------------------------------------------------------------------------


def _parse_params(text: Optional[str]) -> dict:
    if not text:
        return {}
    out: dict = {}
    for part in text.split(","):
        if "=" not in part:
            raise GraphError(f"bad parameter {part!r}, want K=V")
        key, _, value = part.partition("=")
        key = key.strip()
        try:
            out[key] = int(value.strip())
        except ValueError:
            raise GraphError(f"parameter {key} must be an integer, got {value!r}") from None
    return out


def _translate_g42_params(params: dict) -> dict:
    """G42 is exposed both by pendant count k and by its (a, b) class."""
    if "a" not in params and "b" not in params:
        return params
    if "k" in params:
        raise GraphError("give G42 either k or (a, b), not both")
    extra = sorted(set(params) - {"a", "b"})
    if extra:
        raise GraphError(f"unknown G42 parameters {extra}")
    if "a" not in params or "b" not in params:
        raise GraphError("G42 needs both a and b (or just k)")
    a, b = params["a"], params["b"]
    if b != -3:
        raise GraphError("G42 has members only for b = -3 (pendant-load equation)")
    if a < 8:
        raise GraphError("G42 needs a >= 8")
    return {"k": a - 7}


def _sidecar(desc, g: Graph) -> dict:
    return {
        "id": desc.id,
        "params": dict(desc.param_dict),
        "a": desc.a,
        "b": desc.b,
        "n": g.n,
        "m": g.m,
    }


def _print_catalog_table() -> None:
    print(f"{'id':<5}{'a':>4}{'b':>5}{'n':>5}{'m':>5}  parameters")
    for fid in families.family_ids():
        params = families.minimal_params(fid)
        g = families.build_family(fid, params or None)
        desc = families.describe(fid, params or None)
        if params:
            shown = ",".join(f"{k}={v}" for k, v in sorted(params.items()))
            note = f"minimal {shown}"
        else:
            note = "-"
        print(f"{fid:<5}{desc.a:>4}{desc.b:>5}{g.n:>5}{g.m:>5}  {note}")


def _emit_instance(desc, g: Graph, emit_graph6: bool) -> None:
    if emit_graph6:
        print(graph6_encode(g))
    print(json.dumps(_sidecar(desc, g)))


def cmd_family(args) -> int:
    if not (args.list_table or args.family_id or args.max_n is not None):
        print("qmain family: need --list, --id or --max-n", file=sys.stderr)
        return 1
    try:
        if args.list_table:
            _print_catalog_table()
            return 0
        if args.max_n is not None:
            if args.max_n < 4:
                raise GraphError("--max-n must be at least 4")
            if args.params:
                raise GraphError("--params only applies to a single --id build")
            if args.family_id and args.family_id not in families.family_ids():
                raise GraphError(f"unknown family id {args.family_id!r}")
            for n in range(4, args.max_n + 1):
                for desc, g in families.enumerate_family_instances(n):
                    if args.family_id and desc.id != args.family_id:
                        continue
                    _emit_instance(desc, g, args.emit)
            return 0
        params = _parse_params(args.params)
        if args.family_id == "G42":
            params = _translate_g42_params(params)
        g = families.build_family(args.family_id, params or None)
        desc = families.describe(args.family_id, params or None)
        _emit_instance(desc, g, args.emit)
        return 0
    except FamilyBuildError as exc:
        print(f"qmain family: oracle failure: {exc}", file=sys.stderr)
        return 2
    except GraphError as exc:
        print(f"qmain family: {exc}", file=sys.stderr)
        return 1


# ---------------------------------------------------------------------------
# spectrum
# ---------------------------------------------------------------------------


def cmd_spectrum(args) -> int:
    try:
        for line in _input_lines(args.file):
            text = _strip_line(line)
            if not text:
                continue
            print(json.dumps(_spectrum_record(text, args.exact_only)))
    except OSError as exc:
        print(f"qmain spectrum: {exc}", file=sys.stderr)
        return 1
    return 0


def _spectrum_record(text: str, exact_only: bool) -> dict:
    try:
        g = graph6_decode(text)
    except Graph6Error as exc:
        return {"graph6": text, "error": {"message": str(exc), "offset": exc.offset}}
    except GraphError as exc:
        return {"graph6": text, "error": {"message": str(exc), "offset": None}}
    record = {"graph6": text, "n": g.n, "main_count": exact_main_count(g)}
    if not exact_only:
        try:
            record["groups"] = _group_json(q_spectrum(g))
        except JacobiConvergenceError as exc:
            record["groups"] = None
            record["error"] = {"message": str(exc), "offset": None}
    return record


# ---------------------------------------------------------------------------
# entry points
# ---------------------------------------------------------------------------


_HANDLERS = {
    "analyze": cmd_analyze,
    "enumerate": cmd_enumerate,
    "family": cmd_family,
    "spectrum": cmd_spectrum,
}


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    return _HANDLERS[args.command](args)


def main_entry() -> None:
    raise SystemExit(main())


if __name__ == "__main__":
    main_entry()
