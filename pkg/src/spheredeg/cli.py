"""Command-line front end.

Exit codes: 0 success, 1 suite failure or filler failure, 2 usage or schema
error, 3 resource limit. Primary output goes to ``--out`` (written
atomically) or stdout; a JSON run summary with timings goes to stderr, so
stdout and output files are byte-deterministic.
"""
from __future__ import annotations

import argparse
import json
import sys
import time
from dataclasses import dataclass, field

from . import io as sio
from .enumeration import SUITES, census_rows, enumerate_types, verify_suite
from .errors import FillerFailure, InvalidDiskMapError, ResourceLimitError, SchemaError
from .simplicial import label_key, reduced_homology

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_RESOURCE = 0, 1, 2, 3


@dataclass
class RunReport:
    exit_status: int = EXIT_OK
    summary: dict = field(default_factory=dict)
    artifacts: list = field(default_factory=list)


def _emit(text: str, out: str | None, report: RunReport, stdout) -> None:
    if out:
        sio.write_atomic(out, text)
        report.artifacts.append(out)
    else:
        stdout.write(text)


def _cmd_enumerate(args, report, stdout):
    graphs = enumerate_types(n=args.n, d=args.max_degree, include_empty=args.include_empty,
                             allow_large=args.allow_large)
    if args.format == "csv":
        text = sio.census_csv(census_rows(args.n, args.max_degree, graphs))
    elif args.format == "dot":
        text = "".join(sio.graph_to_dot(g, f"T{i}") for i, g in enumerate(graphs))
    else:
        text = sio.dumps(sio.census_to_dict(args.n, args.max_degree, graphs))
    _emit(text, args.out, report, stdout)
    report.summary.update(n=args.n, d=args.max_degree, count=len(graphs))


def _cmd_verify(args, report, stdout):
    rep = verify_suite(args.suite, args.n_max, args.d_max, allow_large=args.allow_large)
    _emit(sio.dumps(rep.to_dict()), args.out, report, stdout)
    report.summary.update(rep.to_dict(with_duration=True))
    report.summary.pop("counterexamples")
    report.summary["counterexample_count"] = len(rep.counterexamples)
    if not rep.passed:
        report.exit_status = EXIT_FAIL


def _cmd_homology(args, report, stdout):
    K = sio.complex_from_dict(sio.load_json(args.input), args.input)
    profile = reduced_homology(K)
    _emit(sio.dumps(sio.homology_to_dict(profile)), args.out, report, stdout)
    report.summary.update(faces=sum(K.f_vector()), dim=K.dim)


def _failure_payload(exc: FillerFailure) -> dict:
    inst = exc.instance or {}
    payload: dict = {"error": "filler-failure", "message": str(exc), "trace": sio.trace_to_list(exc.trace)}
    if "sphere" in inst:
        payload["sphere"] = sio.complex_to_dict(inst["sphere"])
        payload["target"] = sio.complex_to_dict(inst["target"])
        payload["map"] = [[k, inst["map"][k]] for k in sorted(inst["map"], key=label_key)]
    return payload


def _cmd_surgery(args, report, stdout):
    from .surgery import FILLERS, surgery_descent

    F = sio.filtration_from_dict(sio.load_json(args.filtration), args.filtration)
    f = sio.diskmap_from_dict(sio.load_json(args.disk_map), F, args.disk_map)
    try:
        result = surgery_descent(f, args.d, FILLERS[args.filler])
    except FillerFailure as exc:
        _emit(sio.dumps(_failure_payload(exc)), args.out, report, stdout)
        report.exit_status = EXIT_FAIL
        report.summary.update(error="filler-failure", steps=len(exc.trace))
        return
    doc = {"disk_map": sio.diskmap_to_dict(result.disk_map), "trace": sio.trace_to_list(result.trace)}
    _emit(sio.dumps(doc), args.out, report, stdout)
    if args.trace:
        sio.write_atomic(args.trace, sio.dumps(doc["trace"]))
        report.artifacts.append(args.trace)
    report.summary.update(steps=len(result.trace), final_max_degree=result.disk_map.max_image_degree())


def _load_any(path):
    doc = sio.load_json(path)
    if isinstance(doc, dict) and "graphs" in doc:
        graphs = [sio.graph_from_dict(g, f"{path}/graphs/{i}") for i, g in enumerate(doc["graphs"])]
        summ = doc.get("summary", {})
        return "census", (summ.get("n"), summ.get("d"), graphs)
    if isinstance(doc, dict) and "vertices" in doc:
        return "graph", sio.graph_from_dict(doc, path)
    if isinstance(doc, dict) and "deg" in doc:
        return "filtration", sio.filtration_from_dict(doc, path)
    if isinstance(doc, dict) and "facets" in doc:
        return "complex", sio.complex_from_dict(doc, path)
    raise SchemaError("unrecognised document (expected graph, census, complex or filtration)", path)


def _cmd_export(args, report, stdout):
    kind, obj = _load_any(args.input)
    fmt = args.format
    if kind == "graph":
        text = sio.graph_to_dot(obj) if fmt == "dot" else sio.dumps(sio.graph_to_dict(obj)) if fmt == "json" else None
    elif kind == "census":
        n, d, graphs = obj
        if fmt == "dot":
            text = "".join(sio.graph_to_dot(g, f"T{i}") for i, g in enumerate(graphs))
        elif fmt == "csv":
            text = sio.census_csv(census_rows(n, d, graphs))
        else:
            text = sio.dumps(sio.census_to_dict(n, d, graphs))
    elif kind == "filtration":
        text = sio.dumps(sio.filtration_to_dict(obj)) if fmt == "json" else None
    else:
        text = sio.dumps(sio.complex_to_dict(obj)) if fmt == "json" else None
    if text is None:
        raise SchemaError(f"cannot export a {kind} as {fmt}", args.input)
    _emit(text, args.out, report, stdout)
    report.summary.update(kind=kind, format=fmt)


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="spheredeg", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    e = sub.add_parser("enumerate", help="census of dual-graph types")
    e.add_argument("--n", type=int, required=True)
    e.add_argument("--max-degree", "--d", dest="max_degree", type=int, required=True)
    e.add_argument("--include-empty", action="store_true")
    e.add_argument("--format", choices=("json", "csv", "dot"), default="json")

    v = sub.add_parser("verify", help="run an exhaustive verification suite")
    v.add_argument("--suite", choices=SUITES, required=True)
    v.add_argument("--n-max", type=int, required=True)
    v.add_argument("--d-max", type=int, required=True)

    h = sub.add_parser("homology", help="reduced integral homology of a complex")
    h.add_argument("--in", dest="input", required=True)

    s = sub.add_parser("surgery", help="run the star-replacement descent")
    s.add_argument("--filtration", required=True)
    s.add_argument("--disk-map", required=True)
    s.add_argument("--d", type=int, required=True)
    s.add_argument("--filler", choices=("auto", "star", "path", "disk"), default="auto")
    s.add_argument("--trace", help="also write the trace alone to this path")

    x = sub.add_parser("export", help="convert between formats")
    x.add_argument("--in", dest="input", required=True)
    x.add_argument("--format", choices=("json", "dot", "csv"), required=True)

    for q in (e, v, h, s, x):
        q.add_argument("--out")
    for q in (e, v):
        q.add_argument("--allow-large", action="store_true", help="lift the n + d cap")
    return p


_COMMANDS = {
    "enumerate": _cmd_enumerate,
    "verify": _cmd_verify,
    "homology": _cmd_homology,
    "surgery": _cmd_surgery,
    "export": _cmd_export,
}


def run(argv=None, stdout=None) -> RunReport:
    stdout = stdout or sys.stdout
    report = RunReport()
    try:
        args = build_parser().parse_args(argv)
    except SystemExit as exc:
        report.exit_status = EXIT_OK if exc.code == 0 else EXIT_USAGE
        return report
    report.summary["command"] = args.command
    t0 = time.perf_counter()
    try:
        _COMMANDS[args.command](args, report, stdout)
    except ResourceLimitError as exc:
        report.exit_status = EXIT_RESOURCE
        report.summary["error"] = str(exc)
    except (SchemaError, InvalidDiskMapError, ValueError, OSError) as exc:
        report.exit_status = EXIT_USAGE
        report.summary["error"] = str(exc)
    report.summary["seconds"] = round(time.perf_counter() - t0, 6)
    return report


def main(argv=None) -> int:
    report = run(argv)
    if report.summary:
        sys.stderr.write(json.dumps({"exit": report.exit_status, **report.summary,
                                     "artifacts": report.artifacts}, sort_keys=True) + "\n")
    return report.exit_status


if __name__ == "__main__":
    sys.exit(main())
