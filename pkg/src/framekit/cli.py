"""Command-line front end: gen, analyze, extract, select, verify-lemmas, sweep.

Exit codes: 0 success, 1 a verification failed, 2 malformed input or violated
precondition.  Errors go to stderr as single-line JSON diagnostics.
"""
from __future__ import annotations

import argparse
import csv
import json
import sys
from pathlib import Path

import numpy as np

from . import serialization as ser
from .core import (
    canonical_dual_reconstruct,
    check_counting_lemmas,
    frame_report,
    power_transform,
    random_unit_vector,
)
from .errors import FramekitError, SchemaError
from .extraction import extract_biorthogonal, extract_frame
from .gallery import generate
from .metrics import basis_metrics
from .selection import select_exhaustive, select_greedy

VERIFY_TOLERANCE = 1e-9
VERIFY_PROBES = 10
VERIFY_SEED = 0

SWEEP_HEADER = [
    "swept_name",
    "swept_value",
    "dim",
    "count",
    "mode",
    "eps",
    "c",
    "delta",
    "target",
    "subset_size",
    "coverage",
    "rounds",
    "stop_reason",
    "riesz_constant",
    "theoretical_bound",
]


def _diagnostic(kind: str, message: str) -> None:
    sys.stderr.write(json.dumps({"error": kind, "message": message}) + "\n")


def _load_spec_argument(value: str) -> dict:
    path = Path(value)
    if path.exists():
        return ser._read_json(path)
    text = value.strip()
    if text.startswith("{"):
        try:
            return json.loads(text)
        except json.JSONDecodeError as exc:
            raise SchemaError(f"inline spec: invalid JSON: {exc.msg}") from exc
    raise SchemaError(f"spec {value!r} is neither an existing file nor inline JSON")


def _cmd_gen(args) -> int:
    spec = ser.gallery_spec_from_json(_load_spec_argument(args.spec))
    system = generate(spec)
    ser.save_system(system, args.out)
    print(json.dumps({"written": str(args.out), "dim": system.dim, "count": system.count}))
    return 0


def _cmd_analyze(args) -> int:
    system = ser.load_system(args.infile)
    report = frame_report(system)
    metrics = basis_metrics(system)
    print(
        ser.dumps(
            {
                "v": ser.SCHEMA_VERSION,
                "frame_report": ser.report_to_json(report),
                "basis_metrics": ser.metrics_to_json(metrics),
            }
        ),
        end="",
    )
    return 0


def _cmd_extract(args) -> int:
    system = ser.load_system(args.infile)
    if args.mode == "biorthogonal":
        trace = extract_biorthogonal(system, args.eps, args.c)
    else:
        trace = extract_frame(system, args.eps, args.c, args.delta)
    ser.save_trace(trace, args.out)
    print(
        json.dumps(
            {
                "written": str(args.out),
                "subset_size": len(trace.final_subset),
                "riesz_constant": ser._encode_scalar(trace.final_riesz_constant),
                "stop_reason": trace.stop_reason,
            }
        )
    )
    return 0


def _cmd_select(args) -> int:
    system = ser.load_system(args.infile)
    if args.method == "exhaustive":
        result = select_exhaustive(system, args.size)
    else:
        result = select_greedy(system, args.size)
    print(ser.dumps(ser.selection_to_json(result)), end="")
    return 0


def _run_verifications(system, canonical: bool) -> list[dict]:
    checks: list[dict] = []

    def record(name: str, ok: bool, value: float) -> None:
        checks.append({"name": name, "ok": bool(ok), "value": ser._encode_scalar(value)})

    slacks = check_counting_lemmas(system)
    record("dimension_slack", slacks.dimension_slack >= -VERIFY_TOLERANCE, slacks.dimension_slack)
    record(
        "cardinality_slack",
        slacks.cardinality_slack >= -VERIFY_TOLERANCE,
        slacks.cardinality_slack,
    )
    rng = np.random.default_rng(VERIFY_SEED)
    worst_recon = 0.0
    worst_energy = 0.0
    for _ in range(VERIFY_PROBES):
        probe = random_unit_vector(system.dim, rng)
        dual = canonical_dual_reconstruct(system, probe)
        worst_recon = max(worst_recon, float(np.linalg.norm(dual.reconstruction - probe)))
        energy = float(np.sum(np.abs(dual.coefficients) ** 2))
        worst_energy = max(
            worst_energy,
            abs(dual.parseval_scalar - energy) / max(1.0, abs(dual.parseval_scalar)),
        )
    record("dual_reconstruction", worst_recon <= VERIFY_TOLERANCE, worst_recon)
    record("dual_energy_identity", worst_energy <= VERIFY_TOLERANCE, worst_energy)
    if canonical:
        tight = frame_report(power_transform(system, 0.0), VERIFY_TOLERANCE)
        gap = tight.upper_bound - tight.lower_bound
        record("canonical_tightness", tight.is_tight, gap)
    return checks


def _cmd_verify(args) -> int:
    system = ser.load_system(args.infile)
    checks = _run_verifications(system, args.canonical)
    ok = all(c["ok"] for c in checks)
    print(ser.dumps({"v": ser.SCHEMA_VERSION, "ok": ok, "checks": checks}), end="")
    return 0 if ok else 1


def _sweep_rows(plan: dict):
    for field in ("generator", "sweep", "extract", "out"):
        if field not in plan:
            raise SchemaError(f"sweep plan: field {field!r} missing")
    sweep = plan["sweep"]
    if not isinstance(sweep, dict) or "name" not in sweep or "values" not in sweep:
        raise SchemaError("sweep plan: 'sweep' needs 'name' and 'values'")
    values = sweep["values"]
    if not isinstance(values, list) or not values:
        raise SchemaError("sweep plan: 'values' must be a nonempty list")
    name = sweep["name"]
    extract_cfg = plan["extract"]
    mode = extract_cfg.get("mode", "frame")
    eps = float(extract_cfg.get("eps", 0.25))
    c = float(extract_cfg.get("c", 0.1))
    delta = extract_cfg.get("delta")
    seed = int(plan.get("seed", 0))
    try:
        ordered = sorted(values)
    except TypeError:
        ordered = list(values)
    for value in ordered:
        doc = dict(plan["generator"])
        doc[name] = value
        if doc.get("kind") == "randomFrame":
            doc.setdefault("seed", seed)
        system = generate(ser.gallery_spec_from_json(doc))
        if mode == "biorthogonal":
            trace = extract_biorthogonal(system, eps, c)
            bound = trace.parameters.get("theoretical_bound")
        else:
            trace = extract_frame(system, eps, c, delta)
            bound = None
        row = {
            "swept_name": name,
            "swept_value": value,
            "dim": system.dim,
            "count": system.count,
            "mode": mode,
            "eps": repr(eps),
            "c": repr(c),
            "delta": repr(trace.parameters.get("delta")) if mode == "frame" else "",
            "target": trace.parameters["target"],
            "subset_size": len(trace.final_subset),
            "coverage": repr(len(trace.final_subset) / trace.parameters["total"]),
            "rounds": len(trace.rounds),
            "stop_reason": trace.stop_reason,
            "riesz_constant": repr(trace.final_riesz_constant),
            "theoretical_bound": "" if bound is None else repr(bound),
        }
        yield row


def _cmd_sweep(args) -> int:
    plan = ser._read_json(args.plan)
    if not isinstance(plan, dict):
        raise SchemaError("sweep plan must be a JSON object")
    out = Path(plan["out"]) if "out" in plan else None
    rows = list(_sweep_rows(plan))
    if out is None:
        raise SchemaError("sweep plan: field 'out' missing")
    with out.open("w", newline="") as handle:
        writer = csv.DictWriter(handle, fieldnames=SWEEP_HEADER, lineterminator="\n")
        writer.writeheader()
        writer.writerows(rows)
    print(json.dumps({"written": str(out), "rows": len(rows)}))
    return 0


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="framekit",
        description="Finite frame analysis: generators, spectral reports, subset extraction.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_gen = sub.add_parser("gen", help="write a vector-system file from a gallery spec")
    p_gen.add_argument("--spec", required=True, help="path to a spec JSON file, or inline JSON")
    p_gen.add_argument("--out", required=True, help="output path for the system file")
    p_gen.set_defaults(func=_cmd_gen)

    p_an = sub.add_parser("analyze", help="print frame report and basis metrics as JSON")
    p_an.add_argument("--in", dest="infile", required=True)
    p_an.set_defaults(func=_cmd_analyze)

    p_ex = sub.add_parser("extract", help="run subset extraction and write the trace")
    p_ex.add_argument("--in", dest="infile", required=True)
    p_ex.add_argument("--mode", choices=("biorthogonal", "frame"), required=True)
    p_ex.add_argument("--eps", type=float, required=True)
    p_ex.add_argument("--c", type=float, default=0.1)
    p_ex.add_argument("--delta", type=float, default=None)
    p_ex.add_argument("--out", required=True)
    p_ex.set_defaults(func=_cmd_extract)

    p_sel = sub.add_parser("select", help="print the best subset of a given size")
    p_sel.add_argument("--in", dest="infile", required=True)
    p_sel.add_argument("--size", type=int, required=True)
    p_sel.add_argument("--method", choices=("exhaustive", "greedy"), required=True)
    p_sel.set_defaults(func=_cmd_select)

    p_ver = sub.add_parser(
        "verify-lemmas",
        help="check the counting inequalities and the dual reconstruction identities",
    )
    p_ver.add_argument("--in", dest="infile", required=True)
    p_ver.add_argument("--canonical", action="store_true", help="also check the canonical tight transform")
    p_ver.set_defaults(func=_cmd_verify)

    p_sw = sub.add_parser("sweep", help="run a sweep plan and write one CSV row per value")
    p_sw.add_argument("--plan", required=True, help="path to the sweep plan JSON")
    p_sw.set_defaults(func=_cmd_sweep)
    return parser


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except SchemaError as exc:
        _diagnostic("SchemaError", str(exc))
        return 2
    except FramekitError as exc:
        _diagnostic(type(exc).__name__, str(exc))
        return 2
    except OSError as exc:
        _diagnostic("OSError", str(exc))
        return 2


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
