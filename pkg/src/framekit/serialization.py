"""JSON serialization of systems, reports, metrics, selections and traces.

Documents carry a schema version field "v": 1.  Complex entries are written as
[re, im] pairs in column-major order, numbers at full double precision so a
round trip is bitwise exact.  Infinity is encoded as the string "inf", never
as a bare JSON-illegal Infinity token.
"""
from __future__ import annotations

import json
import math
from pathlib import Path

import numpy as np

from .core import FrameReport, VectorSystem
from .errors import BadParameter, SchemaError
from .extraction import ExtractionRound, ExtractionTrace
from .gallery import GALLERY_KINDS, GallerySpec
from .metrics import BasisMetrics
from .selection import SelectionResult

SCHEMA_VERSION = 1


def _encode_scalar(x: float):
    if math.isinf(x):
        return "inf" if x > 0 else "-inf"
    return float(x)


def _decode_scalar(x) -> float:
    if x == "inf":
        return math.inf
    if x == "-inf":
        return -math.inf
    if not isinstance(x, (int, float)) or isinstance(x, bool):
        raise SchemaError(f"expected a number or 'inf', got {x!r}")
    return float(x)


def dumps(doc) -> str:
    """Deterministic JSON text: sorted keys, newline-terminated."""
    return json.dumps(doc, sort_keys=True, separators=(",", ": ")) + "\n"


# ---------------------------------------------------------------------------
# VectorSystem


def system_to_json(system: VectorSystem) -> dict:
    pairs = []
    for i in range(system.count):
        for k in range(system.dim):
            z = system.columns[k, i]
            pairs.append([float(z.real), float(z.imag)])
    doc = {
        "v": SCHEMA_VERSION,
        "dim": system.dim,
        "count": system.count,
        "columns": pairs,
    }
    if system.labels is not None:
        doc["labels"] = list(system.labels)
    return doc


def _expect(doc: dict, field: str, kinds) -> object:
    if field not in doc:
        raise SchemaError(f"field {field!r}: missing")
    value = doc[field]
    if not isinstance(value, kinds) or isinstance(value, bool):
        raise SchemaError(f"field {field!r}: wrong type {type(value).__name__}")
    return value


def system_from_json(doc) -> VectorSystem:
    if not isinstance(doc, dict):
        raise SchemaError("system document must be a JSON object")
    if doc.get("v") != SCHEMA_VERSION:
        raise SchemaError(f"field 'v': expected {SCHEMA_VERSION}, got {doc.get('v')!r}")
    dim = _expect(doc, "dim", int)
    count = _expect(doc, "count", int)
    if dim < 1:
        raise SchemaError(f"field 'dim': must be >= 1, got {dim}")
    if count < 1:
        raise SchemaError(f"field 'count': must be >= 1, got {count}")
    pairs = _expect(doc, "columns", list)
    if len(pairs) != dim * count:
        raise SchemaError(
            f"field 'columns': expected {dim * count} [re, im] pairs, got {len(pairs)}"
        )
    cols = np.zeros((dim, count), dtype=np.complex128)
    for pos, pair in enumerate(pairs):
        if (
            not isinstance(pair, list)
            or len(pair) != 2
            or any(isinstance(x, bool) or not isinstance(x, (int, float)) for x in pair)
        ):
            raise SchemaError(f"field 'columns'[{pos}]: expected an [re, im] pair")
        cols[pos % dim, pos // dim] = complex(pair[0], pair[1])
    labels = doc.get("labels")
    if labels is not None:
        if not isinstance(labels, list) or not all(isinstance(x, str) for x in labels):
            raise SchemaError("field 'labels': expected a list of strings")
        labels = tuple(labels)
    try:
        return VectorSystem(cols, labels)
    except BadParameter as exc:
        raise SchemaError(str(exc)) from exc


def save_system(system: VectorSystem, path) -> None:
    Path(path).write_text(dumps(system_to_json(system)))


def load_system(path) -> VectorSystem:
    return system_from_json(_read_json(path))


def _read_json(path):
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise SchemaError(f"cannot read {path}: {exc}") from exc
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise SchemaError(f"{path}: invalid JSON at line {exc.lineno}: {exc.msg}") from exc


# ---------------------------------------------------------------------------
# reports, metrics, selections


def report_to_json(report: FrameReport) -> dict:
    return {
        "lower_bound": _encode_scalar(report.lower_bound),
        "upper_bound": _encode_scalar(report.upper_bound),
        "min_norm": _encode_scalar(report.min_norm),
        "max_norm": _encode_scalar(report.max_norm),
        "is_tight": report.is_tight,
        "is_spanning": report.is_spanning,
        "tolerance": report.tolerance,
    }


def metrics_to_json(metrics: BasisMetrics) -> dict:
    return {
        "riesz": _encode_scalar(metrics.riesz),
        "hilbertian": _encode_scalar(metrics.hilbertian),
        "besselian": _encode_scalar(metrics.besselian),
        "schauder": _encode_scalar(metrics.schauder),
        "separation": _encode_scalar(metrics.separation),
        "singular_values": [_encode_scalar(s) for s in metrics.singular_values],
    }


def selection_to_json(result: SelectionResult) -> dict:
    return {
        "v": SCHEMA_VERSION,
        "subset": list(result.subset),
        "certified_lower_bound": _encode_scalar(result.certified_lower_bound),
        "method": result.method,
        "target_size": result.target_size,
        "normalization_applied": result.normalization_applied,
    }


# ---------------------------------------------------------------------------
# extraction traces


def trace_to_json(trace: ExtractionTrace) -> dict:
    rounds = []
    for rnd in trace.rounds:
        entry = {
            "round": rnd.index,
            "examined": list(rnd.examined),
            "residual_norms": [_encode_scalar(x) for x in rnd.residual_norms],
            "selected": list(rnd.selected),
            "certified_bound": _encode_scalar(rnd.certified_bound),
            "bt_target": rnd.bt_target,
            "normalized": rnd.normalized,
            "coverage": _encode_scalar(rnd.coverage),
        }
        if rnd.rule2_lower_bound is not None:
            entry["rule2_lower_bound"] = _encode_scalar(rnd.rule2_lower_bound)
        rounds.append(entry)
    parameters = {}
    for key, value in trace.parameters.items():
        if isinstance(value, float):
            parameters[key] = _encode_scalar(value)
        else:
            parameters[key] = value
    return {
        "v": SCHEMA_VERSION,
        "mode": trace.mode,
        "rounds": rounds,
        "final_subset": list(trace.final_subset),
        "final_riesz_constant": _encode_scalar(trace.final_riesz_constant),
        "stop_reason": trace.stop_reason,
        "parameters": parameters,
    }


def trace_from_json(doc) -> ExtractionTrace:
    if not isinstance(doc, dict):
        raise SchemaError("trace document must be a JSON object")
    if doc.get("v") != SCHEMA_VERSION:
        raise SchemaError(f"field 'v': expected {SCHEMA_VERSION}, got {doc.get('v')!r}")
    try:
        rounds = tuple(
            ExtractionRound(
                index=entry["round"],
                examined=tuple(entry["examined"]),
                residual_norms=tuple(_decode_scalar(x) for x in entry["residual_norms"]),
                selected=tuple(entry["selected"]),
                certified_bound=_decode_scalar(entry["certified_bound"]),
                bt_target=entry["bt_target"],
                normalized=entry["normalized"],
                coverage=_decode_scalar(entry["coverage"]),
                rule2_lower_bound=(
                    _decode_scalar(entry["rule2_lower_bound"])
                    if "rule2_lower_bound" in entry
                    else None
                ),
            )
            for entry in doc["rounds"]
        )
        parameters = {
            key: (_decode_scalar(value) if isinstance(value, str) and value in ("inf", "-inf") else value)
            for key, value in doc["parameters"].items()
        }
        return ExtractionTrace(
            mode=doc["mode"],
            rounds=rounds,
            final_subset=tuple(doc["final_subset"]),
            final_riesz_constant=_decode_scalar(doc["final_riesz_constant"]),
            stop_reason=doc["stop_reason"],
            parameters=parameters,
        )
    except (KeyError, TypeError) as exc:
        raise SchemaError(f"malformed trace document: {exc!r}") from exc


def save_trace(trace: ExtractionTrace, path) -> None:
    Path(path).write_text(dumps(trace_to_json(trace)))


def load_trace(path) -> ExtractionTrace:
    return trace_from_json(_read_json(path))


# ---------------------------------------------------------------------------
# gallery specs


def gallery_spec_from_json(doc) -> GallerySpec:
    if not isinstance(doc, dict):
        raise SchemaError("gallery spec must be a JSON object")
    kind = doc.get("kind")
    if kind not in GALLERY_KINDS:
        raise SchemaError(f"field 'kind': expected one of {GALLERY_KINDS}, got {kind!r}")
    params = {key: value for key, value in doc.items() if key not in ("kind", "v")}
    return GallerySpec(kind=kind, params=params)


def gallery_spec_to_json(spec: GallerySpec) -> dict:
    doc = {"v": SCHEMA_VERSION, "kind": spec.kind}
    doc.update(spec.params)
    return doc
