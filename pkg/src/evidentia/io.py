"""JSON and CSV formats.

Bundle document::

    {"ground": [...], "possibilities": {"A1": [...], ...},
     "regime": "closed" | "open_tbm",
     "bodies": [{"masses": [{"focal": ..., "mass": ...}, ...]}, ...]}

A focal is a list of possibility names (their intersection), an object
``{"elements": [...]}`` of ground labels, or the strings ``"theta"`` and
``"empty"``.  Masses are fraction strings (``"1/3"``, rational mode) or JSON
numbers (float mode); JSON integers fit either mode.  Mixing string and
float masses in one document is an error.

Genetic-code document::

    {"name": str, "ground": [codons], "amino_acids": {name: [codons]},
     "evidence": {"1": {"A": <body>, ...}, "2": {...}, "3": {...}}}

Output is deterministic: sorted keys, fractions in lowest terms, floats with
17 significant digits, LF line endings.
"""

from __future__ import annotations

import csv
import io
import json
import math
import os
from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Iterable

from . import errors
from .codon import CELLS, DecodingTrace, EvolutionTrajectory, GeneticCode, StatisticalProtein
from .core import EMPTY, THETA, BodyOfEvidence, Frame, Focal, Label, Regime, focal_sort_key, is_subset, make_boe, new_frame
from .entropy import EntropyReport, entropy
from .evaluation import EvalMode

RATIONAL = "rational"
FLOAT = "float"
ENV_NUMERIC = "EVIDENTIA_NUMERIC"


@dataclass(frozen=True)
class Bundle:
    frame: Frame
    regime: Regime
    bodies: tuple[BodyOfEvidence, ...]
    numeric: str


# ---------------------------------------------------------------- writing


def _encode(obj: Any, indent: int, level: int) -> str:
    pad = " " * (indent * (level + 1))
    end = " " * (indent * level)
    if isinstance(obj, dict):
        if not obj:
            return "{}"
        items = [f"{pad}{json.dumps(str(k))}: {_encode(obj[k], indent, level + 1)}" for k in sorted(obj)]
        return "{\n" + ",\n".join(items) + "\n" + end + "}"
    if isinstance(obj, (list, tuple)):
        if not obj:
            return "[]"
        items = [pad + _encode(v, indent, level + 1) for v in obj]
        return "[\n" + ",\n".join(items) + "\n" + end + "]"
    if isinstance(obj, Fraction):
        return json.dumps(str(obj))
    if isinstance(obj, float):
        if not math.isfinite(obj):
            raise ValueError(f"cannot serialize {obj}")
        text = format(obj, ".17g")
        return text if any(c in text for c in ".e") else text + ".0"
    return json.dumps(obj)


def dumps(obj: Any, indent: int = 2) -> str:
    """Deterministic JSON text with a trailing newline."""
    return _encode(obj, indent, 0) + "\n"


def format_number(x) -> str:
    if isinstance(x, Fraction):
        return str(x)
    if isinstance(x, float):
        return format(x, ".17g")
    return str(x)


def focal_to_json(frame: Frame, f: Focal):
    if isinstance(f, Label):
        return f.value
    holders = [name for name, mask in frame.possibilities if is_subset(f, mask)]
    for name in holders:
        if frame.possibility(name) == f:
            return [name]
    if holders and frame.meet_of(holders) == f:
        return holders
    return {"elements": list(frame.labels(f))}


def body_to_json(boe: BodyOfEvidence) -> dict:
    return {
        "masses": [
            {"focal": focal_to_json(boe.frame, f), "mass": boe.masses[f]}
            for f in sorted(boe.masses, key=focal_sort_key)
        ]
    }


def frame_to_json(frame: Frame) -> dict:
    return {
        "ground": list(frame.ground),
        "possibilities": {name: list(frame.labels(mask)) for name, mask in frame.possibilities},
    }


def bundle_to_json(frame: Frame, regime: Regime | str, bodies: Iterable[BodyOfEvidence], **extra) -> dict:
    doc = frame_to_json(frame)
    doc["regime"] = Regime(regime).value
    doc["bodies"] = [body_to_json(b) for b in bodies]
    doc.update(extra)
    return doc


def code_to_json(code: GeneticCode) -> dict:
    evidence: dict[str, dict] = {}
    for (pos, nt), body in code.evidence.items():
        evidence.setdefault(str(pos), {})[nt] = body_to_json(body)
    return {
        "name": code.name,
        "ground": list(code.frame.ground),
        "amino_acids": {name: list(code.frame.labels(mask)) for name, mask in code.frame.possibilities},
        "evidence": evidence,
    }


def entropy_to_json(report: EntropyReport) -> dict:
    return {
        "mode": report.mode.value,
        "total": report.total,
        "conflict_term": report.conflict_term,
        "ambiguity_term": report.ambiguity_term,
        "per_possibility": {
            name: {"bel": t.belief, "pl": t.plausibility, "conflict": t.conflict, "ambiguity": t.ambiguity}
            for name, t in report.per_possibility.items()
        },
    }


def protein_to_json(protein: StatisticalProtein) -> dict:
    return {
        "mrna": protein.mrna,
        "samples": protein.samples,
        "seed": protein.seed,
        "distribution": [
            {"protein": list(seq), "frequency": freq} for seq, freq in protein.distribution.items()
        ],
    }


def _csv_text(header: list[str], rows: list[list]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(header)
    for row in rows:
        w.writerow([format_number(v) for v in row])
    return buf.getvalue()


def trace_to_csv(trace: DecodingTrace) -> str:
    """One row per (arrival step, focal element of the cumulative body)."""
    names = list(trace.steps[0].evaluations)
    header = ["step", "position", "focal", "mass"]
    header += [f"bel_{n}" for n in names] + [f"pl_{n}" for n in names] + ["entropy"]
    rows = []
    for s in trace.steps:
        ent = entropy(s.cumulative, trace.mode).total
        bels = [s.evaluations[n].belief for n in names]
        pls = [s.evaluations[n].plausibility for n in names]
        for f in sorted(s.cumulative.masses, key=focal_sort_key):
            rows.append([s.time, s.position, s.cumulative.frame.describe(f), s.cumulative.masses[f], *bels, *pls, ent])
    return _csv_text(header, rows)


def trajectory_to_csv(traj: EvolutionTrajectory) -> str:
    """One row per proposal; step 0 is the initial code."""
    header = ["step", "cell", "move", "kind", "accepted", "entropy"]
    rows = [[0, "", "initial", "", 1, traj.initial_entropy]]
    for s in traj.steps:
        m = s.mutation
        rows.append([s.step, f"{m.position}{m.nucleotide}", m.describe(), m.kind, int(s.accepted), s.entropy])
    return _csv_text(header, rows)


# ---------------------------------------------------------------- reading


def _expect(cond: bool, path: str, message: str):
    if not cond:
        raise errors.SchemaError(path, message)


def _scan_numeric(doc: Any) -> set[str]:
    found: set[str] = set()

    def walk(node, key=None):
        if isinstance(node, dict):
            for k, v in node.items():
                walk(v, k)
        elif isinstance(node, list):
            for v in node:
                walk(v)
        elif key == "mass":
            if isinstance(node, str):
                found.add(RATIONAL)
            elif isinstance(node, float):
                found.add(FLOAT)

    walk(doc)
    return found


def numeric_mode(doc: Any, override: str | None = None) -> str:
    """Arithmetic mode for a document: env/override first, then its mass literals."""
    found = _scan_numeric(doc)
    if len(found) > 1:
        raise errors.SchemaError("$", "document mixes fraction strings and float masses")
    if override is None:
        override = os.environ.get(ENV_NUMERIC) or None
    if override is not None:
        if override not in (RATIONAL, FLOAT):
            raise errors.ValidationError(f"{ENV_NUMERIC} must be 'rational' or 'float', got {override!r}")
        return override
    return FLOAT if FLOAT in found else RATIONAL


def _parse_mass(value, path: str, numeric: str):
    if isinstance(value, bool):
        raise errors.SchemaError(path, "mass must be a number or a fraction string")
    if isinstance(value, str):
        try:
            q = Fraction(value.strip())
        except (ValueError, ZeroDivisionError):
            raise errors.SchemaError(path, f"cannot parse {value!r} as a fraction") from None
        return q if numeric == RATIONAL else float(q)
    if isinstance(value, (int, float)):
        if numeric == FLOAT:
            return float(value)
        return Fraction(value) if isinstance(value, int) else Fraction(repr(value))
    raise errors.SchemaError(path, "mass must be a number or a fraction string")


def _parse_focal(frame: Frame, value, path: str) -> Focal:
    if value == "theta":
        return THETA
    if value == "empty":
        return EMPTY
    try:
        if isinstance(value, list):
            _expect(all(isinstance(v, str) for v in value), path, "possibility names must be strings")
            mask = frame.meet_of(value)
        elif isinstance(value, dict) and set(value) == {"elements"}:
            _expect(isinstance(value["elements"], list), path, "'elements' must be a list")
            mask = frame.subset(value["elements"])
        else:
            raise errors.SchemaError(path, "focal must be a name list, {'elements': [...]}, 'theta' or 'empty'")
        if not mask:
            raise errors.SchemaError(path, "focal denotes the empty set; use 'empty' for conflict mass")
        return mask
    except errors.SchemaError:
        raise
    except errors.ValidationError as exc:
        raise errors.SchemaError(path, str(exc)) from None


def _parse_frame(doc: dict, path: str, poss_key: str) -> Frame:
    _expect(isinstance(doc.get("ground"), list), f"{path}.ground", "expected a list of labels")
    poss = doc.get(poss_key)
    _expect(isinstance(poss, dict), f"{path}.{poss_key}", "expected an object of label lists")
    for name, labels in poss.items():
        _expect(isinstance(labels, list), f"{path}.{poss_key}.{name}", "expected a list of labels")
    try:
        return new_frame(doc["ground"], poss)
    except errors.ValidationError as exc:
        raise errors.SchemaError(f"{path}.ground", str(exc)) from None


def parse_body(frame: Frame, doc: Any, path: str, regime: Regime, numeric: str) -> BodyOfEvidence:
    _expect(isinstance(doc, dict) and isinstance(doc.get("masses"), list), f"{path}.masses", "expected a list of masses")
    pairs = []
    for i, entry in enumerate(doc["masses"]):
        p = f"{path}.masses[{i}]"
        _expect(isinstance(entry, dict) and "focal" in entry and "mass" in entry, p, "expected {'focal', 'mass'}")
        pairs.append((_parse_focal(frame, entry["focal"], f"{p}.focal"), _parse_mass(entry["mass"], f"{p}.mass", numeric)))
    try:
        return make_boe(frame, pairs, regime)
    except errors.ValidationError as exc:
        raise type(exc)(f"{path}: {exc}") from None


def parse_bundle(doc: Any, numeric: str | None = None) -> Bundle:
    _expect(isinstance(doc, dict), "$", "expected an object")
    numeric = numeric_mode(doc, numeric)
    frame = _parse_frame(doc, "$", "possibilities")
    try:
        regime = Regime(doc.get("regime", "closed"))
    except ValueError:
        raise errors.SchemaError("$.regime", "expected 'closed' or 'open_tbm'") from None
    _expect(isinstance(doc.get("bodies"), list), "$.bodies", "expected a list of bodies")
    bodies = tuple(parse_body(frame, b, f"$.bodies[{i}]", regime, numeric) for i, b in enumerate(doc["bodies"]))
    return Bundle(frame, regime, bodies, numeric)


def parse_code(doc: Any, numeric: str | None = None) -> GeneticCode:
    _expect(isinstance(doc, dict), "$", "expected an object")
    numeric = numeric_mode(doc, numeric)
    frame = _parse_frame(doc, "$", "amino_acids")
    ev = doc.get("evidence")
    _expect(isinstance(ev, dict), "$.evidence", "expected an object keyed by position")
    cells = {}
    for pos, row in ev.items():
        _expect(pos in ("1", "2", "3") and isinstance(row, dict), f"$.evidence.{pos}", "positions are '1', '2', '3'")
        for nt, body in row.items():
            p = f"$.evidence.{pos}.{nt}"
            _expect(nt in "ACGU" and len(nt) == 1, p, "nucleotides are A, C, G, U")
            cells[(int(pos), nt)] = parse_body(frame, body, p, Regime.CLOSED, numeric)
    missing = [f"{p}{n}" for p, n in CELLS if (p, n) not in cells]
    _expect(not missing, "$.evidence", f"cells without evidence: {', '.join(missing)}")
    name = doc.get("name", "")
    _expect(isinstance(name, str), "$.name", "expected a string")
    try:
        return GeneticCode(frame, cells, name)
    except errors.ValidationError as exc:
        raise errors.SchemaError("$", str(exc)) from None


def _load(path: str) -> Any:
    try:
        with open(path, encoding="utf-8") as fh:
            return json.load(fh)
    except json.JSONDecodeError as exc:
        raise errors.SchemaError("$", f"invalid JSON: {exc}") from None
    except OSError as exc:
        raise errors.ValidationError(f"cannot read {path}: {exc.strerror}") from None


def load_bundle(path: str, numeric: str | None = None) -> Bundle:
    return parse_bundle(_load(path), numeric)


def load_code(path: str, numeric: str | None = None) -> GeneticCode:
    return parse_code(_load(path), numeric)
