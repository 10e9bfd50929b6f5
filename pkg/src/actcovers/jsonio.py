"""JSON encoding and decoding for the document formats the CLI accepts.

Field orders are fixed so that serialized documents are byte-stable:
monoids are {"elements", "identity", "table"}, acts are {"monoid",
"elements", "action"} where "monoid" may be an inline document or a
path string, congruences are {"monoid", "classes"}, and systems are
{"nodes", "order", "acts", "arrows"} with arrow keys "i,j".
"""

from __future__ import annotations

import json
from pathlib import Path
from typing import Union

from .acts import Act, ActMap, RightCongruence, congruence_from_partition
from .colimit import DirectedSystem, make_system
from .covers import CoverReport
from .flatness import FlatnessReport
from .monoid import Monoid, build_from_table


def monoid_to_doc(m: Monoid) -> dict:
    return {
        "elements": list(m.elements),
        "identity": 0,
        "table": [list(row) for row in m.table],
    }


def monoid_from_doc(doc: dict) -> Monoid:
    if not isinstance(doc, dict) or "table" not in doc:
        raise ValueError("monoid document needs a 'table' field")
    elements = doc.get("elements")
    if elements is None:
        elements = [f"s{i}" for i in range(len(doc["table"]))]
    if doc.get("identity", 0) != 0:
        raise ValueError("identity must sit at index 0")
    return build_from_table([str(e) for e in elements],
                            [list(row) for row in doc["table"]])


def act_to_doc(a: Act) -> dict:
    return {
        "monoid": monoid_to_doc(a.monoid),
        "elements": list(a.elements),
        "action": [list(row) for row in a.action],
    }


def _resolve_monoid(field, base: Union[Path, None]) -> Monoid:
    if isinstance(field, str):
        path = Path(field)
        if base is not None and not path.is_absolute():
            path = base / path
        return monoid_from_doc(json.loads(path.read_text()))
    return monoid_from_doc(field)


def act_from_doc(doc: dict, base: Union[Path, None] = None) -> Act:
    if not isinstance(doc, dict) or "action" not in doc:
        raise ValueError("act document needs an 'action' field")
    m = _resolve_monoid(doc["monoid"], base)
    elements = doc.get("elements")
    if elements is None:
        elements = [f"a{i}" for i in range(len(doc["action"]))]
    return Act(m, tuple(str(e) for e in elements),
               tuple(tuple(row) for row in doc["action"]))


def congruence_to_doc(c: RightCongruence) -> dict:
    return {
        "monoid": monoid_to_doc(c.monoid),
        "classes": [list(k) for k in c.classes],
    }


def congruence_from_doc(doc: dict, base: Union[Path, None] = None) -> RightCongruence:
    m = _resolve_monoid(doc["monoid"], base)
    return congruence_from_partition(m, [tuple(k) for k in doc["classes"]])


def system_to_doc(system: DirectedSystem) -> dict:
    return {
        "nodes": list(system.nodes),
        "order": sorted([list(p) for p in system.order]),
        "acts": {str(i): act_to_doc(system.acts[i]) for i in system.nodes},
        "arrows": {
            f"{i},{j}": list(f.image)
            for (i, j), f in sorted(system.arrows.items())
        },
    }


def system_from_doc(doc: dict, base: Union[Path, None] = None) -> DirectedSystem:
    for field in ("nodes", "acts", "arrows"):
        if field not in doc:
            raise ValueError(f"system document needs a {field!r} field")
    nodes = [str(n) for n in doc["nodes"]]
    acts = {str(k): act_from_doc(v, base) for k, v in doc["acts"].items()}
    arrows = {}
    for key, image in doc["arrows"].items():
        i, j = (part.strip() for part in str(key).split(","))
        arrows[(i, j)] = ActMap(acts[i], acts[j], tuple(image))
    order = [tuple(p) for p in doc.get("order", [])]
    order += [pair for pair in arrows if pair not in order]
    return make_system(nodes, order, acts, arrows)


def flatness_report_to_doc(report: FlatnessReport) -> dict:
    witness = report.p_witness if report.p_witness is not None else report.e_witness
    return {
        "P": report.condition_p,
        "E": report.condition_e,
        "strongly_flat": report.strongly_flat,
        "witness": list(witness) if witness is not None else None,
    }


def cover_report_to_doc(report: CoverReport) -> dict:
    return {
        "kind": report.kind,
        "verdict": report.verdict,
        "witness": list(report.witness) if report.witness is not None else None,
    }


def load_document(path: Union[str, Path]) -> dict:
    text = Path(path).read_text()
    doc = json.loads(text)
    if not isinstance(doc, dict):
        raise ValueError("top-level JSON value must be an object")
    return doc


def dump_canonical(doc) -> str:
    return json.dumps(doc, indent=2, sort_keys=False) + "\n"
