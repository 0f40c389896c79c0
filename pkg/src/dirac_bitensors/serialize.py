"""JSON documents for states, bitensor reports and verdicts.

Complex numbers are written as [re, im] pairs. Floats go through Python's
shortest round-trip repr, so a write/read cycle is lossless.
"""

from __future__ import annotations

import json
import math
from pathlib import Path
from typing import Any

import numpy as np

from .bitensors import BitensorSet
from .states import TwoParticleState


class DocumentError(ValueError):
    """A JSON document is malformed; the message names the offending field."""


def _pair(z: complex) -> list[float]:
    z = complex(z)
    return [float(z.real), float(z.imag)]


def _pairs(a) -> list:
    a = np.asarray(a)
    if a.ndim == 0:
        return _pair(a)
    return [_pairs(x) for x in a]


def state_to_dict(state: TwoParticleState) -> dict[str, Any]:
    return {"psi": _pairs(state.psi)}


def report_to_dict(bset: BitensorSet) -> dict[str, Any]:
    return {
        "I1": _pair(bset.i1),
        "I2": _pair(bset.i2),
        "I2A": _pair(bset.i2a),
        "I2B": _pair(bset.i2b),
        "KA": _pairs(bset.ka),
        "KB": _pairs(bset.kb),
        "LA": _pairs(bset.la),
        "LB": _pairs(bset.lb),
        "KAB": _pairs(bset.kab),
        "max_abs": bset.max_abs(),
    }


def _complex(entry, where: str) -> complex:
    re, im = _read_list(entry, 2, where)
    return complex(_read_number(re, where + "[0]"), _read_number(im, where + "[1]"))


def report_from_dict(doc) -> BitensorSet:
    if not isinstance(doc, dict):
        raise DocumentError("document root: expected a bitensor report object")
    for key in ("I1", "I2", "I2A", "I2B", "KA", "KB", "LA", "LB", "KAB"):
        if key not in doc:
            raise DocumentError(f"{key}: missing field")

    def vec(key):
        return np.array([_complex(e, f"{key}[{m}]") for m, e in enumerate(_read_list(doc[key], 4, key))])

    kab = np.array([
        [_complex(e, f"KAB[{m}][{n}]") for n, e in enumerate(_read_list(row, 4, f"KAB[{m}]"))]
        for m, row in enumerate(_read_list(doc["KAB"], 4, "KAB"))
    ])
    return BitensorSet(
        _complex(doc["I1"], "I1"), _complex(doc["I2"], "I2"),
        _complex(doc["I2A"], "I2A"), _complex(doc["I2B"], "I2B"),
        vec("KA"), vec("KB"), vec("LA"), vec("LB"), kab,
    )


def _read_number(value, where: str) -> float:
    if isinstance(value, bool) or not isinstance(value, (int, float)):
        raise DocumentError(f"{where}: expected a number, got {type(value).__name__}")
    if not math.isfinite(value):
        raise DocumentError(f"{where}: non-finite value")
    return float(value)


def _read_list(value, n: int, where: str) -> list:
    if not isinstance(value, list):
        raise DocumentError(f"{where}: expected a list, got {type(value).__name__}")
    if len(value) != n:
        raise DocumentError(f"{where}: expected {n} entries, got {len(value)}")
    return value


def state_from_dict(doc) -> TwoParticleState:
    if not isinstance(doc, dict):
        raise DocumentError("document root: expected an object with field 'psi'")
    if "psi" not in doc:
        raise DocumentError("psi: missing field")
    psi = np.empty((4, 4), dtype=np.complex128)
    rows = _read_list(doc["psi"], 4, "psi")
    for j, row in enumerate(rows):
        entries = _read_list(row, 4, f"psi[{j}]")
        for k, entry in enumerate(entries):
            where = f"psi[{j}][{k}]"
            psi[j, k] = _complex(entry, where)
    if not np.any(psi):
        raise DocumentError("psi: state matrix must be nonzero")
    return TwoParticleState(psi)


def dumps(doc: dict[str, Any]) -> str:
    """One top-level field per line, values compact."""
    fields = [f"  {json.dumps(k)}: {json.dumps(v)}" for k, v in doc.items()]
    return "{\n" + ",\n".join(fields) + "\n}\n"


def loads(text: str, source: str = "<input>") -> Any:
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise DocumentError(f"{source}: invalid JSON at line {exc.lineno}, column {exc.colno}: {exc.msg}") from exc


def write_state(state: TwoParticleState, path) -> None:
    Path(path).write_text(dumps(state_to_dict(state)))


def read_state(path) -> TwoParticleState:
    return state_from_dict(loads(Path(path).read_text(), str(path)))
