"""JSON and CSV wire formats.

State files: ``{"dims": [ints], "re": [[floats]], "im": [[floats]]}``
(row-major full square matrices).  POVM files: ``{"dim": int,
"elements": [matrix objects]}``.  Channel files: ``{"d_in": int,
"d_out": int, "kraus": [matrix objects]}``.  Floats round-trip
bit-exactly: Python's ``repr``/``json`` emit the shortest decimal that
recovers the same float64.

Structural problems raise :class:`SchemaError`; a well-formed document
whose payload fails a physics invariant raises the usual
:class:`InvariantViolation` family from the domain constructors.
"""

import json
import os
import tempfile

import numpy as np

from .errors import SchemaError
from .states import DensityMatrix, KrausChannel, Povm


def _require(cond: bool, msg: str) -> None:
    if not cond:
        raise SchemaError(msg)


def matrix_to_obj(m: np.ndarray) -> dict:
    m = np.asarray(m, dtype=complex)
    return {"re": m.real.tolist(), "im": m.imag.tolist()}


def matrix_from_obj(obj) -> np.ndarray:
    _require(isinstance(obj, dict), "matrix object must be a JSON object")
    _require("re" in obj and "im" in obj, 'matrix object needs "re" and "im"')
    try:
        re = np.asarray(obj["re"], dtype=float)
        im = np.asarray(obj["im"], dtype=float)
    except (TypeError, ValueError) as exc:
        raise SchemaError(f"matrix entries must be numbers: {exc}") from exc
    _require(re.ndim == 2 and im.shape == re.shape, '"re" and "im" must be equally-shaped 2-d arrays')
    return re + 1j * im


def state_to_obj(rho: DensityMatrix) -> dict:
    out = matrix_to_obj(rho.mat)
    return {"dims": list(rho.dims), "re": out["re"], "im": out["im"]}


def state_from_obj(obj) -> DensityMatrix:
    _require(isinstance(obj, dict), "state object must be a JSON object")
    _require("dims" in obj, 'state object needs "dims"')
    dims = obj["dims"]
    _require(
        isinstance(dims, list) and dims and all(isinstance(d, int) and d >= 1 for d in dims),
        '"dims" must be a non-empty list of positive integers',
    )
    mat = matrix_from_obj(obj)
    _require(mat.shape[0] == mat.shape[1], "state matrix must be square")
    _require(mat.shape[0] == int(np.prod(dims)), f'"dims" {dims} do not match matrix dimension {mat.shape[0]}')
    return DensityMatrix(mat, dims)


def povm_to_obj(povm: Povm) -> dict:
    return {"dim": povm.dim, "elements": [matrix_to_obj(e) for e in povm.elements]}


def povm_from_obj(obj) -> Povm:
    _require(isinstance(obj, dict), "POVM object must be a JSON object")
    _require("dim" in obj and "elements" in obj, 'POVM object needs "dim" and "elements"')
    _require(isinstance(obj["dim"], int) and obj["dim"] >= 1, '"dim" must be a positive integer')
    _require(isinstance(obj["elements"], list) and obj["elements"], '"elements" must be a non-empty list')
    els = [matrix_from_obj(e) for e in obj["elements"]]
    for e in els:
        _require(e.shape == (obj["dim"], obj["dim"]), "every POVM element must be dim x dim")
    return Povm(els, obj["dim"])


def channel_to_obj(ch: KrausChannel) -> dict:
    return {"d_in": ch.d_in, "d_out": ch.d_out, "kraus": [matrix_to_obj(k) for k in ch.kraus]}


def channel_from_obj(obj) -> KrausChannel:
    _require(isinstance(obj, dict), "channel object must be a JSON object")
    for key in ("d_in", "d_out", "kraus"):
        _require(key in obj, f'channel object needs "{key}"')
    _require(isinstance(obj["kraus"], list) and obj["kraus"], '"kraus" must be a non-empty list')
    kraus = [matrix_from_obj(k) for k in obj["kraus"]]
    for k in kraus:
        _require(k.shape == (obj["d_out"], obj["d_in"]), "every Kraus operator must be d_out x d_in")
    return KrausChannel(kraus)


def dumps(obj) -> str:
    """Canonical JSON text: 2-space indent, insertion order, trailing newline."""
    return json.dumps(obj, indent=2) + "\n"


def loads(text: str):
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise SchemaError(f"invalid JSON: {exc}") from exc


def load_json_file(path: str):
    try:
        with open(path, "r", encoding="utf-8") as fh:
            return loads(fh.read())
    except OSError as exc:
        raise SchemaError(f"cannot read {path}: {exc}") from exc


def atomic_write_text(path: str, text: str) -> None:
    """Write via a temp file and rename, so errors never leave partial output."""
    directory = os.path.dirname(os.path.abspath(path))
    fd, tmp = tempfile.mkstemp(dir=directory, prefix=".tmp-", suffix="~")
    try:
        with os.fdopen(fd, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


def sweep_csv_text(qs, values) -> str:
    """CSV with header ``q,discord``, LF line endings, shortest round-trip floats."""
    lines = ["q,discord"]
    for q, v in zip(qs, values):
        lines.append(f"{float(q)!r},{float(v)!r}")
    return "\n".join(lines) + "\n"
