"""State files, reports and CSV outputs.

State file (JSON, strict)::

    {
      "format_version": "1",
      "dim": 4,
      "matrix": [
        [[re, im], [re, im], [re, im], [re, im]],
        ...
      ]
    }

Row ``r`` / column ``c`` of ``matrix`` is the entry ``rho_{r+1, c+1}``, with
basis order ``|00>, |01>, |10>, |11>`` (``|A1 B1>, |A1 B2>, |A2 B1>, |A2 B2>``)
or ``|000>`` ... ``|111>`` for three qubits, particle A most significant.
Numbers are written with 17 significant digits so that a read/write cycle
is bit-exact.
"""

import csv
import io
import json
import math
import warnings
from pathlib import Path

import numpy as np

from .errors import DimUnsupported, HermiticityWarning, ParseError
from .states import DensityMatrix, validate

FORMAT_VERSION = "1"
STATE_KEYS = frozenset({"format_version", "dim", "matrix"})
SUPPORTED_DIMS = (4, 8)
TEXT_DIGITS = 12


def fmt17(x: float) -> str:
    if not math.isfinite(x):
        raise ValueError(f"cannot serialize non-finite value {x}")
    return format(float(x), ".17g")


def _locate(text, needle):
    idx = text.find(needle)
    if idx < 0:
        return None, None
    line = text.count("\n", 0, idx) + 1
    return line, idx - text.rfind("\n", 0, idx)


def parse_state(text: str, **validate_kwargs) -> DensityMatrix:
    """Parse and validate a state document; see the module docstring for the layout."""
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(exc.msg, exc.lineno, exc.colno) from None
    if not isinstance(doc, dict):
        raise ParseError("top level must be an object", 1, 1)
    for key in doc:
        if key not in STATE_KEYS:
            raise ParseError(f"unknown key {key!r}", *_locate(text, f'"{key}"'))
    missing = sorted(STATE_KEYS - set(doc))
    if missing:
        raise ParseError(f"missing key {missing[0]!r}", 1, 1)
    if doc["format_version"] != FORMAT_VERSION:
        raise ParseError(f"unsupported format_version {doc['format_version']!r}",
                         *_locate(text, '"format_version"'))
    dim = doc["dim"]
    if not isinstance(dim, int) or isinstance(dim, bool):
        raise ParseError("dim must be an integer", *_locate(text, '"dim"'))
    if dim not in SUPPORTED_DIMS:
        raise DimUnsupported(f"dimension {dim} not supported (4 or 8)")
    rows = doc["matrix"]
    where = _locate(text, '"matrix"')
    if not isinstance(rows, list) or len(rows) != dim:
        raise ParseError(f"matrix must have {dim} rows", *where)
    m = np.empty((dim, dim), dtype=complex)
    for r, row in enumerate(rows):
        if not isinstance(row, list) or len(row) != dim:
            raise ParseError(f"matrix row {r} must have {dim} entries", *where)
        for c, entry in enumerate(row):
            ok = (isinstance(entry, list) and len(entry) == 2
                  and all(isinstance(x, (int, float)) and not isinstance(x, bool) for x in entry))
            if not ok:
                raise ParseError(f"matrix[{r}][{c}] must be a [re, im] pair", *where)
            m[r, c] = complex(entry[0], entry[1])
    rho = DensityMatrix(m)
    if rho.symmetrization_deviation > 0:
        warnings.warn(f"Hermiticity deviation {rho.symmetrization_deviation:.17g} removed by "
                      "symmetrization", HermiticityWarning, stacklevel=3)
    validate(rho, **validate_kwargs)
    return rho


def read_state(path, **validate_kwargs) -> DensityMatrix:
    return parse_state(Path(path).read_text(encoding="utf-8"), **validate_kwargs)


def format_state(m) -> str:
    a = np.asarray(m, dtype=complex)
    rows = []
    for row in a:
        cells = ", ".join(f"[{fmt17(z.real)}, {fmt17(z.imag)}]" for z in row)
        rows.append(f"    [{cells}]")
    return ("{\n"
            f'  "format_version": "{FORMAT_VERSION}",\n'
            f'  "dim": {a.shape[0]},\n'
            '  "matrix": [\n' + ",\n".join(rows) + "\n  ]\n}\n")


def write_state(m, path) -> None:
    Path(path).write_text(format_state(m), encoding="utf-8")


def _fmt_text(x):
    if isinstance(x, float):
        return format(x, f".{TEXT_DIGITS}g")
    return str(x)


def _text_lines(d, indent=""):
    lines = []
    for key, val in d.items():
        if isinstance(val, dict):
            lines.append(f"{indent}{key}:")
            lines.extend(_text_lines(val, indent + "  "))
        elif isinstance(val, list) and val and isinstance(val[0], dict):
            lines.append(f"{indent}{key}:")
            cols = list(val[0])
            lines.append(indent + "  " + "  ".join(f"{c:>20}" for c in cols))
            for rec in val:
                lines.append(indent + "  " + "  ".join(f"{_fmt_text(rec[c]):>20}" for c in cols))
        elif val is None:
            continue
        else:
            lines.append(f"{indent}{key}: {_fmt_text(val)}")
    return lines


def render_text(report) -> str:
    d = report.to_dict() if hasattr(report, "to_dict") else dict(report)
    if d.get("kind") == "sweep":
        return render_csv(report)
    return "\n".join(_text_lines(d)) + "\n"


def render_json(report) -> str:
    d = report.to_dict() if hasattr(report, "to_dict") else dict(report)
    return json.dumps(d, indent=2, sort_keys=False) + "\n"


def render_csv(report) -> str:
    d = report.to_dict() if hasattr(report, "to_dict") else dict(report)
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    if d.get("kind") == "sweep":
        w.writerow(d["columns"])
        for row in d["rows"]:
            w.writerow([fmt17(x) for x in row])
    elif d.get("kind") == "verify":
        w.writerow(["group", "deviation"])
        for k, v in d["group_deviations"].items():
            w.writerow([k, fmt17(v)])
        for k, v in d["total_deviations"].items():
            w.writerow([f"total:{k}", fmt17(v)])
    elif "modes" in d:
        w.writerow(["mode", "genuine_sq", "lower_order_sq", "imbalance", "weight"])
        for m in d["modes"]:
            w.writerow([m["mode_label"], fmt17(m["genuine_sq"]), fmt17(m["lower_order_sq"]),
                        fmt17(m["imbalance"]), fmt17(m["weight"])])
        w.writerow(["total", "", "", fmt17(d["total"]), ""])
    else:
        raise ValueError(f"no CSV layout for report kind {d.get('kind')!r}")
    return buf.getvalue()


_RENDERERS = {"text": render_text, "json": render_json, "csv": render_csv}


def render_report(report, format: str = "text") -> str:
    try:
        return _RENDERERS[format](report)
    except KeyError:
        raise ValueError(f"unknown format {format!r}; expected text, json or csv") from None


def write_report(report, path, format: str = "text") -> None:
    """Write a quantifier, verification or sweep report.

    ``json`` round-trips losslessly (see `read_report`); ``text`` is for
    reading with 12 significant digits; ``csv`` gives a table.
    """
    Path(path).write_text(render_report(report, format), encoding="utf-8")


def read_report(path) -> dict:
    return json.loads(Path(path).read_text(encoding="utf-8"))


def render_grid_csv(grid) -> str:
    """``zA,zB[,zC],density`` rows, last axis fastest, 17 significant digits."""
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(list(grid.labels[:grid.ndim]) + ["density"])
    mesh = np.meshgrid(*grid.axes, indexing="ij")
    cols = [c.ravel() for c in mesh] + [np.asarray(grid.values).ravel()]
    for row in zip(*cols):
        w.writerow([fmt17(x) for x in row])
    return buf.getvalue()


def write_grid_csv(grid, path) -> None:
    Path(path).write_text(render_grid_csv(grid), encoding="utf-8")
