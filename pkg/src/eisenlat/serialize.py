"""Text and JSON formats for Gram matrices, isometries and lattices.

Gram text format: the first significant line holds the rank n, the next n
lines hold n space-separated integers each.  Lines whose first non-blank
character is '#' are comments.

Lattice JSON schema:
    {"name": str|null, "rank": int, "gram": [n*n ints, row-major],
     "det": int, "signature": [p, q, z], "invariant_factors": [ints]|null}
"""

from __future__ import annotations

import json
from fractions import Fraction

from .errors import DegenerateForm, ParseError
from .lattice import Lattice, discriminant_group


def parse_int_matrix_text(text: str):
    """Parse the Gram text format into a list of rows (any square matrix)."""
    rows = []
    n = None
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        tokens = line.split()
        if n is None:
            if len(tokens) != 1:
                raise ParseError("expected a single integer (the rank)", line=lineno)
            try:
                n = int(tokens[0])
            except ValueError:
                raise ParseError(f"bad rank {tokens[0]!r}", line=lineno) from None
            if n < 0:
                raise ParseError("rank must be non-negative", line=lineno)
            continue
        if len(rows) == n:
            raise ParseError("extra data after the matrix", line=lineno)
        if len(tokens) != n:
            raise ParseError(f"expected {n} entries, found {len(tokens)}", line=lineno)
        row = []
        for tok in tokens:
            try:
                row.append(int(tok))
            except ValueError:
                col = raw.index(tok) + 1
                raise ParseError(f"bad integer {tok!r}", line=lineno, column=col) from None
        rows.append(row)
    if n is None:
        raise ParseError("empty input")
    if len(rows) != n:
        raise ParseError(f"expected {n} rows, found {len(rows)}")
    return rows


def format_int_matrix_text(mat, comment=None) -> str:
    lines = []
    if comment:
        lines.append(f"# {comment}")
    lines.append(str(len(mat)))
    for row in mat:
        lines.append(" ".join(str(x) for x in row))
    return "\n".join(lines) + "\n"


def lattice_to_dict(lat: Lattice) -> dict:
    try:
        factors = list(discriminant_group(lat).invariant_factors)
    except DegenerateForm:
        factors = None
    return {
        "name": lat.name,
        "rank": lat.rank,
        "gram": [x for row in lat.gram for x in row],
        "det": lat.det,
        "signature": list(lat.signature.as_tuple()),
        "invariant_factors": factors,
    }


def lattice_from_dict(data: dict) -> Lattice:
    try:
        rank = int(data["rank"])
        flat = [int(x) for x in data["gram"]]
    except (KeyError, TypeError, ValueError) as exc:
        raise ParseError(f"bad lattice JSON: {exc}") from None
    if len(flat) != rank * rank:
        raise ParseError(f"gram has {len(flat)} entries, expected {rank * rank}")
    gram = [flat[i * rank:(i + 1) * rank] for i in range(rank)]
    return Lattice(gram, name=data.get("name"))


def lattice_to_json(lat: Lattice) -> str:
    return json.dumps(lattice_to_dict(lat), indent=2, sort_keys=True) + "\n"


def lattice_from_json(text: str) -> Lattice:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"bad JSON: {exc.msg}", line=exc.lineno, column=exc.colno) from None
    return lattice_from_dict(data)


def matrix_to_dict(mat) -> dict:
    return {"rows": len(mat), "cols": len(mat[0]) if mat else 0,
            "matrix": [int(x) for row in mat for x in row]}


def eisnum_to_dict(num) -> dict:
    return {"a": frac_str(num.a), "b": frac_str(num.b)}


def frac_str(fr: Fraction) -> str:
    return str(fr.numerator) if fr.denominator == 1 else f"{fr.numerator}/{fr.denominator}"


def load_matrix_file(path: str):
    """Gram/isometry file: JSON if it looks like JSON, text format otherwise."""
    with open(path, "r", encoding="utf-8") as fh:
        text = fh.read()
    stripped = text.lstrip()
    if stripped.startswith("{"):
        data = json.loads(stripped)
        if "gram" in data:
            lat = lattice_from_dict(data)
            return [list(r) for r in lat.gram], data.get("name")
        flat = [int(x) for x in data["matrix"]]
        rows = int(data["rows"])
        cols = int(data["cols"])
        if len(flat) != rows * cols:
            raise ParseError("matrix entry count does not match rows*cols")
        return [flat[i * cols:(i + 1) * cols] for i in range(rows)], data.get("name")
    return parse_int_matrix_text(text), None
