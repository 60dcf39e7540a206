"""Rendering and checking of the iota and Psi tables."""

from __future__ import annotations

import json

from .e16k16 import K16Elt, op_iota
from .embeddings import TableRow, _row_iota, build_iota_basis, table1_rows, table2_rows
from .grassmann import XIETA
from .report import VerifyReport

__all__ = ["table_records", "render_table", "table_check", "TABLES"]

TABLES = ("iota", "Psi")


def _ijk(k: int) -> str:
    return ("(2,3,4)", "(3,4,2)", "(4,2,3)")[k]


def _family_major(rows):
    """Cyclic-major row lists reordered family by family, keeping (i,j,k) order."""
    per = len(rows) // 3
    return [(rows[c * per + f], c) for f in range(per) for c in range(3)]


def _f_text(row: TableRow) -> str:
    return "*".join(row.f) if row.f else "1"


def table_records(name: str) -> list[dict]:
    if name == "iota":
        out = []
        for row, c in _family_major(table1_rows()):
            f = K16Elt.mono(0, row.f, coord=XIETA)
            out.append({"family": row.family, "ijk": _ijk(c), "f": _f_text(row),
                        "iota": str(op_iota(f))})
        return out
    if name == "Psi":
        basis = build_iota_basis(1)
        out = []
        for (row, _img), c in _family_major(table2_rows()):
            f = K16Elt.mono(0, row.f, coord=XIETA)
            iota = op_iota(f)
            out.append({"family": row.family, "ijk": _ijk(c), "f": _f_text(row),
                        "iota": str(iota), "Psi": str(basis.Psi(iota))})
        return out
    raise ValueError(f"unknown table {name!r}; expected one of {', '.join(TABLES)}")


def render_table(name: str, fmt: str = "md") -> str:
    recs = table_records(name)
    if fmt == "json":
        return json.dumps({"table": name, "rows": recs}, indent=2) + "\n"
    if fmt != "md":
        raise ValueError(f"unknown format {fmt!r}")
    cols = ["family", "ijk", "f", "iota"] + (["Psi"] if name == "Psi" else [])
    heads = {"family": "family", "ijk": "(i,j,k)", "f": "f", "iota": "iota(f)", "Psi": "Psi(iota(f))"}
    lines = ["| " + " | ".join(heads[c] for c in cols) + " |",
             "|" + "|".join("---" for _ in cols) + "|"]
    for r in recs:
        lines.append("| " + " | ".join(r[c] for c in cols) + " |")
    return "\n".join(lines) + "\n"


def table_check(name: str) -> VerifyReport:
    """Compare computed iota (and Psi) values with the stored row data."""
    rep = VerifyReport(f"table-{name}")
    if name == "iota":
        for row, c in _family_major(table1_rows()):
            f = K16Elt.mono(0, row.f, coord=XIETA)
            exp, got = _row_iota(row), op_iota(f)
            rep.record(f"iota({_f_text(row)}) {_ijk(c)}", got == exp, str(exp), str(got))
        return rep.finish()
    if name == "Psi":
        basis = build_iota_basis(1)
        for (row, img), c in _family_major(table2_rows()):
            f = K16Elt.mono(0, row.f, coord=XIETA)
            iota = op_iota(f)
            rep.record(f"iota({_f_text(row)}) {_ijk(c)}", iota == _row_iota(row),
                       str(_row_iota(row)), str(iota))
            got = basis.Psi(iota)
            rep.record(f"Psi(iota({_f_text(row)})) {_ijk(c)}", got == img, str(img), str(got))
        return rep.finish()
    raise ValueError(f"unknown table {name!r}; expected one of {', '.join(TABLES)}")
