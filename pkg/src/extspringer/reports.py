"""Rendering of command documents as JSON, CSV or Markdown.

A document is a plain dict with ``schema`` and ``command`` keys; JSON is the
canonical form and the other two are flattened views of it.
"""

from __future__ import annotations

import csv
import io
import json

from .verifier import poly_from_json

FORMATS = ("json", "csv", "md")


def render(doc: dict, fmt: str = "json") -> str:
    if fmt == "json":
        return json.dumps(doc, indent=2) + "\n"
    rows = flat_rows(doc)
    if fmt == "csv":
        return to_csv(rows)
    if fmt == "md":
        return to_markdown(rows)
    raise ValueError(f"unknown format {fmt!r}")


def parse(text: str) -> dict:
    return json.loads(text)


def poly_str(doc) -> str:
    if doc is None:
        return ""
    return poly_from_json(doc).to_string(doc["vars"], descending=False)


def _seq(xs) -> str:
    if xs is None:
        return ""
    return ",".join(str(x) for x in xs)


def _case_columns(case: dict) -> dict:
    return {
        "family": case["family"],
        "rank": case["rank"],
        "jordan_type": _seq(case["jordan_type"]),
        "lambda": _seq(case["lambda"]),
        "m": "" if case["m"] is None else case["m"],
        "J": _seq(case["J"]),
        "K": _seq(case["K"]),
        "s": case["s"],
        "coexponents": _seq(case["coexponents"]),
        "product": poly_str(case["product"]),
    }


def flat_rows(doc: dict) -> list[dict]:
    cmd = doc["command"]
    if cmd == "verify":
        rows = []
        for rep in doc["reports"]:
            base = _case_columns(rep["case"])
            for name, res in rep["checks"].items():
                rows.append({**base, "check": name, "verdict": res["verdict"], "detail": _detail(name, res)})
        return rows
    if cmd == "table":
        rows = []
        for row in doc["rows"]:
            out = _case_columns(row)
            for name, v in row["verdicts"].items():
                out[name] = v
            out["overall"] = row["overall"]
            rows.append(out)
        return rows
    if cmd == "solomon":
        return [{"family": doc["family"], "rank": doc["rank"], "exponents": _seq(doc["exponents"]),
                 "table": poly_str(doc["table"]), "product": doc["factored"], "verdict": doc["verdict"]}]
    if cmd == "kostka":
        return [{"mu": _seq(doc["mu"]), "lambda": _seq(doc["lambda"]),
                 "polynomial": poly_str(doc["polynomial"])}]
    if cmd == "orbits":
        return [{"jordan_type": _seq(o["jordan_type"]), "lambda": _seq(o["lambda"]),
                 "m": "" if o["m"] is None else o["m"], "J": _seq(o["J"]), "K": _seq(o["K"]),
                 "r": o["r"], "s": o["s"], "coexponents": _seq(o["coexponents"])}
                for o in doc["orbits"]]
    raise ValueError(f"unknown command {cmd!r}")


def _detail(name: str, res: dict) -> str:
    if "note" in res and res["verdict"] != "pass":
        return res["note"]
    if name == "condition1":
        if "obstruction_degree" in res:
            return f"no invariants of degree {res['obstruction_degree']}"
        return "; ".join(res.get("witnesses", []))
    if name == "condition2":
        return "flag dims " + _seq(res.get("flag_dims"))
    if name == "delta":
        return f"c = {res.get('c')}"
    if name == "two_power":
        return f"{_seq(res['per_i'])} (total {res['total']})"
    if name == "solomon":
        return poly_str(res["table"])
    return ""


def to_csv(rows: list[dict]) -> str:
    if not rows:
        return ""
    buf = io.StringIO()
    fields = list(rows[0])
    for r in rows[1:]:
        fields += [k for k in r if k not in fields]
    w = csv.DictWriter(buf, fieldnames=fields, lineterminator="\n")
    w.writeheader()
    w.writerows(rows)
    return buf.getvalue()


def to_markdown(rows: list[dict]) -> str:
    if not rows:
        return "(no rows)\n"
    fields = list(rows[0])
    for r in rows[1:]:
        fields += [k for k in r if k not in fields]
    lines = ["| " + " | ".join(fields) + " |", "|" + "---|" * len(fields)]
    for r in rows:
        cells = [str(r.get(k, "")).replace("|", "\\|") for k in fields]
        lines.append("| " + " | ".join(cells) + " |")
    return "\n".join(lines) + "\n"
