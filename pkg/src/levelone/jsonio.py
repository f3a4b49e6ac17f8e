"""JSON interchange formats (all indices 1-based, rationals as "int[/uint]").

Algebra:   {"dim": n, "products": [{"left": i, "right": j, "result": k,
            "coeff": "<rational>"}, ...]}       omitted triples are zero
Family:    {"dim": n, "entries": [{"row": i, "col": j,
            "poly": "<laurent string>"}, ...]}  omitted entries are zero,
            column j holds the image of basis vector j
Witness:   {"family": <family>, "target": {"tag": ..., "dim": ...,
            "alpha"?: ...}, "trace": [...]}
Report:    {"pass": bool, "limit": <algebra> | null, "diagnostics": [...]}

Serialization is deterministic (sorted keys and entries), so identical
values produce byte-identical files.
"""

from __future__ import annotations

import json
import re
from fractions import Fraction

from .algebra import Algebra, InvariantVector
from .canonical import CanonicalForm, Tag
from .errors import ParseError
from .parser import parse_laurent, print_laurent
from .poly import FieldElement
from .recognize import RecognitionResult
from .transport import ParamMatrix, Report, Witness

_RATIONAL_RE = re.compile(r"^-?\d+(?:/\d*[1-9]\d*)?$")


def parse_rational(text: str) -> Fraction:
    if not isinstance(text, str) or not _RATIONAL_RE.match(text):
        raise ValueError(f"bad rational literal: {text!r} (expected int[/uint])")
    return Fraction(text)


def format_rational(q: Fraction) -> str:
    return str(Fraction(q))


# -- algebra ---------------------------------------------------------------


def algebra_to_dict(a: Algebra) -> dict:
    products = []
    for k, i, j, v in a._nnz:
        products.append(
            {
                "left": i + 1,
                "right": j + 1,
                "result": k + 1,
                "coeff": format_rational(v),
            }
        )
    products.sort(key=lambda e: (e["left"], e["right"], e["result"]))
    return {"dim": a.dim, "products": products}


def algebra_from_dict(d: dict) -> Algebra:
    if not isinstance(d, dict) or "dim" not in d:
        raise ValueError("algebra JSON needs a 'dim' field")
    n = d["dim"]
    if not isinstance(n, int) or n < 1:
        raise ValueError(f"bad dimension: {n!r}")
    entries: dict = {}
    seen = set()
    for item in d.get("products", []):
        try:
            i, j, k = item["left"], item["right"], item["result"]
        except (TypeError, KeyError) as exc:
            raise ValueError(f"product entry missing a field: {item!r}") from exc
        for idx in (i, j, k):
            if not isinstance(idx, int) or not 1 <= idx <= n:
                raise ValueError(f"index {idx!r} out of range 1..{n}")
        if (i, j, k) in seen:
            raise ValueError(f"duplicate product triple (left={i}, right={j}, result={k})")
        seen.add((i, j, k))
        coeff = parse_rational(item["coeff"])
        if coeff:
            entries[(k - 1, i - 1, j - 1)] = coeff
    return Algebra.from_entries(n, entries)


# -- families and witnesses -------------------------------------------------


def family_to_dict(pm: ParamMatrix) -> dict:
    entries = []
    for i, row in enumerate(pm.entries):
        for j, e in enumerate(row):
            if e:
                entries.append(
                    {"row": i + 1, "col": j + 1, "poly": print_laurent(e.to_laurent())}
                )
    entries.sort(key=lambda it: (it["row"], it["col"]))
    return {"dim": pm.dim, "entries": entries}


def family_from_dict(d: dict) -> ParamMatrix:
    if not isinstance(d, dict) or "dim" not in d:
        raise ValueError("family JSON needs a 'dim' field")
    n = d["dim"]
    if not isinstance(n, int) or n < 1:
        raise ValueError(f"bad dimension: {n!r}")
    grid = [[None] * n for _ in range(n)]
    for item in d.get("entries", []):
        try:
            i, j, text = item["row"], item["col"], item["poly"]
        except (TypeError, KeyError) as exc:
            raise ValueError(f"family entry missing a field: {item!r}") from exc
        for idx in (i, j):
            if not isinstance(idx, int) or not 1 <= idx <= n:
                raise ValueError(f"index {idx!r} out of range 1..{n}")
        if grid[i - 1][j - 1] is not None:
            raise ValueError(f"duplicate family entry (row={i}, col={j})")
        grid[i - 1][j - 1] = FieldElement.from_laurent(parse_laurent(text))
    zero = FieldElement.constant(0)
    pm = ParamMatrix(
        n,
        tuple(
            tuple(grid[i][j] if grid[i][j] is not None else zero for j in range(n))
            for i in range(n)
        ),
    )
    if not pm.det():
        raise ValueError("family matrix is singular over Q(t)")
    return pm


def canonical_form_to_dict(form: CanonicalForm) -> dict:
    out = {"tag": form.tag.value, "dim": form.dim}
    if form.alpha is not None:
        out["alpha"] = format_rational(form.alpha)
    return out


def canonical_form_from_dict(d: dict) -> CanonicalForm:
    try:
        tag = Tag(d["tag"])
    except (KeyError, ValueError) as exc:
        raise ValueError(f"bad canonical tag in {d!r}") from exc
    dim = d.get("dim")
    if not isinstance(dim, int):
        raise ValueError("canonical form needs an integer 'dim'")
    alpha = parse_rational(d["alpha"]) if "alpha" in d else None
    return CanonicalForm(tag, dim, alpha)


def witness_to_dict(w: Witness) -> dict:
    return {
        "family": family_to_dict(w.family),
        "target": canonical_form_to_dict(w.target),
        "trace": list(w.branch_trace),
    }


def witness_from_dict(d: dict) -> Witness:
    try:
        family = family_from_dict(d["family"])
        target = canonical_form_from_dict(d["target"])
    except KeyError as exc:
        raise ValueError(f"witness JSON missing field {exc}") from exc
    trace = tuple(d.get("trace", []))
    return Witness(family, target, trace)


def report_to_dict(r: Report) -> dict:
    return {
        "pass": r.passed,
        "limit": algebra_to_dict(r.limit) if r.limit is not None else None,
        "diagnostics": list(r.diagnostics),
    }


def recognition_to_dict(res: RecognitionResult) -> dict:
    out: dict = {"recognized": res.recognized}
    if res.form is not None:
        out["form"] = canonical_form_to_dict(res.form)
        if res.form.alpha is not None:
            out["alpha"] = format_rational(res.form.alpha)
    if res.iso is not None:
        out["iso"] = [[format_rational(v) for v in row] for row in res.iso]
    if res.reason is not None:
        out["reason"] = res.reason
    return out


def invariants_to_dict(iv: InvariantVector) -> dict:
    out = {
        "dim": iv.dim,
        "power_dims": list(iv.power_dims),
        "commutative": iv.commutative,
        "anticommutative": iv.anticommutative,
        "nilpotent": iv.nilpotent,
    }
    if iv.sym_rank is not None:
        out["sym_rank"] = iv.sym_rank
        out["skew_rank"] = iv.skew_rank
    return out


# -- files -------------------------------------------------------------------


def dumps(obj: dict) -> str:
    return json.dumps(obj, indent=2, sort_keys=True) + "\n"


def load_path(path: str) -> dict:
    with open(path, "r", encoding="utf-8") as fh:
        return json.load(fh)


def save_path(path: str, obj: dict) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(dumps(obj))
