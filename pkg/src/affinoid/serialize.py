"""JSON payloads: fields, groupoids, sections, and deterministic reports.

Polynomials travel in the canonical text syntax of format_poly, so every
payload round-trips bit-exactly.  Malformed input raises InputError with
a message naming the offending field; the CLI maps that to exit code 2.
"""

from __future__ import annotations

import json
from typing import Any

from .fields import DegreeError, DifferentialForm, MultiVectorField, TensorField
from .groupoid import AlgebroidSection, PolyGroupoid, validate_axioms
from .poly import ArityError, Poly, PolyMap, format_poly, parse_poly

REPORT_SCHEMA = "affinoid-report/1"


class InputError(ValueError):
    """A payload that parsed as JSON but does not match the schema."""


def _require(d: dict, key: str, kind: type, where: str) -> Any:
    if not isinstance(d, dict):
        raise InputError(f"{where}: expected an object")
    if key not in d:
        raise InputError(f"{where}: missing field {key!r}")
    v = d[key]
    if kind is int and isinstance(v, bool):
        raise InputError(f"{where}: field {key!r} must be an integer")
    if not isinstance(v, kind):
        raise InputError(f"{where}: field {key!r} must be {kind.__name__}")
    return v


def _parse(text: Any, num_vars: int, where: str) -> Poly:
    if not isinstance(text, str):
        raise InputError(f"{where}: polynomial must be a string")
    try:
        return parse_poly(text, num_vars)
    except ValueError as e:
        raise InputError(f"{where}: {e}") from e


def _poly_list(d: dict, key: str, count: int, num_vars: int, where: str) -> list[Poly]:
    seq = _require(d, key, list, where)
    if len(seq) != count:
        raise InputError(f"{where}: field {key!r} must list {count} polynomials")
    return [_parse(s, num_vars, f"{where}.{key}[{i}]") for i, s in enumerate(seq)]


# -- fields --------------------------------------------------------------------


def field_to_json(F: MultiVectorField | DifferentialForm | TensorField) -> dict:
    if isinstance(F, MultiVectorField):
        kind, p, q = "mv", F.degree, 0
        items = [(idx, (), c) for idx, c in F.coeffs.items()]
    elif isinstance(F, DifferentialForm):
        kind, p, q = "form", 0, F.degree
        items = [((), idx, c) for idx, c in F.coeffs.items()]
    elif isinstance(F, TensorField):
        kind, p, q = "tensor", F.p, F.q
        items = [(up, down, c) for (up, down), c in F.coeffs.items()]
    else:
        raise ArityError(f"not a serializable field: {type(F).__name__}")
    coeffs = [{"idx": list(up), "cov_idx": list(down), "poly": format_poly(c)}
              for up, down, c in sorted(items, key=lambda t: (t[0], t[1]))]
    return {"kind": kind, "dim": F.space_dim, "degree": [p, q], "coeffs": coeffs}


def _index(entry: dict, key: str, where: str) -> tuple[int, ...]:
    seq = _require(entry, key, list, where)
    for v in seq:
        if isinstance(v, bool) or not isinstance(v, int):
            raise InputError(f"{where}: field {key!r} must list integers")
    return tuple(seq)


def field_from_json(d: dict) -> MultiVectorField | DifferentialForm | TensorField:
    kind = _require(d, "kind", str, "field")
    dim = _require(d, "dim", int, "field")
    degree = _require(d, "degree", list, "field")
    if len(degree) != 2 or any(isinstance(v, bool) or not isinstance(v, int)
                               for v in degree):
        raise InputError("field: field 'degree' must be a pair of integers")
    p, q = degree
    entries = _require(d, "coeffs", list, "field")
    coeffs: dict = {}
    for i, entry in enumerate(entries):
        where = f"field.coeffs[{i}]"
        up = _index(entry, "idx", where)
        down = _index(entry, "cov_idx", where)
        poly = _parse(_require(entry, "poly", str, where), dim, where)
        coeffs[(up, down)] = poly
    try:
        if kind == "mv":
            if q != 0:
                raise InputError("field: 'mv' requires degree [k, 0]")
            return MultiVectorField(dim, p, {up: c for (up, _), c in coeffs.items()})
        if kind == "form":
            if p != 0:
                raise InputError("field: 'form' requires degree [0, k]")
            return DifferentialForm(dim, q, {dn: c for (_, dn), c in coeffs.items()})
        if kind == "tensor":
            return TensorField(dim, p, q, coeffs)
    except (ArityError, DegreeError) as e:
        raise InputError(f"field.coeffs: {e}") from e
    raise InputError(f"field: unknown kind {kind!r}")


# -- algebroid sections ---------------------------------------------------------


def section_to_json(sec: AlgebroidSection) -> dict:
    G = sec.groupoid
    coeffs = [{"idx": list(up), "cov_idx": list(down), "poly": format_poly(c)}
              for (up, down), c in sorted(sec.coeffs.items())]
    return {"kind": "section", "dim": G.dim_M, "rank": G.rank,
            "degree": [sec.p, sec.q], "coeffs": coeffs}


def section_from_json(d: dict, G: PolyGroupoid) -> AlgebroidSection:
    kind = _require(d, "kind", str, "section")
    if kind != "section":
        raise InputError(f"section: unknown kind {kind!r}")
    if _require(d, "dim", int, "section") != G.dim_M:
        raise InputError("section: field 'dim' disagrees with the groupoid base")
    if _require(d, "rank", int, "section") != G.rank:
        raise InputError("section: field 'rank' disagrees with the groupoid")
    degree = _require(d, "degree", list, "section")
    if len(degree) != 2:
        raise InputError("section: field 'degree' must be a pair of integers")
    coeffs: dict = {}
    for i, entry in enumerate(_require(d, "coeffs", list, "section")):
        where = f"section.coeffs[{i}]"
        up = _index(entry, "idx", where)
        down = _index(entry, "cov_idx", where)
        coeffs[(up, down)] = _parse(_require(entry, "poly", str, where),
                                    G.dim_M, where)
    try:
        return AlgebroidSection(G, degree[0], degree[1], coeffs)
    except (ArityError, DegreeError) as e:
        raise InputError(f"section.coeffs: {e}") from e


# -- groupoids -------------------------------------------------------------------


def _map_payload(f: PolyMap) -> list[str]:
    return [format_poly(c) for c in f.components]


def groupoid_to_json(G: PolyGroupoid) -> dict:
    return {
        "dim_G": G.dim_G,
        "dim_M": G.dim_M,
        "src": _map_payload(G.src),
        "tgt": _map_payload(G.tgt),
        "unit": _map_payload(G.unit),
        "inv": _map_payload(G.inv),
        "comp_param": {"dim_P": G.comp_param.domain_dim,
                       "map": _map_payload(G.comp_param)},
        "mult": _map_payload(G.mult),
        "comp_section": {"map": _map_payload(G.comp_section)},
        "chain3": {"dim_Q": G.chain3.domain_dim, "map": _map_payload(G.chain3)},
        "splitting": [[format_poly(e) for e in row] for row in G.splitting],
        "name": G.name,
    }


def groupoid_from_json(d: dict) -> PolyGroupoid:
    dG = _require(d, "dim_G", int, "groupoid")
    dM = _require(d, "dim_M", int, "groupoid")
    if dG < 1 or dM < 0 or dM > dG:
        raise InputError("groupoid: dimensions must satisfy 0 <= dim_M <= dim_G, "
                         "1 <= dim_G")
    cp = _require(d, "comp_param", dict, "groupoid")
    dP = _require(cp, "dim_P", int, "groupoid.comp_param")
    comp_param = PolyMap(dP, _poly_list(cp, "map", 2 * dG, dP,
                                        "groupoid.comp_param"))
    identity_pairing = dP == 2 * dG and comp_param == PolyMap.identity(2 * dG)
    if "comp_section" in d:
        cs = _require(d, "comp_section", dict, "groupoid")
        comp_section = PolyMap(2 * dG, _poly_list(cs, "map", dP, 2 * dG,
                                                  "groupoid.comp_section"))
    elif identity_pairing:
        comp_section = PolyMap.identity(2 * dG)
    else:
        raise InputError("groupoid: field 'comp_section' is required unless "
                         "comp_param is the identity pairing")
    if "chain3" in d:
        c3 = _require(d, "chain3", dict, "groupoid")
        dQ = _require(c3, "dim_Q", int, "groupoid.chain3")
        chain3 = PolyMap(dQ, _poly_list(c3, "map", 3 * dG, dQ, "groupoid.chain3"))
    elif identity_pairing:
        chain3 = PolyMap.identity(3 * dG)
    else:
        raise InputError("groupoid: field 'chain3' is required unless "
                         "comp_param is the identity pairing")
    rows = _require(d, "splitting", list, "groupoid")
    if len(rows) != dG or any(not isinstance(r, list) or len(r) != dG
                              for r in rows):
        raise InputError(f"groupoid: field 'splitting' must be a {dG}x{dG} matrix")
    splitting = [[_parse(e, dM, f"groupoid.splitting[{r}][{c}]")
                  for c, e in enumerate(row)] for r, row in enumerate(rows)]
    try:
        G = PolyGroupoid(
            dim_G=dG,
            dim_M=dM,
            src=PolyMap(dG, _poly_list(d, "src", dM, dG, "groupoid")),
            tgt=PolyMap(dG, _poly_list(d, "tgt", dM, dG, "groupoid")),
            unit=PolyMap(dM, _poly_list(d, "unit", dG, dM, "groupoid")),
            inv=PolyMap(dG, _poly_list(d, "inv", dG, dG, "groupoid")),
            comp_param=comp_param,
            mult=PolyMap(dP, _poly_list(d, "mult", dG, dP, "groupoid")),
            comp_section=comp_section,
            chain3=chain3,
            splitting=splitting,
            name=d.get("name", "imported"),
        )
    except (ArityError, ValueError) as e:
        raise InputError(f"groupoid: {e}") from e
    report = validate_axioms(G)
    if not report.ok:
        raise InputError("groupoid: axioms fail: " + "; ".join(report.violations))
    return G


# -- reports ---------------------------------------------------------------------


def check_record(check: str, instance: str, mode: str, seed: int,
                 passed: bool, witness: dict | None = None) -> dict:
    rec = {"check": check, "instance": instance, "mode": mode,
           "seed": seed, "pass": passed}
    if witness is not None:
        rec["witness"] = witness
    return rec


def report_payload(checks: list[dict], seed: int, mode: str) -> dict:
    ordered = sorted(checks, key=lambda r: (r["instance"], r["check"]))
    return {"schema": REPORT_SCHEMA, "seed": seed, "mode": mode,
            "pass": all(r["pass"] for r in ordered), "checks": ordered}


def dumps_report(report: dict) -> str:
    return json.dumps(report, sort_keys=True, separators=(",", ":")) + "\n"
