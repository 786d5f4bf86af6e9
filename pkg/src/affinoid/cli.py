"""Command line front end over the check suites.

Fields and groupoids come from JSON files or from catalog references
(``catalog:<id>`` for groupoids, ``catalog:<fixture>`` for fields once a
catalog groupoid is chosen).  Reports are JSON with sorted keys and
sorted check records, so identical configuration bytes produce identical
report bytes.  Exit code 0 means every check passed, 1 means a check
failed (the report carries a witness where one exists), 2 means the
input could not be used at all.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from .catalog import CatalogEntry, catalog_ids, get_entry
from .fields import (
    DifferentialForm,
    MultiVectorField,
    TensorField,
    schouten_bracket,
)
from .forms import AffineForm, form_compose
from .groupoid import ComposabilityError, PolyGroupoid, StructureError
from .multivector import AffineMV, decomposition_iso_check, is_affine_mv, \
    is_multiplicative_mv, mv_compose
from .serialize import (
    InputError,
    check_record,
    dumps_report,
    field_from_json,
    field_to_json,
    groupoid_from_json,
    groupoid_to_json,
    report_payload,
    section_to_json,
)
from .suite import (
    DEFAULT_SAMPLES,
    PREDICATES,
    SUITES,
    predicate_records,
    run_suite,
)
from .tensors import (
    Affine11,
    AffineTensor,
    monoidal_interchange_check,
    t11_compose,
    t11_matrix_of,
    tensor_compose,
)


def _read_json(path: str) -> dict:
    try:
        with open(path, "r", encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise InputError(f"{path}: cannot read ({exc})")
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputError(f"{path}: invalid JSON: {exc}")
    if not isinstance(data, dict):
        raise InputError(f"{path}: expected a JSON object")
    return data


def _resolve_groupoid(arg: str) -> tuple[CatalogEntry | None, PolyGroupoid]:
    if arg.startswith("catalog:"):
        cid = arg[len("catalog:"):]
        try:
            entry = get_entry(cid)
        except KeyError:
            raise InputError(f"unknown catalog groupoid {cid!r}; available: "
                             + ", ".join(catalog_ids()))
        return entry, entry.groupoid
    return None, groupoid_from_json(_read_json(arg))


def _resolve_field(arg: str, entry: CatalogEntry | None):
    if arg.startswith("catalog:"):
        if entry is None:
            raise InputError(f"{arg}: fixture references need a catalog "
                             "groupoid (--groupoid catalog:<id>)")
        name = arg[len("catalog:"):]
        try:
            return entry.fixture(name).field
        except KeyError:
            raise InputError(f"{arg}: no fixture named {name!r} in catalog "
                             f"entry {entry.id!r}")
    return field_from_json(_read_json(arg))


def _infer_entry(field, label: str) -> CatalogEntry:
    """Unique catalog groupoid whose arrow space carries this field."""
    matches = [get_entry(cid) for cid in catalog_ids()
               if get_entry(cid).groupoid.dim_G == field.space_dim]
    if len(matches) == 1:
        return matches[0]
    if not matches:
        raise InputError(f"{label}: no catalog groupoid has dimension "
                         f"{field.space_dim}; pass --groupoid")
    raise InputError(f"{label}: dimension {field.space_dim} matches several "
                     "catalog groupoids ("
                     + ", ".join(e.id for e in matches)
                     + "); pass --groupoid")


def _emit(text: str, out: str | None) -> None:
    if out:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _emit_report(records: list[dict], args, outputs: dict | None = None) -> int:
    payload = report_payload(records, args.seed, args.mode)
    if outputs is not None:
        payload["outputs"] = outputs
    _emit(dumps_report(payload), args.out)
    return 0 if payload["pass"] else 1


def _field_kind(field) -> str:
    if isinstance(field, MultiVectorField):
        return "mv"
    if isinstance(field, DifferentialForm):
        return "form"
    return "tensor"


def _groupoid_and_fields(args, minimum: int = 1, maximum: int | None = None):
    labels = list(args.field or [])
    if len(labels) < minimum:
        raise InputError(f"need at least {minimum} --field argument(s)")
    if maximum is not None and len(labels) > maximum:
        raise InputError(f"need at most {maximum} --field argument(s)")
    if args.groupoid:
        entry, G = _resolve_groupoid(args.groupoid)
        fields = [_resolve_field(lbl, entry) for lbl in labels]
    else:
        first = field_from_json(_read_json(labels[0]))
        entry = _infer_entry(first, labels[0])
        G = entry.groupoid
        fields = [first] + [_resolve_field(lbl, entry) for lbl in labels[1:]]
    for lbl, f in zip(labels, fields):
        if f.space_dim != G.dim_G:
            raise InputError(f"{lbl}: field lives in dimension "
                             f"{f.space_dim}, groupoid has {G.dim_G}")
    return G, labels, fields


def cmd_check(args) -> int:
    if args.suite and args.predicate:
        raise InputError("choose --suite or --predicate, not both")
    if args.suite:
        if args.field:
            raise InputError("--suite runs the catalog fixtures; "
                             "--field is not accepted here")
        if not args.groupoid:
            raise InputError("--suite needs --groupoid")
        entry, G = _resolve_groupoid(args.groupoid)
        if entry is None:
            if G.rank == 0 and args.suite == "paper":
                raise InputError("the structural batteries need at least one "
                                 "frame direction; use --suite core")
            entry = CatalogEntry(id=args.groupoid, groupoid=G, fixtures=())
        records = run_suite(entry, args.suite, args.seed, args.mode,
                            args.samples)
        return _emit_report(records, args)
    if not args.predicate:
        raise InputError("check needs --suite <name> or --predicate <name>")
    G, labels, fields = _groupoid_and_fields(args)
    records = []
    for lbl, f in zip(labels, fields):
        records.extend(predicate_records(G, f, args.predicate, lbl,
                                         args.seed, args.mode, args.samples))
    return _emit_report(records, args)


def cmd_decompose(args) -> int:
    G, labels, fields = _groupoid_and_fields(args, minimum=1, maximum=1)
    label, field = labels[0], fields[0]
    kind = _field_kind(field)
    predicate = f"affine-{kind}"
    try:
        if kind == "mv":
            P = AffineMV(G, field)
            right, left = P.Pi_r, P.Pi_l
            section = section_to_json(P.pi)
            base = None
        elif kind == "form":
            T = AffineForm(G, field)
            right, left = T.Theta_r, T.Theta_l
            section = None
            base = field_to_json(T.theta)
        else:
            T = AffineTensor(G, field, seed=args.seed, samples=args.samples)
            right, left = T.F_r, T.F_l
            section = section_to_json(T.f)
            base = None
    except StructureError:
        records = predicate_records(G, field, predicate, label, args.seed,
                                    args.mode, args.samples)
        return _emit_report(records, args)
    mode = "sampled" if kind == "tensor" else "exact"
    records = [check_record(f"predicate.{predicate}", label, mode,
                            args.seed, True),
               check_record("decompose.emitted", label, mode, args.seed,
                            True)]
    outputs = {"kind": kind, "right": field_to_json(right),
               "left": field_to_json(left)}
    if section is not None:
        outputs["section"] = section
    if base is not None:
        outputs["base"] = base
    return _emit_report(records, args, outputs)


def cmd_bracket(args) -> int:
    G, labels, fields = _groupoid_and_fields(args, minimum=2, maximum=2)
    records = []
    ok = True
    for lbl, f in zip(labels, fields):
        if not isinstance(f, MultiVectorField):
            raise InputError(f"{lbl}: bracket needs multivector fields")
        recs = predicate_records(G, f, "affine-mv", lbl, args.seed,
                                 args.mode, args.samples)
        ok = ok and all(r["pass"] for r in recs)
        records.extend(recs)
    if not ok:
        return _emit_report(records, args)
    B = schouten_bracket(fields[0], fields[1])
    inst = f"{labels[0]},{labels[1]}"
    records.append(check_record("bracket.affine_closure", inst, "exact",
                                args.seed, is_affine_mv(G, B)))
    P = AffineMV(G, fields[0])
    Q = AffineMV(G, fields[1])
    records.append(check_record("bracket.mult_closure", inst, "exact",
                                args.seed,
                                is_multiplicative_mv(
                                    G, schouten_bracket(P.Pi_r, Q.Pi_r))))
    records.append(check_record("bracket.component_identity", inst, "exact",
                                args.seed, decomposition_iso_check(P, Q)))
    return _emit_report(records, args, {"bracket": field_to_json(B)})


def _compose_interchange(G, labels, fields, args) -> int:
    records = []
    maps = []
    for lbl, f in zip(labels, fields):
        if not (isinstance(f, TensorField) and f.p == 1 and f.q == 1):
            raise InputError(f"{lbl}: the interchange quadruple needs four "
                             "(1, 1)-tensor fields")
        try:
            maps.append(Affine11(G, t11_matrix_of(G, f), seed=args.seed,
                                 samples=args.samples))
        except StructureError:
            records.extend(predicate_records(G, f, "affine-tensor", lbl,
                                             args.seed, args.mode,
                                             args.samples))
            return _emit_report(records, args)
    inst = ",".join(labels)
    try:
        verified = monoidal_interchange_check(*maps)
    except ComposabilityError as exc:
        records.append(check_record("compose.composable", inst, "sampled",
                                    args.seed, False, {"error": str(exc)}))
        return _emit_report(records, args)
    records.append(check_record("tensor.monoidal.interchange", inst,
                                "sampled", args.seed, verified))
    h1 = t11_compose(maps[0], maps[1], seed=args.seed, samples=args.samples)
    h2 = t11_compose(maps[2], maps[3], seed=args.seed, samples=args.samples)
    outputs = {"horizontal": [field_to_json(h1.field),
                              field_to_json(h2.field)]}
    return _emit_report(records, args, outputs)


def cmd_compose(args) -> int:
    nfields = len(args.field or [])
    if nfields == 4:
        G, labels, fields = _groupoid_and_fields(args, minimum=4, maximum=4)
        return _compose_interchange(G, labels, fields, args)
    G, labels, fields = _groupoid_and_fields(args, minimum=2, maximum=2)
    kinds = {_field_kind(f) for f in fields}
    if len(kinds) != 1:
        raise InputError("compose needs two fields of the same kind, got "
                         + " and ".join(sorted(kinds)))
    kind = kinds.pop()
    records = []
    arrows = []
    for lbl, f in zip(labels, fields):
        try:
            if kind == "mv":
                arrows.append(AffineMV(G, f))
            elif kind == "form":
                arrows.append(AffineForm(G, f))
            else:
                arrows.append(AffineTensor(G, f, seed=args.seed,
                                           samples=args.samples))
        except StructureError:
            records.extend(predicate_records(G, f, f"affine-{kind}", lbl,
                                             args.seed, args.mode,
                                             args.samples))
            return _emit_report(records, args)
    inst = f"{labels[0]},{labels[1]}"
    mode = "sampled" if kind == "tensor" else "exact"
    try:
        if kind == "mv":
            C = mv_compose(arrows[0], arrows[1])
            total, s_ok = C.Pi, (C.Pi_r == arrows[1].Pi_r
                                 and C.Pi_l == arrows[0].Pi_l)
        elif kind == "form":
            C = form_compose(arrows[0], arrows[1])
            total, s_ok = C.Theta, (C.Theta_r == arrows[1].Theta_r
                                    and C.Theta_l == arrows[0].Theta_l)
        else:
            C = tensor_compose(arrows[0], arrows[1])
            total, s_ok = C.F, (C.F_r == arrows[1].F_r
                                and C.F_l == arrows[0].F_l)
    except ComposabilityError as exc:
        records.append(check_record("compose.composable", inst, mode,
                                    args.seed, False, {"error": str(exc)}))
        return _emit_report(records, args)
    records.append(check_record("compose.composable", inst, mode,
                                args.seed, True))
    records.append(check_record("compose.source_target", inst, mode,
                                args.seed, s_ok))
    return _emit_report(records, args, {"composite": field_to_json(total)})


def cmd_catalog(args) -> int:
    if args.action == "list":
        _emit("".join(cid + "\n" for cid in catalog_ids()), args.out)
        return 0
    if not args.id:
        raise InputError("catalog export needs a groupoid id")
    try:
        entry = get_entry(args.id)
    except KeyError:
        raise InputError(f"unknown catalog groupoid {args.id!r}; available: "
                         + ", ".join(catalog_ids()))
    text = json.dumps(groupoid_to_json(entry.groupoid), sort_keys=True,
                      separators=(",", ":")) + "\n"
    _emit(text, args.out)
    return 0


def _add_common(sub) -> None:
    sub.add_argument("--groupoid", help="catalog:<id> or a groupoid JSON file")
    sub.add_argument("--field", action="append", default=[],
                     help="field JSON file or catalog:<fixture> "
                          "(repeatable)")
    sub.add_argument("--seed", type=int, default=None,
                     help="sampling seed (default: $AFFINOID_SEED or 0)")
    sub.add_argument("--mode", choices=("exact", "sampled"),
                     default="sampled",
                     help="gate the redundant oracle cross-checks")
    sub.add_argument("--samples", type=int, default=DEFAULT_SAMPLES,
                     help="sample count for seeded procedures")
    sub.add_argument("--out", help="write the report here instead of stdout")


def main(argv: list[str] | None = None) -> int:
    parser = argparse.ArgumentParser(
        prog="affinoid",
        description="Exact checks for affine structures on polynomial "
                    "groupoids.")
    subs = parser.add_subparsers(dest="command", required=True)

    p_check = subs.add_parser("check", help="run a suite or one predicate")
    p_check.add_argument("--suite", choices=SUITES,
                         help="named battery over a catalog groupoid")
    p_check.add_argument("--predicate", choices=PREDICATES,
                         help="single property of the given fields")
    _add_common(p_check)

    p_dec = subs.add_parser("decompose",
                            help="split an affine field into parts")
    _add_common(p_dec)

    p_br = subs.add_parser("bracket",
                           help="bracket two affine multivector fields")
    _add_common(p_br)

    p_co = subs.add_parser("compose",
                           help="compose two affine fields, or verify the "
                                "interchange law on four (1,1)-tensors")
    _add_common(p_co)

    p_cat = subs.add_parser("catalog", help="list or export instances")
    p_cat.add_argument("action", choices=("list", "export"))
    p_cat.add_argument("id", nargs="?", help="groupoid id for export")
    p_cat.add_argument("--out", help="write here instead of stdout")

    args = parser.parse_args(argv)
    if getattr(args, "seed", None) is None:
        raw = os.environ.get("AFFINOID_SEED", "0")
        try:
            args.seed = int(raw)
        except ValueError:
            print(f"error: AFFINOID_SEED={raw!r} is not an integer",
                  file=sys.stderr)
            return 2
    if getattr(args, "samples", 1) < 1:
        print("error: --samples must be positive", file=sys.stderr)
        return 2

    handlers = {"check": cmd_check, "decompose": cmd_decompose,
                "bracket": cmd_bracket, "compose": cmd_compose,
                "catalog": cmd_catalog}
    try:
        return handlers[args.command](args)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (ComposabilityError, StructureError) as exc:
        print(f"check failed: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
