"""Command line front end.

Subcommands mirror the calculator's workflow: ``knot`` (table access and
registration), ``sw3`` (build a 3-manifold from a spec file and print
its SW polynomial), ``fold`` (coset-fold by an Euler class), ``bundle``
(circle bundles over surfaces, direct fold vs closed form), ``obstruct``
(unit-coefficient verdict for one Euler class) and ``search``
(exhaustive box sweep).  Output is byte-deterministic; ``--json`` emits
a payload with sorted keys that validates against the schema files
shipped in ``swfold/schemas``.

Exit codes: 0 success, 1 domain/hypothesis error, 2 parse/structural
error (including usage errors, which argparse reports itself).
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from dataclasses import dataclass, field

from . import alexander
from .alexander import knot_lookup, knot_table_summary, load_knot_file
from .errors import (
    DomainError,
    HypothesisError,
    KnotLookupError,
    NotSeifertError,
    ParseError,
    SpecFileError,
    SwfoldError,
    UnknownVariableError,
)
from .fold import circle_bundle_sw_closed_form, circle_bundle_sw_direct, equal_up_to_sign, fold
from .laurent import to_text
from .manifolds import ThreeManifold, fiber_sum_with_knot, surface_times_circle, three_torus
from .obstruction import euler_search, stabilization_note, taubes_report

SCHEMA_DIR = os.path.join(os.path.dirname(__file__), "schemas")

ENV_KNOT_TABLE = "SWFOLD_KNOT_TABLE"


@dataclass(frozen=True)
class OutputRecord:
    """What one invocation produced: echo, text, payload, exit status."""

    command: tuple[str, ...]
    text: str
    payload: dict
    status: int = 0
    json_output: bool = False
    quiet: bool = False


def emit(record: OutputRecord, as_json: bool | None = None) -> bytes:
    """Deterministic bytes for standard output (sorted JSON keys, canonical text)."""
    if as_json is None:
        as_json = record.json_output
    if as_json:
        out = json.dumps(record.payload, sort_keys=True, indent=2) + "\n"
    else:
        out = record.text
        if out and not out.endswith("\n"):
            out += "\n"
    return out.encode("utf-8")


# -- manifold spec files ------------------------------------------------


def _load_json(path: str):
    try:
        with open(path, "r", encoding="utf-8") as handle:
            return json.load(handle)
    except OSError as exc:
        raise SpecFileError(f"cannot read {path!r}: {exc}") from None
    except json.JSONDecodeError as exc:
        raise SpecFileError(f"{path}: invalid JSON: {exc}") from None


def build_manifold(data: dict, where: str = "spec") -> ThreeManifold:
    """Construct a manifold from a parsed spec object, registering its knots."""
    if not isinstance(data, dict):
        raise SpecFileError(f"{where}: expected a JSON object")
    allowed = {"base", "sums", "knots"}
    for key in data:
        if key not in allowed:
            raise SpecFileError(f"{where}.{key}: unknown field")
    if "base" not in data:
        raise SpecFileError(f"{where}.base: required field missing")

    knots = data.get("knots", [])
    if not isinstance(knots, list):
        raise SpecFileError(f"{where}.knots: expected a list")
    for i, entry in enumerate(knots):
        alexander.register_knot(alexander._record_from_dict(entry, f"{where}.knots[{i}]"))

    base = data["base"]
    if base == "t3":
        manifold = three_torus()
    elif isinstance(base, dict) and set(base) == {"surface_x_s1"}:
        genus = base["surface_x_s1"]
        if not isinstance(genus, int):
            raise SpecFileError(f"{where}.base.surface_x_s1: expected an integer genus")
        manifold = surface_times_circle(genus)
    else:
        raise SpecFileError(f'{where}.base: expected "t3" or {{"surface_x_s1": genus}}')

    sums = data.get("sums", [])
    if not isinstance(sums, list):
        raise SpecFileError(f"{where}.sums: expected a list")
    for i, entry in enumerate(sums):
        if not isinstance(entry, dict) or set(entry) != {"knot", "meridian"}:
            raise SpecFileError(f"{where}.sums[{i}]: expected {{\"knot\": name, \"meridian\": variable}}")
        if not isinstance(entry["knot"], str) or not isinstance(entry["meridian"], str):
            raise SpecFileError(f"{where}.sums[{i}]: knot and meridian must be strings")
        manifold = fiber_sum_with_knot(manifold, knot_lookup(entry["knot"]), entry["meridian"])
    return manifold


def load_spec(path: str) -> ThreeManifold:
    """Read a manifold spec file and build the manifold it describes."""
    return build_manifold(_load_json(path), where=path)


# -- subcommand handlers ------------------------------------------------


def _bool(value: bool) -> str:
    return "true" if value else "false"


def _cmd_knot(args) -> tuple[list[str], list[str], dict]:
    if args.action == "list":
        rows = knot_table_summary()
        body = [f"{r['name']}  fibered={_bool(r['fibered'])}  alexander = {r['alexander']}" for r in rows]
        return [], body, {"command": "knot-list", "knots": rows}
    if args.action == "show":
        record = knot_lookup(args.name)
        row = {
            "name": record.name,
            "fibered": record.fibered,
            "alexander": to_text(record.alexander),
            "seifert": [list(r) for r in record.seifert.entries] if record.seifert else None,
        }
        body = [
            f"name = {record.name}",
            f"fibered = {_bool(record.fibered)}",
            f"alexander = {row['alexander']}",
            f"seifert = {row['seifert'] if row['seifert'] is not None else '(registered by polynomial)'}",
        ]
        return [], body, {"command": "knot-show", "knot": row}
    # register
    records = load_knot_file(args.file)
    rows = [
        {
            "name": r.name,
            "fibered": r.fibered,
            "alexander": to_text(r.alexander),
            "seifert": [list(row) for row in r.seifert.entries] if r.seifert else None,
        }
        for r in records
    ]
    body = [f"registered {r['name']}  fibered={_bool(r['fibered'])}  alexander = {r['alexander']}" for r in rows]
    return [], body, {"command": "knot-register", "registered": rows}


def _cmd_sw3(args) -> tuple[list[str], list[str], dict]:
    manifold = load_spec(args.spec)
    header = [
        f"manifold = {manifold.name}",
        f"basis = {' '.join(manifold.basis.names)}",
        f"b1 = {manifold.b1}",
        f"fibered = {_bool(manifold.fibered)}",
    ]
    body = [f"sw3 = {manifold.sw3}"]
    payload = {
        "command": "sw3",
        "manifold": manifold.name,
        "basis": list(manifold.basis.names),
        "b1": manifold.b1,
        "fibered": manifold.fibered,
        "provenance": list(manifold.provenance),
        "sw3": str(manifold.sw3),
    }
    return header, body, payload


def _cmd_fold(args) -> tuple[list[str], list[str], dict]:
    manifold = load_spec(args.spec)
    folded = fold(manifold, args.chi)
    header = [f"manifold = {manifold.name}", f"chi = {folded.chi_text}"]
    if folded.product_case:
        header.append("product case: zero Euler class, 4-manifold invariants equal the unfolded polynomial")
        pivot_name = None
        modulus = None
    else:
        pivot_name = manifold.basis.names[folded.quotient.pivot]
        modulus = folded.quotient.modulus
        header.append(f"pivot = {pivot_name}, modulus = {modulus}")
    body = [f"sw4 = {folded.poly}"]
    payload = {
        "command": "fold",
        "manifold": manifold.name,
        "chi": folded.chi_text,
        "product_case": folded.product_case,
        "pivot": pivot_name,
        "modulus": modulus,
        "sw4": str(folded.poly),
        "coefficient_sum": folded.poly.eval_ones(),
    }
    return header, body, payload


def _cmd_bundle(args) -> tuple[list[str], list[str], dict]:
    header = [f"genus = {args.genus}, euler = {args.euler}"]
    direct = closed = None
    match = None
    body = []
    if args.method in ("direct", "both"):
        direct = circle_bundle_sw_direct(args.genus, args.euler)
        body.append(f"direct = {direct.poly}")
    if args.method in ("closed", "both"):
        closed = circle_bundle_sw_closed_form(args.genus, args.euler)
        body.append(f"closed = {closed.poly}")
    if args.method == "both":
        match = equal_up_to_sign(direct, closed)
        body.append("MATCH (up to sign)" if match else "MISMATCH")
    payload = {
        "command": "bundle",
        "genus": args.genus,
        "euler": args.euler,
        "method": args.method,
        "direct": str(direct.poly) if direct is not None else None,
        "closed": str(closed.poly) if closed is not None else None,
        "match": match,
    }
    return header, body, payload


def _cmd_obstruct(args) -> tuple[list[str], list[str], dict]:
    manifold = load_spec(args.spec)
    folded = fold(manifold, args.chi)
    report = taubes_report(folded, manifold)
    header = [f"source = {report.source}", f"sw4 = {folded.poly}"]
    body = [f"obstructed = {_bool(report.obstructed)}"]
    if report.unit_classes:
        units = " ".join(str(list(u)) for u in report.unit_classes)
        body.append(f"unit classes: {units}")
    else:
        body.append("unit classes: (none)")
    body.append(f"fibered orbit = {_bool(report.fibered_orbit)}")
    payload = {
        "command": "obstruct",
        "manifold": manifold.name,
        "source": report.source,
        "chi": folded.chi_text,
        "product_case": folded.product_case,
        "sw4": str(folded.poly),
        "obstructed": report.obstructed,
        "unit_classes": [list(u) for u in report.unit_classes],
        "fibered_orbit": report.fibered_orbit,
    }
    return header, body, payload


def _cmd_search(args) -> tuple[list[str], list[str], dict]:
    manifold = load_spec(args.spec)
    result = euler_search(manifold, args.box)
    note = stabilization_note(manifold, args.box)
    header = [f"manifold = {manifold.name}, box = {result.box}"]
    header += [
        f"chi = {e.chi.text} | obstructed = {_bool(e.obstructed)} | "
        f"injective = {_bool(e.injective)} | sw4 = {e.digest}"
        for e in result.entries
    ]
    body = [f"all_obstructed = {_bool(result.all_obstructed)} ({len(result.entries)} entries)"]
    body += note.splitlines()
    payload = {
        "command": "search",
        "manifold": manifold.name,
        "box": result.box,
        "all_obstructed": result.all_obstructed,
        "count": len(result.entries),
        "entries": [
            {
                "chi": e.chi.text,
                "obstructed": e.obstructed,
                "unit_classes": [list(u) for u in e.unit_classes],
                "injective": e.injective,
            }
            for e in result.entries
        ],
        "stabilization": note,
    }
    return header, body, payload


# -- parser / dispatch --------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="swfold",
        description="Exact Seiberg-Witten polynomial calculator: 3-manifold "
        "constructions, Euler-class folding, and symplectic obstruction checks.",
    )
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="emit a JSON payload with sorted keys")
    common.add_argument("--quiet", action="store_true", help="print only the core result")

    sub = parser.add_subparsers(dest="command", required=True, metavar="SUBCOMMAND")

    knot = sub.add_parser("knot", help="knot table access and registration")
    knot_sub = knot.add_subparsers(dest="action", required=True, metavar="ACTION")
    knot_sub.add_parser("list", parents=[common], help="list the knot table")
    show = knot_sub.add_parser("show", parents=[common], help="show one knot record")
    show.add_argument("name")
    register = knot_sub.add_parser("register", parents=[common], help="register knots from a JSON file")
    register.add_argument("file")

    sw3 = sub.add_parser("sw3", parents=[common], help="SW polynomial of a manifold spec file")
    sw3.add_argument("spec")

    fold_p = sub.add_parser("fold", parents=[common], help="fold the SW polynomial by an Euler class")
    fold_p.add_argument("spec")
    fold_p.add_argument("--chi", required=True, help='Euler class, e.g. "4*m1" or "-m1 + 2*m2"')

    bundle = sub.add_parser("bundle", parents=[common], help="circle bundle over a surface")
    bundle.add_argument("--genus", type=int, required=True)
    bundle.add_argument("--euler", type=int, required=True)
    bundle.add_argument("--method", choices=("direct", "closed", "both"), default="both")

    obstruct = sub.add_parser("obstruct", parents=[common], help="symplectic obstruction verdict for one Euler class")
    obstruct.add_argument("spec")
    obstruct.add_argument("--chi", required=True)

    search = sub.add_parser("search", parents=[common], help="sweep all Euler classes in a box")
    search.add_argument("spec")
    search.add_argument("--box", type=int, default=5)

    return parser


_HANDLERS = {
    "knot": _cmd_knot,
    "sw3": _cmd_sw3,
    "fold": _cmd_fold,
    "bundle": _cmd_bundle,
    "obstruct": _cmd_obstruct,
    "search": _cmd_search,
}


def run(argv) -> OutputRecord:
    """Execute one command line and return the record (raises on errors)."""
    argv = list(argv)
    args = build_parser().parse_args(argv)
    extra_table = os.environ.get(ENV_KNOT_TABLE)
    if extra_table:
        load_knot_file(extra_table)
    header, body, payload = _HANDLERS[args.command](args)
    lines = body if args.quiet else header + body
    return OutputRecord(
        command=tuple(argv),
        text="\n".join(lines),
        payload=payload,
        status=0,
        json_output=args.json,
        quiet=args.quiet,
    )


def _error_code(exc: SwfoldError) -> str:
    if isinstance(exc, HypothesisError):
        return "hypothesis"
    if isinstance(exc, DomainError):
        return "domain"
    if isinstance(exc, UnknownVariableError):
        return "name"
    if isinstance(exc, ParseError):
        return "parse"
    if isinstance(exc, KnotLookupError):
        return "lookup"
    if isinstance(exc, NotSeifertError):
        return "seifert"
    if isinstance(exc, SpecFileError):
        return "spec"
    return "structure"


def main(argv=None) -> int:
    try:
        record = run(sys.argv[1:] if argv is None else argv)
    except SwfoldError as exc:
        sys.stderr.write(f"error[{_error_code(exc)}]: {exc}\n")
        return 1 if isinstance(exc, DomainError) else 2
    sys.stdout.write(emit(record).decode("utf-8"))
    return record.status


if __name__ == "__main__":
    sys.exit(main())
