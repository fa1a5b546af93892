"""Command line interface: ``orbitkit <command> ...``.

Exit codes: 0 success, 2 usage error, 3 domain error (unsupported group or
feature, bad input), 4 size-guard abort, 1 internal error.  With
``--format json`` errors are written to stderr as JSON.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from typing import Any, Optional, Sequence

from . import __version__
from .algebra import orbit_product, signed_orbit, signed_product, symmetrized_power
from .coxeter import build_group, subdiagram_factors
from .errors import DomainError, InternalError, SizeGuardError
from .invariants import (
    anomaly_number,
    anomaly_vector,
    congruence_number,
    index_even,
)
from .orbit import format_point, generate_orbit, orbit_size, parse_point
from .polytope import (
    enumerate_faces,
    export_mesh,
    extreme_decoration,
    face_membership_table,
    face_vertices,
    parse_decoration,
)
from .scalar import ScalarParseError

SCHEMA = "v1"
EXIT_USAGE, EXIT_DOMAIN, EXIT_GUARD, EXIT_INTERNAL = 2, 3, 4, 1


class UsageError(Exception):
    pass


def _pt(p) -> list[str]:
    return [str(c) for c in p]


def _mat(m) -> Optional[list[list[str]]]:
    return None if m is None else [[str(c) for c in row] for row in m]


def _point_arg(group, text: Optional[str], flag: str = "--point"):
    if text is None:
        raise UsageError(f"{flag} is required")
    try:
        return group.point(parse_point(text))
    except ScalarParseError as exc:
        raise DomainError(str(exc)) from exc


# -- commands -----------------------------------------------------------------

def cmd_group_info(args, group) -> tuple[dict, str]:
    payload = {
        "name": group.name,
        "rank": group.rank,
        "order": group.order,
        "factors": [{"name": f.name, "order": f.order} for f in group.spec.factors],
        "coxeter_matrix": [list(r) for r in group.coxeter_matrix],
        "cartan": _mat(group.cartan),
        "cartan_inverse": _mat(group.cartan_inv),
        "root_norms": None if group.root_norms is None else _pt(group.root_norms),
        "weight_gram": _mat(group.weight_gram),
    }
    lines = [f"group {group.name}  rank {group.rank}  order {group.order}"]
    for key in ("coxeter_matrix", "cartan", "cartan_inverse", "weight_gram"):
        if payload[key] is not None:
            lines.append(f"{key}:")
            lines.extend("  " + " ".join(f"{str(x):>8}" for x in row) for row in payload[key])
    if payload["root_norms"] is not None:
        lines.append("root_norms: " + " ".join(payload["root_norms"]))
    return payload, "\n".join(lines)


def cmd_orbit(args, group) -> tuple[dict, str]:
    pt = _point_arg(group, args.point)
    if args.action == "size":
        size = orbit_size(group, pt)
        return {"dominant": _pt(pt), "size": size}, f"|G({format_point(pt)})| = {size}"
    orbit = generate_orbit(group, pt, limit=args.max_points)
    payload = {"dominant": _pt(orbit.dominant), "size": orbit.size,
               "points": [_pt(p) for p in orbit.points]}
    text = [f"orbit of ({format_point(orbit.dominant)}): {orbit.size} points"]
    text.extend(f"  ({format_point(p)})" for p in orbit.points)
    return payload, "\n".join(text)


def _sum_payload(result) -> tuple[list, str]:
    return result.to_json(), str(result)


def _parse_signed(spec: Optional[str]) -> tuple[str, str]:
    if not spec:
        return "C", "C"
    kinds = {}
    for part in spec.split(","):
        key, _, val = part.partition(":")
        key, val = key.strip().lower(), val.strip().upper()
        if key not in ("a", "b") or val not in ("C", "S"):
            raise UsageError(f"bad --signed spec {spec!r}; expected a:C|S,b:C|S")
        kinds[key] = val
    return kinds.get("a", "C"), kinds.get("b", "C")


def cmd_product(args, group) -> tuple[dict, str]:
    a = _point_arg(group, args.a, "--a")
    b = _point_arg(group, args.b, "--b")
    ka, kb = _parse_signed(args.signed)
    if ka == "C" and kb == "C" and not args.signed:
        result = orbit_product(generate_orbit(group, a, limit=args.max_points),
                               generate_orbit(group, b, limit=args.max_points),
                               limit=args.max_points)
    else:
        oa = signed_orbit(group, a, limit=args.max_points) if ka == "S" else generate_orbit(group, a, limit=args.max_points)
        ob = signed_orbit(group, b, limit=args.max_points) if kb == "S" else generate_orbit(group, b, limit=args.max_points)
        result = signed_product(oa, ob, limit=args.max_points)
    terms, text = _sum_payload(result)
    payload = {"a": _pt(a), "b": _pt(b), "kind": result.kind, "terms": terms}
    return payload, f"{result.kind}: {text}"


def cmd_power(args, group) -> tuple[dict, str]:
    pt = _point_arg(group, args.point)
    orbit = generate_orbit(group, pt, limit=args.max_points)
    result = symmetrized_power(orbit, args.k, args.component, limit=args.max_points)
    terms, text = _sum_payload(result)
    payload = {"point": _pt(orbit.dominant), "k": args.k, "component": args.component,
               "terms": terms}
    return payload, f"({format_point(orbit.dominant)})^{args.k}_{args.component} = {text}"


def _start_decoration(args, group) -> str:
    if args.decoration is not None:
        return parse_decoration(group, args.decoration)
    if args.point is not None:
        return extreme_decoration(group, _point_arg(group, args.point))
    raise UsageError("give --decoration or --point")


def cmd_faces(args, group):
    if args.action == "membership":
        table = face_membership_table(group)
        payload = {"columns": list(table.columns),
                   "rows": [{"decoration": r, "count": c, "member": [int(v) for v in m]}
                            for r, m, c in zip(table.rows, table.member, table.counts)]}
        lines = ["     " + " ".join(f"{i + 1:>3}" for i in range(len(table.columns)))]
        for i, (r, m, c) in enumerate(zip(table.rows, table.member, table.counts)):
            marks = " ".join(f"{'x' if v else '.':>3}" for v in m)
            lines.append(f"{r:>{group.rank}} {c:>6} {marks}")
        return payload, "\n".join(lines)
    if args.action == "count":
        start = _start_decoration(args, group)
        faces = enumerate_faces(group, start)
        by_dim: dict[str, int] = {}
        for f in faces:
            by_dim[str(f.dimension)] = by_dim.get(str(f.dimension), 0) + f.count
        payload = {
            "start": start,
            "faces": [{"decoration": f.decoration, "dimension": f.dimension, "count": f.count,
                       "symmetry_order": f.symmetry_order,
                       "pointwise_stabilizer_order": f.pointwise_stabilizer_order}
                      for f in faces],
            "totals": by_dim,
        }
        lines = [f"{f.decoration}  dim {f.dimension}  count {f.count}" for f in faces]
        lines.append("totals: " + ", ".join(f"dim {d}: {n}" for d, n in by_dim.items()))
        return payload, "\n".join(lines)
    if args.action == "vertices":
        pt = _point_arg(group, args.point)
        if args.decoration is None:
            raise UsageError("--decoration is required")
        verts = face_vertices(group, pt, args.decoration)
        payload = {"point": _pt(pt), "decoration": args.decoration,
                   "vertices": [_pt(v) for v in verts]}
        return payload, "\n".join(f"({format_point(v)})" for v in verts)
    # mesh
    pt = _point_arg(group, args.point)
    off = export_mesh(group, pt, "off")
    return {"point": _pt(pt), "off": off}, off


def cmd_invariant(args, group):
    pt = _point_arg(group, args.point)
    if args.action == "congruence":
        cls = congruence_number(group, pt)
        payload = {"point": _pt(pt), "values": list(cls.values), "moduli": list(cls.moduli)}
        text = ", ".join(f"{v} mod {m}" for v, m in zip(cls.values, cls.moduli))
        return payload, f"c({format_point(pt)}) = {text}"
    if args.action == "index":
        degree = 2 if args.degree is None else args.degree
        if degree < 0 or degree % 2:
            raise UsageError("--degree must be even and >= 0 for indices")
        value = index_even(group, pt, degree // 2)
        return ({"point": _pt(pt), "degree": degree, "value": str(value)},
                f"I^({degree})({format_point(pt)}) = {value}")
    degree = 3 if args.degree is None else args.degree
    if degree < 1 or degree % 2 == 0:
        raise UsageError("--degree must be odd and >= 1 for anomaly numbers")
    u = anomaly_vector(group, args.removed_node)
    value = anomaly_number(group, pt, u, degree)
    payload = {"point": _pt(pt), "degree": degree, "value": str(value),
               "convention": u.convention()}
    return payload, f"I^({degree})({format_point(pt)}) = {value}  [u = ({format_point(u.u)}), unnormalized]"


# -- parser ---------------------------------------------------------------------

def _common() -> argparse.ArgumentParser:
    # defaults are SUPPRESSed so flags may appear before or after the subcommand
    p = argparse.ArgumentParser(add_help=False)
    p.add_argument("--format", choices=("table", "json", "off"), default=argparse.SUPPRESS)
    p.add_argument("--max-points", type=int, default=argparse.SUPPRESS,
                   help="size guard (default $ORBITKIT_MAX_POINTS or 10000000)")
    p.add_argument("--seed-order", choices=("canonical",), default=argparse.SUPPRESS)
    p.add_argument("--timing", action="store_true", default=argparse.SUPPRESS,
                   help="add wall-clock timing to JSON output")
    return p


def build_parser() -> argparse.ArgumentParser:
    common = _common()
    parser = argparse.ArgumentParser(prog="orbitkit", parents=[common],
                                     description="Exact orbit calculus of finite Coxeter groups.")
    parser.add_argument("--version", action="version", version=f"orbitkit {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, actions=None, help=None):
        sp = sub.add_parser(name, parents=[common], help=help)
        if actions:
            sp.add_argument("action", choices=actions)
        sp.add_argument("group", help='group name, e.g. "A3", "H3", "I2(7)", "A1xA1"')
        return sp

    add("group", ("info",), "group data: order, Cartan and Gram matrices")
    sp = add("orbit", ("gen", "size"), "generate an orbit or compute its size")
    sp.add_argument("--point", help="seed point, e.g. 1,0,1+t")
    sp = add("product", help="decompose a product of two orbits")
    sp.add_argument("--a")
    sp.add_argument("--b")
    sp.add_argument("--signed", help="operand kinds, e.g. a:C,b:S")
    sp = add("power", help="decompose a symmetrized power")
    sp.add_argument("--point")
    sp.add_argument("--k", type=int, choices=(2, 3), required=True)
    sp.add_argument("--component", choices=("symm", "anti", "mixed"), required=True)
    sp = add("faces", ("count", "membership", "vertices", "mesh"), "polytope faces")
    sp.add_argument("--point")
    sp.add_argument("--decoration", help="one of o/b/s per node, e.g. bbo")
    sp = add("invariant", ("congruence", "index", "anomaly"), "orbit invariants")
    sp.add_argument("--point")
    sp.add_argument("--degree", type=int)
    sp.add_argument("--removed-node", type=int)
    return parser


_COMMANDS = {
    "group": cmd_group_info,
    "orbit": cmd_orbit,
    "product": cmd_product,
    "power": cmd_power,
    "faces": cmd_faces,
    "invariant": cmd_invariant,
}


def _emit_error(fmt: str, kind: str, message: str, code: int) -> int:
    if fmt == "json":
        sys.stderr.write(json.dumps({"schema": SCHEMA, "status": "error", "error": kind,
                                     "message": message, "exit_code": code}) + "\n")
    else:
        sys.stderr.write(f"orbitkit: {kind}: {message}\n")
    return code


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    fmt = getattr(args, "format", "table")
    args.max_points = getattr(args, "max_points", None)
    timing = getattr(args, "timing", False)
    if args.command == "power" and args.component == "mixed" and args.k != 3:
        return _emit_error(fmt, "usage", "component 'mixed' needs --k 3", EXIT_USAGE)

    t0 = time.perf_counter()
    try:
        group = build_group(args.group)
        payload, text = _COMMANDS[args.command](args, group)
    except UsageError as exc:
        return _emit_error(fmt, "usage", str(exc), EXIT_USAGE)
    except SizeGuardError as exc:
        return _emit_error(fmt, "size_guard", str(exc), EXIT_GUARD)
    except DomainError as exc:
        return _emit_error(fmt, "domain", str(exc), EXIT_DOMAIN)
    except InternalError as exc:
        return _emit_error(fmt, "internal", str(exc), EXIT_INTERNAL)

    if fmt == "json":
        envelope: dict[str, Any] = {"schema": SCHEMA, "status": "ok", "command": args.command}
        if getattr(args, "action", None):
            envelope["action"] = args.action
        envelope["group"] = group.name
        envelope["payload"] = payload
        if timing:
            envelope["timing"] = {"seconds": round(time.perf_counter() - t0, 6)}
        sys.stdout.write(json.dumps(envelope, indent=2) + "\n")
    elif fmt == "off":
        if args.command != "faces" or args.action != "mesh":
            return _emit_error(fmt, "usage", "--format off is only valid for 'faces mesh'", EXIT_USAGE)
        sys.stdout.write(text)
    else:
        sys.stdout.write(text if text.endswith("\n") else text + "\n")
    if timing and fmt != "json":
        sys.stderr.write(f"elapsed: {time.perf_counter() - t0:.6f} s\n")
    return 0


if __name__ == "__main__":
    sys.exit(main())
