"""
Command line front end.

Exit codes: 0 success, 1 invalid input, 2 a property check failed (a bug,
reported loudly), 3 a layered construction degenerated.
"""
import argparse
import json
import os
import sys

from . import carried, discgeo, layering, surface_flip, taut, tri_core

EXIT_OK, EXIT_INPUT, EXIT_PROPERTY, EXIT_CONSTRUCTION = 0, 1, 2, 3


class InputError(Exception):
    pass


class PropertyFailure(Exception):
    pass


def thread_limit(environ=None):
    """Parse ``TAUTFORGE_THREADS`` (0 = auto).  Work runs on one thread either way."""
    env = os.environ if environ is None else environ
    raw = env.get("TAUTFORGE_THREADS", "0").strip() or "0"
    if not raw.isdigit():
        raise InputError("TAUTFORGE_THREADS must be a non-negative integer, got {!r}".format(raw))
    return int(raw)


def _read(path):
    try:
        with open(path, encoding="ascii") as fh:
            return fh.read()
    except (OSError, UnicodeDecodeError) as exc:
        raise InputError("{}: {}".format(path, exc)) from None


def _load(path):
    text = _read(path)
    try:
        if text.lstrip().startswith("{"):
            return tri_core.from_json(text)
        return tri_core.parse_document(text)
    except tri_core.TriangulationError as exc:
        raise InputError("{}: {}".format(path, exc)) from None
    except ValueError as exc:
        raise InputError("{}: {}".format(path, exc)) from None


def _emit(args, payload, lines):
    if args.json:
        sys.stdout.write(json.dumps(payload, sort_keys=True, indent=2) + "\n")
    else:
        sys.stdout.write("\n".join(lines) + "\n")


def _pick_coor(tri, file_flags, index):
    """The ``--coor K`` structure in enumeration order, or the file's own block."""
    if index is None and file_flags is not None:
        try:
            return None, taut.Coorientation.from_flags(tri, file_flags)
        except taut.TautError as exc:
            raise InputError(str(exc)) from None
    structures = taut.enumerate_taut(tri)
    k = 0 if index is None else index
    if not 0 <= k < len(structures):
        raise InputError("--coor {} out of range: {} taut structure(s)".format(k, len(structures)))
    return k, structures[k]


def _signs(coor):
    return "".join("+" if s > 0 else "-" for s in coor.signs)


# -- subcommands -----------------------------------------------------------


def cmd_validate(args):
    tri, flags = _load(args.file)
    report = tri_core.validate(tri)
    payload = report.as_dict()
    lines = ["tets        {}".format(report.tet_count),
             "orientable  {}".format(report.orientable),
             "connected   {}".format(report.connected),
             "edges       {} (degrees {})".format(report.num_edges,
                                                 " ".join(map(str, report.edge_degrees))),
             "cusps       {} (euler {})".format(report.num_cusps,
                                                " ".join(map(str, report.cusp_euler_chars)))]
    lines += ["problem     {}".format(p) for p in report.problems]
    _emit(args, payload, lines)
    return EXIT_INPUT if report.problems else EXIT_OK


def _coor_summary(tri, coor):
    return {
        "signs": _signs(coor),
        "coor_block": tri_core.serialize(tri, coor.flags(tri)).split("\n")[2 + tri.tet_count:-1],
        "cusp_pi_profile": taut.cusp_angle_profile(tri, coor),
    }


def cmd_taut_enumerate(args):
    tri, _ = _load(args.file)
    try:
        structures = taut.enumerate_taut(tri)
    except taut.TautError as exc:
        raise InputError(str(exc)) from None
    payload = {"count": len(structures),
               "structures": [dict(index=k, **_coor_summary(tri, c))
                              for k, c in enumerate(structures)]}
    lines = ["{} taut structure(s)".format(len(structures))]
    lines += ["{:>3}  {}".format(k, _signs(c)) for k, c in enumerate(structures)]
    _emit(args, payload, lines)
    return EXIT_OK


def cmd_taut_check(args):
    tri, flags = _load(args.file)
    try:
        k, coor = _pick_coor(tri, flags, args.coor)
        prop9 = taut.check_prop9(tri, coor)
    except taut.TautError as exc:
        raise InputError(str(exc)) from None
    full = taut.check_full_taut(tri, coor)
    if prop9 != full:
        raise PropertyFailure("pi-corner criterion disagrees with tautness")
    payload = {"index": k, "signs": _signs(coor), "two_in_two_out": taut.check_tet_condition(tri, coor),
               "edge_pi_counts": taut.edge_pi_counts(tri, coor), "taut": full, "prop9": prop9}
    lines = ["coorientation  {}".format(_signs(coor)),
             "two-in/two-out {}".format(payload["two_in_two_out"]),
             "edge pi counts {}".format(" ".join(map(str, payload["edge_pi_counts"]))),
             "taut           {}".format(full)]
    _emit(args, payload, lines)
    return EXIT_OK if full else EXIT_INPUT


def cmd_layer(args):
    if args.spec:
        try:
            spec = layering.MonodromySpec.from_json(_read(args.spec))
        except (ValueError, surface_flip.SurfaceError) as exc:
            raise InputError("{}: {}".format(args.spec, exc)) from None
    else:
        if args.surface != "ptorus" or not args.word:
            raise InputError("give --spec FILE or --surface ptorus --word W")
        try:
            spec = layering.MonodromySpec.from_word(args.word)
        except (ValueError, surface_flip.SurfaceError) as exc:
            raise InputError(str(exc)) from None
    tri, coor = layering.build_mapping_torus(spec)
    text = tri_core.serialize(tri, coor.flags(tri))
    if args.out:
        with open(args.out, "w", encoding="ascii", newline="\n") as fh:
            fh.write(text)
    report = tri_core.validate(tri)
    payload = {"tets": tri.tet_count, "flips": list(spec.flips),
               "cusps": report.num_cusps, "edge_degrees": list(report.edge_degrees),
               "out": args.out}
    if not args.out:
        payload["triangulation"] = text
    lines = ["tets {}  flips {}  cusps {}".format(tri.tet_count, " ".join(map(str, spec.flips)),
                                                 report.num_cusps)]
    if not args.out:
        lines.append(text.rstrip("\n"))
    _emit(args, payload, lines)
    return EXIT_OK


def cmd_carried(args):
    tri, flags = _load(args.file)
    try:
        k, coor = _pick_coor(tri, flags, args.coor)
        system = carried.switch_system(tri, coor)
    except (taut.TautError, carried.CarriedError) as exc:
        raise InputError(str(exc)) from None
    if args.max_total < 0:
        raise InputError("--max-total must be non-negative")
    cycle = taut.dual_cycle(tri, coor)
    rows = []
    for w in carried.enumerate_solutions(system, args.max_total):
        total = sum(w)
        if total == 0 or total % 2:
            continue
        chi = carried.euler_char(w)
        pair = carried.pairing(cycle, tri, coor, w)
        rep = carried.reconstruct(tri, coor, w, system)
        if not (abs(pair) == total == -2 * chi and rep.euler_char == chi):
            raise PropertyFailure("norm identity fails for weights {}".format(w))
        rows.append({"weights": list(w), "total": total, "euler_char": chi,
                     "pairing": pair, **rep.as_dict()})
    payload = {"coor": k, "signs": _signs(coor), "switches": system.matrix(), "surfaces": rows}
    lines = ["coorientation {}  {} surface(s) with total <= {}".format(
        _signs(coor), len(rows), args.max_total),
        "{:<24} {:>5} {:>5} {:>7} {:>5} {:>8}".format("weights", "total", "chi", "pairing",
                                                     "comps", "boundary")]
    for r in rows:
        lines.append("{:<24} {:>5} {:>5} {:>7} {:>5} {:>8}".format(
            " ".join(map(str, r["weights"])), r["total"], r["euler_char"], r["pairing"],
            len(r["components"]), sum(c["boundary_curves"] for c in r["components"])))
    _emit(args, payload, lines)
    return EXIT_OK


def cmd_discs(args):
    tri, flags = _load(args.file)
    if not 0 <= args.tet < tri.tet_count:
        raise InputError("--tet {} out of range".format(args.tet))
    if args.max_cusps < 0:
        raise InputError("--max-cusps must be non-negative")
    try:
        k, coor = _pick_coor(tri, flags, args.coor)
    except taut.TautError as exc:
        raise InputError(str(exc)) from None
    model = discgeo.model_for(tri, coor, args.tet)
    patterns = discgeo.enumerate_admissible_discs(model, args.max_cusps)
    try:
        report = discgeo.check_prop12_suite(model, args.max_cusps, patterns)
    except discgeo.Prop12Violation as exc:
        raise PropertyFailure(str(exc)) from None
    for p in patterns:
        if discgeo.g_dot(model, p) != discgeo.g_dot_oracle(model, p):
            raise PropertyFailure("G.D disagrees with the winding-number count: " + p.describe())
    payload = {"coor": k, "tet": args.tet, "summary": report.as_dict(),
               "patterns": [discgeo.pattern_to_dict(model, p) for p in patterns]}
    lines = ["tet {}  pi edges {}  {} admissible pattern(s) with c <= {}".format(
        args.tet, " ".join("e{}{}".format(*e) for e in model.pi_edges), len(patterns),
        args.max_cusps),
        "{:>4} {:>8} {:>10}".format("c", "patterns", "max |G.D|")]
    for c in sorted(report.by_cusps):
        best = max(abs(discgeo.g_dot(model, p)) for p in patterns
                   if discgeo.cusp_count(model, p) == c)
        lines.append("{:>4} {:>8} {:>10}".format(c, report.by_cusps[c], str(best)))
    lines.append("area >= |G.D| and |G.D| <= c/2 hold on all patterns")
    _emit(args, payload, lines)
    return EXIT_OK


def cmd_flippath(args):
    try:
        a = surface_flip.parse_surface(_read(args.source))
        b = surface_flip.parse_surface(_read(args.target))
    except (surface_flip.SurfaceError, ValueError) as exc:
        raise InputError(str(exc)) from None
    seq = surface_flip.flip_path_bfs(a, b, args.max_depth)
    found = seq is not None
    payload = {"found": found, "flips": list(seq.flips) if found else None,
               "closing": [list(c) for c in seq.closing] if found else None}
    if found:
        lines = ["{} flip(s): {}".format(len(seq.flips), " ".join(map(str, seq.flips)) or "-")]
    else:
        lines = ["no path within {} flips".format(args.max_depth)]
    _emit(args, payload, lines)
    return EXIT_OK if found else EXIT_INPUT


def build_parser():
    parser = argparse.ArgumentParser(prog="tautforge",
                                     description="Taut ideal triangulations toolkit.")
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, func, help_text, parent=sub):
        p = parent.add_parser(name, help=help_text)
        p.add_argument("--json", action="store_true", help="machine-readable output")
        p.set_defaults(func=func)
        return p

    p = add("validate", cmd_validate, "parse and check a triangulation file")
    p.add_argument("file")

    tp = sub.add_parser("taut", help="taut structures")
    tsub = tp.add_subparsers(dest="taut_command", required=True)
    p = add("enumerate", cmd_taut_enumerate, "list all taut coorientations", tsub)
    p.add_argument("file")
    p = add("check", cmd_taut_check, "check a coorientation", tsub)
    p.add_argument("file")
    p.add_argument("--coor", type=int, help="index into the enumeration (default: file block)")

    p = add("layer", cmd_layer, "layered triangulation of a mapping torus")
    p.add_argument("--surface", choices=["ptorus"], default="ptorus")
    p.add_argument("--word", help="monodromy word in R and L")
    p.add_argument("--spec", help="JSON file with base, flips and closing map")
    p.add_argument("--out", help="write the triangulation here")

    p = add("carried", cmd_carried, "surfaces carried by the branched surface")
    p.add_argument("file")
    p.add_argument("--coor", type=int)
    p.add_argument("--max-total", type=int, default=8)

    p = add("discs", cmd_discs, "admissible discs in one truncated tetrahedron")
    p.add_argument("file")
    p.add_argument("--coor", type=int)
    p.add_argument("--tet", type=int, default=0)
    p.add_argument("--max-cusps", type=int, default=6)

    p = add("flippath", cmd_flippath, "shortest flip path between surface triangulations")
    p.add_argument("source")
    p.add_argument("target")
    p.add_argument("--max-depth", type=int, default=6)
    return parser


def run(argv=None):
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code == 0 else EXIT_INPUT
    try:
        thread_limit()
        return args.func(args)
    except InputError as exc:
        print("error: {}".format(exc), file=sys.stderr)
        return EXIT_INPUT
    except PropertyFailure as exc:
        print("property violation: {}".format(exc), file=sys.stderr)
        return EXIT_PROPERTY
    except layering.LayeringError as exc:
        print("construction failed: {}".format(exc), file=sys.stderr)
        return EXIT_CONSTRUCTION


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
