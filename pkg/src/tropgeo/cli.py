"""Command line front door for the min-plus geometry toolkit.

Every library operation is reachable from exactly one subcommand; the
mapping lives in OPERATION_COMMANDS.  Global flags come before the
subcommand: ``tropgeo --format records norm -- -3,-2,1``.  Exit codes:
0 success, 1 domain violation, 2 usage or parse failure, 3 verification
failure.
"""

from __future__ import annotations

import argparse
import math
import sys

from . import ball as _ball
from . import geodesy as _geo
from . import honeycomb as _honey
from .core import (
    DEFAULT_EPS,
    ParseError,
    TropgeoError,
    dist,
    dist_proj,
    embed,
    format_number,
    format_point,
    lp_distances,
    norm,
    norm_proj,
    parse_point,
    parse_projective,
    segment,
    to_orthant_coords,
)

OPERATION_COMMANDS = {
    # core
    "dist": "dist",
    "dist_proj": "dist",
    "lp_distances": "dist",
    "norm": "norm",
    "norm_proj": "norm",
    "segment": "segment",
    "to_orthant_coords": "ball decompose",
    # geodesy
    "polyline_length": "length",
    "curve_length": "circle-length",
    "is_geodesic": "geodesic-check",
    "is_between": "between",
    "pair_hull": "hull",
    "hull": "hull",
    "hull_iterate_oracle": "hull",
    "region_contains": "region-contains",
    "is_tropically_geodesic": "classify2d",
    "classify2d": "classify2d",
    # ball
    "contains": "ball decompose",
    "hrep": "ball hrep",
    "vertices": "ball vertices",
    "facets": "ball facets",
    "opposite": "ball facets",
    "facet_of": "sphere poles",
    "is_diametral_pair": "sphere diametral",
    "minkowski_coeffs": "ball decompose",
    "orthant_of": "ball decompose",
    "generator_coeffs": "ball decompose",
    "eval_trop_combination": "ball decompose",
    "pole_distances": "sphere poles",
    "intrinsic_distance_2d": "sphere distance",
    "angle_2d": "sphere angle",
    # honeycomb
    "in_lattice": "honeycomb neighbors",
    "locate": "honeycomb locate",
    "locate_bruteforce": "honeycomb locate",
    "neighbors": "honeycomb neighbors",
    "verify_tiling": "honeycomb verify",
    "lattice_basis": "honeycomb basis",
}


def _bool_text(v: bool) -> str:
    return "true" if v else "false"


def _emit(args, lines, records):
    if args.format == "records":
        blocks = []
        for rec in records:
            blocks.append("\n".join("%s=%s" % (k, v) for k, v in rec.items()))
        sys.stdout.write("\n\n".join(blocks) + "\n")
    else:
        for line in lines:
            sys.stdout.write(line + "\n")


def _parse_any(text: str):
    """Comma text is a point (projective=False); colon text is projective."""
    if ":" in text:
        return parse_projective(text), True
    return parse_point(text), False


def _read_points_file(path: str):
    try:
        fh = open(path)
    except OSError as exc:
        raise ParseError("cannot read %s: %s" % (path, exc)) from None
    with fh:
        pts = []
        for line in fh:
            s = line.strip()
            if not s or s.startswith("#"):
                continue
            pts.append(parse_point(s))
    return pts


def _gather_points(args):
    pts = [parse_point(t) for t in getattr(args, "points", []) or []]
    if getattr(args, "file", None):
        pts.extend(_read_points_file(args.file))
    if not pts:
        raise ParseError("no points given (pass them as arguments or via --file)")
    return pts


def _region_lines(region):
    lines = ["dim: %d" % region.dim]
    for i in range(region.dim):
        lines.append(
            "%s <= x%d <= %s"
            % (format_number(region.lower[i]), i + 1, format_number(region.upper[i]))
        )
    for i in range(region.dim):
        for j in range(region.dim):
            if i != j:
                lines.append(
                    "x%d - x%d >= %s"
                    % (i + 1, j + 1, format_number(region.diff_lb[i][j]))
                )
    return lines


def _region_records(region):
    recs = [{"op": "region", "dim": region.dim}]
    for i in range(region.dim):
        recs.append(
            {
                "kind": "bound",
                "i": i + 1,
                "lower": format_number(region.lower[i]),
                "upper": format_number(region.upper[i]),
            }
        )
    for i in range(region.dim):
        for j in range(region.dim):
            if i != j:
                recs.append(
                    {
                        "kind": "diff",
                        "i": i + 1,
                        "j": j + 1,
                        "lower": format_number(region.diff_lb[i][j]),
                    }
                )
    return recs


def _require_text(args):
    if args.format in ("csv", "svg"):
        raise ParseError("--format %s is only available for honeycomb plot2d" % args.format)


def cmd_dist(args):
    _require_text(args)
    x, px = _parse_any(args.x)
    y, py = _parse_any(args.y)
    if px != py:
        raise ParseError("mix of projective and plain coordinates")
    if px:
        value = dist_proj(x, y)
        rec = {"op": "dist_proj", "value": format_number(value)}
        lines = [format_number(value)]
    else:
        value = dist(x, y)
        rec = {"op": "dist", "value": format_number(value)}
        lines = [format_number(value)]
        if args.lp:
            d1, dinf = lp_distances(x, y)
            rec["l1"] = format_number(d1)
            rec["linf"] = format_number(dinf)
            lines = [
                "trop: %s" % format_number(value),
                "l1: %s" % format_number(d1),
                "linf: %s" % format_number(dinf),
            ]
    _emit(args, lines, [rec])
    return 0


def cmd_norm(args):
    _require_text(args)
    x, proj = _parse_any(args.x)
    value = norm_proj(x) if proj else norm(x)
    op = "norm_proj" if proj else "norm"
    _emit(args, [format_number(value)], [{"op": op, "value": format_number(value)}])
    return 0


def cmd_segment(args):
    _require_text(args)
    seg = segment(parse_point(args.x), parse_point(args.y), mode=args.mode)
    lines = ["apex: %s" % format_point(seg.apex)]
    lines += ["vertex: %s" % format_point(v) for v in seg.vertices]
    lines.append("length: %s" % format_number(seg.length()))
    recs = [
        {
            "op": "segment",
            "mode": seg.mode,
            "apex": format_point(seg.apex),
            "length": format_number(seg.length()),
        }
    ]
    recs += [
        {"kind": "vertex", "index": i, "point": format_point(v)}
        for i, v in enumerate(seg.vertices)
    ]
    _emit(args, lines, recs)
    return 0


def cmd_length(args):
    _require_text(args)
    value = _geo.polyline_length(_gather_points(args))
    _emit(args, [format_number(value)], [{"op": "length", "value": format_number(value)}])
    return 0


def cmd_circle_length(args):
    _require_text(args)
    if args.radius <= 0:
        raise ParseError("radius must be positive")
    cx, cy = parse_point(args.center) if args.center else (0.0, 0.0)

    def circle(t):
        ang = 2.0 * math.pi * t
        return (cx + args.radius * math.cos(ang), cy + args.radius * math.sin(ang))

    value = _geo.curve_length(circle, tol=args.tol)
    _emit(
        args,
        [format_number(value)],
        [{"op": "circle-length", "radius": format_number(args.radius), "value": format_number(value)}],
    )
    return 0


def cmd_geodesic_check(args):
    _require_text(args)
    ok = _geo.is_geodesic(_gather_points(args), eps=args.eps)
    _emit(args, [_bool_text(ok)], [{"op": "geodesic-check", "result": _bool_text(ok)}])
    return 0


def cmd_between(args):
    _require_text(args)
    ok = _geo.is_between(
        parse_point(args.x), parse_point(args.z), parse_point(args.y), eps=args.eps
    )
    _emit(args, [_bool_text(ok)], [{"op": "between", "result": _bool_text(ok)}])
    return 0


def cmd_hull(args):
    _require_text(args)
    pts = _gather_points(args)
    region = _geo.hull(pts, eps=args.eps)
    lines = _region_lines(region)
    recs = _region_records(region)
    if args.oracle_samples:
        sampled = _geo.hull_iterate_oracle(
            pts, depth=args.oracle_depth, samples=args.oracle_samples, seed=args.seed
        )
        for p in sampled[len(pts):]:
            lines.append("sample: %s" % format_point(p))
            recs.append({"kind": "sample", "point": format_point(p)})
    _emit(args, lines, recs)
    return 0


def cmd_region_contains(args):
    _require_text(args)
    region = _geo.hull(_read_points_file(args.file), eps=args.eps)
    ok = _geo.region_contains(region, parse_point(args.point), eps=args.eps)
    _emit(args, [_bool_text(ok)], [{"op": "region-contains", "result": _bool_text(ok)}])
    return 0


def cmd_classify2d(args):
    _require_text(args)
    lower = (args.a, args.b)
    upper = (args.a2, args.b2)
    diff = ((0.0, -args.c2), (args.c, 0.0))
    region = _geo.GeodesicRegion(lower, upper, diff, eps=args.eps)
    shape = _geo.classify2d(region, eps=args.eps)
    edge_names = " ".join(_geo.EDGE_NAMES[k] for k in shape.present_edges)
    lines = [
        "kind: %s" % shape.kind,
        "edges: %s" % edge_names,
        "edge_count: %d" % shape.edge_count,
        "canonical_id: %d" % shape.canonical_id,
    ]
    recs = [
        {
            "op": "classify2d",
            "kind": shape.kind,
            "edges": edge_names,
            "edge_count": shape.edge_count,
            "canonical_id": shape.canonical_id,
        }
    ]
    _emit(args, lines, recs)
    return 0


def cmd_ball_vertices(args):
    _require_text(args)
    verts = _ball.vertices(args.dim)
    lines = [format_point(v) for v in verts]
    recs = [{"op": "vertices", "dim": args.dim, "count": len(verts)}]
    recs += [{"kind": "vertex", "index": i, "point": format_point(v)} for i, v in enumerate(verts)]
    _emit(args, lines, recs)
    return 0


def cmd_ball_facets(args):
    _require_text(args)
    fs = _ball.facets(args.dim)
    lines = ["%s opposite %s" % (f, _ball.opposite(f)) for f in fs]
    recs = [{"op": "facets", "dim": args.dim, "count": len(fs)}]
    for f in fs:
        rec = {"kind": f.kind, "i": f.i, "opposite": str(_ball.opposite(f))}
        if f.j is not None:
            rec["j"] = f.j
        recs.append(rec)
    _emit(args, lines, recs)
    return 0


def cmd_ball_hrep(args):
    _require_text(args)
    center = parse_point(args.center) if args.center else (0.0,) * args.dim
    if len(center) != args.dim:
        raise ParseError("--center does not match --dim")
    region = _ball.hrep(_ball.Ball(center, args.radius), eps=args.eps)
    _emit(args, _region_lines(region), _region_records(region))
    return 0


def cmd_ball_decompose(args):
    _require_text(args)
    x = parse_point(args.point)
    n = len(x)
    if not _ball.contains(_ball.unit_ball(n), x, eps=args.eps):
        raise TropgeoError("point lies outside the unit ball")
    mk = _ball.minkowski_coeffs(x, eps=args.eps)
    gc = _ball.generator_coeffs(x, eps=args.eps)
    gens = _ball.neg_units(n)
    recomposed = _ball.eval_trop_combination(gc, gens)
    err = max(
        max(abs(a - b) for a, b in zip(recomposed, x)),
        max(abs(a - b) for a, b in zip(_ball.zonotope_point(mk), x)),
    )
    oc = to_orthant_coords(embed(x))
    orth = _ball.orthant_of(x, eps=args.eps)
    lines = [
        "point: %s" % format_point(x),
        "orthant: %s" % ",".join(str(k) for k in orth),
        "orthant_coords: omit=%d %s" % (oc.omitted_index, format_point(oc.values)),
        "minkowski: %s" % format_point(mk),
        "generators: %s" % " ".join(format_point(g) for g in gens),
        "generator_coeffs: %s" % format_point(gc),
        "recomposed: %s" % format_point(recomposed),
        "max_error: %s" % format_number(err),
    ]
    recs = [
        {
            "op": "decompose",
            "point": format_point(x),
            "orthant": ",".join(str(k) for k in orth),
            "orthant_omit": oc.omitted_index,
            "orthant_values": format_point(oc.values),
            "minkowski": format_point(mk),
            "generator_coeffs": format_point(gc),
            "recomposed": format_point(recomposed),
            "max_error": format_number(err),
        }
    ]
    _emit(args, lines, recs)
    return 0


def cmd_sphere_poles(args):
    _require_text(args)
    x = parse_point(args.point)
    fs = _ball.facet_of(x, eps=args.eps)
    d_plus, d_minus = _ball.pole_distances(x, eps=args.eps)
    lines = [
        "point: %s" % format_point(x),
        "facets: %s" % " ".join(str(f) for f in fs),
        "d_plus: %s" % format_number(d_plus),
        "d_minus: %s" % format_number(d_minus),
    ]
    recs = [
        {
            "op": "poles",
            "point": format_point(x),
            "facets": " ".join(str(f) for f in fs),
            "d_plus": format_number(d_plus),
            "d_minus": format_number(d_minus),
        }
    ]
    _emit(args, lines, recs)
    return 0


def cmd_sphere_angle(args):
    _require_text(args)
    value = _ball.angle_2d(
        parse_point(args.at), parse_point(args.v1), parse_point(args.v2), eps=args.eps
    )
    _emit(args, [format_number(value)], [{"op": "angle", "value": format_number(value)}])
    return 0


def cmd_sphere_distance(args):
    _require_text(args)
    center = parse_point(args.center) if args.center else (0.0, 0.0)
    value = _ball.intrinsic_distance_2d(
        center, parse_point(args.x), parse_point(args.y), eps=args.eps
    )
    _emit(args, [format_number(value)], [{"op": "sphere-distance", "value": format_number(value)}])
    return 0


def cmd_sphere_diametral(args):
    _require_text(args)
    center = parse_point(args.center) if args.center else None
    p = parse_point(args.p)
    q = parse_point(args.q)
    b = _ball.Ball(center if center else (0.0,) * len(p), args.radius)
    ok = _ball.is_diametral_pair(b, p, q, eps=args.eps)
    _emit(args, [_bool_text(ok)], [{"op": "diametral", "result": _bool_text(ok)}])
    return 0


def cmd_honeycomb_locate(args):
    _require_text(args)
    res = _honey.locate(parse_point(args.point), eps=args.eps)
    all_text = " ".join(format_point(c) for c in res.all_centers)
    lines = [
        "center: %s" % format_point(res.center),
        "status: %s" % res.status,
        "distance: %s" % format_number(res.distance),
        "all_centers: %s" % all_text,
    ]
    recs = [
        {
            "op": "locate",
            "center": format_point(res.center),
            "status": res.status,
            "distance": format_number(res.distance),
            "all_centers": all_text,
        }
    ]
    _emit(args, lines, recs)
    return 0


def cmd_honeycomb_verify(args):
    _require_text(args)
    report = _honey.verify_tiling(
        args.dim,
        box_halfwidth=args.box,
        samples=args.samples,
        seed=args.seed,
        eps=args.eps,
    )
    pairs = [
        ("n", report.n),
        ("samples", report.samples),
        ("box", format_number(report.box_halfwidth)),
        ("seed", report.seed),
        ("interior", report.interior),
        ("boundary", report.boundary),
        ("mismatches", report.mismatches),
    ]
    lines = ["%s: %s" % (k, v) for k, v in pairs]
    recs = [dict([("op", "verify")] + pairs)]
    _emit(args, lines, recs)
    return 3 if report.mismatches else 0


def cmd_honeycomb_neighbors(args):
    _require_text(args)
    center = _honey.as_center(parse_point(args.center))
    if not _honey.in_lattice(center):
        raise TropgeoError("center %s is not in the tiling lattice" % format_point(center))
    ns = _honey.neighbors(center, eps=args.eps)
    lines = [format_point(c) for c in ns]
    recs = [{"op": "neighbors", "center": format_point(center), "count": len(ns)}]
    recs += [{"kind": "neighbor", "index": i, "center": format_point(c)} for i, c in enumerate(ns)]
    _emit(args, lines, recs)
    return 0


def cmd_honeycomb_basis(args):
    _require_text(args)
    basis = _honey.lattice_basis(args.dim)
    lines = ["basis: %s" % format_point(v) for v in basis]
    recs = [{"op": "basis", "dim": args.dim}]
    recs += [{"kind": "basis", "index": i, "vector": format_point(v)} for i, v in enumerate(basis)]
    if args.dim == 2:
        same = _honey.spans_same_lattice(basis, _honey.HEX_BASIS_2D)
        for v in _honey.HEX_BASIS_2D:
            lines.append("hex_basis: %s" % format_point(v))
            recs.append({"kind": "hex_basis", "vector": format_point(v)})
        lines.append("same_lattice: %s" % _bool_text(same))
        recs.append({"kind": "check", "same_lattice": _bool_text(same)})
    _emit(args, lines, recs)
    return 0


def _render_svg(rings, w):
    pad = 1.6
    lo = -(w + pad)
    size = 2 * (w + pad)
    out = [
        '<svg xmlns="http://www.w3.org/2000/svg" viewBox="%g %g %g %g" '
        'width="640" height="640">' % (lo, lo, size, size),
        '<rect x="%g" y="%g" width="%g" height="%g" fill="white"/>' % (lo, lo, size, size),
    ]
    for center, ring in rings:
        pts = " ".join("%g,%g" % (x, -y) for x, y in ring)
        out.append(
            '<polygon points="%s" fill="#dbe7f3" stroke="#444" stroke-width="0.06"/>' % pts
        )
        out.append(
            '<circle cx="%g" cy="%g" r="0.08" fill="#444"/>' % (center[0], -center[1])
        )
    out.append("</svg>")
    return "\n".join(out) + "\n"


def _render_rings_csv(rings):
    lines = []
    for _, ring in rings:
        flat = []
        for x, y in ring:
            flat.append(format_number(x))
            flat.append(format_number(y))
        lines.append(",".join(flat))
    return "\n".join(lines) + "\n"


def cmd_honeycomb_plot2d(args):
    fmt = args.format
    if fmt == "text":
        fmt = "svg"
    if fmt not in ("svg", "csv"):
        raise ParseError("plot2d supports --format svg or csv")
    if args.box < 0:
        raise ParseError("--box must be nonnegative")
    rings = _honey.hexagon_rings(args.box)
    payload = _render_svg(rings, args.box) if fmt == "svg" else _render_rings_csv(rings)
    if args.out:
        try:
            with open(args.out, "w") as fh:
                fh.write(payload)
        except OSError as exc:
            raise ParseError("cannot write %s: %s" % (args.out, exc)) from None
    else:
        sys.stdout.write(payload)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="tropgeo",
        description="Min-plus metric geometry: distances, geodesics, balls, tilings.",
    )
    parser.add_argument("--eps", type=float, default=DEFAULT_EPS, help="comparison tolerance")
    parser.add_argument("--seed", type=int, default=0, help="seed for randomized subcommands")
    parser.add_argument(
        "--format",
        choices=("text", "records", "csv", "svg"),
        default="text",
        help="output format (csv/svg only for honeycomb plot2d)",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("dist", help="distance between two points (colon form: projective)")
    p.add_argument("x")
    p.add_argument("y")
    p.add_argument("--lp", action="store_true", help="also print l1 and linf distances")
    p.set_defaults(handler=cmd_dist)

    p = sub.add_parser("norm", help="distance to the origin")
    p.add_argument("x")
    p.set_defaults(handler=cmd_norm)

    p = sub.add_parser("segment", help="canonical shortest chain between two points")
    p.add_argument("x")
    p.add_argument("y")
    p.add_argument("--mode", choices=("min", "max"), default="min")
    p.set_defaults(handler=cmd_segment)

    p = sub.add_parser("length", help="length of a polyline")
    p.add_argument("points", nargs="*")
    p.add_argument("--file", help="one comma-separated point per line, # comments")
    p.set_defaults(handler=cmd_length)

    p = sub.add_parser("circle-length", help="min-plus length of a Euclidean circle")
    p.add_argument("--radius", type=float, required=True)
    p.add_argument("--tol", type=float, default=1e-6)
    p.add_argument("--center", help="circle center, default 0,0")
    p.set_defaults(handler=cmd_circle_length)

    p = sub.add_parser("geodesic-check", help="is the polyline a geodesic?")
    p.add_argument("points", nargs="*")
    p.add_argument("--file")
    p.set_defaults(handler=cmd_geodesic_check)

    p = sub.add_parser("between", help="does z lie between x and y?")
    p.add_argument("x")
    p.add_argument("z")
    p.add_argument("y")
    p.set_defaults(handler=cmd_between)

    p = sub.add_parser("hull", help="smallest geodesically closed region containing points")
    p.add_argument("points", nargs="*")
    p.add_argument("--file")
    p.add_argument("--oracle-samples", type=int, default=0, help="also print Monte-Carlo betweenness samples")
    p.add_argument("--oracle-depth", type=int, default=1)
    p.set_defaults(handler=cmd_hull)

    p = sub.add_parser("region-contains", help="membership in the hull of a point file")
    p.add_argument("--file", required=True)
    p.add_argument("--point", required=True)
    p.set_defaults(handler=cmd_region_contains)

    p = sub.add_parser("classify2d", help="shape type of a planar bound system")
    p.add_argument("--a", type=float, required=True, help="lower bound on x")
    p.add_argument("--a2", type=float, required=True, help="upper bound on x")
    p.add_argument("--b", type=float, required=True, help="lower bound on y")
    p.add_argument("--b2", type=float, required=True, help="upper bound on y")
    p.add_argument("--c", type=float, required=True, help="lower bound on y-x")
    p.add_argument("--c2", type=float, required=True, help="upper bound on y-x")
    p.set_defaults(handler=cmd_classify2d)

    p = sub.add_parser("ball", help="unit ball combinatorics")
    bsub = p.add_subparsers(dest="ball_command", required=True)
    q = bsub.add_parser("vertices", help="vertices of the unit ball")
    q.add_argument("--dim", type=int, required=True)
    q.set_defaults(handler=cmd_ball_vertices)
    q = bsub.add_parser("facets", help="facets with their opposites")
    q.add_argument("--dim", type=int, required=True)
    q.set_defaults(handler=cmd_ball_facets)
    q = bsub.add_parser("hrep", help="ball as a bound system")
    q.add_argument("--dim", type=int, required=True)
    q.add_argument("--center")
    q.add_argument("--radius", type=float, default=1.0)
    q.set_defaults(handler=cmd_ball_hrep)
    q = bsub.add_parser("decompose", help="orthant chart and zonotope splits of a ball point")
    q.add_argument("--point", required=True)
    q.set_defaults(handler=cmd_ball_decompose)

    p = sub.add_parser("sphere", help="intrinsic geometry of the unit sphere")
    ssub = p.add_subparsers(dest="sphere_command", required=True)
    q = ssub.add_parser("poles", help="facets and pole distances of a sphere point")
    q.add_argument("--point", required=True)
    q.set_defaults(handler=cmd_sphere_poles)
    q = ssub.add_parser("angle", help="angle between two rays (planar)")
    q.add_argument("--at", default="0,0")
    q.add_argument("--v1", required=True)
    q.add_argument("--v2", required=True)
    q.set_defaults(handler=cmd_sphere_angle)
    q = ssub.add_parser("distance", help="arc distance between planar sphere points")
    q.add_argument("--x", required=True)
    q.add_argument("--y", required=True)
    q.add_argument("--center")
    q.set_defaults(handler=cmd_sphere_distance)
    q = ssub.add_parser("diametral", help="do two sphere points realize the diameter?")
    q.add_argument("--p", required=True)
    q.add_argument("--q", required=True)
    q.add_argument("--center")
    q.add_argument("--radius", type=float, default=1.0)
    q.set_defaults(handler=cmd_sphere_diametral)

    p = sub.add_parser("honeycomb", help="the tiling of space by unit balls")
    hsub = p.add_subparsers(dest="honeycomb_command", required=True)
    q = hsub.add_parser("locate", help="which tiling ball contains a point")
    q.add_argument("--point", required=True)
    q.set_defaults(handler=cmd_honeycomb_locate)
    q = hsub.add_parser("verify", help="randomized covering/disjointness check")
    q.add_argument("--dim", type=int, required=True)
    q.add_argument("--samples", type=int, default=100_000)
    q.add_argument("--box", type=float, default=10.0)
    q.set_defaults(handler=cmd_honeycomb_verify)
    q = hsub.add_parser("neighbors", help="centers sharing a facet with a given center")
    q.add_argument("--center", required=True)
    q.set_defaults(handler=cmd_honeycomb_neighbors)
    q = hsub.add_parser("basis", help="a lattice basis for the tiling centers")
    q.add_argument("--dim", type=int, required=True)
    q.set_defaults(handler=cmd_honeycomb_basis)
    q = hsub.add_parser("plot2d", help="draw the planar tiling (svg or csv)")
    q.add_argument("--box", type=float, required=True)
    q.add_argument("--out", help="output file; stdout when omitted")
    q.set_defaults(handler=cmd_honeycomb_plot2d)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.eps <= 0 or not math.isfinite(args.eps):
        print("error: --eps must be a positive real", file=sys.stderr)
        return 2
    try:
        return args.handler(args)
    except ParseError as exc:
        print("error: %s" % exc, file=sys.stderr)
        return 2
    except TropgeoError as exc:
        print("error: %s" % exc, file=sys.stderr)
        return 1


def entry():
    raise SystemExit(main())


if __name__ == "__main__":
    entry()
