"""Drawing file format, structured reports, SVG rendering, and the command
line interface.

Drawing files are plain text: first a line with n, then one "x y" line per
vertex with exact rationals like 17/12 (or bare integers); '#' starts a
comment. Serialization round-trips bit-exactly. Reports are versioned JSON
with a "schema" field. Decimal output exists only inside SVG files and never
feeds back into any geometry.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from . import constructions as C
from .geom import Drawing, GeneralPositionError, Point, validate_general_position
from .profile import (
    crossing_counts,
    crossing_profile,
    k_edge_count,
    leq_k_edge_count,
    primed_profile,
    total_crossings,
)
from .search import ZeroSearchError, extremal_sweep, find_zero_ek

REPORT_SCHEMA = "crossing-profile-report/1"
SWEEP_SCHEMA = "sweep-report/1"

EXIT_OK = 0
EXIT_CLAIM_FALSIFIED = 1
EXIT_INPUT_ERROR = 2
EXIT_BUDGET = 3


class DrawingSyntaxError(ValueError):
    def __init__(self, line: int, message: str):
        self.line = line
        super().__init__(f"line {line}: {message}")


def _fmt_rational(v: Fraction) -> str:
    return str(v.numerator) if v.denominator == 1 else f"{v.numerator}/{v.denominator}"


def serialize_drawing(d: Drawing, comments: list[str] | None = None) -> str:
    lines = [f"# {c}" for c in (comments or [])]
    lines.append(str(d.n))
    lines.extend(f"{_fmt_rational(p.x)} {_fmt_rational(p.y)}" for p in d.points)
    return "\n".join(lines) + "\n"


def _parse_rational(tok: str, lineno: int) -> Fraction:
    try:
        return Fraction(tok)
    except (ValueError, ZeroDivisionError):
        raise DrawingSyntaxError(lineno, f"bad rational {tok!r}") from None


def parse_drawing(text: str) -> Drawing:
    """Parse a drawing file; rejects malformed rationals, duplicate points,
    and collinear triples, naming the offending line or vertex indices."""
    rows: list[tuple[int, str]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        body = raw.split("#", 1)[0].strip()
        if body:
            rows.append((lineno, body))
    if not rows:
        raise DrawingSyntaxError(1, "empty drawing file")
    head_line, head = rows[0]
    try:
        n = int(head)
    except ValueError:
        raise DrawingSyntaxError(head_line, f"expected vertex count, got {head!r}") from None
    if n < 1:
        raise DrawingSyntaxError(head_line, "vertex count must be positive")
    if len(rows) - 1 != n:
        raise DrawingSyntaxError(
            rows[-1][0], f"expected {n} coordinate lines, found {len(rows) - 1}")
    pts = []
    for lineno, body in rows[1:]:
        toks = body.split()
        if len(toks) != 2:
            raise DrawingSyntaxError(lineno, f"expected 'x y', got {body!r}")
        pts.append(Point(_parse_rational(toks[0], lineno),
                         _parse_rational(toks[1], lineno)))
    report = validate_general_position(pts)
    if not report:
        raise GeneralPositionError(report)
    return Drawing(pts)


def designated_comments(designated) -> list[str]:
    return [f"designated: {u} {v}" for (u, v) in designated]


def parse_designated(text: str) -> list[tuple[int, int]]:
    out = []
    for raw in text.splitlines():
        if raw.lstrip().startswith("#"):
            body = raw.lstrip()[1:].strip()
            if body.startswith("designated:"):
                u, v = body.split(":", 1)[1].split()
                out.append((int(u), int(v)))
    return out


# ---------------------------------------------------------------------------
# reports


def profile_report(d: Drawing, *, primed: bool = False, k_edges: bool = False,
                   designated=None) -> dict:
    prof = crossing_profile(d)
    rep = {
        "schema": REPORT_SCHEMA,
        "n": d.n,
        "edges": d.n * (d.n - 1) // 2,
        "total_crossings": total_crossings(d),
        "profile": list(prof.e),
        "s": [prof.s_k(k) for k in range(len(prof.e))],
    }
    if primed:
        pp = primed_profile(d)
        rep["primed_profile"] = list(pp.e)
        rep["primed_s"] = [pp.s_k(k) for k in range(len(pp.e))]
    if k_edges:
        rep["k_edges"] = {str(k): k_edge_count(d, k) for k in range(d.n - 1)
                          if k_edge_count(d, k)}
        rep["leq_k_edges"] = {str(k): leq_k_edge_count(d, k)
                              for k in range((d.n - 2) // 2 + 1)}
    if designated is not None:
        counts = crossing_counts(d)
        rep["designated"] = {
            "edges": [[u, v] for (u, v) in designated],
            "counts": [counts.of(u, v) for (u, v) in designated],
        }
    return rep


def report_text(rep: dict) -> str:
    lines = [f"n = {rep['n']}, edges = {rep['edges']}, "
             f"crossings = {rep['total_crossings']}",
             "profile: " + " ".join(str(v) for v in rep["profile"])]
    if "primed_profile" in rep:
        lines.append("primed:  " + " ".join(str(v) for v in rep["primed_profile"]))
    if "k_edges" in rep:
        lines.append("k-edges: " + " ".join(
            f"{k}:{v}" for k, v in rep["k_edges"].items()))
    if "designated" in rep:
        pairs = rep["designated"]
        lines.append("designated: " + " ".join(
            f"({u},{v})={c}" for (u, v), c in zip(pairs["edges"], pairs["counts"])))
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# SVG


def render_svg(d: Drawing, *, designated=(), labels: bool = False,
               size: int = 640, precision: int = 4) -> str:
    """SVG 1.1 document with all vertices and edges; designated edges are
    styled distinctly. Decimal conversion happens only here."""
    xs = [p.x for p in d.points]
    ys = [p.y for p in d.points]
    lo_x, hi_x = min(xs), max(xs)
    lo_y, hi_y = min(ys), max(ys)
    span = max(hi_x - lo_x, hi_y - lo_y, Fraction(1))
    margin = Fraction(size, 12)
    scale = (size - 2 * margin) / span

    def sx(v: Fraction) -> str:
        return str(round(float(margin + (v - lo_x) * scale), precision))

    def sy(v: Fraction) -> str:
        return str(round(float(size - margin - (v - lo_y) * scale), precision))

    marked = {tuple(sorted(e)) for e in designated}
    counts = crossing_counts(d) if labels else None
    parts = [
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
        f'width="{size}" height="{size}" viewBox="0 0 {size} {size}">',
        '<g stroke="#999" stroke-width="0.6">',
    ]
    for u in range(d.n):
        for v in range(u + 1, d.n):
            if (u, v) in marked:
                continue
            pu, pv = d.points[u], d.points[v]
            parts.append(f'<line x1="{sx(pu.x)}" y1="{sy(pu.y)}" '
                         f'x2="{sx(pv.x)}" y2="{sy(pv.y)}"/>')
    parts.append("</g>")
    if marked:
        parts.append('<g stroke="#c22" stroke-width="2">')
        for (u, v) in sorted(marked):
            pu, pv = d.points[u], d.points[v]
            parts.append(f'<line x1="{sx(pu.x)}" y1="{sy(pu.y)}" '
                         f'x2="{sx(pv.x)}" y2="{sy(pv.y)}"/>')
        parts.append("</g>")
    parts.append('<g fill="#224">')
    for p in d.points:
        parts.append(f'<circle cx="{sx(p.x)}" cy="{sy(p.y)}" r="3"/>')
    parts.append("</g>")
    if labels:
        parts.append('<g font-size="10" fill="#060">')
        for u in range(d.n):
            for v in range(u + 1, d.n):
                pu, pv = d.points[u], d.points[v]
                mx = (pu.x + pv.x) / 2
                my = (pu.y + pv.y) / 2
                parts.append(f'<text x="{sx(mx)}" y="{sy(my)}">'
                             f'{counts.of(u, v)}</text>')
        parts.append("</g>")
    parts.append("</svg>")
    return "\n".join(parts) + "\n"


# ---------------------------------------------------------------------------
# CLI


def _generate(kind: str, n: int, k: int | None, arcs, seed: int):
    """Returns (drawing, designated, meta)."""
    if kind == "convex":
        return C.gen_convex(n), (), {}
    if kind == "max-e0":
        gd = C.gen_max_e0(n)
        return gd.drawing, gd.designated, gd.meta
    if kind == "two-arc":
        if not arcs or len(arcs) != 2:
            raise ValueError("two-arc needs --arcs a,b")
        if sum(arcs) != n:
            raise ValueError(f"--arcs {arcs} sum to {sum(arcs)}, but --n is {n}")
        return C.gen_two_arc(*arcs), (), {}
    if kind == "three-arc":
        if not arcs or len(arcs) != 3:
            raise ValueError("three-arc needs --arcs a,b,c")
        if sum(arcs) != n:
            raise ValueError(f"--arcs {arcs} sum to {sum(arcs)}, but --n is {n}")
        return C.gen_three_arc(*arcs), (), {}
    if kind == "ek-linear":
        if k is None:
            raise ValueError("ek-linear needs --k")
        gd = C.gen_ek_linear(n, k)
        return gd.drawing, gd.designated, gd.meta
    if kind == "e1-linear":
        gd = C.gen_e1_linear(n)
        return gd.drawing, gd.designated, gd.meta
    if kind == "max-sk":
        if k is None:
            raise ValueError("max-sk needs --k")
        gd = C.gen_max_sk(n, k)
        return gd.drawing, gd.designated, gd.meta
    if kind == "nested-triangles":
        if k is None:
            raise ValueError("nested-triangles needs --k")
        return C.gen_nested_triangles(n, k, seed=seed), (), {}
    if kind == "grid":
        return C.gen_grid(n, seed=seed), (), {}
    raise ValueError(f"unknown kind {kind!r}")


_KINDS = ["convex", "max-e0", "two-arc", "three-arc", "ek-linear",
          "e1-linear", "max-sk", "nested-triangles", "grid"]


def _write_out(path: str | None, text: str) -> None:
    if path is None or path == "-":
        sys.stdout.write(text)
    else:
        with open(path, "w") as fh:
            fh.write(text)


def _cmd_generate(args) -> int:
    d, designated, meta = _generate(args.kind, args.n, args.k, args.arcs, args.seed)
    comments = [f"kind: {args.kind} n={args.n}"
                + (f" k={args.k}" if args.k is not None else "")]
    comments += designated_comments(designated)
    _write_out(args.out, serialize_drawing(d, comments))
    return EXIT_OK


def _cmd_profile(args) -> int:
    with open(args.infile) as fh:
        text = fh.read()
    d = parse_drawing(text)
    designated = parse_designated(text) or None
    rep = profile_report(d, primed=args.primed, k_edges=args.k_edges,
                         designated=designated)
    if args.json or not args.text:
        _write_out(None, json.dumps(rep, indent=2) + "\n")
    else:
        _write_out(None, report_text(rep))
    return EXIT_OK


def _cmd_verify(args) -> int:
    d, designated, meta = _generate(args.kind, args.n, args.k, args.arcs, args.seed)
    counts = crossing_counts(d)
    if args.kind in ("ek-linear",):
        bad = [(e, counts.of(*e)) for e in designated if counts.of(*e) != args.k]
        label = f"every designated edge crossed exactly {args.k} times"
    elif args.kind == "e1-linear":
        bad = [(e, counts.of(*e)) for e in designated if counts.of(*e) != 1]
        label = "every designated edge crossed exactly once"
    elif args.kind == "max-e0":
        bad = [(e, counts.of(*e)) for e in designated if counts.of(*e) != 0]
        if crossing_profile(d).e_k(0) != 2 * args.n - 2:
            bad.append((("e_0",), crossing_profile(d).e_k(0)))
        label = f"e_0 = {2 * args.n - 2}"
    elif args.kind == "max-sk":
        bad = [(e, counts.of(*e)) for e in designated if counts.of(*e) > args.k]
        label = f"designated edges crossed at most {args.k} times"
    else:
        bad = []
        label = "construction certified by its generator"
    if bad:
        print(f"FALSIFIED: {label}; offenders: {bad[:5]}", file=sys.stderr)
        return EXIT_CLAIM_FALSIFIED
    print(f"verified: {label} ({len(designated)} designated edges)")
    return EXIT_OK


def _cmd_search_zero(args) -> int:
    result = find_zero_ek(args.n, args.k, audit=args.audit)
    comments = [f"e_{args.k} = 0 witness: {result.family.describe()}"]
    _write_out(args.out, serialize_drawing(result.witness, comments))
    if args.out not in (None, "-"):
        print(f"witness family: {result.family.describe()}")
    return EXIT_OK


def _cmd_sweep(args) -> int:
    with open(args.config) as fh:
        cfg = json.load(fh)
    report = extremal_sweep(cfg["families"], cfg["n"], cfg.get("k"),
                            cfg["metrics"])
    out = {
        "schema": SWEEP_SCHEMA,
        "cells": [
            {"family": f, "n": n, "k": k, "metric": m, "value": v}
            for (f, n, k, m), v in sorted(report.cells.items(),
                                          key=lambda kv: repr(kv[0]))
        ],
        "fitted": {f"{fam}/n={n}": v for (fam, n), v in report.fitted.items()},
        "incomplete": [list(map(repr, item)) for item in report.incomplete],
    }
    _write_out(args.out, json.dumps(out, indent=2) + "\n")
    return EXIT_OK if not report.incomplete else EXIT_BUDGET


def _cmd_render(args) -> int:
    with open(args.infile) as fh:
        text = fh.read()
    d = parse_drawing(text)
    designated = parse_designated(text) if args.highlight == "designated" else ()
    svg = render_svg(d, designated=designated,
                     labels=args.highlight == "counts")
    _write_out(args.out, svg)
    return EXIT_OK


def _arcs_arg(text: str) -> tuple[int, ...]:
    return tuple(int(t) for t in text.split(","))


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="crossprof",
        description="Crossing profiles of rectilinear complete-graph drawings: "
                    "exact oracle, extremal constructions, verification.")
    sub = ap.add_subparsers(dest="command", required=True)

    g = sub.add_parser("generate", help="emit a construction as a drawing file")
    g.add_argument("--kind", required=True, choices=_KINDS)
    g.add_argument("--n", type=int, required=True)
    g.add_argument("--k", type=int)
    g.add_argument("--arcs", type=_arcs_arg)
    g.add_argument("--seed", type=int, default=0)
    g.add_argument("--out")
    g.set_defaults(func=_cmd_generate)

    p = sub.add_parser("profile", help="profile a drawing file")
    p.add_argument("--in", dest="infile", required=True)
    p.add_argument("--primed", action="store_true")
    p.add_argument("--k-edges", dest="k_edges", action="store_true")
    p.add_argument("--json", action="store_true")
    p.add_argument("--text", action="store_true")
    p.set_defaults(func=_cmd_profile)

    v = sub.add_parser("verify", help="rebuild a construction and check its claim")
    v.add_argument("--kind", required=True, choices=_KINDS)
    v.add_argument("--n", type=int, required=True)
    v.add_argument("--k", type=int)
    v.add_argument("--arcs", type=_arcs_arg)
    v.add_argument("--seed", type=int, default=0)
    v.set_defaults(func=_cmd_verify)

    z = sub.add_parser("search-zero", help="find a drawing with e_k = 0")
    z.add_argument("--n", type=int, required=True)
    z.add_argument("--k", type=int, required=True)
    z.add_argument("--audit", action="store_true")
    z.add_argument("--out")
    z.set_defaults(func=_cmd_search_zero)

    s = sub.add_parser("sweep", help="run a declarative measurement sweep")
    s.add_argument("--config", required=True)
    s.add_argument("--out")
    s.set_defaults(func=_cmd_sweep)

    r = sub.add_parser("render", help="render a drawing file to SVG")
    r.add_argument("--in", dest="infile", required=True)
    r.add_argument("--out", required=True)
    r.add_argument("--highlight", choices=["designated", "counts"])
    r.set_defaults(func=_cmd_render)
    return ap


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (DrawingSyntaxError, GeneralPositionError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT_ERROR
    except (C.RefinementError, ZeroSearchError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BUDGET


if __name__ == "__main__":
    sys.exit(main())
