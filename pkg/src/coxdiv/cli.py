"""Command-line front end.

Exit codes: 0 success, 1 input error, 2 ball budget exceeded.  Data goes to
stdout, diagnostics to stderr.  JSON output is wrapped in an envelope::

    {"command": [...], "input_sha256": "...", "exit_code": 0, "result": {...}}
"""
from __future__ import annotations

import argparse
import csv
import hashlib
import io
import json
import sys
from importlib import resources
from typing import Sequence

from . import cayley, coxeter, racg
from .graph import GraphParseError, parse_graph
from .randomgraphs import exponent_grid, rows_to_csv, threshold_sweep, sweep_trend

EXIT_OK, EXIT_INPUT, EXIT_BUDGET = 0, 1, 2


class InputError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise InputError(f"{self.prog}: {message}")


def _read_input(path: str) -> tuple[str, str]:
    try:
        if path == "-":
            data = sys.stdin.buffer.read()
        else:
            with open(path, "rb") as fh:
                data = fh.read()
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror}") from None
    try:
        text = data.decode("utf-8")
    except UnicodeDecodeError as exc:
        raise InputError(f"{path}: not UTF-8 ({exc})") from None
    return text, hashlib.sha256(data).hexdigest()


def _format_from_path(path: str, fmt: str) -> str:
    if fmt != "auto":
        return fmt
    ext = path.rsplit(".", 1)[-1].lower() if "." in path else ""
    return {"json": "json", "dot": "dot", "gv": "dot", "adj": "adjacency", "txt": "adjacency"}.get(ext, "auto")


def _load(args, fmt: str):
    text, digest = _read_input(args.input)
    try:
        g = parse_graph(text, _format_from_path(args.input, fmt))
    except GraphParseError as exc:
        raise InputError(f"{args.input}: {exc}") from None
    except ValueError as exc:
        raise InputError(f"{args.input}: {exc}") from None
    return g, digest


def _emit(out, argv, digest, result) -> None:
    env = {"command": list(argv), "input_sha256": digest, "exit_code": 0, "result": result}
    out.write(json.dumps(env, indent=2) + "\n")


def _csv(rows: Sequence[Sequence], header: Sequence[str]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(header)
    w.writerows(rows)
    return buf.getvalue()


def _ints(text: str) -> list[int]:
    try:
        return [int(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise InputError(f"expected comma-separated integers, got {text!r}") from None


def _floats(text: str) -> list[float]:
    try:
        return [float(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise InputError(f"expected comma-separated numbers, got {text!r}") from None


def load_schema(name: str) -> dict:
    """Published JSON schema for ``envelope`` or a command payload (e.g. ``cayley-ball``)."""
    return json.loads(resources.files("coxdiv").joinpath("schemas", f"{name}.json").read_text())


def schema_name(argv: Sequence[str]) -> str:
    """Payload schema name for a command line."""
    words = [a for a in argv if not a.startswith("-")]
    if words[0] in ("cayley", "random"):
        return f"{words[0]}-{words[1]}"
    return words[0]


# -- commands -------------------------------------------------------------------


def cmd_classify(args, argv, out):
    g, digest = _load(args, args.format)
    if args.rank_max < 1:
        raise InputError("--rank-max must be >= 1")
    report = racg.classify_racg(g, args.rank_max)
    _emit(out, argv, digest, report.to_dict())


def cmd_coxeter(args, argv, out):
    g, digest = _load(args, args.format)
    if args.n_max < 1:
        raise InputError("--n-max must be >= 1")
    _emit(out, argv, digest, coxeter.coxeter_lower_bounds(g, args.n_max))


def _group(args):
    g, digest = _load(args, args.input_format)
    if not g.is_right_angled:
        raise InputError("cayley commands need a right-angled graph (all labels 2)")
    return g, digest


def cmd_ball(args, argv, out):
    g, digest = _group(args)
    b = cayley.ball(g, args.radius, args.max_elements)
    grp = b.group
    if args.format == "csv":
        _, lengths = b.arrays()
        rows = [(i, int(lengths[i]), grp.spell(w)) for i, w in enumerate(b.words[: b.size])]
        out.write(_csv(rows, ("index", "length", "word")))
        return
    _emit(out, argv, digest, {"radius": args.radius, "count": b.size, "sphere_sizes": b.sphere_sizes})


def cmd_walls(args, argv, out):
    g, digest = _group(args)
    walls = cayley.walls_in_ball(g, args.radius, args.max_elements)
    grp = cayley.group(g)
    if args.format == "csv":
        rows = []
        for w in walls:
            for elem, s in sorted(w.edges, key=lambda e: (len(e[0]), e[0], e[1])):
                rows.append((grp.spell(w.id[0]), grp.names[w.id[1]], grp.names[w.generator],
                             grp.spell(elem), grp.names[s]))
        out.write(_csv(rows, ("wall_element", "wall_generator", "type", "edge_element", "edge_generator")))
        return
    _emit(out, argv, digest, {"radius": args.radius, "count": len(walls),
                              "walls": [w.to_dict(grp) for w in walls]})


def _word_arg(g, text: str):
    if text == "auto":
        return racg.gamma_complete_word(g)
    grp = cayley.group(g)
    try:
        return [grp.names[i] for i in grp.letters(text)]
    except KeyError as exc:
        raise InputError(str(exc)) from None


def cmd_separation(args, argv, out):
    g, digest = _group(args)
    grp = cayley.group(g)
    try:
        word = _word_arg(g, args.word)
    except ValueError as exc:
        raise InputError(str(exc)) from None
    edges = cayley.word_path_walls(g, word)
    (ye, ys), (ze, zs) = edges[0], edges[-1]
    radii = _ints(args.radius)
    rows = []
    for r in radii:
        try:
            Y = cayley.wall_of(g, cayley.NormalWord(ye), ys, r, args.max_elements)
            Z = cayley.wall_of(g, cayley.NormalWord(ze), zs, r, args.max_elements)
        except KeyError:
            raise InputError(f"radius {r} too small to contain both walls") from None
        cc = cayley.common_crossers(g, Y, Z, r, args.max_elements)
        rows.append({"radius": r, "common_crossers": len(cc), "crossers": [w.to_dict(grp) for w in cc]})
    _emit(out, argv, digest, {
        "word": word,
        "wall_y": {"element": grp.spell(ye), "generator": grp.names[ys]},
        "wall_z": {"element": grp.spell(ze), "generator": grp.names[zs]},
        "radii": rows,
    })


def cmd_divergence(args, argv, out):
    g, digest = _group(args)
    if args.u is None or args.v is None:
        pair = racg.max_rank_pair(g)
        if pair is None:
            raise InputError("no rank-1 pair to probe; pass --u and --v")
        u, v = pair.pair
    else:
        u, v = args.u, args.v
    for x in (u, v):
        if x not in g:
            raise InputError(f"unknown generator {x!r}")
    try:
        samples = cayley.divergence_samples(g, u, v, _ints(args.r), args.delta, args.lam,
                                            args.search_margin, args.max_elements)
    except ValueError as exc:
        raise InputError(str(exc)) from None
    if args.format == "csv":
        rows = [(s.r, s.k, s.endpoint_distance, repr(s.rho), s.path_length, s.search_radius)
                for s in samples]
        out.write(_csv(rows, ("r", "k", "endpoint_distance", "rho", "path_length", "search_radius")))
        return
    result = {"u": u, "v": v, "delta": args.delta, "lambda": args.lam,
              "samples": [s.to_dict() for s in samples],
              "note": "empirical lower-bound estimate along (uv)^r"}
    try:
        fit = cayley.fit_power_law(samples)
        result["fit"] = {"slope": fit.slope, "max_residual": fit.max_residual}
    except ValueError:
        result["fit"] = None
    _emit(out, argv, digest, result)


def _wall_spec(g, text: str):
    if ":" not in text:
        raise InputError(f"wall spec must be ELEMENT:GENERATOR, got {text!r}")
    elem, gen = text.rsplit(":", 1)
    grp = cayley.group(g)
    try:
        return grp.reduce(grp.letters(elem)), grp.letters([gen])[0]
    except KeyError as exc:
        raise InputError(str(exc)) from None


def cmd_hdiv(args, argv, out):
    g, digest = _group(args)
    grp = cayley.group(g)
    if args.wall_y and args.wall_z:
        ye, ys = _wall_spec(g, args.wall_y)
        ze, zs = _wall_spec(g, args.wall_z)
    else:
        try:
            word = _word_arg(g, args.word)
        except ValueError as exc:
            raise InputError(str(exc)) from None
        edges = cayley.word_path_walls(g, word)
        (ye, ys), (ze, zs) = edges[0], edges[-1]
    R = args.search_radius
    try:
        Y = cayley.wall_of(g, cayley.NormalWord(ye), ys, R, args.max_elements)
        Z = cayley.wall_of(g, cayley.NormalWord(ze), zs, R, args.max_elements)
        rows = [cayley.hdiv_estimate(g, Y, Z, r, R, args.max_elements, detail=True)
                for r in _floats(args.r)]
    except (KeyError, ValueError) as exc:
        raise InputError(str(exc)) from None
    if args.format == "csv":
        out.write(_csv([(x["r"], x["value"], x["p"], x["gap"], x["search_radius"]) for x in rows],
                       ("r", "hdiv", "p", "gap", "search_radius")))
        return
    _emit(out, argv, digest, {
        "wall_y": {"element": grp.spell(Y.id[0]), "generator": grp.names[Y.id[1]]},
        "wall_z": {"element": grp.spell(Z.id[0]), "generator": grp.names[Z.id[1]]},
        "samples": rows,
    })


def _p_list(n: int, text: str) -> list[float]:
    if text.startswith("auto:"):
        parts = text[5:].split(",")
        if len(parts) != 3:
            raise InputError("--p auto:LO,HI,COUNT")
        try:
            lo, hi, count = float(parts[0]), float(parts[1]), int(parts[2])
        except ValueError:
            raise InputError(f"bad --p grid {text!r}") from None
        if count < 1:
            raise InputError("grid count must be >= 1")
        return exponent_grid(n, lo, hi, count)
    ps = _floats(text)
    if not ps or any(not 0 <= p <= 1 for p in ps):
        raise InputError("--p values must lie in [0, 1]")
    return ps


def cmd_random_sweep(args, argv, out):
    if args.n < 1:
        raise InputError("--n must be >= 1")
    if args.samples < 1:
        raise InputError("--samples must be >= 1")
    if args.seed < 0:
        raise InputError("--seed must be >= 0")
    rows = threshold_sweep(args.n, _p_list(args.n, args.p), args.samples, args.seed)
    if args.format == "csv":
        out.write(rows_to_csv(rows))
        return
    _emit(out, argv, None, {
        "rows": [{"n": r.n, "p": r.p, "samples": r.samples, "cfs_count": r.cfs_count,
                  "join_count": r.join_count, "fraction": r.fraction, "seed": r.seed} for r in rows],
        "trend": sweep_trend(rows),
    })


def cmd_word(args, argv, out):
    g, digest = _group(args)
    grp = cayley.group(g)
    if args.action == "complete":
        try:
            word = racg.gamma_complete_word(g)
        except ValueError as exc:
            raise InputError(str(exc)) from None
        check = racg.validate_gamma_complete_word(g, word)
        _emit(out, argv, digest, {"word": word, "valid": check.valid})
        return
    if args.word is None:
        raise InputError("--word is required")
    try:
        letters = grp.letters(args.word)
    except KeyError as exc:
        raise InputError(str(exc)) from None
    nf = grp.reduce(letters)
    if args.action == "normalize":
        _emit(out, argv, digest, {"input": [grp.names[i] for i in letters],
                                  "normal_form": [grp.names[i] for i in nf], "length": len(nf)})
    else:
        _emit(out, argv, digest, {"input": [grp.names[i] for i in letters],
                                  "geodesic": len(nf) == len(letters), "length": len(nf)})


# -- parser -------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="coxdiv", description="Divergence criteria and Cayley-graph experiments for Coxeter groups.")
    sub = p.add_subparsers(dest="command", parser_class=_Parser)
    sub.required = True
    graph_formats = ("auto", "json", "adjacency", "dot")

    c = sub.add_parser("classify", help="divergence verdict of a right-angled Coxeter group")
    c.add_argument("--input", required=True)
    c.add_argument("--format", "--input-format", dest="format", choices=graph_formats, default="auto")
    c.add_argument("--rank-max", type=int, default=8)
    c.set_defaults(func=cmd_classify)

    c = sub.add_parser("coxeter", help="lower bounds for general Coxeter graphs")
    c.add_argument("--input", required=True)
    c.add_argument("--format", "--input-format", dest="format", choices=graph_formats, default="auto")
    c.add_argument("--n-max", type=int, default=8)
    c.set_defaults(func=cmd_coxeter)

    cay = sub.add_parser("cayley", help="experiments in balls of the Cayley graph")
    csub = cay.add_subparsers(dest="sub", parser_class=_Parser)
    csub.required = True

    def common(sp, tabular=True):
        sp.add_argument("--input", required=True)
        sp.add_argument("--input-format", choices=graph_formats, default="auto")
        sp.add_argument("--max-elements", type=int, default=None)
        if tabular:
            sp.add_argument("--format", choices=("json", "csv"), default="json")
        else:
            sp.set_defaults(format="json")

    sp = csub.add_parser("ball")
    common(sp)
    sp.add_argument("--radius", type=int, required=True)
    sp.set_defaults(func=cmd_ball)

    sp = csub.add_parser("walls")
    common(sp)
    sp.add_argument("--radius", type=int, required=True)
    sp.set_defaults(func=cmd_walls)

    sp = csub.add_parser("separation")
    common(sp, tabular=False)
    sp.add_argument("--word", default="auto")
    sp.add_argument("--radius", default="6", help="radius or comma list")
    sp.set_defaults(func=cmd_separation)

    sp = csub.add_parser("divergence")
    common(sp)
    sp.add_argument("--u")
    sp.add_argument("--v")
    sp.add_argument("--r", default="2,3,4", help="comma list of scales")
    sp.add_argument("--delta", type=float, default=0.5)
    sp.add_argument("--lambda", dest="lam", type=float, default=0.0)
    sp.add_argument("--search-margin", type=int, default=0)
    sp.set_defaults(func=cmd_divergence)

    sp = csub.add_parser("hdiv")
    common(sp)
    sp.add_argument("--word", default="auto")
    sp.add_argument("--wall-y")
    sp.add_argument("--wall-z")
    sp.add_argument("--r", default="0,1,2,3")
    sp.add_argument("--search-radius", type=int, default=8)
    sp.set_defaults(func=cmd_hdiv)

    rnd = sub.add_parser("random", help="random-graph CFS sweeps")
    rsub = rnd.add_subparsers(dest="sub", parser_class=_Parser)
    rsub.required = True
    sp = rsub.add_parser("sweep")
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--p", required=True, help="comma list or auto:LO,HI,COUNT (p = n**exponent)")
    sp.add_argument("--samples", type=int, default=200)
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--format", choices=("csv", "json"), default="csv")
    sp.set_defaults(func=cmd_random_sweep)

    w = sub.add_parser("word", help="word problem utilities")
    w.add_argument("action", choices=("normalize", "geodesic", "complete"))
    w.add_argument("--input", required=True)
    w.add_argument("--input-format", choices=graph_formats, default="auto")
    w.add_argument("--word")
    w.set_defaults(func=cmd_word, max_elements=None)
    return p


def main(argv: Sequence[str] | None = None, out=None, err=None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    out = out or sys.stdout
    err = err or sys.stderr
    try:
        args = build_parser().parse_args(argv)
        if getattr(args, "max_elements", None) is not None and args.max_elements < 1:
            raise InputError("--max-elements must be >= 1")
        args.func(args, argv, out)
    except InputError as exc:
        err.write(f"error: {exc}\n")
        return EXIT_INPUT
    except cayley.BudgetExceeded as exc:
        err.write(f"budget exceeded: {exc}\n")
        return EXIT_BUDGET
    except SystemExit as exc:  # --help
        return EXIT_OK if not exc.code else EXIT_INPUT
    return EXIT_OK


def main_exit() -> None:
    sys.exit(main())


if __name__ == "__main__":
    main_exit()
