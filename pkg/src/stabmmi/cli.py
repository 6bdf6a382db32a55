"""Command-line front end.

Subcommands: entropy, mmi, circuit, classify, census, report.
Exit codes: 0 success, 1 usage error, 2 input parse error,
3 budget/cap exceeded, 4 internal invariant violation.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from pathlib import Path

from . import census as censusmod
from . import entropy as entmod
from . import graphs as graphmod
from . import star as starmod
from . import tableau as tabmod

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_PARSE = 2
EXIT_BUDGET = 3
EXIT_INTERNAL = 4


class UsageError(Exception):
    pass


class ParseError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):  # argparse defaults to exit code 2
        raise UsageError(message)


def _mask_to_vertices(mask: int) -> list[int]:
    return [v + 1 for v in range(mask.bit_length()) if (mask >> v) & 1]


def _render_subset(mask: int) -> str:
    return "+".join(str(v) for v in _mask_to_vertices(mask))


def load_source(path: str, fmt: str | None = None):
    """Read a Graph or Tableau from .g6 / .json / .txt input."""
    p = Path(path)
    try:
        text = p.read_text()
    except OSError as exc:
        raise ParseError(f"cannot read {path}: {exc}") from exc
    suffix = (fmt or p.suffix.lstrip(".")).lower()
    try:
        if suffix == "g6":
            return graphmod.from_graph6(text)
        if suffix == "json":
            data = json.loads(text)
            if "edges" in data:
                return graphmod.from_json(text)
            if "tableau" in data:
                return tabmod.parse_tableau("\n".join(data["tableau"]))
            raise ParseError(f"{path}: JSON needs an 'edges' or 'tableau' key")
        if suffix == "txt":
            return tabmod.parse_tableau(text)
    except ParseError:
        raise
    except (ValueError, KeyError, TypeError) as exc:
        raise ParseError(f"{path}: {exc}") from exc
    raise UsageError(f"cannot infer format of {path}; pass --format g6|json|txt")


def cmd_entropy(args) -> int:
    source = load_source(args.input, args.format)
    ev = entmod.entropy_vector(source)
    canon = entmod.canonicalize(ev)
    print(ev.to_json(canonical=False))
    print(canon.to_json(canonical=True))
    return EXIT_OK


def cmd_mmi(args) -> int:
    source = load_source(args.input, args.format)
    ev = entmod.entropy_vector(source)
    include = not args.skip_full_union
    print("instance-I,instance-J,instance-K,outcome")
    counts = {o: 0 for o in entmod.MmiOutcome}
    for inst in entmod.mmi_instances(ev.n, include):
        outcome = entmod.evaluate_mmi(ev, inst)
        counts[outcome] += 1
        print(
            f"{_render_subset(inst.i)},{_render_subset(inst.j)},"
            f"{_render_subset(inst.k)},{outcome.value}"
        )
    print(
        f"tally,{counts[entmod.MmiOutcome.SATISFIES]},"
        f"{counts[entmod.MmiOutcome.SATURATES]},{counts[entmod.MmiOutcome.FAILS]}"
    )
    return EXIT_OK


def _parse_gate_line(line: str, lineno: int):
    parts = line.split()
    name = parts[0].upper()
    try:
        if name in ("H", "S") and len(parts) == 2:
            return name, (int(parts[1]),)
        if name in ("CNOT", "CZ") and len(parts) == 3:
            return name, (int(parts[1]), int(parts[2]))
    except ValueError:
        pass
    raise ParseError(f"line {lineno}: malformed gate line {line!r}")


def cmd_circuit(args) -> int:
    try:
        script = Path(args.script).read_text()
    except OSError as exc:
        raise ParseError(f"cannot read {args.script}: {exc}") from exc
    lines = [
        (i + 1, ln.strip())
        for i, ln in enumerate(script.splitlines())
        if ln.strip() and not ln.strip().startswith("#")
    ]
    if args.n is not None:
        n = args.n
    else:
        hi = 0
        for lineno, ln in lines:
            _, operands = _parse_gate_line(ln, lineno)
            hi = max(hi, *operands)
        n = max(hi, 1)
    t = tabmod.zero_state(n)
    instances = entmod.mmi_instances(n) if n >= 3 else []
    ev = entmod.entropy_vector(t)
    outcomes = {inst: entmod.evaluate_mmi(ev, inst) for inst in instances}
    rv = tabmod.rank_vector(t)
    print("initial ranks: " + _render_rank_vector(rv))
    for lineno, ln in lines:
        name, operands = _parse_gate_line(ln, lineno)
        try:
            if name == "H":
                t = tabmod.apply_h(t, *operands)
            elif name == "S":
                t = tabmod.apply_s(t, *operands)
            elif name == "CNOT":
                t = tabmod.apply_cnot(t, *operands)
            else:
                t = tabmod.apply_cz(t, *operands)
        except (IndexError, ValueError) as exc:
            raise ParseError(f"line {lineno}: {exc}") from exc
        rv = tabmod.rank_vector(t)
        print(f"after {name} {' '.join(map(str, operands))}: " + _render_rank_vector(rv))
        ev = entmod.entropy_vector(t)
        for inst in instances:
            now = entmod.evaluate_mmi(ev, inst)
            if now != outcomes[inst]:
                print(
                    f"  MMI({_render_subset(inst.i)};{_render_subset(inst.j)};"
                    f"{_render_subset(inst.k)}): {outcomes[inst].value} -> {now.value}"
                )
                outcomes[inst] = now
    return EXIT_OK


def _render_rank_vector(rv) -> str:
    return " ".join(
        f"{_render_subset(mask)}={rv[mask]}" for mask in sorted(rv.entries)
    )


def cmd_classify(args) -> int:
    g = load_source(args.input, args.format)
    if not isinstance(g, graphmod.Graph):
        raise ParseError("classify needs a graph input")
    if args.partition:
        try:
            data = json.loads(args.partition)
            p = starmod.StarPartition.from_sets(
                g.n, data["C"], data["I"], data["J"], data["K"]
            )
        except (json.JSONDecodeError, KeyError, ValueError, TypeError) as exc:
            raise ParseError(f"bad partition: {exc}") from exc
        if not starmod.is_generalized_star(g, p):
            raise ParseError("explicit partition is not a generalized star")
    else:
        p = starmod.find_star_partition(g, require_nontrivial=True, maximize_cij=True)
        if p is None:
            print(json.dumps({"result": "no qualifying partition"}))
            return EXIT_OK
    cls = starmod.classify(g, p)
    outcome = starmod.mmi_cij_colspace(g, p)
    print(cls.to_json(p, outcome))
    return EXIT_OK


def _write(path: str | None, text: str) -> None:
    if path:
        Path(path).write_text(text)
    else:
        sys.stdout.write(text)


def cmd_census(args) -> int:
    jobs = args.jobs
    if args.table14 is not None:
        row = censusmod.state_census(args.table14, jobs=jobs)
        lines = [
            "n,total_states,saturate_all,satisfy_some_fail_none,fail_some,"
            "distinct_vectors,classes,failing_vectors",
            f"{row.n},{row.total_states},{row.saturate_all},"
            f"{row.satisfy_some_fail_none},{row.fail_some},{row.distinct_vectors},"
            f"{row.classes_up_to_exchange},{row.failing_vector_count}",
        ]
        _write(args.output, "\n".join(lines) + "\n")
        return EXIT_OK
    if args.classes is not None:
        result = censusmod.vector_census(
            args.classes, source=args.source, jobs=jobs
        )
        ordered = sorted(result.classes.items())
        if args.json:
            records = []
            for cid, (canon, info) in enumerate(ordered, start=1):
                records.append(
                    {
                        "class_id": cid,
                        "canonical_vector": list(canon),
                        "state_count": info.state_count,
                        "member_vectors": info.member_vectors,
                        "satisfies": info.tally.satisfies,
                        "saturates": info.tally.saturates,
                        "fails": info.tally.fails,
                        "representative_graph6": _class_representative(result, canon),
                    }
                )
            _write(args.output, json.dumps({"n": args.classes, "classes": records},
                                           sort_keys=True, indent=1) + "\n")
        else:
            lines = ["class_id,canonical_vector,state_count,satisfies,saturates,fails"]
            for cid, (canon, info) in enumerate(ordered, start=1):
                vec = " ".join(map(str, canon))
                lines.append(
                    f"{cid},{vec},{info.state_count},{info.tally.satisfies},"
                    f"{info.tally.saturates},{info.tally.fails}"
                )
            _write(args.output, "\n".join(lines) + "\n")
        return EXIT_OK
    if args.scan_four_star is not None:
        report = censusmod.four_star_conjecture_scan(
            args.scan_four_star, budget=args.budget, jobs=jobs
        )
        _write(args.output, json.dumps(report, sort_keys=True, indent=1) + "\n")
        return EXIT_OK
    if args.scan_intersection is not None:
        report = censusmod.nontrivial_intersection_scan(args.scan_intersection)
        _write(args.output, json.dumps(report, sort_keys=True, indent=1) + "\n")
        return EXIT_OK
    raise UsageError("census needs one of --table14/--classes/--scan-four-star/--scan-intersection")


def _class_representative(result, canon) -> str | None:
    """graph6 of some graph realizing a vector in the class, if known."""
    for vals, graph in result.representatives.items():
        if graph is None:
            continue
        ev = entmod.EntropyVector(result.n, vals)
        if entmod.canonicalize(ev).values == canon:
            return graphmod.to_graph6(graph)
    return None


def cmd_report(args) -> int:
    try:
        data = json.loads(Path(args.census).read_text())
    except OSError as exc:
        raise ParseError(f"cannot read {args.census}: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise ParseError(f"{args.census}: {exc}") from exc
    outdir = Path(args.output_dir)
    outdir.mkdir(parents=True, exist_ok=True)
    classes = data.get("classes", [])
    items = []
    for rec in classes:
        cid = rec["class_id"]
        page = f"class-{cid}.html"
        g6 = rec.get("representative_graph6")
        edges = ""
        if g6:
            edges = ", ".join(
                f"({u},{v})" for u, v in graphmod.from_graph6(g6).edges()
            )
        body = (
            "<html><head><title>Class {cid}</title></head><body>"
            "<h1>Class {cid}</h1>"
            "<p>Canonical vector: {vec}</p>"
            "<p>Representative graph6: <code>{g6}</code></p>"
            "<p>Edges: {edges}</p>"
            "<p>Tally (satisfies, saturates, fails): ({s}, {st}, {f})</p>"
            "<p>State count: {count}</p>"
            '<p><a href="index.html">index</a></p>'
            "</body></html>"
        ).format(
            cid=cid,
            vec=" ".join(map(str, rec["canonical_vector"])),
            g6=g6 or "n/a",
            edges=edges or "n/a",
            s=rec["satisfies"],
            st=rec["saturates"],
            f=rec["fails"],
            count=rec["state_count"],
        )
        (outdir / page).write_text(body)
        items.append(f'<li><a href="{page}">Class {cid}</a></li>')
    index = (
        "<html><head><title>Census n={n}</title></head><body>"
        "<h1>Entropy-vector classes, n={n}</h1><ul>{items}</ul></body></html>"
    ).format(n=data.get("n", "?"), items="".join(items))
    (outdir / "index.html").write_text(index)
    print(f"wrote {len(classes) + 1} pages to {outdir}")
    return EXIT_OK


def build_parser() -> _Parser:
    parser = _Parser(prog="stabmmi", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    def add_input(p):
        p.add_argument("input", help="graph (.g6/.json) or tableau (.json/.txt) file")
        p.add_argument("--format", choices=["g6", "json", "txt"])

    p = sub.add_parser("entropy", help="full and canonical entropy vector as JSON")
    add_input(p)
    p.set_defaults(func=cmd_entropy)

    p = sub.add_parser("mmi", help="per-instance MMI table and tally (CSV)")
    add_input(p)
    p.add_argument("--skip-full-union", action="store_true")
    p.set_defaults(func=cmd_mmi)

    p = sub.add_parser("circuit", help="apply a gate script to |0...0>")
    p.add_argument("script", help="text file of 'H a' | 'S a' | 'CNOT a b' | 'CZ a b'")
    p.add_argument("-n", type=int, help="qubit count (default: highest index used)")
    p.set_defaults(func=cmd_circuit)

    p = sub.add_parser("classify", help="generalized-star classification JSON")
    add_input(p)
    p.add_argument(
        "--partition",
        help='explicit partition JSON: {"C":[..],"I":[..],"J":[..],"K":[..]}',
    )
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("census", help="census tables and conjecture scans")
    p.add_argument("--source", choices=["graphs", "groups"], default="groups")
    p.add_argument("--table14", type=int, metavar="N")
    p.add_argument("--classes", type=int, metavar="N")
    p.add_argument("--scan-four-star", type=int, metavar="N")
    p.add_argument("--scan-intersection", type=int, metavar="N")
    p.add_argument("--jobs", type=int, default=int(os.environ.get("STABMMI_JOBS", "1")))
    p.add_argument("--budget", type=int, default=10**6)
    p.add_argument("--json", action="store_true", help="JSON output for --classes")
    p.add_argument("-o", "--output", help="output file (default stdout)")
    p.set_defaults(func=cmd_census)

    p = sub.add_parser("report", help="static HTML catalog from census JSON")
    p.add_argument("census", help="JSON produced by census --classes --json")
    p.add_argument("-d", "--output-dir", default="report")
    p.set_defaults(func=cmd_report)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        return args.func(args)
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except RuntimeError as exc:
        print(f"budget exceeded: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except (ValueError, AssertionError) as exc:
        if "cap" in str(exc) or "budget" in str(exc):
            print(f"cap exceeded: {exc}", file=sys.stderr)
            return EXIT_BUDGET
        print(f"internal invariant violation: {exc}", file=sys.stderr)
        return EXIT_INTERNAL


if __name__ == "__main__":
    sys.exit(main())
