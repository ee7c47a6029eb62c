"""Command line entry point: ``giving-game <subcommand> [options]``."""

from __future__ import annotations

import argparse
import json
import os
import sys
from pathlib import Path

from . import generators, io, render
from .engine import (
    DEFAULT_BRANCH_CAP,
    DEFAULT_MAX_STEPS,
    FirstByIndex,
    Scripted,
    SeededRandom,
    enumerate_branches,
    play,
)
from .errors import BranchExplosion, CycleExplosion, GivingGameError
from .frames import (
    DEFAULT_CYCLE_CAP,
    condensation_to_dot,
    elementary_cycles,
    equivalence_classes,
    frame_of,
    frame_to_dot,
)
from .stability import (
    cycle_decomposition,
    decide_pair,
    reduce_to_normal_form,
    split_phases,
)

EXIT_YES, EXIT_NO, EXIT_UNKNOWN = 0, 1, 2


def _seed(args) -> int:
    if args.seed is not None:
        return args.seed
    env = os.environ.get("GG_SEED")
    if env is None:
        raise GivingGameError("random policy needs a seed: random:SEED, --seed or GG_SEED")
    return int(env)


def _policy(args, m):
    spec = args.policy or "first"
    if spec == "first":
        return FirstByIndex()
    if spec == "random":
        return SeededRandom(_seed(args))
    kind, _, rest = spec.partition(":")
    if kind == "random":
        return SeededRandom(int(rest))
    if kind == "script":
        choices = json.loads(Path(rest).read_text())
        return Scripted([m.index(c) for c in choices])
    raise GivingGameError(f"unknown policy {spec!r}")


def _names(m, agents):
    return ("" if all(len(s) == 1 for s in m.labels) else " ").join(m.labels[a] for a in agents)


def _pair_text(m, pair):
    return "{" + ",".join(m.labels[a] for a in sorted(pair)) + "}"


def _matrix(args):
    if not args.matrix:
        raise GivingGameError("--matrix is required")
    return io.load_matrix(args.matrix)


def _start(args, m):
    if args.start is None:
        raise GivingGameError("--start is required")
    return m.index(args.start)


# -- subcommands -------------------------------------------------------------------


def cmd_simulate(args):
    m = _matrix(args)
    t = play(_start(args, m), m, _policy(args, m), args.max_steps or DEFAULT_MAX_STEPS)
    pair = t.stability_pair
    if args.format == "json":
        d = io.trace_to_dict(t)
        d.update(boundary=t.boundary, outcome=render.outcome(t))
        return json.dumps(d) + "\n", 0
    lines = [
        "path: " + " ".join(m.labels[a] for a in t.agents),
        "outcome: " + render.outcome(t),
        f"boundary: {t.boundary if t.boundary is not None else '-'}",
        f"pair: {_pair_text(m, pair) if pair else '-'}",
    ]
    if args.snapshots:
        cur = m
        for i, s in enumerate(t.steps):
            lines += ["", f"step {i}: {m.labels[s.submitter]} -> {m.labels[s.receiver]}"]
            lines.append(render.matrix_text(cur, s.submitter))
            cur = cur.incremented(s.receiver, s.submitter)
    return "\n".join(lines) + "\n", 0


def cmd_branches(args):
    m = _matrix(args)
    traces = enumerate_branches(
        _start(args, m), m, args.max_steps, args.branch_cap or DEFAULT_BRANCH_CAP
    )
    rows = []
    for t in traces:
        pair = t.stability_pair
        rows.append({
            "outcome": render.outcome(t),
            "erratic": _names(m, t.agents[: t.boundary]) if pair else _names(m, t.agents),
            "pair": [m.labels[a] for a in sorted(pair)] if pair else None,
            "truncated": t.truncated,
        })
    if args.format == "json":
        return json.dumps(rows) + "\n", 0
    lines = [f"{len(rows)} branches"]
    for r in rows:
        pair = "{" + ",".join(r["pair"]) + "}" if r["pair"] else "truncated"
        lines.append(f"{r['outcome']}\t{pair}")
    return "\n".join(lines) + "\n", 0


def cmd_frame(args):
    m = _matrix(args)
    f = frame_of(m)
    eq = equivalence_classes(f)
    if args.format == "dot":
        return frame_to_dot(f) + condensation_to_dot(eq, m.labels), 0
    classes = [[m.labels[a] for a in c] for c in eq.classes]
    edges = [[m.labels[x], m.labels[y]] for x, y in sorted(f.blue)]
    class_edges = sorted(eq.edges)
    if args.format == "json":
        return json.dumps({"edges": edges, "classes": classes, "class_edges": class_edges}) + "\n", 0
    lines = ["edges: " + " ".join(f"{x}->{y}" for x, y in edges)]
    lines.append("classes: " + " ".join("{" + ",".join(c) + "}" for c in classes))
    ctext = lambda i: "{" + ",".join(classes[i]) + "}"  # noqa: E731
    lines.append("condensation: " + " ".join(f"{ctext(i)}->{ctext(j)}" for i, j in class_edges))
    return "\n".join(lines) + "\n", 0


def cmd_cycles(args):
    m = _matrix(args)
    cycles = elementary_cycles(None, m, args.cycle_cap or DEFAULT_CYCLE_CAP)
    rows = [
        {
            "cycle": c.path(m.labels),
            "twin_gaps": list(c.twin_gaps),
            "order": c.order,
            "poles": [[m.labels[x], m.labels[y]] for x, y in c.poles],
        }
        for c in cycles
    ]
    if args.format == "json":
        return json.dumps(rows) + "\n", 0
    lines = [f"{len(rows)} elementary cycles"]
    for r in rows:
        gaps = ",".join(map(str, r["twin_gaps"]))
        poles = " ".join("{" + ",".join(p) + "}" for p in r["poles"])
        lines.append(f"{r['cycle']}\tgaps ({gaps})\torder {r['order']}\tpole {poles}")
    return "\n".join(lines) + "\n", 0


def cmd_decide(args):
    m = _matrix(args)
    if not args.pair:
        raise GivingGameError("--pair X,Y is required")
    a, b = (m.index(s.strip()) for s in args.pair.split(","))
    v = decide_pair(m, _start(args, m), (a, b), args.branch_cap or DEFAULT_BRANCH_CAP)
    code = {"yes": EXIT_YES, "no": EXIT_NO}.get(v.answer, EXIT_UNKNOWN)
    report = {
        "pair": [m.labels[x] for x in sorted(v.pair)],
        "answer": v.answer,
        "witness": io.trace_to_dict(v.witness) if v.witness else None,
        "states": v.states,
        "max_depth": v.max_depth,
        "reason": v.reason,
    }
    if args.format == "json":
        return json.dumps(report) + "\n", code
    lines = [f"{_pair_text(m, v.pair)}: {v.answer}" + (f" ({v.reason})" if v.reason else "")]
    if v.witness:
        lines.append("witness: " + render.outcome(v.witness))
    lines.append(f"searched {v.states} states, depth {v.max_depth}")
    return "\n".join(lines) + "\n", code


def cmd_reduce(args):
    m = _matrix(args)
    if not args.trace:
        raise GivingGameError("--trace is required")
    t = io.load_trace(args.trace, m)
    nf = reduce_to_normal_form(m, t)
    dec = cycle_decomposition(nf)
    cycles = [{"cycle": c.path(m.labels), "power": p} for c, p in dec.cycles]
    if args.format == "json":
        d = {
            "normal_form": io.trace_to_dict(nf),
            "pair": [m.labels[a] for a in sorted(split_phases(nf).pair)],
            "pair_step": [m.labels[a] for a in dec.pair_step],
            "cycles": cycles,
            "closing": dec.closing,
        }
        return json.dumps(d) + "\n", 0
    lines = [
        "normal form: " + render.outcome(nf),
        "pair: " + _pair_text(m, split_phases(nf).pair),
        "cycles: " + (" ".join(f"({c['cycle']})^{c['power']}" for c in cycles) or "none"),
    ]
    if dec.closing:
        x, y = (m.labels[a] for a in dec.pair_step)
        lines.append(f"closing step: {x}->{y}")
    return "\n".join(lines) + "\n", 0


def cmd_gen(args):
    if args.kind == "trivial":
        spec = generators.Trivial(args.n)
    elif args.kind == "random":
        spec = generators.Random(args.n, args.max_value, _seed(args), args.no_blue_pairs)
    elif args.kind == "turquoise":
        spec = generators.TurquoiseFamily(args.k)
    else:
        spec = generators.Fixture(args.name)
    return io.dumps_matrix(generators.generate(spec)), 0


COMMANDS = {
    "simulate": cmd_simulate,
    "branches": cmd_branches,
    "frame": cmd_frame,
    "cycles": cmd_cycles,
    "decide": cmd_decide,
    "reduce": cmd_reduce,
    "gen": cmd_gen,
}


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--matrix", metavar="PATH")
    common.add_argument("--start", metavar="LABEL")
    common.add_argument("--policy", help="first | random:SEED | script:PATH")
    common.add_argument("--pair", metavar="X,Y")
    common.add_argument("--max-steps", type=int)
    common.add_argument("--branch-cap", type=int)
    common.add_argument("--cycle-cap", type=int)
    common.add_argument("--seed", type=int)
    common.add_argument("--format", choices=["text", "json", "dot"], default="text")
    common.add_argument("--out", metavar="PATH")

    parser = argparse.ArgumentParser(prog="giving-game", description="Giving Game toolkit")
    sub = parser.add_subparsers(dest="command", required=True)
    sim = sub.add_parser("simulate", parents=[common], help="play one game path")
    sim.add_argument("--snapshots", action="store_true", help="print the matrix before each step")
    sub.add_parser("branches", parents=[common], help="enumerate every branch")
    sub.add_parser("frame", parents=[common], help="frame, classes and condensation")
    sub.add_parser("cycles", parents=[common], help="elementary cycles with gaps")
    sub.add_parser("decide", parents=[common], help="is a pair a stability pair?")
    red = sub.add_parser("reduce", parents=[common], help="normal form of a trace")
    red.add_argument("--trace", metavar="PATH")
    gen = sub.add_parser("gen", parents=[common], help="write a generated matrix")
    gen.add_argument("--kind", choices=["trivial", "random", "turquoise", "fixture"], required=True)
    gen.add_argument("--n", type=int, default=3)
    gen.add_argument("--max-value", type=int, default=5)
    gen.add_argument("--k", type=int, default=6)
    gen.add_argument("--name", default="figure2")
    gen.add_argument("--no-blue-pairs", action="store_true")
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        text, code = COMMANDS[args.command](args)
    except (BranchExplosion, CycleExplosion) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_UNKNOWN
    except (GivingGameError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_UNKNOWN
    if args.out:
        Path(args.out).write_text(text)
    else:
        sys.stdout.write(text)
    return code


if __name__ == "__main__":
    sys.exit(main())
