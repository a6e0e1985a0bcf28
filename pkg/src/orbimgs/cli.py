"""Command-line front end: ``orbimgs {build,sequence,verify,search}``.

Exit codes: 0 success, 1 usage or I/O error, 2 unsupported parameters,
3 search exhausted, 4 search budget exceeded, 5 a sequence or checkpoint
failed verification.
"""

from __future__ import annotations

import argparse
import itertools
import sys
from concurrent.futures import ProcessPoolExecutor

from . import _backend
from .checkpoints import run_checkpoints
from .diagrams import OrbifoldParams, build_diagram, validate_params
from .errors import OrbiError, RankTooLarge, UnsupportedParams
from .mutation import FramedSeed, frame
from .search import SearchConfig, search_mgs
from .sequences import delta
from .serialize import DocumentError, dumps, load, to_dot
from .verify import apply_sequence, render_trace

EXIT_OK, EXIT_USAGE, EXIT_UNSUPPORTED, EXIT_EXHAUSTED, EXIT_BUDGET, EXIT_INVALID = range(6)


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _add_params(p, required=True):
    p.add_argument("-n", "--genus", type=int, required=required, help="genus n >= 0")
    p.add_argument("-p", "--punctures", type=int, required=required, help="punctures p >= 1")
    p.add_argument("-q", "--orbifold", type=int, required=required, help="orbifold points q >= 0")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="orbimgs", description="Maximal green sequences for orbifold diagrams.")
    parser.add_argument("--version", action="version", version=f"%(prog)s (kernel: {_backend.BACKEND})")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    b = sub.add_parser("build", help="print the diagram of T(n,p,q)")
    _add_params(b)
    b.add_argument("--format", choices=("json", "dot"), default="json")
    b.add_argument("--frozen", action="store_true", help="include the framing")

    s = sub.add_parser("sequence", help="list the explicit maximal green sequence")
    _add_params(s)
    s.add_argument("--annotate", action="store_true", help="tag each label with its step id")

    v = sub.add_parser("verify", help="replay and check a sequence")
    _add_params(v, required=False)
    v.add_argument("--input", help="diagram document (JSON)")
    v.add_argument("--sequence", help="comma separated labels (default: the explicit sequence)")
    v.add_argument("--trace", choices=("superscript", "matrix"))
    v.add_argument("--checkpoints", action="store_true", help="also check intermediate states")
    v.add_argument("--grid", action="store_true", help="verify the whole parameter grid")
    v.add_argument("--jobs", type=int, default=None, help="worker processes for --grid")

    r = sub.add_parser("search", help="breadth-first search for a maximal green sequence")
    _add_params(r, required=False)
    r.add_argument("--input", help="diagram document (JSON)")
    r.add_argument("--max-depth", type=int, required=True)
    r.add_argument("--max-states", type=int, default=1_000_000)
    r.add_argument("--all", action="store_true", help="enumerate every sequence (rank <= 4)")
    return parser


def _params(args, parser) -> OrbifoldParams | None:
    given = [x is not None for x in (args.genus, args.punctures, args.orbifold)]
    if not any(given):
        return None
    if not all(given):
        parser.error("-n, -p and -q go together")
    try:
        P = OrbifoldParams(args.genus, args.punctures, args.orbifold)
    except ValueError as exc:
        parser.error(str(exc))
    reason = validate_params(P)
    if reason is not None:
        raise UnsupportedParams(reason)
    return P


def _source(args, parser):
    """(matrix_or_seed, params) from --input or -n/-p/-q."""
    P = _params(args, parser)
    if args.input and P:
        parser.error("use either --input or -n/-p/-q")
    if args.input:
        obj, P = load(args.input)
        return obj, P
    if P is None:
        parser.error("need --input or -n/-p/-q")
    return build_diagram(P), P


def cmd_build(args, parser, out):
    P = _params(args, parser)
    m = build_diagram(P)
    obj = frame(m) if args.frozen else m
    if args.format == "json":
        out.write(dumps(obj, P))
    else:
        out.write(to_dot(obj, frozen=args.frozen, name=f"D{P}"))
    return EXIT_OK


def cmd_sequence(args, parser, out):
    P = _params(args, parser)
    seq = delta(P)
    if args.annotate:
        for v, sid in zip(seq.steps, seq.annotations()):
            out.write(f"{v}\t{sid}\n")
    else:
        out.write("".join(f"{v}\n" for v in seq.steps))
    return EXIT_OK


def _grid_task(key):
    from .verify import verify_mgs

    P = OrbifoldParams(*key)
    rep = verify_mgs(P)
    return key, str(rep.outcome), rep.final_is_negative_permutation(), len(rep.steps)


def grid_points():
    """The acceptance grid: n 0..4, p 2..7, q 1..4, supported points only.

    Genus 0 with p = 2 needs q >= 2 for the construction; it is included.
    """
    for key in itertools.product(range(5), range(2, 8), range(1, 5)):
        if validate_params(OrbifoldParams(*key)) is None:
            yield key


def cmd_verify_grid(args, out):
    keys = list(grid_points())
    bad = 0
    with ProcessPoolExecutor(max_workers=args.jobs) as pool:
        for key, outcome, perm, steps in pool.map(_grid_task, keys):
            ok = outcome == "Valid" and perm
            bad += not ok
            out.write(f"{OrbifoldParams(*key)} {steps} steps: {outcome}{'' if perm else ', C not -permutation'}\n")
    out.write(f"{len(keys) - bad}/{len(keys)} valid\n")
    return EXIT_OK if bad == 0 else EXIT_INVALID


def cmd_verify(args, parser, out):
    if args.grid:
        return cmd_verify_grid(args, out)
    obj, P = _source(args, parser)
    seed = obj if isinstance(obj, FramedSeed) else frame(obj)
    if args.sequence:
        steps = [t.strip() for t in args.sequence.split(",") if t.strip()]
    elif P is not None:
        steps = delta(P).steps
    else:
        parser.error("custom diagrams need --sequence")
    _, report = apply_sequence(seed, steps, "strict")
    if args.trace:
        out.write(render_trace(report, args.trace))
    out.write(report.summary() + "\n")
    code = EXIT_OK if report.valid else EXIT_INVALID
    if args.checkpoints:
        if P is None:
            parser.error("--checkpoints needs -n/-p/-q or a document with params")
        results = run_checkpoints(P)
        if not results:
            out.write(f"no checkpoints recorded for {P}\n")
        for r in results:
            out.write(f"checkpoint {r.name} at {r.step}: {r.result}\n")
            if not r.ok:
                code = EXIT_INVALID
    return code


def cmd_search(args, parser, out):
    obj, _ = _source(args, parser)
    m = obj.base if isinstance(obj, FramedSeed) else obj
    cfg = SearchConfig(args.max_depth, args.max_states, "all" if args.all else "first")
    res = search_mgs(m, cfg)
    if res.found:
        for s in res.sequences:
            out.write(" ".join(s) + "\n")
        return EXIT_OK
    out.write(f"{res.status} after {res.states} states\n")
    return EXIT_EXHAUSTED if res.status == "exhausted" else EXIT_BUDGET


COMMANDS = {"build": cmd_build, "sequence": cmd_sequence, "verify": cmd_verify, "search": cmd_search}


def main(argv=None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return COMMANDS[args.command](args, parser, out)
    except UnsupportedParams as exc:
        print(f"{exc.reason.code}: {exc.reason.message}", file=sys.stderr)
        return EXIT_UNSUPPORTED
    except (DocumentError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (RankTooLarge, ValueError, OrbiError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
