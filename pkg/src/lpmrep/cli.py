"""Command-line front end.

Machine-readable JSON goes to stdout, human summaries to stderr.  Exit
codes: 0 ok, 1 verification failure, 2 usage or input error, 3 scale limit.
"""

from __future__ import annotations

import argparse
import json
import secrets
import sys
from pathlib import Path

from . import formats
from .errors import LpmError, PrimeRangeError, ScaleLimitError
from .matroid import SUBSET_LIMIT, SWEEP_LIMIT, clonal_classes, is_nested, port
from .representation import build_extension_rep, build_muniform_rep, build_prime_rep, verify_representation
from .sharing import SharingScheme, coefficients_for, deal, reconstruct
from .weights import is_isolating, standard_weights

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_SCALE = 0, 1, 2, 3


class UsageError(LpmError):
    code = "usage"


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.exit(EXIT_USAGE, f"error: usage: {message}\n")


def _emit(obj, output: str | None = None) -> None:
    text = formats.dumps(obj)
    if output:
        Path(output).write_text(text)
    else:
        sys.stdout.write(text)


def _say(msg: str) -> None:
    print(msg, file=sys.stderr)


def _limits(args) -> tuple[int, int]:
    if args.limit_n is None:
        return SUBSET_LIMIT, SWEEP_LIMIT
    return args.limit_n, args.limit_n


def _element_arg(F, text: str):
    try:
        data = json.loads(text)
    except json.JSONDecodeError:
        data = text
    return formats.element_from_json(F, data)


def _players_arg(text: str | None) -> list[int] | None:
    if text is None:
        return None
    try:
        return [int(v) for v in text.replace(" ", "").split(",") if v]
    except ValueError:
        raise UsageError(f"bad player list {text!r}") from None


def cmd_info(args) -> int:
    single, sweep = _limits(args)
    p, part = formats.presentation_from_json(formats.load_json(args.presentation))
    m = p.matroid
    nbases = sum(1 for _ in m.bases(single))
    nested = is_nested(p)
    classes = clonal_classes(m, sweep)
    out = {
        "n": p.n,
        "r": p.r,
        "bases": nbases,
        "nested": nested,
        "clonal_classes": [list(c) for c in classes],
        "column_intervals": [list(c) for c in p.column_intervals()],
    }
    if part is not None:
        out["partition"] = list(part.thresholds)
    _emit(out)
    _say(f"n={p.n} r={p.r} bases={nbases} nested={str(nested).lower()}")
    return EXIT_OK


def cmd_represent(args) -> int:
    p, part = formats.presentation_from_json(formats.load_json(args.presentation))
    if args.mode == "ext":
        rep = build_extension_rep(p, args.p)
    elif args.mode == "prime":
        rep = build_prime_rep(p)
    else:
        if part is None:
            raise UsageError('muniform mode needs a "partition" in the presentation')
        if args.q is None:
            raise UsageError("muniform mode needs --q")
        rep = build_muniform_rep(p, part, args.q)
    _emit(formats.representation_to_json(rep), args.output)
    _say(f"{args.mode} representation over {rep.field!r}, {rep.rows}x{rep.cols}")
    return EXIT_OK


def cmd_verify(args) -> int:
    single, sweep = _limits(args)
    p, _ = formats.presentation_from_json(formats.load_json(args.presentation))
    rep = formats.representation_from_json(formats.load_json(args.representation))
    limit = single if args.mode == "bases" else sweep
    result = verify_representation(p.matroid, rep, args.mode, limit)
    _emit(result.to_json())
    if result:
        _say(f"verified ({args.mode}, {result.checked} sets)")
        return EXIT_OK
    _say(f"verification failed at {list(result.witness)}: rank {result.actual}, expected {result.expected}")
    return EXIT_FAIL


def cmd_isolating(args) -> int:
    single, _ = _limits(args)
    p, _ = formats.presentation_from_json(formats.load_json(args.presentation))
    report = is_isolating(p.graph, standard_weights(p), single)
    _emit(report.to_json())
    _say(f"isolating: {str(report.isolating).lower()}")
    return EXIT_OK if report else EXIT_FAIL


def cmd_port(args) -> int:
    _, sweep = _limits(args)
    p, _ = formats.presentation_from_json(formats.load_json(args.presentation))
    if not 1 <= args.po <= p.n:
        raise UsageError(f"--po must lie in 1..{p.n}")
    access = port(p.matroid, args.po)
    mins = access.minimal_qualified_sets(sweep)
    _emit({"p_o": args.po, "players": list(access.players), "minimal_qualified_sets": [list(s) for s in mins]})
    _say(f"port at {args.po}: {len(mins)} minimal qualified sets")
    return EXIT_OK


def cmd_share(args) -> int:
    rep = formats.representation_from_json(formats.load_json(args.representation))
    scheme = SharingScheme(rep, args.po)
    F = scheme.field
    secret = _element_arg(F, args.secret)
    if args.free is not None:
        data = json.loads(args.free)
        if not isinstance(data, list):
            raise UsageError("--free must be a JSON list of field elements")
        free = [formats.element_from_json(F, v) for v in data]
    else:
        free = [F([secrets.randbelow(F.p) for _ in range(F.degree)]) if F.degree > 1 else F(secrets.randbelow(F.p)) for _ in range(rep.rows - 1)]
    shares = deal(scheme, secret, coefficients_for(scheme, secret, free), _players_arg(args.players))
    _emit(formats.shares_to_json(args.representation, args.po, shares), args.output)
    _say(f"dealt {len(shares)} shares")
    return EXIT_OK


def cmd_reconstruct(args) -> int:
    data = formats.load_json(args.shares)
    rep_ref = args.rep or data.get("scheme")
    if not rep_ref:
        raise UsageError("no representation given (--rep) and none referenced by the share file")
    if not args.rep and not Path(rep_ref).exists() and Path(args.shares).exists():
        beside = Path(args.shares).parent / rep_ref
        if beside.exists():
            rep_ref = str(beside)
    rep = formats.representation_from_json(formats.load_json(rep_ref))
    p_o, shares = formats.shares_from_json(rep.field, data)
    wanted = _players_arg(args.players)
    if wanted is not None:
        missing = [x for x in wanted if x not in shares]
        if missing:
            raise UsageError(f"no shares for players {missing}")
        shares = {x: shares[x] for x in wanted}
    secret = reconstruct(SharingScheme(rep, p_o), shares)
    _emit({"secret": formats.element_to_json(secret)})
    _say(f"recovered secret {secret}")
    return EXIT_OK


def cmd_sweep(args) -> int:
    from .sweep import run_sweep

    max_n = args.limit_n or 6
    results = run_sweep(max_n=max_n, jobs=args.jobs)
    for r in results:
        _say(r.line())
        for f in r.failures:
            _say(f"    {f}")
    _emit({"max_n": max_n, "criteria": [r.to_json() for r in results]})
    return EXIT_OK if all(r.passed for r in results) else EXIT_FAIL


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--jobs", type=int, default=1, help="worker processes for the sweep")
    common.add_argument("--limit-n", type=int, default=None, help="ground-set size limit for exhaustive routines (sweep: largest n)")
    ap = _Parser(prog="lpmrep", description="Representations of lattice path matroids over finite fields.")
    sub = ap.add_subparsers(dest="command", required=True)

    def add(name, help_):
        return sub.add_parser(name, help=help_, parents=[common])

    def with_pres(name, fn, help_):
        sp = add(name, help_)
        sp.add_argument("presentation", help="presentation JSON file or inline JSON")
        sp.set_defaults(func=fn)
        return sp

    with_pres("info", cmd_info, "rank, basis count, nested flag, clonal classes")
    sp = with_pres("represent", cmd_represent, "build a representation")
    sp.add_argument("--mode", choices=["ext", "prime", "muniform"], required=True)
    sp.add_argument("--p", type=int, default=2, help="base prime for --mode ext")
    sp.add_argument("--q", type=int, default=None, help="prime base field for --mode muniform")
    sp.add_argument("-o", "--output")
    sp = with_pres("verify", cmd_verify, "check a representation against the matroid")
    sp.add_argument("representation")
    sp.add_argument("--mode", choices=["bases", "all-subsets"], default="bases")
    with_pres("isolating-check", cmd_isolating, "test the standard weights for isolation")
    sp = with_pres("port", cmd_port, "minimal qualified sets of a matroid port")
    sp.add_argument("--po", type=int, default=1)

    sp = add("share", "deal shares of a secret")
    sp.add_argument("representation")
    sp.add_argument("--po", type=int, default=1)
    sp.add_argument("--secret", required=True)
    sp.add_argument("--free", help="JSON list of r-1 free coefficients (default: drawn from the OS)")
    sp.add_argument("--players", help="comma-separated subset of players to emit")
    sp.add_argument("-o", "--output")
    sp.set_defaults(func=cmd_share)

    sp = add("reconstruct", "recover a secret from shares")
    sp.add_argument("shares")
    sp.add_argument("--rep", help="representation file (default: the one named in the share file)")
    sp.add_argument("--players", help="use only these players' shares")
    sp.set_defaults(func=cmd_reconstruct)

    sp = add("sweep", "run the exhaustive acceptance sweep")
    sp.set_defaults(func=cmd_sweep)
    return ap


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (ScaleLimitError, PrimeRangeError) as exc:
        _say(f"error: {exc.code}: {exc}")
        return EXIT_SCALE
    except LpmError as exc:
        _say(f"error: {exc.code}: {exc}")
        return EXIT_USAGE
    except (OSError, json.JSONDecodeError, KeyError, TypeError, ValueError) as exc:
        msg = str(exc).replace("\n", " ")
        _say(f"error: input: {type(exc).__name__}: {msg}")
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
