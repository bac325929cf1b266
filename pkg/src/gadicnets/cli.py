"""Command line front end.

Every subcommand prints one envelope::

    {"command": ..., "params": {...}, "result": {...}, "elapsed_ms": ...}

plus ``cap`` / ``window`` keys for capped or window-limited results.  Exit
status is 0 on success, 1 on a domain error, 2 on a usage error.  The
default exponent cap can be overridden with ``GADICNETS_CAP``.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
import time

from . import complements, gadic, metric_map as m23, nets, wordlen
from .errors import GadicError
from .window import Window

CAP_ENV = "GADICNETS_CAP"


def default_cap() -> int:
    raw = os.environ.get(CAP_ENV)
    if raw is None:
        return wordlen.DEFAULT_CAP
    try:
        return int(raw)
    except ValueError:
        raise GadicError(f"{CAP_ENV} must be an integer, got {raw!r}") from None


def _int_list(text: str) -> list[int]:
    try:
        return [int(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma separated integers, got {text!r}")


class _Usage(Exception):
    pass


def _load_json(path: str):
    try:
        with open(path) as fh:
            return json.load(fh)
    except OSError as exc:
        raise GadicError(f"cannot read {path}: {exc.strerror}") from None
    except json.JSONDecodeError as exc:
        raise GadicError(f"{path} is not valid JSON: {exc}") from None


def _load_complement(path: str) -> complements.EventuallyPeriodicSet:
    obj = _load_json(path)
    try:
        return complements.EventuallyPeriodicSet.from_json(obj)
    except (KeyError, TypeError) as exc:
        raise GadicError(f"{path}: not an eventually periodic set ({exc})") from None


def _load_finite(path: str) -> complements.FiniteSet:
    obj = _load_json(path)
    try:
        return complements.FiniteSet.from_json(obj)
    except (KeyError, TypeError) as exc:
        raise GadicError(f"{path}: not a finite set ({exc})") from None


def _cap(args) -> int:
    return args.cap if args.cap is not None else default_cap()


# each handler returns (result payload, extra envelope metadata, csv rows or None)

def cmd_repr(args):
    rep = gadic.canonical_repr(args.base, args.n)
    return {**rep.to_json(), "length": rep.length}, {}, None


def cmd_length(args):
    return {"base": args.base, "n": args.n, "length": gadic.length(args.base, args.n)}, {}, None


def cmd_wordlen(args):
    spec = wordlen.GeneratingSetSpec.parse(args.set, _cap(args))
    res = wordlen.word_length(spec, args.n, args.max_length)
    return {**res.to_json(), "set": spec.label()}, {"cap": spec.cap}, None


def cmd_sphere(args):
    spec = wordlen.GeneratingSetSpec.parse(args.set, _cap(args))
    w = Window(args.lo, args.hi)
    members = sorted(wordlen.sphere(spec, args.h, w))
    rows = [["n", "length"]] + [[n, args.h] for n in members]
    return ({"set": spec.label(), "h": args.h, "members": members},
            {"cap": spec.cap, "window": w.to_json()}, rows)


def cmd_lambda(args):
    spec = wordlen.GeneratingSetSpec.parse(args.set, _cap(args))
    value = wordlen.smallest_of_length(spec, args.h, args.limit)
    rows = [["h", "lambda"], [args.h, "" if value is None else value]]
    return ({"set": spec.label(), "h": args.h, "limit": args.limit, "value": value},
            {"cap": spec.cap}, rows)


def cmd_dio(args):
    sols = wordlen.diophantine_search(args.targets, args.bound)
    return ({"targets": args.targets, "bound": args.bound,
             "solutions": [{"a": a, "b": b, "c": c} for a, b, c in sols]}, {}, None)


def _netspec(args) -> nets.NetSpec:
    return nets.NetSpec.build(args.base, args.h, wide=not args.narrow)


def cmd_net_build(args):
    spec = _netspec(args)
    out = {**spec.to_json(),
           "rule": f"length_{spec.base}(n) % {spec.stride} == 0"}
    meta = {}
    if args.lo is not None or args.hi is not None:
        if args.lo is None or args.hi is None:
            raise _Usage("--lo and --hi go together")
        w = Window(args.lo, args.hi)
        out["members"] = spec.members(w)
        meta["window"] = w.to_json()
    return out, meta, None


def cmd_net_check(args):
    w = Window(args.lo, args.hi)
    if args.set_file:
        obj = _load_json(args.set_file)
        if isinstance(obj, dict) and "period" in obj:
            C = complements.EventuallyPeriodicSet.from_json(obj)
            target = C.__contains__
        else:
            target = list(complements.FiniteSet.from_json(obj))
    else:
        target = _netspec(args)
    v = nets.net_check_window(target, args.base, args.h, w, args.cap,
                              exhaustive=args.exhaustive)
    return v.to_json(with_certificates=args.certificates), {"cap": v.cap, "window": w.to_json()}, None


def cmd_cover(args):
    spec = _netspec(args)
    cert = nets.cover_witness(spec, args.n)
    return {**cert.to_json(), "valid": cert.validate(spec, spec.h)}, {}, None


def cmd_complement_check(args):
    W = _load_finite(args.w)
    C = _load_complement(args.c)
    if args.asymptotic:
        return complements.is_asymptotic_complement(W, C).to_json(), {}, None
    return {"complement": complements.is_complement(W, C)}, {}, None


def cmd_prune(args):
    W = _load_finite(args.w)
    C = _load_complement(args.c)
    w = Window(args.lo, args.hi)
    view = complements.prune_minimal(W, C, w)
    ok, _ = complements.is_minimal_on_window(W, view, w)
    return {**view.to_json(), "minimal_on_window": ok}, {"window": w.to_json()}, None


def cmd_map23(args):
    if args.inverse:
        t = args.n
        n = m23.map23_inverse(t)
    else:
        n = args.n
        t = m23.map23(n)
    return {"n": n, "f": t, "l2": gadic.length(2, n), "l3": gadic.length(3, t)}, {}, None


def cmd_distortion(args):
    return m23.distortion_witness(args.r).to_json(), {}, None


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("json", "csv", "text"), default="text")

    sweep = argparse.ArgumentParser(add_help=False)
    sweep.add_argument("--threads", type=int, default=1,
                       help="upper bound on worker threads (sweeps run serially)")

    p = argparse.ArgumentParser(prog="gadicnets", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    def add(name, fn, parents=(common,), **kw):
        sp = sub.add_parser(name, parents=list(parents), **kw)
        sp.set_defaults(func=fn)
        return sp

    sp = add("repr", cmd_repr, help="minimum length g-adic digits")
    sp.add_argument("--base", type=int, required=True)
    sp.add_argument("--n", type=int, required=True)

    sp = add("length", cmd_length, help="g-adic word length")
    sp.add_argument("--base", type=int, required=True)
    sp.add_argument("--n", type=int, required=True)

    sp = add("wordlen", cmd_wordlen, help="capped word length for mixed bases")
    sp.add_argument("--set", required=True, help="2,3 | g=4 | P=2,3,5 | S(P)=2,3")
    sp.add_argument("--cap", type=int)
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--max-length", type=int, default=wordlen.DEFAULT_MAX_LENGTH)

    sp = add("sphere", cmd_sphere, parents=(common, sweep), help="sphere in a window")
    sp.add_argument("--set", required=True)
    sp.add_argument("--cap", type=int)
    sp.add_argument("--h", type=int, required=True)
    sp.add_argument("--lo", type=int, required=True)
    sp.add_argument("--hi", type=int, required=True)

    sp = add("lambda", cmd_lambda, parents=(common, sweep),
             help="smallest positive integer of length h")
    sp.add_argument("--set", required=True)
    sp.add_argument("--cap", type=int)
    sp.add_argument("--h", type=int, required=True)
    sp.add_argument("--limit", type=int, default=10 ** 4)

    sp = add("dio", cmd_dio, help="solve 2^a - 3^b = c")
    sp.add_argument("--targets", type=_int_list, required=True)
    sp.add_argument("--bound", type=int, default=200)

    for name, fn, help_ in (("net-build", cmd_net_build, "describe a constructed net"),
                            ("net-check", cmd_net_check, "verify a net on a window"),
                            ("cover", cmd_cover, "cover certificate for n")):
        parents = (common, sweep) if name == "net-check" else (common,)
        sp = add(name, fn, parents=parents, help=help_)
        sp.add_argument("--base", type=int, required=True)
        sp.add_argument("--h", type=int, required=True)
        sp.add_argument("--narrow", action="store_true",
                        help="stride h+1 instead of 2h+1")
        if name == "cover":
            sp.add_argument("--n", type=int, required=True)
        else:
            req = name == "net-check"
            sp.add_argument("--lo", type=int, required=req)
            sp.add_argument("--hi", type=int, required=req)
        if name == "net-check":
            sp.add_argument("--cap", type=int)
            sp.add_argument("--set-file")
            sp.add_argument("--exhaustive", action="store_true")
            sp.add_argument("--certificates", action="store_true")

    sp = add("complement-check", cmd_complement_check, help="decide W + C = Z")
    sp.add_argument("--w", required=True)
    sp.add_argument("--c", required=True)
    sp.add_argument("--asymptotic", action="store_true")

    sp = add("prune", cmd_prune, help="minimal complement inside C")
    sp.add_argument("--w", required=True)
    sp.add_argument("--c", required=True)
    sp.add_argument("--lo", type=int, required=True)
    sp.add_argument("--hi", type=int, required=True)

    sp = add("map23", cmd_map23, help="length-preserving map (Z,d2) -> (Z,d3)")
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--inverse", action="store_true")

    sp = add("distortion", cmd_distortion, help="distortion witness for the map")
    sp.add_argument("--r", type=int, required=True)
    return p


def _params(args) -> dict:
    skip = {"func", "format", "command"}
    return {k: v for k, v in vars(args).items() if k not in skip}


def _text(obj, indent: str = "") -> str:
    lines = []
    for k, v in obj.items():
        if isinstance(v, dict):
            lines.append(f"{indent}{k}:")
            lines.append(_text(v, indent + "  "))
        elif isinstance(v, list) and v and isinstance(v[0], dict):
            lines.append(f"{indent}{k}:")
            for item in v:
                lines.append(indent + "  - " + ", ".join(f"{a}={b}" for a, b in item.items()))
        elif isinstance(v, list):
            lines.append(f"{indent}{k}: " + " ".join(map(str, v)))
        else:
            lines.append(f"{indent}{k}: {v}")
    return "\n".join(lines)


def run(argv=None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    t0 = time.perf_counter()
    try:
        result, meta, rows = args.func(args)
    except _Usage as exc:
        print(f"usage error: {exc}", file=stderr)
        return 2
    except (GadicError, ValueError) as exc:
        print(f"error: {exc}", file=stderr)
        return 1
    elapsed = round((time.perf_counter() - t0) * 1000, 3)
    envelope = {"command": args.command, "params": _params(args), "result": result,
                **meta, "elapsed_ms": elapsed}
    if args.format == "json":
        stdout.write(json.dumps(envelope) + "\n")
    elif args.format == "csv":
        if rows is None:
            print(f"usage error: csv output is only available for sphere and lambda",
                  file=stderr)
            return 2
        buf = io.StringIO()
        csv.writer(buf, lineterminator="\n").writerows(rows)
        stdout.write(buf.getvalue())
    else:
        stdout.write(_text(envelope) + "\n")
    return 0


def main(argv=None) -> None:
    sys.exit(run(argv))


if __name__ == "__main__":
    main()
