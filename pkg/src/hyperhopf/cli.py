"""Command-line front end.

Every verb writes deterministic output to stdout.  Failures print a JSON
error record on stderr and exit with status 1 (2 for usage errors).
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from typing import Sequence

from . import limits
from .character import left_identity_sum, moebius_by_recurrence, moebius_closed
from .checks import run_all
from .coproduct import (
    check_rows,
    coproduct_bruteforce_poset,
    coproduct_h,
    coproduct_p,
    format_monomial,
    partition_factorizer,
)
from .errors import HyperhopfError
from .hooked import (
    HookedPartition,
    decode,
    encode,
    fibre,
    format_word,
    parse_word,
    phi,
)
from .hypertree import (
    RootedHypertree,
    build_hypertree_poset,
    enumerate_hypertrees,
    validate_hypertree,
)
from .partition import build_partition_poset, enumerate_partitions, partition_moebius_closed
from .poset import moebius_number
from .profile import enumerate_profiles
from .serialize import poset_to_json


class UsageError(HyperhopfError):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _vec(values) -> str:
    return "(" + ",".join(map(str, values)) + ")"


def _blocks(text: str) -> list[list[int]]:
    """``"1 5;3 4;6"`` (or with commas inside blocks) to a list of blocks."""
    try:
        return [[int(v) for v in part.replace(",", " ").split()] for part in text.split(";") if part.strip()]
    except ValueError as exc:
        raise UsageError(f"cannot read blocks {text!r}") from exc


def _emit_csv(header: list[str], rows: list[list]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(header)
    writer.writerows(rows)
    return buf.getvalue()


def _json(data) -> str:
    return json.dumps(data, indent=2) + "\n"


# verbs


def cmd_enumerate(args) -> str:
    if args.kind == "partition":
        items = enumerate_partitions(args.n)
        as_json = [[list(b) for b in p.blocks] for p in items]
    else:
        items = enumerate_hypertrees(args.n)
        as_json = [[list(e) for e in t.edges] for t in items]
    if args.format == "json":
        return _json(as_json)
    if args.format == "csv":
        return _emit_csv(["index", "value"], [[i, str(x)] for i, x in enumerate(items)])
    return "".join(f"{x}\n" for x in items)


def cmd_poset(args) -> str:
    if args.kind == "partition":
        P = build_partition_poset(args.n)
    else:
        P = build_hypertree_poset(args.n, augmented=args.augmented)
    data = poset_to_json(P)
    if P.is_bounded:
        data["moebius"] = moebius_number(P)
    if args.format == "json":
        return _json(data)
    lines = [f"size {data['size']}", f"covers {len(data['covers'])}"]
    if "moebius" in data:
        lines.append(f"moebius {data['moebius']}")
    lines += [f"{i} {e}" for i, e in enumerate(data["elements"])]
    lines += [f"{i} < {j}" for i, j in data["covers"]]
    return "\n".join(lines) + "\n"


def _moebius_value(method: str, n: int, kind: str) -> int:
    if kind == "partition":
        if method == "poset":
            return moebius_number(build_partition_poset(n))
        if method == "closed":
            return partition_moebius_closed(n)
        raise UsageError(f"method {method} is only defined for hypertree posets")
    if method == "poset":
        return moebius_number(build_hypertree_poset(n, augmented=True))
    if method == "recurrence":
        return moebius_by_recurrence(n)
    if method == "left":
        return left_identity_sum(n)
    return moebius_closed(n)


def cmd_moebius(args) -> str:
    if args.all:
        methods = ["poset", "recurrence", "left", "closed"]
        rows = []
        for n in range(2, args.n + 1):
            values = []
            for m in methods:
                try:
                    values.append(_moebius_value(m, n, "hypertree"))
                except HyperhopfError:
                    values.append(None)
            rows.append([n] + values)
        if args.format == "json":
            return _json([dict(zip(["n"] + methods, r)) for r in rows])
        if args.format == "csv":
            return _emit_csv(["n"] + methods, [["" if v is None else v for v in r] for r in rows])
        width = max(11, max(len(str(v)) for r in rows for v in r) + 2)
        out = "n".ljust(4) + "".join(m.rjust(width) for m in methods) + "\n"
        for r in rows:
            out += str(r[0]).ljust(4) + "".join(("-" if v is None else str(v)).rjust(width) for v in r[1:]) + "\n"
        return out
    return f"{_moebius_value(args.method, args.n, args.kind)}\n"


def _coproduct_partition(args) -> tuple[str, bool]:
    table = coproduct_p(args.n)
    brute = None
    if args.check or args.n <= limits.current().partition_n:
        brute = coproduct_bruteforce_poset(build_partition_poset(args.n), partition_factorizer, args.n).terms
    rows = []
    for key, c in table.terms.items():
        b = brute.get(key, 0) if brute is not None else None
        rows.append({"n": args.n, "j": list(key.j), "k": key.k, "closed": c, "bruteforce": b,
                     "match": None if b is None else b == c})
    ok = all(r["match"] is not False for r in rows)
    if args.format == "json":
        return _json(rows), ok
    if args.format == "csv":
        return _emit_csv(
            ["n", "j", "k", "closed", "bruteforce", "match"],
            [[r["n"], _vec(r["j"]), r["k"], r["closed"], "" if r["bruteforce"] is None else r["bruteforce"],
              "" if r["match"] is None else r["match"]] for r in rows],
        ), ok
    out = "".join(f"{c} {format_monomial(lhs)} (x) {format_monomial(rhs)}\n" for lhs, rhs, c in table.tensor_terms())
    return out, ok


def cmd_coproduct(args) -> tuple[str, bool]:
    if args.partition:
        return _coproduct_partition(args)
    table = coproduct_h(args.n)
    if args.check or args.n <= limits.current().hypertree_n:
        rows = check_rows(args.n)
    else:
        rows = [{"n": args.n, "alpha": p.alpha, "pi": p.pi, "closed": c, "bruteforce": None, "match": None}
                for p, c in table.terms.items()]
    ok = all(r["match"] is not False for r in rows)
    if args.format == "json":
        return _json([{**r, "alpha": list(r["alpha"]), "pi": list(r["pi"])} for r in rows]), ok
    if args.format == "csv":
        return _emit_csv(
            ["n", "alpha", "pi", "closed", "bruteforce", "match"],
            [[r["n"], _vec(r["alpha"]), _vec(r["pi"]), r["closed"],
              "" if r["bruteforce"] is None else r["bruteforce"],
              "" if r["match"] is None else r["match"]] for r in rows],
        ), ok
    out = ""
    for left, right, c in table.tensor_terms():
        out += f"{c} {format_monomial(left)} (x) {format_monomial(right)}\n"
    return out, ok


def cmd_profiles(args) -> str:
    profs = enumerate_profiles(args.n)
    table = coproduct_h(args.n).terms
    if args.format == "json":
        return _json([{**p.to_json(), "coefficient": table[p]} for p in profs])
    if args.format == "csv":
        return _emit_csv(["n", "alpha", "pi", "coefficient"],
                         [[args.n, _vec(p.alpha), _vec(p.pi), table[p]] for p in profs])
    return "".join(f"{p} {table[p]}\n" for p in profs)


def _rooted_from_args(args) -> RootedHypertree:
    tree = validate_hypertree(args.n, _blocks(args.edges))
    return RootedHypertree(tree, args.root)


def _hooked_from_args(args) -> HookedPartition:
    return HookedPartition(args.n, args.root, tuple(tuple(b) for b in _blocks(args.blocks)))


def cmd_encode(args) -> str:
    R = _rooted_from_args(args)
    P, w = phi(R), encode(R)
    if args.format == "json":
        return _json({"hooked": P.to_json(), "word": list(w)})
    return f"{P}\n{format_word(w)}\n"


def cmd_decode(args) -> str:
    P = _hooked_from_args(args)
    R = decode(P, parse_word(args.word, args.n))
    if args.format == "json":
        return _json(R.to_json())
    return f"{R.tree}\n"


def cmd_fibre(args) -> str:
    P = _hooked_from_args(args)
    alpha = tuple(int(a) for a in args.alpha.replace(",", " ").split())
    trees = fibre(P, alpha)
    if args.format == "json":
        return _json([[list(e) for e in R.tree.edges] for R in trees])
    if args.format == "csv":
        return _emit_csv(["word", "hypertree"], [[format_word(encode(R)), str(R.tree)] for R in trees])
    return "".join(f"{format_word(encode(R))}\t{R.tree}\n" for R in trees) + f"total {len(trees)}\n"


def cmd_verify(args) -> tuple[str, bool]:
    results = run_all(args.n)
    ok = all(r.passed for r in results)
    if args.format == "json":
        return _json([{"check": r.name, "passed": r.passed, "detail": r.detail} for r in results]), ok
    return "".join(r.line() + "\n" for r in results), ok


# parser


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="hyperhopf", description=__doc__.splitlines()[0])
    parser.add_argument("--config", help="JSON file with cap overrides, e.g. {\"hypertree_n\": 6}")
    parser.add_argument("--max-hypertree-n", type=int, dest="hypertree_n")
    parser.add_argument("--max-partition-n", type=int, dest="partition_n")
    parser.add_argument("--max-poset-elements", type=int, dest="poset_elements")
    sub = parser.add_subparsers(dest="verb", required=True, parser_class=_Parser)

    def verb(name, func, help, formats=("plain", "json", "csv")):
        p = sub.add_parser(name, help=help)
        p.set_defaults(func=func)
        p.add_argument("--format", choices=formats, default="plain")
        return p

    p = verb("enumerate", cmd_enumerate, "list hypertrees or set partitions")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--kind", choices=["hypertree", "partition"], default="hypertree")

    p = verb("poset", cmd_poset, "dump a poset as elements and covers", ("plain", "json"))
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--kind", choices=["hypertree", "partition"], default="hypertree")
    p.add_argument("--augmented", action="store_true", help="adjoin a greatest element")

    p = verb("moebius", cmd_moebius, "Moebius number of the augmented hypertree poset")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--method", choices=["poset", "recurrence", "closed", "left"], default="closed")
    p.add_argument("--kind", choices=["hypertree", "partition"], default="hypertree")
    p.add_argument("--all", action="store_true", help="table of every method for 2..n")

    p = verb("coproduct", cmd_coproduct, "coefficients of Delta(h_n) or Delta(p_n)")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--check", action="store_true", help="require the brute-force comparison")
    p.add_argument("--partition", action="store_true", help="Delta(p_n) instead of Delta(h_n)")

    p = verb("profiles", cmd_profiles, "feasible (alpha, pi) profiles with coefficients")
    p.add_argument("--n", type=int, required=True)

    p = verb("encode", cmd_encode, "hooked partition and word of a rooted hypertree", ("plain", "json"))
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--edges", required=True, help='edges as "2 6;1 5 6;1 3 4"')
    p.add_argument("--root", type=int, required=True)

    p = verb("decode", cmd_decode, "rooted hypertree from hooked partition and word", ("plain", "json"))
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--root", type=int, required=True)
    p.add_argument("--blocks", required=True, help='hooked blocks as "1 5;3 4;6"')
    p.add_argument("--word", required=True, help='letters as "6 2"; empty string for the empty word')

    p = verb("fibre", cmd_fibre, "rooted hypertrees with given hooked partition and valencies")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--root", type=int, required=True)
    p.add_argument("--blocks", required=True)
    p.add_argument("--alpha", required=True, help='valency vector as "4,2"')

    p = verb("verify", cmd_verify, "run the cross-checks up to n", ("plain", "json"))
    p.add_argument("--n", type=int, default=6)
    return parser


def _apply_caps(args) -> None:
    overrides = {}
    if args.config:
        try:
            with open(args.config) as fh:
                overrides.update(json.load(fh))
        except (OSError, json.JSONDecodeError) as exc:
            raise UsageError(f"cannot read config {args.config}: {exc}") from exc
    for key in ("hypertree_n", "partition_n", "poset_elements"):
        if getattr(args, key) is not None:
            overrides[key] = getattr(args, key)
    known = set(limits.Limits.__dataclass_fields__)
    unknown = set(overrides) - known
    if unknown:
        raise UsageError(f"unknown cap(s) {sorted(unknown)}")
    limits.set_limits(**overrides)


def main(argv: Sequence[str] | None = None) -> int:
    previous = limits.current()
    try:
        args = build_parser().parse_args(argv)
        _apply_caps(args)
        if getattr(args, "n", None) is not None and args.n < 1:
            raise UsageError("--n must be positive")
        result = args.func(args)
        out, ok = result if isinstance(result, tuple) else (result, True)
        sys.stdout.write(out)
        return 0 if ok else 1
    except UsageError as exc:
        sys.stderr.write(json.dumps(exc.record()) + "\n")
        return 2
    except HyperhopfError as exc:
        sys.stderr.write(json.dumps(exc.record()) + "\n")
        return 1
    finally:
        limits.set_limits(previous)


if __name__ == "__main__":
    sys.exit(main())
