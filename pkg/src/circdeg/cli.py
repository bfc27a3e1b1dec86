"""Command-line front end, result serialization, and the JSON-lines cache.

Subcommands: deg (degree report for one symbol), table (the C(d)/p_d table,
optionally checked against the embedded published copy), census (prime-order
isomorphism counts with optional witnesses), integral (connected integral
counts), verify (the fast or full verification suite).

Exit codes: 0 ok, 1 verification failure, 2 usage or malformed input,
3 internal disagreement between independent routes, 4 golden-table mismatch.
"""

from __future__ import annotations

import argparse
import dataclasses
import json
import os
import sys
import time
from typing import Any, Iterable, Optional

from . import __version__
from .census import prime_census
from .circulant import (
    algebraic_degree,
    fixing_subgroup,
    is_connected,
    parse_connection_set,
)
from .cyclotomic import splitting_field_degree
from .golden import golden_rows
from .integral import (
    as_integral_symbol,
    count_connected_integral,
    count_connected_integral_bruteforce,
)
from .mintable import TableRow, degree_table

EXIT_OK = 0
EXIT_VERIFY_FAILED = 1
EXIT_USAGE = 2
EXIT_DISAGREEMENT = 3
EXIT_GOLDEN_MISMATCH = 4

CACHE_ENV_VAR = "CIRCDEG_CACHE"


@dataclasses.dataclass(frozen=True)
class ResultEnvelope:
    """One cached command result; round-trips losslessly through JSON."""

    command: str
    inputs: dict[str, Any]
    output: Any
    library_version: str
    timestamp: int

    def to_json(self) -> str:
        return json.dumps(dataclasses.asdict(self), sort_keys=True)

    @staticmethod
    def from_json(line: str) -> "ResultEnvelope":
        data = json.loads(line)
        return ResultEnvelope(
            command=data["command"],
            inputs=data["inputs"],
            output=data["output"],
            library_version=data["library_version"],
            timestamp=data["timestamp"],
        )


def append_cache(path: str, envelope: ResultEnvelope) -> None:
    """Append one envelope as a single line; whole-line writes stay atomic."""
    try:
        with open(path, "a", encoding="utf-8") as fh:
            fh.write(envelope.to_json() + "\n")
    except OSError as exc:
        raise OSError(f"cannot append to cache {path}: {exc}") from exc


def read_cache(path: str) -> list[ResultEnvelope]:
    """All parseable envelopes in the cache; corrupt lines are skipped loudly."""
    if not os.path.exists(path):
        return []
    out = []
    try:
        with open(path, encoding="utf-8") as fh:
            for lineno, line in enumerate(fh, 1):
                line = line.strip()
                if not line:
                    continue
                try:
                    out.append(ResultEnvelope.from_json(line))
                except (json.JSONDecodeError, KeyError, TypeError):
                    print(
                        f"warning: skipping corrupt cache line {lineno} in {path}",
                        file=sys.stderr,
                    )
    except OSError as exc:
        raise OSError(f"cannot read cache {path}: {exc}") from exc
    return out


def _cache_result(args, command: str, inputs: dict[str, Any], output: Any) -> None:
    path = args.cache or os.environ.get(CACHE_ENV_VAR)
    if not path:
        return
    append_cache(
        path,
        ResultEnvelope(command, inputs, output, __version__, int(time.time())),
    )


def _row_dict(row: TableRow) -> dict[str, Any]:
    return {
        "d": row.d,
        "c": row.c_of_d,
        "p": row.p_d,
        "strict": row.strict,
        "witness": row.witness.encode(),
    }


def table_csv(rows: Iterable[TableRow]) -> str:
    """RFC-4180-style CSV; the witness field is quoted (it contains commas)."""
    lines = ["d,C(d),p_d,strict,witness"]
    for row in rows:
        strict = "true" if row.strict else "false"
        lines.append(
            f'{row.d},{row.c_of_d},{row.p_d},{strict},"{row.witness.encode()}"'
        )
    return "\n".join(lines) + "\n"


def _columns_text(rows: Iterable[tuple[int, int, int, bool]]) -> str:
    lines = ["d,C(d),p_d,strict"]
    for d, c, p, strict in rows:
        lines.append(f"{d},{c},{p},{'true' if strict else 'false'}")
    return "\n".join(lines) + "\n"


def cmd_deg(args) -> int:
    try:
        symbol = parse_connection_set(args.symbol)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    degree = algebraic_degree(symbol)
    fix_order = len(fixing_subgroup(symbol))
    connected = is_connected(symbol)
    integral = as_integral_symbol(symbol)
    report = {
        "degree": degree,
        "fix_order": fix_order,
        "valency": symbol.valency(),
        "connected": connected,
        "integral": integral.encode() if integral is not None else None,
    }
    print(f"degree {degree}")
    print(f"fix-order {fix_order}")
    print(f"valency {symbol.valency()}")
    print(f"connected {'true' if connected else 'false'}")
    print(f"integral {integral.encode() if integral is not None else 'no'}")
    if args.oracle:
        oracle = splitting_field_degree(symbol)
        report["oracle"] = oracle
        print(f"oracle {oracle}")
        if oracle != degree:
            print(
                f"error: eigenvalue degree {oracle} disagrees with formula {degree}",
                file=sys.stderr,
            )
            return EXIT_DISAGREEMENT
        print("agree true")
    _cache_result(args, "deg", {"symbol": symbol.encode(), "oracle": args.oracle}, report)
    return EXIT_OK


def cmd_table(args) -> int:
    if args.d_max < 1:
        print("error: d_max must be at least 1", file=sys.stderr)
        return EXIT_USAGE
    rows = degree_table(args.d_max)
    if args.format == "json":
        print(json.dumps([_row_dict(r) for r in rows], indent=2, sort_keys=True))
    else:
        sys.stdout.write(table_csv(rows))
    status = EXIT_OK
    if args.check:
        d_check = min(args.d_max, 100)
        computed = _columns_text(
            (r.d, r.c_of_d, r.p_d, r.strict) for r in rows[:d_check]
        )
        published = _columns_text(golden_rows(d_check))
        if computed != published:
            print("error: computed table deviates from the published table", file=sys.stderr)
            status = EXIT_GOLDEN_MISMATCH
        else:
            print(f"check ok: {d_check} rows match the published table", file=sys.stderr)
    _cache_result(
        args,
        "table",
        {"d_max": args.d_max, "format": args.format, "check": args.check},
        {"rows": [_row_dict(r) for r in rows], "check_passed": status == EXIT_OK},
    )
    return status


def cmd_census(args) -> int:
    try:
        record = prime_census(args.p, args.d)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    print(f"count {record.value}")
    print(f"method {record.method}")
    payload = {"count": record.value, "method": record.method}
    if args.witnesses:
        encoded = [w.encode() for w in record.witnesses]
        payload["witnesses"] = encoded
        for text in encoded:
            print(text)
        if not encoded:
            print(
                "note: witnesses are not materialized for this degree",
                file=sys.stderr,
            )
    _cache_result(
        args, "census", {"p": args.p, "d": args.d, "witnesses": args.witnesses}, payload
    )
    return EXIT_OK


def cmd_integral(args) -> int:
    if args.n < 1:
        print("error: n must be at least 1", file=sys.stderr)
        return EXIT_USAGE
    count = count_connected_integral(args.n)
    print(f"count {count}")
    payload: dict[str, Any] = {"count": count}
    status = EXIT_OK
    if args.brute:
        try:
            brute = count_connected_integral_bruteforce(args.n)
        except ValueError as exc:
            print(f"error: {exc}", file=sys.stderr)
            return EXIT_USAGE
        payload["brute"] = brute
        print(f"brute {brute}")
        if brute != count:
            print(
                f"error: enumeration {brute} disagrees with formula {count}",
                file=sys.stderr,
            )
            status = EXIT_DISAGREEMENT
    _cache_result(args, "integral", {"n": args.n, "brute": args.brute}, payload)
    return status


def cmd_verify(args) -> int:
    from . import verify

    suite = verify.fast_suite if args.suite == "fast" else verify.full_suite
    results = suite()
    failures = []
    for result in results:
        tag = "PASS" if result.passed else "FAIL"
        print(f"{tag} {result.name} ({result.seconds:.2f}s): {result.detail}")
        if not result.passed:
            failures.append(result.name)
    summary = {
        "suite": args.suite,
        "passed": not failures,
        "failures": failures,
        "checks": [
            {"name": r.name, "passed": r.passed, "seconds": round(r.seconds, 3)}
            for r in results
        ],
    }
    print(f"{'ok' if not failures else 'FAILED'}: {len(results) - len(failures)}/{len(results)} checks passed")
    _cache_result(args, "verify", {"suite": args.suite}, summary)
    return EXIT_OK if not failures else EXIT_VERIFY_FAILED


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="circdeg",
        description="Algebraic degree of circulant graphs: degrees, censuses, tables.",
    )
    parser.add_argument(
        "--cache",
        metavar="PATH",
        default=None,
        help=f"JSON-lines result cache (also via ${CACHE_ENV_VAR})",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_deg = sub.add_parser("deg", help="degree report for one connection set")
    p_deg.add_argument("symbol", help="connection set as n:s1,s2,...")
    p_deg.add_argument(
        "--oracle",
        action="store_true",
        help="also compute the eigenvalue-based degree and compare",
    )
    p_deg.set_defaults(func=cmd_deg)

    p_table = sub.add_parser("table", help="minimal-order table for degrees 1..d_max")
    p_table.add_argument("d_max", type=int)
    p_table.add_argument("--format", choices=("csv", "json"), default="csv")
    p_table.add_argument(
        "--check",
        action="store_true",
        help="compare against the embedded published table (d <= 100)",
    )
    p_table.set_defaults(func=cmd_table)

    p_census = sub.add_parser("census", help="isomorphism count at an odd prime order")
    p_census.add_argument("p", type=int, help="odd prime order")
    p_census.add_argument("d", type=int, help="target degree, d | (p-1)/2, d > 1")
    p_census.add_argument(
        "--witnesses", action="store_true", help="print one canonical witness per class"
    )
    p_census.set_defaults(func=cmd_census)

    p_integral = sub.add_parser(
        "integral", help="count connected integral circulant graphs of order n"
    )
    p_integral.add_argument("n", type=int)
    p_integral.add_argument(
        "--brute", action="store_true", help="cross-check by enumerating all symbols"
    )
    p_integral.set_defaults(func=cmd_integral)

    p_verify = sub.add_parser("verify", help="run a verification suite")
    p_verify.add_argument("suite", choices=("fast", "full"))
    p_verify.set_defaults(func=cmd_verify)

    return parser


def main(argv: Optional[list[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
