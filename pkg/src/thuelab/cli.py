"""Command-line interface.

Exit statuses: 0 success, 1 repetition found by a verifier, 2 bad input,
3 solver guard exceeded, 4 I/O failure, 10 counterexample to the
conjectured lower bound found by ``sweep``.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
import time
from dataclasses import asdict, dataclass
from datetime import datetime, timezone
from pathlib import Path
from typing import Optional, Sequence

from . import __version__
from .bounds import MAX_PRODUCT_ORDER, SweepReport, certify, sweep_conjecture
from .colouring import Colouring, exact_pi, verify_nonrepetitive
from .errors import ThueLabError, TooLarge
from .graphio import from_graph6, to_graph6
from .graphs import make_family
from .words import find_repetition, thue_word

OK, REPETITIVE, BAD_INPUT, GUARD, IO_ERROR, COUNTEREXAMPLE = 0, 1, 2, 3, 4, 10


@dataclass
class RunRecord:
    command: str
    inputs: list[str]
    outputs: list[str]
    wall_time_s: float
    version: str
    timestamp: str


def _write_record(out: Path, command: str, argv: Sequence[str], outputs: list[str], start: float) -> None:
    record = RunRecord(
        command=command, inputs=list(argv), outputs=outputs,
        wall_time_s=round(time.perf_counter() - start, 6), version=__version__,
        timestamp=datetime.now(timezone.utc).isoformat(timespec="seconds"),
    )
    out.with_name(out.name + ".run.json").write_text(json.dumps(asdict(record), indent=2) + "\n")


def _emit(text: str, out: Optional[str]) -> None:
    if out:
        Path(out).write_text(text)
    else:
        sys.stdout.write(text)


def _csv(rows: list[dict], columns: Sequence[str]) -> str:
    buf = io.StringIO()
    w = csv.DictWriter(buf, fieldnames=list(columns), lineterminator="\n")
    w.writeheader()
    w.writerows(rows)
    return buf.getvalue()


def _guard(n: int, force: bool, what: str) -> None:
    if n > MAX_PRODUCT_ORDER:
        if not force:
            raise TooLarge(f"{what} has {n} vertices, above the solver guard {MAX_PRODUCT_ORDER}; use --force")
        print(f"warning: solving {what} with {n} vertices beyond the guard", file=sys.stderr)


def cmd_pi(args) -> int:
    g = make_family(args.graph)
    _guard(g.n, args.force, args.graph)
    pi, witness = exact_pi(g)
    verified = None
    if args.verify:
        verified = verify_nonrepetitive(g, witness) is None
    row = {"graph": args.graph, "g6": to_graph6(g), "n": g.n, "pi": pi,
           "colours": list(witness.colours), "verified": verified}
    if args.format == "csv":
        row["colours"] = " ".join(map(str, witness.colours))
        row["verified"] = "" if verified is None else str(verified).lower()
        text = _csv([row], ["graph", "g6", "n", "pi", "colours", "verified"])
    else:
        text = json.dumps(row) + "\n"
    _emit(text, args.output)
    return OK if verified in (None, True) else REPETITIVE


def _read_text(source: str) -> str:
    return sys.stdin.read() if source == "-" else Path(source).read_text()


def cmd_verify(args) -> int:
    g = make_family(args.graph)
    g6, colouring = Colouring.from_json(_read_text(args.colouring))
    if g6 is not None and from_graph6(g6) != g:
        print(f"error: colouring is for graph {g6}, not {to_graph6(g)}", file=sys.stderr)
        return BAD_INPUT
    witness = verify_nonrepetitive(g, colouring)
    if witness is None:
        return OK
    print(json.dumps({"path": list(witness.path), "half_length": witness.half_length}))
    return REPETITIVE


def cmd_verify_word(args) -> int:
    text = _read_text(args.input)
    word = [int(tok) for tok in text.split()]
    hit = find_repetition(word)
    if hit is None:
        return OK
    start, half = hit
    print(json.dumps({"start": start, "half_length": half, "block": word[start:start + 2 * half]}))
    return REPETITIVE


def cmd_bounds(args) -> int:
    g, h = make_family(args.g), make_family(args.h)
    if args.exact:
        _guard(g.n * h.n, args.force, f"lex({args.g},{args.h})")
    cert = certify(g, h, args.g, args.h, exact=args.exact, force=args.force)
    if args.format == "csv":
        text = _csv([cert.csv_row()], list(cert.csv_row()))
    else:
        text = json.dumps(cert.to_dict(), sort_keys=True) + "\n"
    _emit(text, args.output)
    return OK


def cmd_sweep(args) -> int:
    done = {}
    if args.resume and Path(args.resume).exists():
        prior = SweepReport.from_json(Path(args.resume).read_text())
        done = {(c.g6_G, c.g6_H): c for c in prior.certificates}
    report = sweep_conjecture(args.max_order, force=args.force, done=done)
    fmt = args.format or ("csv" if args.output and args.output.endswith(".csv") else "json")
    text = report.to_csv() if fmt == "csv" else report.to_json()
    _emit(text, args.output)
    bad = report.counterexamples
    if bad:
        folder = Path(args.output).parent if args.output else Path(".")
        for i, cert in enumerate(bad, 1):
            (folder / f"counterexample_{i:03d}.json").write_text(
                json.dumps(cert.to_dict(), indent=2, sort_keys=True) + "\n")
        print(f"found {len(bad)} counterexample(s) to the conjectured lower bound", file=sys.stderr)
        return COUNTEREXAMPLE
    return OK


def cmd_thue_word(args) -> int:
    if args.length < 0:
        print("error: length must be non-negative", file=sys.stderr)
        return BAD_INPUT
    word = thue_word(args.length)
    if word:
        sys.stdout.write(" ".join(map(str, word)) + "\n")
    return OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="thuelab", description="Nonrepetitive colourings of graphs and lexicographic products.")
    p.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp, fmt_default: Optional[str] = "json"):
        sp.add_argument("--format", choices=("json", "csv"), default=fmt_default)
        sp.add_argument("-o", "--output", metavar="PATH")
        sp.add_argument("--force", action="store_true", help="override the solver size guard")

    sp = sub.add_parser("pi", help="exact Thue chromatic number with a witness")
    sp.add_argument("graph", help="graph descriptor, e.g. K4, K2,3, lex(S2,P3), g6:Bw")
    sp.add_argument("--verify", action="store_true", help="re-check the witness colouring")
    common(sp)
    sp.set_defaults(func=cmd_pi)

    sp = sub.add_parser("verify", help="check a colouring for repetitive paths")
    sp.add_argument("graph")
    sp.add_argument("colouring", help='JSON file {"graph": g6, "colours": [...]} or a JSON array; - for stdin')
    sp.set_defaults(func=cmd_verify)

    sp = sub.add_parser("verify-word", help="check a whitespace-separated word for squares")
    sp.add_argument("input", nargs="?", default="-")
    sp.set_defaults(func=cmd_verify_word)

    sp = sub.add_parser("bounds", help="bounds certificate for lex(G,H)")
    sp.add_argument("g")
    sp.add_argument("h")
    sp.add_argument("--exact", action="store_true", help="also solve the product exactly")
    common(sp)
    sp.set_defaults(func=cmd_bounds)

    sp = sub.add_parser("sweep", help="search small products for counterexamples")
    sp.add_argument("--max-order", type=int, default=9)
    sp.add_argument("--resume", metavar="JSON", help="reuse instances from an earlier JSON report")
    common(sp, fmt_default=None)
    sp.set_defaults(func=cmd_sweep)

    sp = sub.add_parser("thue-word", help="print a ternary squarefree word")
    sp.add_argument("length", type=int)
    sp.set_defaults(func=cmd_thue_word)
    return p


def main(argv: Optional[Sequence[str]] = None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    args = build_parser().parse_args(argv)
    start = time.perf_counter()
    try:
        status = args.func(args)
    except TooLarge as exc:
        print(f"error: {exc}", file=sys.stderr)
        return GUARD
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return IO_ERROR
    except (ThueLabError, ValueError, KeyError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return BAD_INPUT
    out = getattr(args, "output", None)
    if out:
        try:
            _write_record(Path(out), args.command, argv, [out], start)
        except OSError as exc:
            print(f"error: {exc}", file=sys.stderr)
            return IO_ERROR
    return status


if __name__ == "__main__":
    sys.exit(main())
