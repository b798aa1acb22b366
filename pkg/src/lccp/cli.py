"""Command-line interface.

Exit status: 0 on success, 1 when selftest finds a mismatch, 2 on usage or
input errors.
"""
from __future__ import annotations

import argparse
import sys
import time
from pathlib import Path
from typing import Optional, Sequence, TextIO

import numpy as np

from .errors import LccpError
from .lccp_index import LccpIndex, build_index, warm_up
from .oracle import GeneratorParams, blocky_partial_word, fuzz_compare, random_partial_word
from .partial_word import PartialWord, parse
from .storage import load_index, save_index

EXIT_OK = 0
EXIT_MISMATCH = 1
EXIT_USAGE = 2


class UsageError(Exception):
    """Bad input detected after argument parsing; reported with exit status 2."""


def _hole_char(value: str) -> bytes:
    raw = value.encode("latin-1", errors="strict") if value else b""
    if len(raw) != 1:
        raise argparse.ArgumentTypeError("hole char must be exactly one byte")
    return raw


def _positive(value: str) -> int:
    n = int(value)
    if n < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {value}")
    return n


def _density(value: str) -> float:
    d = float(value)
    if not 0.0 <= d <= 1.0:
        raise argparse.ArgumentTypeError("density must lie in [0, 1]")
    return d


def _seed(value: str) -> int:
    s = int(value)
    if not 0 <= s < 2**64:
        raise argparse.ArgumentTypeError("seed must be a 64-bit unsigned integer")
    return s


def _read_word(path: str, hole_char: bytes) -> PartialWord:
    try:
        data = Path(path).read_bytes()
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from exc
    return parse(data, hole_char)


def _index_for(args) -> LccpIndex:
    w = _read_word(args.word_file, args.hole_char)
    if getattr(args, "index", None):
        idx = load_index(args.index)
        if idx.word != w:
            raise UsageError(f"index {args.index} was built for a different word")
        return idx
    return build_index(w)


def _emit(out: TextIO, **values) -> None:
    for key, value in values.items():
        if isinstance(value, float):
            value = f"{value:.6f}"
        out.write(f"{key}={value}\n")


def cmd_build(args, out: TextIO) -> int:
    w = _read_word(args.word_file, args.hole_char)
    warm_up()
    idx = build_index(w)
    if args.output:
        save_index(idx, args.output, args.hole_char)
    s = idx.stats()
    _emit(out, n=s.n, h=s.h, mu=s.mu, kappa=s.kappa, table_cells=s.table_cells,
          build_seconds=s.build_seconds)
    return EXIT_OK


def _parse_batch(path: str, n: int) -> tuple[np.ndarray, np.ndarray]:
    try:
        lines = Path(path).read_text(encoding="ascii").splitlines()
    except (OSError, UnicodeDecodeError) as exc:
        raise UsageError(f"cannot read batch file {path}: {exc}") from exc
    ii, jj = [], []
    for lineno, line in enumerate(lines, 1):
        fields = line.split()
        try:
            if len(fields) != 2:
                raise ValueError
            i, j = int(fields[0]), int(fields[1])
        except ValueError:
            raise UsageError(f"{path}:{lineno}: expected two integers 'i j'") from None
        if not (1 <= i <= n and 1 <= j <= n):
            raise UsageError(f"{path}:{lineno}: position outside 1..{n}")
        ii.append(i)
        jj.append(j)
    return np.array(ii, dtype=np.int64), np.array(jj, dtype=np.int64)


def cmd_query(args, out: TextIO) -> int:
    if args.batch is None and (args.i is None or args.j is None):
        raise UsageError("query needs either two positions or --batch FILE")
    if args.batch is not None and args.i is not None:
        raise UsageError("give either positions or --batch, not both")
    idx = _index_for(args)
    if args.batch is None:
        if not (1 <= args.i <= idx.n and 1 <= args.j <= idx.n):
            raise UsageError(f"position outside 1..{idx.n}")
        out.write(f"{idx.lccp(args.i, args.j)}\n")
        return EXIT_OK
    ii, jj = _parse_batch(args.batch, idx.n)
    values = idx.lccp_many(ii, jj)
    out.write("".join(f"{v}\n" for v in values.tolist()))
    return EXIT_OK


def format_table(idx: LccpIndex) -> str:
    """TSV dump: header ``j\\i`` then 1..n, one row per transit position."""
    n = idx.n
    lines = ["\t".join(["j\\i"] + [str(i) for i in range(1, n + 1)])]
    for j, row in idx.rows().items():
        lines.append("\t".join([str(j)] + [str(v) for v in row.tolist()]))
    return "\n".join(lines) + "\n"


def parse_table(text: str) -> dict[int, list[int]]:
    """Inverse of :func:`format_table`: ``{j: [lccp(1, j), ..., lccp(n, j)]}``."""
    lines = text.splitlines()
    header = lines[0].split("\t")
    if header[0] != "j\\i":
        raise ValueError("not an LCCP table dump")
    rows = {}
    for line in lines[1:]:
        fields = [int(f) for f in line.split("\t")]
        if len(fields) != len(header):
            raise ValueError("ragged table row")
        rows[fields[0]] = fields[1:]
    return rows


def cmd_table(args, out: TextIO) -> int:
    out.write(format_table(_index_for(args)))
    return EXIT_OK


def cmd_selftest(args, out: TextIO) -> int:
    params = GeneratorParams(args.n, args.sigma, args.density, args.seed)
    report = fuzz_compare(params, args.trials)
    _emit(out, trials=report.trials, words_tested=report.words_tested,
          pairs_checked=report.pairs_checked, mismatches=len(report.mismatches))
    if report.ok:
        out.write("OK\n")
        return EXIT_OK
    for m in report.mismatches:
        out.write(f"MISMATCH word={m.word.render()} i={m.i} j={m.j} "
                  f"expected={m.expected} actual={m.actual}\n")
    return EXIT_MISMATCH


def cmd_bench(args, out: TextIO) -> int:
    warmup = warm_up()
    if args.density is not None:
        w = random_partial_word(GeneratorParams(args.n, args.sigma, args.density, args.seed))
    else:
        w = blocky_partial_word(args.n, args.sigma, args.mu, args.seed)
    idx = build_index(w)
    s = idx.stats()

    rng = np.random.default_rng(args.seed)
    ii = rng.integers(1, w.n + 1, size=args.queries)
    jj = rng.integers(1, w.n + 1, size=args.queries)
    pairs = list(zip(ii.tolist(), jj.tolist()))
    query = idx.lccp
    start = time.perf_counter()
    for i, j in pairs:
        query(i, j)
    single = time.perf_counter() - start
    start = time.perf_counter()
    idx.lccp_many(ii, jj)
    batch = time.perf_counter() - start

    _emit(out, n=s.n, h=s.h, mu=s.mu, kappa=s.kappa,
          table_cells=s.table_cells, table_cell_bound=(s.n + 1) * (2 * s.mu + 2),
          jit_warmup_seconds=warmup, build_seconds=s.build_seconds,
          queries=args.queries, query_seconds=single,
          qps=args.queries / max(single, 1e-9),
          batch_qps=args.queries / max(batch, 1e-9))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="lccp",
        description="Longest common compatible prefix queries on partial words.")
    sub = parser.add_subparsers(dest="command", required=True)

    def word_command(name: str, help_text: str) -> argparse.ArgumentParser:
        p = sub.add_parser(name, help=help_text)
        p.add_argument("word_file")
        p.add_argument("--hole-char", type=_hole_char, default=b"?",
                       help="byte that denotes a hole (default: ?)")
        return p

    p = word_command("build", "build an index and print its statistics")
    p.add_argument("-o", "--output", help="write the binary index here")
    p.set_defaults(func=cmd_build)

    p = word_command("query", "answer lccp(i, j) for one pair or a batch file")
    p.add_argument("i", type=int, nargs="?")
    p.add_argument("j", type=int, nargs="?")
    p.add_argument("--batch", help="file with one 'i j' pair per line")
    p.add_argument("--index", help="load a prebuilt index instead of rebuilding")
    p.set_defaults(func=cmd_query)

    p = word_command("table", "dump the LCCP table as TSV")
    p.add_argument("--index", help="load a prebuilt index instead of rebuilding")
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("selftest", help="fuzz the index against brute force")
    p.add_argument("--n", type=_positive, default=64)
    p.add_argument("--sigma", type=_positive, default=2)
    p.add_argument("--density", type=_density, default=0.5)
    p.add_argument("--seed", type=_seed, default=0)
    p.add_argument("--trials", type=_positive, default=100)
    p.set_defaults(func=cmd_selftest)

    p = sub.add_parser("bench", help="time preprocessing and queries")
    p.add_argument("--n", type=_positive, default=100_000)
    p.add_argument("--sigma", type=_positive, default=4)
    shape = p.add_mutually_exclusive_group()
    shape.add_argument("--density", type=_density, help="independent hole probability")
    shape.add_argument("--mu", type=int, default=50, help="number of hole blocks (default)")
    p.add_argument("--seed", type=_seed, default=0)
    p.add_argument("--queries", type=_positive, default=1_000_000)
    p.set_defaults(func=cmd_bench)
    return parser


def main(argv: Optional[Sequence[str]] = None, out: Optional[TextIO] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    out = out or sys.stdout
    try:
        return args.func(args, out)
    except (UsageError, LccpError) as exc:
        print(f"lccp: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
