"""Command line front end.

Subcommands: shuffle, factor, network, profile, selftest.  Data goes to
stdout, diagnostics to stderr.  Exit codes are part of the interface:
0 success, 1 selftest failure, 2 unparsable input, 3 arity mismatch
(length vs k, or a method that cannot handle the length), 4 index
arithmetic overflow.
"""

from __future__ import annotations

import argparse
import random
import sys

from . import recordfile
from .involution_factor import factor_cyclic, factor_permutation
from .network import build_network, emit_dot, emit_text
from .oracle import oracle_shuffle
from .perm_core import (
    Involution,
    Permutation,
    apply_pair_in_place,
    cycle_decompose,
    cycle_notation,
)
from .recordfile import RecordFormatError
from .shuffle_bitrev import (
    ShuffleSpec,
    exact_log,
    rotation_plan,
    shuffle_general_k2,
    shuffle_power,
)
from .shuffle_modinv import ModContext, OpCounter, j_map, op_count_profile, shuffle_modinv


class ParseFailure(ValueError):
    """Input that could not be understood (exit 2)."""


class ArityFailure(ValueError):
    """Input whose shape does not fit the requested operation (exit 3)."""


class ShuffleStats:
    def __init__(self, swaps: int, rounds: int, euclid_iters: int):
        self.swaps = swaps
        self.rounds = rounds
        self.euclid_iters = euclid_iters

    def line(self) -> str:
        return "swaps=%d rounds=%d euclid_iters=%d" % (self.swaps, self.rounds, self.euclid_iters)


def _resolve_method(method: str, N: int, k: int) -> str:
    """Map the user's method choice to a concrete routine for this N, k."""
    power = exact_log(N, k) is not None if N else False
    if method == "auto":
        if power:
            return "power"
        if k == 2:
            return "general"
        return "modinv"
    if method == "bitrev":
        if power:
            return "power"
        if k == 2 and N % 2 == 0:
            return "general"
        raise ArityFailure("bitrev needs N = k**n, or k=2 with N even (N=%d, k=%d)" % (N, k))
    if method in ("modinv", "oracle"):
        return method
    raise ParseFailure("unknown method %r" % method)


def _shuffle_any(array, k: int, how: str) -> ShuffleStats:
    """Shuffle array in place with the resolved method; report work done."""
    if how == "power":
        spec = ShuffleSpec.for_length(len(array), k)
        c1, c2 = shuffle_power(array, spec)
        return ShuffleStats(c1 + c2, 2, 0)
    if how == "general":
        stats = shuffle_general_k2(array)
        rotations = len(rotation_plan(len(array) // 2).rotations) if len(array) else 0
        return ShuffleStats(stats.swaps, 2 + rotations, 0)
    if how == "modinv":
        counter = OpCounter()
        shuffle_modinv(array, k, counter)
        return ShuffleStats(counter.swaps, 2, counter.euclid_iterations)
    if how == "oracle":
        out = oracle_shuffle(array, k)
        array[:] = out
        return ShuffleStats(0, 0, 0)
    raise AssertionError(how)


def cmd_shuffle(args) -> int:
    k = args.k
    if k is not None and k < 2:
        raise ParseFailure("k must be at least 2")
    if args.records:
        return _shuffle_records(args, k)
    return _shuffle_lines(args, k or 2)


def _read_text(path: str | None) -> str:
    if path in (None, "-"):
        return sys.stdin.read()
    with open(path, "r") as fh:
        return fh.read()


def _read_binary(path: str | None) -> bytes:
    if path in (None, "-"):
        return sys.stdin.buffer.read()
    with open(path, "rb") as fh:
        return fh.read()


def _shuffle_lines(args, k: int) -> int:
    tokens = _read_text(args.input).split()
    if len(tokens) % k:
        raise ArityFailure("%d tokens is not a multiple of k=%d" % (len(tokens), k))
    how = _resolve_method(args.method, len(tokens), k)
    stats = _shuffle_any(tokens, k, how)
    text = " ".join(tokens) + "\n" if tokens else ""
    if args.in_place and args.input not in (None, "-"):
        with open(args.input, "w") as fh:
            fh.write(text)
    else:
        _write_text(args.output, text)
    if args.stats:
        print(stats.line(), file=sys.stderr)
    return 0


def _write_text(path: str | None, text: str) -> None:
    if path in (None, "-"):
        sys.stdout.write(text)
    else:
        with open(path, "w") as fh:
            fh.write(text)


def _shuffle_records(args, k: int | None) -> int:
    if args.in_place:
        if args.input in (None, "-"):
            raise ParseFailure("--in-place needs a file path, not stdin")
        rf, mm = recordfile.open_records_inplace(args.input)
        k = k or rf.k
        if rf.n_records % k:
            raise ArityFailure("%d records is not a multiple of k=%d" % (rf.n_records, k))
        how = _resolve_method(args.method, rf.n_records, k)
        stats = _shuffle_any(mm, k, how)
        mm.flush()
        del mm
    else:
        rf = recordfile.parse_record_file(_read_binary(args.input))
        k = k or rf.k
        if rf.n_records % k:
            raise ArityFailure("%d records is not a multiple of k=%d" % (rf.n_records, k))
        how = _resolve_method(args.method, rf.n_records, k)
        stats = _shuffle_any(rf.records, k, how)
        out = rf.to_bytes()
        if args.output in (None, "-"):
            sys.stdout.buffer.write(out)
        else:
            with open(args.output, "wb") as fh:
                fh.write(out)
    if args.stats:
        print(stats.line(), file=sys.stderr)
    return 0


def _parse_permutation(text: str) -> Permutation:
    try:
        values = [int(tok) for tok in text.split()]
    except ValueError as exc:
        raise ParseFailure("permutation must be a list of integers") from exc
    try:
        return Permutation(values)
    except ValueError as exc:
        raise ParseFailure(str(exc)) from exc


def cmd_factor(args) -> int:
    text = args.perm if args.perm not in (None, "-") else _read_text(None)
    p = _parse_permutation(text)
    if args.enumerate:
        decomp = cycle_decompose(p).cycles
        if len(decomp) != 1:
            raise ParseFailure("--enumerate needs a single-cycle permutation")
        cycle = decomp[0]
        n = p.size
        for axis in range(n):
            pair = factor_cyclic(n, axis)
            s = _relabel(pair.s, cycle, n)
            t = _relabel(pair.t, cycle, n)
            print("S: " + cycle_notation(s))
            print("T: " + cycle_notation(t))
        return 0
    pair = factor_permutation(p)
    print("S: " + cycle_notation(pair.s))
    print("T: " + cycle_notation(pair.t))
    return 0


def _relabel(inv, cycle, n):
    m = list(range(n))
    for a, b in inv.transpositions:
        m[cycle[a]], m[cycle[b]] = cycle[b], cycle[a]
    return Involution(m, check=False)


def cmd_network(args) -> int:
    if args.perm is not None:
        target = _parse_permutation(args.perm)
        method = args.method if args.method != "auto" else "factorization"
        if method != "factorization":
            raise ParseFailure("--perm only makes sense with the factorization method")
    else:
        k = args.k or 2
        if args.exp is not None and args.n is not None:
            raise ParseFailure("give either --exp or --n, not both")
        if args.exp is not None:
            N = k ** args.exp
        elif args.n is not None:
            N = args.n
        else:
            raise ParseFailure("need --exp, --n, or --perm")
        if N < 2 or N % k:
            raise ArityFailure("N=%d is not a positive multiple of k=%d" % (N, k))
        target = ShuffleSpec.for_length(N, k)
        method = args.method
        if method == "auto":
            method = "bitrev" if target.n is not None else "modinv"
        if method == "bitrev" and target.n is None:
            raise ArityFailure("bitrev network needs N = k**n (N=%d, k=%d)" % (N, k))
        if method == "factorization":
            raise ParseFailure("factorization networks need --perm")
    net = build_network(method, target)
    sys.stdout.write(emit_dot(net) if args.format == "dot" else emit_text(net))
    return 0


def cmd_profile(args) -> int:
    lo, hi = _parse_range(args.m_range)
    step = args.step
    if step < 1:
        raise ParseFailure("--step must be positive")
    rows = op_count_profile(range(lo, hi + 1, step), args.k)
    print("N,euclid_iterations,gcd_calls,swaps")
    for row in rows:
        print("%d,%d,%d,%d" % row)
    return 0


def _parse_range(text: str) -> tuple[int, int]:
    try:
        if ".." in text:
            lo_s, hi_s = text.split("..", 1)
            lo, hi = int(lo_s), int(hi_s)
        else:
            lo = hi = int(text)
    except ValueError as exc:
        raise ParseFailure("range must look like LO..HI") from exc
    if lo < 1 or hi < lo:
        raise ParseFailure("range %d..%d is empty or negative" % (lo, hi))
    return lo, hi


def cmd_selftest(args) -> int:
    checks = 0
    failures = []

    def check(ok: bool, what: str) -> None:
        nonlocal checks
        checks += 1
        if not ok:
            failures.append(what)

    injected = args.inject_fault
    rng = random.Random(20240915)
    for N in range(2, args.max_n + 1):
        for k in (2, 3, 4, 5):
            if N % k:
                continue
            expected = oracle_shuffle(list(range(N)), k)
            got = list(range(N))
            shuffle_modinv(got, k)
            if injected:
                got[0], got[-1] = got[-1], got[0]  # deliberate corruption hook
                injected = False
            check(got == expected, "modinv N=%d k=%d" % (N, k))
            if exact_log(N, k) is not None:
                got = list(range(N))
                shuffle_power(got, ShuffleSpec.for_length(N, k))
                check(got == expected, "bitrev N=%d k=%d" % (N, k))
            if k == 2:
                got = list(range(N))
                shuffle_general_k2(got)
                check(got == expected, "general N=%d k=%d" % (N, k))
            ctx = ModContext.for_shuffle(N, k)
            ok = all(
                j_map(r, j_map(r, x, ctx), ctx) == x
                for r in (1, k)
                for x in range(ctx.m)
            )
            check(ok, "involution law N=%d k=%d" % (N, k))
        perm = list(range(N))
        rng.shuffle(perm)
        p = Permutation(perm)
        pair = factor_permutation(p)
        arr = list(range(N))
        apply_pair_in_place(arr, pair.s, pair.t)
        reference = [0] * N
        for i, v in enumerate(p.map):
            reference[v] = i
        check(arr == reference, "factor round trip N=%d" % N)
    for what in failures:
        print("FAIL %s" % what, file=sys.stderr)
    print("selftest: %d checks, %d failures" % (checks, len(failures)))
    return 1 if failures else 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="shuffleworks",
        description="In-place k-way perfect shuffles in two rounds of swaps.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("shuffle", help="shuffle tokens or fixed-size records in place")
    p.add_argument("input", nargs="?", help="input path, or - / omitted for stdin")
    p.add_argument("--k", type=int, default=None, help="shuffle arity (default 2, or the record header)")
    p.add_argument(
        "--method",
        choices=["bitrev", "modinv", "auto", "oracle"],
        default="auto",
        help="bitrev: digit reversal (k**n, or k=2 any even length); modinv: modular inverses; oracle: reference",
    )
    mode = p.add_mutually_exclusive_group()
    mode.add_argument("--lines", action="store_true", help="whitespace tokens (default)")
    mode.add_argument("--records", action="store_true", help="binary record container")
    p.add_argument("--in-place", action="store_true", help="rewrite the input file itself")
    p.add_argument("--stats", action="store_true", help="print work counters to stderr")
    p.add_argument("-o", "--output", default=None, help="output path (default stdout)")
    p.set_defaults(func=cmd_shuffle)

    p = sub.add_parser("factor", help="split a permutation into two involutions")
    p.add_argument("perm", nargs="?", help="image list like '1 2 0', or stdin")
    p.add_argument(
        "--enumerate",
        action="store_true",
        help="print all N factorizations (single-cycle input only)",
    )
    p.set_defaults(func=cmd_factor)

    p = sub.add_parser("network", help="emit the explicit swap network")
    p.add_argument("--k", type=int, default=None)
    p.add_argument("--exp", type=int, default=None, help="build for N = k**EXP")
    p.add_argument("--n", type=int, default=None, help="build for N positions")
    p.add_argument("--perm", default=None, help="factor this permutation instead")
    p.add_argument(
        "--method",
        choices=["bitrev", "modinv", "factorization", "auto"],
        default="auto",
    )
    p.add_argument("--format", choices=["text", "dot"], default="text")
    p.set_defaults(func=cmd_network)

    p = sub.add_parser("profile", help="CSV of index-arithmetic cost per size")
    p.add_argument("--k", type=int, default=2)
    p.add_argument("--m-range", required=True, help="M values LO..HI")
    p.add_argument("--step", type=int, default=1)
    p.set_defaults(func=cmd_profile)

    p = sub.add_parser("selftest", help="cross-check the shuffle routines")
    p.add_argument("--max-n", type=int, default=64)
    p.add_argument("--inject-fault", action="store_true", help=argparse.SUPPRESS)
    p.set_defaults(func=cmd_selftest)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except ParseFailure as exc:
        print("error: %s" % exc, file=sys.stderr)
        return 2
    except RecordFormatError as exc:
        print("error: %s" % exc, file=sys.stderr)
        return 2
    except ArityFailure as exc:
        print("error: %s" % exc, file=sys.stderr)
        return 3
    except OverflowError as exc:
        print("error: %s" % exc, file=sys.stderr)
        return 4
    except FileNotFoundError as exc:
        print("error: %s" % exc, file=sys.stderr)
        return 2
    except ValueError as exc:
        # anything the library rejects is ultimately bad input
        print("error: %s" % exc, file=sys.stderr)
        return 2


def run() -> None:
    sys.exit(main())


if __name__ == "__main__":
    run()
