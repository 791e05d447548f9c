"""Explicit swap networks: rounds of disjoint exchanges, rendered as text or DOT.

A network is a list of rounds; each round is a list of (i, j) swaps with
i < j and no position appearing twice, so every round can execute as
fully independent exchanges.  The shuffle constructions emit two-round
networks; factoring an arbitrary permutation does too.
"""

from __future__ import annotations

from dataclasses import dataclass

from .involution_factor import factor_permutation
from .perm_core import Permutation
from .shuffle_bitrev import ShuffleSpec, rev_digits
from .shuffle_modinv import ModContext, _j_value

TEXT_FORMAT_LINE = "# shuffleworks-net v1"

Swap = tuple[int, int]


@dataclass(frozen=True)
class SwapNetwork:
    n_positions: int
    rounds: tuple[tuple[Swap, ...], ...]
    label: str

    @property
    def total_swaps(self) -> int:
        return sum(len(r) for r in self.rounds)


def check_disjoint(swaps) -> bool:
    """True when no position occurs twice in the given swaps."""
    seen = set()
    for i, j in swaps:
        if i == j or i in seen or j in seen:
            return False
        seen.add(i)
        seen.add(j)
    return True


def _validate(net: SwapNetwork) -> SwapNetwork:
    for r, round_ in enumerate(net.rounds):
        for i, j in round_:
            if not (0 <= i < j < net.n_positions):
                raise ValueError("swap (%d %d) out of range in round %d" % (i, j, r))
        if not check_disjoint(round_):
            raise ValueError("round %d has overlapping swaps" % r)
    return net


def build_network(method: str, target) -> SwapNetwork:
    """Construct the swap network of a shuffle or of a factored permutation.

    method "bitrev" and "modinv" take a ShuffleSpec; "factorization" takes
    a Permutation.  Round 0 is applied first.
    """
    if method == "bitrev":
        spec = _expect_spec(target)
        if spec.n is None or spec.n < 1:
            raise ValueError("bitrev network needs N = k**n")
        rounds = tuple(
            tuple(
                (i, j)
                for i in range(spec.N)
                if (j := rev_digits(i, t, spec)) > i
            )
            for t in (spec.n - 1, spec.n)
        )
        label = "bitrev"
    elif method == "modinv":
        spec = _expect_spec(target)
        ctx = ModContext.for_shuffle(spec.N, spec.k)
        rounds = tuple(
            tuple(
                (x, j)
                for x in range(1, ctx.m)
                if (j := _j_value(r, x, ctx.m, None)) > x
            )
            for r in (1, spec.k)
        )
        label = "modinv"
    elif method == "factorization":
        if not isinstance(target, Permutation):
            raise ValueError("factorization network needs a Permutation")
        pair = factor_permutation(target)
        rounds = (pair.t.transpositions, pair.s.transpositions)
        label = "factorization"
        return _validate(SwapNetwork(target.size, rounds, label))
    else:
        raise ValueError("unknown network method %r" % method)
    return _validate(SwapNetwork(spec.N, rounds, label))


def _expect_spec(target) -> ShuffleSpec:
    if not isinstance(target, ShuffleSpec):
        raise ValueError("this network method needs a ShuffleSpec")
    return target


def apply_network(array, net: SwapNetwork, reverse: bool = False) -> None:
    """Execute the network's swaps in round order (or reversed, which undoes it)."""
    if len(array) != net.n_positions:
        raise ValueError("array length %d != network size %d" % (len(array), net.n_positions))
    rounds = reversed(net.rounds) if reverse else net.rounds
    for round_ in rounds:
        for i, j in round_:
            array[i], array[j] = array[j], array[i]


def network_permutation(net: SwapNetwork) -> Permutation:
    """The permutation the network realises: where each starting position ends."""
    slots = list(range(net.n_positions))
    apply_network(slots, net)
    m = [0] * net.n_positions
    for pos, src in enumerate(slots):
        m[src] = pos
    return Permutation(m, check=False)


def emit_text(net: SwapNetwork) -> str:
    """Versioned plain-text rendering; parse_text inverts it exactly."""
    lines = [
        TEXT_FORMAT_LINE,
        "N=%d method=%s swaps=%d" % (net.n_positions, net.label, net.total_swaps),
    ]
    for r, round_ in enumerate(net.rounds):
        body = " ".join("(%d %d)" % (i, j) for i, j in round_)
        lines.append("round %d:%s" % (r, " " + body if body else ""))
    return "\n".join(lines) + "\n"


def parse_text(text: str) -> SwapNetwork:
    """Rebuild a SwapNetwork from its emit_text rendering."""
    lines = text.splitlines()
    if not lines or lines[0].strip() != TEXT_FORMAT_LINE:
        raise ValueError("missing format line %r" % TEXT_FORMAT_LINE)
    if len(lines) < 2:
        raise ValueError("missing header line")
    fields = dict(
        item.split("=", 1) for item in lines[1].split() if "=" in item
    )
    try:
        n_positions = int(fields["N"])
        label = fields["method"]
        declared = int(fields["swaps"])
    except (KeyError, ValueError) as exc:
        raise ValueError("malformed header %r" % lines[1]) from exc
    rounds = []
    for line in lines[2:]:
        line = line.strip()
        if not line:
            continue
        head, _, body = line.partition(":")
        if not head.startswith("round"):
            raise ValueError("unexpected line %r" % line)
        swaps = []
        tokens = body.split(")")
        for token in tokens:
            token = token.strip()
            if not token:
                continue
            if not token.startswith("("):
                raise ValueError("malformed swap %r" % token)
            i, j = token[1:].split()
            swaps.append((int(i), int(j)))
        rounds.append(tuple(swaps))
    net = _validate(SwapNetwork(n_positions, tuple(rounds), label))
    if net.total_swaps != declared:
        raise ValueError("header declares %d swaps, body has %d" % (declared, net.total_swaps))
    return net


def emit_dot(net: SwapNetwork) -> str:
    """Deterministic DOT rendering of the network.

    Each position is a horizontal rail of nodes p<pos>_r<round>, one
    column per round boundary.  Input labels sit on the right column,
    the ending position of each element on the left, and every swap is
    exactly one bold edge between its two rails; rails are dotted.
    """
    cols = len(net.rounds) + 1
    inv = [0] * net.n_positions
    for src, pos in enumerate(network_permutation(net).map):
        inv[pos] = src
    out = [
        'graph "%s" {' % net.label,
        "  rankdir=RL;",
        "  node [shape=plaintext, fontsize=10];",
    ]
    for c in range(cols):
        row = ["  { rank=same;"]
        for pos in range(net.n_positions):
            if c == 0:
                row.append(' p%d_r%d [label="%d"];' % (pos, c, pos))
            elif c == cols - 1:
                row.append(' p%d_r%d [label="%d"];' % (pos, c, inv[pos]))
            else:
                row.append(" p%d_r%d [shape=point];" % (pos, c))
        row.append(" }")
        out.append("".join(row))
    for pos in range(net.n_positions):
        for c in range(cols - 1):
            out.append("  p%d_r%d -- p%d_r%d [style=dotted];" % (pos, c, pos, c + 1))
    for r, round_ in enumerate(net.rounds):
        for i, j in round_:
            out.append("  p%d_r%d -- p%d_r%d [style=bold];" % (i, r, j, r))
    out.append("}")
    return "\n".join(out) + "\n"
