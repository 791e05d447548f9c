"""Permutations, involutions, and their in-place application.

A permutation of N positions is stored as a full index map: ``map[i]`` is
the position that the element currently sitting at position ``i`` moves
to.  An involution is a self-inverse permutation, i.e. a disjoint set of
transpositions plus fixed points.  Applying an involution's
transpositions as element swaps realises it in one round of independent
exchanges, which is what makes involutions interesting here: any
permutation factors into two of them, so any rearrangement can be done
in exactly two rounds of swaps.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence


def _check_index_map(map_: tuple[int, ...]) -> None:
    n = len(map_)
    seen = bytearray(n)
    for v in map_:
        if not isinstance(v, int) or not 0 <= v < n or seen[v]:
            raise ValueError("map is not a bijection of 0..%d" % (n - 1))
        seen[v] = 1


class Permutation:
    """A bijection of {0, ..., N-1} held as a full destination map."""

    def __init__(self, map_: Iterable[int], check: bool = True):
        self.map = tuple(map_)
        if check:
            _check_index_map(self.map)

    @property
    def size(self) -> int:
        return len(self.map)

    def __len__(self) -> int:
        return len(self.map)

    def __getitem__(self, i: int) -> int:
        return self.map[i]

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Permutation) and self.map == other.map

    def __hash__(self) -> int:
        return hash(self.map)

    def __repr__(self) -> str:
        return "%s(%r)" % (type(self).__name__, list(self.map))


class Involution(Permutation):
    """A self-inverse permutation.

    The transposition and fixed-point views are derived from the map on
    first use, so the map stays the single source of truth.
    """

    def __init__(self, map_: Iterable[int], check: bool = True):
        super().__init__(map_, check=check)
        if check and not is_involution(self):
            raise ValueError("map is not self-inverse")
        self._transpositions: tuple[tuple[int, int], ...] | None = None

    @classmethod
    def from_pairs(cls, n: int, pairs: Iterable[tuple[int, int]]) -> "Involution":
        """Build the involution with the given transpositions on n points."""
        m = list(range(n))
        for i, j in pairs:
            if m[i] != i or m[j] != j:
                raise ValueError("position reused by pair (%d %d)" % (i, j))
            m[i], m[j] = j, i
        return cls(m, check=False)

    @property
    def transpositions(self) -> tuple[tuple[int, int], ...]:
        """Swapped pairs (i, j) with i < j, in increasing order of i."""
        if self._transpositions is None:
            self._transpositions = tuple(
                (i, v) for i, v in enumerate(self.map) if i < v
            )
        return self._transpositions

    @property
    def fixed_points(self) -> tuple[int, ...]:
        return tuple(i for i, v in enumerate(self.map) if i == v)


@dataclass(frozen=True)
class CycleDecomposition:
    """Disjoint cycles covering 0..N-1; each cycle starts at its minimum."""

    cycles: tuple[tuple[int, ...], ...]

    def __iter__(self):
        return iter(self.cycles)


def identity(n: int) -> Permutation:
    return Permutation(range(n), check=False)


def compose(p: Permutation, q: Permutation) -> Permutation:
    """p after q: the result sends i to p.map[q.map[i]]."""
    if p.size != q.size:
        raise ValueError("size mismatch: %d vs %d" % (p.size, q.size))
    pm = p.map
    return Permutation([pm[v] for v in q.map], check=False)


def inverse(p: Permutation) -> Permutation:
    m = [0] * p.size
    for i, v in enumerate(p.map):
        m[v] = i
    return Permutation(m, check=False)


def cycle_decompose(p: Permutation) -> CycleDecomposition:
    """Disjoint cycles of p, each listed from its smallest element.

    Cycles appear in increasing order of that smallest element and are
    traversed in application order, so cycle[(t+1) % L] = p.map[cycle[t]].
    """
    seen = bytearray(p.size)
    cycles = []
    for start in range(p.size):
        if seen[start]:
            continue
        cycle = [start]
        seen[start] = 1
        x = p.map[start]
        while x != start:
            cycle.append(x)
            seen[x] = 1
            x = p.map[x]
        cycles.append(tuple(cycle))
    return CycleDecomposition(tuple(cycles))


def permutation_from_cycles(n: int, cycles: Iterable[Sequence[int]]) -> Permutation:
    """Rebuild a permutation of n points from disjoint cycles."""
    m = list(range(n))
    for cycle in cycles:
        for a, b in zip(cycle, tuple(cycle[1:]) + (cycle[0],)):
            if m[a] != a:
                raise ValueError("cycles are not disjoint at %d" % a)
            m[a] = b
    return Permutation(m)


def is_involution(p: Permutation) -> bool:
    m = p.map
    return all(m[v] == i for i, v in enumerate(m))


def apply_involution_in_place(array, inv: Involution) -> None:
    """Realise inv on array by swapping each transposed pair once."""
    if len(array) != inv.size:
        raise ValueError("array length %d != involution size %d" % (len(array), inv.size))
    for i, j in inv.transpositions:
        array[i], array[j] = array[j], array[i]


def apply_pair_in_place(array, s: Involution, t: Involution) -> None:
    """Apply t then s, realising the product permutation compose(s, t).

    The element starting at position x ends at s.map[t.map[x]].
    """
    if s.size != t.size:
        raise ValueError("involution sizes differ")
    apply_involution_in_place(array, t)
    apply_involution_in_place(array, s)


def cycle_notation(p: Permutation) -> str:
    """Cycle string like ``(0)(1 12)(2 11)``; the identity prints ``()``."""
    decomp = cycle_decompose(p)
    if all(len(c) == 1 for c in decomp.cycles):
        return "()"
    return "".join("(%s)" % " ".join(str(x) for x in c) for c in decomp.cycles)


def parse_cycle_notation(text: str, n: int) -> Permutation:
    """Inverse of cycle_notation for permutations of n points."""
    text = text.strip()
    if text == "()":
        return identity(n)
    if not text.startswith("(") or not text.endswith(")"):
        raise ValueError("malformed cycle string: %r" % text)
    cycles = []
    for part in text[1:-1].split(")("):
        if not part.strip():
            raise ValueError("empty cycle in %r" % text)
        cycles.append([int(tok) for tok in part.replace(",", " ").split()])
    return permutation_from_cycles(n, cycles)
