"""Number-theoretic construction of the in-place k-way in-shuffle.

Take any N = k*M and let m = N - 1.  The interior positions 1..N-2 live
in Z_m, and for r coprime to m the map

    J_r(x) = g * ((r * (x/g)^-1) mod (m/g)),   g = gcd(x, m),  J_r(0) = 0

is an involution of Z_m that preserves gcd(., m).  Chaining two of them
gives J_k(J_1(x)) = k*x mod m, the in-shuffle, so two rounds of swaps
(first along J_1, then along J_k) shuffle any multiple-of-k length with
no digit structure required.

All index arithmetic runs through one extended-Euclid routine so that an
OpCounter can record exactly how much number-theoretic work a shuffle
costs.
"""

from __future__ import annotations

import math
from dataclasses import dataclass


@dataclass
class OpCounter:
    """Mutable tally of the arithmetic a shuffle performs."""

    euclid_iterations: int = 0
    gcd_calls: int = 0
    swaps: int = 0


@dataclass(frozen=True)
class ModContext:
    """Modulus bundle for a k-way shuffle of N = k*M elements."""

    k: int
    M: int
    N: int
    m: int

    @classmethod
    def for_shuffle(cls, N: int, k: int) -> "ModContext":
        if k < 2:
            raise ValueError("k must be at least 2")
        if N < k or N % k:
            raise ValueError("N=%d is not a positive multiple of k=%d" % (N, k))
        return cls(k, N // k, N, N - 1)


def ext_gcd(a: int, b: int, counter: OpCounter | None = None) -> tuple[int, int, int]:
    """Extended Euclid: (g, u, v) with a*u + b*v = g = gcd(a, b).

    Counts one gcd call and one iteration per quotient step.
    """
    if a < 0 or b < 0:
        raise ValueError("inputs must be non-negative")
    if a == 0 and b == 0:
        raise ValueError("gcd(0, 0) is undefined")
    r0, r1 = a, b
    s0, s1 = 1, 0
    t0, t1 = 0, 1
    steps = 0
    while r1:
        q = r0 // r1
        r0, r1 = r1, r0 - q * r1
        s0, s1 = s1, s0 - q * s1
        t0, t1 = t1, t0 - q * t1
        steps += 1
    if counter is not None:
        counter.gcd_calls += 1
        counter.euclid_iterations += steps
    return r0, s0, t0


def mod_inverse(a: int, m: int, counter: OpCounter | None = None) -> int:
    """The inverse of a modulo m, in 0..m-1.  mod_inverse(anything, 1) is 0."""
    if m < 1:
        raise ValueError("modulus must be positive")
    if m == 1:
        return 0
    g, u, _ = ext_gcd(a % m, m, counter)
    if g != 1:
        raise ValueError("%d is not invertible modulo %d" % (a, m))
    return u % m


def _j_value(r: int, x: int, m: int, counter: OpCounter | None) -> int:
    # Callers guarantee gcd(r, m) == 1 and 0 <= x < m.
    if x == 0:
        return 0
    g, u, _ = ext_gcd(x, m, counter)
    if g == 1:
        return (r * u) % m
    mg = m // g
    _, u2, _ = ext_gcd(x // g, mg, counter)
    return g * ((r * u2) % mg)


def j_map(r: int, x: int, ctx: ModContext, counter: OpCounter | None = None) -> int:
    """The involution J_r on Z_m: x maps to gcd(x,m) * ((r * (x/g)^-1) mod (m/g)).

    Fixes 0; preserves gcd(., m); is its own inverse whenever gcd(r, m) = 1.
    """
    if math.gcd(r, ctx.m) != 1:
        raise ValueError("r=%d shares a factor with m=%d" % (r, ctx.m))
    if not 0 <= x < ctx.m:
        raise ValueError("x=%d outside 0..%d" % (x, ctx.m - 1))
    return _j_value(r, x, ctx.m, counter)


def compose_j(r: int, s: int, x: int, ctx: ModContext, counter: OpCounter | None = None) -> int:
    """J_r(J_s(x)); for (r, s) = (k, 1) this is the in-shuffle map k*x mod m."""
    return j_map(r, j_map(s, x, ctx, counter), ctx, counter)


def shuffle_modinv(array, k: int, counter: OpCounter | None = None) -> None:
    """In-place k-way in-shuffle of any N = k*M elements.

    Two rounds of independent swaps: positions pair along J_1, then along
    J_k.  Positions 0 and N-1 are never touched.
    """
    N = len(array)
    if N == 0:
        return
    ctx = ModContext.for_shuffle(N, k)
    m = ctx.m
    for r in (1, k):
        # gcd(k, k*M - 1) = 1, so both rounds use valid involutions.
        for x in range(1, m):
            j = _j_value(r, x, m, counter)
            if x < j:
                array[x], array[j] = array[j], array[x]
                if counter is not None:
                    counter.swaps += 1


def swap_count_modinv(N: int, k: int, counter: OpCounter | None = None) -> int:
    """Swaps the two rounds of shuffle_modinv would perform, no data moved."""
    ctx = ModContext.for_shuffle(N, k)
    m = ctx.m
    total = 0
    for r in (1, k):
        for x in range(1, m):
            if x < _j_value(r, x, m, counter):
                total += 1
    if counter is not None:
        counter.swaps += total
    return total


def op_count_profile(m_values, k: int) -> list[tuple[int, int, int, int]]:
    """Index-arithmetic cost per shuffle size, with no data movement.

    Returns one row (N, euclid_iterations, gcd_calls, swaps) per M in
    m_values, covering both swap rounds.
    """
    rows = []
    for M in m_values:
        counter = OpCounter()
        swap_count_modinv(k * M, k, counter)
        rows.append((k * M, counter.euclid_iterations, counter.gcd_calls, counter.swaps))
    return rows
