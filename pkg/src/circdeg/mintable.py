"""Minimal orders of degree-d circulant graphs and the C(d) versus p_d table.

For d > 1 the minimal order C(d) is the least n with 2d dividing phi(n),
found by an ascending scan (the scan is bounded because the smallest prime
p = 1 mod 2d always qualifies).  C(1) = 1: the one-vertex graph is already
integral.  Each table row carries a verified witness graph of degree exactly
d on C(d) vertices.
"""

from __future__ import annotations

from dataclasses import dataclass

from .circulant import (
    ConnectionSet,
    algebraic_degree,
    regular_construction,
)
from .numtheory import euler_phi, smallest_prime_1_mod_2d
from .unitgroup import ConstructionError


@dataclass(frozen=True)
class TableRow:
    """One row of the minimal-order table.

    strict flags C(d) < p_d, i.e. the minimal order beats the prime bound.
    """

    d: int
    c_of_d: int
    p_d: int
    strict: bool
    witness: ConnectionSet


def min_order_for_degree(d: int) -> int:
    """C(d): the least order carrying a circulant graph of algebraic degree d.

    Hard-coded to 1 for d = 1 (the one-vertex graph); otherwise the least n
    with 2d | phi(n).
    """
    if d < 1:
        raise ValueError(f"expected d >= 1, got {d}")
    if d == 1:
        return 1
    n = 2
    while euler_phi(n) % (2 * d) != 0:
        n += 1
    return n


def _row(d: int) -> TableRow:
    c = min_order_for_degree(d)
    p = smallest_prime_1_mod_2d(d)
    if c > p:  # pragma: no cover
        raise ConstructionError(f"C({d}) = {c} exceeds the prime bound {p}")
    if d == 1:
        witness = ConnectionSet(1, ())
    else:
        witness = regular_construction(c, d)
    if algebraic_degree(witness) != d:  # pragma: no cover
        raise ConstructionError(f"table witness for d = {d} has the wrong degree")
    return TableRow(d, c, p, c < p, witness)


def degree_table(d_max: int) -> tuple[TableRow, ...]:
    """Rows for d = 1..d_max, each with a verified minimal-order witness."""
    if d_max < 1:
        raise ValueError(f"expected d_max >= 1, got {d_max}")
    return tuple(_row(d) for d in range(1, d_max + 1))


def strict_rows(d_max: int) -> tuple[int, ...]:
    """All degrees up to d_max where the minimal order beats the prime bound."""
    return tuple(
        d
        for d in range(1, d_max + 1)
        if min_order_for_degree(d) < smallest_prime_1_mod_2d(d)
    )
