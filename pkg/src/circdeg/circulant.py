"""Connection sets of circulant graphs and their algebraic degree.

A circulant graph on n vertices joins i and j when (i - j) mod n lies in an
inverse-symmetric set S of nonzero residues.  The units fixing S setwise form
a subgroup whose index in the full unit group is the degree over Q of the
splitting field of the graph's characteristic polynomial.  This module
computes that fixing subgroup by direct scan and builds the two explicit
constructions that realize any prescribed degree: the subgroup construction
on an arbitrary admissible order, and the power construction on the smallest
prime 1 mod 2d.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Optional

from .numtheory import euler_phi, smallest_prime_1_mod_2d
from .unitgroup import (
    ConstructionError,
    Subgroup,
    inverse_symmetric_subgroup,
    primitive_root,
    units,
)


@dataclass(frozen=True)
class ConnectionSet:
    """An inverse-symmetric set of nonzero residues mod n, sorted.

    Build through make_connection_set, which validates; the empty set is a
    valid symbol (the graph with no edges).
    """

    n: int
    elements: tuple[int, ...]

    def encode(self) -> str:
        """Text form `n:s1,s2,...` with ascending residues."""
        return f"{self.n}:" + ",".join(str(s) for s in self.elements)

    def valency(self) -> int:
        return len(self.elements)


def make_connection_set(n: int, raw: Iterable[int]) -> ConnectionSet:
    """Validate and normalize a connection set.

    Rejects 0, out-of-range residues, and sets that are not closed under
    s -> n - s.
    """
    if n < 1:
        raise ValueError(f"modulus must be positive, got {n}")
    elems = sorted(set(raw))
    for s in elems:
        if s == 0:
            raise ValueError("0 is not allowed in a connection set")
        if not 1 <= s <= n - 1:
            raise ValueError(f"residue {s} out of range for modulus {n}")
    present = set(elems)
    for s in elems:
        if (n - s) % n not in present:
            raise ValueError(f"missing inverse {(n - s) % n} of {s} mod {n}")
    return ConnectionSet(n, tuple(elems))


def parse_connection_set(text: str) -> ConnectionSet:
    """Parse the `n:s1,s2,...` encoding (empty element list allowed)."""
    head, sep, tail = text.partition(":")
    if not sep:
        raise ValueError(f"expected 'n:s1,s2,...', got {text!r}")
    try:
        n = int(head)
        elems = [int(part) for part in tail.split(",") if part != ""]
    except ValueError as exc:
        raise ValueError(f"malformed connection set {text!r}") from exc
    return make_connection_set(n, elems)


def fixing_subgroup(symbol: ConnectionSet) -> Subgroup:
    """All units k with k*S = S setwise; the whole unit group for empty S."""
    n = symbol.n
    s_set = set(symbol.elements)
    fixers = [
        k for k in units(n) if {k * s % n for s in s_set} == s_set
    ]
    return Subgroup(n, tuple(fixers))


def algebraic_degree(symbol: ConnectionSet) -> int:
    """Degree over Q of the splitting field: phi(n) / |fixing subgroup|.

    Degree 1 means every eigenvalue is a rational integer.  For n <= 2 and
    for the empty symbol the characteristic polynomial splits over Q already,
    so the degree is 1.
    """
    return euler_phi(symbol.n) // len(fixing_subgroup(symbol))


def is_connected(symbol: ConnectionSet) -> bool:
    """True iff S generates all residues, i.e. gcd(S, n) = 1.

    The empty symbol is connected only on a single vertex.
    """
    if not symbol.elements:
        return symbol.n == 1
    return math.gcd(symbol.n, math.gcd(*symbol.elements)) == 1


def coset_union(n: int, subgroup: Subgroup, reps: Iterable[int]) -> ConnectionSet:
    """The union of the cosets rep * H as a connection set.

    H must contain -1 (which makes any union of its cosets inverse-symmetric)
    and every representative must be a unit.
    """
    if subgroup.n != n:
        raise ValueError(f"subgroup modulus {subgroup.n} does not match {n}")
    if n >= 3 and (n - 1) not in set(subgroup.elements):
        raise ValueError("subgroup does not contain -1; unions need not be symmetric")
    out: set[int] = set()
    for rep in reps:
        if math.gcd(rep, n) != 1:
            raise ValueError(f"coset representative {rep} is not a unit mod {n}")
        out.update(rep * h % n for h in subgroup.elements)
    return make_connection_set(n, out)


def multiplier_image(symbol: ConnectionSet, m: int) -> ConnectionSet:
    """The connection set m*S for a unit m; defines an isomorphic graph."""
    n = symbol.n
    if math.gcd(m, n) != 1:
        raise ValueError(f"{m} is not a unit mod {n}")
    return ConnectionSet(n, tuple(sorted(m * s % n for s in symbol.elements)))


def multiplier_isomorphic(
    first: ConnectionSet, second: ConnectionSet
) -> Optional[int]:
    """Smallest unit m with first = m * second, or None if there is none.

    A returned m certifies isomorphism of the graphs.  None certifies
    non-isomorphism only when gcd(n, phi(n)) = 1 (in particular for prime n).
    """
    if first.n != second.n:
        raise ValueError(f"moduli differ: {first.n} vs {second.n}")
    if len(first.elements) != len(second.elements):
        return None
    n = first.n
    target = set(first.elements)
    for m in units(n):
        if {m * s % n for s in second.elements} == target:
            return m
    return None


def minimal_prime_construction(d: int) -> tuple[int, ConnectionSet]:
    """A degree-d circulant graph on the smallest prime p = 1 (mod 2d).

    The connection set is the subgroup of d-th power residues mod p (the
    powers of r^d for a primitive root r); it has (p-1)/d elements and its
    fixing subgroup is itself, giving degree exactly d.
    """
    if d < 1:
        raise ValueError(f"expected d >= 1, got {d}")
    p = smallest_prime_1_mod_2d(d)
    r = primitive_root(p)
    step = pow(r, d, p)
    elems = []
    x = 1
    for _ in range((p - 1) // d):
        elems.append(x)
        x = x * step % p
    symbol = make_connection_set(p, elems)
    if algebraic_degree(symbol) != d:
        raise ConstructionError(f"prime construction for degree {d} failed")
    return p, symbol


def regular_construction(n: int, d: int) -> ConnectionSet:
    """A phi(n)/d-regular circulant graph on n vertices with degree exactly d.

    Takes an inverse-symmetric subgroup of order phi(n)/d as the connection
    set; requires d to divide phi(n)/2.
    """
    if n < 3:
        raise ValueError(f"need n >= 3, got {n}")
    phi = euler_phi(n)
    if d < 1 or (phi // 2) % d != 0:
        raise ValueError(f"{d} does not divide phi({n})/2 = {phi // 2}")
    subgroup = inverse_symmetric_subgroup(n, phi // d)
    symbol = make_connection_set(n, subgroup.elements)
    if algebraic_degree(symbol) != d:
        raise ConstructionError(f"subgroup construction ({n}, {d}) failed")
    return symbol
