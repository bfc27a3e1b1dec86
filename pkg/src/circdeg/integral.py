"""Integral circulant graphs and their divisor-set symbols.

A circulant graph has an all-integer spectrum exactly when its connection set
is a union of the basic sets {x : gcd(x, n) = d} over proper divisors d of n.
Distinct divisor sets give non-isomorphic graphs, so counting connected
integral circulant graphs of order n is counting divisor subsets with
connected realization; the closed form here does that with a Mobius sum over
divisors and is cross-checked by plain enumeration.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .circulant import ConnectionSet, is_connected, make_connection_set
from .numtheory import divisors, lcm_of_set, mobius, tau


@dataclass(frozen=True)
class IntegralSymbol:
    """A set of proper divisors of n, naming a union of basic symbols."""

    n: int
    divisor_set: frozenset[int]

    def encode(self) -> str:
        """Text form `n|d1,d2,...` with ascending divisors."""
        return f"{self.n}|" + ",".join(str(d) for d in sorted(self.divisor_set))


def make_integral_symbol(n: int, divisor_set) -> IntegralSymbol:
    divs = frozenset(divisor_set)
    for d in divs:
        if d < 1 or n % d != 0 or d == n:
            raise ValueError(f"{d} is not a proper divisor of {n}")
    return IntegralSymbol(n, divs)


def parse_integral_symbol(text: str) -> IntegralSymbol:
    """Parse the `n|d1,d2,...` encoding (empty divisor list allowed)."""
    head, sep, tail = text.partition("|")
    if not sep:
        raise ValueError(f"expected 'n|d1,d2,...', got {text!r}")
    try:
        n = int(head)
        divs = [int(part) for part in tail.split(",") if part != ""]
    except ValueError as exc:
        raise ValueError(f"malformed integral symbol {text!r}") from exc
    return make_integral_symbol(n, divs)


def basic_symbol(n: int, d: int) -> tuple[int, ...]:
    """All residues with gcd exactly d against n; needs d | n, d != n."""
    if d < 1 or n % d != 0 or d == n:
        raise ValueError(f"{d} is not a proper divisor of {n}")
    return tuple(x for x in range(1, n) if math.gcd(x, n) == d)


def realize(symbol: IntegralSymbol) -> ConnectionSet:
    """The connection set named by the divisor set (inverse-symmetric by gcd)."""
    elems: set[int] = set()
    for d in symbol.divisor_set:
        elems.update(basic_symbol(symbol.n, d))
    return make_connection_set(symbol.n, elems)


def as_integral_symbol(symbol: ConnectionSet) -> IntegralSymbol | None:
    """The divisor set realizing S, or None when S is not a union of basic sets."""
    n = symbol.n
    divisor_set = frozenset(math.gcd(s, n) for s in symbol.elements)
    candidate = IntegralSymbol(n, divisor_set)
    if realize(candidate).elements == symbol.elements:
        return candidate
    return None


def to_connected_symbol(symbol: IntegralSymbol) -> tuple[int, IntegralSymbol]:
    """Map a symbol of order n to the connected symbol it contracts to.

    The image lives at order lcm(n/D) and has divisor set {order/a} for
    a in n/D; the empty symbol contracts to the empty symbol on one vertex.
    This map is a bijection from all symbols of order n onto the connected
    symbols over the divisors of n.
    """
    if not symbol.divisor_set:
        return 1, IntegralSymbol(1, frozenset())
    quotients = {symbol.n // d for d in symbol.divisor_set}
    order = lcm_of_set(quotients)
    return order, IntegralSymbol(order, frozenset(order // a for a in quotients))


def count_connected_integral(n: int) -> int:
    """Number of connected integral circulant graphs of order n, up to isomorphism.

    Closed form: half the Mobius-weighted sum of 2^tau(n/d) over d | n.
    """
    if n < 1:
        raise ValueError(f"expected n >= 1, got {n}")
    total = sum(mobius(d) * 2 ** tau(n // d) for d in divisors(n))
    if total % 2 != 0:  # pragma: no cover
        raise AssertionError(f"divisor sum for n = {n} is odd; counting bug")
    return total // 2


_ENUMERATION_TAU_BOUND = 24


def count_connected_integral_bruteforce(n: int) -> int:
    """The same count by enumerating every divisor subset directly.

    Realizes each of the 2^(tau(n)-1) symbols and tests connectivity;
    independent of the closed form.  Refuses n with more than 2^23 symbols.
    """
    if n < 1:
        raise ValueError(f"expected n >= 1, got {n}")
    if tau(n) > _ENUMERATION_TAU_BOUND:
        raise ValueError(f"n = {n} has too many divisors to enumerate")
    proper = divisors(n)[:-1]
    basics = {d: basic_symbol(n, d) for d in proper}
    count = 0
    for mask in range(2 ** len(proper)):
        elems: set[int] = set()
        for i, d in enumerate(proper):
            if mask >> i & 1:
                elems.update(basics[d])
        if is_connected(ConnectionSet(n, tuple(sorted(elems)))):
            count += 1
    return count
