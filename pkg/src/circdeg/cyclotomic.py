"""Exact arithmetic in the ring of integers of a cyclotomic field.

Elements are stored by their coefficients on the power basis 1, z, ...,
z^(phi(n)-1) after reduction modulo the n-th cyclotomic polynomial, so two
equal algebraic numbers always have identical coefficient tuples.  The
adjacency eigenvalues of a circulant graph are sums of roots of unity and are
evaluated here exactly, which yields a splitting-field degree computed purely
from eigenvalue coefficients - an independent cross-check of the unit-group
degree formula that never looks at k*S = S.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache
from typing import Optional, Sequence

import numpy as np

from .circulant import ConnectionSet
from .numtheory import divisors, euler_phi
from .unitgroup import units

# Keeping reduced coefficients below this bound guarantees that the int64
# matrix products in the fast paths cannot overflow for n <= 2000.
_COEFF_BOUND = 1 << 40


@dataclass(frozen=True)
class IntPolynomial:
    """Dense integer polynomial; index = power, no trailing zeros."""

    coeffs: tuple[int, ...]

    @staticmethod
    def of(*coeffs: int) -> "IntPolynomial":
        return IntPolynomial(_trim(coeffs))

    def degree(self) -> int:
        """Degree of the leading term; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def __add__(self, other: "IntPolynomial") -> "IntPolynomial":
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        summed = list(a)
        for i, c in enumerate(b):
            summed[i] += c
        return IntPolynomial(_trim(summed))

    def __sub__(self, other: "IntPolynomial") -> "IntPolynomial":
        return self + IntPolynomial(tuple(-c for c in other.coeffs))

    def __mul__(self, other: "IntPolynomial") -> "IntPolynomial":
        if self.is_zero() or other.is_zero():
            return IntPolynomial(())
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, c in enumerate(self.coeffs):
            if c:
                for j, d in enumerate(other.coeffs):
                    out[i + j] += c * d
        return IntPolynomial(_trim(out))

    def __divmod__(self, other: "IntPolynomial") -> tuple["IntPolynomial", "IntPolynomial"]:
        """Quotient and remainder; the divisor must be monic."""
        if other.is_zero() or other.coeffs[-1] != 1:
            raise ValueError("division only by monic polynomials")
        rem = list(self.coeffs)
        dn = other.degree()
        quot = [0] * max(len(rem) - dn, 0)
        for i in range(len(rem) - dn - 1, -1, -1):
            q = rem[i + dn]
            if q:
                quot[i] = q
                for j, c in enumerate(other.coeffs):
                    rem[i + j] -= q * c
        return IntPolynomial(_trim(quot)), IntPolynomial(_trim(rem))


def _trim(coeffs: Sequence[int]) -> tuple[int, ...]:
    end = len(coeffs)
    while end > 0 and coeffs[end - 1] == 0:
        end -= 1
    return tuple(coeffs[:end])


@lru_cache(maxsize=None)
def cyclotomic_polynomial(n: int) -> IntPolynomial:
    """The n-th cyclotomic polynomial, by exact division of x^n - 1.

    Dividing out the cyclotomic polynomials of the proper divisors of n
    leaves a monic integer polynomial of degree phi(n).
    """
    if n < 1:
        raise ValueError(f"expected n >= 1, got {n}")
    poly = IntPolynomial.of(-1, *([0] * (n - 1)), 1)
    for d in divisors(n)[:-1]:
        poly, rem = divmod(poly, cyclotomic_polynomial(d))
        if not rem.is_zero():  # pragma: no cover
            raise AssertionError(f"x^{n} - 1 not divisible by divisor polynomials")
    return poly


@lru_cache(maxsize=None)
def _power_table(n: int) -> tuple[tuple[int, ...], ...]:
    """Row e holds the reduced coefficients of z^e, for e = 0..n-1."""
    phi = euler_phi(n)
    modulus = cyclotomic_polynomial(n).coeffs
    rows = []
    row = [0] * phi
    row[0] = 1
    for _ in range(n):
        rows.append(tuple(row))
        shifted = [0] + row[:-1]
        top = row[-1]
        if top:
            # x^phi = -(lower part of the cyclotomic polynomial)
            for i in range(phi):
                shifted[i] -= top * modulus[i]
        row = shifted
    return tuple(rows)


@lru_cache(maxsize=None)
def _power_matrix(n: int) -> np.ndarray:
    """The power table as an int64 matrix, with an overflow guard."""
    table = _power_table(n)
    peak = max((abs(c) for row in table for c in row), default=0)
    if peak >= _COEFF_BOUND:
        raise ArithmeticError(
            f"reduced power coefficients for n = {n} exceed the fast-path bound"
        )
    return np.array(table, dtype=np.int64)


@dataclass(frozen=True)
class CyclotomicInt:
    """An element of Z[z] for z a primitive n-th root of unity.

    coeffs has length exactly phi(n) and is the canonical reduced
    representation, so equality of values is equality of tuples.
    """

    n: int
    coeffs: tuple[int, ...]

    def __add__(self, other: "CyclotomicInt") -> "CyclotomicInt":
        _match(self, other)
        return CyclotomicInt(self.n, tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    def __sub__(self, other: "CyclotomicInt") -> "CyclotomicInt":
        _match(self, other)
        return CyclotomicInt(self.n, tuple(a - b for a, b in zip(self.coeffs, other.coeffs)))

    def __neg__(self) -> "CyclotomicInt":
        return CyclotomicInt(self.n, tuple(-a for a in self.coeffs))

    def __mul__(self, other: "CyclotomicInt") -> "CyclotomicInt":
        _match(self, other)
        phi = len(self.coeffs)
        conv = [0] * (2 * phi - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    conv[i + j] += a * b
        return CyclotomicInt(self.n, _reduce(self.n, conv))


def _match(a: CyclotomicInt, b: CyclotomicInt) -> None:
    if a.n != b.n:
        raise ValueError(f"conductors differ: {a.n} vs {b.n}")


def _reduce(n: int, coeffs: Sequence[int]) -> tuple[int, ...]:
    """Reduce a polynomial in z modulo the n-th cyclotomic polynomial."""
    phi = euler_phi(n)
    modulus = cyclotomic_polynomial(n).coeffs
    rem = list(coeffs)
    if len(rem) < phi:
        rem += [0] * (phi - len(rem))
    for top in range(len(rem) - 1, phi - 1, -1):
        q = rem[top]
        if q:
            rem[top] = 0
            # z^top = z^(top-phi) * z^phi with z^phi = -(lower part of modulus)
            for j in range(phi):
                rem[top - phi + j] -= q * modulus[j]
    return tuple(rem[:phi])


def integer(n: int, value: int) -> CyclotomicInt:
    """The rational integer `value` as an element of Z[z_n]."""
    return CyclotomicInt(n, (value,) + (0,) * (euler_phi(n) - 1))


def zeta_power(n: int, e: int) -> CyclotomicInt:
    """z_n^e, reduced to the power basis."""
    if n < 1:
        raise ValueError(f"expected n >= 1, got {n}")
    return CyclotomicInt(n, _power_table(n)[e % n])


def eigenvalue(symbol: ConnectionSet, j: int) -> CyclotomicInt:
    """The adjacency eigenvalue sum of z^(j*s) over s in S, exactly."""
    n = symbol.n
    if not 0 <= j < n:
        raise ValueError(f"eigenvalue index {j} out of range for modulus {n}")
    table = _power_table(n)
    phi = euler_phi(n)
    acc = [0] * phi
    for s in symbol.elements:
        row = table[j * s % n]
        for i in range(phi):
            acc[i] += row[i]
    return CyclotomicInt(n, tuple(acc))


def galois_apply(k: int, x: CyclotomicInt) -> CyclotomicInt:
    """Image of x under the field automorphism sending z to z^k.

    Applied by remapping each basis exponent e to k*e mod n and re-reducing;
    requires k to be a unit mod n.
    """
    n = x.n
    if math.gcd(k, n) != 1:
        raise ValueError(f"{k} is not a unit mod {n}")
    table = _power_table(n)
    phi = len(x.coeffs)
    acc = [0] * phi
    for e, c in enumerate(x.coeffs):
        if c:
            row = table[k * e % n]
            for i in range(phi):
                acc[i] += c * row[i]
    return CyclotomicInt(n, tuple(acc))


def is_rational_integer(x: CyclotomicInt) -> Optional[int]:
    """The integer value of x if it lies in Z, else None."""
    if any(c != 0 for c in x.coeffs[1:]):
        return None
    return x.coeffs[0]


def eigenvalue_matrix(symbol: ConnectionSet) -> np.ndarray:
    """Reduced coefficients of every eigenvalue, row j = eigenvalue j."""
    n = symbol.n
    power = _power_matrix(n)
    phi = power.shape[1]
    out = np.zeros((n, phi), dtype=np.int64)
    if symbol.elements:
        j_idx = np.arange(n, dtype=np.int64)
        for s in symbol.elements:
            out += power[(j_idx * s) % n]
    return out


def splitting_field_degree(symbol: ConnectionSet) -> int:
    """Degree over Q of the field generated by all eigenvalues.

    Counts the units k whose automorphism fixes every eigenvalue and returns
    phi(n) divided by that count.  The automorphism z -> z^k remaps the
    exponent support {j*s} of eigenvalue j onto {k*j*s}, so its image, after
    reduction, is exactly the reduced row of eigenvalue k*j; the fixer test
    therefore compares reduced coefficient rows under index remapping, and
    never inspects k*S = S.  The value must agree with algebraic_degree(S);
    any disagreement is a bug in one of the two routes and is surfaced by
    the verification suite, never reconciled here.
    """
    n = symbol.n
    lam = eigenvalue_matrix(symbol)
    phi = lam.shape[1]
    # Intern equal rows so fixing every eigenvalue is an id comparison.
    _, row_id = np.unique(lam, axis=0, return_inverse=True)
    j_idx = np.arange(n, dtype=np.int64)
    fixers = 0
    for k in units(n):
        if np.array_equal(row_id[(k * j_idx) % n], row_id):
            fixers += 1
    if phi % fixers != 0:  # pragma: no cover
        raise AssertionError("eigenvalue fixers do not form a subgroup")
    return phi // fixers
