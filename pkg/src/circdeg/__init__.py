"""Exact arithmetic for the algebraic degree of circulant graphs.

A circulant graph on n vertices is determined by an inverse-symmetric
connection set S of nonzero residues mod n.  Its adjacency eigenvalues live
in the cyclotomic field Q(zeta_n), and the degree of their splitting field
over Q equals phi(n) divided by the order of the subgroup of units fixing S.
This package computes that degree two independent ways (unit-group scan and
exact cyclotomic eigenvalues), enumerates and counts isomorphism classes of
connected graphs of a given degree, and reproduces the minimal-order table
C(d) for degrees up to 100.
"""

__version__ = "0.1.0"

from .numtheory import (
    Factorization,
    divisors,
    euler_phi,
    factorize,
    gcd_of_set,
    is_prime,
    lcm_of_set,
    mobius,
    omega,
    sigma,
    smallest_prime_1_mod_2d,
    tau,
)
from .unitgroup import (
    ConstructionError,
    Subgroup,
    UnitGroup,
    cosets,
    element_order,
    inverse_symmetric_subgroup,
    is_subgroup,
    primitive_root,
    subgroup_of_order,
    unique_subgroup_mod_prime,
    unit_group,
    units,
)
from .circulant import (
    ConnectionSet,
    algebraic_degree,
    coset_union,
    fixing_subgroup,
    is_connected,
    make_connection_set,
    minimal_prime_construction,
    multiplier_image,
    multiplier_isomorphic,
    parse_connection_set,
    regular_construction,
)
from .cyclotomic import (
    CyclotomicInt,
    IntPolynomial,
    cyclotomic_polynomial,
    eigenvalue,
    galois_apply,
    is_rational_integer,
    splitting_field_degree,
    zeta_power,
)
from .integral import (
    IntegralSymbol,
    as_integral_symbol,
    basic_symbol,
    count_connected_integral,
    count_connected_integral_bruteforce,
    make_integral_symbol,
    parse_integral_symbol,
    realize,
    to_connected_symbol,
)
from .census import (
    CensusRecord,
    admits_degree,
    canonical_form,
    exact_count_prime_degree,
    lower_bound,
    naive_census,
    power_sum_nonvanishing,
    prime_census,
    prime_order_upper_bound,
    rotation_orbit_count,
    witness_family,
)
from .mintable import (
    TableRow,
    degree_table,
    min_order_for_degree,
    strict_rows,
)
