"""Factorization series for the symmetric group S_n.

Three routes live here:

* ``frobenius_series_sn`` — all transposition factorizations of a fixed
  cycle type, from the character sum (1/n!) * Sum_shapes dim * character *
  X**content_sum; the content sum is exactly the normalized character of the
  transposition class sum.
* ``full_series_sn`` — factorizations whose factors generate all of S_n
  (equivalently act transitively), by subtracting, over every proper
  grouping of the cycles into blocks, the product of the blocks' full
  series.
* ``dyz_identity_series`` — an independent convolution recurrence for the
  identity's full series, used as a cross-check of the first two routes.
"""

from __future__ import annotations

from fractions import Fraction
from functools import cache
from math import comb, factorial

from .errors import CapabilityError
from .laurent import LaurentPoly
from .partitions import (
    content_sum,
    cycle_type,
    hook_dimension,
    integer_partitions,
    mn_character,
    set_partitions,
)

__all__ = [
    "frobenius_series_sn",
    "full_series_sn",
    "full_series_sn_type",
    "dyz_identity_series",
    "FROBENIUS_GUARD",
    "FULL_GUARD",
]

FROBENIUS_GUARD = 9
FULL_GUARD = 7


def _check_type(n: int, mu) -> tuple[int, ...]:
    parts = tuple(sorted((int(x) for x in mu), reverse=True))
    if sum(parts) != n or any(x < 1 for x in parts):
        raise ValueError(f"{mu} is not a cycle type of size {n}")
    return parts


@cache
def _frobenius(parts: tuple[int, ...]) -> LaurentPoly:
    n = sum(parts)
    acc = LaurentPoly.zero()
    for shape in integer_partitions(n):
        value = hook_dimension(shape) * mn_character(shape, parts)
        if value:
            acc = acc + LaurentPoly.monomial(content_sum(shape), value)
    return acc.scale(Fraction(1, factorial(n)))


def frobenius_series_sn(n: int, mu) -> LaurentPoly:
    """Series counting all length-N transposition factorizations by cycle type.

    The count of sequences (t_1, ..., t_N) of transpositions whose product is
    a fixed permutation of cycle type ``mu`` is the coefficient of z**N/N!.
    """
    if not 1 <= n <= FROBENIUS_GUARD:
        raise CapabilityError(
            f"frobenius_series_sn is guarded at 1 <= n <= {FROBENIUS_GUARD}; got {n}"
        )
    return _frobenius(_check_type(n, mu))


@cache
def _full_type(parts: tuple[int, ...]) -> LaurentPoly:
    k = len(parts)
    total = _frobenius(parts)
    if k == 1:
        return total
    # Subtract factorizations whose factors only ever connect cycles within
    # the blocks of some proper grouping; the exponential-series product
    # accounts for interleaving the factors of independent blocks.
    for grouping in set_partitions(k):
        if len(grouping) < 2:
            continue
        prod = LaurentPoly.one()
        for block in grouping:
            block_type = tuple(sorted((parts[i - 1] for i in block), reverse=True))
            prod = prod * _full_type(block_type)
        total = total - prod
    return total


def full_series_sn_type(mu) -> LaurentPoly:
    """Full-factorization series for any permutation of cycle type ``mu``."""
    parts = tuple(sorted((int(x) for x in mu), reverse=True))
    n = sum(parts)
    if not 1 <= n <= FULL_GUARD:
        raise CapabilityError(
            f"full series is guarded at 1 <= n <= {FULL_GUARD}; got n = {n}"
        )
    return _full_type(parts)


def full_series_sn(n: int, perm: tuple[int, ...]) -> LaurentPoly:
    """Full-factorization series of a permutation (1-based image table)."""
    if len(perm) != n:
        raise ValueError(f"permutation length {len(perm)} != n = {n}")
    return full_series_sn_type(cycle_type(tuple(perm)))


@cache
def dyz_identity_series(n: int) -> LaurentPoly:
    """Full series of the identity through the convolution recurrence.

    Seeded with the trivial series at n = 1; for n >= 2,
    n^2 (n-1) F_n = Sum_{k=1}^{n-1} k (n-k)^2 C(n,k) (X^k - 2 + X^-k) F_k F_{n-k}.
    """
    if n < 1:
        raise ValueError("n must be positive")
    if n == 1:
        return LaurentPoly.one()
    acc = LaurentPoly.zero()
    for k in range(1, n):
        kernel = (
            LaurentPoly.monomial(k)
            + LaurentPoly.monomial(0, -2)
            + LaurentPoly.monomial(-k)
        )
        term = kernel * dyz_identity_series(k) * dyz_identity_series(n - k)
        acc = acc + term.scale(k * (n - k) ** 2 * comb(n, k))
    return acc.scale(Fraction(1, n * n * (n - 1)))
