"""Kronecker coefficients of the symmetric group, computed exactly."""

from math import factorial

from .partitions import Partition, check_partition, partitions_of, z_order
from .characters import character


class ConsistencyError(ArithmeticError):
    """An internal exactness check failed; the result would be wrong."""


def kron(alpha: Partition, beta: Partition, gamma: Partition) -> int:
    """Multiplicity of the irreducible of shape ``gamma`` in the tensor
    product of the irreducibles of shapes ``alpha`` and ``beta``.

    Evaluated as the class-weighted sum of triple character products,
    entirely in integer arithmetic: each class of cycle type rho has
    ``n!/z(rho)`` elements, and the accumulated total must come out
    divisible by ``n!``.
    """
    alpha = check_partition(alpha)
    beta = check_partition(beta)
    gamma = check_partition(gamma)
    n = sum(alpha)
    if sum(beta) != n or sum(gamma) != n:
        raise ValueError("all three partitions must have the same size")
    nfact = factorial(n)
    # Evaluate the cheapest shape first inside each class so a zero
    # character value skips the other two evaluations.
    shapes = sorted((alpha, beta, gamma), key=len)
    total = 0
    for rho in partitions_of(n):
        prod = nfact // z_order(rho)
        for shape in shapes:
            c = character(shape, rho)
            if c == 0:
                prod = 0
                break
            prod *= c
        total += prod
    g, rem = divmod(total, nfact)
    if rem:
        raise ConsistencyError(
            f"class sum {total} not divisible by {n}! for {alpha}, {beta}, {gamma}"
        )
    if g < 0:
        raise ConsistencyError(
            f"negative multiplicity {g} for {alpha}, {beta}, {gamma}"
        )
    return g


def weak_stability_probe(
    alpha: Partition,
    beta: Partition,
    gamma: Partition,
    horizon: int,
) -> tuple[bool, int | None, int | None]:
    """Check ``kron(d*alpha, d*beta, d*gamma) == 1`` for ``d = 1..horizon``.

    Returns ``(True, None, None)`` if every probe equals 1, otherwise
    ``(False, d, value)`` for the first failing ``d``.  This is a finite
    probe, not a proof: passing every ``d`` up to the horizon does not
    certify weak stability.
    """
    if horizon < 1:
        raise ValueError("horizon must be positive")
    if sum(alpha) != sum(beta) or sum(alpha) != sum(gamma):
        raise ValueError("all three partitions must have the same size")
    scale = lambda lam, d: tuple(d * p for p in lam)
    for d in range(1, horizon + 1):
        g = kron(scale(alpha, d), scale(beta, d), scale(gamma, d))
        if g != 1:
            return False, d, g
    return True, None, None
