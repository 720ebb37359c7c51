"""Symmetric group character values by the Murnaghan-Nakayama rule."""

from collections import defaultdict

from .partitions import Partition, partitions_of, z_order  # noqa: F401

# Memo tables keyed by degree (size of the remaining shape) so memory can
# be reclaimed degree by degree between large runs.
_memo: dict[int, dict[tuple[Partition, Partition], int]] = defaultdict(dict)


def _beta_set(lam: Partition) -> tuple[int, ...]:
    """First-column hook lengths (beta-numbers) of ``lam``."""
    l = len(lam)
    return tuple(lam[i] + (l - 1 - i) for i in range(l))


def _from_beta(beta: tuple[int, ...]) -> Partition:
    """Recover a partition from a strictly decreasing beta set."""
    l = len(beta)
    parts = tuple(b - (l - 1 - i) for i, b in enumerate(beta))
    return tuple(p for p in parts if p > 0)


def _mn(lam: Partition, rho: Partition, n: int) -> int:
    """Character value with the parts of ``rho`` consumed largest first.

    Removing a border strip of size k corresponds to lowering one
    beta-number by k; the sign is (-1) to the number of beta-numbers
    jumped over.
    """
    if not rho:
        return 1
    table = _memo[n]
    key = (lam, rho)
    hit = table.get(key)
    if hit is not None:
        return hit
    k = rho[0]
    rest = rho[1:]
    beta = _beta_set(lam)
    beta_set = set(beta)
    total = 0
    for b in beta:
        t = b - k
        if t < 0 or t in beta_set:
            continue
        crossed = sum(1 for c in beta if t < c < b)
        new_beta = tuple(sorted((beta_set - {b}) | {t}, reverse=True))
        sub = _mn(_from_beta(new_beta), rest, n - k)
        if sub:
            total += -sub if crossed % 2 else sub
    table[key] = total
    return total


def character(lam: Partition, rho: Partition) -> int:
    """Irreducible character of the symmetric group: the value of the
    character of shape ``lam`` on the class of cycle type ``rho``.

    Both arguments must be partitions of the same integer.
    """
    n = sum(lam)
    if n != sum(rho):
        raise ValueError("shape and cycle type must have equal size")
    return _mn(tuple(lam), tuple(sorted(rho, reverse=True)), n)


def clear_character_cache(degree: int | None = None) -> None:
    """Drop memo tables, either for one degree or for all of them.

    Useful between unrelated large computations to bound memory.
    """
    if degree is None:
        _memo.clear()
    else:
        _memo.pop(degree, None)
