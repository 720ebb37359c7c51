"""Integer partitions as tuples of weakly decreasing positive parts.

The empty partition is ``()``.  All functions treat a partition of length
``l`` as having infinitely many trailing zero parts, so ``part_at(lam, k)``
is well defined for every ``k >= 1``.
"""

from fractions import Fraction
from functools import cache
from math import factorial
from typing import Iterator


class PartitionError(ValueError):
    """Raised for text that does not describe a partition."""


Partition = tuple[int, ...]


def check_partition(lam) -> Partition:
    """Validate and return ``lam`` as a partition tuple.

    Parts must be positive integers in weakly decreasing order.
    """
    lam = tuple(lam)
    for p in lam:
        if not isinstance(p, int) or p <= 0:
            raise PartitionError(f"parts must be positive integers, got {p!r}")
    for a, b in zip(lam, lam[1:]):
        if a < b:
            raise PartitionError(f"parts must be weakly decreasing, got {lam}")
    return lam


def parse_partition(text: str) -> Partition:
    """Parse a partition from text.

    Grammar: comma-separated parts, each either an integer or ``k^m``
    meaning the part ``k`` repeated ``m`` times.  The single token ``-``
    denotes the empty partition.  Whitespace around tokens is ignored.

    >>> parse_partition("2^3,1^4")
    (2, 2, 2, 1, 1, 1, 1)
    >>> parse_partition("-")
    ()
    """
    text = text.strip()
    if text in ("-", ""):
        return ()
    parts: list[int] = []
    for token in text.split(","):
        token = token.strip()
        if not token:
            raise PartitionError(f"empty token in partition text {text!r}")
        if "^" in token:
            base, _, exp = token.partition("^")
            try:
                k, m = int(base), int(exp)
            except ValueError:
                raise PartitionError(f"bad token {token!r} in partition text") from None
            if m < 0:
                raise PartitionError(f"negative repeat count in token {token!r}")
            parts.extend([k] * m)
        else:
            try:
                parts.append(int(token))
            except ValueError:
                raise PartitionError(f"bad token {token!r} in partition text") from None
    return check_partition(parts)


def format_partition(lam: Partition) -> str:
    """Render a partition in the text grammar accepted by parse_partition.

    Runs of three or more equal parts are compressed with the caret
    notation, so ``(2, 2, 2, 1, 1, 1, 1)`` renders as ``"2^3,1^4"``.
    The empty partition renders as ``"-"``.
    """
    if not lam:
        return "-"
    out = []
    i = 0
    while i < len(lam):
        j = i
        while j < len(lam) and lam[j] == lam[i]:
            j += 1
        run = j - i
        if run >= 3:
            out.append(f"{lam[i]}^{run}")
        else:
            out.extend([str(lam[i])] * run)
        i = j
    return ",".join(out)


def part_at(lam: Partition, k: int) -> int:
    """The k-th part (1-based); zero beyond the length."""
    if k < 1:
        raise IndexError("part index is 1-based")
    return lam[k - 1] if k <= len(lam) else 0


def add_scaled(lam: Partition, d: int, pi: Partition) -> Partition:
    """Return ``lam + d*pi`` part by part, validating the result.

    The result must again be a partition; this holds whenever ``pi`` is a
    partition and ``d >= 0``, which is the intended use.
    """
    if d < 0:
        raise ValueError("scale factor must be nonnegative")
    length = max(len(lam), len(pi))
    parts = [part_at(lam, k) + d * part_at(pi, k) for k in range(1, length + 1)]
    return check_partition(p for p in parts if p > 0)


def conjugate(lam: Partition) -> Partition:
    """Transpose of the Young diagram."""
    if not lam:
        return ()
    return tuple(sum(1 for p in lam if p > i) for i in range(lam[0]))


@cache
def partitions_of(n: int, max_part: int | None = None) -> tuple[Partition, ...]:
    """All partitions of ``n``, largest part first, in reverse
    lexicographic order.  Optionally bound the largest part."""
    if n < 0:
        return ()
    if n == 0:
        return ((),)
    if max_part is None or max_part > n:
        max_part = n
    out: list[Partition] = []
    for first in range(max_part, 0, -1):
        for rest in partitions_of(n - first, first):
            out.append((first,) + rest)
    return tuple(out)


def iter_partitions(n: int) -> Iterator[Partition]:
    yield from partitions_of(n)


@cache
def dim_sn(lam: Partition) -> int:
    """Dimension of the symmetric group irreducible of shape ``lam``
    (the number of standard tableaux), by the hook length formula."""
    n = sum(lam)
    if n == 0:
        return 1
    conj = conjugate(lam)
    hooks = 1
    for i, row in enumerate(lam):
        for j in range(row):
            hooks *= row - j + conj[j] - i - 1
    d, rem = divmod(factorial(n), hooks)
    assert rem == 0
    return d


def dim_gl(lam: Partition, m: int) -> int:
    """Dimension of the GL(m) irreducible with highest weight ``lam``.

    Computed by the Weyl dimension formula as a product of exact
    rationals.  Zero when ``lam`` has more than ``m`` rows.
    """
    if m < 0:
        raise ValueError("m must be nonnegative")
    if len(lam) > m:
        return 0
    prod = Fraction(1)
    for i in range(1, m + 1):
        for j in range(i + 1, m + 1):
            prod *= Fraction(part_at(lam, i) - part_at(lam, j) + j - i, j - i)
    assert prod.denominator == 1
    return int(prod)


def z_order(rho: Partition) -> int:
    """Order of the centralizer of a permutation with cycle type ``rho``:
    the product over cycle sizes i of ``i**m_i * m_i!``."""
    z = 1
    mult = 1
    for idx, p in enumerate(rho):
        if idx and rho[idx - 1] == p:
            mult += 1
        else:
            mult = 1
        z *= p * mult
    return z
