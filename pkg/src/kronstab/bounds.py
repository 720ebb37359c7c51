"""Closed-form stabilization bounds for Kronecker coefficient sequences.

All bounds certify an index from which the shifted coefficient sequence
is constant.  Two growth directions are covered: one box added to every
first row ("murnaghan" family, direction ((1),(1),(1))) and the
direction ((1,1),(1,1),(2)) ("squares" family).  Formula values are
clamped at 0 since sequences are indexed by natural numbers.  Parts
beyond a partition's length read as 0 throughout.
"""

from dataclasses import dataclass
from itertools import permutations

from .partitions import Partition, check_partition, part_at


class DegenerateTripleError(ValueError):
    """No ordering of the triple satisfies the length preconditions.

    Callers can answer such triples exactly: with two single-row
    partitions the sequence is a constant Kronecker delta from d = 0.
    """


def _ceil_half(x: int) -> int:
    return -((-x) // 2)


def _d1_fixed(lam: Partition, mu: Partition, nu: Partition) -> int:
    n1, n2 = len(lam), len(mu)
    if n1 < 2 or n2 < 2:
        raise DegenerateTripleError("first two partitions need length >= 2")
    P = n1 * n2
    expr = (
        -lam[0] + lam[1] - mu[0] + mu[1]
        + 2 * (part_at(nu, 2) - part_at(nu, P))
    )
    for k in range(1, n1 + n2 - 3):
        expr += part_at(nu, k + 2) - part_at(nu, P - k)
    return max(0, _ceil_half(expr))


def bound_D1(
    lam: Partition, mu: Partition, nu: Partition,
    minimize_over_orderings: bool = True,
) -> int:
    """Bound for the murnaghan family from the one-box scenario.

    With minimization, the least value over the six orderings of the
    triple whose first two members have length at least 2; the fixed
    ordering uses the arguments as given.
    """
    lam, mu, nu = check_partition(lam), check_partition(mu), check_partition(nu)
    if not minimize_over_orderings:
        return _d1_fixed(lam, mu, nu)
    best = None
    for a, b, c in permutations((lam, mu, nu)):
        if len(a) < 2 or len(b) < 2:
            continue
        v = _d1_fixed(a, b, c)
        if best is None or v < best:
            best = v
    if best is None:
        raise DegenerateTripleError("no ordering has two partitions of length >= 2")
    return best


def bound_D2(
    lam: Partition, mu: Partition, nu: Partition,
    minimize_over_swap: bool = False,
) -> int:
    """Bound for the squares family, with the branch structure on the
    lengths of the first two partitions (the formula is symmetric under
    swapping them; the swap option exists for completeness)."""
    lam, mu, nu = check_partition(lam), check_partition(mu), check_partition(nu)
    n1, n2 = len(lam), len(mu)
    if n1 < 2 or n2 < 2:
        raise DegenerateTripleError("both partitions need length >= 2")
    m = max(-part_at(lam, 2) - part_at(mu, 1), -part_at(lam, 1) - part_at(mu, 2))
    if n1 >= 3 and n2 >= 3:
        P = n1 * n2
        expr = m + part_at(lam, 3) + part_at(mu, 3) + 2 * (
            part_at(nu, 2) - part_at(nu, P)
        )
        for k in range(1, n1 + n2 - 3):
            expr += part_at(nu, k + 2) - part_at(nu, P - k)
    elif n1 == 2:
        expr = m + part_at(mu, 3) + 2 * part_at(nu, 2) - part_at(nu, 2 * n2)
        for k in range(1, n2):
            expr += part_at(nu, k + 2)
    else:  # n2 == 2, n1 >= 3
        expr = m + part_at(lam, 3) + 2 * part_at(nu, 2) - part_at(nu, 2 * n1)
        for k in range(1, n1):
            expr += part_at(nu, k + 2)
    val = max(0, _ceil_half(expr))
    if minimize_over_swap:
        val = min(val, bound_D2(mu, lam, nu, minimize_over_swap=False))
    return val


def bound_DB(
    lam: Partition, mu: Partition, nu: Partition,
    minimize_over_nu_choice: bool = True,
) -> int:
    """Converted external bound for the murnaghan family, optionally
    minimized over which partition plays the third role (the formula is
    symmetric in the other two)."""
    lam, mu, nu = check_partition(lam), check_partition(mu), check_partition(nu)

    def fixed(a, b, c):
        return max(0, sum(b) - part_at(a, 1) - part_at(b, 1) + part_at(c, 2))

    if not minimize_over_nu_choice:
        return fixed(lam, mu, nu)
    return min(
        fixed(lam, mu, nu), fixed(mu, nu, lam), fixed(nu, lam, mu)
    )


def bound_DB_improved(lam: Partition, mu: Partition, nu: Partition) -> int:
    """Long-third-partition improvement of the converted bound: the tail
    parts beyond position len(a)+len(b)-1 of the third partition are
    subtracted.  Minimized over the role choice; equals the unimproved
    bound when the third partition is short."""
    lam, mu, nu = check_partition(lam), check_partition(mu), check_partition(nu)

    def fixed(a, b, c):
        n1, n2 = len(a), len(b)
        expr = -part_at(a, 1) + (sum(b) - part_at(b, 1)) + part_at(c, 2)
        for k in range(n1 + n2, n1 * n2 + 1):
            expr -= part_at(c, k)
        return max(0, expr)

    return min(fixed(lam, mu, nu), fixed(mu, nu, lam), fixed(nu, lam, mu))


def bound_DBOR2(lam: Partition, mu: Partition, nu: Partition) -> int:
    """Second converted external bound; fully symmetric in the triple
    because the three sizes agree."""
    lam, mu, nu = check_partition(lam), check_partition(mu), check_partition(nu)
    num = (
        sum(mu)
        + part_at(lam, 2) - part_at(lam, 1)
        + part_at(mu, 2) - part_at(mu, 1)
        + part_at(nu, 2) - part_at(nu, 1)
    )
    return max(0, num // 2)


def dbor2_improved_fixed(lam: Partition, mu: Partition, nu: Partition) -> int:
    """The long-third-partition refinement of the second converted
    bound, for the argument order as given (no clamping or role
    minimization); exposed for scenario cross-checks."""
    n1, n2 = len(lam), len(mu)
    if n1 < 2 or n2 < 2:
        raise DegenerateTripleError("first two partitions need length >= 2")
    P = n1 * n2
    expr = (
        -part_at(lam, 1) + part_at(lam, 2)
        + 2 * part_at(mu, 2) + sum(mu) - part_at(mu, 1) - part_at(mu, 2)
        - part_at(nu, 1) + part_at(nu, 2)
    )
    for q in range(n1 + n2 - 1, P - n1 - n2 + 3):
        expr -= part_at(nu, q)
    for q in range(P - n1 - n2 + 3, P):
        expr -= 2 * part_at(nu, q)
    expr -= 3 * part_at(nu, P)
    return _ceil_half(expr)


def dbor2_improvement_orderings(
    lam: Partition, mu: Partition, nu: Partition
) -> list[tuple[Partition, Partition, Partition]]:
    """Role assignments on which the long-third-partition refinement is
    valid: the weight pattern behind it needs at least three rows in
    each of the first two partitions, and a third partition reaching
    position len(a)+len(b)-1 (otherwise the refinement subtracts nothing
    and only the unimproved floor form is available)."""
    out = []
    for a, b, c in permutations((lam, mu, nu)):
        if len(a) >= 3 and len(b) >= 3 and len(c) >= len(a) + len(b) - 1:
            out.append((a, b, c))
    return out


def bound_DBOR2_improved(lam: Partition, mu: Partition, nu: Partition) -> int:
    """Improved second converted bound: the refinement minimized over
    the admissible role assignments, never exceeding the unimproved
    bound (the subtracted tail contains at least one positive part)."""
    lam, mu, nu = check_partition(lam), check_partition(mu), check_partition(nu)
    best = bound_DBOR2(lam, mu, nu)
    for a, b, c in dbor2_improvement_orderings(lam, mu, nu):
        best = min(best, max(0, dbor2_improved_fixed(a, b, c)))
    return best


def bound_Dm(lam: Partition, mu: Partition, nu: Partition) -> int:
    """The best bound available for the murnaghan family: minimum of the
    reordered one-box bound and both improved converted bounds."""
    try:
        d1 = bound_D1(lam, mu, nu, minimize_over_orderings=True)
    except DegenerateTripleError:
        # two single-row partitions: the sequence is a Kronecker delta,
        # constant from the start
        return 0
    return min(d1, bound_DB_improved(lam, mu, nu), bound_DBOR2_improved(lam, mu, nu))


DoublePartition = tuple[Partition, Partition]


def bound_hyperoct(lam: DoublePartition, mu: DoublePartition, nu: DoublePartition) -> int:
    """Stabilization bound for hyperoctahedral tensor sequences grown by
    one box on every plus part's first row."""
    lp, lm = lam
    mp, mm = mu
    np_, nm = nu
    a1, a2 = len(lp), len(lm)
    b1, b2 = len(mp), len(mm)
    if a1 < 2 or b1 < 2:
        raise DegenerateTripleError("plus parts need length >= 2")
    m = a1 * b1 + a2 * b2
    n = a1 * b2 + a2 * b1
    expr = (
        -part_at(lp, 1) + part_at(lp, 2)
        - part_at(mp, 1) + part_at(mp, 2)
        + 2 * (part_at(np_, 2) - part_at(np_, m))
    )
    for k in range(1, a1 + b1 - 3):
        expr += part_at(np_, k + 2) - part_at(np_, m - k)
    for k in range(1, a2 + b2 + 1):
        expr += part_at(nm, k) - part_at(nm, n - k + 1)
    return max(0, _ceil_half(expr))


@dataclass(frozen=True)
class BoundReport:
    """Every bound computed for one triple, plus bookkeeping."""

    family: str
    triple: tuple[Partition, Partition, Partition]
    values: tuple[tuple[str, int], ...]
    notes: tuple[str, ...] = ()

    def as_dict(self) -> dict[str, int]:
        return dict(self.values)


def murnaghan_report(lam: Partition, mu: Partition, nu: Partition) -> BoundReport:
    notes = []
    try:
        d1 = bound_D1(lam, mu, nu, minimize_over_orderings=True)
    except DegenerateTripleError:
        d1 = 0
        notes.append("degenerate triple: sequence constant from 0")
    values = (
        ("D1", d1),
        ("DB", bound_DB(lam, mu, nu)),
        ("DB_improved", bound_DB_improved(lam, mu, nu)),
        ("DBOR2", bound_DBOR2(lam, mu, nu)),
        ("DBOR2_improved", bound_DBOR2_improved(lam, mu, nu)),
        ("Dm", bound_Dm(lam, mu, nu)),
    )
    return BoundReport("murnaghan", (lam, mu, nu), values, tuple(notes))


def squares_report(lam: Partition, mu: Partition, nu: Partition) -> BoundReport:
    return BoundReport(
        "squares", (lam, mu, nu), (("D2", bound_D2(lam, mu, nu)),)
    )
