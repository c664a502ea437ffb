"""Hirzebruch-Jung continued fractions and the arithmetic they control.

Everything downstream (invariant generators, fans, deformation data) is
driven by the two expansions of a coprime pair 0 < q < n:

* ``hj_expand(n, q)``     -> [b_1, ..., b_r], the self-intersection chain,
* ``hj_expand(n, n - q)`` -> [a_2, ..., a_{e-1}], the "dual" expansion whose
  length fixes the embedding dimension e = (number of minimal invariant
  generators).

The expansion is the all-minus one, b_1 - 1/(b_2 - 1/(...)), with every
entry >= 2 (a single entry [n] for denominator 1).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd, isqrt

from .errors import ConsistencyError, InputError


@dataclass(frozen=True)
class Singularity:
    """The plane quotient by the order-n diagonal action with weights (1, q)."""

    n: int
    q: int

    def __post_init__(self):
        if not isinstance(self.n, int) or not isinstance(self.q, int):
            raise InputError("n and q must be integers")
        if not 0 < self.q < self.n:
            raise InputError(f"need 0 < q < n, got (n, q) = ({self.n}, {self.q})")
        if gcd(self.n, self.q) != 1:
            raise InputError(f"n and q must be coprime, got ({self.n}, {self.q})")

    @property
    def dual_q(self) -> int:
        return self.n - self.q


@dataclass(frozen=True)
class ExponentSeries:
    """Paired exponent sequences (i_t, j_t); i strictly decreasing n -> 0,
    j strictly increasing 0 -> n."""

    i_values: tuple[int, ...]
    j_values: tuple[int, ...]

    @property
    def pairs(self) -> tuple[tuple[int, int], ...]:
        return tuple(zip(self.i_values, self.j_values))

    def __len__(self) -> int:
        return len(self.i_values)


@dataclass(frozen=True)
class Identities:
    """Cross-identities of the two expansions: e = 3 + sum(b_j - 2) and
    sum(b_j - 1) = sum(a_i - 1)."""

    e: int
    sum_b: int
    sum_a: int


@dataclass(frozen=True)
class TWitness:
    """Witness (d, m, a) with n = d*m^2, q = d*m*a - 1, gcd(a, m) = 1."""

    d: int
    m: int
    a: int


def hj_expand(numerator: int, denominator: int) -> tuple[int, ...]:
    """All-minus continued-fraction expansion of numerator/denominator.

    Every entry is >= 2; denominator 1 gives the single entry [numerator].
    """
    if denominator < 1 or numerator <= denominator:
        raise InputError(
            f"need numerator > denominator >= 1, got {numerator}/{denominator}"
        )
    if gcd(numerator, denominator) != 1:
        raise InputError(f"{numerator}/{denominator} is not in lowest terms")
    entries = []
    p, q = numerator, denominator
    while q:
        b = -(-p // q)  # ceiling
        entries.append(b)
        p, q = q, b * q - p
    return tuple(entries)


def hj_evaluate(entries) -> Fraction:
    """Evaluate [b_1, ..., b_r] as b_1 - 1/(b_2 - 1/(...)), exactly."""
    entries = tuple(entries)
    if not entries:
        raise InputError("empty continued fraction")
    value = Fraction(entries[-1])
    for b in reversed(entries[:-1]):
        if value == 0:
            raise InputError("continued fraction hits a zero tail")
        value = b - 1 / value
    return value


def dual_expand(s: Singularity) -> tuple[int, ...]:
    """The expansion [a_2, ..., a_{e-1}] of n/(n-q)."""
    return hj_expand(s.n, s.n - s.q)


def curve_count(s: Singularity) -> int:
    """Number r of exceptional curves in the minimal resolution."""
    return len(hj_expand(s.n, s.q))


def ij_series(s: Singularity) -> ExponentSeries:
    """Exponent pairs of the minimal invariant monomial generators.

    The series has e pairs, runs (n,0) down to (0,n), and obeys the
    recursion i_t = a_t*i_{t-1} - i_{t-2} with the dual expansion entries.
    """
    a = dual_expand(s)
    i_vals = [s.n, s.n - s.q]
    j_vals = [0, 1]
    for a_t in a:
        i_vals.append(a_t * i_vals[-1] - i_vals[-2])
        j_vals.append(a_t * j_vals[-1] - j_vals[-2])
    if i_vals[-1] != 0 or j_vals[-1] != s.n:
        raise ConsistencyError(f"series for {s} does not terminate at (0, n)")
    return ExponentSeries(tuple(i_vals), tuple(j_vals))


def unrefined_series(s: Singularity) -> ExponentSeries:
    """The coarser r+2 pair series driven by hj_expand(n, q) directly.

    Starts (n,0), (q,1) and need not give minimal generators; only the
    endpoints agree with ij_series.
    """
    b = hj_expand(s.n, s.q)
    i_vals = [s.n, s.q]
    j_vals = [0, 1]
    for b_t in b:
        i_vals.append(b_t * i_vals[-1] - i_vals[-2])
        j_vals.append(b_t * j_vals[-1] - j_vals[-2])
    if i_vals[-1] != 0 or j_vals[-1] != s.n:
        raise ConsistencyError(f"unrefined series for {s} does not end at (0, n)")
    return ExponentSeries(tuple(i_vals), tuple(j_vals))


def identities(s: Singularity) -> Identities:
    """Check and return the numerical identities tying the two expansions."""
    b = hj_expand(s.n, s.q)
    a = dual_expand(s)
    e = 3 + sum(bj - 2 for bj in b)
    if e != len(a) + 2:
        raise ConsistencyError(f"embedding dimension mismatch for {s}")
    sum_b = sum(bj - 1 for bj in b)
    sum_a = sum(ai - 1 for ai in a)
    if sum_b != sum_a:
        raise ConsistencyError(f"digit-sum identity fails for {s}")
    return Identities(e=e, sum_b=sum_b, sum_a=sum_a)


def embedding_dimension(s: Singularity) -> int:
    return identities(s).e


def is_t_singularity(s: Singularity) -> TWitness | None:
    """Witness that (n, q) has the shape (d*m^2, d*m*a - 1), else None.

    These are exactly the quotients admitting a Q-Gorenstein smoothing;
    the chain-of-(-2)-curves case q = n - 1 always has the witness m = 1.
    """
    for m in range(1, isqrt(s.n) + 1):
        if s.n % (m * m):
            continue
        d = s.n // (m * m)
        if (s.q + 1) % (d * m):
            continue
        a = (s.q + 1) // (d * m)
        if a >= 1 and gcd(a, m) == 1:
            return TWitness(d=d, m=m, a=a)
    return None


def are_isomorphic(s1: Singularity, s2: Singularity) -> bool:
    """True iff the two quotients are isomorphic: equal n and q1 = q2 or
    q1*q2 = 1 (mod n)."""
    if s1.n != s2.n:
        return False
    return s1.q == s2.q or (s1.q * s2.q) % s1.n == 1
