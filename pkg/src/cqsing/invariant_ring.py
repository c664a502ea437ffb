"""Minimal generators and binomial presentation of the invariant ring.

A monomial x^a y^b is invariant exactly when a + q*b = 0 (mod n).  The e
minimal generators z_t = x^{i_t} y^{j_t} come straight from the exponent
series; every relation is binomial, z_i z_j = (monomial in the other z's),
and is verified by pure exponent arithmetic.
"""

from __future__ import annotations

from bisect import bisect_left, bisect_right
from dataclasses import dataclass

from .cfrac import Singularity, dual_expand, ij_series
from .errors import ConsistencyError
from .polyring import VariableTable


@dataclass(frozen=True)
class InvariantGenerator:
    index: int  # 1-based position t
    exponents: tuple[int, int]  # (i_t, j_t)
    name: str

    @property
    def monomial_text(self) -> str:
        a, b = self.exponents
        parts = []
        if a:
            parts.append("x" if a == 1 else f"x^{a}")
        if b:
            parts.append("y" if b == 1 else f"y^{b}")
        return "*".join(parts) if parts else "1"


@dataclass(frozen=True)
class BinomialRelation:
    """z_left1 * z_left2 = prod z_t^e_t, with sparse right exponents."""

    left: tuple[int, int]  # 1-based generator indices (i, j), j >= i + 2
    right: tuple[tuple[int, int], ...]  # ((t, exponent), ...) with exponent > 0


def generators(s: Singularity) -> list[InvariantGenerator]:
    series = ij_series(s)
    return [
        InvariantGenerator(index=t, exponents=pair, name=f"z{t}")
        for t, pair in enumerate(series.pairs, start=1)
    ]


def _right_exponents(a_entries, heavy, i, j):
    """Sparse z-exponents of the relation monomial for the pair (i, j).

    a_entries[t] is the dual-expansion entry at generator t (2 <= t <= e-1);
    the interior factors z_m^{a_m - 2} only appear at indices in `heavy`, so
    the scan visits those instead of the whole range.
    """
    if j == i + 2:
        return ((i + 1, a_entries[i + 1]),)
    right = []
    if a_entries[i + 1] - 1 > 0:
        right.append((i + 1, a_entries[i + 1] - 1))
    lo = bisect_right(heavy, i + 1)
    hi = bisect_left(heavy, j - 1)
    for m in heavy[lo:hi]:
        right.append((m, a_entries[m] - 2))
    if a_entries[j - 1] - 1 > 0:
        right.append((j - 1, a_entries[j - 1] - 1))
    return tuple(right)


def _a_by_index(s: Singularity) -> dict[int, int]:
    return {t: a for t, a in enumerate(dual_expand(s), start=2)}


def defining_equations(s: Singularity) -> list[BinomialRelation]:
    """All (e-1)(e-2)/2 relations z_i z_j = p_ij, 1 <= i, i+2 <= j <= e."""
    e = len(ij_series(s))
    a_entries = _a_by_index(s)
    heavy = sorted(t for t, a in a_entries.items() if a > 2)
    relations = []
    for i in range(1, e - 1):
        for j in range(i + 2, e + 1):
            relations.append(
                BinomialRelation(
                    left=(i, j),
                    right=_right_exponents(a_entries, heavy, i, j),
                )
            )
    return relations


def verify_presentation(s: Singularity) -> bool:
    """Substitute z_t -> x^{i_t} y^{j_t} into every relation and compare
    exponents on both sides."""
    pairs = ij_series(s).pairs
    for rel in defining_equations(s):
        i, j = rel.left
        left = (
            pairs[i - 1][0] + pairs[j - 1][0],
            pairs[i - 1][1] + pairs[j - 1][1],
        )
        rx = sum(e * pairs[t - 1][0] for t, e in rel.right)
        ry = sum(e * pairs[t - 1][1] for t, e in rel.right)
        if left != (rx, ry):
            return False
    return True


def relation_polynomials(s: Singularity, table: VariableTable | None = None):
    """The relations as polynomials z_i z_j - p_ij over a z-variable table."""
    gens = generators(s)
    if table is None:
        table = VariableTable([g.name for g in gens])
    polys = []
    for rel in defining_equations(s):
        i, j = rel.left
        lhs = table.var(f"z{i}") * table.var(f"z{j}")
        rhs = table.one()
        for t, e in rel.right:
            rhs = rhs * table.var(f"z{t}", e)
        polys.append(lhs - rhs)
    return table, polys


def mckay_cycles(s: Singularity) -> list[tuple[int, ...]]:
    """One vertex cycle per generator in the quiver on residues mod n with
    steps +1 (an x-arrow) and +q (a y-arrow).

    The generator x^{i_t} y^{j_t} uses i_t x-steps and j_t y-steps; among
    the valid interleavings we emit the lexicographically smallest vertex
    sequence.  Each cycle starts and ends at 0 and has i_t + j_t arrows.
    """
    n, q = s.n, s.q
    cycles = []
    for gen in generators(s):
        a, b = gen.exponents
        seq = [0]
        cur = 0
        while a or b:
            nxt_x = (cur + 1) % n
            nxt_y = (cur + q) % n
            if a and (not b or nxt_x <= nxt_y):
                cur, a = nxt_x, a - 1
            else:
                cur, b = nxt_y, b - 1
            seq.append(cur)
        if seq[-1] != 0:
            raise ConsistencyError(f"cycle for {gen.name} does not close")
        cycles.append(tuple(seq))
    return cycles
