"""Resolution-shaped quiver with its relations, the quasideterminantal
presentation of the simultaneous-resolution component, and the deformed
relations with their parameter base.

The quiver on vertices b_0..b_r (b_0 the framing vertex) carries a doubled
cycle (arrows a: i -> i+1 and c: i -> i-1, indices mod r+1) plus b_i - 2
extra arrows k from each vertex with weight b_i > 2 down to b_0.  Relations
are only emitted for the shapes the construction is verified on: every
weight 2 (doubled-cycle case), or exactly one weight equal to 3; anything
else yields the quiver with the relations flagged unsupported rather than
guessed.  Paths are written in traversal order (leftmost arrow first).
"""

from __future__ import annotations

from dataclasses import dataclass

from .cfrac import Singularity, dual_expand, hj_expand, ij_series
from .errors import InputError, UnsupportedError
from .polyring import Polynomial, VariableTable


@dataclass(frozen=True)
class Arrow:
    kind: str  # "a" (forward cycle), "c" (backward cycle), "k" (extra)
    tail: int
    head: int
    slot: int = 0  # multiplicity index for k-arrows

    @property
    def label(self) -> str:
        if self.kind == "k":
            return f"k{self.tail}_{self.slot}"
        return f"{self.kind}{self.tail}{self.head}"


@dataclass(frozen=True)
class Relation:
    """positive path - negative path = 0, both loops based at `vertex`."""

    vertex: int
    positive: tuple[Arrow, ...]
    negative: tuple[Arrow, ...]

    def text(self) -> str:
        pos = "*".join(a.label for a in self.positive)
        neg = "*".join(a.label for a in self.negative)
        return f"{pos} - {neg}"


@dataclass(frozen=True)
class DeformedRelation:
    vertex: int
    positive: tuple[Arrow, ...]
    negative: tuple[Arrow, ...]
    parameter: str

    def text(self) -> str:
        pos = "*".join(a.label for a in self.positive)
        neg = "*".join(a.label for a in self.negative)
        return f"{pos} - {neg} = {self.parameter}"


@dataclass(frozen=True)
class ReconstructionQuiver:
    fraction: tuple[int, ...]
    vertices: tuple[str, ...]
    arrows: tuple[Arrow, ...]
    relations: tuple[Relation, ...] | None
    unsupported_reason: str | None = None


@dataclass(frozen=True)
class DeformedRelations:
    relations: tuple[DeformedRelation, ...]
    groups: tuple[tuple[str, ...], ...]  # parameter names, one zero-sum each
    base_dimension: int


@dataclass(frozen=True)
class QuasidetPresentation:
    dual_fraction: tuple[int, ...]
    matrix: tuple[tuple[str, ...], ...]
    table: VariableTable
    relations: tuple[Polynomial, ...]


def _a_arrow(i, count):
    return Arrow(kind="a", tail=i, head=(i + 1) % count)


def _c_arrow(i, count):
    return Arrow(kind="c", tail=i, head=(i - 1) % count)


def _left_loop(v, count):
    # down to v-1 and back
    return (_c_arrow(v, count), _a_arrow((v - 1) % count, count))


def _right_loop(v, count):
    # up to v+1 and back
    return (_a_arrow(v, count), _c_arrow((v + 1) % count, count))


def _forward_path(m, count):
    # 0 -> 1 -> ... -> m
    return tuple(_a_arrow(i, count) for i in range(m))


def _backward_path(m, count):
    # 0 -> r -> r-1 -> ... -> m
    return (_c_arrow(0, count),) + tuple(
        _c_arrow(i, count) for i in range(count - 1, m, -1)
    )


def quiver_from_fraction(fraction) -> ReconstructionQuiver:
    """Build the quiver (and relations where the shape is supported) from
    an expansion [b_1, ..., b_r] with every entry >= 2 and r >= 2."""
    fraction = tuple(fraction)
    r = len(fraction)
    if r < 2 or any(b < 2 for b in fraction):
        raise InputError("need at least two entries, all >= 2")
    count = r + 1
    vertices = tuple(f"b{i}" for i in range(count))
    arrows = []
    for i in range(count):
        arrows.append(_a_arrow(i, count))
    for i in range(count):
        arrows.append(_c_arrow(i, count))
    heavy = [i for i, b in enumerate(fraction, start=1) if b > 2]
    for i in heavy:
        for slot in range(1, fraction[i - 1] - 1):
            arrows.append(Arrow(kind="k", tail=i, head=0, slot=slot))

    relations, reason = None, None
    if not heavy:
        relations = tuple(
            Relation(vertex=v, positive=_left_loop(v, count), negative=_right_loop(v, count))
            for v in range(count)
        )
    elif len(heavy) == 1 and fraction[heavy[0] - 1] == 3:
        m = heavy[0]
        k_arrow = Arrow(kind="k", tail=m, head=0, slot=1)
        relations = []
        for v in range(count):
            if v == 0:
                relations.append(
                    Relation(0, _forward_path(m, count) + (k_arrow,), _left_loop(0, count))
                )
                relations.append(
                    Relation(0, _backward_path(m, count) + (k_arrow,), _right_loop(0, count))
                )
            elif v == m:
                relations.append(
                    Relation(m, (k_arrow,) + _backward_path(m, count), _left_loop(m, count))
                )
                relations.append(
                    Relation(m, (k_arrow,) + _forward_path(m, count), _right_loop(m, count))
                )
            else:
                relations.append(
                    Relation(v, _left_loop(v, count), _right_loop(v, count))
                )
        relations = tuple(relations)
    else:
        reason = (
            "relations are only emitted for weight chains that are all 2 or "
            "have a single 3; got " + str(list(fraction))
        )
    return ReconstructionQuiver(
        fraction=fraction,
        vertices=vertices,
        arrows=tuple(arrows),
        relations=relations,
        unsupported_reason=reason,
    )


def reconstruction_quiver(s: Singularity) -> ReconstructionQuiver:
    return quiver_from_fraction(hj_expand(s.n, s.q))


def deformed_relations(s: Singularity) -> DeformedRelations:
    """One parameter per relation, grouped per dual-expansion entry with a
    zero-sum constraint each; at parameters zero the plain relations return
    (up to an overall sign per relation)."""
    quiver = reconstruction_quiver(s)
    if quiver.relations is None:
        raise UnsupportedError(quiver.unsupported_reason)
    fraction = quiver.fraction
    count = len(fraction) + 1
    r = len(fraction)
    dual = dual_expand(s)
    heavy = [i for i, b in enumerate(fraction, start=1) if b > 2]

    def param(g, j):
        return f"t{g}_{j}"

    relations = []
    if not heavy:
        # single group of size n = r + 1, the flipped loop at each vertex
        for v in range(count):
            relations.append(
                DeformedRelation(
                    vertex=v,
                    positive=_right_loop(v, count),
                    negative=_left_loop(v, count),
                    parameter=param(1, v),
                )
            )
        groups = (tuple(param(1, v) for v in range(count)),)
    else:
        m = heavy[0]
        k_arrow = Arrow(kind="k", tail=m, head=0, slot=1)
        group1, group2 = [], []
        group1.append(
            DeformedRelation(
                vertex=0,
                positive=_right_loop(0, count),
                negative=_backward_path(m, count) + (k_arrow,),
                parameter=param(1, 0),
            )
        )
        for v in range(1, m):
            group1.append(
                DeformedRelation(
                    vertex=v,
                    positive=_right_loop(v, count),
                    negative=_left_loop(v, count),
                    parameter=param(1, v),
                )
            )
        group1.append(
            DeformedRelation(
                vertex=m,
                positive=(k_arrow,) + _backward_path(m, count),
                negative=_left_loop(m, count),
                parameter=param(1, m),
            )
        )
        group2.append(
            DeformedRelation(
                vertex=0,
                positive=_forward_path(m, count) + (k_arrow,),
                negative=_left_loop(0, count),
                parameter=param(2, 0),
            )
        )
        group2.append(
            DeformedRelation(
                vertex=m,
                positive=_right_loop(m, count),
                negative=(k_arrow,) + _forward_path(m, count),
                parameter=param(2, 1),
            )
        )
        for j, v in enumerate(range(m + 1, r + 1), start=2):
            group2.append(
                DeformedRelation(
                    vertex=v,
                    positive=_right_loop(v, count),
                    negative=_left_loop(v, count),
                    parameter=param(2, j),
                )
            )
        if (len(group1), len(group2)) != (dual[0], dual[1]):
            raise UnsupportedError(
                "parameter grouping does not match the dual expansion"
            )
        relations = group1 + group2
        groups = (
            tuple(rel.parameter for rel in group1),
            tuple(rel.parameter for rel in group2),
        )
        relations.sort(key=lambda rel: (rel.vertex, rel.parameter))
    base_dimension = sum(a - 1 for a in dual)
    return DeformedRelations(
        relations=tuple(relations),
        groups=groups,
        base_dimension=base_dimension,
    )


def _symbol(i, j):
    return f"z{i}_{j}"


def quasidet_presentation(s: Singularity) -> QuasidetPresentation:
    """Symbol matrix with (rows, columns) = (dual length, first dual entry),
    filled along antidiagonals, plus all generalized-minor relations
    top_i * bottom_j - bottom_i * middles_i..j-1 * top_j for column pairs."""
    dual = dual_expand(s)
    if len(dual) < 2:
        raise UnsupportedError(
            "single-entry dual expansion: the matrix layout degenerates"
        )
    rows, cols = len(dual), dual[0]
    matrix = []
    for r in range(rows):
        row = []
        for c in range(cols):
            i = r + c
            j = r - max(0, i - (cols - 1))
            row.append(_symbol(i, j))
        matrix.append(tuple(row))
    matrix = tuple(matrix)
    names = sorted(
        {name for row in matrix for name in row},
        key=lambda t: tuple(int(x) for x in t[1:].split("_")),
    )
    table = VariableTable(names)
    relations = []
    for c1 in range(cols):
        for c2 in range(c1 + 1, cols):
            middle = table.one()
            for c in range(c1, c2):
                for r in range(1, rows - 1):
                    middle = middle * table.var(matrix[r][c])
            relations.append(
                table.var(matrix[0][c1]) * table.var(matrix[rows - 1][c2])
                - table.var(matrix[rows - 1][c1]) * middle * table.var(matrix[0][c2])
            )
    return QuasidetPresentation(
        dual_fraction=dual,
        matrix=matrix,
        table=table,
        relations=tuple(relations),
    )


def monomial_assignment(s: Singularity):
    """Exponent pairs for the matrix symbols under which every relation
    vanishes identically, derived from the invariant generators.

    Only derivable for two-row layouts whose column count fits inside the
    generator list; returns None otherwise.
    """
    dual = dual_expand(s)
    if len(dual) != 2:
        return None
    e = len(dual) + 2
    cols = dual[0]
    if cols > e - 1:
        return None
    pairs = ij_series(s).pairs  # pairs[t-1] = exponents of generator t
    u = {t: pairs[t - 1] for t in range(1, e + 1)}
    assignment = {}
    pres = quasidet_presentation(s)
    top, bottom = pres.matrix[0], pres.matrix[1]
    for c in range(cols):
        b = u[c + 2]
        assignment[bottom[c]] = b
        if c == 0:
            assignment[top[c]] = u[1]
        else:
            assignment[top[c]] = (
                u[1][0] + b[0] - u[2][0],
                u[1][1] + b[1] - u[2][1],
            )
    return assignment
