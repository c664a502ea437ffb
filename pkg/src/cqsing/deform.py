"""Versal deformation equations: tangent dimension, the hypersurface family,
and the explicit base/total ideals for embedding dimension >= 4.

Construction data for e >= 4, with a_2..a_{e-1} the dual expansion:

* deformation variables s_i^(k) (2 <= i <= e-1, 1 <= k <= a_i - 1) and
  t_i (3 <= i <= e-2); their count is the tangent dimension;
* w_j = z_j + t_j for 3 <= j <= e-2 and w_j = z_j otherwise;
* the deformed power of z_m of degree d is
  trunc(m, d) = z_m^d + z_m^{d-1} s_m^(1) + ... + s_m^(d);
* the total space is cut by z_i w_j = P_ij over all pairs j >= i + 2, where

      P_ij = w_{i+1} * trunc(i+1, a_{i+1} - 1)                if j = i + 2,
      P_ij = F(i+1) * prod_{i+1<m<j-1} trunc(m, a_m - 2)
                    * trunc(j-1, a_{j-1} - 1)                 if j > i + 2,

  with first factor F(m) = w_m * trunc(m, a_m - 2) when a_m >= 3 and
  F(m) = trunc(m, a_m - 1) when a_m = 2.  Setting s = t = 0 recovers the
  binomial equations exactly;
* the base ideal collects, over the pairs with i >= 2, the two evaluations
  H_z(P) (all z -> 0) and H_w(P) (z_j -> -t_j where w_j has a t, z -> 0
  elsewhere), dropping zeros.

For e = 3 the singularity is the hypersurface z1 z3 = z2^n and the versal
family is the one-equation deformation by a degree-(n-2) polynomial in z2.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .cfrac import Singularity, dual_expand, embedding_dimension
from .errors import InputError
from .polyring import Polynomial, VariableTable


@dataclass(frozen=True)
class DeformationVariables:
    e: int
    a_entries: dict[int, int]  # index t -> a_t, for 2 <= t <= e-1
    table: VariableTable
    z_names: tuple[str, ...]
    s_names: dict[tuple[int, int], str]
    t_names: dict[int, str]

    @property
    def parameter_names(self) -> tuple[str, ...]:
        return tuple(self.s_names.values()) + tuple(self.t_names.values())


@dataclass(frozen=True)
class VersalPresentation:
    variables: DeformationVariables
    pairs: tuple[tuple[int, int], ...]
    relations: tuple[Polynomial, ...]  # z_i w_j - P_ij, aligned with pairs
    base_ideal: tuple[Polynomial, ...]

    @property
    def total_ideal(self) -> tuple[Polynomial, ...]:
        return self.relations + self.base_ideal


@dataclass(frozen=True)
class HypersurfaceFamily:
    """x^2 + y^2 + z^m deformed by the trace-zero tail of degree m - 2."""

    m: int
    table: VariableTable
    equation: Polynomial
    parameters: tuple[str, ...]


def dim_t1(s: Singularity) -> int:
    """Dimension of the space of first-order deformations.

    sum(a_i - 1) + (e - 4) for e >= 4; for e = 3 the quotient is the
    hypersurface z1 z3 = z2^n whose Tjurina algebra C[z2]/(z2^{n-1}) has
    dimension n - 1.
    """
    e = embedding_dimension(s)
    if e == 3:
        return s.n - 1
    return sum(a - 1 for a in dual_expand(s)) + (e - 4)


def an_versal_family(m: int) -> HypersurfaceFamily:
    """The m-sheet double-point family with m - 1 parameters c_0..c_{m-2}
    (no degree m-1 term)."""
    if m < 2:
        raise InputError("need m >= 2")
    params = tuple(f"c{k}" for k in range(m - 1))
    table = VariableTable(("x", "y", "z") + params)
    eq = table.var("x", 2) + table.var("y", 2) + table.var("z", m)
    for k in range(m - 1):
        eq = eq + table.var(f"c{k}") * table.var("z", k)
    return HypersurfaceFamily(m=m, table=table, equation=eq, parameters=params)


def discriminant(h) -> Fraction:
    """prod_{i<j} (h_i - h_j)^2; zero exactly when a value repeats."""
    values = [Fraction(x) for x in h]
    if sum(values) != 0:
        raise InputError("root values must sum to zero")
    result = Fraction(1)
    for i in range(len(values)):
        for j in range(i + 1, len(values)):
            result *= (values[i] - values[j]) ** 2
    return result


def deformation_variables(s: Singularity) -> DeformationVariables:
    e = embedding_dimension(s)
    if e < 4:
        raise InputError("construction needs embedding dimension >= 4")
    a_entries = {t: a for t, a in enumerate(dual_expand(s), start=2)}
    z_names = tuple(f"z{i}" for i in range(1, e + 1))
    s_names = {}
    for i in range(2, e):
        for k in range(1, a_entries[i]):
            s_names[(i, k)] = f"s{i}({k})"
    t_names = {i: f"t{i}" for i in range(3, e - 1)}
    table = VariableTable(
        z_names + tuple(s_names.values()) + tuple(t_names.values())
    )
    return DeformationVariables(
        e=e,
        a_entries=a_entries,
        table=table,
        z_names=z_names,
        s_names=s_names,
        t_names=t_names,
    )


def _w(v: DeformationVariables, j: int) -> Polynomial:
    zj = v.table.var(f"z{j}")
    if j in v.t_names:
        return zj + v.table.var(v.t_names[j])
    return zj


def _trunc(v: DeformationVariables, m: int, d: int) -> Polynomial:
    """z_m^d + z_m^{d-1} s_m^(1) + ... + s_m^(d)."""
    acc = v.table.var(f"z{m}", d) if d else v.table.one()
    for k in range(1, d + 1):
        term = v.table.var(v.s_names[(m, k)])
        if d - k:
            term = term * v.table.var(f"z{m}", d - k)
        acc = acc + term
    return acc


def _p_polynomial(v: DeformationVariables, i: int, j: int) -> Polynomial:
    a = v.a_entries
    if j == i + 2:
        return _w(v, i + 1) * _trunc(v, i + 1, a[i + 1] - 1)
    first = i + 1
    if a[first] >= 3:
        p = _w(v, first) * _trunc(v, first, a[first] - 2)
    else:
        p = _trunc(v, first, a[first] - 1)
    for m in range(i + 2, j - 1):
        p = p * _trunc(v, m, a[m] - 2)
    return p * _trunc(v, j - 1, a[j - 1] - 1)


def _h_z(v: DeformationVariables, p: Polynomial) -> Polynomial:
    return p.substitute({name: 0 for name in v.z_names})


def _h_w(v: DeformationVariables, p: Polynomial) -> Polynomial:
    mapping = {}
    for j in range(1, v.e + 1):
        if j in v.t_names:
            mapping[f"z{j}"] = -v.table.var(v.t_names[j])
        else:
            mapping[f"z{j}"] = 0
    return p.substitute(mapping)


def versal_presentation(s: Singularity) -> VersalPresentation:
    """Base and total ideals of the versal family (e >= 4).

    Pairs are listed adjacent ones first, then the rest lexicographically.
    """
    v = deformation_variables(s)
    e = v.e
    adjacent = [(i, i + 2) for i in range(1, e - 1)]
    longer = [
        (i, j) for i in range(1, e - 1) for j in range(i + 3, e + 1)
    ]
    pairs = adjacent + longer
    p_polys = {pair: _p_polynomial(v, *pair) for pair in pairs}
    relations = tuple(
        v.table.var(f"z{i}") * _w(v, j) - p_polys[(i, j)] for i, j in pairs
    )
    base = []
    for pair in sorted(p_polys):
        if pair[0] < 2:
            continue
        for h in (_h_z(v, p_polys[pair]), _h_w(v, p_polys[pair])):
            if h and h not in base:
                base.append(h)
    return VersalPresentation(
        variables=v,
        pairs=tuple(pairs),
        relations=relations,
        base_ideal=tuple(base),
    )


def hypersurface_presentation(s: Singularity):
    """The e = 3 route: one deformed equation z1 z3 = z2^n + tail."""
    if embedding_dimension(s) != 3:
        raise InputError("only for embedding dimension 3")
    n = s.n
    params = tuple(f"c{k}" for k in range(n - 1))
    table = VariableTable(("z1", "z2", "z3") + params)
    rhs = table.var("z2", n)
    for k in range(n - 1):
        rhs = rhs + table.var(f"c{k}") * table.var("z2", k)
    equation = table.var("z1") * table.var("z3") - rhs
    return table, equation, params


def specialized_relations(pres: VersalPresentation) -> list[Polynomial]:
    """The total-space relations at s = t = 0 (still over the big table)."""
    zero_params = {name: 0 for name in pres.variables.parameter_names}
    return [rel.substitute(zero_params) for rel in pres.relations]
