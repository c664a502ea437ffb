"""Orbit ideal and its Groebner fan over the closed positive quadrant.

In two variables the fan is an ordered sequence of cones, so no generic
fan machinery is needed: sweep from the x-axis to the y-axis.  After a
cone is computed, the next representative weight is taken just across the
cone's upper boundary ray u = (A, B) as (2*n^2*A, 2*n^2*B + 1): exact
integer arithmetic shows this point lies strictly between u and any other
lattice ray with coordinates below n, so it is interior to the next cone.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from .cfrac import Singularity, curve_count
from .errors import ConsistencyError, InputError
from .invariant_ring import generators
from .polyring import (
    Polynomial,
    VariableTable,
    WeightedOrder,
    buchberger,
    leading_term,
    weight_of,
)
from .toric import Fan2D, RationalRay


class BoundaryWeightError(Exception):
    """The weight ties two terms of a reduced basis element: it lies on a
    cone boundary and cannot name a single cone."""


@dataclass(frozen=True)
class OrbitIdeal:
    singularity: Singularity
    point: tuple[Fraction, Fraction]
    table: VariableTable
    gens: tuple[Polynomial, ...]


@dataclass(frozen=True)
class GroebnerCone:
    """A maximal cone: representative weight, attached reduced basis, the
    defining half-planes, and the two boundary rays."""

    weight: tuple[int, int]
    basis: tuple[Polynomial, ...]
    inequalities: tuple[tuple[int, int], ...]  # normals d, cone = {d.w >= 0}
    lower_ray: tuple[int, int]  # primitive, toward the x-axis
    upper_ray: tuple[int, int]  # primitive, toward the y-axis


def orbit_ideal(s: Singularity, point=(1, 1)) -> OrbitIdeal:
    """Generated by f_t(x, y) - f_t(point) over the invariant generators.

    Both coordinates must be nonzero so every generator is a monomial
    minus a nonzero constant.
    """
    p = (Fraction(point[0]), Fraction(point[1]))
    if p[0] == 0 or p[1] == 0:
        raise InputError("base point must have nonzero coordinates")
    table = VariableTable(["x", "y"])
    gens = []
    for g in generators(s):
        a, b = g.exponents
        value = p[0] ** a * p[1] ** b
        gens.append(table.poly({(a, b): 1}) - table.constant(value))
    return OrbitIdeal(singularity=s, point=p, table=table, gens=tuple(gens))


def _primitive(v):
    g = gcd(abs(v[0]), abs(v[1]))
    return (v[0] // g, v[1] // g)


def _cone_rays(inequalities):
    """Boundary rays of {w >= 0 componentwise, d.w >= 0 for all d}."""
    candidates = {(1, 0), (0, 1)}
    for d in inequalities:
        candidates.add((d[1], -d[0]))
        candidates.add((-d[1], d[0]))
    feasible = [
        c
        for c in candidates
        if c[0] >= 0 and c[1] >= 0 and (c[0] or c[1])
        and all(d[0] * c[0] + d[1] * c[1] >= 0 for d in inequalities)
    ]
    if not feasible:
        raise ConsistencyError("cone has no boundary rays")
    feasible = sorted({_primitive(c) for c in feasible})

    def angle(c):
        return (1, 0) if c[0] == 0 else (0, Fraction(c[1], c[0]))

    feasible.sort(key=angle)
    return feasible[0], feasible[-1]


def cone_of_weight(ideal: OrbitIdeal, w) -> GroebnerCone:
    """The maximal cone containing the weight w (interior required).

    The reduced basis is computed under the weighted order with the
    degree-lexicographic x > y tiebreak; the cone inequalities come from
    comparing each basis leading term against the other terms.
    """
    w0, w1 = Fraction(w[0]), Fraction(w[1])
    if w0 <= 0 or w1 <= 0:
        raise InputError("weight must lie in the open quadrant")
    scale = w0.denominator * w1.denominator // gcd(w0.denominator, w1.denominator)
    w = (int(w0 * scale), int(w1 * scale))
    order = WeightedOrder(weights=w)
    basis = buchberger(list(ideal.gens), order)
    inequalities = set()
    for g in basis:
        lead, _ = leading_term(g, order)
        top = weight_of(lead, w)
        for m in g.terms:
            if m == lead:
                continue
            if weight_of(m, w) == top:
                raise BoundaryWeightError(
                    f"weight {w} ties terms of a basis element"
                )
            d = (lead[0] - m[0], lead[1] - m[1])
            inequalities.add(_primitive(d))
    inequalities = tuple(sorted(inequalities))
    lower, upper = _cone_rays(inequalities)
    return GroebnerCone(
        weight=w,
        basis=tuple(basis),
        inequalities=inequalities,
        lower_ray=lower,
        upper_ray=upper,
    )


def groebner_fan(s: Singularity, point=(1, 1)):
    """All maximal cones, swept from the x-axis to the y-axis, plus the fan
    of their boundary rays (scaled compatibly with the toric module)."""
    ideal = orbit_ideal(s, point)
    n = s.n
    cones = []
    w = (n * n, 1)
    guard = 2 * n + 4
    while True:
        if len(cones) > guard:
            raise ConsistencyError("cone sweep failed to terminate")
        cone = cone_of_weight(ideal, w)
        if cones and cones[-1].upper_ray != cone.lower_ray:
            raise ConsistencyError("adjacent cones do not share a ray")
        if not cones and cone.lower_ray != (1, 0):
            raise ConsistencyError("first cone does not touch the x-axis")
        cones.append(cone)
        a, b = cone.upper_ray
        if (a, b) == (0, 1):
            break
        w = (2 * n * n * a, 2 * n * n * b + 1)
    if len(cones) != curve_count(s) + 1:
        raise ConsistencyError("cone count does not match the curve count")
    rays = [(n, 0)]
    rays += [c.upper_ray for c in cones[:-1]]
    rays.append((0, n))
    fan = Fan2D(
        rays=tuple(RationalRay(scaled=r, den=n) for r in rays), den=n
    )
    return fan, cones


def fans_equal(a: Fan2D, b: Fan2D) -> bool:
    """Equality as collections of ray directions (primitive integer form)."""
    return a.primitive_ray_set() == b.primitive_ray_set()
