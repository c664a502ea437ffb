"""Lattice-cone model: dual-cone Hilbert basis and the resolution fan.

The working lattice is N = Z^2 + Z*(1/n)(1, q) with the cone the closed
positive quadrant; this is unimodularly equivalent to the usual cone
spanned by (n, n-q) and (0, 1) over Z^2, and has the advantage that fan
rays compare coordinate-free with the Groebner-fan rays.  Scaling by n
identifies N with the sublattice {(A, B) in Z^2 : B = q*A (mod n)}, which
is how rays are stored (integer vector plus the denominator n).

The resolution fan's rays are the lattice points on the boundary polyline
of the convex hull of the nonzero lattice points of the quadrant; points
interior to a hull edge carry self-intersection 2, corners more.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from .cfrac import Singularity, hj_expand
from .errors import ConsistencyError, InputError


@dataclass(frozen=True)
class RationalRay:
    """A ray direction stored as the integer vector n*direction."""

    scaled: tuple[int, int]
    den: int

    @property
    def primitive(self) -> tuple[int, int]:
        a, b = self.scaled
        g = gcd(a, b)
        return (a // g, b // g)

    @property
    def direction(self):
        a, b = self.scaled
        return (Fraction(a, self.den), Fraction(b, self.den))


def _angle_key(scaled):
    # sorts rays of the closed quadrant by increasing angle from the x-axis
    a, b = scaled
    if a == 0:
        return (1, 0)
    return (0, Fraction(b, a))


@dataclass(frozen=True)
class Fan2D:
    """Rays sorted by angle from the x-axis, boundary rays included;
    maximal cones are the consecutive ray pairs."""

    rays: tuple[RationalRay, ...]
    den: int

    def __post_init__(self):
        keys = [_angle_key(r.scaled) for r in self.rays]
        if keys != sorted(keys) or len(set(keys)) != len(keys):
            raise InputError("fan rays must be strictly sorted by angle")

    @property
    def interior_rays(self) -> tuple[RationalRay, ...]:
        return self.rays[1:-1]

    @property
    def maximal_cones(self):
        return tuple(zip(self.rays, self.rays[1:]))

    def primitive_ray_set(self):
        return frozenset(r.primitive for r in self.rays)

    def serialize(self):
        return {"den": self.den, "rays": [list(r.scaled) for r in self.rays]}


def _min_b_staircase(s: Singularity):
    """For each A in 0..n the smallest B >= 0 (excluding the origin) with
    (A, B) in the scaled lattice."""
    n, q = s.n, s.q
    points = []
    for a in range(n + 1):
        b = (q * a) % n
        if a == 0:
            b = n
        points.append((a, b))
    return points


def hilbert_basis_dual(s: Singularity) -> list[tuple[int, int]]:
    """Irreducible elements of the semigroup of invariant-monomial
    exponents {(a, b) : a + q*b = 0 (mod n)}, largest x-power first.

    Every irreducible has both coordinates <= n, so a box search suffices.
    """
    n, q = s.n, s.q
    members = set()
    for a in range(n + 1):
        for b in range(n + 1):
            if (a or b) and (a + q * b) % n == 0:
                members.add((a, b))
    basis = []
    for a, b in members:
        reducible = any(
            (a - c, b - d) in members
            for c, d in members
            if c <= a and d <= b and (c, d) != (a, b)
        )
        if not reducible:
            basis.append((a, b))
    basis.sort(key=lambda p: (-p[0], p[1]))
    return basis


def resolution_fan(s: Singularity) -> Fan2D:
    """The minimal resolution fan: boundary rays plus the lattice points on
    the hull boundary of the nonzero quadrant lattice points."""
    staircase = _min_b_staircase(s)

    def cross(o, p, r):
        return (p[0] - o[0]) * (r[1] - o[1]) - (p[1] - o[1]) * (r[0] - o[0])

    hull = []
    for p in staircase:
        while len(hull) >= 2 and cross(hull[-2], hull[-1], p) <= 0:
            hull.pop()
        hull.append(p)
    rays = []
    corner = 0
    for p in staircase:
        while corner + 1 < len(hull) and hull[corner + 1][0] < p[0]:
            corner += 1
        if p == hull[corner] or (
            corner + 1 < len(hull) and cross(hull[corner], hull[corner + 1], p) == 0
        ):
            rays.append(p)
    rays.reverse()  # staircase runs from the y-axis down; fans sort from the x-axis up
    fan = Fan2D(
        rays=tuple(RationalRay(scaled=p, den=s.n) for p in rays),
        den=s.n,
    )
    _check_unimodular(fan)
    return fan


def _check_unimodular(fan: Fan2D):
    # consecutive rays must span the working lattice: |det| = n in scaled coords
    for r1, r2 in fan.maximal_cones:
        (a1, b1), (a2, b2) = r1.scaled, r2.scaled
        if abs(a1 * b2 - b1 * a2) != fan.den:
            raise ConsistencyError("fan cone is not unimodular in the lattice")


def self_intersections(fan: Fan2D) -> tuple[int, ...]:
    """Recover the expansion entries b_k from the ray recursion
    v_{k-1} + v_{k+1} = b_k * v_k, walking from the y-axis to the x-axis."""
    rays = [r.scaled for r in reversed(fan.rays)]
    entries = []
    for k in range(1, len(rays) - 1):
        prev, cur, nxt = rays[k - 1], rays[k], rays[k + 1]
        total = (prev[0] + nxt[0], prev[1] + nxt[1])
        b = None
        for tc, cc in zip(total, cur):
            if cc:
                if tc % cc:
                    raise ConsistencyError("non-integral ray recursion quotient")
                q = tc // cc
                if b is None:
                    b = q
                elif b != q:
                    raise ConsistencyError("inconsistent ray recursion quotient")
            elif tc:
                raise ConsistencyError("ray recursion does not close")
        entries.append(b)
    return tuple(entries)


def fan_matches_expansion(s: Singularity) -> bool:
    return self_intersections(resolution_fan(s)) == hj_expand(s.n, s.q)
