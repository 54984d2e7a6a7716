"""Exact rational convex geometry.

Cones and polyhedra with tail cones, their duality, Minkowski sums, face
data, fanwise-linear functions and the conversions between the two views.

A :class:`Cone` carries a canonical double description: primitive,
lexicographically sorted extreme rays plus a Hermite-normal-form basis of
the lineality space on the generator side, and facet normals plus span
equations on the inequality side.  Two equal cones always compare equal as
dataclasses, no matter how they were constructed.

A :class:`Polyhedron` is stored as the cone over the polyhedron embedded
at height one (the last coordinate); every polyhedral operation delegates
to the cone calculus.  Duality of polyhedra containing the origin is then
literally cone duality.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .errors import (
    DimensionMismatch,
    DomainError,
    NotConcave,
    OriginNotContained,
)
from .lattice import (
    Vector,
    RatVector,
    dot,
    hermite_basis,
    identity,
    inverse_unimodular,
    kernel_basis,
    primitive,
    primitive_of_rational,
    quotient_by_sublattice,
    rational_inverse,
    rational_rank,
    smith_normal_form,
    transpose,
    vec_scale,
    vec_sub,
)


class Infinite:
    """Signed infinity for evaluation results; exactly two instances exist."""

    __slots__ = ("positive",)

    def __init__(self, positive: bool):
        self.positive = positive

    def __repr__(self):
        return "+inf" if self.positive else "-inf"

    def __neg__(self):
        return MINUS_INF if self.positive else PLUS_INF

    def __lt__(self, other):
        if self.positive:
            return False
        return other is not MINUS_INF

    def __gt__(self, other):
        if not self.positive:
            return False
        return other is not PLUS_INF

    def __le__(self, other):
        return self is other or self < other

    def __ge__(self, other):
        return self is other or self > other


PLUS_INF = Infinite(True)
MINUS_INF = Infinite(False)


# ---------------------------------------------------------------------------
# double description core
# ---------------------------------------------------------------------------

def _adjacent(i: int, j: int, tights: list[frozenset], dim: int) -> bool:
    common = tights[i] & tights[j]
    if len(common) < dim - 2:
        return False
    return not any(k != i and k != j and common <= t for k, t in enumerate(tights))


def _dd_pointed(dim: int, normals: list[Vector]) -> tuple[Vector, ...]:
    """Extreme rays of {x : <n,x> >= 0 for n in normals} for a pointed cone.

    Standard double description: start from a simplicial subcone cut out by
    a maximal independent subset of the normals, then insert the remaining
    constraints one by one, using the combinatorial adjacency test.
    """
    base_idx: list[int] = []
    base_rows: list[Vector] = []
    for i, n in enumerate(normals):
        if rational_rank(base_rows + [n]) > len(base_rows):
            base_idx.append(i)
            base_rows.append(n)
            if len(base_rows) == dim:
                break
    if len(base_rows) != dim:
        raise DomainError("cone is not pointed (normals do not span)")

    inv_cols = transpose(rational_inverse(base_rows))
    rays: list[Vector] = [primitive_of_rational(col) for col in inv_cols]
    tights: list[frozenset] = [frozenset(base_idx) - {base_idx[j]} for j in range(dim)]

    for c, n in enumerate(normals):
        if c in base_idx:
            continue
        values = [dot(n, r) for r in rays]
        plus = [i for i, v in enumerate(values) if v > 0]
        zero = [i for i, v in enumerate(values) if v == 0]
        minus = [i for i, v in enumerate(values) if v < 0]
        new_rays: list[Vector] = []
        new_tights: list[frozenset] = []
        for i, j in itertools.product(plus, minus):
            if not _adjacent(i, j, tights, dim):
                continue
            combo = vec_sub(vec_scale(values[i], rays[j]), vec_scale(values[j], rays[i]))
            new_rays.append(primitive(combo))
            new_tights.append((tights[i] & tights[j]) | {c})
        keep_rays = [rays[i] for i in plus] + [rays[i] for i in zero] + new_rays
        keep_tights = [tights[i] for i in plus] + [tights[i] | {c} for i in zero] + new_tights
        rays, tights = keep_rays, keep_tights

    # defensive extremality filter: tight normals must cut out a single line
    result = {
        r
        for r, t in zip(rays, tights)
        if rational_rank([normals[i] for i in sorted(t)]) == dim - 1 or dim == 1
    }
    return tuple(sorted(result))


def _dd(dim: int, normals: Iterable[Sequence]) -> tuple[tuple[Vector, ...], tuple[Vector, ...]]:
    """Canonical (rays, lineality) of {x : <n,x> >= 0 for all n}."""
    cleaned = sorted({primitive_of_rational(n) for n in normals if any(x != 0 for x in n)})
    if dim == 0:
        return (), ()
    if not cleaned:
        return (), hermite_basis(identity(dim))
    lineality = hermite_basis(kernel_basis(cleaned))
    if not lineality:
        return _dd_pointed(dim, cleaned), ()
    proj, lift = quotient_by_sublattice(lineality)
    lift_cols = transpose(lift)
    quotient_normals = sorted({primitive(tuple(dot(n, col) for col in lift_cols)) for n in cleaned})
    quotient_rays = _dd_pointed(dim - len(lineality), quotient_normals)
    lifted = tuple(sorted(primitive(tuple(dot(row, r) for row in lift)) for r in quotient_rays))
    return lifted, lineality


# ---------------------------------------------------------------------------
# cones
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Cone:
    """Canonical double description of a rational polyhedral cone.

    The cone is cone(rays) + span(lineality) and simultaneously
    {x : <f,x> >= 0 for f in facets, <e,x> = 0 for e in equations}.
    """

    ambient_dim: int
    rays: tuple[Vector, ...]
    lineality: tuple[Vector, ...]
    facets: tuple[Vector, ...]
    equations: tuple[Vector, ...]

    def __post_init__(self):
        for r in self.rays:
            if any(dot(f, r) < 0 for f in self.facets) or any(dot(e, r) != 0 for e in self.equations):
                raise DomainError("cone descriptions are inconsistent on a ray")
        for l in self.lineality:
            if any(dot(f, l) != 0 for f in self.facets) or any(dot(e, l) != 0 for e in self.equations):
                raise DomainError("cone descriptions are inconsistent on the lineality")

    @property
    def dim(self) -> int:
        return self.ambient_dim - len(self.equations)

    @property
    def is_pointed(self) -> bool:
        return not self.lineality

    @property
    def is_full_dimensional(self) -> bool:
        return not self.equations

    def generators(self) -> tuple[Vector, ...]:
        """Rays plus both signs of the lineality basis."""
        return self.rays + self.lineality + tuple(vec_scale(-1, l) for l in self.lineality)

    def is_zero(self) -> bool:
        return not self.rays and not self.lineality

    def contains(self, point: Sequence) -> bool:
        if len(point) != self.ambient_dim:
            raise DimensionMismatch("point has wrong length")
        return all(dot(f, point) >= 0 for f in self.facets) and all(
            dot(e, point) == 0 for e in self.equations
        )

    def relative_interior_contains(self, point: Sequence) -> bool:
        if len(point) != self.ambient_dim:
            raise DimensionMismatch("point has wrong length")
        return all(dot(f, point) > 0 for f in self.facets) and all(
            dot(e, point) == 0 for e in self.equations
        )

    def dual(self) -> "Cone":
        """{y : <y, c> >= 0 for all c in the cone}; swaps the two descriptions."""
        return Cone(self.ambient_dim, self.facets, self.equations, self.rays, self.lineality)

    def intersect(self, other: "Cone") -> "Cone":
        if self.ambient_dim != other.ambient_dim:
            raise DimensionMismatch("intersecting cones of different ambient dims")
        return cone_from_inequalities(
            self.ambient_dim, self.facets + other.facets, self.equations + other.equations
        )

    def minkowski_sum(self, other: "Cone") -> "Cone":
        if self.ambient_dim != other.ambient_dim:
            raise DimensionMismatch("summing cones of different ambient dims")
        return cone_from_generators(
            self.ambient_dim, self.rays + other.rays, self.lineality + other.lineality
        )

    def faces(self) -> tuple["Cone", ...]:
        """All faces, the cone itself and its minimal face included."""
        seen = {self}
        stack = [self]
        while stack:
            current = stack.pop()
            for f in current.facets:
                child = cone_from_inequalities(
                    self.ambient_dim, current.facets, current.equations + (f,)
                )
                if child not in seen:
                    seen.add(child)
                    stack.append(child)
        return tuple(sorted(seen, key=lambda c: (c.dim, c.rays, c.lineality)))

    def facet_cones(self) -> tuple["Cone", ...]:
        return tuple(
            cone_from_inequalities(self.ambient_dim, self.facets, self.equations + (f,))
            for f in self.facets
        )


def cone_from_inequalities(
    dim: int, normals: Iterable[Sequence[int]] = (), equations: Iterable[Sequence[int]] = ()
) -> Cone:
    """The cone {x : <n,x> >= 0, <e,x> = 0} in canonical form."""
    eqs = list(equations)
    all_normals = list(normals) + eqs + [vec_scale(-1, e) for e in eqs]
    rays, lineality = _dd(dim, all_normals)
    facets, span_eqs = _dd(dim, list(rays) + list(lineality) + [vec_scale(-1, l) for l in lineality])
    return Cone(dim, rays, lineality, facets, span_eqs)


def cone_from_generators(
    dim: int, rays: Iterable[Sequence[int]] = (), lineality: Iterable[Sequence[int]] = ()
) -> Cone:
    """The cone generated by the given rays and lines, in canonical form."""
    lin = list(lineality)
    gens = list(rays) + lin + [vec_scale(-1, l) for l in lin]
    facets, equations = _dd(dim, gens)
    out_rays, out_lin = _dd(dim, list(facets) + list(equations) + [vec_scale(-1, e) for e in equations])
    return Cone(dim, out_rays, out_lin, facets, equations)


def zero_cone(dim: int) -> Cone:
    return cone_from_generators(dim, ())


# ---------------------------------------------------------------------------
# triangulation and Hilbert bases
# ---------------------------------------------------------------------------

def triangulate(cone: Cone) -> tuple[tuple[Vector, ...], ...]:
    """Pulling triangulation of a pointed cone into simplicial pieces.

    Each piece is returned as a tuple of linearly independent extreme rays;
    the pieces cover the cone with disjoint relative interiors.
    """
    if cone.lineality:
        raise DomainError("triangulation requires a pointed cone")
    if not cone.rays:
        return ()
    if rational_rank(cone.rays) == len(cone.rays):
        return (cone.rays,)
    apex = cone.rays[0]
    pieces = []
    for f in cone.facets:
        if dot(f, apex) == 0:
            continue
        facet_rays = tuple(r for r in cone.rays if dot(f, r) == 0)
        sub = cone_from_generators(cone.ambient_dim, facet_rays)
        for simplex in triangulate(sub):
            pieces.append(tuple(sorted(simplex + (apex,))))
    return tuple(pieces)


def _parallelepiped_points(simplex: Sequence[Vector]) -> list[Vector]:
    """Nonzero lattice points of {sum t_i r_i : 0 <= t_i < 1}."""
    k = len(simplex)
    cols = transpose(simplex)  # ambient x k
    snf = smith_normal_form(cols)
    diag = [snf.diagonal[i][i] for i in range(k)]
    u_inv = inverse_unimodular(snf.left)
    v = snf.right
    v_inv = inverse_unimodular(v)
    ranges = []
    for i in range(k):
        lo = sum(min(0, a) for a in v_inv[i])
        hi = sum(max(0, a) for a in v_inv[i])
        ranges.append(range(diag[i] * lo, diag[i] * hi + 1))
    points = []
    for z in itertools.product(*ranges):
        w = [Fraction(z[i], diag[i]) for i in range(k)]
        t = [dot(row, w) for row in v]
        if not all(0 <= ti < 1 for ti in t):
            continue
        if all(zi == 0 for zi in z):
            continue
        padded = tuple(z) + (0,) * (len(u_inv) - k)
        points.append(tuple(dot(row, padded) for row in u_inv))
    return points


def hilbert_basis(cone: Cone) -> tuple[Vector, ...]:
    """Minimal generating set of the semigroup of lattice points of a pointed cone."""
    if cone.lineality:
        raise DomainError("Hilbert basis requires a pointed cone")
    if not cone.rays:
        return ()
    candidates = set(cone.rays)
    for simplex in triangulate(cone):
        candidates.update(_parallelepiped_points(simplex))
    ordered = sorted(candidates)
    basis = []
    for x in ordered:
        reducible = False
        for y in ordered:
            if y == x:
                continue
            diff = vec_sub(x, y)
            if any(diff) and cone.contains(diff):
                reducible = True
                break
        if not reducible:
            basis.append(x)
    return tuple(basis)


# ---------------------------------------------------------------------------
# polyhedra with tail cones
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Polyhedron:
    """conv(vertices) + tail cone, stored as the cone over the set at height 1.

    The last coordinate of ``cone`` is the homogenising height; vertices sit
    at height one, tail directions at height zero.
    """

    cone: Cone

    @property
    def ambient_dim(self) -> int:
        return self.cone.ambient_dim - 1

    @property
    def is_empty(self) -> bool:
        return not any(r[-1] > 0 for r in self.cone.rays) and not any(
            l[-1] != 0 for l in self.cone.lineality
        )

    @property
    def dim(self) -> int:
        if self.is_empty:
            return -1
        return self.cone.dim - 1

    @property
    def vertices(self) -> tuple[RatVector, ...]:
        """Height-one points of the canonical generator description.

        For pointed polyhedra these are exactly the vertices; a polyhedron
        with lineality has none, and the list contains canonical
        representatives modulo the lineality space instead.
        """
        out = [
            tuple(Fraction(x, r[-1]) for x in r[:-1])
            for r in self.cone.rays
            if r[-1] > 0
        ]
        return tuple(sorted(out))

    @property
    def tail_rays(self) -> tuple[Vector, ...]:
        return tuple(r[:-1] for r in self.cone.rays if r[-1] == 0)

    @property
    def lineality(self) -> tuple[Vector, ...]:
        return tuple(l[:-1] for l in self.cone.lineality)

    @property
    def inequalities(self) -> tuple[tuple[Vector, Fraction], ...]:
        """Pairs (n, b) meaning <n, x> >= b, omitting the height facet."""
        out = []
        for f in self.cone.facets:
            if all(x == 0 for x in f[:-1]):
                continue
            n = primitive(f[:-1])
            scale = next(x // y for x, y in zip(f[:-1], n) if y != 0)
            out.append((n, Fraction(-f[-1], scale)))
        return tuple(out)

    @property
    def equations(self) -> tuple[tuple[Vector, Fraction], ...]:
        """Pairs (n, b) meaning <n, x> = b on the whole polyhedron."""
        out = []
        for e in self.cone.equations:
            if all(x == 0 for x in e[:-1]):
                continue
            n = primitive(e[:-1])
            scale = next(x // y for x, y in zip(e[:-1], n) if y != 0)
            out.append((n, Fraction(-e[-1], scale)))
        return tuple(out)

    def contains(self, point: Sequence) -> bool:
        if len(point) != self.ambient_dim:
            raise DimensionMismatch("point has wrong length")
        lifted = tuple(point) + (1,)
        return self.cone.contains(lifted)

    def sort_key(self):
        return (self.cone.dim, self.cone.rays, self.cone.lineality, self.cone.equations)


def empty_polyhedron(dim: int) -> Polyhedron:
    return Polyhedron(zero_cone(dim + 1))


def polyhedron_from_generators(
    dim: int,
    vertices: Iterable[Sequence] = (),
    rays: Iterable[Sequence[int]] = (),
    lineality: Iterable[Sequence[int]] = (),
) -> Polyhedron:
    """conv(vertices) + cone(rays) + span(lineality); empty without vertices."""
    verts = [tuple(Fraction(x) for x in v) for v in vertices]
    if not verts:
        return empty_polyhedron(dim)
    gens = [primitive_of_rational(v + (Fraction(1),)) if any(v) else (0,) * dim + (1,) for v in verts]
    gens += [tuple(r) + (0,) for r in rays]
    lin = [tuple(l) + (0,) for l in lineality]
    return Polyhedron(cone_from_generators(dim + 1, gens, lin))


def polyhedron_from_inequalities(
    dim: int,
    inequalities: Iterable[tuple[Sequence, object]] = (),
    equations: Iterable[tuple[Sequence, object]] = (),
) -> Polyhedron:
    """{x : <n,x> >= b} for pairs (n, b), plus equality pairs."""
    homog = []
    for n, b in inequalities:
        row = tuple(Fraction(x) for x in n) + (Fraction(-b),)
        if any(x != 0 for x in row):
            homog.append(primitive_of_rational(row))
    eqs = []
    for n, b in equations:
        row = tuple(Fraction(x) for x in n) + (Fraction(-b),)
        if any(x != 0 for x in row):
            eqs.append(primitive_of_rational(row))
    height = (0,) * dim + (1,)
    cone = cone_from_inequalities(dim + 1, homog + [height], eqs)
    poly = Polyhedron(cone)
    if poly.is_empty:
        return empty_polyhedron(dim)
    return poly


def dual_polyhedron(poly: Polyhedron) -> Polyhedron:
    """{y : <y, x> >= -1 for all x in the polyhedron}.

    Computed as the dual of the homogenisation cone, which requires (and is
    exactly valid because) the polyhedron contains the origin.
    """
    if poly.is_empty or not poly.contains((0,) * poly.ambient_dim):
        raise OriginNotContained("dual_polyhedron requires 0 in the polyhedron")
    return Polyhedron(poly.cone.dual())


def tail(poly: Polyhedron) -> Cone:
    """Recession cone."""
    return cone_from_generators(poly.ambient_dim, poly.tail_rays, poly.lineality)


def head(poly: Polyhedron) -> Cone:
    """Closure of the cone of nonnegative dilations of the polyhedron."""
    gens = [primitive_of_rational(v) for v in poly.vertices if any(v)]
    gens += list(poly.tail_rays)
    return cone_from_generators(poly.ambient_dim, gens, poly.lineality)


def cone_as_polyhedron(cone: Cone) -> Polyhedron:
    return polyhedron_from_generators(
        cone.ambient_dim, [(0,) * cone.ambient_dim], cone.rays, cone.lineality
    )


def minkowski_sum(a: Polyhedron, b: Polyhedron) -> Polyhedron:
    if a.ambient_dim != b.ambient_dim:
        raise DimensionMismatch("Minkowski sum of different ambient dims")
    if a.is_empty or b.is_empty:
        return empty_polyhedron(a.ambient_dim)
    verts = [tuple(x + y for x, y in zip(u, v)) for u in a.vertices for v in b.vertices]
    return polyhedron_from_generators(
        a.ambient_dim, verts, a.tail_rays + b.tail_rays, a.lineality + b.lineality
    )


def intersect_polyhedra(a: Polyhedron, b: Polyhedron) -> Polyhedron:
    if a.ambient_dim != b.ambient_dim:
        raise DimensionMismatch("intersection of different ambient dims")
    return polyhedron_from_inequalities(
        a.ambient_dim,
        a.inequalities + b.inequalities,
        a.equations + b.equations,
    )


def convex_union(a: Polyhedron, b: Polyhedron) -> Polyhedron:
    """Closed convex hull of the union."""
    if a.ambient_dim != b.ambient_dim:
        raise DimensionMismatch("convex union of different ambient dims")
    if a.is_empty:
        return b
    if b.is_empty:
        return a
    return polyhedron_from_generators(
        a.ambient_dim,
        a.vertices + b.vertices,
        a.tail_rays + b.tail_rays,
        a.lineality + b.lineality,
    )


def translate(poly: Polyhedron, offset: Sequence) -> Polyhedron:
    if poly.is_empty:
        return poly
    shift = tuple(Fraction(x) for x in offset)
    verts = [tuple(x + s for x, s in zip(v, shift)) for v in poly.vertices]
    return polyhedron_from_generators(poly.ambient_dim, verts, poly.tail_rays, poly.lineality)


def dilate(poly: Polyhedron, factor) -> Polyhedron:
    c = Fraction(factor)
    if c <= 0:
        raise DomainError("dilation factor must be positive")
    if poly.is_empty:
        return poly
    verts = [vec_scale(c, v) for v in poly.vertices]
    return polyhedron_from_generators(poly.ambient_dim, verts, poly.tail_rays, poly.lineality)


def eval_min(poly: Polyhedron, u: Sequence):
    """min <x, u> over the polyhedron: a Fraction, MINUS_INF, or PLUS_INF if empty."""
    if len(u) != poly.ambient_dim:
        raise DimensionMismatch("covector has wrong length")
    if poly.is_empty:
        return PLUS_INF
    if any(dot(u, r) < 0 for r in poly.tail_rays) or any(dot(u, l) != 0 for l in poly.lineality):
        return MINUS_INF
    return min(Fraction(dot(u, v)) for v in poly.vertices)


def max_dilation(poly: Polyhedron, v: Sequence):
    """max {t >= 0 : t v in the polyhedron}; requires 0 in the polyhedron."""
    if poly.is_empty or not poly.contains((0,) * poly.ambient_dim):
        raise OriginNotContained("max_dilation requires 0 in the polyhedron")
    for n, b in poly.equations:
        if dot(n, v) != 0:
            return Fraction(0)
    bounds = []
    for n, b in poly.inequalities:
        slope = dot(n, v)
        if slope < 0:
            bounds.append(b / slope)
    if not bounds:
        return PLUS_INF
    return min(bounds)


# ---------------------------------------------------------------------------
# faces of polyhedra
# ---------------------------------------------------------------------------

def proper_faces(poly: Polyhedron) -> tuple[Polyhedron, ...]:
    """All nonempty faces except the polyhedron itself."""
    out = []
    for face_cone in poly.cone.faces():
        if face_cone == poly.cone:
            continue
        face = Polyhedron(face_cone)
        if face.is_empty:
            continue
        out.append(face)
    return tuple(sorted(out, key=Polyhedron.sort_key))


def proper_faces_without_origin(poly: Polyhedron) -> tuple[Polyhedron, ...]:
    """Proper faces not containing 0; input must contain the origin."""
    origin = (0,) * poly.ambient_dim
    if poly.is_empty or not poly.contains(origin):
        raise OriginNotContained("face duality requires 0 in the polyhedron")
    return tuple(f for f in proper_faces(poly) if not f.contains(origin))


def dual_face(poly: Polyhedron, face: Polyhedron) -> Polyhedron:
    """The face of the dual polyhedron paired with a 0-avoiding face.

    The pairing sends a face F to {y in the dual : <y, x> = -1 on F's
    vertices and <y, r> = 0 on F's tail}; it reverses inclusions and
    satisfies dim F + dim F' = ambient_dim - 1.
    """
    dual = dual_polyhedron(poly)
    eqs = list(dual.equations)
    for v in face.vertices:
        eqs.append((v, Fraction(-1)))
    for r in face.tail_rays:
        eqs.append((r, Fraction(0)))
    for l in face.lineality:
        eqs.append((l, Fraction(0)))
    return polyhedron_from_inequalities(poly.ambient_dim, dual.inequalities, eqs)


# ---------------------------------------------------------------------------
# fanwise-linear functions
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class FanwiseLinear:
    """A function linear on each cone of a polyhedral cover of its support.

    Each piece is a pair (cone, functional); the functionals agree on
    overlaps, so evaluation may use any piece containing the argument.
    Outside the support the value is undefined (None).
    """

    ambient_dim: int
    pieces: tuple[tuple[Cone, RatVector], ...]

    def value(self, v: Sequence):
        for cone, functional in self.pieces:
            if cone.contains(v):
                return Fraction(dot(functional, v))
        return None

    def support_generators(self) -> tuple[Vector, ...]:
        gens = set()
        for cone, _ in self.pieces:
            gens.update(cone.generators())
        return tuple(sorted(gens))


def fanwise_linear(
    dim: int, pieces: Iterable[tuple[Cone, Sequence]], validate: bool = True
) -> FanwiseLinear:
    frozen = tuple((cone, tuple(Fraction(x) for x in functional)) for cone, functional in pieces)
    for cone, functional in frozen:
        if cone.ambient_dim != dim or len(functional) != dim:
            raise DimensionMismatch("piece does not match the ambient dimension")
    if validate:
        for (c1, u1), (c2, u2) in itertools.combinations(frozen, 2):
            shared = c1.intersect(c2)
            for g in shared.generators():
                if dot(u1, g) != dot(u2, g):
                    raise DomainError("functionals disagree on a shared face")
    return FanwiseLinear(dim, frozen)


def pwl_of_polyhedron(poly: Polyhedron) -> FanwiseLinear:
    """The support-style function v -> min <poly, v> as a fanwise-linear object.

    The domain is the dual of the tail cone, subdivided by the (inner)
    normal fan: one maximal cone per vertex, carrying that vertex as its
    functional.
    """
    if poly.is_empty:
        raise DomainError("pwl of the empty polyhedron")
    d = poly.ambient_dim
    pieces = []
    for v in poly.vertices:
        ineqs = []
        for w in poly.vertices:
            if w != v:
                ineqs.append(primitive_of_rational(vec_sub(w, v)))
        ineqs.extend(poly.tail_rays)
        eqs = list(poly.lineality)
        cone = cone_from_inequalities(d, ineqs, eqs)
        pieces.append((cone, v))
    return fanwise_linear(d, pieces, validate=False)


def polyhedron_of_pwl(
    f: FanwiseLinear, require_concave: bool = True
) -> tuple[Polyhedron, Polyhedron]:
    """Rebuild the dual pair (nabla_f, delta_f) from a nonnegative fanwise-linear f.

    nabla_f is the convex hull of 0 and the points v / f(v) over support
    generators v, where generators with f(v) = 0 contribute the whole ray.
    delta_f is its dual polyhedron, so that min <delta_f, v> = -f(v) on the
    support whenever f satisfies f(v1 + v2) <= f(v1) + f(v2).
    """
    d = f.ambient_dim
    verts: list[tuple] = [(Fraction(0),) * d]
    rays: list[Vector] = []
    for cone, functional in f.pieces:
        for g in cone.generators():
            val = Fraction(dot(functional, g))
            if val < 0:
                raise DomainError("f must be nonnegative on its support")
            if val == 0:
                rays.append(g)
            else:
                verts.append(tuple(Fraction(x, 1) / val for x in g))
    if require_concave:
        gens = f.support_generators()
        for g1, g2 in itertools.combinations_with_replacement(gens, 2):
            total = f.value(tuple(a + b for a, b in zip(g1, g2)))
            if total is None:
                continue
            v1, v2 = f.value(g1), f.value(g2)
            if total > v1 + v2:
                raise NotConcave(
                    f"f({g1} + {g2}) = {total} exceeds {v1} + {v2}"
                )
    nabla = polyhedron_from_generators(d, verts, rays)
    delta = dual_polyhedron(nabla)
    return nabla, delta
