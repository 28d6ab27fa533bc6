"""Convex sets over a valued field.

A nonempty convex set is a translate of a module of the form

    K-span(free generators) + O-span(integral generators),

and the empty set is an explicit variant.  Operations include hulls of
finite point sets, quasi-balls, Radon certificates, Caratheodory reduction,
membership, intersection, subset and equality tests, and flag and box
presentations of the module part.
"""
from __future__ import annotations

from typing import Iterable, List, Optional, Sequence, Tuple, Union

from .field import Field, FieldElement
from .linalg import (
    FREE,
    INTEGRAL,
    DimensionError,
    LinearSolver,
    Matrix,
    OrthoBasis,
    ScaleSystem,
    Vector,
    coords,
    orthogonalize,
)

FULL = "full"
ONLY_INFINITY = "only-infinity"


def _groom_integral(field: Field, v: Vector) -> Vector:
    """Unit-rescale a generator; the O-span is unchanged."""
    return v.groomed()


def _groom_free(field: Field, v: Vector) -> Vector:
    """Rescale a line generator to integral entries of least valuation 0."""
    w = _groom_integral(field, v)
    if w.is_zero:
        return w
    shift = w.val().value
    if shift:
        w = w.scale(field.uniformizer_pow(-shift))
    return w


def _independent_subset(field: Field, vectors: Sequence[Vector]) -> List[Vector]:
    """Keep a maximal independent subset, repeatedly dropping, for each
    dependency found, the coefficient of minimal valuation (lowest index on
    ties).  Dropped vectors are O-combinations of the survivors, so both the
    K-span and the O-span are preserved."""
    work = [v for v in vectors]
    while True:
        work = [v for v in work if not v.is_zero]
        if not work:
            return []
        A = Matrix.from_cols(field, work, nrows=work[0].dim)
        ker = LinearSolver(A).kernel()
        if not ker:
            return work
        a = ker[0]
        best = 0
        best_val = a[0].val()
        for i in range(1, len(a.coords)):
            v = a[i].val()
            if v < best_val:
                best, best_val = i, v
        del work[best]


class MixedModule:
    """K-span of the free generators plus O-span of the integral ones.

    Construction drops zero generators, reduces each generator list to a
    linearly independent one (preserving spans via the minimal-valuation
    drop rule), and discards integral generators already inside the free
    subspace.  A normal form (free basis plus a valuation-orthogonal basis
    of the integral part reduced modulo the free pivots) and a reusable
    scale-constrained solver are cached lazily.
    """

    __slots__ = ("field", "dim", "free_gens", "integral_gens", "_nf", "_sys")

    def __init__(self, field: Field, dim: int,
                 free_gens: Sequence[Vector] = (),
                 integral_gens: Sequence[Vector] = ()):
        for v in list(free_gens) + list(integral_gens):
            if v.dim != dim:
                raise DimensionError("generator dimension mismatch")
            if v.field != field:
                raise ValueError("generator from a different field")
        self.field = field
        self.dim = dim
        free = _independent_subset(field, [_groom_free(field, v) for v in free_gens])
        self.free_gens = tuple(free)
        groomed = [_groom_integral(field, v) for v in integral_gens]
        if free:
            free_basis = orthogonalize(free, field=field)
            kept = []
            for g in groomed:
                _, rest = free_basis.reduce(g)
                if not rest.is_zero:
                    kept.append(g)
        else:
            kept = [g for g in groomed if not g.is_zero]
        self.integral_gens = tuple(_independent_subset(field, kept))
        self._nf = None
        self._sys = None

    # cached presentations ---------------------------------------------------

    def normal_form(self) -> Tuple[OrthoBasis, OrthoBasis]:
        """(free basis, orthogonal basis of the integral part reduced modulo
        the free pivots).  The two pivot sets are disjoint."""
        if self._nf is None:
            free_basis = orthogonalize(self.free_gens, field=self.field)
            reduced = []
            for g in self.integral_gens:
                _, rest = free_basis.reduce(g)
                reduced.append(rest)
            int_basis = orthogonalize(reduced, field=self.field)
            self._nf = (free_basis, int_basis)
        return self._nf

    def system(self) -> ScaleSystem:
        if self._sys is None:
            cols = list(self.free_gens) + list(self.integral_gens)
            G = Matrix.from_cols(self.field, cols, nrows=self.dim)
            scales = [FREE] * len(self.free_gens) + [INTEGRAL] * len(self.integral_gens)
            self._sys = ScaleSystem(G, scales)
        return self._sys

    # membership -------------------------------------------------------------

    def member(self, x: Vector) -> bool:
        """Membership decided through the scale-constrained solver."""
        if x.dim != self.dim:
            raise DimensionError("point dimension mismatch")
        return self.system().solve_box(x) is not None

    def member_nf(self, x: Vector) -> bool:
        """Membership decided through the cached normal form."""
        if x.dim != self.dim:
            raise DimensionError("point dimension mismatch")
        free_basis, int_basis = self.normal_form()
        _, rest = free_basis.reduce(x)
        return int_basis.spans_integrally(rest)

    def contains_line(self, v: Vector) -> bool:
        """Whether the whole line K*v lies inside the module."""
        free_basis, _ = self.normal_form()
        _, rest = free_basis.reduce(v)
        return rest.is_zero

    @property
    def is_zero_module(self) -> bool:
        return not self.free_gens and not self.integral_gens


class ConvexSet:
    """Either empty, or translate + module."""

    __slots__ = ("field", "dim", "translate", "module")

    def __init__(self, field: Field, dim: int,
                 translate: Optional[Vector], module: Optional[MixedModule]):
        self.field = field
        self.dim = dim
        self.translate = translate
        self.module = module
        if (translate is None) != (module is None):
            raise ValueError("translate and module must be both present or both absent")
        if translate is not None and translate.dim != dim:
            raise DimensionError("translate dimension mismatch")

    @classmethod
    def empty(cls, field: Field, dim: int) -> "ConvexSet":
        return cls(field, dim, None, None)

    @classmethod
    def of(cls, translate: Vector, module: MixedModule) -> "ConvexSet":
        return cls(module.field, module.dim, translate, module)

    @classmethod
    def point(cls, x: Vector) -> "ConvexSet":
        return cls(x.field, x.dim, x, MixedModule(x.field, x.dim))

    @property
    def is_empty(self) -> bool:
        return self.translate is None

    def a_point(self) -> Vector:
        if self.is_empty:
            raise ValueError("the empty set has no points")
        return self.translate

    def contains(self, x: Vector) -> bool:
        if self.is_empty:
            return False
        if x.dim != self.dim:
            raise DimensionError("point dimension mismatch")
        return self.module.member(x - self.translate)

    def translate_by(self, a: Vector) -> "ConvexSet":
        if self.is_empty:
            return self
        return ConvexSet.of(self.translate + a, self.module)

    def __repr__(self) -> str:
        if self.is_empty:
            return f"ConvexSet(empty, dim={self.dim})"
        return (
            f"ConvexSet(t={self.translate!r}, free={len(self.module.free_gens)}, "
            f"integral={len(self.module.integral_gens)})"
        )


# ---------------------------------------------------------------------------
# constructors

def conv_hull(points: Sequence[Vector], field: Optional[Field] = None,
              dim: Optional[int] = None) -> ConvexSet:
    """Convex hull of finitely many points: the first point translated by
    the O-span of the differences to it."""
    if not points:
        if field is None or dim is None:
            raise ValueError("empty hull needs an explicit field and dimension")
        return ConvexSet.empty(field, dim)
    base = points[0]
    diffs = [p - base for p in points[1:]]
    module = MixedModule(base.field, base.dim, (), diffs)
    return ConvexSet.of(base, module)


def quasi_ball(center: Vector, radius: Union[int, str]) -> ConvexSet:
    """Points whose difference from the center has valuation >= radius;
    radius FULL gives the whole space."""
    field, d = center.field, center.dim
    units = [Vector.unit(field, d, i) for i in range(d)]
    if radius == FULL:
        module = MixedModule(field, d, units, ())
    elif isinstance(radius, int):
        pi_r = field.uniformizer_pow(radius)
        module = MixedModule(field, d, (), [u.scale(pi_r) for u in units])
    else:
        raise ValueError(f"bad radius {radius!r}")
    return ConvexSet.of(center, module)


# ---------------------------------------------------------------------------
# Radon and Caratheodory

class RadonCertificate:
    """Writes one point of a list as an integral combination, summing to 1,
    of the remaining points."""

    __slots__ = ("index", "coefficients")

    def __init__(self, index: int, coefficients: Sequence[FieldElement]):
        self.index = index
        self.coefficients = tuple(coefficients)

    def __repr__(self) -> str:
        return f"RadonCertificate(index={self.index}, coefficients={list(self.coefficients)!r})"


class TooFewPointsError(ValueError):
    """Not enough points for the requested construction."""


def radon_point(points: Sequence[Vector]) -> RadonCertificate:
    """For at least d+2 points in dimension d, certify that one of them is
    an integral convex combination of the others.

    A nontrivial affine dependency sum a_i x_i = 0, sum a_i = 0 is computed
    and the index of minimal-valuation a_i (lowest index on ties) is
    eliminated; dividing by it makes every remaining coefficient integral.
    """
    if not points:
        raise TooFewPointsError("no points given")
    field = points[0].field
    d = points[0].dim
    n = len(points)
    if n < d + 2:
        raise TooFewPointsError(f"need at least {d + 2} points in dimension {d}, got {n}")
    rows = [[p[r] for p in points] for r in range(d)]
    rows.append([field.one] * n)
    A = Matrix(field, rows)
    ker = LinearSolver(A).kernel()
    if not ker:
        raise AssertionError("affine dependency must exist for d+2 points")
    a = ker[0]
    best = 0
    best_val = a[0].val()
    for i in range(1, n):
        v = a[i].val()
        if v < best_val:
            best, best_val = i, v
    pivot = a[best]
    coeffs = [-(a[j] / pivot) for j in range(n) if j != best]
    return RadonCertificate(best, coeffs)


def validate_radon(points: Sequence[Vector], cert: RadonCertificate) -> bool:
    """Recheck a certificate from scratch: integrality, sum 1, and the
    combination identity."""
    n = len(points)
    if not (0 <= cert.index < n) or len(cert.coefficients) != n - 1:
        return False
    field = points[0].field
    if any(not c.is_integral for c in cert.coefficients):
        return False
    total = field.zero
    for c in cert.coefficients:
        total = total + c
    if total != field.one:
        return False
    acc = Vector.zero(field, points[0].dim)
    others = [p for j, p in enumerate(points) if j != cert.index]
    for c, p in zip(cert.coefficients, others):
        acc = acc + p.scale(c)
    return acc == points[cert.index]


def caratheodory_indices(points: Sequence[Vector]) -> List[int]:
    """Indices of a sublist of at most d+1 points with the same hull,
    obtained by repeatedly deleting the point a Radon certificate rewrites."""
    if not points:
        return []
    d = points[0].dim
    live = list(range(len(points)))
    while len(live) > d + 1:
        cert = radon_point([points[i] for i in live])
        del live[cert.index]
    return live


def caratheodory_reduce(points: Sequence[Vector]) -> List[Vector]:
    return [points[i] for i in caratheodory_indices(points)]


# ---------------------------------------------------------------------------
# comparisons

def _module_has(module: MixedModule, x: Vector) -> bool:
    return module.member_nf(x)


def subset(c1: ConvexSet, c2: ConvexSet) -> bool:
    """Whether c1 is contained in c2.

    Containment of the free generators is decided exactly: K*v lies in a
    module precisely when v falls in its free subspace, which is read off
    the normal form.  (Probing finitely many scalings of v cannot certify
    this: a module like O * u/p^2 absorbs the scalings u/p and u/p^2 of u
    without containing the line K*u.)
    """
    if c1.is_empty:
        return True
    if c2.is_empty:
        return False
    if c1.dim != c2.dim:
        raise DimensionError("ambient dimension mismatch")
    if not c2.contains(c1.translate):
        return False
    m2 = c2.module
    for v in c1.module.free_gens:
        if not m2.contains_line(v):
            return False
    for g in c1.module.integral_gens:
        if not _module_has(m2, g):
            return False
    return True


def equals(c1: ConvexSet, c2: ConvexSet) -> bool:
    return subset(c1, c2) and subset(c2, c1)


# ---------------------------------------------------------------------------
# intersection

def _coset_shrink(module: "MixedModule", x: Vector) -> Vector:
    """A small representative of the coset x + module.

    Subtracts the full free-span component and the integral parts of the
    coefficients against the module's normal form; what is removed lies in
    the module, so the set x + module is unchanged.  Keeps coordinate sizes
    from compounding through chained intersections.
    """
    free_b, int_b = module.normal_form()
    if not len(free_b) and not len(int_b):
        return x
    _, rest = free_b.reduce(x)
    cs, out = int_b.reduce(rest)
    for c, u in zip(cs, int_b.vectors):
        f = c.fractional_part()
        if not f.is_zero:
            out = out + u.scale(f)
    return out


def intersect(c1: ConvexSet, c2: ConvexSet) -> ConvexSet:
    """Exact intersection.

    Nonempty exactly when the translate difference lies in the sum of the
    two modules; the common point and the intersection module are read off
    a scale-constrained system over the concatenated generators.
    """
    if c1.is_empty:
        return c1
    if c2.is_empty:
        return c2
    if c1.dim != c2.dim or c1.field != c2.field:
        raise DimensionError("cannot intersect sets from different ambients")
    field, d = c1.field, c1.dim
    m1, m2 = c1.module, c2.module
    cols: List[Vector] = []
    scales: List[str] = []
    n1 = len(m1.free_gens) + len(m1.integral_gens)
    for v in m1.free_gens:
        cols.append(v)
        scales.append(FREE)
    for v in m1.integral_gens:
        cols.append(v)
        scales.append(INTEGRAL)
    for v in m2.free_gens:
        cols.append(-v)
        scales.append(FREE)
    for v in m2.integral_gens:
        cols.append(-v)
        scales.append(INTEGRAL)
    G = Matrix.from_cols(field, cols, nrows=d)
    sys = ScaleSystem(G, scales)
    witness = sys.solve_box(c2.translate - c1.translate)
    if witness is None:
        return ConvexSet.empty(field, d)
    gens1 = list(m1.free_gens) + list(m1.integral_gens)

    def image1(c: Vector) -> Vector:
        acc = Vector.zero(field, d)
        for coeff, g in zip(c.coords[:n1], gens1):
            if not coeff.is_zero:
                acc = acc + g.scale(coeff)
        return acc

    free = [image1(v) for v in sys.free_part]
    integral = [image1(v) for v in sys.integral_part]
    mod = MixedModule(field, d, free, integral)
    point = _coset_shrink(mod, c1.translate + image1(witness))
    return ConvexSet.of(point, mod)


# ---------------------------------------------------------------------------
# flag and box presentations

class FlagForm:
    """Ordered presentation of a module: full lines first, then integral
    directions u_i normalized to valuation 0 with weights gamma_i, so the
    module is  { sum c_i u_i :  c unrestricted on full entries,
    val(c_i) >= gamma_i on the others }."""

    __slots__ = ("field", "dim", "entries")

    def __init__(self, field: Field, dim: int,
                 entries: Sequence[Tuple[Vector, Union[str, int]]]):
        self.field = field
        self.dim = dim
        self.entries = tuple(entries)

    def gamma_multiset(self) -> Tuple[int, ...]:
        return tuple(sorted(g for _, g in self.entries if g != FULL))

    def member(self, x: Vector) -> bool:
        """Membership via coordinates in the entry vectors plus the
        per-entry valuation constraint.  Solves a fresh linear system, so it
        is an independent check against the solver-based membership."""
        if not self.entries:
            return x.is_zero
        cs = coords([v for v, _ in self.entries], x, field=self.field)
        if cs is None:
            return False
        for c, (_, delta) in zip(cs.coords, self.entries):
            if delta == FULL:
                continue
            if not c.val() >= delta:
                return False
        return True


def flag_decompose(c: ConvexSet) -> FlagForm:
    """Flag presentation of the module part of a nonempty convex set."""
    if c.is_empty:
        raise ValueError("the empty set has no flag presentation")
    field = c.field
    free_basis, int_basis = c.module.normal_form()
    entries: List[Tuple[Vector, Union[str, int]]] = []
    for v in free_basis.vectors:
        entries.append((v, FULL))
    for u, g in zip(int_basis.vectors, int_basis.gammas):
        entries.append((u.scale(field.uniformizer_pow(-g)), g))
    return FlagForm(field, c.dim, entries)


class BoxPresentation:
    """An affine image of a product of one-dimensional valuation sets.

    ``deltas[i]`` is FULL, an integer g (valuation at least g), or
    ONLY_INFINITY (the coordinate is pinned to 0); the set equals
    translate + matrix * (product of the coordinate sets).
    """

    __slots__ = ("matrix", "translate", "deltas")

    def __init__(self, matrix: Matrix, translate: Vector,
                 deltas: Sequence[Union[str, int]]):
        self.matrix = matrix
        self.translate = translate
        self.deltas = tuple(deltas)


def box_presentation(c: ConvexSet) -> BoxPresentation:
    """Box presentation of a nonempty convex set, padding unused directions
    with ONLY_INFINITY columns."""
    if c.is_empty:
        raise ValueError("the empty set has no box presentation")
    field, d = c.field, c.dim
    flag = flag_decompose(c)
    cols = [v for v, _ in flag.entries]
    deltas: List[Union[str, int]] = [delta for _, delta in flag.entries]
    while len(cols) < d:
        cols.append(Vector.zero(field, d))
        deltas.append(ONLY_INFINITY)
    return BoxPresentation(Matrix.from_cols(field, cols, nrows=d), c.translate, deltas)
