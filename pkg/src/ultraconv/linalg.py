"""Exact linear algebra over a valued field.

Everything here is generic over :class:`~ultraconv.field.Field` elements and
works by fraction-free-style exact elimination (divisions are exact in the
field).  On top of plain solving this module provides:

* ``orthogonalize``: a valuation-orthogonal basis of the O-span of a list of
  vectors, built by valuation-pivoted elimination,
* ``constrained_kernel`` / ``mixed_solve``: kernels and affine systems where
  a chosen subset of coordinates is constrained to the valuation ring O.
"""
from __future__ import annotations

from typing import Iterable, List, Optional, Sequence, Tuple

from .field import Field, FieldElement, INFINITY, Valuation


class DimensionError(ValueError):
    """Operands have incompatible dimensions."""


class Vector:
    """An immutable vector with entries in one field."""

    __slots__ = ("field", "coords")

    def __init__(self, field: Field, coords: Iterable[FieldElement]):
        self.field = field
        self.coords = tuple(coords)

    @classmethod
    def zero(cls, field: Field, dim: int) -> "Vector":
        return cls(field, (field.zero,) * dim)

    @classmethod
    def unit(cls, field: Field, dim: int, index: int) -> "Vector":
        z, o = field.zero, field.one
        return cls(field, tuple(o if i == index else z for i in range(dim)))

    @classmethod
    def from_ints(cls, field: Field, values: Sequence[int]) -> "Vector":
        return cls(field, tuple(field.from_int(v) for v in values))

    @property
    def dim(self) -> int:
        return len(self.coords)

    def __len__(self) -> int:
        return len(self.coords)

    def __getitem__(self, i: int) -> FieldElement:
        return self.coords[i]

    def __iter__(self):
        return iter(self.coords)

    def __add__(self, other: "Vector") -> "Vector":
        self._check(other)
        return Vector(self.field, tuple(a + b for a, b in zip(self.coords, other.coords)))

    def __sub__(self, other: "Vector") -> "Vector":
        self._check(other)
        return Vector(self.field, tuple(a - b for a, b in zip(self.coords, other.coords)))

    def __neg__(self) -> "Vector":
        return Vector(self.field, tuple(-a for a in self.coords))

    def scale(self, c: FieldElement) -> "Vector":
        c = self.field.coerce(c)
        return Vector(self.field, tuple(c * a for a in self.coords))

    def _check(self, other: "Vector") -> None:
        if self.field != other.field:
            raise ValueError("mixed fields in vector arithmetic")
        if len(self.coords) != len(other.coords):
            raise DimensionError(
                f"dimension mismatch: {len(self.coords)} vs {len(other.coords)}"
            )

    def val(self) -> Valuation:
        """Minimum coordinate valuation; INFINITY for the zero vector."""
        out = INFINITY
        for a in self.coords:
            v = a.val()
            if v < out:
                out = v
        return out

    @property
    def is_zero(self) -> bool:
        return all(a.is_zero for a in self.coords)

    def project(self, indices: Sequence[int]) -> "Vector":
        return Vector(self.field, tuple(self.coords[i] for i in indices))

    def groomed(self) -> "Vector":
        """Rescale by a unit so accumulated denominators cancel.

        Valuations, spans and O-multiples are unchanged; only the size of
        the stored payloads shrinks.
        """
        u = self.field.grooming_unit(list(self.coords))
        if u == self.field.one:
            return self
        return self.scale(u)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Vector):
            return NotImplemented
        return self.field == other.field and self.coords == other.coords

    def __hash__(self):
        return hash((self.field, self.coords))

    def render(self) -> List[str]:
        return [a.render() for a in self.coords]

    def __repr__(self) -> str:
        return "(" + ", ".join(self.render()) + ")"


class Matrix:
    """An immutable matrix with entries in one field, stored by rows."""

    __slots__ = ("field", "nrows", "ncols", "entries")

    def __init__(self, field: Field, rows: Sequence[Sequence[FieldElement]], ncols: Optional[int] = None):
        self.field = field
        self.entries = tuple(tuple(r) for r in rows)
        self.nrows = len(self.entries)
        if self.nrows:
            widths = {len(r) for r in self.entries}
            if len(widths) != 1:
                raise DimensionError("ragged rows")
            self.ncols = widths.pop()
            if ncols is not None and ncols != self.ncols:
                raise DimensionError("declared column count does not match rows")
        else:
            self.ncols = 0 if ncols is None else ncols

    @classmethod
    def from_cols(cls, field: Field, cols: Sequence[Vector], nrows: Optional[int] = None) -> "Matrix":
        if not cols:
            if nrows is None:
                raise DimensionError("cannot infer row count of an empty matrix")
            return cls(field, [()] * nrows, ncols=0)
        m = cols[0].dim
        for c in cols:
            if c.dim != m:
                raise DimensionError("columns of unequal dimension")
        rows = [tuple(c[i] for c in cols) for i in range(m)]
        return cls(field, rows)

    @classmethod
    def identity(cls, field: Field, n: int) -> "Matrix":
        return cls(field, [Vector.unit(field, n, i).coords for i in range(n)])

    def row(self, i: int) -> Vector:
        return Vector(self.field, self.entries[i])

    def col(self, j: int) -> Vector:
        return Vector(self.field, tuple(r[j] for r in self.entries))

    def mul_vec(self, v: Vector) -> Vector:
        if v.dim != self.ncols:
            raise DimensionError("matrix-vector dimension mismatch")
        out = []
        for r in self.entries:
            acc = self.field.zero
            for a, b in zip(r, v.coords):
                if not (a.is_zero or b.is_zero):
                    acc = acc + a * b
            out.append(acc)
        return Vector(self.field, out)

    def render(self) -> List[List[str]]:
        return [[a.render() for a in r] for r in self.entries]

    def __repr__(self) -> str:
        return f"Matrix({self.nrows}x{self.ncols})"


class LinearSolver:
    """Row-reduces a matrix once, then answers A c = b for many b.

    Stores the reduced rows together with the transform T with R = T A, so a
    fresh right-hand side costs one matrix-vector product plus back reads.
    """

    def __init__(self, A: Matrix):
        self.A = A
        field = A.field
        self.field = field
        m, n = A.nrows, A.ncols
        red = [list(r) for r in A.entries]
        trans = [list(Vector.unit(field, m, i).coords) for i in range(m)]
        pivots: List[Tuple[int, int]] = []  # (row, col), rows in order 0..rank-1
        rank = 0
        for col in range(n):
            sel = None
            for r in range(rank, m):
                if not red[r][col].is_zero:
                    sel = r
                    break
            if sel is None:
                continue
            if sel != rank:
                red[rank], red[sel] = red[sel], red[rank]
                trans[rank], trans[sel] = trans[sel], trans[rank]
            inv = red[rank][col].inverse()
            red[rank] = [inv * a for a in red[rank]]
            trans[rank] = [inv * a for a in trans[rank]]
            for r in range(m):
                if r == rank:
                    continue
                f = red[r][col]
                if f.is_zero:
                    continue
                red[r] = [a - f * b for a, b in zip(red[r], red[rank])]
                trans[r] = [a - f * b for a, b in zip(trans[r], trans[rank])]
            pivots.append((rank, col))
            rank += 1
            if rank == m:
                break
        self.reduced = red
        self.transform = trans
        self.pivots = pivots
        self.rank = rank
        pivot_cols = {c for _, c in pivots}
        self.free_cols = [c for c in range(n) if c not in pivot_cols]

    def solve(self, b: Vector) -> Optional[Vector]:
        """A particular solution with free coordinates set to 0, or None."""
        if b.dim != self.A.nrows:
            raise DimensionError("right-hand side dimension mismatch")
        field = self.field
        m, n = self.A.nrows, self.A.ncols
        tb = []
        for r in range(m):
            acc = field.zero
            for a, x in zip(self.transform[r], b.coords):
                if not (a.is_zero or x.is_zero):
                    acc = acc + a * x
            tb.append(acc)
        for r in range(self.rank, m):
            if not tb[r].is_zero:
                return None
        out = [field.zero] * n
        for r, c in self.pivots:
            out[c] = tb[r]
        return Vector(field, out)

    def kernel(self) -> List[Vector]:
        """A basis of the kernel, one vector per free column, in column order."""
        field = self.field
        n = self.A.ncols
        out = []
        for f in self.free_cols:
            v = [field.zero] * n
            v[f] = field.one
            for r, c in self.pivots:
                entry = self.reduced[r][f]
                if not entry.is_zero:
                    v[c] = -entry
            out.append(Vector(field, v))
        return out


def solve(A: Matrix, b: Vector) -> Optional[Tuple[Vector, List[Vector]]]:
    """Particular solution of A c = b plus a kernel basis, or None."""
    s = LinearSolver(A)
    part = s.solve(b)
    if part is None:
        return None
    return part, s.kernel()


def coords(basis: Sequence[Vector], x: Vector, field: Optional[Field] = None) -> Optional[Vector]:
    """Coefficients expressing x in a linearly independent family, or None."""
    if field is None:
        if not basis:
            raise ValueError("cannot infer field from an empty basis")
        field = basis[0].field
    A = Matrix.from_cols(field, list(basis), nrows=x.dim)
    got = solve(A, x)
    if got is None:
        return None
    part, ker = got
    if ker:
        raise ValueError("coords requires a linearly independent family")
    return part


class OrthoBasis:
    """A valuation-orthogonal family: vectors u_i with pivot coordinates
    pi(i) and weights gamma_i = val(u_i) such that

        val(sum c_i u_i) = min_i (val(c_i) + gamma_i).

    Later vectors vanish on every earlier pivot coordinate, so coefficients
    can be read off by successive pivot elimination.
    """

    __slots__ = ("field", "dim", "vectors", "pivot_indices", "gammas")

    def __init__(self, field: Field, dim: int, vectors: Sequence[Vector],
                 pivot_indices: Sequence[int], gammas: Sequence[int]):
        self.field = field
        self.dim = dim
        self.vectors = tuple(vectors)
        self.pivot_indices = tuple(pivot_indices)
        self.gammas = tuple(gammas)

    def __len__(self) -> int:
        return len(self.vectors)

    def reduce(self, x: Vector) -> Tuple[List[FieldElement], Vector]:
        """Coefficients c_i and the residual x - sum c_i u_i, which vanishes
        on every pivot coordinate."""
        cs = []
        rest = x
        for u, p in zip(self.vectors, self.pivot_indices):
            top = rest[p]
            if top.is_zero:
                cs.append(self.field.zero)
                continue
            c = top / u[p]
            cs.append(c)
            rest = rest - u.scale(c)
        return cs, rest

    def coefficients(self, x: Vector) -> Optional[List[FieldElement]]:
        """Coefficients of x in the family, or None when x is outside its span."""
        cs, rest = self.reduce(x)
        if not rest.is_zero:
            return None
        return cs

    def spans_integrally(self, x: Vector) -> bool:
        """Membership of x in the O-span of the family."""
        cs = self.coefficients(x)
        if cs is None:
            return False
        return all(c.val() >= 0 for c in cs)

    def gamma_multiset(self) -> Tuple[int, ...]:
        return tuple(sorted(self.gammas))


def _drop_one_dependency(field: Field, work: List[dict]) -> bool:
    """Find one linear dependency among the working vectors and drop the
    entry whose dependency coefficient has minimal valuation (lowest index
    on ties).  Returns True when a drop happened."""
    if not work:
        return False
    A = Matrix.from_cols(field, [w["vec"] for w in work], nrows=work[0]["vec"].dim)
    ker = LinearSolver(A).kernel()
    if not ker:
        return False
    a = ker[0]
    best = None
    best_val = None
    for i, c in enumerate(a.coords):
        v = c.val()
        if best is None or v < best_val:
            best, best_val = i, v
    del work[best]
    return True


def _orthogonalize_tracked(field: Field, vectors: Sequence[Vector]):
    """Valuation-pivoted orthogonalization.

    Returns (basis, exprs) where exprs[i] gives the coefficients of basis
    vector i over the original input list.
    """
    if vectors:
        dim = vectors[0].dim
        for v in vectors:
            if v.dim != dim:
                raise DimensionError("vectors of unequal dimension")
    else:
        dim = 0
    n = len(vectors)
    work = [
        {"vec": v, "expr": list(Vector.unit(field, n, i).coords)}
        for i, v in enumerate(vectors)
    ]
    out_vecs: List[Vector] = []
    out_pivots: List[int] = []
    out_gammas: List[int] = []
    out_exprs: List[List[FieldElement]] = []
    while work:
        # absorb dependent entries until the family is linearly independent
        while _drop_one_dependency(field, work):
            pass
        if not work:
            break
        # select the entry of minimal vector valuation, lowest index on ties
        sel = 0
        sel_val = work[0]["vec"].val()
        for i in range(1, len(work)):
            v = work[i]["vec"].val()
            if v < sel_val:
                sel, sel_val = i, v
        chosen = work.pop(sel)
        u = chosen["vec"]
        gamma = sel_val.value
        # pivot: least coordinate index realizing the vector valuation
        pivot = next(i for i, a in enumerate(u.coords) if a.val() == sel_val)
        inv_top = u[pivot].inverse()
        for w in work:
            top = w["vec"][pivot]
            if top.is_zero:
                continue
            c = top * inv_top
            w["vec"] = w["vec"] - u.scale(c)
            w["expr"] = [e - c * f for e, f in zip(w["expr"], chosen["expr"])]
        out_vecs.append(u)
        out_pivots.append(pivot)
        out_gammas.append(gamma)
        out_exprs.append(chosen["expr"])
    basis = OrthoBasis(field, dim, out_vecs, out_pivots, out_gammas)
    return basis, out_exprs


def orthogonalize(vectors: Sequence[Vector], field: Optional[Field] = None) -> OrthoBasis:
    """Valuation-orthogonal basis of the O-span of the given vectors.

    Dependent vectors are absorbed by dropping, at each dependency, the
    coefficient of minimal valuation; this keeps the O-span exactly.
    """
    if field is None:
        if not vectors:
            raise ValueError("cannot infer field from an empty list")
        field = vectors[0].field
    return _orthogonalize_tracked(field, vectors)[0]


FREE = "free"
INTEGRAL = "integral"


class ScaleSystem:
    """Solver for G c = x with the coordinates of c marked ``INTEGRAL``
    constrained to the valuation ring (``FREE`` coordinates unconstrained).

    The kernel of G splits into a fully free part (supported on FREE
    coordinates only) and a complement; the integral-coordinate projections
    of the complement are orthogonalized once, after which each box query
    costs one reduction.
    """

    def __init__(self, G: Matrix, scales: Sequence[str]):
        if len(scales) != G.ncols:
            raise DimensionError("one scale marker per column is required")
        for s in scales:
            if s not in (FREE, INTEGRAL):
                raise ValueError(f"unknown scale marker {s!r}")
        self.G = G
        self.scales = tuple(scales)
        self.field = G.field
        field = G.field
        self.solver = LinearSolver(G)
        self.kernel_basis = self.solver.kernel()
        self.int_indices = [i for i, s in enumerate(scales) if s == INTEGRAL]
        k = len(self.kernel_basis)
        if not self.int_indices or k == 0:
            self.free_part = list(self.kernel_basis)
            self.integral_part: List[Vector] = []
            self._ortho = OrthoBasis(field, len(self.int_indices), (), (), ())
            self._pullbacks: List[Vector] = []
            return
        projected = [b.project(self.int_indices) for b in self.kernel_basis]
        P = Matrix.from_cols(field, projected, nrows=len(self.int_indices))
        psolver = LinearSolver(P)
        # kernel of the projection = combinations supported on FREE coordinates
        self.free_part = []
        for beta in psolver.kernel():
            acc = Vector.zero(field, G.ncols)
            for c, b in zip(beta.coords, self.kernel_basis):
                if not c.is_zero:
                    acc = acc + b.scale(c)
            self.free_part.append(acc)
        # pivot columns pick a complement of that kernel
        complement_idx = [c for _, c in psolver.pivots]
        comp_proj = [projected[j] for j in complement_idx]
        comp_full = [self.kernel_basis[j] for j in complement_idx]
        ortho, exprs = _orthogonalize_tracked(field, comp_proj)
        self._ortho = ortho
        # pullbacks through the projection: p_I(pullback[i]) = ortho vector i
        self._pullbacks = []
        for expr in exprs:
            acc = Vector.zero(field, G.ncols)
            for c, b in zip(expr, comp_full):
                if not c.is_zero:
                    acc = acc + b.scale(c)
            self._pullbacks.append(acc)
        # integral points of the projected subspace: rescale each basis
        # vector to valuation 0 wrt its weight
        self.integral_part = [
            w.scale(field.uniformizer_pow(-g))
            for w, g in zip(self._pullbacks, ortho.gammas)
        ]

    def solve_box(self, x: Vector) -> Optional[Vector]:
        """Some c with G c = x and integral coordinates in O, else None."""
        c0 = self.solver.solve(x)
        if c0 is None:
            return None
        if not self.int_indices:
            return c0
        t = c0.project(self.int_indices)
        cs, rest = self._ortho.reduce(t)
        # rest has maximal valuation in its coset of the projected subspace,
        # so a box point exists exactly when rest is coordinatewise integral
        if rest.val() >= 0:
            out = c0
            for c, w in zip(cs, self._pullbacks):
                if not c.is_zero:
                    out = out - w.scale(c)
            return out
        return None


def constrained_kernel(G: Matrix, scales: Sequence[str]) -> Tuple[List[Vector], List[Vector]]:
    """Generators of {c : G c = 0, c_i in O for INTEGRAL i} as a pair
    (free basis, integral generators)."""
    sys = ScaleSystem(G, scales)
    return sys.free_part, sys.integral_part


def mixed_solve(G: Matrix, scales: Sequence[str], x: Vector) -> Optional[Vector]:
    """Some c with G c = x whose INTEGRAL coordinates lie in O, else None."""
    return ScaleSystem(G, scales).solve_box(x)
