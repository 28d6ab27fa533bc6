"""Deterministic random instance generation.

All randomness flows through one ``random.Random`` (Mersenne Twister)
seeded with a 64-bit integer, so a fixed seed reproduces every instance
byte for byte.  Field elements are drawn as small exact fractions, then
shifted by a uniformizer power chosen uniformly in [-3, 3]:

* padic: numerator in [-1000, 1000], denominator in [1, 1000];
* ratfunc: numerator and denominator polynomials of degree at most 2 with
  integer coefficients of magnitude at most 9 (denominator nonzero).
"""
from __future__ import annotations

import random
from typing import List, Optional, Sequence, Tuple

from .field import Field, FieldElement
from .linalg import Vector
from .convex import ConvexSet, MixedModule, conv_hull

_MASK64 = (1 << 64) - 1


class Sampler:
    """Seeded source of random field elements, vectors, modules and sets."""

    def __init__(self, field: Field, seed: int):
        self.field = field
        self.rng = random.Random(seed & _MASK64)

    # elements --------------------------------------------------------------

    def element(self, nonzero: bool = False) -> FieldElement:
        f = self.field
        while True:
            if f.kind == "padic":
                num = self.rng.randint(-1000, 1000)
                den = self.rng.randint(1, 1000)
                x = f.fraction(num, den)
            else:
                num = self._poly(allow_zero=True)
                den = self._poly(allow_zero=False)
                x = f.ratio(num, den)
            if x.is_zero:
                if nonzero:
                    continue
                return x
            shift = self.rng.randint(-3, 3)
            return x * f.uniformizer_pow(shift)

    def _poly(self, allow_zero: bool) -> List[int]:
        q = self.field.param
        while True:
            deg = self.rng.randint(0, 2)
            cs = [self.rng.randint(-9, 9) for _ in range(deg + 1)]
            if allow_zero:
                return cs
            if any(c % q for c in cs) if q else any(cs):
                return cs

    def integral_element(self) -> FieldElement:
        """An element of the valuation ring (possibly zero)."""
        x = self.element()
        v = x.val()
        if v.is_infinite or v.value >= 0:
            return x
        return x * self.field.uniformizer_pow(-v.value)

    def unit(self) -> FieldElement:
        """An element of valuation exactly 0."""
        x = self.element(nonzero=True)
        return x * self.field.uniformizer_pow(-x.val().value)

    # vectors and points ----------------------------------------------------

    def vector(self, d: int, nonzero: bool = False) -> Vector:
        while True:
            v = Vector(self.field, [self.element() for _ in range(d)])
            if not nonzero or not v.is_zero:
                return v

    def points(self, n: int, d: int) -> List[Vector]:
        return [self.vector(d) for _ in range(n)]

    # modules and convex sets -----------------------------------------------

    def module(self, d: int, max_free: int = 0, max_integral: Optional[int] = None) -> MixedModule:
        if max_integral is None:
            max_integral = d + 2
        n_free = self.rng.randint(0, max_free) if max_free else 0
        n_int = self.rng.randint(0 if n_free else 1, max_integral)
        free = [self.vector(d, nonzero=True) for _ in range(n_free)]
        integral = [self.vector(d, nonzero=True) for _ in range(n_int)]
        return MixedModule(self.field, d, free, integral)

    def fg_module(self, d: int, max_gens: Optional[int] = None) -> MixedModule:
        """A finitely generated module: integral generators only."""
        if max_gens is None:
            max_gens = d + 2
        n = self.rng.randint(1, max_gens)
        return MixedModule(self.field, d, (), [self.vector(d, nonzero=True) for _ in range(n)])

    def convex_set(self, d: int, allow_free: bool = True) -> ConvexSet:
        module = self.module(d, max_free=1 if allow_free else 0)
        return ConvexSet.of(self.vector(d), module)

    def module_point(self, module: MixedModule) -> Vector:
        """A random element of the module: any combination of the free
        generators plus an integral combination of the integral ones."""
        acc = Vector.zero(self.field, module.dim)
        for g in module.free_gens:
            acc = acc + g.scale(self.element())
        for g in module.integral_gens:
            acc = acc + g.scale(self.integral_element())
        return acc

    def hull_point(self, points: Sequence[Vector]) -> Vector:
        """A random 3-term integral combination of the given points with
        coefficient sum 1."""
        picks = [self.rng.randrange(len(points)) for _ in range(3)]
        a = self.integral_element()
        b = self.integral_element()
        c = self.field.one - a - b
        coeffs = [a, b, c]
        acc = Vector.zero(self.field, points[0].dim)
        for coeff, i in zip(coeffs, picks):
            acc = acc + points[i].scale(coeff)
        return acc

    def unimodular_matrix(self, k: int) -> List[List[FieldElement]]:
        """A k x k matrix invertible over the valuation ring: a product of
        unit-diagonal triangular matrices and a permutation."""
        f = self.field
        lo = [[f.zero] * k for _ in range(k)]
        hi = [[f.zero] * k for _ in range(k)]
        for i in range(k):
            lo[i][i] = self.unit()
            hi[i][i] = self.unit()
            for j in range(i):
                lo[i][j] = self.integral_element()
                hi[j][i] = self.integral_element()
        perm = list(range(k))
        self.rng.shuffle(perm)
        out = [[f.zero] * k for _ in range(k)]
        for i in range(k):
            for j in range(k):
                acc = f.zero
                for m in range(k):
                    acc = acc + lo[i][m] * hi[m][perm[j]]
                out[i][j] = acc
        return out

    def unimodular_int_matrix(self, k: int) -> List[List[FieldElement]]:
        """Ring-invertible matrix with small integer entries.

        Same triangular-times-permutation shape as unimodular_matrix, but
        the entries carry no uniformizer content, so re-presented
        generators keep their payload size over every backend.
        """
        f = self.field
        lo = [[0] * k for _ in range(k)]
        hi = [[0] * k for _ in range(k)]
        for i in range(k):
            lo[i][i] = self.rng.choice((-1, 1))
            hi[i][i] = self.rng.choice((-1, 1))
            for j in range(i):
                lo[i][j] = self.rng.randint(-2, 2)
                hi[j][i] = self.rng.randint(-2, 2)
        perm = list(range(k))
        self.rng.shuffle(perm)
        out = [[f.zero] * k for _ in range(k)]
        for i in range(k):
            for j in range(k):
                out[i][j] = f.from_int(
                    sum(lo[i][m] * hi[m][perm[j]] for m in range(k)))
        return out

    def common_point_family(self, n: int, d: int) -> Tuple["Family", Vector]:
        """A family sharing a hidden common point, with varied translates."""
        from .combinatorics import Family

        hidden = self.vector(d)
        members = []
        for _ in range(n):
            module = self.module(d, max_free=1 if self.rng.random() < 0.3 else 0)
            offset = self.module_point(module)
            members.append(ConvexSet.of(hidden - offset, module))
        return Family(self.field, d, members), hidden

    def random_family(self, n: int, d: int) -> "Family":
        from .combinatorics import Family

        return Family(self.field, d, [self.convex_set(d) for _ in range(n)])
