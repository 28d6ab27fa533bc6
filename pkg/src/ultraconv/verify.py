"""Seeded randomized verification suites.

Each property draws its instances from a :class:`~ultraconv.randgen.Sampler`
whose seed is derived deterministically from the run seed and the property
name, so a report is reproducible byte for byte.  Properties return a
result object; they never raise on a counterexample, they record it.
"""
from __future__ import annotations

import itertools
import math
import zlib
from dataclasses import dataclass, field as dc_field
from fractions import Fraction
from typing import Callable, Dict, List

from .field import Field, INFINITY
from .linalg import (
    FREE,
    INTEGRAL,
    LinearSolver,
    Matrix,
    Vector,
    constrained_kernel,
    mixed_solve,
    orthogonalize,
)
from .convex import (
    FULL,
    ConvexSet,
    MixedModule,
    caratheodory_reduce,
    conv_hull,
    equals,
    flag_decompose,
    intersect,
    quasi_ball,
    radon_point,
    subset,
    validate_radon,
)
from .combinatorics import (
    Family,
    breadth_reduce,
    coordinate_hyperplanes,
    count_tverberg_partitions,
    dual_atoms,
    fractional_helly_stats,
    helly_lower_bound_witness,
    helly_point,
    hyperplane_family,
    is_shattered,
    pierce,
    selection_point,
    tverberg_partition,
    validate_tverberg,
)
from .randgen import Sampler

_MASK64 = (1 << 64) - 1
_MAX_RECORDED = 5


@dataclass
class PropertyResult:
    name: str
    trials: int
    failures: List[str] = dc_field(default_factory=list)
    notes: List[str] = dc_field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures

    def record(self, message: str) -> None:
        if len(self.failures) < _MAX_RECORDED:
            self.failures.append(message)
        elif len(self.failures) == _MAX_RECORDED:
            self.failures.append("... more failures suppressed")


def _sampler(field: Field, seed: int, name: str) -> Sampler:
    derived = (seed * 1000003 + zlib.crc32(name.encode())) & _MASK64
    return Sampler(field, derived)


def _dims(trials: int, lo: int = 1, hi: int = 4):
    for t in range(trials):
        yield t, lo + t % (hi - lo + 1)


# ---------------------------------------------------------------------------
# field properties

def prop_val_multiplicative(field: Field, seed: int, trials: int) -> PropertyResult:
    res = PropertyResult("val_multiplicative", trials)
    s = _sampler(field, seed, res.name)
    for t in range(trials):
        x, y = s.element(), s.element()
        if (x * y).val() != x.val() + y.val():
            res.record(f"trial {t}: val({x}*{y})")
    return res


def prop_val_ultrametric(field: Field, seed: int, trials: int) -> PropertyResult:
    res = PropertyResult("val_ultrametric", trials)
    s = _sampler(field, seed, res.name)
    for t in range(trials):
        x, y = s.element(), s.element()
        vx, vy, vs = x.val(), y.val(), (x + y).val()
        if vs < min(vx, vy):
            res.record(f"trial {t}: subadditivity fails for {x}, {y}")
        if vx != vy and vs != min(vx, vy):
            res.record(f"trial {t}: strict case fails for {x}, {y}")
    return res


def prop_canonical_idempotent(field: Field, seed: int, trials: int) -> PropertyResult:
    res = PropertyResult("canonical_idempotent", trials)
    s = _sampler(field, seed, res.name)
    for t in range(trials):
        x = s.element()
        if field.kind == "padic":
            fr = x.data
            again = field.fraction(fr.numerator * 7, fr.denominator * 7)
        else:
            shared = field.uniformizer_pow(1) + field.one  # t + 1
            again = (x * shared) / shared
        if again != x or field.parse(x.render()) != x:
            res.record(f"trial {t}: canonical form unstable for {x}")
    return res


def prop_parse_render_roundtrip(field: Field, seed: int, trials: int) -> PropertyResult:
    res = PropertyResult("parse_render_roundtrip", trials)
    s = _sampler(field, seed, res.name)
    for t in range(trials):
        x = s.element()
        back = field.parse(x.render())
        if back != x:
            res.record(f"trial {t}: {x.render()!r} reparses as {back.render()!r}")
    return res


# ---------------------------------------------------------------------------
# linalg properties

def prop_solve_exactness(field: Field, seed: int, trials: int) -> PropertyResult:
    res = PropertyResult("solve_exactness", trials)
    s = _sampler(field, seed, res.name)
    for t, d in _dims(trials):
        n = s.rng.randint(1, d + 2)
        A = Matrix(field, [[s.element() for _ in range(n)] for _ in range(d)])
        c = Vector(field, [s.element() for _ in range(n)])
        b = A.mul_vec(c)
        solver = LinearSolver(A)
        part = solver.solve(b)
        if part is None or A.mul_vec(part) != b:
            res.record(f"trial {t}: particular solution wrong")
            continue
        for k in solver.kernel():
            if not A.mul_vec(k).is_zero:
                res.record(f"trial {t}: kernel vector not in kernel")
    return res


def prop_ortho_valuation_identity(field: Field, seed: int, trials: int) -> PropertyResult:
    """val of a combination equals min over val(c_i) + gamma_i."""
    res = PropertyResult("ortho_valuation_identity", trials)
    s = _sampler(field, seed, res.name)
    for t, d in _dims(trials):
        module = s.fg_module(d)
        basis = orthogonalize(list(module.integral_gens), field=field)
        if len(basis) == 0:
            continue
        for _ in range(200):
            cs = [s.element() for _ in basis.vectors]
            acc = Vector.zero(field, d)
            for c, u in zip(cs, basis.vectors):
                acc = acc + u.scale(c)
            expect = INFINITY
            for c, g in zip(cs, basis.gammas):
                cand = c.val() + g
                if cand < expect:
                    expect = cand
            if acc.val() != expect:
                res.record(f"trial {t}: valuation identity fails")
                break
    return res


def prop_ortho_gammas_sorted(field: Field, seed: int, trials: int) -> PropertyResult:
    res = PropertyResult("ortho_gammas_sorted", trials)
    s = _sampler(field, seed, res.name)
    for t, d in _dims(trials):
        module = s.fg_module(d)
        basis = orthogonalize(list(module.integral_gens), field=field)
        if list(basis.gammas) != sorted(basis.gammas):
            res.record(f"trial {t}: gammas not nondecreasing: {basis.gammas}")
        if len(set(basis.pivot_indices)) != len(basis.pivot_indices):
            res.record(f"trial {t}: pivot indices repeat")
    return res


def prop_ortho_span_preserved(field: Field, seed: int, trials: int) -> PropertyResult:
    """Inputs and orthogonalized outputs generate the same O-span."""
    res = PropertyResult("ortho_span_preserved", trials)
    s = _sampler(field, seed, res.name)
    for t, d in _dims(trials):
        gens = [s.vector(d, nonzero=True) for _ in range(s.rng.randint(1, d + 2))]
        basis = orthogonalize(gens, field=field)
        Gin = Matrix.from_cols(field, gens, nrows=d)
        Gout = Matrix.from_cols(field, list(basis.vectors), nrows=d)
        sin = [INTEGRAL] * len(gens)
        sout = [INTEGRAL] * len(basis.vectors)
        for g in gens:
            if len(basis.vectors) == 0 or mixed_solve(Gout, sout, g) is None:
                res.record(f"trial {t}: input generator escapes the output span")
                break
        for u in basis.vectors:
            if mixed_solve(Gin, sin, u) is None:
                res.record(f"trial {t}: output vector escapes the input span")
                break
    return res


def prop_gamma_multiset_invariance(field: Field, seed: int, trials: int) -> PropertyResult:
    """Weights depend only on the module, not its presentation."""
    res = PropertyResult("gamma_multiset_invariance", trials)
    s = _sampler(field, seed, res.name)
    for t, d in _dims(trials):
        gens = [s.vector(d, nonzero=True) for _ in range(s.rng.randint(1, d + 2))]
        base = orthogonalize(gens, field=field).gamma_multiset()
        perm = list(range(len(gens)))
        s.rng.shuffle(perm)
        if orthogonalize([gens[i] for i in perm], field=field).gamma_multiset() != base:
            res.record(f"trial {t}: permutation changes the weights")
        k = len(gens)
        U = s.unimodular_int_matrix(k)
        regens = []
        for j in range(k):
            acc = Vector.zero(field, d)
            for i in range(k):
                if not U[i][j].is_zero:
                    acc = acc + gens[i].scale(U[i][j])
            regens.append(acc)
        if orthogonalize(regens, field=field).gamma_multiset() != base:
            res.record(f"trial {t}: ring-invertible re-presentation changes the weights")
    return res


def _random_scales(s: Sampler, n: int) -> List[str]:
    return [INTEGRAL if s.rng.random() < 0.7 else FREE for _ in range(n)]


def prop_constrained_kernel_sound(field: Field, seed: int, trials: int) -> PropertyResult:
    """Everything generated by a constrained kernel solves G c = 0 and
    respects the scale box."""
    res = PropertyResult("constrained_kernel_sound", trials)
    s = _sampler(field, seed, res.name)
    for t, d in _dims(trials):
        n = s.rng.randint(1, d + 2)
        G = Matrix(field, [[s.element() for _ in range(n)] for _ in range(d)])
        scales = _random_scales(s, n)
        free, integral = constrained_kernel(G, scales)
        for _ in range(10):
            acc = Vector.zero(field, n)
            for v in free:
                acc = acc + v.scale(s.element())
            for v in integral:
                acc = acc + v.scale(s.integral_element())
            if not G.mul_vec(acc).is_zero:
                res.record(f"trial {t}: combination leaves the kernel")
                break
            bad = False
            for i, sc in enumerate(scales):
                if sc == INTEGRAL and not acc[i].is_integral:
                    bad = True
            if bad:
                res.record(f"trial {t}: combination violates an integral scale")
                break
    return res


def prop_constrained_kernel_complete(field: Field, seed: int, trials: int) -> PropertyResult:
    """Scale-respecting kernel points are reproduced by the generators."""
    res = PropertyResult("constrained_kernel_complete", trials)
    s = _sampler(field, seed, res.name)
    for t, d in _dims(trials):
        n = s.rng.randint(1, d + 2)
        G = Matrix(field, [[s.element() for _ in range(n)] for _ in range(d)])
        scales = _random_scales(s, n)
        kernel = LinearSolver(G).kernel()
        if not kernel:
            continue
        free, integral = constrained_kernel(G, scales)
        cols = free + integral
        outscales = [FREE] * len(free) + [INTEGRAL] * len(integral)
        Gout = Matrix.from_cols(field, cols, nrows=n) if cols else None
        for _ in range(10):
            z = Vector.zero(field, n)
            for b in kernel:
                z = z + b.scale(s.integral_element() if s.rng.random() < 0.7 else s.element())
            if any(sc == INTEGRAL and not z[i].is_integral for i, sc in enumerate(scales)):
                continue
            if z.is_zero:
                continue
            if Gout is None or mixed_solve(Gout, outscales, z) is None:
                res.record(f"trial {t}: scale-respecting kernel point missed")
                break
    return res


def prop_mixed_solve_correct(field: Field, seed: int, trials: int) -> PropertyResult:
    res = PropertyResult("mixed_solve_correct", trials)
    s = _sampler(field, seed, res.name)
    for t, d in _dims(trials):
        n = s.rng.randint(1, d + 2)
        G = Matrix(field, [[s.element() for _ in range(n)] for _ in range(d)])
        scales = _random_scales(s, n)
        # a solvable right-hand side with a box point behind it
        c = Vector(field, [
            s.integral_element() if sc == INTEGRAL else s.element() for sc in scales
        ])
        x = G.mul_vec(c)
        got = mixed_solve(G, scales, x)
        if got is None:
            res.record(f"trial {t}: solvable box instance reported unsolvable")
            continue
        if G.mul_vec(got) != x:
            res.record(f"trial {t}: witness does not solve the system")
        if any(sc == INTEGRAL and not got[i].is_integral for i, sc in enumerate(scales)):
            res.record(f"trial {t}: witness violates a scale")
    return res


# ---------------------------------------------------------------------------
# convex properties

def prop_hull_soundness(field: Field, seed: int, trials: int) -> PropertyResult:
    """Integral 3-term combinations with coefficient sum 1 stay in the hull."""
    res = PropertyResult("hull_soundness", trials)
    s = _sampler(field, seed, res.name)
    per_trial = max(1, 150 // max(trials, 1))
    for t, d in _dims(trials):
        pts = s.points(s.rng.randint(1, d + 3), d)
        hull = conv_hull(pts)
        for _ in range(per_trial):
            x = s.hull_point(pts)
            if not hull.contains(x):
                res.record(f"trial {t}: hull misses a convex combination")
                break
    return res


def prop_hull_minimality(field: Field, seed: int, trials: int) -> PropertyResult:
    """The hull is contained in every quasi-ball containing the points."""
    res = PropertyResult("hull_minimality", trials)
    s = _sampler(field, seed, res.name)
    for t, d in _dims(trials):
        pts = s.points(s.rng.randint(1, d + 3), d)
        hull = conv_hull(pts)
        center = pts[s.rng.randrange(len(pts))] + s.vector(d)
        radius = INFINITY
        for p in pts:
            v = (p - center).val()
            if v < radius:
                radius = v
        ball = quasi_ball(center, FULL) if radius.is_infinite else quasi_ball(center, radius.value)
        if not subset(hull, ball):
            res.record(f"trial {t}: hull escapes an enclosing ball")
    return res


def prop_radon_validates(field: Field, seed: int, trials: int) -> PropertyResult:
    res = PropertyResult("radon_validates", trials)
    s = _sampler(field, seed, res.name)
    for t, d in _dims(trials):
        pts = s.points(d + 2, d)
        cert = radon_point(pts)
        if not validate_radon(pts, cert):
            res.record(f"trial {t}: certificate fails validation")
    return res


def prop_caratheodory_equality(field: Field, seed: int, trials: int) -> PropertyResult:
    res = PropertyResult("caratheodory_equality", trials)
    s = _sampler(field, seed, res.name)
    for t, d in _dims(trials):
        pts = s.points(s.rng.randint(d + 2, 12), d)
        sub = caratheodory_reduce(pts)
        if len(sub) > d + 1:
            res.record(f"trial {t}: reduction kept {len(sub)} points")
            continue
        if not equals(conv_hull(sub), conv_hull(pts)):
            res.record(f"trial {t}: reduced hull differs")
    return res


def prop_flag_membership_agreement(field: Field, seed: int, trials: int) -> PropertyResult:
    """Solver-based membership agrees with flag-coordinate membership."""
    res = PropertyResult("flag_membership_agreement", trials)
    s = _sampler(field, seed, res.name)
    for t, d in _dims(trials):
        c = s.convex_set(d)
        flag = flag_decompose(c)
        gs = [g for g in flag.gamma_multiset()]
        if gs != sorted(gs):
            res.record(f"trial {t}: flag weights out of order")
        for i in range(20):
            if i % 2 == 0:
                x = c.translate + s.module_point(c.module)
            else:
                x = s.vector(d)
            via_solver = c.contains(x)
            via_flag = flag.member(x - c.translate)
            if via_solver != via_flag:
                res.record(f"trial {t}: membership disagreement at {x!r}")
                break
    return res


def prop_intersect_oracle(field: Field, seed: int, trials: int) -> PropertyResult:
    """Point sampling agrees with the computed intersection both ways."""
    res = PropertyResult("intersect_oracle", trials)
    s = _sampler(field, seed, res.name)
    for t, d in _dims(trials):
        c1, c2 = s.convex_set(d), s.convex_set(d)
        both = intersect(c1, c2)
        if not both.is_empty:
            if not (c1.contains(both.a_point()) and c2.contains(both.a_point())):
                res.record(f"trial {t}: witness point outside an operand")
            if not (subset(both, c1) and subset(both, c2)):
                res.record(f"trial {t}: intersection escapes an operand")
        samples = []
        for i in range(12):
            if i % 3 == 0:
                samples.append(c1.translate + s.module_point(c1.module))
            elif i % 3 == 1:
                samples.append(c2.translate + s.module_point(c2.module))
            elif not both.is_empty:
                samples.append(both.translate + s.module_point(both.module))
        for x in samples:
            joint = c1.contains(x) and c2.contains(x)
            if joint != both.contains(x):
                res.record(f"trial {t}: sampling contradicts the intersection")
                break
    return res


def prop_intersect_algebra(field: Field, seed: int, trials: int) -> PropertyResult:
    """Commutativity and idempotence up to set equality."""
    res = PropertyResult("intersect_algebra", trials)
    s = _sampler(field, seed, res.name)
    for t, d in _dims(trials, hi=3):
        c1, c2 = s.convex_set(d), s.convex_set(d)
        ab, ba = intersect(c1, c2), intersect(c2, c1)
        if ab.is_empty != ba.is_empty or (not ab.is_empty and not equals(ab, ba)):
            res.record(f"trial {t}: intersection is not commutative")
        if not equals(intersect(c1, c1), c1):
            res.record(f"trial {t}: intersection is not idempotent")
    return res


def prop_translate_dichotomy(field: Field, seed: int, trials: int) -> PropertyResult:
    """A translate of a convex set either equals it or misses it entirely."""
    res = PropertyResult("translate_dichotomy", trials)
    s = _sampler(field, seed, res.name)
    for t, d in _dims(trials):
        c = s.convex_set(d)
        a = s.vector(d)
        shifted = c.translate_by(a)
        same = equals(c, shifted)
        if same != c.module.member(a):
            res.record(f"trial {t}: equality disagrees with module membership")
        if not same and not intersect(c, shifted).is_empty:
            res.record(f"trial {t}: translate neither equal nor disjoint")
    return res


def prop_min_gamma_is_min_valuation(field: Field, seed: int, trials: int) -> PropertyResult:
    """Without full lines the least weight is the least valuation attained;
    with a full line valuations are unbounded below."""
    res = PropertyResult("min_gamma_is_min_valuation", trials)
    s = _sampler(field, seed, res.name)
    for t, d in _dims(trials):
        module = s.fg_module(d)
        _, basis = module.normal_form()
        if len(basis) == 0:
            continue
        least = min(basis.gammas)
        seen = basis.vectors[0].val()
        for g in module.integral_gens:
            if g.val() < seen:
                seen = g.val()
        for _ in range(30):
            v = s.module_point(module).val()
            if v < seen:
                seen = v
        if seen != least:
            res.record(f"trial {t}: least weight {least} vs sampled minimum {seen}")
        # now adjoin a full line and witness unbounded valuations
        line = s.vector(d, nonzero=True)
        bigger = MixedModule(field, d, (line,), module.integral_gens)
        for bound in (10, 20):
            shift = line.val().value
            deep = line.scale(field.uniformizer_pow(-bound - shift))
            if not (deep.val() <= -bound and bigger.member(deep)):
                res.record(f"trial {t}: full line fails to go below -{bound}")
                break
    return res


def prop_largest_inner_ball(field: Field, seed: int, trials: int) -> PropertyResult:
    """For a full-rank integral module the largest quasi-ball inside it has
    radius equal to the last weight."""
    res = PropertyResult("largest_inner_ball", trials)
    s = _sampler(field, seed, res.name)
    for t, d in _dims(trials, hi=3):
        module = s.fg_module(d, max_gens=d + 2)
        _, basis = module.normal_form()
        if len(basis) != d:
            continue
        last = max(basis.gammas)
        c = ConvexSet.of(Vector.zero(field, d), module)
        if not subset(quasi_ball(Vector.zero(field, d), last), c):
            res.record(f"trial {t}: ball of radius {last} escapes")
        if subset(quasi_ball(Vector.zero(field, d), last - 1), c):
            res.record(f"trial {t}: ball of radius {last - 1} unexpectedly fits")
    return res


def check_two_term_counterexample() -> bool:
    """Closure under pairwise ring combinations does not force convexity:
    over the 2-adics, the union of coordinate slabs
    {a in O^3 : some a_i in the maximal ideal} contains
    (0,0,0), (1,0,0), (0,1,1) and every pairwise combination of them, yet
    the 3-term combination with weights (-1, 1, 1) lands on (1,1,1) outside."""
    f = Field.padic(2)

    def in_set(v: Vector) -> bool:
        return all(a.is_integral for a in v.coords) and any(a.val() > 0 for a in v.coords)

    pts = [
        Vector.from_ints(f, [0, 0, 0]),
        Vector.from_ints(f, [1, 0, 0]),
        Vector.from_ints(f, [0, 1, 1]),
    ]
    weights = [f.from_int(-1), f.one, f.one]
    if not all(in_set(p) for p in pts):
        return False
    if not all(w.is_integral for w in weights):
        return False
    total = f.zero
    for w in weights:
        total = total + w
    if total != f.one:
        return False
    combo = Vector.zero(f, 3)
    for w, p in zip(weights, pts):
        combo = combo + p.scale(w)
    if combo != Vector.from_ints(f, [1, 1, 1]):
        return False
    return not in_set(combo)


def prop_two_term_counterexample(field: Field, seed: int, trials: int) -> PropertyResult:
    res = PropertyResult("two_term_counterexample", 1)
    if not check_two_term_counterexample():
        res.record("the fixed three-point counterexample does not behave as expected")
    return res


# ---------------------------------------------------------------------------
# combinatorics properties

def prop_helly_positive(field: Field, seed: int, trials: int) -> PropertyResult:
    res = PropertyResult("helly_positive", trials)
    s = _sampler(field, seed, res.name)
    for t, d in _dims(trials, hi=3):
        fam, hidden = s.common_point_family(s.rng.randint(1, 6), d)
        got = helly_point(fam)
        if got is None:
            res.record(f"trial {t}: common point exists but was not found")
            continue
        if not all(m.contains(got) for m in fam.members):
            res.record(f"trial {t}: reported point is not common")
        if not all(m.contains(hidden) for m in fam.members):
            res.record(f"trial {t}: designed point is not common (generator bug)")
    return res


def prop_helly_sharpness(field: Field, seed: int, trials: int) -> PropertyResult:
    """The simplex-facet family: total intersection empty, every proper
    subfamily of size d nonempty."""
    res = PropertyResult("helly_sharpness", 3)
    for d in (1, 2, 3):
        fam = helly_lower_bound_witness(field, d)
        if helly_point(fam) is not None:
            res.record(f"d={d}: family unexpectedly has a common point")
        for combo in itertools.combinations(range(d + 1), d):
            if fam.intersection(combo).is_empty:
                res.record(f"d={d}: subfamily {combo} should intersect")
    return res


def prop_breadth_bound(field: Field, seed: int, trials: int) -> PropertyResult:
    res = PropertyResult("breadth_bound", trials)
    s = _sampler(field, seed, res.name)
    for t, d in _dims(trials, hi=3):
        fam, _ = s.common_point_family(s.rng.randint(1, d + 2), d)
        total = fam.intersection()
        idx = breadth_reduce(fam)
        if len(idx) > d:
            res.record(f"trial {t}: witness subset of size {len(idx)} exceeds {d}")
            continue
        if not equals(fam.intersection(idx), total):
            res.record(f"trial {t}: witness subset misses the total intersection")
    for d in (1, 2, 3):
        if len(breadth_reduce(coordinate_hyperplanes(field, d))) != d:
            res.record(f"coordinate hyperplanes in dim {d} need exactly {d} members")
    return res


def prop_shatter_simplex(field: Field, seed: int, trials: int) -> PropertyResult:
    res = PropertyResult("shatter_simplex", 4)
    for d in (1, 2, 3, 4):
        pts = [Vector.zero(field, d)] + [Vector.unit(field, d, i) for i in range(d)]
        if not is_shattered(pts).shattered:
            res.record(f"standard d+1 points in dim {d} should shatter")
    return res


def prop_no_shatter_oversized(field: Field, seed: int, trials: int) -> PropertyResult:
    """d+2 points never shatter, and a Radon certificate exhibits the
    violated subset."""
    res = PropertyResult("no_shatter_oversized", trials)
    s = _sampler(field, seed, res.name)
    for t, d in _dims(trials):
        pts = s.points(d + 2, d)
        report = is_shattered(pts)
        if report.shattered:
            res.record(f"trial {t}: d+2 points reported shattered")
            continue
        cert = radon_point(pts)
        others = [p for j, p in enumerate(pts) if j != cert.index]
        if not conv_hull(others).contains(pts[cert.index]):
            res.record(f"trial {t}: certificate does not yield a violation")
    return res


def prop_tverberg_valid(field: Field, seed: int, trials: int) -> PropertyResult:
    res = PropertyResult("tverberg_valid", trials)
    s = _sampler(field, seed, res.name)
    combos = [(d, r) for d in (1, 2, 3) for r in (2, 3)]
    for t in range(trials):
        d, r = combos[t % len(combos)]
        pts = s.points((d + 1) * (r - 1) + 1, d)
        part = tverberg_partition(pts, r)
        if not validate_tverberg(pts, part, r):
            res.record(f"trial {t}: partition fails validation (d={d}, r={r})")
    return res


def prop_dual_atoms_grid(field: Field, seed: int, trials: int) -> PropertyResult:
    """Coordinate hyperplanes with the 0/1 probe grid realize all 2^d
    membership patterns; nested members never produce inverted patterns."""
    res = PropertyResult("dual_atoms_grid", trials)
    s = _sampler(field, seed, res.name)
    for d in (1, 2, 3, 4):
        fam = coordinate_hyperplanes(field, d)
        probes = [Vector.from_ints(field, bits) for bits in itertools.product((0, 1), repeat=d)]
        got = dual_atoms(fam, probes)
        if got != 2**d:
            res.record(f"dim {d}: expected {2**d} atoms, got {got}")
    for t, d in _dims(trials, hi=3):
        base = s.convex_set(d)
        grown = MixedModule(
            field, d,
            list(base.module.free_gens),
            list(base.module.integral_gens) + [s.vector(d, nonzero=True)],
        )
        fam = Family(field, d, [base, ConvexSet.of(base.translate, grown)])
        probes = [s.vector(d) for _ in range(10)] + [base.translate + s.module_point(base.module)]
        for q in probes:
            if fam.members[0].contains(q) and not fam.members[1].contains(q):
                res.record(f"trial {t}: nested pair realizes an inverted pattern")
                break
    return res


def prop_hyperplane_family_design(field: Field, seed: int, trials: int) -> PropertyResult:
    """In the plane: all pairs of designed lines meet, all triples are
    empty, and the statistics match."""
    res = PropertyResult("hyperplane_family_design", 1)
    n = 6
    if field.kind == "ratfunc" and field.param != 0:
        n = min(n, field.param - 1)
    if n < 3:
        res.notes.append(f"characteristic too small for a 3-line check (n={n})")
        return res
    fam = hyperplane_family(field, 2, n)
    for i, j in itertools.combinations(range(n), 2):
        if fam.intersection((i, j)).is_empty:
            res.record(f"lines {i},{j} should meet")
    for combo in itertools.combinations(range(n), 3):
        if not fam.intersection(combo).is_empty:
            res.record(f"lines {combo} should have empty intersection")
    alpha, beta = fractional_helly_stats(fam, 2)
    if alpha != 1:
        res.record(f"alpha should be 1, got {alpha}")
    if beta != Fraction(2, n):
        res.record(f"beta should be {Fraction(2, n)}, got {beta}")
    if alpha == 1 and not beta > 0:
        res.record("alpha = 1 must force a positive beta")
    return res


def prop_selection_counts(field: Field, seed: int, trials: int) -> PropertyResult:
    res = PropertyResult("selection_counts", trials)
    s = _sampler(field, seed, res.name)
    pts = [
        Vector.from_ints(field, [0, 0]),
        Vector.from_ints(field, [1, 0]),
        Vector.from_ints(field, [0, 1]),
        Vector.from_ints(field, [1, 1]),
    ]
    _, count, total = selection_point(pts)
    if (count, total) != (4, 4):
        res.record(f"unit square expected 4 of 4, got {count} of {total}")
    for t in range(trials):
        sample = s.points(8, 2)
        _, count, total = selection_point(sample)
        if count < 1:
            res.record(f"trial {t}: best point covered by no subset hull")
    return res


def prop_pierce_covers(field: Field, seed: int, trials: int) -> PropertyResult:
    res = PropertyResult("pierce_covers", trials)
    s = _sampler(field, seed, res.name)
    z = Vector.zero(field, 1)
    nested = Family(field, 1, [quasi_ball(z, 2), quasi_ball(z, 1), quasi_ball(z, 0)])
    if len(pierce(nested)) != 1:
        res.record("three nested balls need exactly one piercing point")
    for t, d in _dims(trials, hi=2):
        fam, _ = s.common_point_family(s.rng.randint(1, 4), d)
        extra, _ = s.common_point_family(s.rng.randint(1, 3), d)
        joined = Family(field, d, list(fam.members) + list(extra.members))
        pts = pierce(joined)
        for m in joined.members:
            if not any(m.contains(p) for p in pts):
                res.record(f"trial {t}: a member is left unpierced")
                break
    return res


def prop_tverberg_count_conjecture(field: Field, seed: int, trials: int) -> PropertyResult:
    """Experimental count check; shortfalls are reported as notes, never as
    failures."""
    res = PropertyResult("tverberg_count_conjecture", trials)
    s = _sampler(field, seed, res.name)
    combos = [(d, r) for d in (1, 2) for r in (2, 3)]
    for t in range(trials):
        d, r = combos[t % len(combos)]
        pts = s.points((d + 1) * (r - 1) + 1, d)
        got = count_tverberg_partitions(pts, r)
        bound = math.factorial(r - 1) ** d
        if got < bound:
            res.notes.append(
                f"trial {t}: d={d}, r={r}: {got} partitions, conjectured floor {bound}"
            )
    return res


# ---------------------------------------------------------------------------
# suite registry

SUITES: Dict[str, List[Callable[[Field, int, int], PropertyResult]]] = {
    "field": [
        prop_val_multiplicative,
        prop_val_ultrametric,
        prop_canonical_idempotent,
        prop_parse_render_roundtrip,
    ],
    "linalg": [
        prop_solve_exactness,
        prop_ortho_valuation_identity,
        prop_ortho_gammas_sorted,
        prop_ortho_span_preserved,
        prop_gamma_multiset_invariance,
        prop_constrained_kernel_sound,
        prop_constrained_kernel_complete,
        prop_mixed_solve_correct,
    ],
    "convex": [
        prop_hull_soundness,
        prop_hull_minimality,
        prop_radon_validates,
        prop_caratheodory_equality,
        prop_flag_membership_agreement,
        prop_intersect_oracle,
        prop_intersect_algebra,
        prop_translate_dichotomy,
        prop_min_gamma_is_min_valuation,
        prop_largest_inner_ball,
        prop_two_term_counterexample,
    ],
    "combinatorics": [
        prop_helly_positive,
        prop_helly_sharpness,
        prop_breadth_bound,
        prop_shatter_simplex,
        prop_no_shatter_oversized,
        prop_tverberg_valid,
        prop_dual_atoms_grid,
        prop_hyperplane_family_design,
        prop_selection_counts,
        prop_pierce_covers,
        prop_tverberg_count_conjecture,
    ],
}


def run_suite(name: str, field: Field, seed: int, trials: int) -> List[PropertyResult]:
    if name == "all":
        out = []
        for key in ("field", "linalg", "convex", "combinatorics"):
            out.extend(run_suite(key, field, seed, trials))
        return out
    if name not in SUITES:
        raise ValueError(f"unknown suite {name!r}; choose from "
                         f"{sorted(SUITES)} or 'all'")
    return [prop(field, seed, trials) for prop in SUITES[name]]
