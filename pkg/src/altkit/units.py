"""Imaginary units: solutions of q*q = -1.

Three tools live here.  A Newton solver samples the solution set of
F(q) = q*q + 1 from seeded starting points, using the closed-form Jacobian
J(q) = L_q + R_q read off the structure constants.  A classifier names the
exact locus for tn-family points, where the solution set in the span of
{i, j, k} is cut out by -x^2 + a(y^2 + z^2) = -1.  A box-pruned grid
search enumerates, completely, every grid point of a coordinate box that
solves the equation; interval bounds discard boxes that provably contain
no solution, so the full grid never has to be visited point by point.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from typing import List, Optional, Tuple

import numpy as np

from . import catalog
from .core import (
    Algebra,
    AlgebraError,
    Element,
    default_eps,
    scalar_is_zero,
    scalar_to_json,
)

KIND_FINITE = "finite-set"
KIND_SPHERE = "sphere"
KIND_HYPERBOLOID = "hyperboloid-two-sheets"
KIND_PLANES = "parallel-planes"
KIND_QUADRIC = "quadric-general"
KIND_CLOUD = "sampled-cloud"

CONTINUOUS_KINDS = (KIND_SPHERE, KIND_HYPERBOLOID, KIND_PLANES, KIND_QUADRIC)


@dataclass(frozen=True)
class UnitLocus:
    """Description of {q : q*q = -1}.

    ``points`` is the complete solution set for a finite locus and a sample
    otherwise.  ``equation`` records c_x x^2 + c_y y^2 + c_z z^2 = rhs over
    the ``ambient`` basis indices when the locus is a named quadric.
    """

    kind: str
    points: tuple
    equation: Optional[dict]
    ambient: tuple

    @property
    def complete(self) -> bool:
        return self.kind == KIND_FINITE

    def to_dict(self, max_points: Optional[int] = None) -> dict:
        pts = self.points if max_points is None else self.points[:max_points]
        return {
            "kind": self.kind,
            "equation": None if self.equation is None else {
                key: scalar_to_json(val) for key, val in self.equation.items()
            },
            "ambient": list(self.ambient),
            "points": [p.json_coords() for p in pts],
        }


def verify_unit(A: Algebra, q: Element, tol: Optional[float] = None) -> bool:
    """Whether q*q + 1 vanishes (exactly, or within tol for float scalars)."""
    tol = A.eps if tol is None else tol
    defect = A.multiply(q, q) + A.one()
    return defect.is_zero(tol)


# -- Newton sampling ----------------------------------------------------------


def solve_units_sampled(
    A: Algebra,
    seeds: int = 200,
    tol: Optional[float] = None,
    seed: int = 0,
    box: float = 2.0,
    max_iter: int = 100,
) -> UnitLocus:
    """Newton-iterate F(q) = q*q + 1 from seeded starting points.

    Start points are all +-basis vectors plus ``seeds`` uniform draws from
    [-box, box]^n.  Converged points are deduplicated at distance 10*tol
    and re-verified before being returned as a sampled cloud.
    """
    if A.unit is None:
        raise AlgebraError("unit sampling needs a unital algebra")
    tol = default_eps() if tol is None else tol
    rng = random.Random(seed)
    n = A.dim
    sc = np.array(
        [[[float(c) for c in cell] for cell in row] for row in A.sc]
    )
    one = np.array([float(c) for c in A.unit])

    def f(x):
        return np.einsum("i,j,ijk->k", x, x, sc) + one

    def jac(x):
        # d/dx of x*x: left plus right multiplication by x
        left = np.einsum("i,ijk->kj", x, sc)
        right = np.einsum("j,ijk->ki", x, sc)
        return left + right

    starts = []
    for i in range(n):
        e = np.zeros(n)
        e[i] = 1.0
        starts.append(e.copy())
        starts.append(-e)
    for _ in range(seeds):
        starts.append(np.array([rng.uniform(-box, box) for _ in range(n)]))

    found: List[np.ndarray] = []
    for x in starts:
        x = x.copy()
        ok = False
        for _ in range(max_iter):
            res = f(x)
            if np.max(np.abs(res)) <= tol:
                ok = True
                break
            J = jac(x)
            try:
                step = np.linalg.solve(J, res)
            except np.linalg.LinAlgError:
                break  # exactly singular Jacobian: abandon this seed
            if not np.all(np.isfinite(step)):
                break
            x = x - step
            if np.max(np.abs(x)) > 1e6:
                break
        if not ok:
            continue
        if all(np.max(np.abs(x - p)) > 10 * tol for p in found):
            found.append(x)

    points = []
    for x in found:
        q = A.element([float(v) for v in x])
        if verify_unit(A, q, tol):
            points.append(q)
    return UnitLocus(KIND_CLOUD, tuple(points), None, tuple(range(n)))


# -- exact loci for tn-family points ------------------------------------------


def _rational_circle_point(t: Fraction) -> Tuple[Fraction, Fraction]:
    # (1-t^2, 2t)/(1+t^2) lies on the unit circle
    d = 1 + t * t
    return (1 - t * t) / d, 2 * t / d


def _conic_point(a: Fraction, t: Fraction) -> Optional[Tuple[Fraction, Fraction]]:
    """Rational (x, r) with x^2 - a*r^2 = 1, parametrised by t."""
    d = 1 - a * t * t
    if d == 0:
        return None
    return (1 + a * t * t) / d, 2 * t / d


def rational_locus_points(
    A: Algebra, a: Fraction, count: int, seed: int = 0
) -> List[Element]:
    """Exact rational points of -x^2 + a(y^2 + z^2) = -1 in span{i, j, k}."""
    rng = random.Random(seed)
    out: List[Element] = []
    tries = 0
    while len(out) < count and tries < 50 * count + 50:
        tries += 1
        if a == 0:
            x = Fraction(rng.choice((-1, 1)))
            y = Fraction(rng.randint(-6, 6), rng.randint(1, 4))
            z = Fraction(rng.randint(-6, 6), rng.randint(1, 4))
        else:
            t = Fraction(rng.randint(-8, 8), rng.randint(1, 5))
            pt = _conic_point(a, t)
            if pt is None:
                continue
            x, r = pt
            u = Fraction(rng.randint(-8, 8), rng.randint(1, 5))
            c, s = _rational_circle_point(u)
            y, z = r * c, r * s
        coords = [Fraction(0)] * A.dim
        coords[1], coords[2], coords[3] = x, y, z
        q = A.element(coords)
        if verify_unit(A, q, 0.0 if A.scalar_mode == "exact" else None):
            out.append(q)
    return out


def classify_locus_tn(target) -> UnitLocus:
    """Name the unit locus of a tn-family point.

    With any of b, c, d nonzero the only units are +-i (a finite set).
    Otherwise the locus is the quadric -x^2 + a(y^2+z^2) = -1 in the span
    of {i, j, k}: a hyperboloid of two sheets for a > 0, two parallel
    planes x^2 = 1 for a = 0, and a sphere (after rescaling j, k) for
    a < 0.  The emitted equation is sign-normalised so the a < 0 case
    reads x^2 + |a|(y^2 + z^2) = 1.
    """
    if isinstance(target, Algebra):
        A = target
        params = catalog.tn_params(A)
    else:
        params = {k: v for k, v in dict(target).items()}
        A = catalog.tn(**params)
        params = catalog.tn_params(A)
    a = params["a"]
    i_elem = A.basis(1)

    if any(params[key] != 0 for key in ("b", "c", "d")):
        points = (i_elem, -i_elem)
        return UnitLocus(KIND_FINITE, points, None, (1,))

    sample = [i_elem, -i_elem] + rational_locus_points(A, Fraction(a), 8)
    if a > 0:
        kind = KIND_HYPERBOLOID
        equation = {"x2": Fraction(-1), "y2": a, "z2": a, "rhs": Fraction(-1)}
    elif a == 0:
        kind = KIND_PLANES
        equation = {"x2": Fraction(1), "y2": Fraction(0), "z2": Fraction(0),
                    "rhs": Fraction(1)}
    else:
        kind = KIND_SPHERE
        equation = {"x2": Fraction(1), "y2": -a, "z2": -a, "rhs": Fraction(1)}
    return UnitLocus(kind, tuple(sample), equation, (1, 2, 3))


def locus_sample_points(
    locus: UnitLocus, A: Algebra, count: int, seed: int = 0
) -> List[Element]:
    """Points usable for partial-identity checks: the stored points, padded
    with fresh rational locus points when the locus has an equation."""
    points = list(locus.points)
    if locus.equation is not None and len(points) < count:
        eq = locus.equation
        a = eq["y2"] if eq["x2"] == -1 else -eq["y2"]
        points.extend(rational_locus_points(A, Fraction(a), count - len(points),
                                            seed=seed))
    return points[:count] if count else points


def equation_satisfied(locus: UnitLocus, q: Element, tol: float) -> bool:
    """Whether a point satisfies the locus equation record."""
    if locus.equation is None:
        raise AlgebraError("locus has no equation record")
    eq = locus.equation
    x, y, z = (q.coords[i] for i in locus.ambient[:3])
    value = eq["x2"] * x * x + eq["y2"] * y * y + eq["z2"] * z * z - eq["rhs"]
    return scalar_is_zero(value, tol)


# -- complete grid search ------------------------------------------------------


def grid_unit_search(
    A: Algebra,
    radius: float = 3.0,
    step=Fraction(1, 4),
    tol: float = 1e-9,
) -> List[Element]:
    """Every grid point q of [-radius, radius]^n with ||q*q + 1||_inf <= tol.

    Equivalent to enumerating the full grid, but boxes whose interval
    bounds push some residual coordinate away from zero are discarded
    wholesale; only surviving boxes are enumerated point by point.  The
    verdict is exhaustive over the grid either way.
    """
    step = Fraction(step)
    n = A.dim
    if A.unit is None:
        raise AlgebraError("grid search needs a unital algebra")
    hi_idx = int(Fraction(radius) / step)
    lo_idx = -hi_idx
    stepf = float(step)

    # symmetric pair form per residual coordinate: diagonal kept separate
    # so squares get sharp interval bounds
    diag = [[0.0] * n for _ in range(n)]   # diag[k][i] x_i^2
    cross = [[] for _ in range(n)]         # (i, j, coeff) with i < j
    for i in range(n):
        for j in range(n):
            for k, c in enumerate(A.sc[i][j]):
                if c == 0:
                    continue
                if i == j:
                    diag[k][i] += float(c)
                elif i < j:
                    cross[k].append((i, j, float(c)))
                else:
                    # fold into the (j, i) slot
                    cross[k].append((j, i, float(c)))
    merged_cross = []
    for k in range(n):
        acc = {}
        for i, j, c in cross[k]:
            acc[(i, j)] = acc.get((i, j), 0.0) + c
        merged_cross.append([(i, j, c) for (i, j), c in acc.items() if c != 0.0])
    unitf = [float(c) for c in A.unit]

    def residual_bounds(box):
        """Interval of each coordinate of q*q + 1 over the box; None if some
        coordinate interval excludes [-tol, tol]."""
        vals = [(lo * stepf, hi * stepf) for lo, hi in box]
        sq = []
        for lo, hi in vals:
            if lo >= 0:
                sq.append((lo * lo, hi * hi))
            elif hi <= 0:
                sq.append((hi * hi, lo * lo))
            else:
                sq.append((0.0, max(lo * lo, hi * hi)))
        for k in range(n):
            lo_acc = hi_acc = unitf[k]
            for i, c in enumerate(diag[k]):
                if c == 0.0:
                    continue
                slo, shi = sq[i]
                if c > 0:
                    lo_acc += c * slo
                    hi_acc += c * shi
                else:
                    lo_acc += c * shi
                    hi_acc += c * slo
            for i, j, c in merged_cross[k]:
                (alo, ahi), (blo, bhi) = vals[i], vals[j]
                products = (alo * blo, alo * bhi, ahi * blo, ahi * bhi)
                lo_acc += c * (min(products) if c > 0 else max(products))
                hi_acc += c * (max(products) if c > 0 else min(products))
            if lo_acc > tol or hi_acc < -tol:
                return False
        return True

    def point_residual_ok(idxs):
        x = [idx * stepf for idx in idxs]
        # dense-enough: reuse the sparse structure rows
        out = list(unitf)
        for i, xi in enumerate(x):
            if xi == 0.0:
                continue
            for j, xj in enumerate(x):
                if xj == 0.0:
                    continue
                for k, c in A._sparse[i][j]:
                    out[k] += xi * xj * float(c)
        return max(abs(v) for v in out) <= tol

    results: List[Element] = []
    stack = [tuple((lo_idx, hi_idx) for _ in range(n))]
    while stack:
        box = stack.pop()
        if not residual_bounds(box):
            continue
        sizes = [hi - lo + 1 for lo, hi in box]
        total = 1
        for s in sizes:
            total *= s
        if total <= 32:
            def enumerate_box(prefix, rest):
                if not rest:
                    if point_residual_ok(prefix):
                        coords = [idx * step for idx in prefix]
                        results.append(A.element(coords))
                    return
                lo, hi = rest[0]
                for idx in range(lo, hi + 1):
                    enumerate_box(prefix + (idx,), rest[1:])

            enumerate_box((), box)
            continue
        axis = max(range(n), key=lambda i: box[i][1] - box[i][0])
        lo, hi = box[axis]
        mid = (lo + hi) // 2
        left = list(box)
        right = list(box)
        left[axis] = (lo, mid)
        right[axis] = (mid + 1, hi)
        stack.append(tuple(left))
        stack.append(tuple(right))

    uniq = []
    for q in results:
        if q not in uniq:
            uniq.append(q)
    return uniq
