"""Structural machinery: commutative nucleus, automorphism checks, the
eigenspace split under a reflection, extraction of the canonical
reflection table, and classification of middle plane-associative tables.

A reflection is an algebra automorphism of order two.  Its +1 and -1
eigenspaces B and C split a 4-dimensional unital division algebra into a
plane subalgebra B (necessarily a copy of the complex numbers) and a
complementary plane C with B*C = C*B = C and C*C inside B.  Choosing i in
B with i*i = -1 and a unit-length w in C, with v = w*i, puts the product
into the canonical reflection table whose last two rows take values in
span{1, i}; the eight scalars of those rows are what this module reports.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import List, NamedTuple, Optional, Sequence

from . import catalog, identities, linalg, units
from .core import (
    Algebra,
    DecompositionError,
    Element,
    NucleusContradictionError,
    ParameterError,
    ReflectionError,
    scalar_is_zero,
    scalar_to_json,
    scalars_close,
    sqrt_scalar,
)


@dataclass(frozen=True)
class LinearMap:
    """A square matrix acting on a parent algebra's coordinates."""

    matrix: tuple
    algebra: Algebra

    def __post_init__(self):
        n = self.algebra.dim
        mat = tuple(tuple(row) for row in self.matrix)
        if len(mat) != n or any(len(row) != n for row in mat):
            raise DecompositionError("linear map shape must match the algebra")
        object.__setattr__(self, "matrix", mat)

    def __call__(self, x: Element) -> Element:
        return self.algebra.element(linalg.matvec(self.matrix, list(x.coords)))


def _as_matrix(A: Algebra, f):
    if isinstance(f, LinearMap):
        return [list(r) for r in f.matrix]
    return [list(r) for r in f]


class MorphismReport(NamedTuple):
    ok: bool
    witness: Optional[tuple]  # (x, y, f(xy), f(x)f(y)) on failure


def commutative_nucleus(A: Algebra, eps: Optional[float] = None) -> List[Element]:
    """Basis of {x : xy = yx for all y}, via the null space of the stacked
    commutator matrices L_{e_i} - R_{e_i}."""
    stacked = []
    for i in range(A.dim):
        e = A.basis(i)
        left = A.left_matrix(e)
        right = A.right_matrix(e)
        for r in range(A.dim):
            stacked.append([l - rr for l, rr in zip(left[r], right[r])])
    basis = linalg.null_space(stacked, eps)
    return [A.element(v) for v in basis]


def is_isomorphism(
    src: Algebra, dst: Algebra, f, eps: Optional[float] = None
) -> MorphismReport:
    """Is the matrix an invertible multiplicative map src -> dst?

    Columns of f are the images of src basis vectors in dst coordinates.
    Bilinearity makes the basis-pair check a proof.
    """
    if src.dim != dst.dim:
        return MorphismReport(False, None)
    mat = _as_matrix(src, f)
    eps = max(src.eps, dst.eps) if eps is None else eps
    if scalar_is_zero(linalg.det(mat), eps if _matrix_has_float(mat) else 0.0):
        return MorphismReport(False, None)
    images = [dst.element([mat[r][j] for r in range(dst.dim)])
              for j in range(src.dim)]
    for i, j in itertools.product(range(src.dim), repeat=2):
        prod = src.multiply(src.basis(i), src.basis(j))
        mapped = dst.element(linalg.matvec(mat, list(prod.coords)))
        direct = dst.multiply(images[i], images[j])
        if not (mapped - direct).is_zero(eps):
            return MorphismReport(False, (src.basis(i), src.basis(j), mapped, direct))
    return MorphismReport(True, None)


def _matrix_has_float(mat) -> bool:
    return any(isinstance(x, float) for row in mat for x in row)


def is_automorphism(A: Algebra, f, eps: Optional[float] = None) -> MorphismReport:
    """Invertible self-map preserving all basis products."""
    return is_isomorphism(A, A, f, eps)


@dataclass(frozen=True)
class ReflectionDecomposition:
    B_basis: tuple  # +1 eigenvectors
    C_basis: tuple  # -1 eigenvectors
    tp_basis: tuple  # (1, i, w, v)
    tp_params: tuple  # (alpha1, alpha2, beta1, beta2, delta1, delta2, gamma1, gamma2)
    verdicts: dict

    def to_dict(self) -> dict:
        names = ("alpha1", "alpha2", "beta1", "beta2",
                 "delta1", "delta2", "gamma1", "gamma2")
        return {
            "B_basis": [b.json_coords() for b in self.B_basis],
            "C_basis": [c.json_coords() for c in self.C_basis],
            "tp_basis": {name: e.json_coords() for name, e in
                         zip(("one", "i", "w", "v"), self.tp_basis)},
            "tp_params": {n: scalar_to_json(v) for n, v in zip(names, self.tp_params)},
            "verdicts": dict(self.verdicts),
        }


def _in_plane_coeffs(A: Algebra, x: Element, plane: Sequence[Element], eps: float):
    """Coefficients of x in the span of two elements, or None."""
    cols = [list(p.coords) for p in plane]
    mat = [[cols[0][r], cols[1][r]] for r in range(A.dim)]
    aug_rank_rows = [list(c.coords) for c in plane] + [list(x.coords)]
    if linalg.rank(aug_rank_rows, eps) > 2:
        return None
    # solve the overdetermined 2-column system on two pivot rows
    reduced, pivots = linalg.rref([row + [x.coords[r]] for r, row in enumerate(mat)],
                                  eps)
    if any(p == 2 for p in pivots):
        return None
    coeffs = [Fraction(0), Fraction(0)]
    for row_i, p in enumerate(pivots):
        coeffs[p] = reduced[row_i][2]
    return coeffs


def _choose_i(A: Algebra, plane: List[Element], eps: float) -> Element:
    """Element of a 2-dim unital subalgebra squaring to -1, with positive
    coordinate on the chosen non-unit direction."""
    one = A.one()
    b = None
    for cand in plane:
        if linalg.rank([list(one.coords), list(cand.coords)], eps) == 2:
            b = cand
            break
    if b is None:
        raise DecompositionError("plus-eigenspace is a line through the unit")
    bb = A.multiply(b, b)
    coeffs = _in_plane_coeffs(A, bb, [one, b], eps)
    if coeffs is None:
        raise DecompositionError("plus-eigenspace is not closed under products")
    p, q = coeffs
    disc = p + q * q / 4
    if not isinstance(disc, float) and disc >= 0:
        raise DecompositionError("plus-eigenspace is not a copy of the complex plane")
    if isinstance(disc, float) and disc >= -eps:
        raise DecompositionError("plus-eigenspace is not a copy of the complex plane")
    y2 = -1 / disc
    y = sqrt_scalar(y2)
    x = -q * y / 2
    return x * one + y * b


def reflection_decompose(
    A: Algebra, phi, eps: Optional[float] = None
) -> ReflectionDecomposition:
    """Split along a reflection and extract the canonical table scalars.

    phi must be an automorphism with phi != Id and phi^2 = Id; the two
    eigenspaces must both be planes.  i is the root of x^2 = -1 in the
    plus-eigenspace with positive coordinate on the non-unit basis
    direction; w is the first minus-eigenvector normalised to Euclidean
    length 1; v = w*i.  Anticommutation of i with the minus-eigenspace is
    verified: if instead i commutes with it the commutative nucleus
    exceeds the scalars, which a division algebra cannot allow, and
    NucleusContradictionError is raised.
    """
    eps = A.eps if eps is None else eps
    if A.unit is None or A.dim != 4:
        raise DecompositionError("reflection split needs a 4-dimensional unital algebra")
    mat = _as_matrix(A, phi)

    auto = is_automorphism(A, mat, eps)
    if not auto.ok:
        raise ReflectionError("the supplied map is not an automorphism")
    n = A.dim
    ident = linalg.identity_matrix(n)
    diff_id = [[mat[i][j] - ident[i][j] for j in range(n)] for i in range(n)]
    if all(scalar_is_zero(x, eps) for row in diff_id for x in row):
        raise ReflectionError("the identity map is not a reflection")
    sq = linalg.matmul(mat, mat)
    if any(not scalars_close(sq[i][j], ident[i][j], eps)
           for i in range(n) for j in range(n)):
        raise ReflectionError("the map does not square to the identity")

    plus = [[mat[i][j] - ident[i][j] for j in range(n)] for i in range(n)]
    minus = [[mat[i][j] + ident[i][j] for j in range(n)] for i in range(n)]
    B = [A.element(v) for v in linalg.null_space(plus, eps)]
    C = [A.element(v) for v in linalg.null_space(minus, eps)]
    if len(B) != 2 or len(C) != 2:
        raise DecompositionError(
            f"eigenspace dimensions ({len(B)}, {len(C)}) are not (2, 2); "
            "the input is degenerate or not a division algebra"
        )

    one = A.one()
    i_elem = _choose_i(A, B, eps)
    if not (A.multiply(i_elem, i_elem) + one).is_zero(eps):
        raise DecompositionError("failed to solve x^2 = -1 in the plus-eigenspace")

    w_raw = C[0]
    norm2 = sum(c * c for c in w_raw.coords)
    w = w_raw / sqrt_scalar(norm2)
    v = A.multiply(w, i_elem)

    basis_mat = [list(e.coords) for e in (one, i_elem, w, v)]
    if linalg.rank(basis_mat, eps) != 4:
        raise DecompositionError("1, i, w, w*i do not form a basis")

    iw = A.multiply(i_elem, w)
    wi = A.multiply(w, i_elem)
    if (iw - wi).is_zero(eps):
        raise NucleusContradictionError(
            "i commutes with the minus-eigenspace; the commutative nucleus "
            "exceeds the scalars, so the input is not a division algebra"
        )
    anticommute = ((iw + wi).is_zero(eps)
                   and (A.multiply(i_elem, v) + A.multiply(v, i_elem)).is_zero(eps))
    if not anticommute:
        raise DecompositionError(
            "i neither commutes nor anticommutes with the minus-eigenspace; "
            "the input is not partially alternative"
        )
    if not (A.multiply(i_elem, v) - w).is_zero(eps):
        raise DecompositionError(
            "i*(w*i) != w: the alternative law fails at i; canonical table "
            "extraction does not apply"
        )

    def plane_coeffs(x: Element):
        coeffs = _in_plane_coeffs(A, x, [one, i_elem], eps)
        if coeffs is None:
            raise DecompositionError(
                "a product of minus-eigenvectors lands outside span{1, i}"
            )
        return coeffs

    a1, a2 = plane_coeffs(A.multiply(w, w))
    b1, b2 = plane_coeffs(A.multiply(w, v))
    d1, d2 = plane_coeffs(A.multiply(v, w))
    g1, g2 = plane_coeffs(A.multiply(v, v))
    params = (a1, a2, b1, b2, d1, d2, g1, g2)

    verdicts = {
        "eigendims_2_2": True,
        "i_squares_to_minus_one": True,
        "anticommutation": True,
        "BC_in_C": _products_inside(A, B, C, C, eps),
        "CB_in_C": _products_inside(A, C, B, C, eps),
        "CC_in_B": _products_inside(A, C, C, B, eps),
        "BC_equals_C": _products_span(A, B, C, C, eps),
        "CB_equals_C": _products_span(A, C, B, C, eps),
        "CC_equals_B": _products_span(A, C, C, B, eps),
    }
    return ReflectionDecomposition(
        B_basis=tuple(B),
        C_basis=tuple(C),
        tp_basis=(one, i_elem, w, v),
        tp_params=params,
        verdicts=verdicts,
    )


def _products_inside(A, left, right, target, eps) -> bool:
    rows = [list(t.coords) for t in target]
    for x in left:
        for y in right:
            if not linalg.in_span(rows, list(A.multiply(x, y).coords), eps):
                return False
    return True


def _products_span(A, left, right, target, eps) -> bool:
    rows = [list(A.multiply(x, y).coords) for x in left for y in right]
    return linalg.rank(rows, eps) == linalg.rank([list(t.coords) for t in target], eps)


@dataclass(frozen=True)
class MiddleClassification:
    target: str  # Mplus | Mzero | H | Unclassified
    reason: Optional[str]
    witness: Optional[tuple]    # matrix: columns = images of source basis in target
    witness_verified: Optional[bool]
    params: dict

    def to_dict(self) -> dict:
        return {
            "type": self.target,
            "reason": self.reason,
            "witness": None if self.witness is None else
            [[scalar_to_json(x) for x in row] for row in self.witness],
            "witness_verified": self.witness_verified,
            "params": {k: scalar_to_json(v) for k, v in self.params.items()},
        }


_TARGET_BUILDERS = {
    "Mplus": catalog.mplus,
    "Mzero": catalog.mzero,
    "H": catalog.quaternions,
}


def target_algebra(name: str) -> Algebra:
    try:
        return _TARGET_BUILDERS[name]()
    except KeyError:
        raise ParameterError(f"no classification target named {name!r}") from None


def classify_middle_c(source, eps: Optional[float] = None,
                      seed: int = 0) -> MiddleClassification:
    """Classify a tn-family point up to isomorphism.

    Preconditions, all verified: b = c = d = 0 (otherwise the units stay on
    the line through i and no claim is made); partial left and right
    alternativity over units drawn from the quadric locus; and the derived
    constraints f = 0, g = -a, h = 0, e = 0.  The verdict then follows the
    sign of a: positive -> Mplus, zero -> Mzero, negative -> H, witnessed
    by the column-scaling map 1->1, i->i, j->sqrt|a| j, k->sqrt|a| k into
    the target table, which is re-verified as an isomorphism.
    """
    if isinstance(source, Algebra):
        A = source
        params = catalog.tn_params(A)
    else:
        params = dict(source)
        A = catalog.tn(**params)
        params = catalog.tn_params(A)
    eps = A.eps if eps is None else eps

    def unclassified(reason):
        return MiddleClassification("Unclassified", reason, None, None, params)

    if any(params[key] != 0 for key in ("b", "c", "d")):
        return unclassified(
            "b, c, d not all zero: imaginary units are confined to the "
            "line through i, so no isomorphism claim is made"
        )

    a = params["a"]
    locus = units.classify_locus_tn(A)
    sample = units.locus_sample_points(locus, A, 10, seed=seed)
    for kind in (identities.IdentityKind.PARTIAL_LEFT_ALT,
                 identities.IdentityKind.PARTIAL_RIGHT_ALT):
        report = identities.check_identity(A, kind, units=sample, eps=eps)
        if not report.holds:
            return unclassified(f"{kind.value} fails over the unit locus")

    constraints = {"f": Fraction(0), "g": -a, "h": Fraction(0), "e": Fraction(0)}
    for name, expected in constraints.items():
        if not scalars_close(params[name], expected, eps):
            return unclassified(
                f"table constant {name} = {params[name]} violates the "
                f"derived value {expected}"
            )

    zero_a = scalar_is_zero(a, eps if isinstance(a, float) else 0.0)
    if zero_a:
        target_name = "Mzero"
        scale = Fraction(1)
    elif a > 0:
        target_name = "Mplus"
        scale = sqrt_scalar(a)
    else:
        target_name = "H"
        scale = sqrt_scalar(-a)

    witness = [
        [1 if r == c else 0 for c in range(4)] for r in range(4)
    ]
    witness[2][2] = scale
    witness[3][3] = scale
    target = target_algebra(target_name)
    verified = is_isomorphism(A, target, witness, eps).ok
    return MiddleClassification(
        target_name, None,
        tuple(tuple(row) for row in witness), verified, params,
    )
