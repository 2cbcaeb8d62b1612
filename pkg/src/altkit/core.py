"""Algebras over the reals given by structure constants.

An algebra of dimension n is a rank-3 tensor ``sc`` with

    e_i * e_j = sum_k sc[i][j][k] e_k

together with basis labels and (optionally) the coordinates of a two-sided
unit.  Scalars are exact rationals (`fractions.Fraction`) whenever every
input is rational, and IEEE floats otherwise.  Exactness is load-bearing:
the identity checks downstream are equational statements, and float drift
would manufacture spurious counterexamples.

Values are immutable after construction and every operation is a pure
function of its inputs, so everything here is safe to use concurrently.
"""

from __future__ import annotations

import json
import math
import numbers
import os
from fractions import Fraction
from typing import Optional, Sequence, Union

Scalar = Union[Fraction, float]


class AlgebraError(Exception):
    """Base class for all altkit errors."""


class DimensionError(AlgebraError):
    """Shape mismatch, or elements that belong to different parent algebras."""


class ParameterError(AlgebraError):
    """Invalid family or scalar parameters."""


class ContextError(AlgebraError):
    """An identity check is missing required context (units, plane span)."""


class NotApplicableError(AlgebraError):
    """A derived question was asked of an algebra it does not apply to."""


class ReflectionError(AlgebraError):
    """The supplied map is not a reflection (automorphism of order two)."""


class DecompositionError(AlgebraError):
    """An eigenspace split does not have the required structure."""


class NucleusContradictionError(DecompositionError):
    """i commutes with the minus-eigenspace, so the commutative nucleus is
    bigger than the scalars; the input cannot be a division algebra."""


class SingularMatrixError(AlgebraError):
    """Tried to invert or solve against a singular matrix."""


def default_eps() -> float:
    """Comparison tolerance for float scalars; env ALTKIT_EPS overrides."""
    return float(os.environ.get("ALTKIT_EPS", "1e-9"))


def parse_scalar(value) -> Scalar:
    """Coerce a scalar: strings like '3/2' or '0.25' and ints become exact
    Fractions, floats stay floats."""
    if isinstance(value, bool):
        raise ParameterError(f"not a scalar: {value!r}")
    if isinstance(value, Fraction):
        return value
    if isinstance(value, numbers.Integral):
        return Fraction(int(value))
    if isinstance(value, float):
        return value
    if isinstance(value, str):
        try:
            return Fraction(value)
        except (ValueError, ZeroDivisionError):
            try:
                return float(value)
            except ValueError:
                raise ParameterError(f"not a scalar: {value!r}") from None
    raise ParameterError(f"not a scalar: {value!r}")


def scalar_is_zero(s: Scalar, eps: float) -> bool:
    if isinstance(s, float):
        return abs(s) <= eps
    return s == 0


def scalars_close(x: Scalar, y: Scalar, eps: float) -> bool:
    return scalar_is_zero(x - y, eps)


def scalar_to_json(s: Scalar):
    return str(s) if isinstance(s, Fraction) else s


def exact_sqrt(value) -> Optional[Fraction]:
    """Square root of a nonnegative rational, if it is again rational."""
    if isinstance(value, float):
        return None
    f = Fraction(value)
    if f < 0:
        return None
    rn = math.isqrt(f.numerator)
    rd = math.isqrt(f.denominator)
    if rn * rn == f.numerator and rd * rd == f.denominator:
        return Fraction(rn, rd)
    return None


def sqrt_scalar(value) -> Scalar:
    """Exact square root when the input is a rational square, float otherwise."""
    root = exact_sqrt(value)
    return root if root is not None else math.sqrt(value)


class Element:
    """A vector expressed in the coordinates of a parent algebra's basis."""

    __slots__ = ("algebra", "coords")

    def __init__(self, algebra: "Algebra", coords: Sequence):
        coords = tuple(parse_scalar(c) for c in coords)
        if len(coords) != algebra.dim:
            raise DimensionError(
                f"coordinate vector of length {len(coords)} in a "
                f"{algebra.dim}-dimensional algebra"
            )
        if algebra.scalar_mode == "float":
            coords = tuple(float(c) for c in coords)
        object.__setattr__(self, "algebra", algebra)
        object.__setattr__(self, "coords", coords)

    def __setattr__(self, name, value):  # pragma: no cover - immutability guard
        raise AttributeError("Element is immutable")

    # -- arithmetic ---------------------------------------------------------

    def _peer(self, other: "Element") -> None:
        if not isinstance(other, Element):
            raise TypeError(f"expected Element, got {type(other).__name__}")
        if other.algebra is not self.algebra:
            raise DimensionError("elements belong to different algebras")

    def __add__(self, other):
        self._peer(other)
        return Element(self.algebra, [a + b for a, b in zip(self.coords, other.coords)])

    def __sub__(self, other):
        self._peer(other)
        return Element(self.algebra, [a - b for a, b in zip(self.coords, other.coords)])

    def __neg__(self):
        return Element(self.algebra, [-a for a in self.coords])

    def __mul__(self, other):
        if isinstance(other, Element):
            return self.algebra.multiply(self, other)
        if isinstance(other, (numbers.Real, Fraction)):
            s = parse_scalar(other)
            return Element(self.algebra, [s * a for a in self.coords])
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, (numbers.Real, Fraction)):
            s = parse_scalar(other)
            return Element(self.algebra, [s * a for a in self.coords])
        return NotImplemented

    def __truediv__(self, other):
        s = parse_scalar(other)
        return Element(self.algebra, [a / s for a in self.coords])

    def __eq__(self, other):
        return (
            isinstance(other, Element)
            and other.algebra is self.algebra
            and other.coords == self.coords
        )

    def __hash__(self):
        return hash((id(self.algebra), self.coords))

    # -- queries ------------------------------------------------------------

    def is_zero(self, eps: Optional[float] = None) -> bool:
        eps = self.algebra.eps if eps is None else eps
        return all(scalar_is_zero(c, eps) for c in self.coords)

    def max_abs(self):
        return max(abs(c) for c in self.coords)

    def float_coords(self) -> tuple:
        return tuple(float(c) for c in self.coords)

    def json_coords(self) -> list:
        return [scalar_to_json(c) for c in self.coords]

    def __repr__(self):
        terms = []
        for c, lab in zip(self.coords, self.algebra.labels):
            if scalar_is_zero(c, 0.0):
                continue
            if c == 1:
                terms.append(lab)
            elif c == -1:
                terms.append(f"-{lab}")
            else:
                terms.append(f"{c}*{lab}")
        return "<" + (" + ".join(terms).replace("+ -", "- ") or "0") + ">"


class MulOperator:
    """Matrix of left or right multiplication by a fixed element.

    Columns follow the defining element: ``left`` column j holds the
    coordinates of a*e_j, ``right`` column j those of e_j*a.
    """

    __slots__ = ("side", "matrix", "element")

    def __init__(self, side: str, matrix, element: Element):
        if side not in ("left", "right"):
            raise ParameterError(f"side must be 'left' or 'right', got {side!r}")
        object.__setattr__(self, "side", side)
        object.__setattr__(self, "matrix", tuple(tuple(row) for row in matrix))
        object.__setattr__(self, "element", element)

    def __setattr__(self, name, value):  # pragma: no cover
        raise AttributeError("MulOperator is immutable")

    def det(self):
        from . import linalg

        return linalg.det(self.matrix)

    def is_singular(self, eps: Optional[float] = None) -> bool:
        eps = self.element.algebra.eps if eps is None else eps
        return scalar_is_zero(self.det(), eps)


class Algebra:
    """A finite-dimensional real algebra defined by structure constants."""

    def __init__(
        self,
        sc,
        labels: Optional[Sequence[str]] = None,
        unit: Optional[Sequence] = None,
        eps: Optional[float] = None,
        family: Optional[tuple] = None,
    ):
        table = [[[parse_scalar(c) for c in cell] for cell in row] for row in sc]
        n = len(table)
        for row in table:
            if len(row) != n or any(len(cell) != n for cell in row):
                raise DimensionError("structure constants must be an n*n*n cube")
        mode = "exact"
        for row in table:
            for cell in row:
                if any(isinstance(c, float) for c in cell):
                    mode = "float"
        if mode == "float":
            table = [[[float(c) for c in cell] for cell in row] for row in table]

        self._sc = tuple(tuple(tuple(cell) for cell in row) for row in table)
        self._labels = tuple(labels) if labels is not None else tuple(f"e{i}" for i in range(n))
        if len(self._labels) != n:
            raise DimensionError("label count must match the dimension")
        if len(set(self._labels)) != n:
            raise AlgebraError("basis labels must be unique")
        self._scalar_mode = mode
        self._eps = default_eps() if eps is None else float(eps)
        self._family = family

        # sparse view: _sparse[i][j] = ((k, c), ...) over nonzero c
        self._sparse = tuple(
            tuple(
                tuple((k, c) for k, c in enumerate(cell) if c != 0)
                for cell in row
            )
            for row in self._sc
        )

        self._unit = None
        if unit is not None:
            u = tuple(parse_scalar(c) for c in unit)
            if len(u) != n:
                raise DimensionError("unit coordinate length must match the dimension")
            if mode == "float":
                u = tuple(float(c) for c in u)
            self._unit = u
            for j in range(n):
                basis = tuple(
                    Fraction(1) if i == j else Fraction(0) for i in range(n)
                )
                left = self._mul_coords(u, basis)
                right = self._mul_coords(basis, u)
                for got, name in ((left, "1*x"), (right, "x*1")):
                    if any(
                        not scalars_close(g, b, self._eps)
                        for g, b in zip(got, basis)
                    ):
                        raise AlgebraError(
                            f"unit axiom violated on basis vector "
                            f"{self._labels[j]} ({name})"
                        )

    # -- basic accessors ----------------------------------------------------

    @property
    def dim(self) -> int:
        return len(self._sc)

    @property
    def sc(self):
        return self._sc

    @property
    def labels(self):
        return self._labels

    @property
    def unit(self):
        return self._unit

    @property
    def scalar_mode(self) -> str:
        return self._scalar_mode

    @property
    def eps(self) -> float:
        return self._eps

    @property
    def family(self):
        """(name, params) tag recorded by the catalog constructors, or None."""
        return self._family

    def __repr__(self):
        tag = self._family[0] if self._family else "algebra"
        return f"Algebra<{tag}, dim={self.dim}, {self._scalar_mode}>"

    # -- element constructors -------------------------------------------------

    def element(self, coords: Sequence) -> Element:
        return Element(self, coords)

    def basis(self, i: int) -> Element:
        if not 0 <= i < self.dim:
            raise DimensionError(f"basis index {i} out of range")
        return Element(self, [1 if j == i else 0 for j in range(self.dim)])

    def basis_elements(self) -> list:
        return [self.basis(i) for i in range(self.dim)]

    def zero(self) -> Element:
        return Element(self, [0] * self.dim)

    def one(self) -> Element:
        if self._unit is None:
            raise AlgebraError("algebra has no designated unit element")
        return Element(self, self._unit)

    def by_label(self, label: str) -> Element:
        try:
            return self.basis(self._labels.index(label))
        except ValueError:
            raise AlgebraError(f"no basis vector labelled {label!r}") from None

    # -- products -------------------------------------------------------------

    def _mul_coords(self, u: Sequence, v: Sequence) -> list:
        out = [0] * self.dim
        sparse = self._sparse
        for i, ui in enumerate(u):
            if not ui:
                continue
            row = sparse[i]
            for j, vj in enumerate(v):
                if not vj:
                    continue
                coeff = ui * vj
                for k, c in row[j]:
                    out[k] = out[k] + coeff * c
        return out

    def _own(self, *elements: Element) -> None:
        for e in elements:
            if not isinstance(e, Element):
                raise TypeError(f"expected Element, got {type(e).__name__}")
            if e.algebra is not self:
                raise DimensionError("element belongs to a different algebra")

    def multiply(self, a: Element, b: Element) -> Element:
        self._own(a, b)
        return Element(self, self._mul_coords(a.coords, b.coords))

    def associator(self, x: Element, y: Element, z: Element) -> Element:
        """(x, y, z) = (xy)z - x(yz)."""
        self._own(x, y, z)
        xy = self._mul_coords(x.coords, y.coords)
        yz = self._mul_coords(y.coords, z.coords)
        left = self._mul_coords(xy, z.coords)
        right = self._mul_coords(x.coords, yz)
        return Element(self, [a - b for a, b in zip(left, right)])

    def commutator(self, x: Element, y: Element) -> Element:
        """[x, y] = xy - yx."""
        self._own(x, y)
        xy = self._mul_coords(x.coords, y.coords)
        yx = self._mul_coords(y.coords, x.coords)
        return Element(self, [a - b for a, b in zip(xy, yx)])

    def left_matrix(self, a: Element):
        """Matrix of x -> a*x; column j = coordinates of a*e_j."""
        self._own(a)
        cols = []
        for j in range(self.dim):
            basis = [1 if i == j else 0 for i in range(self.dim)]
            cols.append(self._mul_coords(a.coords, basis))
        return [[cols[j][r] for j in range(self.dim)] for r in range(self.dim)]

    def right_matrix(self, a: Element):
        """Matrix of x -> x*a; column j = coordinates of e_j*a."""
        self._own(a)
        cols = []
        for j in range(self.dim):
            basis = [1 if i == j else 0 for i in range(self.dim)]
            cols.append(self._mul_coords(basis, a.coords))
        return [[cols[j][r] for j in range(self.dim)] for r in range(self.dim)]

    def mul_operator(self, a: Element, side: str = "left") -> MulOperator:
        matrix = self.left_matrix(a) if side == "left" else self.right_matrix(a)
        return MulOperator(side, matrix, a)

    # -- conversions ----------------------------------------------------------

    def to_float(self) -> "Algebra":
        """A float-scalar copy (used by the numeric solvers)."""
        if self._scalar_mode == "float":
            return self
        sc = [[[float(c) for c in cell] for cell in row] for row in self._sc]
        unit = None if self._unit is None else [float(c) for c in self._unit]
        return Algebra(sc, labels=self._labels, unit=unit, eps=self._eps,
                       family=self._family)

    def to_dict(self) -> dict:
        return {
            "dim": self.dim,
            "labels": list(self._labels),
            "unit": None if self._unit is None else [scalar_to_json(c) for c in self._unit],
            "sc": [
                [[scalar_to_json(c) for c in cell] for cell in row]
                for row in self._sc
            ],
        }

    @classmethod
    def from_dict(cls, data: dict) -> "Algebra":
        try:
            sc = data["sc"]
        except (TypeError, KeyError):
            raise AlgebraError("algebra JSON must contain an 'sc' cube") from None
        labels = data.get("labels")
        unit = data.get("unit")
        algebra = cls(sc, labels=labels, unit=unit)
        if "dim" in data and data["dim"] != algebra.dim:
            raise DimensionError(
                f"declared dim {data['dim']} does not match sc cube of size {algebra.dim}"
            )
        return algebra

    def dumps(self, indent: Optional[int] = None) -> str:
        return json.dumps(self.to_dict(), indent=indent)

    @classmethod
    def loads(cls, text: str) -> "Algebra":
        return cls.from_dict(json.loads(text))

    @classmethod
    def load(cls, path: str) -> "Algebra":
        with open(path, "r", encoding="utf-8") as fh:
            return cls.from_dict(json.load(fh))


# module-level operation aliases ------------------------------------------------


def multiply(a: Element, b: Element) -> Element:
    return a.algebra.multiply(a, b)


def associator(x: Element, y: Element, z: Element) -> Element:
    return x.algebra.associator(x, y, z)


def commutator(x: Element, y: Element) -> Element:
    return x.algebra.commutator(x, y)


def mul_operator(a: Element, side: str = "left") -> MulOperator:
    return a.algebra.mul_operator(a, side)
