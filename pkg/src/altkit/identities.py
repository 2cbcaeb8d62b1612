"""Identity checking: alternativity, flexibility, their partial forms
restricted to imaginary units, plane-associativity with respect to a
distinguished 2-dimensional subalgebra, and the sampled division test.

Verdict strength is explicit in every report.  Identities that are
multilinear in each slot are decided exhaustively on basis tuples, which
is a proof.  Identities quadratic in one slot (the alternative laws) are
checked on basis tuples plus seeded random samples; the partial forms are
exact over a supplied finite unit set and sampled otherwise.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import List, Optional, Tuple, Union

from . import linalg
from .core import (
    Algebra,
    ContextError,
    Element,
    NotApplicableError,
)

DEFAULT_SAMPLES = 200


class IdentityKind(str, Enum):
    LEFT_ALT = "left-alt"
    RIGHT_ALT = "right-alt"
    FLEXIBLE = "flexible"
    PARTIAL_LEFT_ALT = "partial-left-alt"
    PARTIAL_RIGHT_ALT = "partial-right-alt"
    PARTIAL_FLEXIBLE = "partial-flexible"
    LEFT_C_ASSOC = "left-c-assoc"
    MIDDLE_C_ASSOC = "middle-c-assoc"
    RIGHT_C_ASSOC = "right-c-assoc"
    COMMUTATIVE = "commutative"
    ASSOCIATIVE = "associative"


PARTIAL_KINDS = (
    IdentityKind.PARTIAL_LEFT_ALT,
    IdentityKind.PARTIAL_RIGHT_ALT,
    IdentityKind.PARTIAL_FLEXIBLE,
)
C_ASSOC_KINDS = (
    IdentityKind.LEFT_C_ASSOC,
    IdentityKind.MIDDLE_C_ASSOC,
    IdentityKind.RIGHT_C_ASSOC,
)


@dataclass(frozen=True)
class Witness:
    x: Element
    y: Element
    z: Optional[Element]
    defect: Element

    def to_dict(self) -> dict:
        return {
            "x": self.x.json_coords(),
            "y": self.y.json_coords(),
            "z": None if self.z is None else self.z.json_coords(),
            "defect": self.defect.json_coords(),
        }


@dataclass(frozen=True)
class IdentityReport:
    kind: IdentityKind
    holds: bool
    witness: Optional[Witness]
    method: str

    def to_dict(self) -> dict:
        return {
            "kind": self.kind.value,
            "holds": self.holds,
            "witness": None if self.witness is None else self.witness.to_dict(),
            "method": self.method,
        }


def random_rational(rng: random.Random, span: int = 6, den: int = 4) -> Fraction:
    return Fraction(rng.randint(-span, span), rng.randint(1, den))


def random_element(A: Algebra, rng: random.Random, span: int = 6) -> Element:
    if A.scalar_mode == "float":
        return A.element([rng.uniform(-span, span) for _ in range(A.dim)])
    return A.element([random_rational(rng, span) for _ in range(A.dim)])


def _scan(A: Algebra, triples, eps: float) -> Optional[Witness]:
    """First triple with a nonzero associator, or None."""
    for x, y, z in triples:
        defect = A.associator(x, y, z)
        if not defect.is_zero(eps):
            return Witness(x, y, z, defect)
    return None


def _resolve_units(A: Algebra, units, eps: float) -> Tuple[List[Element], bool]:
    """Accept a list of Elements or a UnitLocus; return (points, complete)."""
    complete = False
    if units is None:
        raise ContextError("partial identities need a nonempty set of imaginary units")
    points = units
    if hasattr(units, "points") and hasattr(units, "kind"):  # UnitLocus
        points = list(units.points)
        complete = getattr(units, "complete", False)
    points = list(points)
    if not points:
        raise ContextError("partial identities need a nonempty set of imaginary units")
    one = A.one()
    for q in points:
        defect = A.multiply(q, q) + one
        if not defect.is_zero(eps):
            raise ContextError(f"supplied point {q!r} is not an imaginary unit")
    return points, complete


def _resolve_c_span(A: Algebra, c_span, eps: float) -> Tuple[Element, Element]:
    """Validate an ordered pair spanning a 2-dim subalgebra that contains 1."""
    if c_span is None:
        raise ContextError(
            "plane-associativity checks need an ordered pair spanning the plane"
        )
    c1, c2 = c_span
    A._own(c1, c2)
    rows = [list(c1.coords), list(c2.coords)]
    if linalg.rank(rows, eps if A.scalar_mode == "float" else 0.0) != 2:
        raise ContextError("the two span elements are linearly dependent")
    if A.unit is None or not linalg.in_span(rows, list(A.unit), eps):
        raise ContextError("the distinguished plane must contain the unit element")
    for p, q in itertools.product((c1, c2), repeat=2):
        prod = A.multiply(p, q)
        if not linalg.in_span(rows, list(prod.coords), eps):
            raise ContextError("the distinguished plane is not closed under products")
    return c1, c2


def check_identity(
    A: Algebra,
    kind: Union[IdentityKind, str],
    units=None,
    units_complete: Optional[bool] = None,
    c_span: Optional[Tuple[Element, Element]] = None,
    eps: Optional[float] = None,
    samples: int = DEFAULT_SAMPLES,
    seed: int = 0,
) -> IdentityReport:
    """Check one named identity on an algebra.

    ``units`` feeds the partial kinds (a list of Elements or a UnitLocus);
    ``c_span`` feeds the plane-associativity kinds.  The report's ``method``
    records whether the verdict is a basis-exhaustion proof or sampled.
    """
    kind = IdentityKind(kind)
    eps = A.eps if eps is None else eps
    basis = A.basis_elements()
    rng = random.Random(seed)

    if kind == IdentityKind.ASSOCIATIVE:
        witness = _scan(A, itertools.product(basis, repeat=3), eps)
        return IdentityReport(kind, witness is None, witness, "exhaustive-basis")

    if kind == IdentityKind.COMMUTATIVE:
        for x, y in itertools.combinations(basis, 2):
            defect = A.commutator(x, y)
            if not defect.is_zero(eps):
                return IdentityReport(
                    kind, False, Witness(x, y, None, defect), "exhaustive-basis"
                )
        return IdentityReport(kind, True, None, "exhaustive-basis")

    if kind in C_ASSOC_KINDS:
        c1, c2 = _resolve_c_span(A, c_span, eps)
        if kind == IdentityKind.LEFT_C_ASSOC:
            triples = ((z, x, y) for z in (c1, c2) for x in basis for y in basis)
        elif kind == IdentityKind.MIDDLE_C_ASSOC:
            triples = ((x, z, y) for z in (c1, c2) for x in basis for y in basis)
        else:
            triples = ((x, y, z) for z in (c1, c2) for x in basis for y in basis)
        witness = _scan(A, triples, eps)
        return IdentityReport(kind, witness is None, witness, "exhaustive-basis")

    if kind in (IdentityKind.LEFT_ALT, IdentityKind.RIGHT_ALT, IdentityKind.FLEXIBLE):
        def shape(x, y):
            if kind == IdentityKind.LEFT_ALT:
                return (x, x, y)
            if kind == IdentityKind.RIGHT_ALT:
                return (y, x, x)
            return (x, y, x)

        pairs = itertools.chain(
            itertools.product(basis, repeat=2),
            (
                (random_element(A, rng), random_element(A, rng))
                for _ in range(samples)
            ),
        )
        witness = _scan(A, (shape(x, y) for x, y in pairs), eps)
        return IdentityReport(kind, witness is None, witness, f"sampled({samples})")

    if kind in PARTIAL_KINDS:
        points, complete = _resolve_units(A, units, eps)
        if units_complete is not None:
            complete = units_complete

        def shape(q, y):
            if kind == IdentityKind.PARTIAL_LEFT_ALT:
                return (q, q, y)
            if kind == IdentityKind.PARTIAL_RIGHT_ALT:
                return (y, q, q)
            return (q, y, q)

        witness = _scan(A, (shape(q, y) for q in points for y in basis), eps)
        method = "exhaustive-basis" if complete else f"sampled({len(points)})"
        return IdentityReport(kind, witness is None, witness, method)

    raise ContextError(f"unhandled identity kind {kind}")  # pragma: no cover


def is_partially_alternative(
    A: Algebra, units, units_complete: Optional[bool] = None,
    eps: Optional[float] = None,
) -> List[IdentityReport]:
    """The three partial reports (left, flexible, right), in that order."""
    return [
        check_identity(A, kind, units=units, units_complete=units_complete, eps=eps)
        for kind in (
            IdentityKind.PARTIAL_LEFT_ALT,
            IdentityKind.PARTIAL_FLEXIBLE,
            IdentityKind.PARTIAL_RIGHT_ALT,
        )
    ]


@dataclass(frozen=True)
class StrictMiddleReport:
    strict: bool
    witness: Optional[Witness]
    left_holds: bool
    right_holds: bool

    def to_dict(self) -> dict:
        return {
            "strict": self.strict,
            "witness": None if self.witness is None else self.witness.to_dict(),
            "left_holds": self.left_holds,
            "right_holds": self.right_holds,
        }


def is_strictly_middle(
    A: Algebra,
    c_span: Optional[Tuple[Element, Element]] = None,
    eps: Optional[float] = None,
) -> StrictMiddleReport:
    """Does the middle plane-associativity hold while left or right fails?

    Raises NotApplicableError when the middle condition itself fails.
    """
    if c_span is None and A.dim >= 2 and A.unit is not None:
        c_span = (A.one(), A.basis(1))
    middle = check_identity(A, IdentityKind.MIDDLE_C_ASSOC, c_span=c_span, eps=eps)
    if not middle.holds:
        raise NotApplicableError(
            "middle plane-associativity fails; strictness does not apply"
        )
    left = check_identity(A, IdentityKind.LEFT_C_ASSOC, c_span=c_span, eps=eps)
    right = check_identity(A, IdentityKind.RIGHT_C_ASSOC, c_span=c_span, eps=eps)
    witness = left.witness if not left.holds else right.witness
    return StrictMiddleReport(
        strict=not (left.holds and right.holds),
        witness=witness,
        left_holds=left.holds,
        right_holds=right.holds,
    )


@dataclass(frozen=True)
class DivisionReport:
    division: bool
    witness: Optional[Element]
    method: str

    def to_dict(self) -> dict:
        return {
            "division": self.division,
            "witness": None if self.witness is None else self.witness.json_coords(),
            "method": self.method,
        }


def is_division_sampled(
    A: Algebra,
    samples: int = DEFAULT_SAMPLES,
    seed: int = 0,
    eps: Optional[float] = None,
) -> DivisionReport:
    """Search for a nonzero element with a singular multiplication operator.

    Candidates are every basis vector, every pairwise basis sum, and
    ``samples`` seeded random elements.  A True verdict means only that no
    zero divisor was found among those candidates - it is not a proof.
    """
    eps = A.eps if eps is None else eps
    rng = random.Random(seed)
    basis = A.basis_elements()
    candidates = itertools.chain(
        basis,
        (basis[i] + basis[j] for i in range(A.dim) for j in range(A.dim) if i < j),
        (random_element(A, rng) for _ in range(samples)),
    )
    checked = 0
    for a in candidates:
        if a.is_zero(eps):
            continue
        checked += 1
        for side in ("left", "right"):
            if A.mul_operator(a, side).is_singular(eps):
                return DivisionReport(False, a, f"sampled({checked})")
    return DivisionReport(True, None, f"sampled({checked})")
