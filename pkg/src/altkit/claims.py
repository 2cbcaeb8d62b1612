"""Built-in verification suite: every headline fact about the named
algebras, re-derived mechanically and reported claim by claim.

Each claim is a callable that raises AssertionError with a readable
message on failure.  ``run_claims`` executes them (optionally filtered by
group) and returns structured results; the CLI's ``verify-paper``
subcommand prints one PASS/FAIL line per claim.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, List, Optional

from . import catalog, identities, lie, structure, units
from .core import default_eps
from .identities import IdentityKind


@dataclass(frozen=True)
class Claim:
    id: str
    group: str
    description: str
    fn: Callable


@dataclass(frozen=True)
class ClaimResult:
    id: str
    description: str
    passed: bool
    detail: str = ""

    def to_dict(self) -> dict:
        return {
            "id": self.id,
            "description": self.description,
            "passed": self.passed,
            "detail": self.detail,
        }


@dataclass(frozen=True)
class SuiteOptions:
    eps: float
    seed: int
    samples: int


def _random_ak_coeffs(rng: random.Random, k: int) -> dict:
    return {
        f"a{i}{j}": Fraction(rng.randint(1, 9), rng.randint(1, 4))
        for i in range(1, k + 1)
        for j in (1, 2)
    }


def _ak_units(A):
    return [A.by_label("e1"), -A.by_label("e1")]


# -- ak family -----------------------------------------------------------------


def claim_ak_dimension(opt: SuiteOptions):
    rng = random.Random(opt.seed)
    for k in range(1, 6):
        A = catalog.ak(k, **_random_ak_coeffs(rng, k))
        assert A.dim == 2 * k + 2, f"k={k}: dim {A.dim} != {2 * k + 2}"


def claim_ak_partially_alternative(opt: SuiteOptions):
    rng = random.Random(opt.seed)
    for k in range(1, 6):
        for draw in range(3):
            A = catalog.ak(k, **_random_ak_coeffs(rng, k))
            for report in identities.is_partially_alternative(
                A, _ak_units(A), units_complete=True, eps=0.0
            ):
                assert report.holds, (
                    f"k={k} draw={draw}: {report.kind.value} fails at "
                    f"{report.witness}"
                )
                assert report.method == "exhaustive-basis"


def claim_ak_not_left_alternative(opt: SuiteOptions):
    rng = random.Random(opt.seed)
    for k in (1, 2):
        coeffs = _random_ak_coeffs(rng, k)
        A = catalog.ak(k, **coeffs)
        report = identities.check_identity(A, IdentityKind.LEFT_ALT, seed=opt.seed)
        assert not report.holds, f"k={k}: left alternativity unexpectedly holds"
        assert report.witness is not None and not report.witness.defect.is_zero(0.0)
        v11, v12 = A.by_label("v11"), A.by_label("v12")
        defect = A.associator(v11, v11, v12)
        assert defect == coeffs["a11"] * v12, (
            f"(v11, v11, v12) defect {defect} != a11*v12"
        )


def claim_ak_units_complete(opt: SuiteOptions):
    rng = random.Random(opt.seed)
    for k in (1, 2, 3):
        A = catalog.ak(k, **_random_ak_coeffs(rng, k))
        found = units.grid_unit_search(A, radius=3.0, step=Fraction(1, 4), tol=1e-9)
        expected = {A.by_label("e1"), -A.by_label("e1")}
        assert set(found) == expected, (
            f"k={k}: grid search found {sorted(str(q) for q in found)}"
        )


# -- fully plane-associative slice ----------------------------------------------


def _c_span(A):
    return (A.one(), A.basis(1))


def claim_slice_three_sided(opt: SuiteOptions):
    rng = random.Random(opt.seed)
    for _ in range(5):
        a = Fraction(rng.randint(-6, 6), rng.randint(1, 3))
        b = Fraction(rng.randint(1, 6), rng.randint(1, 3)) * rng.choice((-1, 1))
        A = catalog.tn_special_case(a, b)
        for kind in (IdentityKind.LEFT_C_ASSOC, IdentityKind.MIDDLE_C_ASSOC,
                     IdentityKind.RIGHT_C_ASSOC):
            report = identities.check_identity(A, kind, c_span=_c_span(A), eps=0.0)
            assert report.holds, f"(a={a}, b={b}): {kind.value} fails"


def claim_slice_not_alternative(opt: SuiteOptions):
    rng = random.Random(opt.seed)
    for _ in range(5):
        a = Fraction(rng.randint(-6, 6), rng.randint(1, 3))
        b = Fraction(rng.randint(1, 6), rng.randint(1, 3)) * rng.choice((-1, 1))
        A = catalog.tn_special_case(a, b)
        j = A.by_label("j")
        jj = A.multiply(j, j)
        defect = A.multiply(jj, j) - A.multiply(j, jj)
        assert not defect.is_zero(0.0), f"(a={a}, b={b}): (jj)j == j(jj)"
        assert defect == (2 * b) * A.by_label("k"), f"defect {defect} != 2b*k"


# -- a middle plane-associative point that is not partially alternative ---------


def claim_middle_counterexample(opt: SuiteOptions):
    A = catalog.tn(a=-1, g=1, h=1)
    middle = identities.check_identity(
        A, IdentityKind.MIDDLE_C_ASSOC, c_span=_c_span(A), eps=0.0
    )
    assert middle.holds, "middle plane-associativity fails"
    k = A.by_label("k")
    assert units.verify_unit(A, k, 0.0), "k*k != -1"
    report = identities.check_identity(
        A, IdentityKind.PARTIAL_RIGHT_ALT, units=[k], eps=0.0
    )
    assert not report.holds, "partial right alternativity unexpectedly holds"
    j = A.by_label("j")
    defect = A.associator(j, k, k)
    assert not defect.is_zero(0.0), "(j, k, k) has zero defect"


# -- unit loci -------------------------------------------------------------------


def _locus_claim(builder, kind, equation):
    def fn(opt: SuiteOptions):
        A = builder()
        locus = units.classify_locus_tn(A)
        assert locus.kind == kind, f"kind {locus.kind} != {kind}"
        got = {key: val for key, val in locus.equation.items()}
        want = {key: Fraction(val) for key, val in equation.items()}
        assert got == want, f"equation {got} != {want}"
        for q in locus.points:
            assert units.verify_unit(A, q, 0.0), f"stored point {q} is not a unit"
    return fn


def claim_newton_scalar_part(opt: SuiteOptions):
    # tolerances pinned: the claim is epsilon-robust by design
    for builder in (catalog.mplus, catalog.mzero, catalog.quaternions):
        A = builder()
        cloud = units.solve_units_sampled(A, seeds=opt.samples, tol=1e-9,
                                          seed=opt.seed)
        assert cloud.points, f"{A}: no converged units"
        worst = max(abs(float(q.coords[0])) for q in cloud.points)
        assert worst <= 1e-8, f"{A}: unit with scalar part {worst}"


def claim_sampled_on_quadric(opt: SuiteOptions):
    for builder in (catalog.mplus, catalog.mzero, catalog.quaternions):
        A = builder()
        locus = units.classify_locus_tn(A)
        cloud = units.solve_units_sampled(A, seeds=opt.samples, tol=1e-9,
                                          seed=opt.seed)
        for q in cloud.points:
            assert units.equation_satisfied(locus, q, 1e-8), (
                f"{A}: cloud point off the locus equation"
            )
        a = catalog.tn_params(A)["a"]
        for q in units.rational_locus_points(A, Fraction(a), 10, seed=opt.seed):
            assert units.verify_unit(A, q, 0.0)


# -- classification of middle plane-associative tables ---------------------------


def claim_classify_positive(opt: SuiteOptions):
    rng = random.Random(opt.seed)
    draws = [Fraction(4), Fraction(rng.randint(1, 9), rng.randint(1, 4)),
             Fraction(rng.randint(1, 9), rng.randint(1, 4))]
    for a in draws:
        out = structure.classify_middle_c({"a": a, "g": -a})
        assert out.target == "Mplus", f"a={a}: got {out.target} ({out.reason})"
        assert out.witness_verified, f"a={a}: witness failed the isomorphism check"


def claim_classify_zero(opt: SuiteOptions):
    out = structure.classify_middle_c({})
    assert out.target == "Mzero", f"got {out.target} ({out.reason})"
    assert out.witness_verified


def claim_classify_negative(opt: SuiteOptions):
    rng = random.Random(opt.seed + 1)
    draws = [Fraction(-1), -Fraction(rng.randint(1, 9), rng.randint(1, 4)),
             -Fraction(rng.randint(1, 9), rng.randint(1, 4))]
    for a in draws:
        out = structure.classify_middle_c({"a": a, "g": -a})
        assert out.target == "H", f"a={a}: got {out.target} ({out.reason})"
        assert out.witness_verified, f"a={a}: witness failed the isomorphism check"


def claim_targets_associative(opt: SuiteOptions):
    for builder in (catalog.mplus, catalog.mzero, catalog.quaternions):
        A = builder()
        report = identities.check_identity(A, IdentityKind.ASSOCIATIVE, eps=0.0)
        assert report.holds, f"{A}: associativity fails at {report.witness}"


# -- strict commutative case ------------------------------------------------------


def claim_strict_commutative_partial(opt: SuiteOptions):
    rng = random.Random(opt.seed)
    checked = 0
    attempts = 0
    while checked < 10 and attempts < 200:
        attempts += 1
        params = {
            "a": Fraction(rng.randint(-5, 5), rng.randint(1, 3)),
            "b": Fraction(rng.randint(-5, 5), rng.randint(1, 3)),
            "f": Fraction(rng.randint(-5, 5), rng.randint(1, 3)),
            "g": Fraction(rng.randint(-5, 5), rng.randint(1, 3)),
            "h": rng.choice((0, 1)),
        }
        A = catalog.tc(**params)
        strict = identities.is_strictly_middle(A, _c_span(A), eps=0.0)
        if not strict.strict:
            continue
        checked += 1
        comm = identities.check_identity(A, IdentityKind.COMMUTATIVE, eps=0.0)
        assert comm.holds, f"{params}: table is not commutative"
        i = A.basis(1)
        for report in identities.is_partially_alternative(A, [i, -i], eps=0.0):
            assert report.holds, (
                f"{params}: {report.kind.value} fails at {report.witness}"
            )
    assert checked == 10, f"only {checked} strict draws found"


# -- reflection split of the quaternions -------------------------------------------


def claim_reflection_split(opt: SuiteOptions):
    H = catalog.quaternions()
    refl = [[1, 0, 0, 0], [0, 1, 0, 0], [0, 0, -1, 0], [0, 0, 0, -1]]

    nucleus = structure.commutative_nucleus(H)
    assert len(nucleus) == 1, f"nucleus dimension {len(nucleus)} != 1"
    division = identities.is_division_sampled(H, samples=50, seed=opt.seed)
    assert division.division, f"zero divisor found: {division.witness}"

    dec = structure.reflection_decompose(H, refl)
    assert len(dec.B_basis) == 2 and len(dec.C_basis) == 2
    one, i, w, v = dec.tp_basis
    assert (H.multiply(i, i) + H.one()).is_zero(0.0), "i*i != -1"
    for name in ("BC_in_C", "CB_in_C", "CC_in_B",
                 "BC_equals_C", "CB_equals_C", "CC_equals_B"):
        assert dec.verdicts[name], f"product containment {name} fails"
    for y in dec.C_basis:
        anti = H.multiply(i, y) + H.multiply(y, i)
        assert anti.is_zero(0.0), f"i does not anticommute with {y}"

    expected = tuple(Fraction(x) for x in (-1, 0, 0, -1, 0, 1, -1, 0))
    assert dec.tp_params == expected, f"table scalars {dec.tp_params} != {expected}"

    # the extracted scalars rebuild a table isomorphic to the source along
    # the (1, i, w, v) basis matrix
    names = ("alpha1", "alpha2", "beta1", "beta2", "delta1", "delta2",
             "gamma1", "gamma2")
    T = catalog.tp(**dict(zip(names, dec.tp_params)))
    basis_matrix = [[e.coords[r] for e in dec.tp_basis] for r in range(4)]
    assert structure.is_isomorphism(T, H, basis_matrix, eps=0.0).ok, (
        "extracted table is not isomorphic to the source along (1, i, w, v)"
    )


# -- commutator Lie classification ---------------------------------------------


LIE_CASES = (
    ((0, 2), lie.TYPE_G1_G37),
    ((0, -3), lie.TYPE_G1_G37),
    ((0, 0), lie.TYPE_G1_G35),
    ((1, 0), lie.TYPE_G49_ZERO),
    ((-2, 0), lie.TYPE_G49_ZERO),
    ((3, -5), lie.TYPE_G1_G37),
    ((-1, 4), lie.TYPE_G1_G37),
)


def claim_lie_jacobi(opt: SuiteOptions):
    rng = random.Random(opt.seed)
    for _ in range(100):
        params = {name: Fraction(rng.randint(-6, 6), rng.randint(1, 4))
                  for name in ("alpha1", "alpha2", "beta1", "beta2",
                               "delta1", "delta2", "gamma1", "gamma2")}
        L = lie.lieify(catalog.tp(**params))
        ok, witness = lie.check_jacobi(L, tol=0.0)
        assert ok, f"{params}: Jacobi fails at {witness}"


def claim_lie_case_types(opt: SuiteOptions):
    for (alpha, beta), expected in LIE_CASES:
        out = lie.classify_tp_lie(alpha, beta)
        assert out.type_tag == expected, (
            f"({alpha}, {beta}): {out.type_tag} != {expected}"
        )


def claim_lie_case_witnesses(opt: SuiteOptions):
    bad = []
    for (alpha, beta), expected in LIE_CASES:
        out = lie.classify_tp_lie(alpha, beta)
        if not out.witness_verified:
            bad.append((alpha, beta))
    assert not bad, (
        f"witness fails the canonical-table check at {bad}: for beta < 0 the "
        "Killing form on span{i, v, w} is indefinite (sl(2, R) type), so no "
        "real basis change reaches the compact canonical table"
    )


def claim_lie_derived_series(opt: SuiteOptions):
    for (alpha, beta), _ in LIE_CASES:
        out = lie.classify_tp_lie(alpha, beta)
        if beta != 0:
            assert out.derived == (4, 3, 3), f"({alpha},{beta}): {out.derived}"
        elif alpha != 0:
            assert out.derived == (4, 3, 1, 0), f"({alpha},{beta}): {out.derived}"
        else:
            assert out.derived == (4, 2, 0), f"({alpha},{beta}): {out.derived}"


# -- property suites --------------------------------------------------------------


def claim_props_bilinearity(opt: SuiteOptions):
    rng = random.Random(opt.seed)
    A = catalog.quaternions()
    B = catalog.ak(2, a11=2, a12=Fraction(1, 2), a21=3, a22=1)
    for n in range(1000):
        alg = A if n % 2 == 0 else B
        al = identities.random_rational(rng)
        be = identities.random_rational(rng)
        x = identities.random_element(alg, rng)
        y = identities.random_element(alg, rng)
        z = identities.random_element(alg, rng)
        left = alg.multiply(al * x + be * y, z)
        assert left == al * alg.multiply(x, z) + be * alg.multiply(y, z)
        right = alg.multiply(z, al * x + be * y)
        assert right == al * alg.multiply(z, x) + be * alg.multiply(z, y)


def claim_props_implications(opt: SuiteOptions):
    cases = [
        (catalog.quaternions(), 1),
        (catalog.mplus(), 1),
        (catalog.mzero(), 1),
        (catalog.complex_numbers(), 1),
        (catalog.ak(1, a11=2, a12=3), None),
        (catalog.ak(2), None),
        (catalog.tn_special_case(1, 1), 1),
        (catalog.tc(a=1, h=1), 1),
        (catalog.tp(alpha1=-1, beta2=-1, delta2=1, gamma1=-1), 1),
        (catalog.tn(a=-1, g=1, h=1), 1),
    ]
    for A, unit_index in cases:
        q = A.basis(unit_index) if unit_index is not None else A.by_label("e1")
        unit_pts = [q, -q]
        assoc = identities.check_identity(A, IdentityKind.ASSOCIATIVE, eps=0.0)
        alts = {
            kind: identities.check_identity(A, kind, seed=opt.seed, samples=50)
            for kind in (IdentityKind.LEFT_ALT, IdentityKind.RIGHT_ALT,
                         IdentityKind.FLEXIBLE)
        }
        partials = {
            kind: identities.check_identity(A, kind, units=unit_pts)
            for kind in identities.PARTIAL_KINDS
        }
        if assoc.holds:
            assert all(r.holds for r in alts.values()), f"{A}: assoc but not alt"
        if alts[IdentityKind.LEFT_ALT].holds:
            assert partials[IdentityKind.PARTIAL_LEFT_ALT].holds, A
        if alts[IdentityKind.RIGHT_ALT].holds:
            assert partials[IdentityKind.PARTIAL_RIGHT_ALT].holds, A
        if alts[IdentityKind.FLEXIBLE].holds:
            assert partials[IdentityKind.PARTIAL_FLEXIBLE].holds, A


def claim_props_scale_invariance(opt: SuiteOptions):
    rng = random.Random(opt.seed)
    for _ in range(20):
        alpha = Fraction(rng.randint(-5, 5))
        beta = Fraction(rng.randint(-5, 5))
        lam = Fraction(rng.randint(1, 6), rng.randint(1, 3)) * rng.choice((-1, 1))
        first = lie.classify_tp_lie(alpha, beta).type_tag
        second = lie.classify_tp_lie(lam * lam * alpha, lam * lam * beta).type_tag
        assert first == second, f"({alpha},{beta}) vs lambda={lam}: {first} != {second}"


CLAIMS: List[Claim] = [
    Claim("ak.dimension", "ak",
          "family of planes over the complex line has dimension 2k+2",
          claim_ak_dimension),
    Claim("ak.partially-alternative", "ak",
          "partial left/flexible/right laws hold with unit set {e1, -e1}, "
          "k = 1..5, three random positive coefficient draws",
          claim_ak_partially_alternative),
    Claim("ak.not-left-alternative", "ak",
          "left alternativity fails; (v11, v11, v12) has defect a11*v12",
          claim_ak_not_left_alternative),
    Claim("ak.units-complete", "ak",
          "complete grid search over [-3,3]^n at step 1/4 finds no unit "
          "besides e1 and -e1 for k <= 3",
          claim_ak_units_complete),
    Claim("cassoc.slice-three-sided", "cassoc",
          "the c=d=e=h=0, f=b, g=-a slice satisfies left, middle and right "
          "plane-associativity exactly",
          claim_slice_three_sided),
    Claim("cassoc.slice-not-alternative", "cassoc",
          "on the same slice with b != 0, (jj)j - j(jj) = 2b*k != 0",
          claim_slice_not_alternative),
    Claim("middle.counterexample", "middle",
          "the a=-1, g=h=1 table is middle plane-associative yet fails "
          "partial right alternativity at the unit k",
          claim_middle_counterexample),
    Claim("locus.hyperboloid", "locus",
          "units of the j*j = k*k = 1 table form -x^2+y^2+z^2 = -1",
          _locus_claim(catalog.mplus, units.KIND_HYPERBOLOID,
                       {"x2": -1, "y2": 1, "z2": 1, "rhs": -1})),
    Claim("locus.planes", "locus",
          "units of the nilpotent-plane table form x^2 = 1",
          _locus_claim(catalog.mzero, units.KIND_PLANES,
                       {"x2": 1, "y2": 0, "z2": 0, "rhs": 1})),
    Claim("locus.sphere", "locus",
          "units of the quaternions form x^2+y^2+z^2 = 1",
          _locus_claim(catalog.quaternions, units.KIND_SPHERE,
                       {"x2": 1, "y2": 1, "z2": 1, "rhs": 1})),
    Claim("locus.newton-scalar-part", "locus",
          "every Newton-found unit has scalar coordinate below 1e-8",
          claim_newton_scalar_part),
    Claim("locus.sampled-on-quadric", "locus",
          "Newton clouds satisfy the exact locus equation and exact locus "
          "points verify as units",
          claim_sampled_on_quadric),
    Claim("classify.positive", "classify",
          "a > 0 with derived constants classifies as Mplus with a verified "
          "isomorphism witness",
          claim_classify_positive),
    Claim("classify.zero", "classify",
          "the all-zero table classifies as Mzero",
          claim_classify_zero),
    Claim("classify.negative", "classify",
          "a < 0 with derived constants classifies as the quaternions",
          claim_classify_negative),
    Claim("classify.targets-associative", "classify",
          "all three classification targets are associative",
          claim_targets_associative),
    Claim("strict.commutative-partial-alternative", "strict",
          "ten strictly-middle commutative draws pass the partial laws with "
          "unit set {i, -i}",
          claim_strict_commutative_partial),
    Claim("reflection.split", "reflection",
          "quaternions split under diag(1,1,-1,-1): nucleus is the scalars, "
          "plane dimensions 2/2, anticommutation, product containments, and "
          "the extracted canonical-table scalars rebuild the algebra",
          claim_reflection_split),
    Claim("lie.jacobi-random", "lie",
          "the commutator bracket of 100 random reflection tables satisfies "
          "the Jacobi identity exactly",
          claim_lie_jacobi),
    Claim("lie.case-types", "lie",
          "the (alpha, beta) case split assigns the expected type tags",
          claim_lie_case_types),
    Claim("lie.case-witnesses", "lie",
          "every emitted change-of-basis witness reproduces its canonical "
          "table",
          claim_lie_case_witnesses),
    Claim("lie.derived-series", "lie",
          "derived series dimensions are (4,3,3) for beta != 0 and "
          "(4,3,1,0) for alpha != 0, beta = 0",
          claim_lie_derived_series),
    Claim("props.bilinearity", "props",
          "1000 exact random samples of bilinearity of the product",
          claim_props_bilinearity),
    Claim("props.implications", "props",
          "associative implies alternative implies partially alternative "
          "across the whole catalog",
          claim_props_implications),
    Claim("props.scale-invariance", "props",
          "the Lie type is invariant under (alpha, beta) -> "
          "(l^2 alpha, l^2 beta)",
          claim_props_scale_invariance),
]


def run_claims(
    only: Optional[str] = None,
    eps: Optional[float] = None,
    seed: int = 0,
    samples: int = 200,
) -> List[ClaimResult]:
    opt = SuiteOptions(eps=default_eps() if eps is None else eps,
                       seed=seed, samples=samples)
    results = []
    for claim in CLAIMS:
        if only and claim.group != only and not claim.id.startswith(only):
            continue
        try:
            claim.fn(opt)
        except AssertionError as exc:
            results.append(ClaimResult(claim.id, claim.description, False, str(exc)))
        else:
            results.append(ClaimResult(claim.id, claim.description, True))
    return results
