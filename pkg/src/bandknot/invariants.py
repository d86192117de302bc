"""The invariant engine: Alexander, Conway, signature, determinant,
cyclic branched covers, root-of-unity comparison, and the slice
obstruction from factorization of the Alexander polynomial.

Everything is exact.  The Alexander polynomial of a knot is always
returned in the normalization with p(1/t) = p(t) and p(1) = 1; with a
Seifert matrix V this normalization falls out of det(u V - u^-1 V^T) on
the nose, since det(V - V^T) = 1 for any knot Seifert matrix.
"""

from __future__ import annotations

from dataclasses import dataclass

from .laurent import LaurentPolynomial
from .exactlinalg import (int_det, laurent_det, smith_normal_form,
                          signature_symmetric, sylvester_resultant)
from .seifert import SeifertMatrix


def _half_variable_det(matrix_v):
    """det(u V - u^-1 V^T) as a Laurent polynomial in u = t^(1/2)."""
    v = matrix_v.entries
    n = len(v)
    u = LaurentPolynomial.var("u")
    uinv = LaurentPolynomial.monomial(1, -1, "u")
    m = [[u * v[i][j] - uinv * v[j][i] for j in range(n)] for i in range(n)]
    return laurent_det(m, "u")


def alexander_from_seifert(vmat):
    """Alexander polynomial of a knot from its Seifert matrix.

    det(u V - u^-1 V^T) with u^2 = t is already symmetric with value 1 at
    t = 1; raises on matrices coming from multi-component links.
    """
    if vmat.boundary_components != 1:
        raise ValueError(
            "Seifert matrix comes from a %d-component link; use "
            "conway_from_seifert" % vmat.boundary_components)
    det = _half_variable_det(vmat)
    out = {}
    for e, c in det.coeffs.items():
        if e % 2:
            raise AssertionError("odd half-powers in a knot determinant")
        out[e // 2] = c
    delta = LaurentPolynomial(out, "t")
    if not delta.is_symmetric() or delta.evaluate_unit(1) != 1:
        raise AssertionError("Seifert determinant lost its normalization")
    return delta


def conway_from_seifert(vmat):
    """Conway polynomial in z = t^(1/2) - t^(-1/2).

    Defined for any connected Seifert surface; for knots, substituting
    z^2 = t - 2 + 1/t recovers the Alexander polynomial.
    """
    det = _half_variable_det(vmat)
    z_coeffs = {}
    remaining = det
    while not remaining.is_zero():
        d = remaining.max_exp()
        if d < 0 or -remaining.min_exp() > d:
            raise AssertionError("determinant is not a polynomial in z")
        c = remaining[d]
        z_coeffs[d] = c
        # subtract c * (u - 1/u)^d
        zd = (LaurentPolynomial.var("u")
              - LaurentPolynomial.monomial(1, -1, "u")) ** d
        remaining = remaining - zd * c
        if not remaining.is_zero() and remaining.max_exp() >= d:
            raise AssertionError("z-reduction failed to make progress")
    return LaurentPolynomial(z_coeffs, "z")


def alexander_to_conway(delta):
    """Rewrite a knot Alexander polynomial as a polynomial in z.

    Inverse direction of the z^2 = t - 2 + 1/t substitution; used by the
    compatibility tests.
    """
    u_poly = LaurentPolynomial(
        {2 * e: c for e, c in delta.coeffs.items()}, "u")
    z_coeffs = {}
    remaining = u_poly
    while not remaining.is_zero():
        d = remaining.max_exp()
        c = remaining[d]
        z_coeffs[d] = c
        zd = (LaurentPolynomial.var("u")
              - LaurentPolynomial.monomial(1, -1, "u")) ** d
        remaining = remaining - zd * c
    return LaurentPolynomial(z_coeffs, "z")


def signature(vmat):
    """Signature of V + V^T (exact congruence diagonalization)."""
    v = vmat.entries
    n = len(v)
    sym = [[v[i][j] + v[j][i] for j in range(n)] for i in range(n)]
    return signature_symmetric(sym)


def determinant(vmat):
    """|Delta(-1)|, the order of the homology of the double branched cover."""
    if vmat.boundary_components != 1:
        raise ValueError("determinant here is defined for knots")
    delta = alexander_from_seifert(vmat)
    return abs(delta.evaluate_unit(-1))


def roots_of_unity_equal(p, q, n):
    """True iff p and q agree at every n-th root of unity.

    A Laurent polynomial vanishes at all n-th roots of unity exactly when
    t^n - 1 divides its polynomial lift, i.e. when folding exponents
    modulo n kills every coefficient.
    """
    if n < 1:
        raise ValueError("n must be at least 1")
    folded = {}
    diff = p - q
    for e, c in diff.coeffs.items():
        k = e % n
        folded[k] = folded.get(k, 0) + c
    return all(c == 0 for c in folded.values())


@dataclass(frozen=True)
class BranchedCoverHomology:
    """Invariant factors of the first homology of the n-fold cyclic
    branched cover."""

    n: int
    invariant_factors: tuple
    order: int


def branched_cover(vmat, n):
    """H_1 of the n-fold cyclic branched cover from the Seifert matrix.

    Presented by the (n-1) x (n-1) block tridiagonal matrix with V + V^T
    on the diagonal and V / V^T off it; the resulting order is checked
    against |resultant(lift of Delta, (t^n - 1)/(t - 1))|, which equals
    the product of |Delta| over the nontrivial n-th roots of unity.
    """
    if n < 2:
        raise ValueError("cover degree must be at least 2")
    if vmat.boundary_components != 1:
        raise ValueError("branched covers here are defined for knots")
    v = vmat.entries
    g2 = len(v)
    size = (n - 1) * g2
    big = [[0] * size for _ in range(size)]
    for blk in range(n - 1):
        for i in range(g2):
            for j in range(g2):
                big[blk * g2 + i][blk * g2 + j] = v[i][j] + v[j][i]
                if blk + 1 < n - 1:
                    big[blk * g2 + i][(blk + 1) * g2 + j] = v[j][i]
                    big[(blk + 1) * g2 + i][blk * g2 + j] = v[i][j]
    factors = smith_normal_form(big)
    order = 1
    for d in factors:
        order *= d
    order = abs(order)

    # Independent order computation via the resultant.
    delta = alexander_from_seifert(vmat)
    if delta.is_zero():
        lift = {}
    else:
        lift = {e - delta.min_exp(): c for e, c in delta.coeffs.items()}
    cyclo = {e: 1 for e in range(n)}  # 1 + t + ... + t^(n-1)
    res = abs(sylvester_resultant(cyclo, lift))
    if res != order:
        raise AssertionError(
            "branched cover order %d disagrees with resultant %d "
            "(presentation convention bug)" % (order, res))
    nontrivial = tuple(d for d in factors if d != 1)
    return BranchedCoverHomology(n, nontrivial, order)


# ---------------------------------------------------------------------------
# Slice obstruction via factorization of the Alexander polynomial.


@dataclass(frozen=True)
class FoxMilnorVerdict:
    """Outcome of the factorization test on a knot Alexander polynomial.

    status is one of 'obstructed_negative_constant',
    'obstructed_no_factorization', or 'factorization_found'; in the last
    case ``factor`` holds F with F(t) F(1/t) equal to the input.
    """

    status: str
    factor: LaurentPolynomial = None

    @property
    def obstructed(self):
        return self.status != "factorization_found"


OBSTRUCTED_NEGATIVE_CONSTANT = "obstructed_negative_constant"
OBSTRUCTED_NO_FACTORIZATION = "obstructed_no_factorization"
FACTORIZATION_FOUND = "factorization_found"


def _square_partitions(total, length):
    """All integer vectors b of the given length with sum(b_i^2) = total."""
    from math import isqrt

    if length == 0:
        if total == 0:
            yield ()
        return
    bound = isqrt(total)
    for head in range(-bound, bound + 1):
        rest = total - head * head
        for tail in _square_partitions(rest, length - 1):
            yield (head,) + tail


def fox_milnor(delta):
    """Factorization test: can delta be written as F(t) F(1/t)?

    The input must be a normalized knot Alexander polynomial (symmetric,
    value 1 at t = 1).  If the constant term is not positive the verdict
    is immediate; otherwise the search runs over all integer coefficient
    vectors with sum of squares equal to the constant term, which is a
    complete bound since the constant term of F(t) F(1/t) is exactly that
    sum.
    """
    if not delta.is_symmetric() or delta.evaluate_unit(1) != 1:
        raise ValueError("input must be a symmetric polynomial with p(1) = 1")
    constant = delta[0]
    if constant <= 0:
        return FoxMilnorVerdict(OBSTRUCTED_NEGATIVE_CONSTANT)
    d = delta.span() // 2
    for coeffs in _square_partitions(constant, d + 1):
        if coeffs and (coeffs[0] == 0 or coeffs[-1] == 0) and d > 0:
            continue
        if coeffs and coeffs[0] < 0:
            continue  # F and -F give the same product
        f = LaurentPolynomial({i: c for i, c in enumerate(coeffs)})
        if f.is_zero():
            continue
        if f * f.reverse() == delta:
            return FoxMilnorVerdict(FACTORIZATION_FOUND, f)
    return FoxMilnorVerdict(OBSTRUCTED_NO_FACTORIZATION)


# ---------------------------------------------------------------------------
# Convenience wrappers working directly on diagrams.


def knot_invariants(diagram):
    """Bundle of the standard invariants of a knot diagram."""
    from .seifert import seifert_matrix, seifert_circles

    vmat = seifert_matrix(diagram)
    if vmat.boundary_components != 1:
        raise ValueError("knot_invariants expects a one-component diagram")
    delta = alexander_from_seifert(vmat)
    return {
        "alexander": delta,
        "conway": conway_from_seifert(vmat),
        "signature": signature(vmat),
        "determinant": abs(delta.evaluate_unit(-1)),
        "genus_bound": seifert_circles(diagram).genus,
    }
