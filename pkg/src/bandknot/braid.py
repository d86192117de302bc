"""Braid words and the reduced Burau route to the Alexander polynomial.

The Burau determinant gives an Alexander polynomial computation that shares
no code with the Seifert-surface route, so the two serve as independent
cross-checks of one another (and of every sign convention in between).
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .laurent import LaurentPolynomial


@dataclass(frozen=True)
class BraidWord:
    """A word in the braid group: letter i is sigma_i, -i its inverse."""

    strand_count: int
    letters: tuple = field(default_factory=tuple)

    def __post_init__(self):
        object.__setattr__(self, "letters", tuple(self.letters))
        if self.strand_count < 1:
            raise ValueError("strand count must be positive")
        for a in self.letters:
            if a == 0 or abs(a) >= self.strand_count:
                raise ValueError(
                    "letter %d out of range for %d strands"
                    % (a, self.strand_count))

    def permutation(self):
        """The underlying permutation as a list p with p[i] = image of i."""
        perm = list(range(self.strand_count))
        for a in self.letters:
            i = abs(a) - 1
            perm[i], perm[i + 1] = perm[i + 1], perm[i]
        return perm

    def cycle_count(self):
        perm = self.permutation()
        seen = [False] * len(perm)
        cycles = 0
        for i in range(len(perm)):
            if not seen[i]:
                cycles += 1
                j = i
                while not seen[j]:
                    seen[j] = True
                    j = perm[j]
        return cycles

    def is_knot(self):
        return self.cycle_count() == 1

    def writhe(self):
        return sum(1 if a > 0 else -1 for a in self.letters)

    def mirror(self):
        return BraidWord(self.strand_count, tuple(-a for a in self.letters))

    def __str__(self):
        return "BR(%d; %s)" % (self.strand_count,
                               " ".join(str(a) for a in self.letters))


def parse_braid(text):
    """Parse braid notation ``BR(n; w1 w2 ...)``."""
    text = text.strip()
    if not (text.startswith("BR(") and text.endswith(")")):
        raise ValueError("braid notation must look like 'BR(n; 1 -2 1)'")
    body = text[3:-1]
    if ";" not in body:
        raise ValueError("missing ';' in braid notation")
    head, _, tail = body.partition(";")
    try:
        n = int(head.strip())
        letters = tuple(int(w) for w in tail.replace(",", " ").split())
    except ValueError as exc:
        raise ValueError("bad integer in braid notation: %s" % exc) from None
    return BraidWord(n, letters)


def _identity(n, variable="t"):
    one = LaurentPolynomial.one(variable)
    zero = LaurentPolynomial.zero(variable)
    return [[one if i == j else zero for j in range(n)] for i in range(n)]


def _mat_mul(a, b):
    n = len(a)
    zero = LaurentPolynomial.zero("t")
    out = [[zero for _ in range(n)] for _ in range(n)]
    for i in range(n):
        row = a[i]
        for k in range(n):
            entry = row[k]
            if entry.is_zero():
                continue
            brow = b[k]
            orow = out[i]
            for j in range(n):
                if not brow[j].is_zero():
                    orow[j] = orow[j] + entry * brow[j]
    return out


def reduced_burau(letter, strands):
    """Reduced Burau matrix of a single braid letter on ``strands`` strands.

    Size (s-1) x (s-1); only the column of the acted generator differs from
    the identity.
    """
    n = strands - 1
    m = _identity(n)
    t = LaurentPolynomial.var("t")
    tinv = LaurentPolynomial.monomial(1, -1)
    k = abs(letter) - 1
    if letter > 0:
        col = {k: -t}
        if k > 0:
            col[k - 1] = t
        if k < n - 1:
            col[k + 1] = LaurentPolynomial.one()
    else:
        col = {k: -tinv}
        if k > 0:
            col[k - 1] = LaurentPolynomial.one()
        if k < n - 1:
            col[k + 1] = tinv
    for i, val in col.items():
        m[i][k] = val
    return m


def burau_matrix(braid):
    """Product of reduced Burau matrices over the word."""
    m = _identity(braid.strand_count - 1)
    for a in braid.letters:
        m = _mat_mul(m, reduced_burau(a, braid.strand_count))
    return m


def normalize_alexander(p):
    """Symmetrize a raw Alexander polynomial and fix the sign so p(1) = 1."""
    if p.is_zero():
        raise ValueError("Alexander polynomial of a knot cannot be zero")
    if p.span() % 2:
        raise ValueError("polynomial span is odd; not a knot polynomial")
    centered = p.shift(-(p.min_exp() + p.max_exp()) // 2)
    if not centered.is_symmetric():
        raise ValueError("polynomial cannot be symmetrized: %s" % p)
    at_one = centered.evaluate_unit(1)
    if at_one == 1:
        return centered
    if at_one == -1:
        return -centered
    raise ValueError("polynomial has |p(1)| != 1; not a knot polynomial")


def alexander_burau(braid):
    """Alexander polynomial of a knot braid closure via reduced Burau.

    Computes det(I - Burau(word)), multiplies by (1 - t), divides exactly by
    (1 - t**s), and normalizes to the symmetric representative with value 1
    at t = 1.
    """
    if not braid.is_knot():
        raise ValueError("braid closure is not a knot "
                         "(%d components)" % braid.cycle_count())
    from .exactlinalg import laurent_det

    s = braid.strand_count
    if s == 1:
        return LaurentPolynomial.one()
    m = burau_matrix(braid)
    n = len(m)
    delta = [[(LaurentPolynomial.one() if i == j else
               LaurentPolynomial.zero()) - m[i][j]
              for j in range(n)] for i in range(n)]
    det = laurent_det(delta)
    one_minus_t = LaurentPolynomial({0: 1, 1: -1})
    one_minus_ts = LaurentPolynomial({0: 1, s: -1})
    raw = (det * one_minus_t).exact_div(one_minus_ts)
    return normalize_alexander(raw)
